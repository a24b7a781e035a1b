import pytest

from zenscope.metadata.blob import Blob
from zenscope.stores.local import LocalOutputStore
from zenscope.utils.exceptions import StoreError


@pytest.fixture
def store(tmp_path):
    return LocalOutputStore(tmp_path / "out")


class TestLocalOutputStore:
    def test_not_initialized(self, store):
        with pytest.raises(StoreError):
            store.persist_text("x", "a.txt")

    def test_init_run(self, store):
        store.init_run()
        assert (store.path / "artifacts").is_dir()
        assert (store.path / "metadata").is_dir()

    def test_log_metadata(self, store):
        store.init_run()
        pth = store.log_metadata({"a": 1}, "meta.json")
        assert pth.parent.name == "metadata"
        with pytest.raises(StoreError):
            store.log_metadata([1], "meta.json")

    def test_persist_blob(self, store):
        store.init_run()
        store.persist_blob(Blob("test", 0, "abc", {"a": 1}), "a.json")
        assert store.exists("a.json")
        assert store.read_blob("a.json") == {"a": 1}

    def test_missing_artifact(self, store):
        store.init_run()
        assert not store.exists("nothing.json")
        with pytest.raises(StoreError, match="nothing.json"):
            store.artifact("nothing.json")
