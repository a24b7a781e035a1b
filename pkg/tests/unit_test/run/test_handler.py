import pytest

from zenscope.run.config import ExecConfig
from zenscope.run.handler import TaskHandler
from zenscope.run.utils import exec_decorator


@exec_decorator
def _square(offset, item):
    if item == 3:
        raise ValueError("three is not allowed")
    return item * item + offset


def _chunk(payload, chunk):
    return [_square(payload, i) for i in chunk]


class TestTaskHandler:
    @pytest.mark.parametrize(
        "config",
        [
            ExecConfig(),
            ExecConfig(threads=3, executor="thread"),
            ExecConfig(threads=2, executor="process", chunks_per_worker=2),
        ],
    )
    def test_run_keeps_order(self, config):
        handler = TaskHandler(config)
        results = handler.run(_chunk, 1, range(10))
        assert len(results) == 10
        assert [r.artifact for r in results if r.ok] == [i * i + 1 for i in range(10) if i != 3]
        assert [r.reason for r in handler.failures()] == ["three is not allowed"]

    def test_chunk(self):
        handler = TaskHandler(ExecConfig(threads=2, chunks_per_worker=2))
        chunks = handler._chunk(list(range(10)))
        assert chunks == [[0, 1, 2], [3, 4, 5], [6, 7], [8, 9]]
        assert handler._chunk([]) == []

    def test_empty(self):
        assert TaskHandler(ExecConfig(threads=4)).run(_chunk, 0, []) == []
