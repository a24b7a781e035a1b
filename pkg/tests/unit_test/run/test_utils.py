from zenscope.run.utils import ExecutionStatus, Result, exec_decorator


@exec_decorator
def _ok(x):
    return x + 1


@exec_decorator
def _fail():
    raise RuntimeError("boom")


def test_exec_decorator_ok():
    res = _ok(1)
    assert isinstance(res, Result)
    assert res.ok
    assert res.artifact == 2
    assert res.reason is None
    assert res.duration >= 0


def test_exec_decorator_error():
    res = _fail()
    assert not res.ok
    assert res.status == ExecutionStatus.ERROR.value
    assert res.reason == "boom"
    assert res.artifact is None


def test_result_to_dict():
    assert set(Result().to_dict()) == {"status", "duration", "errors", "artifact"}
