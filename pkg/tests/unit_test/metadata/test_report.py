from zenscope.metadata.report import BaseReport


def test_base_report():
    report = BaseReport(0.5)
    assert report.to_dict() == {"duration": 0.5}
    assert repr(report) == "BaseReport({'duration': 0.5})"
