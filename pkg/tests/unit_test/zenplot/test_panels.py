import numpy as np
import pytest

from zenscope.margins.envelope import qq_envelope
from zenscope.utils.exceptions import RenderError
from zenscope.zenplot.panels import PanelSpec, acf_panel, qq_panel, scatter_panel


def test_scatter():
    spec = scatter_panel([0.1, 0.2], [0.3, 0.4])
    assert spec.kind == "scatter"
    assert spec.data["xlim"] == (0.0, 1.0)
    free = scatter_panel([1.0, 3.0], [2.0, 2.0], xlim=None, ylim=None)
    assert free.data["xlim"] == (1.0, 3.0)
    assert free.data["ylim"] == (1.5, 2.5)
    with pytest.raises(RenderError):
        scatter_panel([0.1, 0.2], [0.3])


def test_acf():
    spec = acf_panel(np.array([0.2, -0.1, 0.05]), 0.1)
    assert spec.data["values"].size == 3
    with pytest.raises(RenderError):
        acf_panel(np.array([]), 0.1)


def test_qq_sorted(rng):
    sample = rng.normal(size=30)
    spec = qq_panel(sample, 5.0, qq_envelope(5.0, 30, nsim=100))
    np.testing.assert_array_equal(spec.data["sample"], np.sort(sample))
    with pytest.raises(RenderError):
        qq_panel(sample, 5.0, qq_envelope(5.0, 20, nsim=100))


def test_unknown_kind():
    with pytest.raises(RenderError):
        PanelSpec("pie")
