import numpy as np
import pytest

from zenscope.margins.envelope import qq_envelope, qq_points
from zenscope.utils.exceptions import FitError


def test_qq_points():
    theo, ordered = qq_points(np.array([3.0, -1.0, 2.0, 0.0]), 5.0)
    np.testing.assert_array_equal(ordered, [-1.0, 0.0, 2.0, 3.0])
    # plotting positions are symmetric around one half
    np.testing.assert_allclose(theo, -theo[::-1], atol=1e-12)
    assert np.all(np.diff(theo) > 0)


class TestEnvelope:
    def test_bands(self):
        env = qq_envelope(5.0, 50, nsim=200, seed=1)
        assert env.levels == (0.9, 0.95, 0.99)
        bands = env.bands()
        assert [b[0] for b in bands] == ["range", "0.99", "0.95", "0.9"]
        for (_, lo_out, hi_out), (_, lo_in, hi_in) in zip(bands, bands[1:]):
            assert np.all(lo_out <= lo_in + 1e-12)
            assert np.all(hi_in <= hi_out + 1e-12)
        assert np.all(np.diff(env.upper[0.9]) >= 0)

    def test_seeded(self):
        a = qq_envelope(4.0, 20, nsim=100, seed=3)
        b = qq_envelope(4.0, 20, nsim=100, seed=3)
        np.testing.assert_array_equal(a.lower[0.95], b.lower[0.95])

    @pytest.mark.parametrize("kwargs", [{"nsim": 99}, {"nu_hat": 2.0}, {"n": 0}, {"levels": (1.0,)}])
    def test_invalid(self, kwargs):
        args = {"nu_hat": 5.0, "n": 10, "nsim": 100}
        args.update(kwargs)
        with pytest.raises(FitError):
            qq_envelope(**args)
