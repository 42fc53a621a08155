import math

import pytest

import fractalis as fx


def test_transforms():
    assert fx.returns([100.0, 110.0, 99.0]) == pytest.approx([1.1, 0.9])
    assert fx.diff_within([1.0, 4.0, 9.0]) == [3.0, 5.0]
    z = fx.normalize([0.0, 2.0])
    assert z == pytest.approx([-1 / math.sqrt(2), 1 / math.sqrt(2)])
    assert fx.summarize([1.0, 2.0, 3.0])["mean"] == 2.0


def test_errors_map_to_value_error():
    with pytest.raises(ValueError):
        fx.returns([1.0, 0.0, 2.0])
    with pytest.raises(fx.FractalisError):
        fx.normalize([3.0, 3.0])


def test_read_ohlc():
    text = "Date,Open,Close\n2014-09-25,2,2.5\n2014-09-24,1,1.5\n"
    t = fx.read_ohlc(text)
    assert t["date"] == ["2014-09-24", "2014-09-25"]
    assert t["close"] == [1.5, 2.5]


def test_kde_and_acf():
    grid, dens, h = fx.kde([-1.0, 1.0], bandwidth=1.0, points=101)
    assert h == 1.0
    step = grid[1] - grid[0]
    assert sum(dens) * step == pytest.approx(1.0, abs=0.01)
    rho = fx.acf(fx.white_noise(1000, 5), 10)
    assert rho[0] == 1.0
    assert len(rho) == 11


def test_hurst_of_noise():
    est = fx.hurst(fx.white_noise(8192, 2015), [8, 16, 32, 64, 128, 256, 512, 1024])
    assert 0.45 <= est["H"] <= 0.60


def test_stable():
    p = fx.StableParams(alpha=1.0, beta=0.0)
    assert fx.stable_pdf(p, 0.0) == pytest.approx(1 / math.pi, abs=1e-12)
    assert fx.stable_cdf(p, 1.0) == pytest.approx(0.75, abs=1e-10)
    r = fx.StableParams(1.587, -0.014, 0.5148293113, -0.0006526977)
    assert fx.stable_tail(r, 1.0, printed=True) == pytest.approx(0.7354585, rel=1e-6)
    q = fx.StableParams(1.5, 0.3, 2.0, 0.1, fx.Parameterization.S1)
    back = fx.to_s1(fx.to_s0(q))
    assert back.delta == pytest.approx(0.1)


def test_fit_round_trip():
    p = fx.StableParams(1.587, -0.014, 0.5, 0.0)
    fit = fx.fit_stable(fx.sample_stable(p, 50000, 7))
    assert abs(fit["s0"].alpha - 1.587) <= 0.05


def test_walk_is_seeded():
    noise = fx.StableParams(1.548, -0.041, 0.01, 0.0)
    a = fx.stable_walk(noise, 100, seed=3)
    assert a == fx.stable_walk(noise, 100, seed=3)
    assert len(a) == 101
    assert a[0] == 1.0
