import math
from fractions import Fraction

import pytest

import jackpaths._kernels as kernels
from jackpaths.diagrams import AnisotropicDiagram, observable_family, transition_measure
from jackpaths.ensembles import JackPlancherel
from jackpaths.exactnum import sqrt_ext
from jackpaths.partitions import Partition, partitions_of
from jackpaths.rng import SplitMix64, mix64, stream_word
from jackpaths.sampler import (exact_sample, growth_distribution,
                               growth_sample, growth_transitions, mean_profile,
                               run_sampler, scaled_profile, validate_growth)


def test_rng_is_counter_based_and_stable():
    rng = SplitMix64(42)
    seq = [rng.next_u64() for _ in range(4)]
    assert seq == [stream_word(42, i) for i in range(4)]
    assert all(0 <= w < 2 ** 64 for w in seq)
    assert mix64(1) != mix64(2)
    # substreams differ from the parent and from each other
    subs = {SplitMix64(42).substream(i).next_u64() for i in range(8)}
    assert len(subs) == 8
    u = SplitMix64(7).next_float()
    assert 0.0 <= u < 1.0


def test_growth_transitions_match_fixed_size_law():
    alpha = Fraction(5, 7)
    one = growth_transitions(Partition([1]), alpha)
    probs = dict(one)
    assert probs[Partition([2])] == 1 / (1 + alpha)
    assert probs[Partition([1, 1])] == alpha / (1 + alpha)
    dist = growth_distribution(alpha, 4)
    assert dist == JackPlancherel(alpha, 4).masses()


def test_validate_growth_contract():
    assert validate_growth()


def test_growth_sample_sizes_and_determinism():
    lam = growth_sample(Fraction(1, 2), 40, SplitMix64(3))
    assert lam.size() == 40
    again = growth_sample(Fraction(1, 2), 40, SplitMix64(3))
    assert lam == again
    assert growth_sample(Fraction(1, 2), 1, SplitMix64(0)) == Partition([1])


def test_growth_backends_agree_statistically():
    alpha, d, n = Fraction(1, 2), 50, 60
    means = {}
    for backend in ("numpy",) + (("numba",) if kernels.HAVE_NUMBA else ()):
        root = SplitMix64(11)
        draws = [growth_sample(alpha, d, root.substream(i), backend=backend)
                 for i in range(n)]
        means[backend] = sum(l.parts[0] for l in draws) / n
    if len(means) == 2:
        assert abs(means["numba"] - means["numpy"]) < 4.0


def test_numpy_fallback_env_flag(monkeypatch):
    monkeypatch.setenv("JACKPATHS_NO_NUMBA", "1")
    assert kernels.numba_disabled_by_env()


def test_exact_sample_frequencies_and_reproducibility():
    cfg = {"variant": "plancherel", "alpha": "5/7", "d": 2}
    run1 = run_sampler(cfg, seed=99, count=4000, method="exact")
    run2 = run_sampler(cfg, seed=99, count=4000, method="exact")
    assert run1.collected == run2.collected
    p = 1 / (1 + 5 / 7)
    freq = sum(1 for l in run1.collected if l == Partition([2])) / 4000
    sigma = math.sqrt(p * (1 - p) / 4000)
    assert abs(freq - p) < 4 * sigma
    # d = 1 always yields the single-box diagram
    one = run_sampler({"variant": "plancherel", "alpha": "2", "d": 1},
                      seed=5, count=10, method="exact")
    assert all(l == Partition([1]) for l in one.collected)


def test_exact_sample_cap():
    with pytest.raises(ValueError):
        exact_sample(JackPlancherel(Fraction(1), 26), SplitMix64(0))


class _IrrationalPair:
    """Two atoms with masses sqrt(2) - 1 and 2 - sqrt(2)."""

    variant = "synthetic"
    d = 2

    def mass(self, lam):
        if lam == Partition([2]):
            return sqrt_ext(-1, 1, 2)
        return sqrt_ext(2, -1, 2)

    def masses(self):
        return {lam: self.mass(lam) for lam in partitions_of(2)}


def test_exact_sample_handles_quadratic_masses():
    ens = _IrrationalPair()
    n = 4000
    root = SplitMix64(123)
    hits = sum(1 for i in range(n)
               if exact_sample(ens, root.substream(i)) == Partition([2]))
    p = math.sqrt(2) - 1
    sigma = math.sqrt(p * (1 - p) / n)
    assert abs(hits / n - p) < 4 * sigma


def test_scaled_profile_shape_functional_is_one():
    # S_2 of the balanced rescaling is exactly 1 on every diagram: test at a
    # square alpha/d combination where the scale factors stay rational
    alpha, d = Fraction(4), 9
    w, h = Fraction(2, 3), Fraction(1, 6)
    assert w * h * d == 1
    for lam in partitions_of(d)[:8]:
        tm = transition_measure(AnisotropicDiagram(lam, w, h).profile())
        assert observable_family(tm, "fundamental", 2)[1] == 1


def test_scaled_profile_and_mean_profile():
    lam = Partition([3, 2, 1])
    shape = scaled_profile(lam, Fraction(1), 6)
    assert shape.evaluate(0.0) > 0
    far = 5.0
    assert shape.evaluate(far) == pytest.approx(far)
    cfg = {"variant": "plancherel", "alpha": "1", "d": 6}
    run = run_sampler(cfg, seed=1, count=5, method="exact")
    pts = mean_profile(run, Fraction(1), 6, [-1.0, 0.0, 1.0])
    assert len(pts) == 3
    assert pts[1][1] >= abs(pts[1][0])


def test_empirical_stats_table():
    from jackpaths.sampler import empirical_stats

    cfg = {"variant": "plancherel", "alpha": "1", "d": 4}
    run = run_sampler(cfg, seed=2, count=50, method="exact")
    table = empirical_stats(run, [("size", lambda lam: lam.size()),
                                  ("rows", lambda lam: lam.length())])
    assert table["size"]["mean"] == 4.0
    assert table["size"]["variance"] == 0.0
    assert table["size"]["count"] == 50
    assert 1.0 <= table["rows"]["mean"] <= 4.0


def test_sampler_kernels_state_capacity():
    assert kernels.state_capacity(1600) >= 56
    parts = kernels.growth_draw_parts(25, 0.5, 12345, backend="numpy")
    assert sum(parts) == 25
    assert parts == sorted(parts, reverse=True)
