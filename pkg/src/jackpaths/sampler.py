"""Random generation of Young diagrams: exact inverse-CDF sampling against
exact masses, a corner-growth chain for large sizes (validated exactly
against the fixed-size law before use), and empirical-statistics helpers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import _kernels
from .diagrams import AnisotropicDiagram, StaircaseShape, transition_measure
from .ensembles import Ensemble, JackPlancherel, ensemble_from_config
from .exactnum import SqrtExt
from .partitions import Partition, partitions_of
from .rng import SplitMix64, dyadic_fraction

EXACT_SAMPLE_CAP = 25
GROWTH_VALIDATION_ALPHAS = (Fraction(1, 3), Fraction(1), Fraction(2))
GROWTH_VALIDATION_SIZE = 8

_growth_validated: bool | None = None


class GrowthUnavailableError(RuntimeError):
    """The growth chain failed its exact-law validation and is disabled."""


# ---------------------------------------------------------------------------
# Exact growth chain
# ---------------------------------------------------------------------------


def _groups(lam: Partition):
    values, counts = [], []
    for p in lam.parts:
        if values and values[-1] == p:
            counts[-1] += 1
        else:
            values.append(p)
            counts.append(1)
    return values, counts


def growth_candidates(lam: Partition, alpha):
    """Addable corners of the width-alpha diagram, ascending by the corner
    coordinate of the profile (matching the transition-measure atoms)."""
    alpha = Fraction(alpha)
    values, counts = _groups(lam)
    cum = [0]
    for c in counts:
        cum.append(cum[-1] + c)
    m = len(values)
    out = [(-Fraction(cum[m]), _grown(values, counts, m))]
    for k in range(m - 1, -1, -1):
        out.append((alpha * values[k] - cum[k], _grown(values, counts, k)))
    return out


def _grown(values, counts, k) -> Partition:
    parts = []
    for i, (v, c) in enumerate(zip(values, counts)):
        n = c
        if i == k:
            parts.append(v + 1)
            n -= 1
        parts.extend([v] * n)
    if k == len(values):
        parts.append(1)
    return Partition(sorted(parts, reverse=True))


def growth_transitions(lam: Partition, alpha):
    """Exact one-step law: [(next partition, probability)], probabilities
    given by the transition-measure atoms of the width-alpha profile."""
    tm = transition_measure(AnisotropicDiagram(lam, Fraction(alpha), 1).profile())
    cands = growth_candidates(lam, alpha)
    if [pos for pos, _ in cands] != [pos for pos, _ in tm.atoms]:
        raise AssertionError("corner bookkeeping out of sync with the profile")
    return [(nxt, mass) for (_, nxt), (_, mass) in zip(cands, tm.atoms)]


def growth_distribution(alpha, d: int) -> dict:
    """Exact chain-rule distribution on partitions of d induced by the
    growth process started from the empty diagram."""
    dist = {Partition(): Fraction(1)}
    for _ in range(d):
        nxt: dict = {}
        for lam, p in dist.items():
            for mu, q in growth_transitions(lam, alpha):
                nxt[mu] = nxt.get(mu, Fraction(0)) + p * q
        dist = nxt
    return dist


def validate_growth(alphas=GROWTH_VALIDATION_ALPHAS,
                    size: int = GROWTH_VALIDATION_SIZE) -> bool:
    """Exact validation contract: the induced distribution must equal the
    fixed-size deformed-Plancherel law for every size <= ``size`` and every
    alpha in ``alphas``.  The result is cached per process."""
    global _growth_validated
    if _growth_validated is not None:
        return _growth_validated
    ok = True
    for alpha in alphas:
        dist = {Partition(): Fraction(1)}
        for d in range(1, size + 1):
            nxt: dict = {}
            for lam, p in dist.items():
                for mu, q in growth_transitions(lam, alpha):
                    nxt[mu] = nxt.get(mu, Fraction(0)) + p * q
            dist = nxt
            target = JackPlancherel(alpha, d).masses()
            if dist != target:
                ok = False
                break
        if not ok:
            break
    _growth_validated = ok
    return ok


def growth_sample(alpha, d: int, rng: SplitMix64,
                  backend: str | None = None) -> Partition:
    """Draw one partition of size d from the growth chain (floating-point
    masses; the law itself is certified by :func:`validate_growth`)."""
    if d < 1:
        raise ValueError("d must be >= 1")
    if not validate_growth():
        raise GrowthUnavailableError(
            "growth chain failed exact validation; use exact_sample")
    seed = rng.next_u64()
    parts = _kernels.growth_draw_parts(d, float(alpha), seed, backend=backend)
    return Partition(parts)


# ---------------------------------------------------------------------------
# Exact categorical sampling
# ---------------------------------------------------------------------------


def exact_sample(ensemble: Ensemble, rng: SplitMix64) -> Partition:
    """Draw a partition with exactly the ensemble's mass, by refining a
    dyadic uniform against the exact cumulative masses (starting at 128
    bits, so no float boundary bias is possible)."""
    if ensemble.d is None:
        raise ValueError("exact_sample needs a fixed-size ensemble")
    if ensemble.d > EXACT_SAMPLE_CAP:
        raise ValueError(
            f"d = {ensemble.d} above the exact-sampling cap "
            f"{EXACT_SAMPLE_CAP}; use growth_sample")
    lams, cum = _cumulative(ensemble)
    n, bits = rng.next_dyadic(words=2)
    while True:
        lo = dyadic_fraction(n, bits)
        hi = dyadic_fraction(n + 1, bits)
        idx = _first_above(cum, lo)
        if _leq(hi, cum[idx]):
            return lams[idx]
        n, bits = rng.extend_dyadic(n, bits)


def _cumulative(ensemble: Ensemble):
    hit = getattr(ensemble, "_cumulative_cache", None)
    if hit is not None:
        return hit
    lams = sorted(partitions_of(ensemble.d))
    cum = []
    acc = Fraction(0)
    for lam in lams:
        m = ensemble.mass(lam)
        if _is_neg(m):
            raise ValueError(f"cannot sample a signed measure (mass at {lam})")
        acc = acc + m
        cum.append(acc)
    if cum[-1] != 1:
        raise ValueError("masses do not sum to 1")
    ensemble._cumulative_cache = (lams, cum)
    return lams, cum


def _is_neg(x) -> bool:
    return x.sign() < 0 if isinstance(x, SqrtExt) else x < 0


def _leq(a, b) -> bool:
    if isinstance(b, SqrtExt):
        return b >= a
    return a <= b


def _first_above(cum, x) -> int:
    lo, hi = 0, len(cum) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if cum[mid] > x:
            hi = mid
        else:
            lo = mid + 1
    return lo


# ---------------------------------------------------------------------------
# Sample runs and empirical statistics
# ---------------------------------------------------------------------------


@dataclass
class SampleRun:
    """A reproducible batch of draws: identical (config, seed) give
    identical output within a backend."""

    config: dict
    seed: int
    count: int
    method: str
    backend: str | None = None
    collected: list = field(default_factory=list)


def run_sampler(config: dict, seed: int, count: int, method: str = "exact",
                backend: str | None = None) -> SampleRun:
    """Draw ``count`` partitions; draw i uses the substream (seed, i), so
    runs parallelize and extend deterministically."""
    root = SplitMix64(seed)
    run = SampleRun(config, seed, count, method, backend)
    if method == "exact":
        ensemble = ensemble_from_config(config)
        for i in range(count):
            run.collected.append(exact_sample(ensemble, root.substream(i)))
    elif method == "growth":
        alpha = Fraction(str(config["alpha"])) if not isinstance(
            config["alpha"], (int, Fraction)) else Fraction(config["alpha"])
        d = int(config["d"])
        for i in range(count):
            run.collected.append(growth_sample(alpha, d, root.substream(i),
                                               backend=backend))
    else:
        raise ValueError(f"unknown sampling method {method!r}")
    return run


def empirical_stats(run: SampleRun, observables) -> dict:
    """Per-observable mean and variance over a run; ``observables`` is a
    list of (name, callable on Partition) pairs."""
    table = {}
    n = len(run.collected)
    for name, func in observables:
        vals = [float(func(lam)) for lam in run.collected]
        mean = sum(vals) / n if n else float("nan")
        var = sum((v - mean) ** 2 for v in vals) / (n - 1) if n > 1 else 0.0
        table[name] = {"mean": mean, "variance": var, "count": n}
    return table


def scaled_profile(lam: Partition, alpha, d: int | None = None) -> StaircaseShape:
    """Profile of the balanced rescaling (box sqrt(alpha/d) x 1/sqrt(alpha d)),
    with float corners (the scale factors are irrational in general)."""
    if d is None:
        d = lam.size()
    w = math.sqrt(float(alpha) / d)
    h = 1.0 / math.sqrt(float(alpha) * d)
    values, counts = _groups(lam)
    if not values:
        return StaircaseShape([0.0], [], "finite")
    cum = [0]
    for c in counts:
        cum.append(cum[-1] + c)
    m = len(values)
    minima = [w * values[k] - h * cum[k] for k in range(m)] + [-h * cum[m]]
    maxima = [w * values[k] - h * cum[k + 1] for k in range(m)]
    minima.reverse()
    maxima.reverse()
    return StaircaseShape(minima, maxima, "finite")


def mean_profile(run: SampleRun, alpha, d: int, grid) -> list:
    """Average scaled profile over the run's draws, evaluated on a grid of
    u-values; returns [(u, mean omega(u))]."""
    shapes = [scaled_profile(lam, alpha, d) for lam in run.collected]
    out = []
    for u in grid:
        out.append((u, sum(s.evaluate(u) for s in shapes) / len(shapes)))
    return out
