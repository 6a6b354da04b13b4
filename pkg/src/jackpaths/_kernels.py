"""Hot numeric kernels for the large-scale growth sampler.

The corner-probability chain is the only runtime-dominant inner loop in the
package, so it carries a numba-compiled kernel with a pure-numpy fallback;
set JACKPATHS_NO_NUMBA=1 to force the fallback.  Both backends consume the
same counter-based uniform stream; their floating-point summation orders
differ, so cross-backend draws agree statistically but not bit-for-bit.
"""

from __future__ import annotations

import math
import os

import numpy as np

from .rng import stream_word


def numba_disabled_by_env() -> bool:
    return os.environ.get("JACKPATHS_NO_NUMBA", "").lower() in ("1", "true", "yes")


def _try_numba():
    if numba_disabled_by_env():
        return None
    try:
        import numba
    except ImportError:
        return None
    return numba


_numba = _try_numba()
HAVE_NUMBA = _numba is not None


def state_capacity(d: int) -> int:
    """Distinct part values of a partition of d are distinct positive
    integers summing to at most d, so there are at most ~sqrt(2d) of them."""
    return int(math.isqrt(2 * d)) + 3


# ---------------------------------------------------------------------------
# Pure numpy backend
# ---------------------------------------------------------------------------


def _masses_numpy(xs, ys):
    """Transition masses from descending minima xs and maxima ys, in
    log-space for overflow safety; all masses are positive by interlacing."""
    a = xs[:, None] - ys[None, :]
    b = xs[:, None] - xs[None, :]
    np.fill_diagonal(b, 1.0)
    logs = np.log(np.abs(a)).sum(axis=1) - np.log(np.abs(b)).sum(axis=1)
    logs -= logs.max()
    out = np.exp(logs)
    return out / out.sum()


def _growth_draw_numpy(d: int, alpha: float, seed: int):
    cap = state_capacity(d)
    vals = np.zeros(cap, dtype=np.int64)
    cnts = np.zeros(cap, dtype=np.int64)
    m = 0
    counter = 0
    for _ in range(d):
        xs = np.empty(m + 1)
        ys = np.empty(m)
        rows = 0
        for k in range(m):
            xs[k] = alpha * vals[k] - rows
            rows += cnts[k]
            ys[k] = alpha * vals[k] - rows
        xs[m] = -float(rows)
        if m == 0:
            pick = 0
        else:
            masses = _masses_numpy(xs, ys)
            u = (stream_word(seed, counter) >> 11) * 2.0 ** -53
            counter += 1
            acc = 0.0
            pick = m
            for i in range(m + 1):
                acc += masses[i]
                if u < acc:
                    pick = i
                    break
        m = _apply_growth(vals, cnts, m, pick)
    return vals, cnts, m, counter


def _apply_growth(vals, cnts, m, pick):
    """Add a box at the pick-th addable corner (0-based, descending part
    values; pick == m is the new bottom row).  Mutates vals/cnts in place
    and returns the new number of groups."""
    if pick == m:
        if m > 0 and vals[m - 1] == 1:
            cnts[m - 1] += 1
        else:
            vals[m] = 1
            cnts[m] = 1
            m += 1
        return m
    v = vals[pick]
    if pick > 0 and vals[pick - 1] == v + 1:
        cnts[pick - 1] += 1
        cnts[pick] -= 1
        if cnts[pick] == 0:
            for j in range(pick, m - 1):
                vals[j] = vals[j + 1]
                cnts[j] = cnts[j + 1]
            vals[m - 1] = 0
            cnts[m - 1] = 0
            m -= 1
        return m
    if cnts[pick] == 1:
        vals[pick] = v + 1
        return m
    cnts[pick] -= 1
    for j in range(m, pick, -1):
        vals[j] = vals[j - 1]
        cnts[j] = cnts[j - 1]
    vals[pick] = v + 1
    cnts[pick] = 1
    return m + 1


# ---------------------------------------------------------------------------
# numba backend
# ---------------------------------------------------------------------------


def _build_numba_kernel(numba):
    njit = numba.njit

    G = np.uint64(0x9E3779B97F4A7C15)
    M1 = np.uint64(0xBF58476D1CE4E5B9)
    M2 = np.uint64(0x94D049BB133111EB)
    ONE = np.uint64(1)
    S30, S27, S31, S11 = (np.uint64(30), np.uint64(27),
                          np.uint64(31), np.uint64(11))
    INV53 = 2.0 ** -53

    @njit(cache=True)
    def _word(seed, counter):
        z = seed + (counter + ONE) * G
        z = (z ^ (z >> S30)) * M1
        z = (z ^ (z >> S27)) * M2
        return z ^ (z >> S31)

    @njit(cache=True)
    def _growth_draw(d, alpha, seed, vals, cnts, xs, ys, ms):
        m = 0
        counter = np.uint64(0)
        for _ in range(d):
            rows = 0
            for k in range(m):
                xs[k] = alpha * vals[k] - rows
                rows += cnts[k]
                ys[k] = alpha * vals[k] - rows
            xs[m] = -float(rows)
            pick = 0
            if m > 0:
                total = 0.0
                for i in range(m + 1):
                    xi = xs[i]
                    val = 1.0
                    # ordered-ratio product: every factor lies in (0, 1]
                    for j in range(i):
                        val *= (xi - ys[j]) / (xi - xs[j])
                    for j in range(i + 1, m + 1):
                        val *= (xi - ys[j - 1]) / (xi - xs[j])
                    ms[i] = val
                    total += val
                u = float(_word(seed, counter) >> S11) * INV53
                counter += ONE
                acc = 0.0
                pick = m
                for i in range(m + 1):
                    acc += ms[i] / total
                    if u < acc:
                        pick = i
                        break
            # apply growth at the picked corner
            if pick == m:
                if m > 0 and vals[m - 1] == 1:
                    cnts[m - 1] += 1
                else:
                    vals[m] = 1
                    cnts[m] = 1
                    m += 1
            else:
                v = vals[pick]
                if pick > 0 and vals[pick - 1] == v + 1:
                    cnts[pick - 1] += 1
                    cnts[pick] -= 1
                    if cnts[pick] == 0:
                        for j in range(pick, m - 1):
                            vals[j] = vals[j + 1]
                            cnts[j] = cnts[j + 1]
                        vals[m - 1] = 0
                        cnts[m - 1] = 0
                        m -= 1
                elif cnts[pick] == 1:
                    vals[pick] = v + 1
                else:
                    cnts[pick] -= 1
                    for j in range(m, pick, -1):
                        vals[j] = vals[j - 1]
                        cnts[j] = cnts[j - 1]
                    vals[pick] = v + 1
                    cnts[pick] = 1
                    m += 1
        return m

    return _growth_draw


_growth_draw_nb = _build_numba_kernel(_numba) if HAVE_NUMBA else None


# ---------------------------------------------------------------------------
# Public entry point
# ---------------------------------------------------------------------------


def growth_draw_parts(d: int, alpha: float, seed: int, backend: str | None = None):
    """One growth-chain draw at size d; returns the partition as a list of
    parts (descending).  Backend "numba" or "numpy"; default prefers numba
    when importable and not disabled by JACKPATHS_NO_NUMBA."""
    if backend is None:
        backend = "numba" if HAVE_NUMBA else "numpy"
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but unavailable")
        cap = state_capacity(d)
        vals = np.zeros(cap, dtype=np.int64)
        cnts = np.zeros(cap, dtype=np.int64)
        xs = np.empty(cap + 1)
        ys = np.empty(cap + 1)
        ms = np.empty(cap + 1)
        m = _growth_draw_nb(d, float(alpha), np.uint64(seed), vals, cnts, xs, ys, ms)
    elif backend == "numpy":
        vals, cnts, m, _ = _growth_draw_numpy(d, float(alpha), seed)
    else:
        raise ValueError(f"unknown backend {backend!r}")
    parts = []
    for k in range(m):
        parts.extend([int(vals[k])] * int(cnts[k]))
    return parts
