"""Truncated power-series arithmetic over exact rationals, and the
moment / Boolean-cumulant / free-cumulant / shape-functional transforms
defined through Cauchy-transform generating functions."""

from __future__ import annotations

from fractions import Fraction


def series_mul(a, b, order):
    out = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a[: order + 1]):
        if ai == 0:
            continue
        for j, bj in enumerate(b[: order + 1 - i]):
            if bj:
                out[i + j] += ai * bj
    return out


def series_inv(a, order):
    if a[0] == 0:
        raise ZeroDivisionError("series has no inverse (zero constant term)")
    inv = [Fraction(0)] * (order + 1)
    inv[0] = 1 / Fraction(a[0])
    for n in range(1, order + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            if k < len(a) and a[k]:
                acc += Fraction(a[k]) * inv[n - k]
        inv[n] = -acc / Fraction(a[0])
    return inv


def series_log(a, order):
    """log of a series with constant term 1, via log(a) = integral of a'/a."""
    if a[0] != 1:
        raise ValueError("series_log needs constant term 1")
    if order == 0:
        return [Fraction(0)]
    padded = [Fraction(a[k]) if k < len(a) else Fraction(0) for k in range(order + 1)]
    deriv = [Fraction(k) * padded[k] for k in range(1, order + 1)]  # coeff of t^{k-1}
    inv = series_inv(padded, order - 1)
    prod = series_mul(deriv, inv, order - 1)
    out = [Fraction(0)] * (order + 1)
    for n in range(1, order + 1):
        out[n] = prod[n - 1] / n
    return out


def boolean_from_moments(moments):
    """Boolean cumulants B_1..B_L from moments M_1..M_L.

    With Mhat(t) = 1 + sum M_l t^l, the Boolean generating relation
    B(z) = z - 1/G(z) becomes sum B_l t^l = 1 - 1/Mhat(t).
    """
    order = len(moments)
    mhat = [Fraction(1)] + [Fraction(m) for m in moments]
    inv = series_inv(mhat, order)
    return [-inv[k] for k in range(1, order + 1)]


def moments_from_boolean(booleans):
    """Inverse of :func:`boolean_from_moments`: Mhat = 1/(1 - Bhat)."""
    order = len(booleans)
    one_minus = [Fraction(1)] + [-Fraction(b) for b in booleans]
    mhat = series_inv(one_minus, order)
    return [mhat[k] for k in range(1, order + 1)]


def shape_functionals_from_moments(moments):
    """Fundamental functionals S_1..S_L from moments: S-series = log Mhat."""
    order = len(moments)
    mhat = [Fraction(1)] + [Fraction(m) for m in moments]
    lg = series_log(mhat, order)
    return [lg[k] for k in range(1, order + 1)]


def free_from_moments(moments):
    """Free cumulants R_1..R_L from moments via degree-truncated inversion
    of the Cauchy transform: with w = (1 + c(z))/z, c(z) = sum R_l z^l,
    the identity G(w) = z reads sum_m M_m z^m (1+c)^{-(m+1)} = 1."""
    order = len(moments)
    ms = [Fraction(1)] + [Fraction(m) for m in moments]
    cumulants = [Fraction(0)] * (order + 1)  # cumulants[l] = R_l, index 0 unused

    def residual():
        one_plus_c = [Fraction(1)] + cumulants[1:]
        inv = series_inv(one_plus_c, order)
        total = [Fraction(0)] * (order + 1)
        power = inv[:]  # (1+c)^{-1}
        for m in range(0, order + 1):
            if ms[m]:
                for k in range(m, order + 1):
                    total[k] += ms[m] * power[k - m]
            if m < order:
                power = series_mul(power, inv, order)
        return total

    for ell in range(1, order + 1):
        total = residual()
        # R_ell enters [z^ell] with coefficient -1; solve for it
        cumulants[ell] += total[ell]
    total = residual()
    if any(total[1:]):
        raise AssertionError("free-cumulant inversion failed to converge")
    return cumulants[1:]


def moments_from_free(cumulants):
    """Moments M_1..M_L from free cumulants (inverse of free_from_moments),
    by solving the same functional identity in the other direction."""
    order = len(cumulants)
    cs = [Fraction(0)] + [Fraction(c) for c in cumulants]
    one_plus_c = [Fraction(1)] + cs[1:]
    inv = series_inv(one_plus_c, order)
    moments = [Fraction(0)] * (order + 1)
    moments[0] = Fraction(1)
    power = inv[:]
    # iterate: M_ell = -(sum_{m<ell} M_m z^m (1+c)^{-(m+1)})[z^ell] with the
    # m=ell term contributing exactly M_ell
    powers = [inv[:]]
    for _ in range(order):
        powers.append(series_mul(powers[-1], inv, order))
    for ell in range(1, order + 1):
        acc = Fraction(0)
        for m in range(0, ell):
            acc += moments[m] * powers[m][ell - m]
        moments[ell] = -acc
    return moments[1:]
