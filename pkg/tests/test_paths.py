from fractions import Fraction

import pytest

from jackpaths.paths import (EnumerationCapError, afp_cov, afp_mean, clt_cov,
                             clt_mean, count_lukasiewicz,
                             depoissonized_expectation,
                             enumerate_lukasiewicz, enumerate_motzkin,
                             enumerate_ribbon, finite_cumulant_s,
                             finite_expectation, finite_moment_s,
                             limit_moment, limit_moment_poly,
                             moment_duality_check, ribbon_stats,
                             set_partitions, shape_sum_poly)


def catalan(n):
    from math import comb
    return comb(2 * n, n) // (n + 1)


def test_lukasiewicz_counts_against_dp_oracle():
    from jackpaths.paths import iter_lukasiewicz

    for ell in range(1, 12):
        paths = enumerate_lukasiewicz(ell)
        assert len(paths) == count_lukasiewicz(ell)
        assert len(paths) <= catalan(ell)
        assert len(set(paths)) == len(paths)
    # near the ribbon cap the listing is too large to keep; stream it
    for ell in (13, 14):
        assert sum(1 for _ in iter_lukasiewicz(ell)) == count_lukasiewicz(ell)
        assert count_lukasiewicz(ell) <= catalan(ell)
    assert len(enumerate_lukasiewicz(2)) == 1
    assert len(enumerate_lukasiewicz(3)) == 2


def test_motzkin_counts():
    assert len(enumerate_motzkin(2)) == 1
    assert len(enumerate_motzkin(3)) == 1
    assert len(enumerate_motzkin(4)) == 3
    # Motzkin paths are the degree-one subset of the Lukasiewicz paths
    for ell in range(2, 9):
        luk = set(enumerate_lukasiewicz(ell))
        assert set(enumerate_motzkin(ell)) <= luk


def test_path_structure_constraints():
    for ell in range(2, 9):
        for exc in enumerate_lukasiewicz(ell):
            steps = exc.steps()
            assert all(s >= -1 for s in steps)
            prev = 0
            for y in exc.heights[1:]:
                assert not (y == prev == 0)  # no horizontal step at height 0
                prev = y


def test_ribbon_height_bound_and_filters():
    for lengths in [(2, 2), (3, 2), (4,), (2, 2, 2)]:
        total = sum(lengths)
        for rp in enumerate_ribbon(lengths):
            assert rp.max_height() < total
            # unpaired down steps all have degree one
            stats = ribbon_stats(rp)
            assert stats["unpaired_downs"] >= 0
    assert enumerate_ribbon([3, 1]) == []
    assert enumerate_ribbon([1]) == []
    one = enumerate_ribbon([2, 2], pairing_count=1, connectivity="connected")
    assert len(one) == 1
    assert len(enumerate_ribbon([2], pairing_count=0)) == 1
    with pytest.raises(EnumerationCapError):
        enumerate_ribbon([8, 8])


def test_pi_connectivity_filter():
    # with both sites in one block, connectivity is trivial
    rps = enumerate_ribbon([2, 2], connectivity=[(0, 1)])
    assert len(rps) == len(enumerate_ribbon([2, 2]))


def test_limit_moment_examples():
    g = Fraction(1, 2)
    assert limit_moment(2, g, [1]) == 1
    assert limit_moment(3, g, [1]) == g
    assert limit_moment(3, g, [1, Fraction(1, 3)]) == g + Fraction(1, 3)
    assert limit_moment(4, g, [1]) == 2 + g * g
    assert limit_moment(1, g, [1]) == 0
    # v1-normalization with a square v1
    assert limit_moment(2, g, [4]) == 1
    assert limit_moment(3, g, [4, 1]) == (4 * g + 1) / 8
    with pytest.raises(ValueError):
        limit_moment(3, g, [2])  # odd order needs square v1


def test_finite_expectation_examples():
    alpha, u = Fraction(2), Fraction(2)
    v = [1, Fraction(1, 2), Fraction(1, 3)]
    assert finite_expectation([2], alpha, u, v) == 1
    assert finite_expectation([1], alpha, u, v) == 0
    assert finite_expectation([1, 5], alpha, u, v) == 0
    assert finite_expectation([2, 2], alpha, u, v) == 1 + alpha / u ** 2
    assert finite_expectation([3], alpha, u, v) == (alpha - 1) / u + Fraction(1, 2)


def test_finite_cumulants_examples():
    alpha, u = Fraction(3), Fraction(2)
    v = [1, Fraction(1, 5)]
    assert finite_cumulant_s([2], alpha, u, v) == 1
    assert finite_cumulant_s([2, 2], alpha, u, v) == alpha / u ** 2
    assert finite_cumulant_s([3], alpha, u, v) == (alpha - 1) / u + Fraction(1, 5)


def test_cumulant_consistency_via_set_partitions():
    alpha, u = Fraction(2), Fraction(3)
    v = [1, Fraction(1, 2), Fraction(1, 4)]
    for lengths in [(2, 2), (2, 3), (2, 2, 2), (3, 3)]:
        moment = finite_moment_s(lengths, alpha, u, v)
        recombined = Fraction(0)
        for pi in set_partitions(range(len(lengths))):
            term = Fraction(1)
            for block in pi:
                term *= finite_cumulant_s([lengths[b] for b in block],
                                          alpha, u, v)
            recombined += term
        assert moment == recombined, lengths


def test_depoissonized_examples():
    alpha, u, d = Fraction(2), Fraction(2), 5
    b = alpha / u ** 2
    assert depoissonized_expectation([2], d, alpha, u, [1]) == d * b
    assert depoissonized_expectation([2, 2], d, alpha, u, [1]) == \
        d * (d - 1) * b ** 2 + d * b ** 2
    assert depoissonized_expectation([1], d, alpha, u, [1]) == 0
    with pytest.raises(ValueError):
        depoissonized_expectation([2], d, alpha, u, [2])


def test_clt_values():
    g, gp = Fraction(1, 2), Fraction(3)
    assert clt_mean(2, g, gp, [1]) == 0
    # ell = 3: the g-derivative of the shape sum is the single horizontal path
    assert clt_mean(3, g, gp, [1]) == gp / 2
    assert clt_mean(3, g, Fraction(0), [1, Fraction(1, 3)]) == 0
    for v1 in (Fraction(1), Fraction(4)):
        assert clt_cov(2, 2, g, [v1]) == 1 / v1
    assert clt_cov(2, 1, g, [1]) == 0
    assert clt_cov(2, 2, g, [1, Fraction(1, 3)]) == 1


def test_afp_values():
    g = Fraction(1, 2)
    v = [Fraction(1), Fraction(1, 3)]
    assert afp_cov(2, 2, g, v, {}) == 0
    assert afp_mean(3, g, Fraction(0), v, []) == 0
    # with gp only, afp_mean reduces to clt_mean at v1 = 1
    assert afp_mean(3, g, Fraction(2), v, []) == clt_mean(3, g, Fraction(2), v)
    # vp acts through d/dv_2 on the ell=3 shape sum (single up-2 path)
    got = afp_mean(3, g, Fraction(0), v, {2: Fraction(5)})
    assert got == Fraction(5) / 2
    # a nonzero table feeds the zero-pairing double sum (degree-2 steps
    # need sites of length >= 3)
    withtable = afp_cov(3, 3, g, v, {(2, 2): Fraction(7)})
    assert withtable != afp_cov(3, 3, g, v, {})


def test_afp_cov_reduces_to_depoissonized_covariance():
    # with a vanishing second-cumulant table the covariance equals the
    # one-pairing sum minus the cross term counting unpaired down steps
    # on the two sites (the boundary convention packages exactly this)
    from jackpaths.paths import _all_ribbons, _info_of

    g = Fraction(1, 3)
    v = [Fraction(1), Fraction(1, 2), Fraction(1, 5)]
    for k, l in [(2, 2), (2, 3), (3, 3)]:
        direct = afp_cov(k, l, g, v, {})
        one_pairing = clt_cov(k, l, g, v)
        total = Fraction(0)
        for rp in _all_ribbons((k, l)):
            if rp.pairings:
                continue
            stats = ribbon_stats(rp)
            base = Fraction(1, stats["s0_per_site"][0] * stats["s0_per_site"][1])
            for i, cnt in stats["horizontal_by_height"].items():
                base *= (i * g) ** cnt
            vmu = Fraction(1)
            for n, cnt in stats["up_by_degree"].items():
                vmu *= (v[n - 1] if n <= len(v) else Fraction(0)) ** cnt
            downs = [0, 0]
            info = _info_of(rp.sites)
            for pos in range(1, len(info.degs)):
                if info.degs[pos] == -1:
                    downs[info.site_of[pos]] += 1
            total += base * vmu * downs[0] * downs[1]
        assert direct == one_pairing - total / ((k - 1) * (l - 1))


def _leading_b_coefficient(k, l, g, v):
    """Exact leading coefficient, in the pairing weight b = alpha/u^2, of
    the finite-parameter joint cumulant along the slice alpha = 1 + g*u
    (where the horizontal weight equals g identically): fit the cumulant,
    a cubic in b with no constant term, through three exact points."""
    us = [Fraction(1), Fraction(2), Fraction(4)]
    bs, ys = [], []
    for u in us:
        alpha = 1 + g * u
        bs.append(alpha / u ** 2)
        ys.append(finite_cumulant_s([k, l], alpha, u, v))
    rows = [[b, b ** 2, b ** 3, y] for b, y in zip(bs, ys)]
    n = 3
    for c in range(n):
        p = next(r for r in range(c, n) if rows[r][c] != 0)
        rows[c], rows[p] = rows[p], rows[c]
        pv = rows[c][c]
        rows[c] = [x / pv for x in rows[c]]
        for r in range(n):
            if r != c and rows[r][c]:
                f = rows[r][c]
                rows[r] = [a - f * b2 for a, b2 in zip(rows[r], rows[c])]
    return rows[0][3]


def test_clt_cov_matches_finite_parameter_extrapolation():
    v = [Fraction(1), Fraction(1, 3), Fraction(1, 7)]
    for g in (Fraction(0), Fraction(1, 2)):
        for k, l in [(2, 2), (2, 3), (3, 3), (2, 4)]:
            lead = _leading_b_coefficient(k, l, g, v)
            assert lead == (k - 1) * (l - 1) * clt_cov(k, l, g, v), (g, k, l)


def test_moment_duality():
    for ell in range(1, 9):
        assert moment_duality_check(ell)


def test_limit_moment_poly_structure():
    p4 = limit_moment_poly(4)
    # contains the pure v1^2 terms and the g^2 v1 horizontal path
    assert p4.evaluate({"g": Fraction(0), "v1": 1, "v2": 0, "v3": 0}) == 2
    assert p4.derivative("g").derivative("g").evaluate(
        {"g": 0, "v1": 1, "v2": 0, "v3": 0}) == 2  # g^2 coefficient 1, twice diff
    s3 = shape_sum_poly(3)
    assert s3.evaluate({"g": Fraction(2), "v1": 1, "v2": Fraction(5)}) == 7


def test_set_partitions_counts():
    # Bell numbers
    for n, b in [(0, 1), (1, 1), (2, 2), (3, 5), (4, 15)]:
        assert sum(1 for _ in set_partitions(range(n))) == b
