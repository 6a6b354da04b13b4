"""Probability measures on partitions: the deformed Plancherel and
Schur-Weyl families, Poissonized and size-conditioned Thoma measures,
general character measures solved exactly, positive specializations and
asymptotic-regime parameter sequences, conditional cumulants, and a
tail-certified Poisson truncation oracle."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import SqrtExt, alpha_half_power, parse_rational, sqrt_ext
from .jack import Specialization, jack_basis, theta_coefficient, _factorial
from .partitions import Partition, j_alpha, partitions_of


class PositivityError(ValueError):
    """A constructed ensemble produced a negative mass."""


class DomainError(ValueError):
    """Partition outside the ensemble's support domain."""


# ---------------------------------------------------------------------------
# Poisson-scaled exact values
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PoissonScaled:
    """Exact value rational * exp(-exponent); the transcendental prefactor
    is carried symbolically so per-degree identities stay rational."""

    rational: Fraction
    exponent: Fraction

    def __float__(self):
        return float(self.rational) * math.exp(-float(self.exponent))

    def scaled(self, c) -> "PoissonScaled":
        return PoissonScaled(self.rational * Fraction(c), self.exponent)

    def __repr__(self):
        return f"PoissonScaled({self.rational} * exp(-{self.exponent}))"


# ---------------------------------------------------------------------------
# Specializations with positivity structure
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ThomaPoint:
    """Triple (a, b, c): weakly decreasing nonnegative tuples a, b with
    sum(a) + sum(b) <= c."""

    a: tuple
    b: tuple
    c: Fraction

    def __post_init__(self):
        for seq in (self.a, self.b):
            for i, x in enumerate(seq):
                if x < 0 or (i and seq[i - 1] < x):
                    raise ValueError("a and b must be weakly decreasing, nonnegative")
        if sum(self.a) + sum(self.b) > self.c:
            raise ValueError("Thoma cone inequality sum(a)+sum(b) <= c violated")

    @staticmethod
    def make(a=(), b=(), c=0) -> "ThomaPoint":
        return ThomaPoint(tuple(Fraction(x) for x in a),
                          tuple(Fraction(x) for x in b), Fraction(c))


def thoma_specialization(point: ThomaPoint, alpha) -> Specialization:
    """rho(p_1) = c and rho(p_k) = sum a_i^k + (-alpha)^{1-k} sum b_i^k."""
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    a, b, c = point.a, point.b, point.c

    def rule(k):
        if k == 1:
            return c
        return (sum((x ** k for x in a), Fraction(0))
                + (-alpha) ** (1 - k) * sum((x ** k for x in b), Fraction(0)))

    return Specialization(rule, f"thoma(a={list(a)}, b={list(b)}, c={c})")


def totally_positive_spec(a, c) -> Specialization:
    """rho(p_1) = c, rho(p_k) = sum a_i^k; positive on the Jack basis for
    every alpha (the b = 0 ray of the Thoma cone)."""
    a = tuple(Fraction(x) for x in a)
    c = Fraction(c)
    if sum(a) > c:
        raise ValueError("need sum(a) <= c for total positivity")
    point = ThomaPoint.make(a=a, b=(), c=c)
    spec = thoma_specialization(point, Fraction(1))  # b = 0: alpha irrelevant
    spec.label = f"totally_positive(a={list(a)}, c={c})"
    return spec


def check_jack_positive(spec: Specialization, alpha, degree: int = 6) -> bool:
    """Evaluate the Jack basis under the specialization and verify all
    values are nonnegative up to the given degree."""
    for d in range(degree + 1):
        for lam, poly in jack_basis(d, alpha).items():
            if spec.apply(poly) < 0:
                return False
    return True


# ---------------------------------------------------------------------------
# v-sequences
# ---------------------------------------------------------------------------


def _vseq(v):
    """Normalize a v-specification (sequence, dict, or callable) to a lookup."""
    if callable(v):
        return lambda k: Fraction(v(k))
    if isinstance(v, dict):
        table = {int(k): Fraction(x) for k, x in v.items()}
        return lambda k: table.get(k, Fraction(0))
    seq = [Fraction(x) for x in v]
    return lambda k: seq[k - 1] if k <= len(seq) else Fraction(0)


def _principal_form(vget, probe: int = 80):
    """Detect v_k = v1 * c^{k-1}: returns (v1, c) or None.  Plancherel is
    the c = 0 case.  Only geometric tails within the probe window count."""
    v1 = vget(1)
    if v1 == 0:
        return None
    c = vget(2) / v1
    for k in range(2, probe + 1):
        if vget(k) != v1 * c ** (k - 1):
            return None
    return v1, c


# ---------------------------------------------------------------------------
# Ensembles
# ---------------------------------------------------------------------------


class Ensemble:
    """Base class: a (possibly signed) measure on partitions with exact
    masses.  Fixed-size variants live on partitions of size d."""

    variant = "abstract"
    d: int | None = None

    def mass(self, lam: Partition):
        raise NotImplementedError

    def _check_domain(self, lam: Partition):
        if self.d is not None and lam.size() != self.d:
            raise DomainError(f"{self.variant} lives on partitions of {self.d}")

    def masses(self):
        if self.d is None:
            raise DomainError("masses() needs a fixed-size ensemble")
        return {lam: self.mass(lam) for lam in partitions_of(self.d)}

    def validate_positivity(self, degree: int | None = None):
        """Raise PositivityError if any mass within reach is negative."""
        if self.d is not None:
            for lam, m in self.masses().items():
                if _is_negative(m):
                    raise PositivityError(f"{self.variant}: negative mass at {lam}")
            return
        cap = 6 if degree is None else degree
        for dd in range(cap + 1):
            for lam in partitions_of(dd):
                if _is_negative(self.mass(lam)):
                    raise PositivityError(f"{self.variant}: negative mass at {lam}")


def _is_negative(value) -> bool:
    if isinstance(value, PoissonScaled):
        return value.rational < 0
    if isinstance(value, SqrtExt):
        return value.sign() < 0
    return value < 0


class JackPlancherel(Ensemble):
    """Mass alpha^d d! / j_lambda on partitions of d."""

    variant = "plancherel"

    def __init__(self, alpha, d: int):
        self.alpha = Fraction(alpha)
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")
        self.d = int(d)

    def mass(self, lam: Partition) -> Fraction:
        self._check_domain(lam)
        return self.alpha ** self.d * _factorial(self.d) / j_alpha(lam, self.alpha)


class JackSchurWeyl(Ensemble):
    """Schur-Weyl-type measure parametrized by the positive integer
    K = N*sqrt(alpha) (or, with dual=True, K = -N/sqrt(alpha)); in either
    case the masses are exact rationals."""

    variant = "schur_weyl"

    def __init__(self, alpha, d: int, K: int, dual: bool = False):
        self.alpha = Fraction(alpha)
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")
        self.d = int(d)
        self.K = int(K)
        if self.K < 1:
            raise ValueError("K must be a positive integer")
        self.dual = dual

    def mass(self, lam: Partition) -> Fraction:
        self._check_domain(lam)
        alpha, K, d = self.alpha, self.K, self.d
        prod = Fraction(1)
        for i, j in lam.cells():
            if self.dual:
                prod *= (K + 1 - j) * alpha + (i - 1)
            else:
                prod *= K + (j - 1) * alpha - (i - 1)
        if self.dual:
            return _factorial(d) * prod / (Fraction(K) ** d * j_alpha(lam, alpha))
        return (_factorial(d) * alpha ** d * prod
                / (Fraction(K) ** d * j_alpha(lam, alpha)))

    def character(self, mu: Partition):
        """The multiplicative character N^{-w(mu)} in Q(sqrt(alpha))."""
        w = mu.weight()
        if self.dual:
            return ((-1) ** w * alpha_half_power(self.alpha, -w)
                    * Fraction(1, self.K ** w))
        return alpha_half_power(self.alpha, w) * Fraction(1, self.K ** w)


class JackThoma(Ensemble):
    """Poissonized measure on all partitions with specializations
    rho_1(p_k) = u*v_k and rho_2 the Plancherel direction; masses carry the
    exp(-u^2 v_1/alpha) prefactor symbolically."""

    variant = "thoma"

    def __init__(self, alpha, u, v, check_positivity: bool = True,
                 positivity_degree: int = 6):
        self.alpha = Fraction(alpha)
        self.u = Fraction(u)
        if self.alpha <= 0 or self.u <= 0:
            raise ValueError("alpha and u must be positive")
        self._vget = _vseq(v)
        self.v1 = self._vget(1)
        self.exponent = self.u ** 2 * self.v1 / self.alpha
        self._principal = _principal_form(self._vget)
        if check_positivity:
            self.validate_positivity(positivity_degree)

    def jack_value(self, lam: Partition) -> Fraction:
        """J_lambda evaluated at the scaled sequence u*v, exactly."""
        d = lam.size()
        if self._principal is not None:
            v1, c = self._principal
            u0 = self.u * v1
            if c == 0:
                return u0 ** d  # Plancherel direction
            prod = Fraction(1)
            for i, j in lam.cells():
                prod *= u0 / c + self.alpha * (j - 1) - (i - 1)
            return c ** d * prod
        total = Fraction(0)
        for mu in partitions_of(d):
            th = theta_coefficient(lam, mu, self.alpha)
            if th:
                val = th
                for part in mu.parts:
                    val *= self.u * self._vget(part)
                total += val
        return total

    def rational_mass(self, lam: Partition) -> Fraction:
        return (self.jack_value(lam) * self.u ** lam.size()
                / j_alpha(lam, self.alpha))

    def mass(self, lam: Partition) -> PoissonScaled:
        return PoissonScaled(self.rational_mass(lam), self.exponent)

    def sector_mass_rational(self, d: int) -> Fraction:
        """Exact rational part of the measure of all partitions of d:
        the full sector mass is exp(-U) U^d/d! with U the exponent."""
        return self.exponent ** d / _factorial(d)


class ConditionalJackThoma(Ensemble):
    """The Thoma measure conditioned on |lambda| = d; requires v_1 = 1.
    Masses are exact in Q(sqrt(alpha))."""

    variant = "conditional_thoma"

    def __init__(self, alpha, d: int, v, check_positivity: bool = False):
        self.alpha = Fraction(alpha)
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")
        self.d = int(d)
        self._vget = _vseq(v)
        if self._vget(1) != 1:
            raise ValueError("conditional Thoma measures require v_1 = 1")
        if check_positivity:
            self.validate_positivity()

    def mass(self, lam: Partition):
        self._check_domain(lam)
        d = self.d
        total = Fraction(0)
        total_sqrt = Fraction(0)  # coefficient of sqrt(alpha)
        for mu in partitions_of(d):
            th = theta_coefficient(lam, mu, self.alpha)
            if not th:
                continue
            vmu = Fraction(1)
            for part in mu.parts:
                vmu *= self._vget(part)
            if not vmu:
                continue
            # alpha^{-w(mu)/2} with w = |mu| - l(mu)
            half = alpha_half_power(self.alpha, -mu.weight())
            term = th * vmu
            if isinstance(half, SqrtExt):
                total += term * half.a
                total_sqrt += term * half.b
            else:
                total += term * half
        pref = self.alpha ** d * _factorial(d) / j_alpha(lam, self.alpha)
        return sqrt_ext(pref * total, pref * total_sqrt, self.alpha)


class CharacterMeasure(Ensemble):
    """Measure defined by expanding a normalized character table over the
    irreducible character basis; solved by exact dense linear algebra over
    Q(sqrt(alpha)).  May be signed when the table is not a true character."""

    variant = "character"

    def __init__(self, alpha, d: int, chi):
        self.alpha = Fraction(alpha)
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")
        self.d = int(d)
        ones = Partition([1] * self.d)
        self.chi = {mu: chi[mu] for mu in partitions_of(self.d)}
        if self.chi[ones] != 1:
            raise ValueError("character tables must have chi(1^d) = 1")
        self._solution = self._solve()

    def _solve(self):
        d, alpha = self.d, self.alpha
        parts = list(partitions_of(d))
        n = len(parts)
        # row mu: sum_lam P(lam) theta_mu(lam) z_mu/d! = chi(mu) alpha^{w(mu)/2}
        rows = []
        rhs = []
        for mu in parts:
            zfac = Fraction(mu.z_factor(), _factorial(d))
            rows.append([theta_coefficient(lam, mu, alpha) * zfac for lam in parts])
            rhs.append(self.chi[mu] * alpha_half_power(alpha, mu.weight()))
        sol = _solve_linear(rows, rhs)
        if sol is None:
            raise ArithmeticError("irreducible characters produced a singular system")
        return dict(zip(parts, sol))

    def mass(self, lam: Partition):
        self._check_domain(lam)
        return self._solution[lam]


def _solve_linear(rows, rhs):
    """Gaussian elimination over a field of Fractions and SqrtExt values."""
    n = len(rows)
    aug = [list(map(_lift, rows[i])) + [_lift(rhs[i])] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if not _is_zero(aug[r][col])), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [_div(x, pv) for x in aug[col]]
        for r in range(n):
            if r != col and not _is_zero(aug[r][col]):
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


def _lift(x):
    return x if isinstance(x, SqrtExt) else Fraction(x)


def _is_zero(x):
    return x == 0 if not isinstance(x, SqrtExt) else (x.a == 0 and x.b == 0)


def _div(x, y):
    if isinstance(y, SqrtExt):
        return y.inverse() * x if not isinstance(x, SqrtExt) else x / y
    return x / y


class JackMeasure(Ensemble):
    """General two-specialization measure.  The interaction coefficients
    rho_1(p_k) rho_2(p_k) must vanish beyond a finite probe window so the
    Poisson exponent is an exact rational."""

    variant = "jack_measure"

    def __init__(self, alpha, rho1: Specialization, rho2: Specialization,
                 probe: int = 64):
        self.alpha = Fraction(alpha)
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")
        self.rho1 = rho1
        self.rho2 = rho2
        cross = {}
        for k in range(1, probe + 1):
            t = rho1(k) * rho2(k)
            if t:
                cross[k] = t
        self.cross = cross
        self.exponent = sum((t / (k * self.alpha) for k, t in cross.items()),
                            Fraction(0))

    def rational_mass(self, lam: Partition) -> Fraction:
        poly = jack_basis(lam.size(), self.alpha)[lam]
        return (self.rho1.apply(poly) * self.rho2.apply(poly)
                / j_alpha(lam, self.alpha))

    def mass(self, lam: Partition) -> PoissonScaled:
        return PoissonScaled(self.rational_mass(lam), self.exponent)

    def sector_mass_rational(self, d: int) -> Fraction:
        """[t^d] exp(sum_k cross_k t^k/(k alpha)), exactly, by the standard
        derivative recursion for exp of a constant-free polynomial."""
        gen = {k: t / (k * self.alpha) for k, t in self.cross.items() if k <= d}
        out = [Fraction(0)] * (d + 1)
        out[0] = Fraction(1)
        for n in range(1, d + 1):
            acc = Fraction(0)
            for k, c in gen.items():
                if k <= n:
                    acc += k * c * out[n - k]
            out[n] = acc / n
        return out[d]


def mass(ensemble: Ensemble, lam: Partition):
    """Exact probability mass of lam under the ensemble."""
    return ensemble.mass(lam)


def character_measure(alpha, d: int, chi) -> dict:
    """Solve the character expansion and return {lambda: exact mass}."""
    return CharacterMeasure(alpha, d, chi).masses()


def conditional_thoma_character(v, d: int) -> dict:
    """The multiplicative table chi(mu) = prod v_{mu_i} on partitions of d."""
    vget = _vseq(v)
    table = {}
    for mu in partitions_of(d):
        val = Fraction(1)
        for part in mu.parts:
            val *= vget(part)
        table[mu] = val
    return table


# ---------------------------------------------------------------------------
# Asymptotic regimes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AsymptoticRegime:
    """Regime parameters (g, g', v) with the positivity data (a, c) that
    makes (g, v) (or (-g, +-v)) an admissible pair."""

    g: Fraction
    gp: Fraction
    a: tuple
    c: Fraction

    @property
    def flavor(self) -> str:
        if self.g > 0:
            return "high"
        if self.g < 0:
            return "low"
        return "fixed"

    def v_limit(self, k: int) -> Fraction:
        """The limiting v_k: power sums of a (sign-flipped on even k in the
        low-temperature regime)."""
        if k == 1:
            return Fraction(1)
        base = sum((x ** k for x in self.a), Fraction(0))
        if self.g < 0:
            return (-1) ** (k - 1) * base
        return base

    @staticmethod
    def make(g, a=(), c=1, gp=0) -> "AsymptoticRegime":
        a = tuple(Fraction(x) for x in a)
        c = Fraction(c)
        if sum(a) > c:
            raise ValueError("admissibility needs sum(a) <= c")
        return AsymptoticRegime(Fraction(g), Fraction(gp), a, c)


def regime_sequences(regime: AsymptoticRegime, d: int):
    """The explicit parameter sequences (alpha(d), u(d), v^(d)) realizing
    the regime at size d.  Values are exact, living in Q(sqrt(d)) when d is
    not a perfect square."""
    g = regime.g
    if g == 0:
        raise ValueError("fixed-temperature sequences are caller-supplied")
    d = int(d)
    if g > 0:
        alpha = g ** 2 * d
        u = Fraction(math.ceil(g * d))
    else:
        alpha = 1 / (g ** 2 * d)
        u = Fraction(math.ceil(-g * d)) / (g ** 2 * d)
    ceil_term = Fraction(math.ceil(abs(g) * d))

    def v_of(k: int):
        if k == 1:
            return Fraction(1)
        base = sum((x ** k for x in regime.a), Fraction(0))
        # (g sqrt(d) / ceil(|g| d))^{k-1} * sum a_i^k, exact in Q(sqrt(d))
        scale = (g / ceil_term) ** (k - 1) * alpha_half_power(Fraction(d), k - 1)
        return scale * base

    return alpha, u, v_of


# ---------------------------------------------------------------------------
# Conditional cumulants
# ---------------------------------------------------------------------------


def conditional_cumulant(chi, parts, d: int | None = None):
    """kappa_n of the partitions under the extended character chi (a callable
    on Partition), via the set-partition Moebius expansion
    sum_pi (-1)^{|pi|-1}(|pi|-1)! prod_B chi(union of the block)."""
    from .paths import set_partitions

    parts = [p if isinstance(p, Partition) else Partition(p) for p in parts]
    total_size = sum(p.size() for p in parts)
    if d is not None and total_size > d:
        raise ValueError(f"total size {total_size} exceeds character domain {d}")
    total = Fraction(0)
    for pi in set_partitions(range(len(parts))):
        term = Fraction((-1) ** (len(pi) - 1) * _factorial(len(pi) - 1))
        for block in pi:
            merged = Partition()
            for b in block:
                merged = merged.union(parts[b])
            term *= chi(merged)
        total += term
    return total


def extended_character(table: dict, d: int):
    """Extend a table on partitions of d to smaller partitions by padding
    with parts equal to 1."""

    def chi(mu: Partition):
        if mu.size() > d:
            raise ValueError(f"|mu| = {mu.size()} exceeds d = {d}")
        padded = mu.union(Partition([1] * (d - mu.size())))
        return table[padded]

    return chi


# ---------------------------------------------------------------------------
# Poisson-truncation oracle
# ---------------------------------------------------------------------------


@dataclass
class PoissonInterval:
    """Certified bracket for a Poissonized expectation: the exact sum over
    partitions up to the truncation degree, an exact unnormalized tail
    bound (with a strictly positive safety margin baked in), and the
    Poisson exponent."""

    rational_sum: Fraction
    tail_bound: Fraction
    margin: Fraction
    exponent: Fraction
    degree: int

    @property
    def value(self) -> float:
        return float(self.rational_sum) * math.exp(-float(self.exponent))

    @property
    def radius(self) -> float:
        return float(self.tail_bound) * math.exp(-float(self.exponent))

    def contains_exact(self, target: Fraction) -> bool:
        """Exact check |target - exp(-U) * sum| <= exp(-U) * tail, performed
        as |target * e^U - sum| <= tail with rational bounds on e^U whose
        width is absorbed by the bound's built-in margin."""
        target = Fraction(target)
        lo, hi = _exp_bounds(self.exponent, self.margin / (2 * (abs(target) + 1)))
        worst = max(abs(target * lo - self.rational_sum),
                    abs(target * hi - self.rational_sum))
        return worst <= self.tail_bound

    def contains(self, x) -> bool:
        return abs(float(x) - self.value) <= self.radius


def _exp_bounds(U: Fraction, slack: Fraction):
    """Rational lower/upper bounds on e^U with hi - lo <= slack."""
    U = Fraction(U)
    term = Fraction(1)
    total = Fraction(1)
    n = 0
    while True:
        n += 1
        term *= U / n
        total += term
        if n > 2 * U and 2 * term <= slack:
            break
        if n > 4000:
            raise ArithmeticError("exp bound did not converge")
    return total, total + 2 * term


def _poisson_tail(U: Fraction, D: int, C: Fraction, r: int):
    """Rational upper bound on sum_{i>D} U^i/i! * C * i^r (the e^{-U}
    factor is bounded by 1).  Returns (bound, margin) where the bound
    exceeds the true sum by at least the margin."""
    term = U ** (D + 1) / _factorial(D + 1) * C * Fraction(D + 1) ** r
    total = Fraction(0)
    i = D + 1
    while True:
        total += term
        ratio = U * Fraction(i + 1, i) ** r / (i + 1)
        if ratio <= Fraction(1, 2):
            rem = term * ratio / (1 - ratio)
            return total + 2 * rem, rem
        term *= ratio
        i += 1
        if i > D + 4000:
            raise ArithmeticError("tail bound did not converge")


def poisson_expectation(alpha, u, v, observable, tail_eps,
                        growth_bound=None, degree_cap: int = 60,
                        lengths_hint=None) -> PoissonInterval:
    """Brute-force oracle: sum mass * observable over all partitions up to a
    truncation degree chosen so the certified tail is below tail_eps.

    ``growth_bound`` is (C, r) with |observable(lam)| <= C |lam|^r; when
    omitted it is derived for products of Boolean observables with total
    order given by ``lengths_hint``.
    """
    alpha, u = Fraction(alpha), Fraction(u)
    ensemble = JackThoma(alpha, u, v, check_positivity=False)
    U = ensemble.exponent
    if U <= 0:
        raise ValueError("need u^2 v_1 / alpha > 0")
    tail_eps = Fraction(tail_eps)
    if growth_bound is None:
        if lengths_hint is None:
            raise ValueError("pass growth_bound=(C, r) or lengths_hint")
        r = sum(lengths_hint)
        scale = max(alpha / u, 1 / u)
        C = Fraction(1)
        for ell in lengths_hint:
            C *= Fraction(2) ** (ell - 1) * scale ** ell
    else:
        C, r = Fraction(growth_bound[0]), int(growth_bound[1])
    D = max(4, int(math.ceil(2 * float(U))))
    while _poisson_tail(U, D, C, r)[0] > tail_eps:
        D += 2
        if D > degree_cap:
            raise ArithmeticError(
                f"tail target {tail_eps} unreachable below degree {degree_cap}")
    total = Fraction(0)
    for d in range(D + 1):
        for lam in partitions_of(d):
            rm = ensemble.rational_mass(lam)
            if rm:
                total += rm * Fraction(observable(lam))
    bound, margin = _poisson_tail(U, D, C, r)
    return PoissonInterval(total, bound, margin, U, D)


# ---------------------------------------------------------------------------
# Config plumbing
# ---------------------------------------------------------------------------


def ensemble_from_config(cfg: dict) -> Ensemble:
    """Build an ensemble from a JSON/TOML-style mapping: keys variant,
    alpha ("p/q"), d, K, u, v (list of "p/q"), thoma {a, b, c}."""
    variant = cfg["variant"]
    alpha = parse_rational(cfg["alpha"])
    if variant == "plancherel":
        return JackPlancherel(alpha, int(cfg["d"]))
    if variant == "schur_weyl":
        return JackSchurWeyl(alpha, int(cfg["d"]), int(cfg["K"]),
                             dual=bool(cfg.get("dual", False)))
    if variant == "thoma":
        v = [parse_rational(x) for x in cfg["v"]]
        return JackThoma(alpha, parse_rational(cfg["u"]), v,
                         check_positivity=bool(cfg.get("check_positivity", True)))
    if variant == "conditional_thoma":
        v = [parse_rational(x) for x in cfg["v"]]
        return ConditionalJackThoma(alpha, int(cfg["d"]), v)
    if variant == "character":
        d = int(cfg["d"])
        table = {Partition(eval_key(k)): parse_rational(x)
                 for k, x in cfg["chi"].items()}
        return CharacterMeasure(alpha, d, table)
    if variant == "jack_measure":
        th = cfg.get("thoma", {})
        point = ThomaPoint.make(a=[parse_rational(x) for x in th.get("a", [])],
                                b=[parse_rational(x) for x in th.get("b", [])],
                                c=parse_rational(th.get("c", 0)))
        rho1 = thoma_specialization(point, alpha)
        rho2 = Specialization.plancherel(parse_rational(cfg["u"]))
        return JackMeasure(alpha, rho1, rho2)
    raise ValueError(f"unknown ensemble variant {variant!r}")


def eval_key(key: str):
    """Parse a partition key like "3,1,1" (or "" for the empty partition)."""
    key = key.strip()
    if not key:
        return ()
    return tuple(int(x) for x in key.split(","))
