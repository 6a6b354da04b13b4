"""Symmetric functions in the power-sum basis at rational alpha: the
deformed Hall product, the Jack basis built by exact Gram-Schmidt against
dominance order, irreducible/normalized characters, specializations, and
the band-operator transfer construction acting on the Jack basis."""

from __future__ import annotations

import threading
from fractions import Fraction

from .exactnum import SqrtExt, alpha_half_power, format_rational
from .partitions import Partition, falling_factorial, partitions_of, _factorial

DEGREE_CAP = 12

_cache_lock = threading.Lock()
_basis_cache: dict = {}
_m_to_p_cache: dict = {}


class PowerSumPoly:
    """Element of Q[p_1, p_2, ...] stored as {exponent partition: coeff};
    the monomial p_mu is keyed by mu, the constant 1 by the empty partition.
    Zero coefficients are never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mu, coeff in dict(terms).items():
                coeff = Fraction(coeff)
                if coeff != 0:
                    clean[mu] = coeff
        self.terms = clean

    @staticmethod
    def zero() -> "PowerSumPoly":
        return PowerSumPoly()

    @staticmethod
    def one() -> "PowerSumPoly":
        return PowerSumPoly({Partition(): Fraction(1)})

    @staticmethod
    def p(k: int) -> "PowerSumPoly":
        if k < 1:
            raise ValueError("p_k needs k >= 1")
        return PowerSumPoly({Partition([k]): Fraction(1)})

    @staticmethod
    def monomial(mu: Partition, coeff=1) -> "PowerSumPoly":
        return PowerSumPoly({mu: Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mu: Partition) -> Fraction:
        return self.terms.get(mu, Fraction(0))

    def degree(self) -> int:
        return max((mu.size() for mu in self.terms), default=0)

    def homogeneous_component(self, d: int) -> "PowerSumPoly":
        return PowerSumPoly({mu: c for mu, c in self.terms.items() if mu.size() == d})

    # -- ring ops ----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, PowerSumPoly):
            return NotImplemented
        out = dict(self.terms)
        for mu, c in other.terms.items():
            acc = out.get(mu, Fraction(0)) + c
            if acc:
                out[mu] = acc
            else:
                out.pop(mu, None)
        return PowerSumPoly(out)

    def __sub__(self, other):
        if not isinstance(other, PowerSumPoly):
            return NotImplemented
        return self + other.scale(-1)

    def scale(self, c) -> "PowerSumPoly":
        c = Fraction(c)
        if c == 0:
            return PowerSumPoly()
        return PowerSumPoly({mu: coeff * c for mu, coeff in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, PowerSumPoly):
            return NotImplemented
        out = {}
        for mu, c1 in self.terms.items():
            for nu, c2 in other.terms.items():
                key = mu.union(nu)
                acc = out.get(key, Fraction(0)) + c1 * c2
                if acc:
                    out[key] = acc
                else:
                    out.pop(key, None)
        return PowerSumPoly(out)

    def __eq__(self, other):
        return isinstance(other, PowerSumPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset((mu, c) for mu, c in self.terms.items()))

    # -- operators ---------------------------------------------------------

    def diff_p(self, k: int) -> "PowerSumPoly":
        """Partial derivative with respect to p_k."""
        out = {}
        for mu, coeff in self.terms.items():
            m = mu.multiplicity(k)
            if m == 0:
                continue
            reduced = list(mu.parts)
            reduced.remove(k)
            key = Partition(reduced)
            out[key] = out.get(key, Fraction(0)) + coeff * m
        return PowerSumPoly(out)

    def lower(self, k: int, alpha) -> "PowerSumPoly":
        """The annihilation operator p_{-k} = alpha*k*d/dp_k."""
        return self.diff_p(k).scale(Fraction(alpha) * k)

    # -- formatting ----------------------------------------------------------

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for mu in sorted(self.terms, key=lambda m: (m.size(), m.parts)):
            c = self.terms[mu]
            mono = "*".join(f"p{part}" for part in mu.parts) or "1"
            chunks.append(f"({format_rational(c)})*{mono}")
        return " + ".join(chunks)

    def to_json(self):
        return [{"p_mu": list(mu.parts), "coeff": format_rational(c)}
                for mu, c in sorted(self.terms.items(),
                                    key=lambda kv: (kv[0].size(), kv[0].parts))]

    def __repr__(self):
        return f"PowerSumPoly({self.pretty()})"


# ---------------------------------------------------------------------------
# Hall product and basis changes
# ---------------------------------------------------------------------------


def hall_inner(f: PowerSumPoly, g: PowerSumPoly, alpha):
    """Deformed Hall product: <p_mu, p_nu> = delta * alpha^{l(mu)} z_mu."""
    alpha = Fraction(alpha)
    total = Fraction(0)
    small, large = (f.terms, g.terms) if len(f.terms) <= len(g.terms) else (g.terms, f.terms)
    for mu, c in small.items():
        c2 = large.get(mu)
        if c2 is not None:
            total += c * c2 * alpha ** mu.length() * mu.z_factor()
    return total


def _powersum_in_monomials(d: int):
    """Expansion of every p_mu (|mu| = d) in the monomial basis of degree d,
    as {mu: {nu: integer coeff}}."""
    parts = partitions_of(d)
    out = {}
    for mu in parts:
        vec = {Partition(): 1}
        for r in mu.parts:
            nxt: dict = {}
            for nu, c in vec.items():
                # append a new part equal to r
                cand = nu.union(Partition([r]))
                nxt[cand] = nxt.get(cand, 0) + c * cand.multiplicity(r)
                # or grow one existing distinct part value by r
                for w in set(nu.parts):
                    grown = list(nu.parts)
                    grown.remove(w)
                    cand = Partition(sorted(grown + [w + r], reverse=True))
                    nxt[cand] = nxt.get(cand, 0) + c * cand.multiplicity(w + r)
            vec = nxt
        out[mu] = vec
    return out


def _monomial_in_powersums(d: int):
    """Inverse change of basis: {nu: PowerSumPoly equal to m_nu}."""
    with _cache_lock:
        cached = _m_to_p_cache.get(d)
    if cached is not None:
        return cached
    parts = list(partitions_of(d))
    index = {mu: i for i, mu in enumerate(parts)}
    n = len(parts)
    p2m = _powersum_in_monomials(d)
    # rows: p_mu in m-basis; solve the transposed systems by Gaussian elimination
    mat = [[Fraction(p2m[mu].get(nu, 0)) for nu in parts] for mu in parts]
    inv = _invert(mat)
    # m_nu = sum_mu inv[mu][nu] p_mu  (inverse of the transpose relation)
    result = {}
    for j, nu in enumerate(parts):
        result[nu] = PowerSumPoly({parts[i]: inv[j][i] for i in range(n) if inv[j][i]})
    with _cache_lock:
        _m_to_p_cache[d] = result
    return result


def _invert(mat):
    n = len(mat)
    aug = [row[:] + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
           for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular change-of-basis matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


# ---------------------------------------------------------------------------
# Jack basis
# ---------------------------------------------------------------------------


def jack_basis(d: int, alpha, cap: int | None = None):
    """All Jack elements of degree d in the power-sum basis, memoized per
    (d, alpha).  Built by exact Gram-Schmidt over a linear extension of
    dominance order in the monomial basis and normalized so the coefficient
    of p_{1^d} equals 1."""
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    limit = DEGREE_CAP if cap is None else cap
    if d > limit:
        raise ValueError(f"degree {d} above cap {limit}; pass cap= to override")
    key = (d, alpha)
    with _cache_lock:
        cached = _basis_cache.get(key)
    if cached is not None:
        return cached
    if d == 0:
        result = {Partition(): PowerSumPoly.one()}
        with _cache_lock:
            _basis_cache[key] = result
        return result
    m_in_p = _monomial_in_powersums(d)
    ones = Partition([1] * d)
    basis = {}
    norms = {}
    for lam in partitions_of(d):  # ascending lex extends dominance
        vec = m_in_p[lam]
        for mu, jmu in basis.items():
            coeff = hall_inner(vec, jmu, alpha) / norms[mu]
            if coeff:
                vec = vec - jmu.scale(coeff)
        lead = vec.coefficient(ones)
        if lead == 0:
            raise AssertionError(f"vanishing Plancherel coefficient for {lam}")
        vec = vec.scale(1 / lead)
        basis[lam] = vec
        norms[lam] = hall_inner(vec, vec, alpha)
    with _cache_lock:
        _basis_cache[key] = basis
    return basis


def jack_polynomial(lam: Partition, alpha, cap: int | None = None) -> PowerSumPoly:
    return jack_basis(lam.size(), alpha, cap=cap)[lam]


def theta_coefficient(lam: Partition, mu: Partition, alpha) -> Fraction:
    """Coefficient of p_mu in the Jack element of lam (|mu| = |lam|)."""
    if mu.size() != lam.size():
        return Fraction(0)
    return jack_polynomial(lam, alpha).coefficient(mu)


# ---------------------------------------------------------------------------
# Characters
# ---------------------------------------------------------------------------


def irreducible_character(lam: Partition, mu: Partition, alpha):
    """alpha^{-w(mu)/2} * z_mu/d! * theta_mu(lam): exact in Q(sqrt(alpha)).
    Always 1 on mu = (1^d)."""
    if lam.size() != mu.size():
        raise ValueError("character needs |lam| = |mu|")
    d = lam.size()
    r = Fraction(mu.z_factor(), _factorial(d)) * theta_coefficient(lam, mu, alpha)
    return alpha_half_power(alpha, -mu.weight()) * r


def normalized_character(mu: Partition, lam: Partition, alpha):
    """Falling-factorial-normalized character: |lam|_(|mu|) times the
    irreducible character at mu padded with 1's; zero when |lam| < |mu|."""
    if lam.size() < mu.size():
        return Fraction(0)
    padded = mu.union(Partition([1] * (lam.size() - mu.size())))
    return falling_factorial(lam.size(), mu.size()) * irreducible_character(lam, padded, alpha)


def duality_character_check(lam: Partition, mu: Partition, alpha) -> bool:
    """Exact check of chi_lam^(alpha)(mu) == (-1)^w(mu) chi_lam'^(1/alpha)(mu)."""
    lhs = irreducible_character(lam, mu, alpha)
    rhs = irreducible_character(lam.conjugate(), mu, Fraction(1) / Fraction(alpha))
    sign = -1 if mu.weight() % 2 else 1
    rhs = rhs * sign if isinstance(rhs, SqrtExt) else sign * rhs
    if isinstance(lhs, SqrtExt) or isinstance(rhs, SqrtExt):
        # compare through the common field Q(sqrt(alpha), sqrt(1/alpha));
        # sqrt(1/alpha) = sqrt(alpha)/alpha, so both embed in Q(sqrt(alpha))
        return _embed(lhs, alpha) == _embed(rhs, alpha)
    return lhs == rhs


def _embed(x, alpha):
    alpha = Fraction(alpha)
    if isinstance(x, SqrtExt):
        if x.alpha == alpha:
            return x.a, x.b
        if x.alpha == 1 / alpha:
            # sqrt(1/alpha) = (1/alpha) * sqrt(alpha)
            return x.a, x.b / alpha
        raise ValueError("value from an unrelated extension")
    return Fraction(x), Fraction(0)


# ---------------------------------------------------------------------------
# Automorphism and band-operator transfer
# ---------------------------------------------------------------------------


def omega_dual(f: PowerSumPoly, alpha) -> PowerSumPoly:
    """The automorphism p_r -> (-1)^{r-1} alpha^{-1} p_r extended
    multiplicatively over p-monomials."""
    alpha = Fraction(alpha)
    out = {}
    for mu, c in f.terms.items():
        sign = -1 if mu.weight() % 2 else 1
        out[mu] = c * sign * alpha ** (-mu.length())
    return PowerSumPoly(out)


def ns_apply(ell: int, f: PowerSumPoly, alpha) -> PowerSumPoly:
    """Apply P L^ell P+ where row P multiplies by p_k, column P+ is
    alpha*k*d/dp_k, and L_{i,j} = p_{j-i} + delta_{ij} i(alpha-1) with p_0 = 0
    and negative indices acting as annihilations.  Height-truncated at
    ell + deg(f) + 1, which is exact on fixed-degree input."""
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    alpha = Fraction(alpha)
    size = ell + f.degree() + 1
    vec = [f.lower(k, alpha) for k in range(1, size + 1)]
    pk = [PowerSumPoly.p(k) for k in range(1, size + 1)]
    for _ in range(ell):
        new = []
        for i in range(1, size + 1):
            acc = vec[i - 1].scale(Fraction(i) * (alpha - 1))
            for j in range(i + 1, size + 1):
                if not vec[j - 1].is_zero():
                    acc = acc + pk[j - i - 1] * vec[j - 1]
            for j in range(1, i):
                if not vec[j - 1].is_zero():
                    acc = acc + vec[j - 1].lower(i - j, alpha)
            new.append(acc)
        vec = new
    out = PowerSumPoly.zero()
    for k in range(1, size + 1):
        if not vec[k - 1].is_zero():
            out = out + pk[k - 1] * vec[k - 1]
    return out


# ---------------------------------------------------------------------------
# Specializations
# ---------------------------------------------------------------------------


class Specialization:
    """Unital algebra homomorphism determined by the values rho(p_k)."""

    __slots__ = ("rule", "label")

    def __init__(self, rule, label="custom"):
        self.rule = rule
        self.label = label

    @staticmethod
    def from_values(values, default=Fraction(0), label="table"):
        table = {int(k): Fraction(v) for k, v in dict(values).items()}
        return Specialization(lambda k: table.get(k, default), label)

    @staticmethod
    def plancherel(u):
        u = Fraction(u)
        return Specialization(lambda k: u if k == 1 else Fraction(0),
                              f"plancherel({format_rational(u)})")

    @staticmethod
    def principal(u, c):
        """rho(p_k) = u * c^{k-1} (geometric in k)."""
        u, c = Fraction(u), Fraction(c)
        return Specialization(lambda k: u * c ** (k - 1),
                              f"principal({format_rational(u)},{format_rational(c)})")

    def __call__(self, k: int) -> Fraction:
        if k < 1:
            raise ValueError("p_k needs k >= 1")
        return Fraction(self.rule(k))

    def on_partition(self, mu: Partition) -> Fraction:
        out = Fraction(1)
        for part in mu.parts:
            out *= self(part)
        return out

    def apply(self, f: PowerSumPoly) -> Fraction:
        return sum((c * self.on_partition(mu) for mu, c in f.terms.items()),
                   Fraction(0))

    def __repr__(self):
        return f"Specialization({self.label})"
