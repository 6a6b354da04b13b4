"""Integer partitions (Young diagrams) and the exact quantities attached to
them: conjugation, the z_mu factor, and the alpha-deformed hook-like product
j_alpha that normalizes the Jack basis."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class Partition:
    """Weakly decreasing tuple of positive integers; the empty partition is
    allowed.  Immutable and hashable, usable as a dict key everywhere."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"parts must be positive, got {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        self.parts = parts

    # -- basic statistics ------------------------------------------------

    def size(self) -> int:
        return sum(self.parts)

    def length(self) -> int:
        return len(self.parts)

    def weight(self) -> int:
        """|mu| - l(mu), the exponent tracked by character dualities."""
        return self.size() - self.length()

    def multiplicity(self, i: int) -> int:
        return sum(1 for p in self.parts if p == i)

    def multiplicities(self) -> dict:
        out = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def z_factor(self) -> int:
        """z_mu = prod_i m_i! * i^{m_i}."""
        out = 1
        for i, m in self.multiplicities().items():
            out *= _factorial(m) * i ** m
        return out

    # -- structure ---------------------------------------------------------

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def cells(self):
        """Yield (i, j) with 1-based row i and column j."""
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield i, j

    def union(self, other: "Partition") -> "Partition":
        """Product of partitions: the multiset union of parts."""
        return Partition(sorted(self.parts + other.parts, reverse=True))

    def contains(self, other: "Partition") -> bool:
        if other.length() > self.length():
            return False
        return all(o <= s for s, o in zip(self.parts, other.parts))

    def dominates(self, other: "Partition") -> bool:
        """Dominance order: partial sums of self bound those of other."""
        if self.size() != other.size():
            raise ValueError("dominance compares partitions of equal size")
        acc_s = acc_o = 0
        for k in range(max(self.length(), other.length())):
            acc_s += self.parts[k] if k < self.length() else 0
            acc_o += other.parts[k] if k < other.length() else 0
            if acc_s < acc_o:
                return False
        return True

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __lt__(self, other):
        # lexicographic; a linear extension of dominance on each Y_d
        return self.parts < other.parts

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __repr__(self):
        return f"Partition({list(self.parts)})"

    def to_json(self):
        return list(self.parts)

    @staticmethod
    def from_json(data):
        return Partition(data)


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def falling_factorial(n, k: int):
    """n(n-1)...(n-k+1); exact for int or Fraction n."""
    acc = 1
    for i in range(k):
        acc *= n - i
    return acc


@lru_cache(maxsize=None)
def partitions_of(n: int):
    """All partitions of n, ascending lexicographically (a linear extension
    of dominance order, smallest (1^n) first)."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    parts = sorted(gen(n, n))
    return tuple(Partition(p) for p in parts)


def partitions_upto(n: int):
    for d in range(n + 1):
        yield from partitions_of(d)


def j_alpha(p: Partition, alpha) -> Fraction:
    """The norm-square product over cells of p:
    prod (alpha*arm + leg + 1)(alpha*arm + leg + alpha), arm/leg taken
    from the cell's row rest and column rest.  Strictly positive."""
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    conj = p.conjugate()
    out = Fraction(1)
    for i, j in p.cells():
        arm = p.parts[i - 1] - j
        leg = conj.parts[j - 1] - i
        out *= (alpha * arm + leg + 1) * (alpha * arm + leg + alpha)
    return out
