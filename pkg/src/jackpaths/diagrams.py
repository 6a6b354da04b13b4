"""Anisotropic Young diagrams, their staircase profiles in Russian
coordinates, exact transition measures, and the four observable families
(moments, Boolean cumulants, free cumulants, fundamental shape functionals).
"""

from __future__ import annotations

from fractions import Fraction

from .exactnum import format_rational
from .partitions import Partition
from . import series


class InterlacingError(ValueError):
    """Raised when minima/maxima fail to interlace strictly."""


class DiscreteMeasure:
    """Finitely supported signed measure with exact atom data.

    Atoms are (position, mass) pairs with strictly increasing positions.
    Positions/masses are Fractions on the exact path; floats are tolerated
    when ``exact`` is False (limit-shape numerics only).
    """

    __slots__ = ("atoms", "exact")

    def __init__(self, atoms, exact=True):
        atoms = [(pos, mass) for pos, mass in atoms]
        for k in range(1, len(atoms)):
            if not atoms[k - 1][0] < atoms[k][0]:
                raise ValueError("atom positions must be strictly increasing")
        self.atoms = atoms
        self.exact = exact

    def total_mass(self):
        return sum((m for _, m in self.atoms), Fraction(0) if self.exact else 0.0)

    def mean(self):
        return sum((p * m for p, m in self.atoms), Fraction(0) if self.exact else 0.0)

    def moment(self, ell: int):
        if ell < 0:
            raise ValueError("moment order must be nonnegative")
        return sum((m * p ** ell for p, m in self.atoms),
                   Fraction(0) if self.exact else 0.0)

    def is_probability(self) -> bool:
        return all(m >= 0 for _, m in self.atoms) and self.total_mass() == 1

    def to_json(self):
        if self.exact:
            return [{"pos": format_rational(p), "mass": format_rational(m)}
                    for p, m in self.atoms]
        return [{"pos": float(p), "mass": float(m)} for p, m in self.atoms]

    @staticmethod
    def from_json(data):
        from .exactnum import parse_rational
        return DiscreteMeasure(
            [(parse_rational(rec["pos"]), parse_rational(rec["mass"])) for rec in data])

    def __repr__(self):
        inner = " + ".join(f"{m}*d[{p}]" for p, m in self.atoms)
        return f"DiscreteMeasure({inner})"


class StaircaseShape:
    """Piecewise-slope +-1 profile given by its interlacing local minima and
    maxima (both ascending).  ``orientation`` is "finite" (diagram profile,
    one more minimum than maxima), "extends_to_-inf" or "extends_to_+inf"
    (truncated semi-infinite staircases with equally many of each)."""

    __slots__ = ("minima", "maxima", "orientation")

    def __init__(self, minima, maxima, orientation="finite"):
        minima = list(minima)
        maxima = list(maxima)
        if orientation not in ("finite", "extends_to_-inf", "extends_to_+inf"):
            raise ValueError(f"bad orientation {orientation!r}")
        merged = self._merged(minima, maxima, orientation)
        for k in range(1, len(merged)):
            if not merged[k - 1] < merged[k]:
                raise InterlacingError(
                    f"extrema do not interlace strictly: {minima} / {maxima}")
        if orientation == "finite" and len(minima) != len(maxima) + 1:
            raise InterlacingError("finite profile needs k+1 minima for k maxima")
        if orientation != "finite" and len(minima) != len(maxima):
            raise InterlacingError("truncated staircase needs equal counts")
        self.minima = minima
        self.maxima = maxima
        self.orientation = orientation

    @staticmethod
    def _merged(minima, maxima, orientation):
        if orientation == "finite":
            out = []
            for k, x in enumerate(minima):
                out.append(x)
                if k < len(maxima):
                    out.append(maxima[k])
            return out
        if orientation == "extends_to_-inf":
            out = []
            for y, x in zip(maxima, minima):
                out.extend([y, x])
            return out
        out = []
        for x, y in zip(minima, maxima):
            out.extend([x, y])
        return out

    def reflect(self) -> "StaircaseShape":
        flip = {"finite": "finite",
                "extends_to_-inf": "extends_to_+inf",
                "extends_to_+inf": "extends_to_-inf"}
        return StaircaseShape([-x for x in reversed(self.minima)],
                              [-y for y in reversed(self.maxima)],
                              flip[self.orientation])

    def corners(self):
        """All corners as (u, omega(u), kind) ascending in u."""
        out = [(x, self.evaluate(x), "min") for x in self.minima]
        out += [(y, self.evaluate(y), "max") for y in self.maxima]
        out.sort(key=lambda t: t[0])
        return out

    def evaluate(self, u):
        """Profile value omega(u), anchored on the diagram-like side where
        omega coincides with |u|."""
        if self.orientation == "extends_to_+inf":
            # anchored on the left: omega(u) = -u below the smallest corner
            anchor = self.minima[0]
            val = -anchor
            if u <= anchor:
                return -u
            corners = self._merged(self.minima, self.maxima, self.orientation)
        else:
            # finite profiles and staircases extending to -inf anchor right
            anchor = self.minima[-1]
            val = anchor
            if u >= anchor:
                return u
            corners = list(reversed(
                self._merged(self.minima, self.maxima, self.orientation)))
            # walk left: distances enter with flipped slope signs
            pos = anchor
            slope = -1  # to the left of a minimum omega rises as u decreases
            for c in corners[1:]:
                if u >= c:
                    return val + slope * (u - pos)
                val += slope * (c - pos)
                pos = c
                slope = -slope
            return val + slope * (u - pos)
        # walking right from the left anchor
        pos = anchor
        slope = 1
        for c in corners[1:]:
            if u <= c:
                return val + slope * (u - pos)
            val += slope * (c - pos)
            pos = c
            slope = -slope
        return val + slope * (u - pos)

    def __repr__(self):
        return (f"StaircaseShape(minima={self.minima}, maxima={self.maxima}, "
                f"orientation={self.orientation!r})")


class AnisotropicDiagram:
    """A partition whose boxes are stretched to width w and height h."""

    __slots__ = ("base", "w", "h")

    def __init__(self, base: Partition, w, h):
        w, h = Fraction(w), Fraction(h)
        if w <= 0 or h <= 0:
            raise ValueError("box dimensions must be positive")
        self.base = base
        self.w = w
        self.h = h

    def area(self) -> Fraction:
        return self.w * self.h * self.base.size()

    def profile(self) -> StaircaseShape:
        return profile(self)

    def transition_measure(self) -> DiscreteMeasure:
        return transition_measure(self.profile())

    def __repr__(self):
        return f"AnisotropicDiagram({self.base!r}, w={self.w}, h={self.h})"


def profile(diagram: AnisotropicDiagram) -> StaircaseShape:
    """Local minima/maxima of the boundary of the stretched diagram in
    Russian coordinates u = x - y.  The empty diagram has one minimum at 0."""
    lam = diagram.base
    w, h = diagram.w, diagram.h
    if not lam.parts:
        return StaircaseShape([Fraction(0)], [], "finite")
    values = []   # distinct part values, descending
    counts = []
    for p in lam.parts:
        if values and values[-1] == p:
            counts[-1] += 1
        else:
            values.append(p)
            counts.append(1)
    cum = [0]
    for c in counts:
        cum.append(cum[-1] + c)
    m = len(values)
    minima = [w * values[k] - h * cum[k] for k in range(m)] + [-h * Fraction(cum[m])]
    maxima = [w * values[k] - h * cum[k + 1] for k in range(m)]
    minima.reverse()
    maxima.reverse()
    return StaircaseShape(minima, maxima, "finite")


def transition_measure(shape: StaircaseShape) -> DiscreteMeasure:
    """Exact partial-fraction decomposition of prod(z - y_j)/prod(z - x_i):
    the atom at x_i has mass prod_j (x_i - y_j) / prod_{j != i} (x_i - x_j)."""
    if shape.orientation != "finite":
        raise ValueError("exact transition measures need a finite profile")
    xs, ys = shape.minima, shape.maxima
    atoms = []
    for i, x in enumerate(xs):
        num = Fraction(1)
        for y in ys:
            num *= x - y
        den = Fraction(1)
        for j, x2 in enumerate(xs):
            if j != i:
                den *= x - x2
        atoms.append((x, num / den))
    return DiscreteMeasure(atoms)


_KINDS = ("moment", "boolean", "free", "fundamental")


def observables(measure: DiscreteMeasure, kind: str, ell: int):
    """The ell-th observable of an exact measure: raw moment, Boolean
    cumulant, free cumulant, or fundamental shape functional."""
    if kind not in _KINDS:
        raise ValueError(f"kind must be one of {_KINDS}")
    if ell < 1:
        raise ValueError("ell must be >= 1")
    moments = [measure.moment(k) for k in range(1, ell + 1)]
    if kind == "moment":
        return moments[-1]
    if kind == "boolean":
        return series.boolean_from_moments(moments)[-1]
    if kind == "fundamental":
        return series.shape_functionals_from_moments(moments)[-1]
    return series.free_from_moments(moments)[-1]


def observable_family(measure: DiscreteMeasure, kind: str, ell: int):
    """All observables of the given kind up to order ell (cheaper than
    calling :func:`observables` per order)."""
    if kind not in _KINDS:
        raise ValueError(f"kind must be one of {_KINDS}")
    moments = [measure.moment(k) for k in range(1, ell + 1)]
    if kind == "moment":
        return moments
    if kind == "boolean":
        return series.boolean_from_moments(moments)
    if kind == "fundamental":
        return series.shape_functionals_from_moments(moments)
    return series.free_from_moments(moments)


def rescale_observable(x, ell: int, c):
    """Scaling rule X_ell(T_{cw,ch} lambda) = c^ell X_ell(T_{w,h} lambda)."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    c = Fraction(c)
    if c <= 0:
        raise ValueError("scale factor must be positive")
    return c ** ell * x
