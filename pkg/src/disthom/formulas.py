"""Closed-form homology of finite distributive lattices and unital spindles.

Every function here evaluates an exact formula in the parameters
(size, irreducible count, scalars, degree); no matrices are involved.  The
scalar conventions:

* lattices use four scalars (a, b, c, d) for (left, join, meet, right), with
  S = a+b+c+d, g = gcd(a+b, a+c), g3 = gcd(a, b, c), g4 = gcd(a, b, c, d);
* spindles with a unit and a projector use three scalars (a, b, d) for
  (left, op, right), with g = gcd(a, b) and S = a+b+d.

Cyclic factors Z_1 collapse to the trivial group and Z_0 to Z during
evaluation.  A formula whose exponent comes out negative raises instead of
clamping; that would indicate a transcription bug, not an input error.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .abgroups import FinAbGroup, TRIVIAL, group_sum
from .complexes import ScalarVector
from .magma import StructureError


def parity(n):
    """1 on odd, 0 on even."""
    return n & 1


def seq_r(n, k):
    """(k^(n+1) + (-1)^n) / (1 + k); satisfies r(n+2) = r(n+1) + k*r(n)."""
    if n < 0 or k < 1:
        raise StructureError("need n >= 0 and k >= 1")
    num = k ** (n + 1) + (-1) ** n
    assert num % (k + 1) == 0
    return num // (k + 1)


def seq_s(n, irr):
    """irr * (r(n, 2) - parity(n + 1))."""
    return irr * (seq_r(n, 2) - parity(n + 1))


def _pile(free, *torsion_pairs):
    """Assemble Z^free plus Z_modulus^exponent factors, collapsing trivia."""
    factors = []
    for modulus, exponent in torsion_pairs:
        if exponent < 0:
            raise StructureError(
                f"formula produced a negative exponent {exponent}")
        if exponent == 0:
            continue
        if modulus == 0:
            free += exponent
        else:
            factors.extend([abs(modulus)] * exponent)
    return FinAbGroup.from_factors(free, factors)


def hom_point(total, n, augmented=False):
    """Homology of a one-point structure; ``total`` is the scalar sum.

    The augmented variant differs in degree 0 only, where the single free
    summand is dropped.
    """
    if n < 0:
        raise StructureError("degree must be >= 0")
    if total == 0:
        g = FinAbGroup(1)
    elif n == 0:
        g = FinAbGroup(1)
    elif n % 2 == 0:
        g = TRIVIAL
    else:
        g = _pile(0, (total, 1))
    if augmented and n == 0:
        g = FinAbGroup(g.free_rank - 1, g.torsion)
    return g


@dataclass(frozen=True)
class LatticeParams:
    """Size, non-minimal irreducible count and scalars of a lattice."""

    size: int
    irreducibles: int
    scalars: ScalarVector

    def __post_init__(self):
        object.__setattr__(self, "scalars", ScalarVector(self.scalars))
        if len(self.scalars) != 4:
            raise StructureError("lattice formulas need four scalars")
        if self.size < 1:
            raise StructureError("size must be positive")
        if self.size > 1 and not 1 <= self.irreducibles <= self.size - 1:
            raise StructureError(
                f"irreducible count {self.irreducibles} impossible for "
                f"size {self.size}")

    @property
    def total(self):
        return self.scalars.total

    @property
    def g(self):
        return self.scalars.g

    @property
    def g3(self):
        return self.scalars.g3

    @property
    def g4(self):
        return self.scalars.g4


def lattice_params(info, scalars):
    """LatticeParams from an analyzed lattice (see lattices.analyze_lattice)."""
    if not info.is_distributive:
        raise StructureError("closed forms require a distributive lattice")
    return LatticeParams(info.size, info.irreducible_count,
                         ScalarVector(scalars))


def hom_b1_reduced(a, b, c, d, n):
    """Reduced homology of the two-element lattice, by the four-case formula."""
    if n < 0:
        raise StructureError("degree must be >= 0")
    sv = ScalarVector((a, b, c, d))
    g, total = sv.g, sv.total
    r = seq_r(n, 2)
    p1 = parity(n + 1)
    if total == 0 and g == 0:
        return _pile(2 ** (n + 1) - 1)
    if total == 0:
        return _pile(0, (g, 2 * r - p1))
    if g == 0:
        return _pile(2 ** n, (total, r - p1))
    return _pile(0, (g, r), (gcd(g, total), r - p1))


def hom_lattice(params, n, part="reduced"):
    """Closed-form homology of a finite distributive lattice.

    ``part`` is one of init_norm (alias CF), init_deg (alias F), reduced,
    full.  The reduced group is the sum of the two pieces; the full group
    additionally gains the one-point homology.
    """
    if n < 0:
        raise StructureError("degree must be >= 0")
    key = {"cf": "init_norm", "f": "init_deg"}.get(
        str(part).lower(), str(part).lower())
    a, b, c, d = params.scalars
    size, irr = params.size, params.irreducibles
    g, g3, g4, total = params.g, params.g3, params.g4, params.total
    r_big = seq_r(n, size) if size >= 1 else 0
    r2 = seq_r(n, 2)
    s_n = seq_s(n, irr)
    p1 = parity(n + 1)

    if key == "init_norm":
        if g == 0 and a == 0:
            return _pile(size ** n * (size - 1))
        if g == 0:
            return _pile(irr * 2 ** n,
                         (g3, (size - 1) * r_big - irr * r2))
        return _pile(0, (g, irr * r2),
                     (g3, (size - 1) * r_big - irr * r2))
    if key == "init_deg":
        if total == 0 and g == 0 and a == 0:
            return _pile(size ** n - 1)
        if total != 0 and g == 0 and a == 0:
            return _pile(0, (g4, r_big - p1))
        if total == 0 and g == 0:
            return _pile(irr * (2 ** n - 1), (g4, r_big - s_n - p1))
        return _pile(0, (gcd(g, total), s_n), (g4, r_big - s_n - p1))
    if key == "reduced":
        return group_sum(hom_lattice(params, n, "init_norm"),
                         hom_lattice(params, n, "init_deg"))
    if key == "full":
        return group_sum(hom_lattice(params, n, "reduced"),
                         hom_point(total, n))
    raise StructureError(f"unknown part {part!r} for the closed forms")


def hom_normalized_lattice(params, n):
    """Closed-form normalized homology of a finite distributive lattice."""
    if n < 0:
        raise StructureError("degree must be >= 0")
    a = params.scalars[0]
    size, irr = params.size, params.irreducibles
    g, g3 = params.g, params.g3
    if g == 0 and a == 0:
        return _pile(size * (size - 1) ** n)
    if g == 0:
        if n == 0:
            return _pile(irr + 1, (a, size - 1 - irr))
        return _pile(2 * irr, (a, (size - 1) ** (n + 1) - irr))
    if n == 0:
        return _pile(1, (g, irr), (g3, size - 1 - irr))
    return _pile(0, (g, irr), (g3, (size - 1) ** (n + 1) - irr))


def rank_boolean_rows(a, b, c, irr, n):
    """Rank of the degree-n homology of the rank-``irr`` Boolean lattice for
    scalars (a, b, c, 0), by the four-case count.

    The count matches the rank of the unreduced homology; the delta term is
    the degree-0 contribution of the one-point factor.
    """
    if n < 0 or irr < 0:
        raise StructureError("need n >= 0 and a non-negative rank")
    delta = 1 if n == 0 else 0
    if a == 0 and b == 0 and c == 0:
        return 2 ** (irr * (n + 1))
    if a != 0 and b == -a and c == -a:
        return irr * 2 ** n + delta
    if a + b + c == 0 and a != 0:
        return 1
    return delta


# spec name for the same corollary
rank_boolean_augmented = rank_boolean_rows


def hom_unital_spindle(size, a, b, d, n):
    """Reduced homology of a spindle with a right unit and a right projector.

    Three-term scalars (a, b, d) for (left, op, right); g = gcd(a, b) and
    S = a+b+d.
    """
    if n < 0 or size < 1:
        raise StructureError("need n >= 0 and a positive size")
    g = gcd(a, b)
    total = a + b + d
    r = seq_r(n, size)
    p1 = parity(n + 1)
    if total == 0 and g == 0:
        return _pile(size ** (n + 1) - 1)
    if g == 0:
        return _pile(size ** n * (size - 1), (total, r - p1))
    if total == 0:
        # both torsion moduli coincide here (gcd(a, b, d) == g), so the
        # two-piece split collapses to a single power of Z_g
        return _pile(0, (g, size * r - p1))
    return _pile(0, (g, (size - 1) * r), (gcd(g, d), r - p1))
