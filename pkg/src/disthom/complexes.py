"""Multi-term chain complexes of a multi-operation magma, in explicit bases.

Chains in degree n are spanned by (n+1)-tuples of elements.  The boundary is
the alternating sum of face maps, each face being the scalar-weighted sum of
the per-operation faces

    d_0(x_0,...,x_n) = (x_1,...,x_n)
    d_i(x_0,...,x_n) = (x_0*x_i, ..., x_{i-1}*x_i, x_{i+1}, ..., x_n).

Subquotients are realised by basis selection: sub-parts keep a subset of the
tuple basis (and the assembly verifies the boundary stays inside), quotient
parts project by dropping excluded basis tuples.  Bases are ordered
lexicographically, so matrices are reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd

import numpy as np

from .intmatrix import IntMatrix
from .magma import AxiomError, BudgetError, StructureError

DEFAULT_BASIS_BUDGET = 1 << 24


class ScalarVector(tuple):
    """Integer scalars, one per operation of the magma.

    For the four-operation lattice convention (left, join, meet, right) =
    (a, b, c, d) the derived quantities g = gcd(a+b, a+c), g3 = gcd(a, b, c)
    and g4 = gcd(a, b, c, d) are available; gcd of an all-zero set is 0.
    """

    def __new__(cls, values):
        return super().__new__(cls, (int(v) for v in values))

    @property
    def total(self):
        return sum(self)

    def _need4(self):
        if len(self) != 4:
            raise StructureError(
                "the (a, b, c, d) convention needs exactly four scalars")

    @property
    def g(self):
        self._need4()
        a, b, c, _ = self
        return gcd(a + b, a + c)

    @property
    def g3(self):
        self._need4()
        a, b, c, _ = self
        return gcd(gcd(a, b), c)

    @property
    def g4(self):
        self._need4()
        a, b, c, d = self
        return gcd(gcd(a, b), gcd(c, d))


@dataclass(frozen=True)
class Part:
    """Selector for a subquotient of the chain complex.

    kinds: full | reduced | init_deg | init_norm | degenerate | normalized
    | filtration.  ``init_deg`` is the subcomplex of the reduced complex
    spanned by tuples whose first two entries agree (the image of the 0-th
    degeneracy); ``init_norm`` is its quotient (first two entries differ).
    """

    kind: str
    basepoint: int | None = None
    level: int | None = None
    augmented: bool = False

    def __str__(self):
        bits = [self.kind]
        if self.basepoint is not None:
            bits.append(f"t={self.basepoint}")
        if self.level is not None:
            bits.append(f"p={self.level}")
        if self.augmented:
            bits.append("augmented")
        return ":".join(bits)


FULL = Part("full")
DEGENERATE = Part("degenerate")
NORMALIZED = Part("normalized")


def full_part(augmented=False):
    return Part("full", augmented=augmented)


def reduced_part(basepoint):
    return Part("reduced", basepoint=basepoint)


def init_deg_part(basepoint):
    return Part("init_deg", basepoint=basepoint)


def init_norm_part(basepoint):
    return Part("init_norm", basepoint=basepoint)


def filtration_part(level):
    if level < 0:
        raise StructureError("filtration level must be >= 0")
    return Part("filtration", level=level)


_KIND_ALIASES = {
    "full": "full", "c": "full",
    "reduced": "reduced",
    "f": "init_deg", "init_deg": "init_deg", "initdeg": "init_deg",
    "cf": "init_norm", "init_norm": "init_norm", "initnorm": "init_norm",
    "degenerate": "degenerate", "d": "degenerate",
    "normalized": "normalized", "n": "normalized",
}


def parse_part(text, basepoint=None, augmented=False):
    """Parse a CLI part name (full, reduced, F, CF, degenerate, normalized,
    filtration:p)."""
    text = text.strip().lower()
    if text.startswith("filtration"):
        _, _, level = text.partition(":")
        if not level:
            raise StructureError("filtration part needs a level, e.g. filtration:1")
        return filtration_part(int(level))
    kind = _KIND_ALIASES.get(text)
    if kind is None:
        raise StructureError(f"unknown part {text!r}")
    return Part(kind, basepoint=basepoint, augmented=augmented)


def default_basepoint(m):
    pts = m.one_point_submagmas()
    if not pts:
        raise AxiomError("no element generates a one-point submagma")
    return pts[0]


def validate_part(m, part):
    """Check the part makes sense for this magma; returns a completed Part."""
    kind = part.kind
    if kind not in {"full", "reduced", "init_deg", "init_norm", "degenerate",
                    "normalized", "filtration"}:
        raise StructureError(f"unknown part kind {part.kind!r}")
    if part.augmented and kind != "full":
        raise StructureError("the augmented complex is only defined for the "
                             "full part")
    if not m.report.is_multishelf:
        raise AxiomError("the operations do not form a distributive set")
    if kind in {"init_deg", "init_norm", "degenerate", "normalized",
                "filtration"}:
        if not m.report.is_multispindle:
            raise AxiomError(f"part {kind} needs idempotent operations")
    if kind in {"reduced", "init_deg", "init_norm"}:
        t = part.basepoint
        if t is None:
            part = Part(kind, basepoint=default_basepoint(m))
        elif not (0 <= t < m.size):
            raise StructureError(f"basepoint {t} out of range")
        elif not all(op.table[t][t] == t for op in m.ops):
            raise AxiomError(f"basepoint {t} is not idempotent for every "
                             "operation")
    if kind == "filtration" and (part.level is None or part.level < 0):
        raise StructureError("filtration part needs a non-negative level")
    return part


def _check_budget(size, n, max_basis):
    if size ** (n + 1) > max_basis:
        raise BudgetError(
            f"degree {n} needs {size ** (n + 1)} basis tuples, over the "
            f"budget of {max_basis}")


def part_basis(m, part, n, max_basis=DEFAULT_BASIS_BUDGET):
    """The ordered tuple basis of the part in degree n (lexicographic)."""
    part = validate_part(m, part)
    if n < 0:
        return ()
    _check_budget(m.size, n, max_basis)
    rng = range(m.size)
    kind, t = part.kind, part.basepoint
    if kind == "full":
        return tuple(product(rng, repeat=n + 1))
    if kind == "reduced":
        skip = (t,) * (n + 1)
        return tuple(tup for tup in product(rng, repeat=n + 1) if tup != skip)
    if kind == "init_deg":
        if n == 0:
            return ()
        skip = (t,) * (n + 1)
        return tuple(tup for tup in product(rng, repeat=n + 1)
                     if tup[0] == tup[1] and tup != skip)
    if kind == "init_norm":
        if n == 0:
            return tuple((x,) for x in rng if x != t)
        return tuple(tup for tup in product(rng, repeat=n + 1)
                     if tup[0] != tup[1])
    if kind == "degenerate":
        return tuple(tup for tup in product(rng, repeat=n + 1)
                     if any(a == b for a, b in zip(tup, tup[1:])))
    if kind == "normalized":
        return tuple(tup for tup in product(rng, repeat=n + 1)
                     if all(a != b for a, b in zip(tup, tup[1:])))
    if kind == "filtration":
        p = part.level
        return tuple(tup for tup in product(rng, repeat=n + 1)
                     if any(tup[i] == tup[i + 1]
                            for i in range(min(p + 1, n))))
    raise StructureError(f"unknown part kind {kind!r}")


def part_dim(m, part, n, max_basis=DEFAULT_BASIS_BUDGET):
    return len(part_basis(m, part, n, max_basis))


_SUB_PARTS = {"init_deg", "degenerate", "filtration"}


class InternalInvariantViolation(AssertionError):
    """The boundary left a subcomplex basis; indicates a structural bug."""


def _face(table, tup, i):
    if i == 0:
        return tup[1:]
    xi = tup[i]
    row = table
    return tuple(row[x][xi] for x in tup[:i]) + tup[i + 1:]


def boundary_op_matrices(m, part, n, max_basis=DEFAULT_BASIS_BUDGET):
    """Per-operation boundary matrices on the chosen part in degree n.

    Entry [i][j] of the r-th matrix is the coefficient of the i-th basis
    tuple of degree n-1 in the single-operation boundary of the j-th basis
    tuple of degree n.  The scalar-weighted boundary is the scalar
    combination of these.
    """
    part = validate_part(m, part)
    src = part_basis(m, part, n, max_basis)
    tgt = part_basis(m, part, n - 1, max_basis)
    index = {tup: i for i, tup in enumerate(tgt)}
    sub = part.kind in _SUB_PARTS
    drop_all_t = part.kind in {"reduced", "init_deg"}
    skip = (part.basepoint,) * n if drop_all_t and n >= 1 else None
    mats = [np.zeros((len(tgt), len(src)), dtype=np.int64)
            for _ in m.ops]
    if n <= 0:
        return mats
    for r, op in enumerate(m.ops):
        table = op.table
        M = mats[r]
        for j, tup in enumerate(src):
            acc = {}
            sign = 1
            for i in range(n + 1):
                tgt_tup = _face(table, tup, i)
                acc[tgt_tup] = acc.get(tgt_tup, 0) + sign
                sign = -sign
            for tgt_tup, coeff in acc.items():
                if not coeff:
                    continue
                if tgt_tup == skip:
                    continue
                pos = index.get(tgt_tup)
                if pos is None:
                    if sub:
                        raise InternalInvariantViolation(
                            f"boundary of {tup} leaves the {part.kind} "
                            f"basis at {tgt_tup}")
                    continue
                M[pos, j] = coeff
    return mats


def boundary_matrix(m, scalars, n, part, max_basis=DEFAULT_BASIS_BUDGET):
    """Matrix of the degree-n multi-term boundary on the chosen part.

    With ``part.augmented`` the complex gains a rank-one degree -1 group; the
    degree-0 matrix is then the all-ones augmentation row and degree -1 is
    the zero map out of it.
    """
    part = validate_part(m, part)
    scalars = ScalarVector(scalars)
    if len(scalars) != len(m.ops):
        raise StructureError(
            f"{len(m.ops)} operations but {len(scalars)} scalars")
    if part.augmented:
        if n == -1:
            return IntMatrix(0, 1)
        if n == 0:
            dim = part_dim(m, part, 0, max_basis)
            return IntMatrix(1, dim, np.ones((1, dim), dtype=np.int64))
    if n <= 0:
        return IntMatrix(part_dim(m, part, n - 1, max_basis),
                         part_dim(m, part, n, max_basis))
    mats = boundary_op_matrices(m, part, n, max_basis)
    total = None
    for a, M in zip(scalars, mats):
        if a:
            total = M * a if total is None else total + M * a
    if total is None:
        total = np.zeros(mats[0].shape, dtype=np.int64)
    return IntMatrix(total.shape[0], total.shape[1], total)


def q_scale(matrices, q):
    """Scale every boundary matrix of a complex by q >= 1."""
    if q < 1:
        raise StructureError("q must be >= 1")
    return [M.scaled(q) for M in matrices]


# ---------------------------------------------------------------------------
# structural maps, used by the identity/property suites

def _project_map(m, part, images, n_src, n_tgt, max_basis):
    """Assemble a matrix from tuple-level images with part projection."""
    part = validate_part(m, part)
    src = part_basis(m, part, n_src, max_basis)
    tgt = part_basis(m, part, n_tgt, max_basis)
    index = {tup: i for i, tup in enumerate(tgt)}
    M = np.zeros((len(tgt), len(src)), dtype=np.int64)
    for j, tup in enumerate(src):
        for tgt_tup, coeff in images(tup):
            pos = index.get(tgt_tup)
            if pos is not None:
                M[pos, j] += coeff
    return IntMatrix(M.shape[0], M.shape[1], M)


def single_face_matrix(m, op_index, n, i, part=FULL,
                       max_basis=DEFAULT_BASIS_BUDGET):
    """Matrix of one face map d_i for one operation (no sign)."""
    table = m.ops[op_index].table
    if not 0 <= i <= n:
        raise StructureError(f"face index {i} out of range for degree {n}")
    return _project_map(m, part, lambda tup: [(_face(table, tup, i), 1)],
                        n, n - 1, max_basis)


def face_matrix(m, scalars, n, i, part=FULL, max_basis=DEFAULT_BASIS_BUDGET):
    """Matrix of the scalar-weighted face map d_i (no sign)."""
    scalars = ScalarVector(scalars)
    tables = [op.table for op in m.ops]

    def images(tup):
        return [(_face(t, tup, i), a) for t, a in zip(tables, scalars) if a]

    if not 0 <= i <= n:
        raise StructureError(f"face index {i} out of range for degree {n}")
    return _project_map(m, part, images, n, n - 1, max_basis)


def degeneracy_matrix(m, n, j, part=FULL, max_basis=DEFAULT_BASIS_BUDGET):
    """Matrix of the degeneracy s_j, doubling the j-th entry."""
    if not 0 <= j <= n:
        raise StructureError(f"degeneracy index {j} out of range")

    def images(tup):
        return [(tup[:j + 1] + tup[j:], 1)]

    return _project_map(m, part, images, n, n + 1, max_basis)


def sigma_matrix(m, n, basepoint, max_basis=DEFAULT_BASIS_BUDGET):
    """The signed degeneracy (-1)^(n+1) s_0 on the reduced complex."""
    part = reduced_part(basepoint)
    sign = (-1) ** (n + 1)

    def images(tup):
        return [((tup[0],) + tup, sign)]

    return _project_map(m, part, images, n, n + 1, max_basis)


def pi_matrix(m, n, basepoint, max_basis=DEFAULT_BASIS_BUDGET):
    """The signed front projection (-1)^n d_0 on the reduced complex."""
    part = reduced_part(basepoint)
    sign = (-1) ** n

    def images(tup):
        return [(tup[1:], sign)]

    return _project_map(m, part, images, n, n - 1, max_basis)


def append_homotopy_matrix(m, n, y, basepoint, max_basis=DEFAULT_BASIS_BUDGET):
    """The signed append-an-element homotopy (-1)^(n+1) (x_0,...,x_n,y)."""
    part = reduced_part(basepoint)
    sign = (-1) ** (n + 1)

    def images(tup):
        return [(tup + (y,), sign)]

    return _project_map(m, part, images, n, n + 1, max_basis)


def inner_translation_matrix(m, op_index, y, n, part,
                             max_basis=DEFAULT_BASIS_BUDGET):
    """Chain map induced by the inner endomorphism z -> z * y, coordinatewise."""
    table = m.ops[op_index].table

    def images(tup):
        return [(tuple(table[x][y] for x in tup), 1)]

    return _project_map(m, part, images, n, n, max_basis)


def alpha_matrix(m, n, max_basis=DEFAULT_BASIS_BUDGET):
    """The consecutive-difference expansion on the full complex.

    alpha(x_0, ..., x_n) expands multilinearly over the choices
    slot i -> x_i (sign +) or x_{i-1} (sign -); it kills every tuple with an
    adjacent repeat and splits the normalized quotient.
    """

    def images(tup):
        n_ = len(tup) - 1
        out = []
        for mask in range(1 << n_):
            sign = 1
            term = [tup[0]]
            for i in range(1, n_ + 1):
                if (mask >> (i - 1)) & 1:
                    term.append(tup[i - 1])
                    sign = -sign
                else:
                    term.append(tup[i])
            out.append((tuple(term), sign))
        return out

    return _project_map(m, FULL, images, n, n, max_basis)


# ---------------------------------------------------------------------------
# weak simplicial module axioms

@dataclass(frozen=True)
class WeakSimplicialReport:
    ok: bool
    violations: tuple          # (axiom, degree, indices, witness basis tuple)
    dd_zero: tuple             # per-degree flags for the square-zero check


def verify_weak_simplicial(m, scalars, n_max, max_basis=DEFAULT_BASIS_BUDGET):
    """Check SM1, SM2, SM3 and the weak exchange d_i s_i = d_{i+1} s_i.

    All identities are verified as matrix identities on the full complex,
    degree by degree up to n_max; the square-zero property of the boundary
    is reported alongside.  This is a total reporting function: on a
    structure that is not a multispindle the report simply lists the
    violated axioms with witness tuples (the exchange axiom needs
    idempotency on elements, so a shelf that is not a spindle fails it).
    """
    scalars = ScalarVector(scalars)
    violations = []
    basis = {n: part_basis(m, FULL, n, max_basis) for n in range(n_max + 3)}

    def face(n, i):
        return face_matrix(m, scalars, n, i, FULL, max_basis).to_numpy()

    def deg(n, j):
        return degeneracy_matrix(m, n, j, FULL, max_basis).to_numpy()

    def witness(delta, n):
        col = next(int(c) for c in np.nonzero(delta.any(axis=0))[0])
        return basis[n][col]

    for n in range(n_max + 1):
        # SM1 on sources of degree n+1 (so both composites land in degree n-1)
        for j in range(n + 2):
            for i in range(j):
                if i > n or j - 1 > n:
                    continue
                lhs = face(n, i) @ face(n + 1, j)
                rhs = face(n, j - 1) @ face(n + 1, i)
                if not np.array_equal(lhs, rhs):
                    violations.append(("SM1", n + 1, (i, j),
                                       witness(lhs - rhs, n + 1)))
        # SM2 on sources of degree n
        for j in range(n + 1):
            for i in range(j + 1):
                lhs = deg(n + 1, i) @ deg(n, j)
                rhs = deg(n + 1, j + 1) @ deg(n, i)
                if not np.array_equal(lhs, rhs):
                    violations.append(("SM2", n, (i, j),
                                       witness(lhs - rhs, n)))
        # SM3 and the weak exchange on sources of degree n
        for j in range(n + 1):
            for i in range(n + 2):
                lhs = face(n + 1, i) @ deg(n, j)
                if i < j:
                    rhs = deg(n - 1, j - 1) @ face(n, i)
                elif i > j + 1:
                    rhs = deg(n - 1, j) @ face(n, i - 1)
                else:
                    continue
                if not np.array_equal(lhs, rhs):
                    violations.append(("SM3", n, (i, j),
                                       witness(lhs - rhs, n)))
            lhs = face(n + 1, j) @ deg(n, j)
            rhs = face(n + 1, j + 1) @ deg(n, j)
            if not np.array_equal(lhs, rhs):
                violations.append(("W4", n, (j,), witness(lhs - rhs, n)))

    dd = []
    for n in range(n_max + 1):
        d_n = boundary_matrix(m, scalars, n, FULL, max_basis).to_numpy()
        d_n1 = boundary_matrix(m, scalars, n + 1, FULL, max_basis).to_numpy()
        dd.append(bool(not (d_n @ d_n1).any()))
    return WeakSimplicialReport(ok=not violations,
                                violations=tuple(violations),
                                dd_zero=tuple(dd))
