"""Order-theoretic analysis: semilattices, lattices, skew lattices.

Everything is verified from the tables; nothing is trusted from labels.  The
induced order of a semilattice operation is x <= y iff x * y == y (so a join
table yields the usual order, a meet table yields the reversed one).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .magma import (AxiomError, MultiMagma, OperationTable, StructureError,
                    left_projection, right_projection)


class Poset:
    """A verified finite partial order; ``leq[x][y]`` means x <= y."""

    __slots__ = ("size", "leq")

    def __init__(self, leq):
        rows = tuple(tuple(bool(v) for v in row) for row in leq)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise StructureError("leq relation must be square")
        for x in range(n):
            if not rows[x][x]:
                raise AxiomError(f"order not reflexive at {x}")
        for x in range(n):
            for y in range(n):
                if x != y and rows[x][y] and rows[y][x]:
                    raise AxiomError(f"order not antisymmetric at ({x},{y})")
        for x in range(n):
            for y in range(n):
                if not rows[x][y]:
                    continue
                for z in range(n):
                    if rows[y][z] and not rows[x][z]:
                        raise AxiomError(
                            f"order not transitive at ({x},{y},{z})")
        self.size = n
        self.leq = rows

    def covers(self):
        """Pairs (x, y) with y covering x (no element strictly between)."""
        n = self.size
        out = []
        for x in range(n):
            for y in range(n):
                if x == y or not self.leq[x][y]:
                    continue
                if any(self.leq[x][z] and self.leq[z][y]
                       for z in range(n) if z != x and z != y):
                    continue
                out.append((x, y))
        return tuple(out)

    def minimal_elements(self):
        return tuple(x for x in range(self.size)
                     if not any(self.leq[y][x] for y in range(self.size)
                                if y != x))

    def maximal_elements(self):
        return tuple(x for x in range(self.size)
                     if not any(self.leq[x][y] for y in range(self.size)
                                if y != x))

    def bottom(self):
        lows = [x for x in range(self.size)
                if all(self.leq[x][y] for y in range(self.size))]
        return lows[0] if lows else None

    def top(self):
        highs = [x for x in range(self.size)
                 if all(self.leq[y][x] for y in range(self.size))]
        return highs[0] if highs else None

    def longest_chain_length(self):
        """Number of edges on a longest chain."""
        n = self.size
        covers = self.covers()
        succ = {x: [] for x in range(n)}
        for x, y in covers:
            succ[x].append(y)
        best = {}

        def depth(x):
            if x not in best:
                best[x] = 1 + max((depth(y) for y in succ[x]), default=0)
            return best[x]

        return max(depth(x) for x in range(n)) - 1 if n else 0


def hasse_text(poset):
    """Cover relations as an edge list, one ``x < y`` per line."""
    lines = [f"elements {poset.size}"]
    lines += [f"{x} < {y}" for x, y in poset.covers()]
    return "\n".join(lines)


def analyze_semilattice(op):
    """Verify the semilattice axioms and return the induced order.

    Raises AxiomError naming the failing axiom and a witness pair/triple.
    """
    if not isinstance(op, OperationTable):
        op = OperationTable(op)
    t = op.table
    n = op.size
    for x in range(n):
        if t[x][x] != x:
            raise AxiomError(f"not idempotent: {x}*{x} = {t[x][x]}")
    for x in range(n):
        for y in range(n):
            if t[x][y] != t[y][x]:
                raise AxiomError(f"not commutative at ({x},{y})")
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if t[t[x][y]][z] != t[x][t[y][z]]:
                    raise AxiomError(f"not associative at ({x},{y},{z})")
    leq = [[t[x][y] == y for y in range(n)] for x in range(n)]
    return Poset(leq)


@dataclass(frozen=True)
class LatticeInfo:
    """Analysis of a verified lattice given by join and meet tables."""

    join: OperationTable
    meet: OperationTable
    poset: Poset
    join_irreducibles: tuple     # non-minimal ones only
    max_chain_length: int        # edges on a longest bottom-to-top chain
    bottom: int
    top: int
    is_distributive: bool
    is_chain: bool

    @property
    def size(self):
        return self.poset.size

    @property
    def irreducible_count(self):
        return len(self.join_irreducibles)

    def principal_ideal(self, x):
        """All meets with x; the elements below x."""
        t = self.meet.table
        return tuple(sorted({t[y][x] for y in range(self.size)}))

    def principal_filter(self, x):
        """All joins with x; the elements above x."""
        t = self.join.table
        return tuple(sorted({t[y][x] for y in range(self.size)}))


def analyze_lattice(join, meet):
    """Verify every lattice axiom and compute the standard invariants."""
    if not isinstance(join, OperationTable):
        join = OperationTable(join)
    if not isinstance(meet, OperationTable):
        meet = OperationTable(meet)
    if join.size != meet.size:
        raise StructureError("join and meet tables must share a size")
    poset = analyze_semilattice(join)
    meet_poset = analyze_semilattice(meet)
    n = join.size
    tj, tm = join.table, meet.table
    for x in range(n):
        for y in range(n):
            if tm[tj[x][y]][y] != y:
                raise AxiomError(f"absorption (x v y) ^ y = y fails at ({x},{y})")
            if tj[tm[x][y]][y] != y:
                raise AxiomError(f"absorption (x ^ y) v y = y fails at ({x},{y})")
    for x in range(n):
        for y in range(n):
            if poset.leq[x][y] != meet_poset.leq[y][x]:
                raise AxiomError(f"join/meet orders disagree at ({x},{y})")
    bottom, top = poset.bottom(), poset.top()
    if bottom is None or top is None:
        raise AxiomError("finite lattice must have bottom and top")
    irr = []
    for x in range(n):
        if x == bottom:
            continue
        if all(x in (a, b) for a in range(n) for b in range(n)
               if tj[a][b] == x):
            irr.append(x)
    distributive = all(
        tm[x][tj[y][z]] == tj[tm[x][y]][tm[x][z]]
        for x in range(n) for y in range(n) for z in range(n))
    is_chain = all(poset.leq[x][y] or poset.leq[y][x]
                   for x in range(n) for y in range(n))
    return LatticeInfo(
        join=join, meet=meet, poset=poset,
        join_irreducibles=tuple(irr),
        max_chain_length=poset.longest_chain_length(),
        bottom=bottom, top=top,
        is_distributive=distributive, is_chain=is_chain)


# ---------------------------------------------------------------------------
# standard constructions; lattices come with the four-operation convention
# (left projection, join, meet, right projection)

_LATTICE_LABELS = ("left", "join", "meet", "right")


def _lattice_magma(join_table, meet_table):
    n = len(join_table)
    return MultiMagma(
        [left_projection(n).table, join_table, meet_table,
         right_projection(n).table],
        labels=_LATTICE_LABELS)


def boolean_algebra(n):
    """The lattice of subsets of an n-element set; elements are bitmasks."""
    if n < 0:
        raise StructureError("n must be >= 0")
    size = 1 << n
    join = [[x | y for y in range(size)] for x in range(size)]
    meet = [[x & y for y in range(size)] for x in range(size)]
    return _lattice_magma(join, meet)


def chain_lattice(n):
    """The n-element chain 0 < 1 < ... < n-1."""
    if n < 1:
        raise StructureError("a chain needs at least one element")
    join = [[max(x, y) for y in range(n)] for x in range(n)]
    meet = [[min(x, y) for y in range(n)] for x in range(n)]
    return _lattice_magma(join, meet)


def lattice_ops(m):
    """Pick the essential (join, meet) pair out of a lattice magma.

    Trivial projections at the ends of the operation list are skipped.  The
    first essential operation is taken as the join; which of the two plays
    that role is pure convention (the other choice gives the dual lattice).
    """
    ops = [op for op in m.ops
           if not op.is_left_projection() and not op.is_right_projection()]
    if len(ops) != 2:
        if len(m.ops) == 2:
            ops = list(m.ops)
        else:
            raise StructureError(
                "expected a lattice magma with two essential operations")
    return ops[0], ops[1]


def product_lattice(m1, m2):
    """Componentwise product of two lattice magmas."""
    j1, me1 = lattice_ops(m1)
    j2, me2 = lattice_ops(m2)
    n1, n2 = j1.size, j2.size
    size = n1 * n2

    def idx(x1, x2):
        return x1 * n2 + x2

    join = [[0] * size for _ in range(size)]
    meet = [[0] * size for _ in range(size)]
    for x1, x2, y1, y2 in product(range(n1), range(n2), range(n1), range(n2)):
        x, y = idx(x1, x2), idx(y1, y2)
        join[x][y] = idx(j1.table[x1][y1], j2.table[x2][y2])
        meet[x][y] = idx(me1.table[x1][y1], me2.table[x2][y2])
    return _lattice_magma(join, meet)


def n5_lattice():
    """The pentagon: the smallest non-distributive, non-modular lattice.

    Elements: 0 = bottom, 4 = top, with 0 < 1 < 3 < 4 and 0 < 2 < 4.
    """
    leq_pairs = {(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (3, 4),
                 (2, 4)}
    n = 5
    leq = [[x == y or (x, y) in leq_pairs for y in range(n)] for x in range(n)]
    join = [[0] * n for _ in range(n)]
    meet = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            ups = [z for z in range(n) if leq[x][z] and leq[y][z]]
            join[x][y] = next(z for z in ups if all(leq[z][w] for w in ups))
            downs = [z for z in range(n) if leq[z][x] and leq[z][y]]
            meet[x][y] = next(z for z in downs
                              if all(leq[w][z] for w in downs))
    return _lattice_magma(join, meet)


def b1k(k):
    """The smallest unital generalized lattice with k operations.

    Carrier {u_0, ..., u_{k-1}}; x *s u_s = x and x *s u_j = u_j for j != s.
    For k = 2 this is the two-element lattice in disguise.
    """
    if k < 2:
        raise StructureError("k must be >= 2")
    tables = []
    for s in range(k):
        tables.append([[x if y == s else y for y in range(k)]
                       for x in range(k)])
    return MultiMagma(tables, labels=[f"op{s}" for s in range(k)])


def build_standard(spec):
    """Build a named standard structure from a short spec string.

    Accepted forms: ``boolean:N``, ``chain:N``, ``n5``, ``b1k:K`` and
    ``product:<spec>,<spec>`` (specs without commas inside).
    """
    spec = spec.strip()
    if spec == "n5":
        return n5_lattice()
    head, _, rest = spec.partition(":")
    if head == "boolean":
        return boolean_algebra(int(rest))
    if head == "chain":
        return chain_lattice(int(rest))
    if head == "b1k":
        return b1k(int(rest))
    if head == "product":
        left, _, right = rest.partition(",")
        return product_lattice(build_standard(left), build_standard(right))
    raise StructureError(f"unknown standard structure {spec!r}")


def dual_pair(m):
    """Swap the two essential operations (join <-> meet duality).

    For a 4-operation lattice magma the outer projections stay in place; for
    a 2-operation magma the pair is swapped.
    """
    ops = list(m.ops)
    if len(ops) == 2:
        ops = [ops[1], ops[0]]
    elif (len(ops) == 4 and ops[0].is_left_projection()
          and ops[3].is_right_projection()):
        ops = [ops[0], ops[2], ops[1], ops[3]]
    else:
        raise StructureError("duality needs a 2- or (left,j,m,right) 4-op magma")
    labels = None
    if m.labels is not None:
        lab = list(m.labels)
        if len(lab) == 2:
            labels = [lab[1], lab[0]]
        else:
            labels = [lab[0], lab[2], lab[1], lab[3]]
    return MultiMagma([op.table for op in ops], labels)


# ---------------------------------------------------------------------------
# skew lattices

@dataclass(frozen=True)
class SkewLatticeInfo:
    meet: OperationTable           # "and"-like operation
    join: OperationTable           # "or"-like operation
    d_classes: tuple               # partition of elements, each a sorted tuple
    quotient: MultiMagma           # a genuine lattice on the classes (join, meet)
    quotient_map: tuple            # element -> class index
    conjugated_join: OperationTable
    conjugated_meet: OperationTable
    is_symmetric: bool
    is_rectangular: bool
    is_distributive_skew: bool
    has_unique_min: bool
    has_unique_max: bool


def analyze_skew(land, lor):
    """Verify the skew-lattice axioms and compute classes and quotient.

    ``land`` and ``lor`` are the meet-like and join-like operations.  Both
    must be associative and idempotent, and the four absorption identities
    x ^ (x v y) = x = (y v x) ^ x and x v (x ^ y) = x = (y ^ x) v x must
    hold.

    The conjugated operations are x |> y = y v x v y and x |^ y = y ^ x ^ y.
    (The second is formed symmetrically to the first; see the package docs
    for why the symmetric form is used.)
    """
    if not isinstance(land, OperationTable):
        land = OperationTable(land)
    if not isinstance(lor, OperationTable):
        lor = OperationTable(lor)
    if land.size != lor.size:
        raise StructureError("the two operations must share a size")
    n = land.size
    ta, to = land.table, lor.table
    for name, t in (("meet", ta), ("join", to)):
        for x in range(n):
            if t[x][x] != x:
                raise AxiomError(f"{name} not idempotent at {x}")
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    if t[t[x][y]][z] != t[x][t[y][z]]:
                        raise AxiomError(f"{name} not associative at ({x},{y},{z})")
    for x in range(n):
        for y in range(n):
            if ta[x][to[x][y]] != x or ta[to[y][x]][x] != x:
                raise AxiomError(f"skew absorption (meet side) fails at ({x},{y})")
            if to[x][ta[x][y]] != x or to[ta[y][x]][x] != x:
                raise AxiomError(f"skew absorption (join side) fails at ({x},{y})")

    # preorder x <= y iff x ^ y ^ x == x; its symmetrization gives the classes
    pre = [[ta[ta[x][y]][x] == x for y in range(n)] for x in range(n)]
    class_of = [-1] * n
    classes = []
    for x in range(n):
        if class_of[x] >= 0:
            continue
        cls = tuple(sorted(y for y in range(n) if pre[x][y] and pre[y][x]))
        for y in cls:
            class_of[y] = len(classes)
        classes.append(cls)
    k = len(classes)
    qjoin = [[0] * k for _ in range(k)]
    qmeet = [[0] * k for _ in range(k)]
    for a in range(k):
        for b in range(k):
            x, y = classes[a][0], classes[b][0]
            ja = class_of[to[x][y]]
            ma = class_of[ta[x][y]]
            # well-definedness across representatives
            for x2 in classes[a]:
                for y2 in classes[b]:
                    if class_of[to[x2][y2]] != ja or class_of[ta[x2][y2]] != ma:
                        raise AxiomError(
                            "quotient operations not well defined "
                            f"at classes ({a},{b})")
            qjoin[a][b] = ja
            qmeet[a][b] = ma
    quotient = MultiMagma([qjoin, qmeet], labels=("join", "meet"))
    analyze_lattice(qjoin, qmeet)   # must be a genuine lattice

    conj_join = OperationTable([[to[to[y][x]][y] for y in range(n)]
                                for x in range(n)])
    conj_meet = OperationTable([[ta[ta[y][x]][y] for y in range(n)]
                                for x in range(n)])
    symmetric = all((ta[x][y] == ta[y][x]) == (to[x][y] == to[y][x])
                    for x in range(n) for y in range(n))
    distributive_skew = all(
        ta[ta[x][to[y][z]]][x] == to[ta[ta[x][y]][x]][ta[ta[x][z]][x]]
        and to[to[x][ta[y][z]]][x] == ta[to[to[x][y]][x]][to[to[x][z]][x]]
        for x in range(n) for y in range(n) for z in range(n))
    qinfo = analyze_lattice(qjoin, qmeet)
    bottom_cls = classes[qinfo.bottom]
    top_cls = classes[qinfo.top]
    return SkewLatticeInfo(
        meet=land, join=lor,
        d_classes=tuple(classes),
        quotient=quotient,
        quotient_map=tuple(class_of),
        conjugated_join=conj_join,
        conjugated_meet=conj_meet,
        is_symmetric=symmetric,
        is_rectangular=(k == 1),
        is_distributive_skew=distributive_skew,
        has_unique_min=(len(bottom_cls) == 1),
        has_unique_max=(len(top_cls) == 1),
    )
