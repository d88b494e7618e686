"""Finite carriers with one or more binary operations, plus axiom checking.

Elements are 0-based indices into a carrier of a declared size.  An operation
is a full Cayley table; a magma may carry several operations at once.  Every
axiom used downstream (self-distributivity, mutual distributivity, absorption,
units, projectors, ...) is checked exhaustively here and cached on the magma,
so later modules can assume validated structure.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from itertools import product


class StructureError(ValueError):
    """Malformed tables, size mismatches, bad indices."""


class AxiomError(StructureError):
    """A required axiom fails; the message names the axiom and a witness."""


class ClosureError(StructureError):
    """A subset is not closed under some operation."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness  # (x, y, op_index)


class BudgetError(RuntimeError):
    """A computation would exceed the configured resource budget."""


class OperationTable:
    """An n x n table over element indices: ``table[x][y] == x * y``."""

    __slots__ = ("size", "table")

    def __init__(self, table):
        rows = tuple(tuple(row) for row in table)
        n = len(rows)
        if n == 0:
            raise StructureError("operation table must be non-empty")
        for x, row in enumerate(rows):
            if len(row) != n:
                raise StructureError(
                    f"row {x} has length {len(row)}, expected {n}")
            for y, v in enumerate(row):
                if not isinstance(v, int) or not 0 <= v < n:
                    raise StructureError(
                        f"entry ({x},{y}) = {v!r} out of range [0,{n})")
        self.size = n
        self.table = rows

    def __call__(self, x, y):
        return self.table[x][y]

    def __eq__(self, other):
        return isinstance(other, OperationTable) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"OperationTable({[list(r) for r in self.table]})"

    def transpose(self):
        n = self.size
        return OperationTable([[self.table[y][x] for y in range(n)]
                               for x in range(n)])

    def is_left_projection(self):
        """x * y == x for all x, y."""
        return all(v == x for x, row in enumerate(self.table) for v in row)

    def is_right_projection(self):
        """x * y == y for all x, y."""
        return all(v == y for row in self.table for y, v in enumerate(row))


def left_projection(size):
    """The two-sided unit of the composition monoid: x * y = x."""
    return OperationTable([[x] * size for x in range(size)])


def right_projection(size):
    """x * y = y; a two-sided projector in the composition monoid."""
    return OperationTable([list(range(size)) for _ in range(size)])


def compose_ops(s1, s2):
    """Composition of binary operations: x (s1;s2) y = (x s1 y) s2 y.

    This is the monoid product on the set of binary operations; the left
    projection is its two-sided unit.
    """
    if s1.size != s2.size:
        raise StructureError(
            f"size mismatch: {s1.size} vs {s2.size}")
    n = s1.size
    t1, t2 = s1.table, s2.table
    return OperationTable([[t2[t1[x][y]][y] for y in range(n)]
                           for x in range(n)])


@dataclass(frozen=True)
class StructureReport:
    """Exhaustively verified flags for a multi-operation magma.

    Per-operation tuples are aligned with the magma's operation list.
    ``distributes_over[r][s]`` means op r is right-distributive with respect
    to op s: (x *s y) *r z == (x *r z) *s (y *r z).  ``absorption[r][s]``
    (r != s) means (x *r y) *s y == y.
    """

    self_distributive: tuple
    idempotent: tuple            # x * x == x elementwise
    bin_idempotent: tuple        # (x * y) * y == x * y
    associative: tuple
    commutative: tuple
    units: tuple                 # per op: tuple of right units u (x*u == x)
    projectors: tuple            # per op: tuple of right projectors p (x*p == p)
    right_invertible: tuple      # per op: every right translation bijective
    distributes_over: tuple      # k x k matrix of bools
    absorption: tuple            # k x k matrix of bools (diagonal True)
    is_multishelf: bool
    is_multispindle: bool
    satisfies_absorption: bool
    is_unital: bool
    is_irreducible: bool


def _classify(size, ops):
    n = size
    rng = range(n)
    self_d, idem, binid, assoc, comm, units, projs, rinv = \
        [], [], [], [], [], [], [], []
    for op in ops:
        t = op.table
        idem.append(all(t[x][x] == x for x in rng))
        binid.append(all(t[t[x][y]][y] == t[x][y] for x in rng for y in rng))
        assoc.append(all(t[t[x][y]][z] == t[x][t[y][z]]
                         for x in rng for y in rng for z in rng))
        comm.append(all(t[x][y] == t[y][x] for x in rng for y in rng))
        units.append(tuple(u for u in rng if all(t[x][u] == x for x in rng)))
        projs.append(tuple(p for p in rng if all(t[x][p] == p for x in rng)))
        rinv.append(all(len({t[x][y] for x in rng}) == n for y in rng))
    k = len(ops)
    dist = []
    for r in range(k):
        tr = ops[r].table
        row = []
        for s in range(k):
            ts = ops[s].table
            ok = all(tr[ts[x][y]][z] == ts[tr[x][z]][tr[y][z]]
                     for x in rng for y in rng for z in rng)
            row.append(ok)
        dist.append(tuple(row))
    for r in range(k):
        self_d.append(dist[r][r])
    absorb = []
    for r in range(k):
        tr = ops[r].table
        row = []
        for s in range(k):
            if r == s:
                row.append(True)
                continue
            ts = ops[s].table
            row.append(all(ts[tr[x][y]][y] == y for x in rng for y in rng))
        absorb.append(tuple(row))
    is_multishelf = all(all(row) for row in dist)
    is_multispindle = is_multishelf and all(idem)
    satisfies_absorption = all(all(row) for row in absorb)
    is_unital = all(len(u) > 0 for u in units)
    # irreducible: no element has all of its right orbits proper
    is_irred = True
    for t0 in rng:
        if all(len({op.table[x][t0] for x in rng}) < n for op in ops):
            is_irred = False
            break
    return StructureReport(
        self_distributive=tuple(self_d),
        idempotent=tuple(idem),
        bin_idempotent=tuple(binid),
        associative=tuple(assoc),
        commutative=tuple(comm),
        units=tuple(units),
        projectors=tuple(projs),
        right_invertible=tuple(rinv),
        distributes_over=tuple(dist),
        absorption=tuple(absorb),
        is_multishelf=is_multishelf,
        is_multispindle=is_multispindle,
        satisfies_absorption=satisfies_absorption,
        is_unital=is_unital,
        is_irreducible=is_irred,
    )


class MultiMagma:
    """A carrier with an ordered, non-empty list of operations on it.

    Immutable after construction; the structure report is computed eagerly so
    every consumer can rely on validated flags.
    """

    __slots__ = ("size", "ops", "labels", "report")

    def __init__(self, ops, labels=None):
        ops = tuple(op if isinstance(op, OperationTable) else OperationTable(op)
                    for op in ops)
        if not ops:
            raise StructureError("a magma needs at least one operation")
        size = ops[0].size
        for i, op in enumerate(ops):
            if op.size != size:
                raise StructureError(
                    f"operation {i} has size {op.size}, expected {size}")
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != len(ops):
                raise StructureError("labels must match the operation count")
        self.size = size
        self.ops = ops
        self.labels = labels
        self.report = _classify(size, ops)

    def __eq__(self, other):
        return isinstance(other, MultiMagma) and self.ops == other.ops

    def __hash__(self):
        return hash(self.ops)

    def __repr__(self):
        return f"MultiMagma(size={self.size}, ops={len(self.ops)})"

    def apply(self, op_index, x, y):
        return self.ops[op_index].table[x][y]

    def fingerprint(self):
        """Stable short identifier derived from the raw tables."""
        blob = repr((self.size, tuple(op.table for op in self.ops)))
        return hashlib.sha1(blob.encode()).hexdigest()[:12]

    def one_point_submagmas(self):
        """Elements t with {t} closed under every operation."""
        return tuple(t for t in range(self.size)
                     if all(op.table[t][t] == t for op in self.ops))


def orbit(m, op_index, x):
    """The right orbit { y * x : y in X } of x under one operation, sorted."""
    if not 0 <= op_index < len(m.ops):
        raise StructureError(f"operation index {op_index} out of range")
    if not 0 <= x < m.size:
        raise StructureError(f"element {x} out of range")
    t = m.ops[op_index].table
    return tuple(sorted({t[y][x] for y in range(m.size)}))


def restrict(m, subset):
    """Restrict to a subset closed under every operation.

    Returns ``(sub, elements)`` where ``elements[i]`` is the original index of
    the i-th element of the restricted magma (sorted order).
    """
    elements = tuple(sorted(set(subset)))
    if not elements:
        raise StructureError("cannot restrict to an empty subset")
    for x in elements:
        if not 0 <= x < m.size:
            raise StructureError(f"element {x} out of range")
    index = {x: i for i, x in enumerate(elements)}
    tables = []
    for r, op in enumerate(m.ops):
        t = op.table
        new = []
        for x in elements:
            row = []
            for y in elements:
                v = t[x][y]
                if v not in index:
                    raise ClosureError(
                        f"subset not closed: {x} *{r} {y} = {v}",
                        witness=(x, y, r))
                row.append(index[v])
            new.append(row)
        tables.append(new)
    labels = m.labels
    return MultiMagma(tables, labels), elements


def augment_with_trivial(m, add_left=False, add_right=False):
    """Adjoin the trivial projections: left projection first, right last.

    The left projection may always be adjoined to a multishelf; the right
    projection needs a multispindle (it distributes over an operation only
    when that operation is idempotent on elements).
    """
    if add_right and not m.report.is_multispindle:
        raise AxiomError(
            "right projection can only be adjoined to a multispindle")
    ops = list(m.ops)
    labels = list(m.labels) if m.labels is not None else None
    if add_left:
        ops.insert(0, left_projection(m.size))
        if labels is not None:
            labels.insert(0, "left")
    if add_right:
        ops.append(right_projection(m.size))
        if labels is not None:
            labels.append("right")
    return MultiMagma(ops, labels)


def strip_trivial(m):
    """Drop structurally-trivial projections from the ends of the op list.

    Recognition is structural (table comparison), never by label.  Returns
    the stripped magma; if nothing matches, returns ``m`` itself.
    """
    ops = list(m.ops)
    labels = list(m.labels) if m.labels is not None else None
    changed = False
    if len(ops) > 1 and ops[0].is_left_projection():
        ops.pop(0)
        if labels is not None:
            labels.pop(0)
        changed = True
    if len(ops) > 1 and ops[-1].is_right_projection():
        ops.pop()
        if labels is not None:
            labels.pop()
        changed = True
    return MultiMagma(ops, labels) if changed else m


# ---------------------------------------------------------------------------
# JSON file format:  { "size": n, "ops": [ [[row...]...], ... ],
#                      "labels": [str, ...]? }   with ops[i][x][y] = x *i y.

def magma_from_dict(data):
    if not isinstance(data, dict):
        raise StructureError("magma file must contain a JSON object")
    try:
        size = data["size"]
        ops = data["ops"]
    except (KeyError, TypeError) as exc:
        raise StructureError(f"missing required field: {exc}") from None
    if not isinstance(size, int) or size < 1:
        raise StructureError(f"size must be a positive integer, got {size!r}")
    if not isinstance(ops, list) or not ops:
        raise StructureError("ops must be a non-empty list of tables")
    tables = []
    for i, table in enumerate(ops):
        if not isinstance(table, list) or len(table) != size:
            raise StructureError(
                f"ops[{i}] must be a {size}x{size} table")
        for x, row in enumerate(table):
            if not isinstance(row, list) or len(row) != size:
                raise StructureError(
                    f"ops[{i}] row {x} is ragged (length "
                    f"{len(row) if isinstance(row, list) else '?'}, "
                    f"expected {size})")
            for y, v in enumerate(row):
                if not isinstance(v, int) or not 0 <= v < size:
                    raise StructureError(
                        f"ops[{i}][{x}][{y}] = {v!r} out of range [0,{size})")
        tables.append(table)
    labels = data.get("labels")
    if labels is not None and (not isinstance(labels, list)
                               or len(labels) != len(tables)):
        raise StructureError("labels must match the operation count")
    return MultiMagma(tables, labels)


def magma_from_json(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructureError(f"invalid JSON: {exc}") from None
    return magma_from_dict(data)


def magma_to_dict(m):
    data = {"size": m.size, "ops": [[list(r) for r in op.table]
                                    for op in m.ops]}
    if m.labels is not None:
        data["labels"] = list(m.labels)
    return data


def magma_to_json(m, indent=None):
    return json.dumps(magma_to_dict(m), indent=indent)


def load_magma(path):
    with open(path, "r", encoding="utf-8") as fh:
        return magma_from_json(fh.read())


def save_magma(m, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(magma_to_json(m, indent=1))
        fh.write("\n")
