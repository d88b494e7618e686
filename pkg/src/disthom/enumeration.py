"""Exhaustive generation of small distributive structures, with canonical
deduplication and the census statistics.

The single-operation search enumerates the columns of the table: a table is
self-distributive exactly when the right translations satisfy
f_z o f_y = f_{f_z(y)} o f_z, so we pick one column at a time and check every
relation as soon as all three referenced columns are assigned.  The diagonal
is fixed up front (idempotency), which is what makes size 4 tractable.

Two-operation structures with absorption are built on top: absorption pins
the second operation's columns down to a tiny candidate set per column
(g o f = const = f o g), after which mutual distributivity is checked
incrementally the same way.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

from .magma import BudgetError, MultiMagma, StructureError


def _perms(size):
    return tuple(permutations(range(size)))


def _relabel(table, perm, inv):
    n = len(table)
    return tuple(tuple(perm[table[inv[x]][inv[y]]] for y in range(n))
                 for x in range(n))


def canonical_key(tables, *, dual=False):
    """Lexicographically minimal flattened form over all relabelings.

    ``tables`` is a tuple of row-tuple tables sharing a size.  With ``dual``
    the reversal of the operation list competes as well.
    """
    n = len(tables[0])
    variants = [tuple(tables)]
    if dual and len(tables) > 1:
        variants.append(tuple(reversed(tables)))
    best = None
    for perm in _perms(n):
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        for ts in variants:
            key = tuple(v for t in ts
                        for row in _relabel(t, perm, inv) for v in row)
            if best is None or key < best:
                best = key
    return best


def _as_rows(table):
    return tuple(tuple(row) for row in table)


# ---------------------------------------------------------------------------
# single-operation search

def _compose_table(size):
    """All maps on ``size`` points as tuples, plus the composition table."""
    maps = [tuple(f) for f in product(range(size), repeat=size)]
    index = {f: i for i, f in enumerate(maps)}
    comp = [[0] * len(maps) for _ in range(len(maps))]
    for i, f in enumerate(maps):
        for j, g in enumerate(maps):
            comp[i][j] = index[tuple(f[g[x]] for x in range(size))]
    return maps, index, comp


_COMPOSE_CACHE = {}


def _compose_for(size):
    if size not in _COMPOSE_CACHE:
        _COMPOSE_CACHE[size] = _compose_table(size)
    return _COMPOSE_CACHE[size]


def _columns_to_table(size, maps, cols):
    return tuple(tuple(maps[cols[y]][x] for y in range(size))
                 for x in range(size))


def _search_self_distributive(size, candidates, maps, comp):
    """Backtrack over columns; candidates[y] lists admissible map indices."""
    cols = [0] * size
    out = []

    def ok_at(d):
        for z in range(d + 1):
            fz = cols[z]
            fzt = maps[fz]
            for y in range(d + 1):
                w = fzt[y]
                if w > d or max(y, z, w) != d:
                    continue
                if comp[fz][cols[y]] != comp[cols[w]][fz]:
                    return False
        return True

    def rec(d):
        if d == size:
            out.append(tuple(cols))
            return
        for f in candidates[d]:
            cols[d] = f
            if ok_at(d):
                rec(d + 1)

    rec(0)
    return out


def enumerate_spindles(size, max_size=5):
    """All idempotent self-distributive tables, raw, deterministic order."""
    if size > max_size:
        raise BudgetError(f"single-operation enumeration capped at size "
                          f"{max_size}")
    maps, _, comp = _compose_for(size)
    candidates = [[i for i, f in enumerate(maps) if f[y] == y]
                  for y in range(size)]
    for cols in _search_self_distributive(size, candidates, maps, comp):
        yield _columns_to_table(size, maps, cols)


def _is_commutative(t):
    n = len(t)
    return all(t[x][y] == t[y][x] for x in range(n) for y in range(n))


def _is_associative(t):
    n = len(t)
    return all(t[t[x][y]][z] == t[x][t[y][z]]
               for x in range(n) for y in range(n) for z in range(n))


def _is_bin_idempotent(t):
    n = len(t)
    return all(t[t[x][y]][y] == t[x][y] for x in range(n) for y in range(n))


def _right_units(t):
    n = len(t)
    return [u for u in range(n) if all(t[x][u] == x for x in range(n))]


def _right_projectors(t):
    n = len(t)
    return [p for p in range(n) if all(t[x][p] == p for x in range(n))]


def enumerate_semilattices(size):
    for t in enumerate_spindles(size):
        if _is_commutative(t) and _is_associative(t):
            yield t


# ---------------------------------------------------------------------------
# two-operation structures with absorption

def _mutual_ok(maps, comp, cols_r, cols_s, z, y):
    """(x *s y) *r z == (x *r z) *s (y *r z) as a translation relation."""
    fz = cols_r[z]
    w = maps[fz][y]
    return comp[fz][cols_s[y]] == comp[cols_s[w]][fz]


def enumerate_absorption_pairs(size, max_size=4, include_equal_ops=True):
    """Two mutually distributive composition-idempotent operations with the
    absorption law both ways: the census universe.

    Yields raw (table1, table2) pairs in deterministic order.
    """
    if size > max_size:
        raise BudgetError(f"pair enumeration capped at size {max_size}")
    maps, _, comp = _compose_for(size)
    idem_fix = [[i for i, f in enumerate(maps)
                 if f[y] == y and comp[i][i] == i]
                for y in range(size)]
    firsts = _search_self_distributive(size, idem_fix, maps, comp)
    for cols1 in firsts:
        t1 = _columns_to_table(size, maps, cols1)
        # per-column candidates for the second operation
        cand2 = []
        feasible = True
        for y in range(size):
            f = maps[cols1[y]]
            allowed = []
            for i, g in enumerate(maps):
                if comp[i][i] != i:
                    continue
                if any(g[f[x]] != y for x in range(size)):
                    continue
                if any(f[g[x]] != y for x in range(size)):
                    continue
                allowed.append(i)
            if not allowed:
                feasible = False
                break
            cand2.append(allowed)
        if not feasible:
            continue

        cols2 = [0] * size
        found = []

        def ok_at(d):
            for z in range(d + 1):
                fz = cols2[z]
                fzt = maps[fz]
                for y in range(d + 1):
                    w = fzt[y]
                    if w <= d and max(y, z, w) == d and \
                            comp[fz][cols2[y]] != comp[cols2[w]][fz]:
                        return False
            # second distributes over first: f2_z o f1_y = f1_{f2_z(y)} o f2_z
            z = d
            fz = cols2[z]
            fzt = maps[fz]
            for y in range(size):
                if comp[fz][cols1[y]] != comp[cols1[fzt[y]]][fz]:
                    return False
            # first distributes over second, where the referenced column is in
            for z1 in range(size):
                f1 = cols1[z1]
                f1t = maps[f1]
                for y in range(d + 1):
                    w = f1t[y]
                    if w <= d and max(y, w) == d and \
                            comp[f1][cols2[y]] != comp[cols2[w]][f1]:
                        return False
            return True

        def rec(d):
            if d == size:
                found.append(tuple(cols2))
                return
            for gidx in cand2[d]:
                cols2[d] = gidx
                if ok_at(d):
                    rec(d + 1)

        rec(0)
        for c2 in found:
            t2 = _columns_to_table(size, maps, c2)
            if not include_equal_ops and t1 == t2:
                continue
            yield t1, t2


def is_skew_pair(t1, t2):
    """Both operations associative with all four absorption variants.

    The pair is read as (join-like, meet-like); the variant identities are
    symmetric in the two operations, so the orientation does not matter.
    """
    n = len(t1)
    if not (_is_associative(t1) and _is_associative(t2)):
        return False
    for x in range(n):
        for y in range(n):
            if t2[x][t1[x][y]] != x or t2[t1[y][x]][x] != x:
                return False
            if t1[x][t2[x][y]] != x or t1[t2[y][x]][x] != x:
                return False
    return True


def is_lattice_pair(t1, t2):
    return (_is_commutative(t1) and _is_commutative(t2)
            and _is_associative(t1) and _is_associative(t2))


# ---------------------------------------------------------------------------
# public streaming interface

_SINGLE_PREDICATES = {
    "spindle": lambda t: True,
    "semilattice": lambda t: _is_commutative(t) and _is_associative(t),
    "commutative-spindle": _is_commutative,
    "unital-spindle": lambda t: bool(_right_units(t)),
    "bin-idempotent-spindle": _is_bin_idempotent,
}

_PAIR_PREDICATES = {
    "generalized-lattice": lambda t1, t2: True,
    "skew-lattice": is_skew_pair,
    "lattice": is_lattice_pair,
}


def enumerate_structures(size, predicate, dedup="iso"):
    """Stream structures of one named class as MultiMagma values.

    ``dedup`` is one of none | iso | iso+duality; deduplication keeps the
    first representative of each class in generation order.
    """
    if dedup not in {"none", "iso", "iso+duality"}:
        raise StructureError(f"unknown dedup mode {dedup!r}")
    if predicate in _SINGLE_PREDICATES:
        test = _SINGLE_PREDICATES[predicate]
        seen = set()
        for t in enumerate_spindles(size):
            if not test(t):
                continue
            if dedup != "none":
                key = canonical_key((t,))
                if key in seen:
                    continue
                seen.add(key)
            yield MultiMagma([t])
        return
    if predicate in _PAIR_PREDICATES:
        test = _PAIR_PREDICATES[predicate]
        seen = set()
        for t1, t2 in enumerate_absorption_pairs(size):
            if not test(t1, t2):
                continue
            if dedup != "none":
                key = canonical_key((t1, t2), dual=(dedup == "iso+duality"))
                if key in seen:
                    continue
                seen.add(key)
            yield MultiMagma([t1, t2])
        return
    raise StructureError(f"unknown predicate {predicate!r}")


# ---------------------------------------------------------------------------
# census

@dataclass(frozen=True)
class CensusRow:
    row: str
    column: str
    count_raw: int
    count_iso: int
    count_iso_dual: int
    bracket_iso: int | None = None
    bracket_iso_dual: int | None = None
    witnesses: tuple = ()

    def to_json(self):
        return {
            "row": self.row, "column": self.column,
            "raw": self.count_raw, "iso": self.count_iso,
            "iso_dual": self.count_iso_dual,
            "bracket_iso": self.bracket_iso,
            "bracket_iso_dual": self.bracket_iso_dual,
        }


def _unit_projector_row(ts):
    units = [bool(_right_units(t)) for t in ts]
    projs = [bool(_right_projectors(t)) for t in ts]
    if len(ts) == 1:
        u, p = units[0], projs[0]
        if u and p:
            return "both"
        if u:
            return "unit"
        if p:
            return "projector"
        return "none"
    return f"{sum(units)}U+{sum(projs)}P"


def census_table_spindles(sizes=(3, 4), orbit_failure=None):
    """The spindle census: rows by unit/projector presence, columns by
    extra axioms; one class list per cell under each dedup convention.

    ``orbit_failure`` is an optional predicate on a table deciding whether
    the orbit-invariance property fails for it; when given, bracketed counts
    are produced.
    """
    columns = {
        "any": lambda t: True,
        "bin_idempotent": _is_bin_idempotent,
        "associative": _is_associative,
        "commutative": _is_commutative,
    }
    row_names = ("all", "unit", "projector", "both", "none")
    raw = {(r, c): 0 for r in row_names for c in columns}
    classes = {}
    for size in sizes:
        for t in enumerate_spindles(size):
            row = _unit_projector_row((t,))
            rows = {"all", row}
            if row == "both":
                rows |= {"unit", "projector"}
            for c, test in columns.items():
                if not test(t):
                    continue
                for r in rows:
                    raw[(r, c)] += 1
            key = canonical_key((t,))
            classes.setdefault((size, key), t)
    out = []
    fail_cache = {}
    for r in row_names:
        for c, test in columns.items():
            members = []
            for (size, key), t in sorted(classes.items()):
                if not test(t):
                    continue
                row = _unit_projector_row((t,))
                in_row = (r == "all" or row == r
                          or (row == "both" and r in ("unit", "projector")))
                if in_row:
                    members.append((size, key, t))
            bracket = None
            if orbit_failure is not None:
                bracket = 0
                for size, key, t in members:
                    if key not in fail_cache:
                        fail_cache[key] = orbit_failure(t)
                    if fail_cache[key]:
                        bracket += 1
            out.append(CensusRow(
                row=r, column=c,
                count_raw=raw[(r, c)],
                count_iso=len(members),
                count_iso_dual=len(members),   # duality is trivial here
                bracket_iso=bracket,
                bracket_iso_dual=bracket))
    return out


def census_table_pairs(sizes=(3, 4), algorithm_failure=None,
                       include_equal_ops=True):
    """The absorption-pair census: columns lattice / skew / generalized,
    rows by how many operations carry units and projectors."""
    columns = {
        "lattice": lambda t1, t2: is_lattice_pair(t1, t2),
        "skew": is_skew_pair,
        "generalized": lambda t1, t2: True,
    }
    row_names = ("all", "2U+2P", "1U+2P", "1U+1P", "0U+2P", "0U+1P", "0U+0P")
    raw = {(r, c): 0 for r in row_names for c in columns}
    iso_classes = {}
    dual_classes = {}
    for size in sizes:
        for t1, t2 in enumerate_absorption_pairs(
                size, include_equal_ops=include_equal_ops):
            row = _unit_projector_row((t1, t2))
            for c, test in columns.items():
                if not test(t1, t2):
                    continue
                for r in ("all", row):
                    if r in row_names:
                        raw[(r, c)] += 1
            iso_classes.setdefault((size, canonical_key((t1, t2))), (t1, t2))
            dual_classes.setdefault(
                (size, canonical_key((t1, t2), dual=True)), (t1, t2))
    out = []
    fail_cache = {}

    def bracket_count(members):
        if algorithm_failure is None:
            return None
        total = 0
        for size, key, pair in members:
            if key not in fail_cache:
                fail_cache[key] = algorithm_failure(pair)
            if fail_cache[key]:
                total += 1
        return total

    for r in row_names:
        for c, test in columns.items():
            iso_members, dual_members = [], []
            for store, sink in ((iso_classes, iso_members),
                                (dual_classes, dual_members)):
                for (size, key), pair in sorted(store.items()):
                    if not test(*pair):
                        continue
                    row = _unit_projector_row(pair)
                    if r == "all" or row == r:
                        sink.append((size, key, pair))
            out.append(CensusRow(
                row=r, column=c,
                count_raw=raw[(r, c)],
                count_iso=len(iso_members),
                count_iso_dual=len(dual_members),
                bracket_iso=bracket_count(iso_members),
                bracket_iso_dual=bracket_count(dual_members)))
    return out


def census_to_csv(rows):
    lines = ["row,column,raw,iso,iso_dual,bracket_iso,bracket_iso_dual"]
    for r in rows:
        lines.append(
            f"{r.row},{r.column},{r.count_raw},{r.count_iso},"
            f"{r.count_iso_dual},"
            f"{'' if r.bracket_iso is None else r.bracket_iso},"
            f"{'' if r.bracket_iso_dual is None else r.bracket_iso_dual}")
    return "\n".join(lines) + "\n"
