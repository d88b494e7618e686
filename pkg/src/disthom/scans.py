"""Empirical scanners for the orbit-invariance and vanishing conjectures.

Each scanner enumerates every qualifying structure up to a size bound,
computes both sides of the conjectured statement exactly, and reports any
counterexample with enough data to reproduce it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .abgroups import FinAbGroup
from .complexes import full_part, reduced_part
from .enumeration import (_compose_for, _columns_to_table, canonical_key,
                          enumerate_structures)
from .homology import homology_profile
from .magma import (BudgetError, MultiMagma, StructureError,
                    augment_with_trivial, orbit, restrict)

DEFAULT_TRIPLES = ((1, 1, 0), (1, 1, 1), (1, -1, 1), (2, 1, -1), (1, 2, 0))
DEFAULT_QUADS = ((1, 1, 1, 1), (4, 5, 2, 0), (2, 2, 2, 2), (2, 4, 6, 0),
                 (1, -1, 2, 0))


@dataclass(frozen=True)
class ScanReport:
    which: str
    sizes: tuple
    scalar_grid: tuple
    n_max: int
    structures: int
    comparisons: int
    counterexamples: tuple
    skipped: tuple = ()

    @property
    def ok(self):
        return not self.counterexamples

    def to_json(self):
        return {
            "which": self.which, "sizes": list(self.sizes),
            "scalars": [list(s) for s in self.scalar_grid],
            "max_degree": self.n_max,
            "structures": self.structures,
            "comparisons": self.comparisons,
            "counterexamples": [list(c) for c in self.counterexamples],
            "skipped": [list(s) for s in self.skipped],
        }


def _three_term(table):
    return augment_with_trivial(MultiMagma([table]), add_left=True,
                                add_right=True)


def _reduced_profile(m, scalars, n_max, basepoint=0):
    return homology_profile(m, scalars, reduced_part(basepoint), n_max)


def spindle_orbit_failure(table, scalars=(1, 1, 0), n_max=3):
    """Whether reduced homology changes when passing to some proper orbit."""
    m = _three_term(table)
    base = _reduced_profile(m, scalars, n_max)
    size = len(table)
    for x in range(size):
        orb = orbit(m, 1, x)
        if len(orb) == size:
            continue
        sub, _ = restrict(MultiMagma([table]), orb)
        side = _reduced_profile(_three_term(sub.ops[0].table), scalars, n_max)
        if tuple(base) != tuple(side):
            return True
    return False


def scan_orbit_invariance(which, max_size=4, scalar_grid=None, n_max=3):
    """Orbit invariance for unital or commutative spindles.

    For every qualifying spindle class, every element x with a proper orbit
    and every scalar triple with coprime first two entries, compares the
    reduced homology of the carrier with that of the orbit.
    """
    if which == "spindle-orbit":
        predicate = "unital-spindle"
    elif which == "commutative-orbit":
        predicate = "commutative-spindle"
    else:
        raise StructureError(f"unknown orbit scan {which!r}")
    grid = tuple(scalar_grid or DEFAULT_TRIPLES)
    for a, b, _d in grid:
        if gcd(a, b) != 1:
            raise StructureError(
                f"scan hypothesis needs gcd(a, b) = 1, got ({a}, {b})")
    sizes = tuple(range(2, max_size + 1))
    bad = []
    structures = comparisons = 0
    for size in sizes:
        for m1 in enumerate_structures(size, predicate, dedup="iso"):
            structures += 1
            table = m1.ops[0].table
            m = _three_term(table)
            for scalars in grid:
                base = _reduced_profile(m, scalars, n_max)
                for x in range(size):
                    orb = orbit(m1, 0, x)
                    if len(orb) == size:
                        continue
                    comparisons += 1
                    sub, _ = restrict(m1, orb)
                    side = _reduced_profile(_three_term(sub.ops[0].table),
                                            scalars, n_max)
                    if tuple(base) != tuple(side):
                        bad.append((m1.fingerprint(), scalars, x,
                                    base.render(), side.render()))
    return ScanReport(which, sizes, grid, n_max, structures, comparisons,
                      tuple(bad))


def scan_semilattice_projector(max_size=4, scalar_grid=None, n_max=3):
    """Vanishing of reduced homology for semilattices at coprime scalars.

    Every finite semilattice has a right projector (the top of the induced
    order), so every class qualifies.
    """
    grid = tuple(scalar_grid or DEFAULT_TRIPLES)
    for a, b, _d in grid:
        if gcd(a, b) != 1:
            raise StructureError(
                f"scan hypothesis needs gcd(a, b) = 1, got ({a}, {b})")
    sizes = tuple(range(2, max_size + 1))
    bad = []
    structures = comparisons = 0
    for size in sizes:
        for m1 in enumerate_structures(size, "semilattice", dedup="iso"):
            structures += 1
            m = _three_term(m1.ops[0].table)
            for scalars in grid:
                comparisons += 1
                prof = _reduced_profile(m, scalars, n_max)
                if any(not g.is_trivial() for g in prof):
                    bad.append((m1.fingerprint(), scalars, prof.render()))
    return ScanReport("semilattice-projector", sizes, grid, n_max,
                      structures, comparisons, tuple(bad))


# ---------------------------------------------------------------------------
# skew lattices

def enumerate_skew_pairs(size, max_size=4):
    """All skew lattices on ``size`` elements: two associative idempotent
    operations with all four absorption identities; raw pairs.

    Unlike the census universe, mutual distributivity is NOT required here.
    Associativity is a composition-closure relation on right translations
    (f_z o f_y = f_{f_z(y)}), searched incrementally like distributivity.
    """
    if size > max_size:
        raise BudgetError(f"pair enumeration capped at size {max_size}")
    maps, _, comp = _compose_for(size)
    fixers = [[i for i, f in enumerate(maps) if f[y] == y]
              for y in range(size)]

    def search_bands(candidates):
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
                    if comp[fz][cols[y]] != cols[w]:
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

    for cols1 in search_bands(fixers):
        t1 = _columns_to_table(size, maps, cols1)
        cand2 = []
        feasible = True
        for y in range(size):
            f = maps[cols1[y]]
            allowed = [i for i in fixers[y]
                       if all(maps[i][f[x]] == y for x in range(size))
                       and all(f[maps[i][x]] == y for x in range(size))]
            if not allowed:
                feasible = False
                break
            cand2.append(allowed)
        if not feasible:
            continue
        for cols2 in search_bands(cand2):
            t2 = _columns_to_table(size, maps, cols2)
            n = size
            if all(t2[x][t1[x][y]] == x and t1[x][t2[x][y]] == x
                   for x in range(n) for y in range(n)):
                yield t1, t2


def _quotient_pair(t1, t2):
    """D-classes and the quotient pair of tables, via the natural preorder."""
    n = len(t1)

    # the sandwich preorder of the second operation; using the first instead
    # reverses it, which leaves the classes unchanged
    def classes_for(tm):
        pre = [[tm[tm[x][y]][x] == x for y in range(n)] for x in range(n)]
        class_of = [-1] * n
        classes = []
        for x in range(n):
            if class_of[x] >= 0:
                continue
            cls = tuple(sorted(y for y in range(n)
                               if pre[x][y] and pre[y][x]))
            for y in cls:
                class_of[y] = len(classes)
            classes.append(cls)
        return classes, class_of

    classes, class_of = classes_for(t2)
    k = len(classes)
    q1 = [[class_of[t1[classes[a][0]][classes[b][0]]] for b in range(k)]
          for a in range(k)]
    q2 = [[class_of[t2[classes[a][0]][classes[b][0]]] for b in range(k)]
          for a in range(k)]
    return classes, class_of, q1, q2


def _extremum_flags(t1, t2, classes, class_of, q1, q2):
    """(unique_min, unique_max) in the natural partial order."""
    k = len(classes)
    # in the quotient lattice, the meet-like table q2 has x <= y iff
    # x ^ y == x; bottom/top classes:
    bot = next(a for a in range(k)
               if all(q2[a][b] == a for b in range(k)))
    top = next(a for a in range(k)
               if all(q2[a][b] == b for b in range(k)))
    return len(classes[bot]) == 1, len(classes[top]) == 1


def _decompose_as(extra_free, extra_primary, m1, m2):
    """Can the extra part be written as Z_{m1}^p + Z_{m2}^q?"""
    if extra_free != 0:
        return False
    total = sum(len(v) for v in extra_primary.values())
    for p_count in range(total + 1):
        for q_count in range(total + 1):
            want = {}
            for m, c in ((m1, p_count), (m2, q_count)):
                if m <= 1 or c == 0:
                    continue
                g = FinAbGroup.from_factors(0, [m] * c)
                for prime, exps in g.primary_decomposition().items():
                    want.setdefault(prime, []).extend(exps)
            norm = {p: tuple(sorted(v, reverse=True))
                    for p, v in want.items() if v}
            if norm == extra_primary:
                return True
    return False


def conjugate_table(t):
    """x -> y * x * y, the sandwich conjugate of one operation."""
    n = len(t)
    return tuple(tuple(t[t[y][x]][y] for y in range(n)) for x in range(n))


def scan_skew_extremum(max_size=4, scalar_grid=None, n_max=3):
    """Skew lattices with a unique minimum or maximum: their homology should
    be the quotient lattice's plus copies of two gcd-torsion groups.

    The homology of a skew lattice is taken through its conjugated
    operations (x |> y = y v x v y and its meet twin), which form a
    distributive multispindle with absorption whenever the skew lattice is
    distributive; skew pairs whose conjugates fail the distributivity check
    carry no chain complex and are reported as skipped, not as failures.
    """
    grid = tuple(scalar_grid or DEFAULT_QUADS)
    sizes = tuple(range(2, max_size + 1))
    bad, skipped = [], []
    structures = comparisons = 0
    seen = set()
    for size in sizes:
        for t1, t2 in enumerate_skew_pairs(size):
            key = canonical_key((t1, t2), dual=True)
            if key in seen:
                continue
            seen.add(key)
            classes, class_of, q1, q2 = _quotient_pair(t1, t2)
            uniq_min, uniq_max = _extremum_flags(t1, t2, classes, class_of,
                                                 q1, q2)
            if not (uniq_min or uniq_max):
                continue
            if len(classes) == len(t1):
                continue    # a genuine lattice: nothing to test
            structures += 1
            pair = MultiMagma([conjugate_table(t1), conjugate_table(t2)])
            if not pair.report.is_multishelf:
                skipped.append((pair.fingerprint(),
                                "conjugated operations are not a "
                                "distributive set"))
                continue
            big = augment_with_trivial(pair, add_left=True, add_right=True)
            quot = augment_with_trivial(MultiMagma([q1, q2]),
                                        add_left=True, add_right=True)
            for scalars in grid:
                a, b, c, d = scalars
                g3 = gcd(gcd(a, b), c)
                g4 = gcd(g3, d)
                comparisons += 1
                h_l = homology_profile(big, scalars, full_part(), n_max)
                h_q = homology_profile(quot, scalars, full_part(), n_max)
                for n in range(n_max + 1):
                    gl, gq = h_l[n], h_q[n]
                    lp = gl.primary_decomposition()
                    qp = gq.primary_decomposition()
                    extra = {}
                    fail = gl.free_rank < gq.free_rank
                    for prime in set(lp) | set(qp):
                        have = list(lp.get(prime, ()))
                        need = list(qp.get(prime, ()))
                        for e in need:
                            if e in have:
                                have.remove(e)
                            else:
                                fail = True
                        if have:
                            extra[prime] = tuple(sorted(have, reverse=True))
                    if not fail:
                        fail = not _decompose_as(
                            gl.free_rank - gq.free_rank, extra, g3, g4)
                    if fail:
                        bad.append((pair.fingerprint(), scalars, n,
                                    str(gl), str(gq)))
                        break
    return ScanReport("skew-unique-extremum", sizes, grid, n_max,
                      structures, comparisons, tuple(bad), tuple(skipped))


def conjecture_scan(which, max_size=4, scalar_grid=None, n_max=3):
    """Dispatch a named scan; see the individual scanners."""
    if which in ("spindle-orbit", "commutative-orbit"):
        return scan_orbit_invariance(which, max_size, scalar_grid, n_max)
    if which == "semilattice-projector":
        return scan_semilattice_projector(max_size, scalar_grid, n_max)
    if which == "skew-unique-extremum":
        return scan_skew_extremum(max_size, scalar_grid, n_max)
    raise StructureError(f"unknown conjecture scan {which!r}")
