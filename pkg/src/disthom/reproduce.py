"""Recompute published tables and diff them against the embedded values.

Each target returns ``(ok, text)``.  A target is ok when every comparison
that can be computed matches; remaining discrepancies are printed per cell
with a note on what is known about them (see the package README for the two
census anomalies and the defective published example table).
"""

from __future__ import annotations

import time
from itertools import product

from . import goldens
from .complexes import (NORMALIZED, init_deg_part, init_norm_part,
                        reduced_part)
from .enumeration import census_table_pairs, census_table_spindles
from .formulas import (LatticeParams, hom_b1_reduced, hom_lattice,
                       hom_normalized_lattice)
from .homology import homology_profile
from .lattices import boolean_algebra
from .magma import MultiMagma, augment_with_trivial
from .reduction import reduce_by_orbits
from .scans import spindle_orbit_failure


def pair_algorithm_failure(pair, scalars=goldens.FOUR_ELEMENT_SCALARS,
                           n_max=3):
    """Whether orbit reduction mispredicts the exact homology.

    Uses the content-aware reduction and tries both orientations of the
    operation pair (the scalar vector is asymmetric in them); a class is a
    failure when either orientation disagrees with the oracle.
    """
    t1, t2 = pair
    for u, v in ((t1, t2), (t2, t1)) if t1 != t2 else ((t1, t2),):
        m = MultiMagma([u, v])
        big = augment_with_trivial(m, add_left=True, add_right=True)
        actual = homology_profile(big, scalars, init_norm_part(0), n_max)
        pred = reduce_by_orbits(m, scalars, n_max, refined=True)
        if any(actual[n] != pred.cf[n] for n in range(n_max + 1)):
            return True
    return False


def _render(groups):
    return " | ".join(str(g) for g in groups)


def reproduce_paper_tables():
    lines = []
    ok = True
    scal = goldens.FOUR_ELEMENT_SCALARS

    # second structure: fully reproducible
    ex2 = goldens.FOUR_ELEMENT_EXAMPLE_2
    m2 = MultiMagma(ex2["ops"])
    big2 = augment_with_trivial(m2, add_left=True, add_right=True)
    actual2 = list(homology_profile(big2, scal, init_norm_part(0), 3))
    pred2 = list(reduce_by_orbits(m2, scal, 3).cf)
    a_ok = actual2 == ex2["actual"]
    p_ok = pred2 == ex2["predicted"]
    ok = ok and a_ok and p_ok
    lines.append("second 4-element structure:")
    lines.append(f"  actual    {_render(actual2)}   "
                 f"{'== published' if a_ok else '!= published'}")
    lines.append(f"  predicted {_render(pred2)}   "
                 f"{'== published' if p_ok else '!= published'}")

    # first structure: the published operation table is defective (its
    # second operation is not self-distributive), so only the predicted
    # column is computable; the published "actual" column matches no
    # 4-element structure of this kind at all.
    t1 = [[0, 1, 0, 1], [0, 1, 0, 1], [0, 1, 2, 3], [0, 1, 2, 3]]
    t2 = [[0, 1, 2, 3], [1, 1, 2, 3], [0, 1, 2, 3], [1, 1, 2, 3]]
    m1 = MultiMagma([t1, t2])
    pred1 = list(reduce_by_orbits(m1, scal, 3).cf)
    ex1 = goldens.FOUR_ELEMENT_EXAMPLE_1
    p1_ok = pred1 == ex1["predicted"]
    ok = ok and p1_ok
    lines.append("first 4-element structure (as printed):")
    lines.append(f"  predicted {_render(pred1)}   "
                 f"{'== published (all trivial)' if p1_ok else '!= published'}")
    lines.append("  actual    BLOCKED: the printed second operation is not "
                 "self-distributive, so no chain complex exists; "
                 "exhaustive search shows no 4-element structure attains "
                 "the published column (see decisions notes)")
    return ok, "\n".join(lines)


def reproduce_b1_grid(span=2, n_max=5):
    """Sweep all scalar vectors with |entries| <= span over the two-element
    lattice and compare every part against the closed formulas."""
    b1 = boolean_algebra(1)
    t0 = time.time()
    checked = 0
    bad = []
    rng = range(-span, span + 1)
    for a, b, c, d in product(rng, rng, rng, rng):
        scal = (a, b, c, d)
        params = LatticeParams(2, 1, scal)
        red = homology_profile(b1, scal, reduced_part(0), n_max)
        fpr = homology_profile(b1, scal, init_deg_part(0), n_max)
        cfp = homology_profile(b1, scal, init_norm_part(0), n_max)
        nor = homology_profile(b1, scal, NORMALIZED, n_max)
        for n in range(n_max + 1):
            wanted = (
                (red[n], hom_b1_reduced(a, b, c, d, n)),
                (fpr[n], hom_lattice(params, n, "init_deg")),
                (cfp[n], hom_lattice(params, n, "init_norm")),
                (nor[n], hom_normalized_lattice(params, n)),
            )
            for got, want in wanted:
                checked += 1
                if got != want:
                    bad.append((scal, n, str(got), str(want)))
    text = (f"two-element lattice grid: {(2 * span + 1) ** 4} scalar "
            f"vectors, degrees 0..{n_max}, {checked} comparisons, "
            f"{len(bad)} mismatches [{time.time() - t0:.0f}s]")
    if bad:
        text += "\n" + "\n".join(map(str, bad[:20]))
    return not bad, text


def reproduce_spindle_census():
    failure = lambda t: spindle_orbit_failure(
        t, scalars=goldens.SPINDLE_BRACKET_SCALARS, n_max=3)
    rows = census_table_spindles((3, 4), orbit_failure=failure)
    lines = ["spindle census (sizes 3-4, counts up to isomorphism):"]
    ok = True
    for r in rows:
        want = goldens.SPINDLE_CENSUS.get((r.row, r.column))
        if want is None:
            continue
        w_count, w_bracket = want
        match_count = r.count_iso == w_count
        match_bracket = w_bracket is None or r.bracket_iso == w_bracket
        if not (match_count and match_bracket):
            ok = False
        mark = "ok" if match_count and match_bracket else "MISMATCH"
        lines.append(
            f"  {r.row:10s} {r.column:15s} computed {r.count_iso:4d}"
            f" ({r.bracket_iso})   published {w_count} ({w_bracket})   "
            f"{mark}")
    lines.append("note: the two published cells 185/44 in the first column "
                 "do not match any verified enumeration; every other cell "
                 "and every failure count matches exactly")
    return ok, "\n".join(lines)


def reproduce_pair_census():
    rows = census_table_pairs((3, 4),
                              algorithm_failure=pair_algorithm_failure)
    lines = ["two-operation census (sizes 3-4, counts up to duality):"]
    ok = True
    bycol = {"lattice": "lattice", "skew": "skew",
             "generalized": "generalized"}
    for r in rows:
        want = goldens.PAIR_CENSUS.get((r.row, bycol.get(r.column)))
        if want is None:
            continue
        w_count, w_bracket = want
        match_count = r.count_iso_dual == w_count
        match_bracket = w_bracket is None or r.bracket_iso_dual == w_bracket
        if not (match_count and match_bracket):
            ok = False
        mark = "ok" if match_count and match_bracket else "MISMATCH"
        lines.append(
            f"  {r.row:8s} {r.column:12s} computed {r.count_iso_dual:4d}"
            f" ({r.bracket_iso_dual})   published {w_count} ({w_bracket})   "
            f"{mark}")
    lines.append("note: the lattice column and every generalized-lattice "
                 "count match the published table exactly; the skew column "
                 "and the failure counts outside the fully-unital row "
                 "follow a convention the source does not specify and are "
                 "reported as computed")
    return ok, "\n".join(lines)


_TARGETS = {
    "paper-6.4-tables": reproduce_paper_tables,
    "b1-grid": reproduce_b1_grid,
    "table-1": reproduce_spindle_census,
    "table-2": reproduce_pair_census,
}


def run_target(name):
    try:
        fn = _TARGETS[name]
    except KeyError:
        raise ValueError(f"unknown reproduce target {name!r}") from None
    return fn()
