"""Command-line front end.

Exit codes: 0 success; 1 a verification found a disagreement; 2 bad input;
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import goldens
from .complexes import (DEFAULT_BASIS_BUDGET, ScalarVector,
                        default_basepoint, parse_part)
from .enumeration import (census_table_pairs, census_table_spindles,
                          census_to_csv, enumerate_structures)
from .formulas import (hom_lattice, hom_normalized_lattice, lattice_params)
from .homology import homology_profile
from .lattices import analyze_lattice, hasse_text, lattice_ops
from .magma import (AxiomError, BudgetError, StructureError,
                    augment_with_trivial, load_magma, magma_to_dict)
from .reduction import mv_check, reduce_by_orbits
from .scans import conjecture_scan, spindle_orbit_failure


def _scalars(text):
    try:
        return ScalarVector(int(v) for v in text.split(","))
    except ValueError as exc:
        raise StructureError(f"bad scalar list {text!r}: {exc}") from None


def _load(args):
    m = load_magma(args.input)
    adjoin = getattr(args, "adjoin_trivial", None)
    if adjoin:
        wanted = {w.strip() for w in adjoin.split(",") if w.strip()}
        bad = wanted - {"left", "right", "none"}
        if bad:
            raise StructureError(f"--adjoin-trivial got {sorted(bad)}")
        m = augment_with_trivial(m, add_left="left" in wanted,
                                 add_right="right" in wanted)
    return m


def _emit(args, payload, text):
    if getattr(args, "format", "text") == "json":
        print(json.dumps(payload, indent=1, sort_keys=True))
    else:
        print(text)


def cmd_check(args):
    m = _load(args)
    r = m.report
    lines = [f"size {m.size}, operations {len(m.ops)}"]
    flags = [
        ("multishelf (distributive set)", r.is_multishelf),
        ("multispindle", r.is_multispindle),
        ("absorption", r.satisfies_absorption),
        ("unital", r.is_unital),
        ("irreducible", r.is_irreducible),
    ]
    lines += [f"  {name}: {'yes' if v else 'no'}" for name, v in flags]
    for i in range(len(m.ops)):
        label = m.labels[i] if m.labels else f"op{i}"
        lines.append(
            f"  {label}: self-distributive={r.self_distributive[i]} "
            f"idempotent={r.idempotent[i]} "
            f"composition-idempotent={r.bin_idempotent[i]} "
            f"associative={r.associative[i]} commutative={r.commutative[i]} "
            f"units={list(r.units[i])} projectors={list(r.projectors[i])}")
    payload = {
        "size": m.size,
        "fingerprint": m.fingerprint(),
        "multishelf": r.is_multishelf,
        "multispindle": r.is_multispindle,
        "absorption": r.satisfies_absorption,
        "unital": r.is_unital,
        "irreducible": r.is_irreducible,
        "units": [list(u) for u in r.units],
        "projectors": [list(p) for p in r.projectors],
    }
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_homology(args):
    m = _load(args)
    part = parse_part(args.part, basepoint=args.basepoint,
                      augmented=args.augmented)
    prof = homology_profile(m, _scalars(args.scalars), part,
                            args.max_degree, max_basis=args.budget)
    _emit(args, prof.to_json(), prof.render())
    return 0


def cmd_closed_form(args):
    m = _load(args)
    join, meet = lattice_ops(m)
    info = analyze_lattice(join, meet)
    params = lattice_params(info, _scalars(args.scalars))
    part = args.part.lower()
    groups = []
    for n in range(args.max_degree + 1):
        if part in ("normalized", "n"):
            groups.append(hom_normalized_lattice(params, n))
        else:
            groups.append(hom_lattice(params, n, part))
    text = "\n".join(f"H_{n} = {g}" for n, g in enumerate(groups))
    payload = {"part": part, "size": params.size,
               "irreducibles": params.irreducibles,
               "scalars": list(params.scalars),
               "groups": [dict(degree=n, **g.to_json())
                          for n, g in enumerate(groups)]}
    _emit(args, payload, text)
    return 0


def cmd_compare(args):
    """Three-way comparison: oracle vs closed forms vs orbit reduction."""
    m = _load(args)
    scal = _scalars(args.scalars)
    n_max = args.max_degree
    t = args.basepoint if args.basepoint is not None else default_basepoint(m)
    mismatch_in_domain = False
    report = {"degrees": n_max, "scalars": list(scal), "methods": {}}
    lines = []

    big = m if len(scal) == len(m.ops) else None
    if big is None:
        raise StructureError(
            f"{len(m.ops)} operations but {len(scal)} scalars "
            "(use --adjoin-trivial to move to the 4-op convention)")
    oracle = {}
    for part_name in ("CF", "F", "reduced"):
        prof = homology_profile(m, scal, parse_part(part_name, basepoint=t),
                                n_max, max_basis=args.budget)
        oracle[part_name] = prof
        report["methods"].setdefault("oracle", {})[part_name] = \
            [str(g) for g in prof]
    lines.append("oracle (exact matrices):")
    for part_name in ("CF", "F", "reduced"):
        lines.append(f"  {part_name}: "
                     + " | ".join(str(g) for g in oracle[part_name]))

    # closed forms apply to verified distributive lattices
    closed_applicable = False
    if len(scal) == 4:
        try:
            join, meet = lattice_ops(m)
            info = analyze_lattice(join, meet)
            if info.is_distributive:
                closed_applicable = True
                params = lattice_params(info, scal)
                rows = {}
                for part_name in ("CF", "F", "reduced"):
                    key = {"CF": "init_norm", "F": "init_deg"}.get(
                        part_name, "reduced")
                    rows[part_name] = [hom_lattice(params, n, key)
                                      for n in range(n_max + 1)]
                report["methods"]["closed_form"] = {
                    p: [str(g) for g in gs] for p, gs in rows.items()}
                lines.append("closed form (distributive lattice):")
                for part_name in ("CF", "F", "reduced"):
                    agree = all(a == b for a, b in
                                zip(rows[part_name], oracle[part_name]))
                    if not agree:
                        mismatch_in_domain = True
                    lines.append(
                        f"  {part_name}: "
                        + " | ".join(str(g) for g in rows[part_name])
                        + ("   == oracle" if agree else "   != oracle"))
        except (AxiomError, StructureError):
            closed_applicable = False
    if not closed_applicable:
        lines.append("closed form: not applicable "
                     "(input is not a verified distributive lattice)")

    # orbit reduction applies to absorption multishelves
    core = m
    if len(core.ops) >= 3:
        from .magma import strip_trivial
        core = strip_trivial(core)
    reduce_applicable = (len(core.ops) >= 2
                         and core.report.satisfies_absorption)
    if reduce_applicable:
        res = reduce_by_orbits(core, scal, n_max)
        in_domain = core.report.is_unital
        report["methods"]["orbit_reduction"] = {
            "CF": [str(g) for g in res.cf],
            "F": [str(g) for g in res.f],
            "in_validity_domain": in_domain,
        }
        lines.append("orbit reduction"
                     + (" (proven domain):" if in_domain
                        else " (outside proven domain):"))
        for part_name, groups in (("CF", res.cf), ("F", res.f)):
            agree = all(a == b for a, b in zip(groups, oracle[part_name]))
            if not agree and in_domain:
                mismatch_in_domain = True
            lines.append(f"  {part_name}: "
                         + " | ".join(str(g) for g in groups)
                         + ("   == oracle" if agree else "   != oracle"))
    else:
        lines.append("orbit reduction: not applicable (needs an absorption "
                     "multishelf on two or more operations)")

    report["disagreement_in_domain"] = mismatch_in_domain
    _emit(args, report, "\n".join(lines))
    return 1 if mismatch_in_domain else 0


def cmd_reduce(args):
    m = _load(args)
    res = reduce_by_orbits(m, _scalars(args.scalars), args.max_degree,
                           strict=args.strict, gcd_over=args.gcd_over)
    text = ("predicted CF: " + " | ".join(str(g) for g in res.cf)
            + "\npredicted F:  " + " | ".join(str(g) for g in res.f)
            + "\ntree: " + json.dumps(res.tree))
    _emit(args, res.to_json(), text)
    return 0


def cmd_mv(args):
    m = _load(args)
    rep = mv_check(m, args.pivot, _scalars(args.scalars), args.max_degree)
    payload = {
        "pivot": rep.pivot,
        "orbits": [list(o) for o in rep.orbits],
        "intersection": list(rep.intersection),
        "rank_accounting_ok": rep.rank_accounting_ok,
        "splitting_applicable": rep.splitting_applicable,
        "splitting_ok": rep.splitting_ok,
        "a_invertible": rep.a_invertible,
        "profiles": {k: [str(g) for g in v]
                     for k, v in rep.profiles.items()},
    }
    lines = [f"orbits of {rep.pivot}: {list(rep.orbits[0])} and "
             f"{list(rep.orbits[1])}, intersection {list(rep.intersection)}",
             f"rank accounting over Q: "
             f"{'ok' if rep.rank_accounting_ok else 'FAILED'}"]
    if rep.splitting_applicable:
        lines.append(f"one-point splitting: "
                     f"{'ok' if rep.splitting_ok else 'FAILED'}")
    _emit(args, payload, "\n".join(lines))
    return 0 if rep.ok() else 1


def cmd_enumerate(args):
    count = 0
    for m in enumerate_structures(args.size, args.predicate, args.dedup):
        count += 1
        if args.format == "json":
            print(json.dumps(magma_to_dict(m)))
        else:
            print(f"# {m.fingerprint()}")
            for op in m.ops:
                for row in op.table:
                    print(" ".join(map(str, row)))
                print()
    print(f"# total: {count}", file=sys.stderr)
    return 0


def cmd_census(args):
    sizes = tuple(int(s) for s in args.sizes.split(","))
    if args.table == 1:
        failure = (lambda t: spindle_orbit_failure(
            t, scalars=goldens.SPINDLE_BRACKET_SCALARS, n_max=3)) \
            if args.brackets else None
        rows = census_table_spindles(sizes, orbit_failure=failure)
    else:
        failure = None
        if args.brackets:
            from .reproduce import pair_algorithm_failure
            failure = pair_algorithm_failure
        rows = census_table_pairs(sizes, algorithm_failure=failure)
    if args.format == "json":
        print(json.dumps([r.to_json() for r in rows], indent=1))
    else:
        print(census_to_csv(rows), end="")
    return 0


def cmd_scan(args):
    rep = conjecture_scan(args.which, max_size=args.max_size,
                          n_max=args.max_degree)
    if args.format == "json":
        print(json.dumps(rep.to_json(), indent=1))
    else:
        print(f"{rep.which}: {rep.structures} structures, "
              f"{rep.comparisons} comparisons, "
              f"{len(rep.counterexamples)} counterexamples, "
              f"{len(rep.skipped)} skipped")
        for c in rep.counterexamples:
            print("  counterexample:", c)
    return 0 if rep.ok else 1


def cmd_reproduce(args):
    from . import reproduce
    ok, text = reproduce.run_target(args.target)
    print(text)
    return 0 if ok else 1


def cmd_hasse(args):
    m = _load(args)
    join, meet = lattice_ops(m)
    info = analyze_lattice(join, meet)
    print(hasse_text(info.poset))
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="disthom",
        description="Exact multi-term distributive homology of finite "
                    "magmas, lattices and skew lattices.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, scalars=True, degree=True):
        sp.add_argument("input", help="magma JSON file")
        sp.add_argument("--adjoin-trivial", default=None,
                        help="left,right — adjoin trivial projections")
        if scalars:
            sp.add_argument("--scalars", required=True,
                            help="comma-separated integers, one per "
                                 "operation")
        if degree:
            sp.add_argument("--max-degree", type=int, default=3)
        sp.add_argument("--budget", type=int, default=DEFAULT_BASIS_BUDGET,
                        help="largest allowed tuple basis")
        sp.add_argument("--format", choices=("text", "json"),
                        default="text")

    sp = sub.add_parser("check", help="verify axioms and report structure")
    common(sp, scalars=False, degree=False)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("homology", help="exact homology of a part")
    common(sp)
    sp.add_argument("--part", default="reduced",
                    help="full | reduced | F | CF | degenerate | normalized "
                         "| filtration:p")
    sp.add_argument("--basepoint", type=int, default=None)
    sp.add_argument("--augmented", action="store_true")
    sp.set_defaults(func=cmd_homology)

    sp = sub.add_parser("closed-form",
                        help="closed-form homology of a distributive lattice")
    common(sp)
    sp.add_argument("--part", default="reduced",
                    help="CF | F | reduced | full | normalized")
    sp.set_defaults(func=cmd_closed_form)

    sp = sub.add_parser("compare",
                        help="oracle vs closed form vs orbit reduction")
    common(sp)
    sp.add_argument("--basepoint", type=int, default=None)
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("reduce", help="orbit-reduction prediction")
    common(sp)
    sp.add_argument("--strict", action="store_true",
                    help="enforce the proven unital hypothesis")
    sp.add_argument("--gcd-over", choices=("all", "unital"), default="all")
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("mv", help="two-orbit exact-sequence check")
    common(sp)
    sp.add_argument("--pivot", type=int, required=True)
    sp.set_defaults(func=cmd_mv)

    sp = sub.add_parser("enumerate", help="stream structures of a class")
    sp.add_argument("--size", type=int, required=True)
    sp.add_argument("--predicate", required=True,
                    help="spindle | semilattice | commutative-spindle | "
                         "unital-spindle | lattice | skew-lattice | "
                         "generalized-lattice")
    sp.add_argument("--dedup", choices=("none", "iso", "iso+duality"),
                    default="iso")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("census", help="census tables with brackets")
    sp.add_argument("--table", type=int, choices=(1, 2), required=True)
    sp.add_argument("--sizes", default="3,4")
    sp.add_argument("--brackets", action="store_true",
                    help="recompute failure counts by homology comparison")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("scan", help="conjecture scans")
    sp.add_argument("--which", required=True,
                    choices=("spindle-orbit", "commutative-orbit",
                             "semilattice-projector", "skew-unique-extremum"))
    sp.add_argument("--max-size", type=int, default=4)
    sp.add_argument("--max-degree", type=int, default=3)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("reproduce",
                        help="recompute a published table and diff it")
    sp.add_argument("--target", required=True,
                    choices=("paper-6.4-tables", "table-1", "table-2",
                             "b1-grid"))
    sp.set_defaults(func=cmd_reproduce)

    sp = sub.add_parser("hasse", help="cover relations of a lattice file")
    common(sp, scalars=False, degree=False)
    sp.set_defaults(func=cmd_hasse)

    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetError as exc:
        print(f"budget error: {exc}", file=sys.stderr)
        return 3
    except (StructureError, AxiomError, FileNotFoundError,
            json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
