import pytest

from disthom import (AxiomError, MultiMagma, analyze_lattice,
                     augment_with_trivial, b1k, boolean_algebra,
                     chain_lattice, cyclic, hom_b1_reduced, hom_lattice,
                     homology_profile, init_deg_part, init_norm_part,
                     irreducible_homology, is_irreducible, lattice_params,
                     mv_check, reduce_by_orbits, strip_trivial)
from disthom.abgroups import TRIVIAL


def test_is_irreducible_b1(b1):
    core = strip_trivial(b1)
    flag, mult = is_irreducible(core)
    assert flag and mult == (1, 1)


def test_is_irreducible_b1k():
    flag, mult = is_irreducible(b1k(3))
    assert flag and mult == (1, 1, 1)


def test_b2_reducible(b2):
    core = strip_trivial(b2)
    flag, mult = is_irreducible(core)
    assert not flag and mult is None


def test_is_irreducible_needs_absorption(b1):
    # the four-operation lattice system does not satisfy pairwise absorption
    with pytest.raises(AxiomError):
        is_irreducible(b1)


def test_irreducible_homology_matches_b1_closed_form():
    for scal in ((1, 1, 1, 1), (4, 5, 2, 0), (0, 0, 0, 2), (2, 2, 2, 2),
                 (1, -1, -1, 1)):
        cf, f = irreducible_homology((1, 1), scal, 4)
        from disthom import LatticeParams
        params = LatticeParams(2, 1, scal)
        for n in range(5):
            assert cf[n] == hom_lattice(params, n, "CF"), (scal, n)
            assert f[n] == hom_lattice(params, n, "F"), (scal, n)


def test_irreducible_homology_coprime_is_trivial():
    cf, f = irreducible_homology((1, 1), (1, 2, 0, 0), 3)
    assert all(g.is_trivial() for g in cf)
    assert all(g.is_trivial() for g in f)


def test_irreducible_homology_zero_scalars_free():
    cf, _ = irreducible_homology((1, 1, 1), (0, 0, 0, 0), 3)
    for n, g in enumerate(cf):
        want = 2 if n == 0 else 3 ** n * 2
        assert g.free_rank == want and not g.torsion


def test_irreducible_homology_gcd_conventions():
    # one unital operation: the unital convention uses its pair only
    cf_u, _ = irreducible_homology((2, 0), (4, 5, 2, 0), 1,
                                   gcd_over="unital")
    cf_a, _ = irreducible_homology((2, 0), (4, 5, 2, 0), 1, gcd_over="all")
    assert cf_u[0] == cyclic(9)
    assert cf_a[0] == cyclic(3)


def test_irreducible_homology_oracle_agreement():
    # the three-element unital structure with three operations
    m = b1k(3)
    big = augment_with_trivial(m, add_left=True, add_right=True)
    for scal in ((1, 1, 1, 1, 1), (2, 1, 3, 1, 0), (3, 3, 3, 3, 3)):
        cf, f = irreducible_homology((1, 1, 1), scal, 3)
        got_cf = homology_profile(big, scal, init_norm_part(0), 3)
        got_f = homology_profile(big, scal, init_deg_part(0), 3)
        for n in range(4):
            assert cf[n] == got_cf[n], (scal, n)
            assert f[n] == got_f[n], (scal, n)


def test_published_reduce_matches_closed_form_at_coprime_scalars():
    # without content extraction the splitting needs coprime essentials
    from disthom import product_lattice
    mags = [boolean_algebra(1), chain_lattice(3), boolean_algebra(2)]
    scals = ((1, 1, 1, 1), (4, 5, 2, 0), (1, -1, -1, 0), (2, 3, 0, 1))
    for m in mags:
        core = strip_trivial(m)
        info = analyze_lattice(*core.ops)
        for scal in scals:
            params = lattice_params(info, scal)
            res = reduce_by_orbits(core, scal, 3)
            for n in range(4):
                assert res.cf[n] == hom_lattice(params, n, "CF"), (scal, n)
                assert res.f[n] == hom_lattice(params, n, "F"), (scal, n)
                assert res.reduced[n] == hom_lattice(params, n, "reduced")


def test_refined_reduce_matches_closed_form_everywhere():
    # the content-aware variant reproduces the theorem at every scalar
    # vector, including non-coprime and degenerate ones
    from disthom import product_lattice
    mags = [boolean_algebra(1), chain_lattice(3), chain_lattice(4),
            boolean_algebra(2),
            product_lattice(chain_lattice(2), chain_lattice(3))]
    scals = ((1, 1, 1, 1), (4, 5, 2, 0), (0, 0, 0, 1), (2, 0, 2, 0),
             (1, -1, -1, 0), (2, 2, 2, 2), (0, 0, 0, 0), (6, 2, 4, 3),
             (2, 4, 2, -8), (0, 3, 0, 0))
    for m in mags:
        core = strip_trivial(m)
        info = analyze_lattice(*core.ops)
        for scal in scals:
            params = lattice_params(info, scal)
            res = reduce_by_orbits(core, scal, 3, refined=True)
            for n in range(4):
                assert res.cf[n] == hom_lattice(params, n, "CF"), (scal, n)
                assert res.f is not None, scal
                assert res.f[n] == hom_lattice(params, n, "F"), (scal, n)


def test_reduce_matches_oracle_on_lattices(b2):
    core = strip_trivial(b2)
    for scal in ((1, 1, 1, 1), (2, 3, 5, 7)):
        res = reduce_by_orbits(core, scal, 3)
        oracle = homology_profile(b2, scal, init_norm_part(0), 3)
        assert list(res.cf) == list(oracle)


def test_reduce_tree_shape(b2):
    core = strip_trivial(b2)
    res = reduce_by_orbits(core, (1, 1, 1, 1), 2)
    tree = res.tree
    # the bottom's join orbit is everything, so the first usable pivot is
    # the first atom
    assert tree["pivot"] == 1
    assert tree["orbit_intersections_trivial"]
    kinds = [("point" in c, "irreducible" in c) for c in tree["children"]]
    assert len(tree["children"]) == 2
    # both branches of the diamond eventually reach two-element leaves
    def leaves(node):
        if "children" not in node:
            yield node
        else:
            for c in node["children"]:
                yield from leaves(c)
    leaf_list = list(leaves(tree))
    assert sum(1 for leaf in leaf_list if leaf.get("irreducible")) == 2


def test_reduce_strict_requires_units(published_pair_2):
    with pytest.raises(AxiomError):
        reduce_by_orbits(published_pair_2, (4, 5, 2, 0), 2, strict=True)
    res = reduce_by_orbits(published_pair_2, (4, 5, 2, 0), 2)
    assert res.cf[0] == cyclic(3, 2)


def test_reduce_validates_scalars(b2):
    core = strip_trivial(b2)
    with pytest.raises(Exception):
        reduce_by_orbits(core, (1, 1, 1), 2)


def test_mv_check_on_diamond(b2):
    core = strip_trivial(b2)
    # pivot at an atom: orbits are the up-set and down-set, meeting in it
    rep = mv_check(core, 1, (1, 1, 1, 1), 2)
    assert rep.intersection == (1,)
    assert rep.rank_accounting_ok
    assert rep.splitting_applicable and rep.splitting_ok
    assert rep.ok()


def test_mv_check_invertible_coefficient(b2):
    core = strip_trivial(b2)
    rep = mv_check(core, 2, (1, 2, 3, 4), 3)
    assert rep.a_invertible
    assert rep.rank_accounting_ok


def test_mv_check_rectangular_not_applicable():
    from disthom import left_projection, right_projection
    rect = MultiMagma([left_projection(2), right_projection(2)])
    rep = mv_check(rect, 0, (1, 1, 1, 1), 2)
    # the two orbits are the whole carrier and a point; the intersection is
    # not a single point shared by two proper orbits, so no splitting claim
    assert not rep.splitting_applicable
    assert rep.splitting_ok is None
