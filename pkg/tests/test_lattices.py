import pytest

from disthom import (AxiomError, MultiMagma, analyze_lattice,
                     analyze_semilattice, analyze_skew, b1k, boolean_algebra,
                     build_standard, canonical_key, chain_lattice, dual_pair,
                     hasse_text, lattice_ops, n5_lattice, product_lattice)


def test_semilattice_diamond_order(b2):
    poset = analyze_semilattice(b2.ops[1])
    # subset inclusion on the 2-element ground set
    assert poset.bottom() == 0 and poset.top() == 3
    assert poset.leq[1][3] and poset.leq[2][3]
    assert not poset.leq[1][2] and not poset.leq[2][1]


def test_semilattice_rooted_tree():
    # Y-tree: two leaves under a root; the operation is the nearest common
    # ancestor toward the root
    table = [[0, 1, 1], [1, 1, 1], [1, 1, 2]]
    poset = analyze_semilattice(table)
    assert poset.top() == 1
    assert poset.minimal_elements() == (0, 2)


def test_semilattice_rejects_left_projection():
    from disthom import left_projection
    with pytest.raises(AxiomError, match="commutative"):
        analyze_semilattice(left_projection(2))


def test_analyze_lattice_b2(b2):
    info = analyze_lattice(b2.ops[1], b2.ops[2])
    assert info.irreducible_count == 2
    assert set(info.join_irreducibles) == {1, 2}
    assert info.max_chain_length == 2
    assert info.is_distributive and not info.is_chain
    assert (info.bottom, info.top) == (0, 3)


def test_analyze_lattice_chain():
    m = chain_lattice(4)
    info = analyze_lattice(m.ops[1], m.ops[2])
    assert info.irreducible_count == 3
    assert info.is_chain
    assert info.max_chain_length == 3


def test_n5_not_distributive():
    m = n5_lattice()
    info = analyze_lattice(m.ops[1], m.ops[2])
    assert not info.is_distributive
    assert info.size == 5


def test_max_chain_equals_irreducibles_for_distributive():
    # the count of non-minimal irreducibles equals the maximal chain length
    mags = [boolean_algebra(1), boolean_algebra(2), boolean_algebra(3),
            chain_lattice(2), chain_lattice(5),
            product_lattice(chain_lattice(3), chain_lattice(3)),
            product_lattice(chain_lattice(2), chain_lattice(4))]
    for m in mags:
        info = analyze_lattice(m.ops[1], m.ops[2])
        assert info.is_distributive
        assert info.irreducible_count == info.max_chain_length


def test_l3xl3_irreducibles(l3xl3):
    info = analyze_lattice(l3xl3.ops[1], l3xl3.ops[2])
    assert info.size == 9
    assert info.irreducible_count == 4
    assert info.is_distributive


def test_ideals_filters(b2, l3):
    info = analyze_lattice(b2.ops[1], b2.ops[2])
    assert info.principal_ideal(1) == (0, 1)
    assert info.principal_filter(1) == (1, 3)
    # down- and up-sets are closed sublattices but need not cover the carrier
    from disthom import restrict
    restrict(b2, info.principal_ideal(1))
    restrict(b2, info.principal_filter(1))
    assert set(info.principal_ideal(1)) | set(info.principal_filter(1)) \
        != set(range(4))


def test_build_standard_dispatch():
    assert build_standard("boolean:1").size == 2
    assert build_standard("chain:4").size == 4
    assert build_standard("n5").size == 5
    assert build_standard("product:chain:3,chain:3").size == 9
    assert build_standard("b1k:3").size == 3


def test_b1k2_is_the_two_element_lattice(b1):
    pair = b1k(2)
    # the k = 2 case degenerates to the lattice's essential pair, up to
    # relabeling and operation order
    essential = (b1.ops[1].table, b1.ops[2].table)
    assert canonical_key(tuple(op.table for op in pair.ops), dual=True) == \
        canonical_key(essential, dual=True)


def test_b1k_units(b1):
    m = b1k(3)
    assert m.report.satisfies_absorption
    assert m.report.is_unital
    assert [len(u) for u in m.report.units] == [1, 1, 1]


def test_dual_pair_roundtrip(b2):
    d = dual_pair(b2)
    assert d.ops[1] == b2.ops[2] and d.ops[2] == b2.ops[1]
    assert dual_pair(d) == b2


def test_hasse_text(l3):
    info = analyze_lattice(l3.ops[1], l3.ops[2])
    assert hasse_text(info.poset) == "elements 3\n0 < 1\n1 < 2"


def test_skew_of_genuine_lattice(b2):
    join, meet = lattice_ops(b2)
    info = analyze_skew(meet, join)
    assert info.is_rectangular is False
    assert all(len(c) == 1 for c in info.d_classes)
    assert info.conjugated_join == join
    assert info.conjugated_meet == meet
    assert info.has_unique_min and info.has_unique_max


def test_skew_rectangular():
    from disthom import left_projection, right_projection
    land = left_projection(2)
    lor = right_projection(2)
    info = analyze_skew(land, lor)
    assert info.is_rectangular
    assert len(info.d_classes) == 1
    # conjugates collapse to the projections
    assert info.conjugated_join.is_left_projection() or \
        info.conjugated_join.is_right_projection()
    assert info.quotient.size == 1


def test_skew_three_element():
    # a singleton class over a rectangular two-element class; the quotient
    # is the two-element lattice
    land = [[0, 1, 2], [1, 1, 1], [2, 2, 2]]
    lor = [[0, 0, 0], [0, 1, 2], [0, 1, 2]]
    info = analyze_skew(land, lor)
    assert sorted(map(len, info.d_classes)) == [1, 2]
    assert info.quotient.size == 2
    assert info.has_unique_min != info.has_unique_max
    # conjugated operations are composition-idempotent
    cj, cm = info.conjugated_join, info.conjugated_meet
    for t in (cj.table, cm.table):
        assert all(t[t[x][y]][y] == t[x][y] for x in range(3)
                   for y in range(3))


def test_skew_rejects_broken_absorption():
    with pytest.raises(AxiomError):
        analyze_skew([[0, 0], [1, 1]], [[0, 0], [1, 1]])


def test_ideals_and_filters_are_lattices(b2, l3xl3):
    from disthom import restrict
    for m in (b2, l3xl3):
        info = analyze_lattice(m.ops[1], m.ops[2])
        for x in range(info.size):
            for subset in (info.principal_ideal(x),
                           info.principal_filter(x)):
                sub, _ = restrict(m, subset)
                analyze_lattice(sub.ops[1], sub.ops[2])


def test_symmetric_skew_quotient_has_section():
    # for a symmetric skew lattice the class map splits by a homomorphism
    from itertools import product as iproduct
    from disthom.scans import enumerate_skew_pairs

    checked = 0
    for t1, t2 in enumerate_skew_pairs(3):
        try:
            info = analyze_skew(t1, t2)
        except Exception:
            info = analyze_skew(t2, t1)
        if not info.is_symmetric or len(info.d_classes) == len(t1):
            continue
        qj, qm = (op.table for op in info.quotient.ops)
        found = False
        for reps in iproduct(*info.d_classes):
            ok = True
            for a in range(len(reps)):
                for b in range(len(reps)):
                    if info.join.table[reps[a]][reps[b]] != reps[qj[a][b]] \
                            or info.meet.table[reps[a]][reps[b]] != \
                            reps[qm[a][b]]:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                found = True
                break
        assert found
        checked += 1
    assert checked > 0
