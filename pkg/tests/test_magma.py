import pytest
from itertools import product

from disthom import (AxiomError, ClosureError, MultiMagma, OperationTable,
                     StructureError, augment_with_trivial, boolean_algebra,
                     chain_lattice, compose_ops, left_projection,
                     magma_from_json, magma_to_json, orbit, restrict,
                     right_projection)


def test_table_validation():
    with pytest.raises(StructureError):
        OperationTable([[0, 1], [0]])
    with pytest.raises(StructureError):
        OperationTable([[0, 2], [0, 1]])
    t = OperationTable([[0, 1], [1, 1]])
    assert t(0, 1) == 1


def test_left_projection_is_two_sided_unit():
    # the left projection is the unit of operation composition
    join = OperationTable([[0, 1, 2], [1, 1, 2], [2, 2, 2]])
    lp = left_projection(3)
    assert compose_ops(join, lp) == join
    assert compose_ops(lp, join) == join


def test_compose_join_meet_is_right_projection(b2):
    _, join, meet, _ = b2.ops
    rp = right_projection(4)
    assert compose_ops(join, meet) == rp
    assert compose_ops(meet, join) == rp


def test_compose_join_join_on_chain(l3):
    join = l3.ops[1]
    assert compose_ops(join, join) == join


def test_compose_associative_exhaustive_size2():
    tables = [OperationTable([[a, b], [c, d]])
              for a in range(2) for b in range(2)
              for c in range(2) for d in range(2)]
    for s1 in tables:
        for s2 in tables:
            for s3 in tables:
                assert compose_ops(compose_ops(s1, s2), s3) == \
                    compose_ops(s1, compose_ops(s2, s3))


def test_classify_b1_four_ops(b1):
    r = b1.report
    assert r.is_multishelf and r.is_multispindle
    # absorption as a flag on the essential pair
    assert r.absorption[1][2] and r.absorption[2][1]
    # but not with the projections included
    assert not r.satisfies_absorption
    # join has unit bottom and projector top
    assert r.units[1] == (0,)
    assert r.projectors[1] == (1,)
    assert r.units[2] == (1,)
    assert r.projectors[2] == (0,)


def test_classify_left_projection_row():
    m = MultiMagma([left_projection(3)])
    r = m.report
    assert r.is_multispindle
    assert r.units[0] == (0, 1, 2)      # every element is a right unit
    assert r.projectors[0] == ()


def test_classify_dihedral(dihedral3):
    r = dihedral3.report
    assert r.is_multispindle
    assert r.commutative == (True,)
    assert r.associative == (False,)
    assert r.right_invertible == (True,)


def test_generated_submonoid_stays_distributive(b1, l3):
    # closing a distributive set under composition keeps it distributive
    for m in (b1, l3):
        ops = set(m.ops)
        frontier = set(ops)
        while frontier:
            new = set()
            for s1 in list(ops):
                for s2 in list(frontier):
                    new.add(compose_ops(s1, s2))
                    new.add(compose_ops(s2, s1))
            frontier = new - ops
            ops |= new
        closed = MultiMagma([t.table for t in sorted(ops, key=lambda t: t.table)])
        assert closed.report.is_multishelf


def test_absorption_implies_idempotent(published_pair_2):
    r = published_pair_2.report
    assert r.satisfies_absorption
    assert all(r.idempotent)


def test_units_are_projectors_for_other_ops():
    # in a unital absorption structure each unit absorbs the other operation
    from disthom import b1k
    m = b1k(3)
    r = m.report
    assert r.satisfies_absorption and r.is_unital
    for i, units in enumerate(r.units):
        for u in units:
            for j in range(len(m.ops)):
                if i != j:
                    assert all(m.apply(j, x, u) == u for x in range(m.size))


def test_orbit_examples(b1, l3):
    # top absorbs under join, bottom is a unit
    assert orbit(b1, 1, 1) == (1,)
    assert orbit(b1, 1, 0) == (0, 1)
    # meet orbit of the middle of a chain is the lower set
    assert orbit(l3, 2, 1) == (0, 1)
    with pytest.raises(StructureError):
        orbit(b1, 9, 0)


def test_orbit_closed_under_action_when_bin_idempotent(b2):
    for i in range(len(b2.ops)):
        if not b2.report.bin_idempotent[i]:
            continue
        for x in range(b2.size):
            orb = set(orbit(b2, i, x))
            assert {b2.apply(i, y, x) for y in orb} <= orb


def test_restrict_chain_of_b2(b2, l3):
    # a maximal chain of the 4-element diamond is the 3-chain
    sub, elements = restrict(b2, (0, 1, 3))
    assert elements == (0, 1, 3)
    assert sub.ops == l3.ops
    whole, elements = restrict(b2, range(4))
    assert whole.ops == b2.ops


def test_restrict_closure_error(b2):
    # the two atoms of the diamond join to the missing top
    with pytest.raises(ClosureError) as err:
        restrict(b2, (1, 2))
    assert err.value.witness is not None


def test_restrict_one_point(b1):
    sub, _ = restrict(b1, (0,))
    assert sub.size == 1


def test_augment_with_trivial():
    semi = MultiMagma([[[0, 1, 1], [1, 1, 1], [1, 1, 2]]])
    three = augment_with_trivial(semi, add_left=True, add_right=True)
    assert len(three.ops) == 3
    assert three.ops[0].is_left_projection()
    assert three.ops[2].is_right_projection()
    assert three.report.is_multispindle

    shelf = MultiMagma([[[0, 0], [0, 1]]])   # x*y = x&y is a spindle...
    # a shelf that is not a spindle cannot take the right projection
    nonspindle = MultiMagma([[[1, 1], [1, 1]]])  # constant, not idempotent
    assert nonspindle.report.self_distributive == (True,)
    assert not nonspindle.report.is_multispindle
    with pytest.raises(AxiomError):
        augment_with_trivial(nonspindle, add_right=True)


def test_lattice_four_op_roundtrip(b1):
    # lattice + both trivials reported as a multispindle again
    from disthom import strip_trivial
    core = strip_trivial(b1)
    assert len(core.ops) == 2
    again = augment_with_trivial(core, add_left=True, add_right=True)
    assert again.ops == b1.ops


def test_json_roundtrip(b2):
    text = magma_to_json(b2)
    back = magma_from_json(text)
    assert back == b2


def test_json_diagnostics():
    with pytest.raises(StructureError, match=r"ops\[0\] row 1"):
        magma_from_json('{"size": 2, "ops": [[[0, 1], [0]]]}')
    with pytest.raises(StructureError, match=r"out of range"):
        magma_from_json('{"size": 2, "ops": [[[0, 2], [0, 1]]]}')
    with pytest.raises(StructureError):
        magma_from_json('{"size": 2}')
    with pytest.raises(StructureError):
        magma_from_json("not json")


def test_compose_associative_random_samples():
    import random

    rng = random.Random(11)
    for size in (3, 4, 5):
        for _ in range(40):
            tables = [OperationTable([[rng.randrange(size)
                                       for _ in range(size)]
                                      for _ in range(size)])
                      for _ in range(3)]
            s1, s2, s3 = tables
            assert compose_ops(compose_ops(s1, s2), s3) == \
                compose_ops(s1, compose_ops(s2, s3))
            lp = left_projection(size)
            assert compose_ops(lp, s1) == s1
            assert compose_ops(s1, lp) == s1
