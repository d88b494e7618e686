import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from disthom import (DEGENERATE, FULL, IntMatrix, MultiMagma, NORMALIZED,
                     StructureError, annihilated_by, boolean_algebra,
                     chain_lattice, cyclic, euler_check, free_group,
                     group_sum, homology_of_matrices, homology_profile,
                     init_deg_part, init_norm_part, full_part, profile_sum,
                     q_scale, qdiff_transform, reduced_part,
                     smith_normal_form)
from disthom.homology import profile_from_groups


def test_one_point_profiles():
    one = MultiMagma([[[0]], [[0]], [[0]]])
    prof = homology_profile(one, (1, 1, 1), full_part(), 4)
    assert [str(g) for g in prof] == ["Z", "Z_3", "0", "Z_3", "0"]
    zero = homology_profile(one, (1, -2, 1), full_part(), 3)
    assert all(g == free_group(1) for g in zero)


def test_zero_scalars_full_is_free(b1):
    prof = homology_profile(b1, (0, 0, 0, 0), FULL, 3)
    for n in range(4):
        assert prof[n] == free_group(2 ** (n + 1))


def test_full_decomposes_into_point_f_cf(small_multishelf_pool):
    from disthom import hom_point
    for m in small_multishelf_pool:
        if not m.report.is_multispindle:
            continue
        t = m.one_point_submagmas()[0]
        k = len(m.ops)
        scal = tuple(((-1) ** i) * (i + 1) for i in range(k))
        full = homology_profile(m, scal, FULL, 3)
        fpart = homology_profile(m, scal, init_deg_part(t), 3)
        cfpart = homology_profile(m, scal, init_norm_part(t), 3)
        for n in range(4):
            assert full[n] == group_sum(hom_point(sum(scal), n),
                                        fpart[n], cfpart[n])


def test_full_decomposes_into_degenerate_normalized(small_multishelf_pool):
    for m in small_multishelf_pool:
        if not m.report.is_multispindle:
            continue
        k = len(m.ops)
        for scal in ((1,) * k, tuple(range(1, k + 1))):
            full = homology_profile(m, scal, FULL, 3)
            deg = homology_profile(m, scal, DEGENERATE, 3)
            norm = homology_profile(m, scal, NORMALIZED, 3)
            assert list(full) == list(profile_sum(deg, norm))


def test_scalar_sum_annihilates_initial_degenerate(small_multishelf_pool):
    for m in small_multishelf_pool:
        if not m.report.is_multispindle:
            continue
        t = m.one_point_submagmas()[0]
        k = len(m.ops)
        for scal in ((1,) * k, (2,) + (1,) * (k - 1)):
            prof = homology_profile(m, scal, init_deg_part(t), 3)
            for g in prof:
                assert annihilated_by(g, sum(scal))


def test_lattice_gcd_annihilates_reduced(b2, l3):
    for m in (b2, l3):
        for scal in ((1, 1, 1, 1), (2, 4, 2, 0), (1, 2, 3, 4)):
            from disthom import ScalarVector
            g = ScalarVector(scal).g
            prof = homology_profile(m, scal, reduced_part(0), 3)
            for grp in prof:
                assert annihilated_by(grp, g)


def test_duality_invariance(b2, l3xl3):
    from disthom import dual_pair
    for m in (b2, l3xl3):
        a, b, c, d = 1, 2, 5, -1
        left = homology_profile(m, (a, b, c, d), reduced_part(0), 2)
        right = homology_profile(dual_pair(m), (a, c, b, d),
                                 reduced_part(0), 2)
        assert list(left) == list(right)


def test_augmented_drops_one_free_summand(b1):
    plain = homology_profile(b1, (1, 1, 1, 1), full_part(), 2)
    aug = homology_profile(b1, (1, 1, 1, 1), full_part(augmented=True), 2)
    assert aug[0].free_rank == plain[0].free_rank - 1
    assert aug[0].torsion == plain[0].torsion
    assert list(aug)[1:] == list(plain)[1:]


def test_euler_identity(b1, b2):
    for m, scal in ((b1, (1, 1, 1, 1)), (b2, (1, 0, 2, -1))):
        for part in (FULL, reduced_part(0), init_norm_part(0), NORMALIZED):
            prof = homology_profile(m, scal, part, 3)
            assert euler_check(prof)


def _random_complex(rng, length=3, max_rank=6, max_entry=5, shears=10):
    """A bounded chain complex of free groups with small entries.

    Built block-diagonally (so the boundary property is manifest), then
    conjugated degree by degree with unimodular shears, each applied
    consistently to the boundary in and the boundary out.
    """
    ranks = [int(rng.integers(1, max_rank + 1)) for _ in range(length + 1)]
    mats = []
    prev_free = ranks[0]
    for n in range(1, length + 1):
        k = int(rng.integers(0, min(prev_free, ranks[n]) + 1))
        M = np.zeros((ranks[n - 1], ranks[n]), dtype=np.int64)
        for i in range(k):
            M[ranks[n - 1] - prev_free + i, i] = \
                int(rng.integers(1, max_entry + 1))
        prev_free = ranks[n] - k
        mats.append(M)
    def try_shear(j, a, b, c):
        """Basis shear e_a += c e_b on degree j, kept within |entries| <= 5."""
        if j >= 1:
            mats[j - 1][:, b] -= c * mats[j - 1][:, a]
        if j < length:
            mats[j][a, :] += c * mats[j][b, :]
        ok = all(abs(mats[k]).max(initial=0) <= 5
                 for k in (j - 1, j) if 0 <= k < length)
        if not ok:
            if j >= 1:
                mats[j - 1][:, b] += c * mats[j - 1][:, a]
            if j < length:
                mats[j][a, :] -= c * mats[j][b, :]

    for j in range(length + 1):
        for _ in range(shears):
            a, b = (int(v) for v in rng.integers(0, ranks[j], size=2))
            c = int(rng.integers(-1, 2))
            if a != b and c:
                try_shear(j, a, b, c)
    return ranks, [IntMatrix(M.shape[0], M.shape[1], M) for M in mats]


def test_qdiff_transform_matches_scaled_complex():
    rng = np.random.default_rng(20240801)
    for trial in range(200):
        ranks, mats = _random_complex(rng)
        full = [IntMatrix(0, ranks[0])] + mats + [IntMatrix(ranks[-1], 0)]
        # sanity: a genuine complex
        for a, b in zip(full, full[1:]):
            prod = np.array(a.to_lists(), dtype=object) @ \
                np.array(b.to_lists(), dtype=object) if a.rows and b.cols \
                else None
            if prod is not None:
                assert not prod.any()
        groups, _ = homology_of_matrices(full, ranks)
        base = profile_from_groups(groups)
        for q in (2, 3, 6):
            scaled = q_scale(full, q)
            want, _ = homology_of_matrices(scaled, ranks)
            got = qdiff_transform(base, ranks, q)
            assert list(got) == want, (trial, q)


def test_qdiff_spec_examples():
    # complex Z <- Z with the identity boundary, scaled by 3
    mats = [IntMatrix(0, 1), IntMatrix.from_rows([[1]]), IntMatrix(1, 0)]
    groups, _ = homology_of_matrices(mats, [1, 1])
    base = profile_from_groups(groups)
    assert all(g.is_trivial() for g in base)
    got = qdiff_transform(base, [1, 1], 3)
    assert got[0] == cyclic(3) and got[1].is_trivial()
    # q = 1 is the identity transform
    same = qdiff_transform(base, [1, 1], 1)
    assert list(same) == list(base)


def test_qdiff_validates():
    base = profile_from_groups([free_group(5)])
    with pytest.raises(StructureError):
        qdiff_transform(base, [2], 2)
