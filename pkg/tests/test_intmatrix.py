from itertools import combinations
from math import gcd

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from disthom import IntMatrix, matrix_rank, nonunit_factors, \
    smith_normal_form


def bareiss_det(mat):
    M = [row[:] for row in mat]
    k = len(M)
    sign = 1
    prev = 1
    for p in range(k - 1):
        if M[p][p] == 0:
            for r in range(p + 1, k):
                if M[r][p]:
                    M[p], M[r] = M[r], M[p]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(p + 1, k):
            for c in range(p + 1, k):
                M[r][c] = (M[r][c] * M[p][p] - M[r][p] * M[p][c]) // prev
        prev = M[p][p]
    return sign * M[-1][-1]


def minors_oracle(rows):
    """Invariant factors from the gcds of k x k minors; the definition."""
    A = [list(map(int, r)) for r in rows]
    m, n = len(A), len(A[0]) if A else 0
    dk = []
    for k in range(1, min(m, n) + 1):
        g = 0
        for ri in combinations(range(m), k):
            for ci in combinations(range(n), k):
                sub = [[A[r][c] for c in ci] for r in ri]
                g = gcd(g, bareiss_det(sub))
        dk.append(g)
        if g == 0:
            break
    out = []
    prev = 1
    for g in dk:
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return tuple(out), len(out)


def test_spec_values():
    assert smith_normal_form([[2, 0], [0, 3]]) == ((1, 6), 2)
    assert smith_normal_form([[0, 0], [0, 0]]) == ((), 0)
    assert smith_normal_form([[3]]) == ((3,), 1)


def test_divisibility_chain_and_rank():
    factors, rank = smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
    assert rank == len(factors)
    for a, b in zip(factors, factors[1:]):
        assert b % a == 0


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_matches_minor_gcd_oracle(m, n, data):
    rows = [[data.draw(st.integers(-6, 6)) for _ in range(n)]
            for _ in range(m)]
    assert smith_normal_form(rows) == minors_oracle(rows)


def test_big_entries_no_overflow():
    big = 10 ** 30
    factors, rank = smith_normal_form([[big, 0], [0, 2 * big]])
    assert factors == (big, 2 * big) and rank == 2


def test_rank_of_random_full_rank():
    rng = np.random.default_rng(7)
    A = rng.integers(-5, 6, size=(30, 50))
    assert matrix_rank(A) == 30


def test_nonunit_factors():
    assert nonunit_factors([[2, 0], [0, 3]]) == (6,)
    assert nonunit_factors([[1, 0], [0, 1]]) == ()


def test_intmatrix_text_roundtrip():
    m = IntMatrix.from_rows([[1, -2, 3], [0, 5, -7]])
    text = m.dump_text()
    assert text.splitlines()[0] == "2 3"
    back = IntMatrix.parse_text(text)
    assert back == m


def test_intmatrix_entry_and_scale():
    m = IntMatrix.from_rows([[1, 2], [3, 4]])
    assert m.entry(1, 0) == 3
    assert m.scaled(3).to_lists() == [[3, 6], [9, 12]]


def test_parse_text_errors():
    with pytest.raises(ValueError):
        IntMatrix.parse_text("2 2 1 2 3")
