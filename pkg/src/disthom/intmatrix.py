"""Exact integer matrices and Smith normal form.

The elimination works on a sparse row/column structure with exact Python
integers, so no overflow is possible.  Pivots prefer units and break ties by
the Markowitz fill count ((nnz_row - 1) * (nnz_col - 1)), which is what keeps
boundary matrices sparse and their entries small; when no unit entry exists
the common content of the remaining block is divided out first and a
gcd-reducing pivot loop runs on a minimal entry.
"""

from __future__ import annotations

from math import gcd

import numpy as np


class IntMatrix:
    """A dense exact integer matrix with by-entry access."""

    __slots__ = ("rows", "cols", "_np", "_rows_list")

    def __init__(self, rows, cols, data=None):
        self.rows = rows
        self.cols = cols
        self._np = None
        self._rows_list = None
        if data is None:
            self._np = np.zeros((rows, cols), dtype=np.int64)
        elif isinstance(data, np.ndarray):
            if data.shape != (rows, cols):
                raise ValueError(f"shape mismatch: {data.shape}")
            self._np = data.astype(np.int64)
        else:
            lst = [list(map(int, row)) for row in data]
            if len(lst) != rows or any(len(r) != cols for r in lst):
                raise ValueError("shape mismatch")
            big = max((max(map(abs, r), default=0) for r in lst), default=0)
            if big < (1 << 62):
                self._np = np.array(lst, dtype=np.int64).reshape(rows, cols)
            else:
                self._rows_list = lst

    @classmethod
    def from_rows(cls, rows_list):
        rows = len(rows_list)
        cols = len(rows_list[0]) if rows else 0
        return cls(rows, cols, rows_list)

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols)

    def entry(self, i, j):
        if self._np is not None:
            return int(self._np[i, j])
        return self._rows_list[i][j]

    def to_lists(self):
        if self._np is not None:
            return self._np.tolist()
        return [row[:] for row in self._rows_list]

    def to_numpy(self):
        if self._np is None:
            raise OverflowError("entries exceed the int64 range")
        return self._np

    def scaled(self, q):
        if (self._np is not None
                and abs(q) * abs(self._np).max(initial=0) < (1 << 62)):
            return IntMatrix(self.rows, self.cols, self._np * q)
        return IntMatrix(self.rows, self.cols,
                         [[v * q for v in row] for row in self.to_lists()])

    def triplets(self):
        if self._np is not None:
            ii, jj = np.nonzero(self._np)
            vv = self._np[ii, jj]
            return [(int(i), int(j), int(v))
                    for i, j, v in zip(ii, jj, vv)]
        out = []
        for i, row in enumerate(self._rows_list):
            for j, v in enumerate(row):
                if v:
                    out.append((i, j, v))
        return out

    def __eq__(self, other):
        return (isinstance(other, IntMatrix)
                and self.rows == other.rows and self.cols == other.cols
                and self.to_lists() == other.to_lists())

    def __repr__(self):
        return f"IntMatrix({self.rows}x{self.cols})"

    def dump_text(self):
        """Plain text form: 'rows cols' header, then row-major entries."""
        lines = [f"{self.rows} {self.cols}"]
        lines += [" ".join(str(v) for v in row) for row in self.to_lists()]
        return "\n".join(lines) + "\n"

    @classmethod
    def parse_text(cls, text):
        tokens = text.split()
        if len(tokens) < 2:
            raise ValueError("matrix dump needs a 'rows cols' header")
        rows, cols = int(tokens[0]), int(tokens[1])
        body = tokens[2:]
        if len(body) != rows * cols:
            raise ValueError(
                f"expected {rows * cols} entries, found {len(body)}")
        data = [[int(body[i * cols + j]) for j in range(cols)]
                for i in range(rows)]
        return cls(rows, cols, data)


def _fix_divisibility(diag):
    diag = [abs(int(d)) for d in diag if d != 0]
    diag.sort()
    changed = True
    while changed:
        changed = False
        for i in range(len(diag)):
            for j in range(i + 1, len(diag)):
                if diag[j] % diag[i]:
                    g = gcd(diag[i], diag[j])
                    diag[i], diag[j] = g, diag[i] * diag[j] // g
                    changed = True
        if changed:
            diag.sort()
    return tuple(diag)


def _snf_sparse(triplets):
    """Nonzero diagonal of a Smith-equivalent matrix (unordered, unsigned).

    Sparse row dicts plus lazily-maintained column supports (supersets of
    the truth, compacted as they are read).  Unit pivots are preferred and
    chosen by a Markowitz-style fill estimate; when no unit exists the
    common content of the remaining block is divided out and recorded as a
    multiplier, which usually surfaces new units immediately.
    """
    rows = {}
    colsupp = {}
    units = set()        # superset of positions holding +-1
    for i, j, v in triplets:
        rows.setdefault(i, {})[j] = v
        colsupp.setdefault(j, set()).add(i)
        if v == 1 or v == -1:
            units.add((i, j))

    def combine_rows(i, k, q):
        """row_i -= q * row_k; both must exist, q nonzero."""
        row_i = rows[i]
        for j, v in rows[k].items():
            w = row_i.get(j, 0) - q * v
            if w:
                row_i[j] = w
                colsupp[j].add(i)
                if w == 1 or w == -1:
                    units.add((i, j))
            else:
                row_i.pop(j, None)
        if not row_i:
            del rows[i]

    def live_column(j, skip):
        """Current support of column j, compacting stale indices."""
        supp = colsupp.get(j)
        if not supp:
            return ()
        out = []
        stale = []
        for i in supp:
            row = rows.get(i)
            if row is not None and j in row:
                if i != skip:
                    out.append(i)
            else:
                stale.append(i)
        for i in stale:
            supp.discard(i)
        return out

    def extract_content():
        g = 0
        for row in rows.values():
            for v in row.values():
                g = gcd(g, v)
                if g == 1:
                    return 1
        if g > 1:
            for i, row in rows.items():
                for j in row:
                    row[j] //= g
                    if row[j] in (1, -1):
                        units.add((i, j))
        return g if g else 1

    def pick_pivot():
        if units:
            best = None
            stale = []
            for count, (i, j) in enumerate(units):
                row = rows.get(i)
                if row is None or row.get(j) not in (1, -1):
                    stale.append((i, j))
                    continue
                cost = (len(row) - 1) * (len(colsupp.get(j, ())) - 1)
                if best is None or cost < best[0] or \
                        (cost == best[0] and (i, j) < best[1]):
                    best = (cost, (i, j))
                if best[0] == 0 and count >= 48:
                    break
            for pos in stale:
                units.discard(pos)
            if best is not None:
                return best[1]
        best = None
        for i, row in rows.items():
            for j, v in row.items():
                key = (v if v > 0 else -v, i, j)
                if best is None or key < best:
                    best = key
        return (best[1], best[2]) if best else None

    diag = []
    multiplier = 1
    while rows:
        if not units:
            multiplier *= extract_content()
        pivot = pick_pivot()
        if pivot is None:
            break
        pi, pj = pivot
        while True:
            v = rows[pi][pj]
            # clear the pivot column; remember the smallest remainder
            smallest = None
            for i in live_column(pj, pi):
                q = rows[i][pj] // v
                if q:
                    combine_rows(i, pi, q)
                w = rows.get(i, {}).get(pj, 0)
                if w and (smallest is None or abs(w) < smallest[0]):
                    smallest = (abs(w), i)
            if smallest is not None:
                pi = smallest[1]
                continue
            # clear the pivot row (the column support is now just pi, so a
            # column operation only touches this row)
            row_pi = rows[pi]
            moved = None
            for j in list(row_pi.keys()):
                if j == pj:
                    continue
                w = row_pi[j] % v
                if w:
                    row_pi[j] = w
                    if w == 1 or w == -1:
                        units.add((pi, j))
                    if moved is None or abs(w) < abs(rows[pi][moved]):
                        moved = j
                else:
                    row_pi.pop(j)

            if moved is not None:
                pj = moved
                continue
            break
        diag.append(abs(v) * multiplier)
        row = rows.get(pi)
        if row is not None:
            row.pop(pj, None)
            if not row:
                del rows[pi]
    return diag


def smith_normal_form(matrix):
    """Invariant factors and rank of an integer matrix.

    Returns ``(factors, rank)`` where ``factors`` is the full divisibility
    chain d1 | d2 | ... | dr of nonzero diagonal entries (units included) and
    ``rank`` the number of nonzero factors.  Arbitrary precision throughout.
    """
    if isinstance(matrix, IntMatrix):
        triplets = matrix.triplets()
    elif isinstance(matrix, np.ndarray):
        ii, jj = np.nonzero(matrix)
        triplets = [(int(i), int(j), int(matrix[i, j]))
                    for i, j in zip(ii, jj)]
    else:
        triplets = []
        for i, row in enumerate(matrix):
            for j, v in enumerate(row):
                if v:
                    triplets.append((i, j, int(v)))
    if not triplets:
        return (), 0
    factors = _fix_divisibility(_snf_sparse(triplets))
    return factors, len(factors)


def matrix_rank(matrix):
    return smith_normal_form(matrix)[1]


def nonunit_factors(matrix):
    """Invariant factors greater than one, i.e. the torsion of the cokernel."""
    factors, _ = smith_normal_form(matrix)
    return tuple(d for d in factors if d > 1)
