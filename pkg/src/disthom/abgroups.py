"""Finitely generated abelian groups in invariant-factor form.

A group is a free rank plus a divisibility chain d1 | d2 | ... | dr of
torsion coefficients, each >= 2.  Two groups are equal exactly when these
canonical fields agree.

>>> FinAbGroup.from_factors(0, [2, 3]) == FinAbGroup.from_factors(0, [6])
True
>>> print(FinAbGroup.from_factors(1, [2, 4]))
Z + Z_2 + Z_4
>>> print(FinAbGroup.from_factors(0, [2, 2, 2]))
Z_2^3
"""

from __future__ import annotations

from collections import Counter
from itertools import zip_longest
from math import gcd, prod


def _factorint(n):
    """Prime factorisation by trial division; moduli here are small."""
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


class FinAbGroup:
    """Canonical finitely generated abelian group."""

    __slots__ = ("free_rank", "torsion")

    def __init__(self, free_rank=0, torsion=()):
        torsion = tuple(int(d) for d in torsion)
        if free_rank < 0:
            raise ValueError("free rank must be non-negative")
        for a, b in zip(torsion, torsion[1:]):
            if b % a:
                raise ValueError(f"not a divisibility chain: {torsion}")
        if any(d < 2 for d in torsion):
            raise ValueError(f"torsion coefficients must be >= 2: {torsion}")
        self.free_rank = int(free_rank)
        self.torsion = torsion

    @classmethod
    def from_factors(cls, free_rank, factors):
        """Build from arbitrary cyclic factors Z_{f}; 0 means Z, 1 is dropped.

        >>> FinAbGroup.from_factors(0, [4, 6]).torsion
        (2, 12)
        """
        rank = int(free_rank)
        primary = {}
        for f in factors:
            f = abs(int(f))
            if f == 0:
                rank += 1
            elif f == 1:
                continue
            else:
                for p, e in _factorint(f).items():
                    primary.setdefault(p, []).append(e)
        return cls(rank, _invariant_factors(primary))

    def primary_decomposition(self):
        """dict prime -> descending exponent tuple."""
        primary = {}
        for d in self.torsion:
            for p, e in _factorint(d).items():
                primary.setdefault(p, []).append(e)
        return {p: tuple(sorted(es, reverse=True))
                for p, es in sorted(primary.items())}

    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    def torsion_order(self):
        return prod(self.torsion) if self.torsion else 1

    def __eq__(self, other):
        return (isinstance(other, FinAbGroup)
                and self.free_rank == other.free_rank
                and self.torsion == other.torsion)

    def __hash__(self):
        return hash((self.free_rank, self.torsion))

    def __repr__(self):
        return f"FinAbGroup({self.free_rank}, {self.torsion})"

    def __str__(self):
        """
        >>> print(FinAbGroup.from_factors(2, [2, 2, 4]))
        Z^2 + Z_2^2 + Z_4
        >>> print(FinAbGroup())
        0
        """
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        for d, count in sorted(Counter(self.torsion).items()):
            parts.append(f"Z_{d}" if count == 1 else f"Z_{d}^{count}")
        return " + ".join(parts) if parts else "0"

    def to_json(self):
        return {"free": self.free_rank, "torsion": list(self.torsion)}


def _invariant_factors(primary):
    columns = [sorted((p ** e for e in es), reverse=True)
               for p, es in primary.items()]
    merged = []
    for powers in zip_longest(*columns, fillvalue=1):
        merged.append(prod(powers))
    merged = [d for d in merged if d > 1]
    merged.reverse()
    return tuple(merged)


TRIVIAL = FinAbGroup()
Z = FinAbGroup(1)


def free_group(rank):
    return FinAbGroup(rank)


def cyclic(n, copies=1):
    """Z_n^copies, with Z_0 = Z and Z_1 = 0 collapsed.

    >>> cyclic(0, 3) == free_group(3)
    True
    >>> cyclic(1, 5).is_trivial()
    True
    """
    return FinAbGroup.from_factors(0, [n] * copies)


def group_sum(*groups):
    """Direct sum, renormalised to invariant factors.

    >>> group_sum(cyclic(2, 2), cyclic(4)).torsion
    (2, 2, 4)
    """
    rank = sum(g.free_rank for g in groups)
    factors = [d for g in groups for d in g.torsion]
    return FinAbGroup.from_factors(rank, factors)


def tensor_with_cyclic(g, q):
    """G (x) Z_q:  Z -> Z_q  and  Z_d -> Z_gcd(d, q).

    >>> tensor_with_cyclic(FinAbGroup.from_factors(1, [4]), 2).torsion
    (2, 2)
    """
    q = abs(int(q))
    if q == 0:
        return g
    factors = [q] * g.free_rank + [gcd(d, q) for d in g.torsion]
    return FinAbGroup.from_factors(0, factors)


def tor_with_cyclic(g, q):
    """Tor(G, Z_q): the free part drops, Z_d -> Z_gcd(d, q)."""
    q = abs(int(q))
    if q == 0:
        return FinAbGroup(0, g.torsion)
    return FinAbGroup.from_factors(0, [gcd(d, q) for d in g.torsion])


def annihilated_by(g, q):
    """Whether q * G = 0.

    >>> annihilated_by(cyclic(2, 5), 4)
    True
    >>> annihilated_by(group_sum(Z, cyclic(2)), 2)
    False
    """
    q = abs(int(q))
    if q == 0:
        return True
    return g.free_rank == 0 and all(q % d == 0 for d in g.torsion)
