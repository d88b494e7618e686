"""Homology extraction: Smith normal form of boundary matrices, assembled
into graded profiles of finitely generated abelian groups."""

from __future__ import annotations

from dataclasses import dataclass

from .abgroups import FinAbGroup, group_sum
from .complexes import (DEFAULT_BASIS_BUDGET, ScalarVector, boundary_matrix,
                        part_dim, validate_part)
from .intmatrix import smith_normal_form
from .magma import StructureError


@dataclass(frozen=True)
class HomologyProfile:
    """Homology groups in degrees 0..n_max plus the data describing them."""

    groups: tuple                      # FinAbGroup per degree
    part: str
    scalars: tuple
    augmented: bool
    magma_fingerprint: str
    chain_ranks: tuple = ()            # dim of the chain group per degree
    boundary_ranks: tuple = ()         # rank of the boundary per degree 0..n_max+1

    @property
    def n_max(self):
        return len(self.groups) - 1

    def __getitem__(self, n):
        return self.groups[n]

    def __iter__(self):
        return iter(self.groups)

    def __eq__(self, other):
        return (isinstance(other, HomologyProfile)
                and self.groups == other.groups)

    def to_json(self):
        return {
            "part": self.part,
            "scalars": list(self.scalars),
            "augmented": self.augmented,
            "magma": self.magma_fingerprint,
            "groups": [dict(degree=n, **g.to_json())
                       for n, g in enumerate(self.groups)],
        }

    def render(self):
        return "\n".join(f"H_{n} = {g}" for n, g in enumerate(self.groups))


def profile_from_groups(groups, part="", scalars=(), augmented=False,
                        fingerprint=""):
    return HomologyProfile(tuple(groups), str(part), tuple(scalars),
                           augmented, fingerprint)


def profile_sum(*profiles):
    """Degreewise direct sum of equally long profiles."""
    lengths = {p.n_max for p in profiles}
    if len(lengths) != 1:
        raise StructureError("profiles must cover the same degrees")
    groups = [group_sum(*(p[n] for p in profiles))
              for n in range(lengths.pop() + 1)]
    return profile_from_groups(
        groups, part="+".join(p.part for p in profiles))


def homology_of_matrices(matrices, dims):
    """Homology groups from boundary matrices d_0 .. d_{n_max+1}.

    ``dims[n]`` is the rank of the n-th chain group, ``matrices[n]`` the
    matrix of the boundary out of it (for an augmented complex that is the
    all-ones row in degree 0, which already accounts for the dropped
    summand).  The free rank in degree n is dim C_n - rk d_n - rk d_{n+1};
    the torsion is the nonunit part of the invariant factors of d_{n+1}.
    """
    n_max = len(dims) - 1
    snf = [smith_normal_form(M) for M in matrices]
    groups = []
    for n in range(n_max + 1):
        rank_out = snf[n][1]
        rank_in = snf[n + 1][1]
        free = dims[n] - rank_out - rank_in
        if free < 0:
            raise StructureError("inconsistent ranks; not a chain complex?")
        torsion = [d for d in snf[n + 1][0] if d > 1]
        groups.append(FinAbGroup.from_factors(free, torsion))
    return groups, [s[1] for s in snf]


def homology_profile(m, scalars, part, n_max,
                     max_basis=DEFAULT_BASIS_BUDGET):
    """Exact homology of the chosen part in degrees 0..n_max."""
    part = validate_part(m, part)
    scalars = ScalarVector(scalars)
    dims = [part_dim(m, part, n, max_basis) for n in range(n_max + 1)]
    matrices = [boundary_matrix(m, scalars, n, part, max_basis)
                for n in range(n_max + 2)]
    groups, ranks = homology_of_matrices(matrices, dims)
    return HomologyProfile(
        groups=tuple(groups),
        part=str(part), scalars=tuple(scalars), augmented=part.augmented,
        magma_fingerprint=m.fingerprint(),
        chain_ranks=tuple(dims), boundary_ranks=tuple(ranks))


def euler_check(profile):
    """Telescoped Euler identity for a truncated complex.

    sum (-1)^n dim C_n == sum (-1)^n rk H_n + rk d_0 + (-1)^N rk d_{N+1},
    which reduces to the classical statement when the complex stops at N.
    """
    if not profile.chain_ranks or not profile.boundary_ranks:
        raise StructureError("profile carries no chain data")
    n_top = profile.n_max
    lhs = sum((-1) ** n * d for n, d in enumerate(profile.chain_ranks))
    rhs = sum((-1) ** n * g.free_rank for n, g in enumerate(profile.groups))
    rhs += profile.boundary_ranks[0]
    rhs += (-1) ** n_top * profile.boundary_ranks[n_top + 1]
    return lhs == rhs


def qdiff_transform(profile, chain_ranks, q):
    """Homology of the same complex with the boundary scaled by q >= 1.

    Free parts survive, each torsion coefficient is multiplied by q, and
    q-torsion appears with multiplicity t_n - k - r where t_n counts the
    kernel rank, via t_0 = rk C_0 and
    t_{n+1} + t_n = rk C_{n+1} + rk H_n.
    """
    if q < 1:
        raise StructureError("q must be >= 1")
    chain_ranks = list(chain_ranks)
    if len(chain_ranks) < len(profile.groups):
        raise StructureError("need a chain rank for every degree")
    t = chain_ranks[0]
    out = []
    for n, g in enumerate(profile.groups):
        k, r = g.free_rank, len(g.torsion)
        fresh = t - k - r
        if fresh < 0:
            raise StructureError(
                f"inconsistent ranks at degree {n}: kernel rank {t} below "
                f"{k}+{r}")
        factors = [q * d for d in g.torsion] + [q] * fresh
        out.append(FinAbGroup.from_factors(k, factors))
        if n + 1 < len(profile.groups):
            t = chain_ranks[n + 1] + k - t
    return HomologyProfile(
        groups=tuple(out), part=profile.part, scalars=profile.scalars,
        augmented=profile.augmented,
        magma_fingerprint=profile.magma_fingerprint,
        chain_ranks=tuple(chain_ranks[:len(out)]))
