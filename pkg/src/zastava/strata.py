"""Stratum catalogs and dimension formulas.

Dimensions are plain integers and may be negative (stacks).  Catalogs are
flat lists in a deterministic order: the defect coweight runs over its box
lexicographically and, for each defect, partitions come in the order of
:func:`zastava.partitions.iter_partitions`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PartitionSumMismatch
from .partitions import enumerate_partitions, partition_sum
from .rootdata import (
    GroupDims,
    RootSystem,
    box,
    group_dims,
    pairing_2rho,
    pairing_rho,
    require_nonnegative,
    sub,
)


@dataclass(frozen=True)
class ZastavaStratum:
    mu: tuple
    nu: tuple
    gamma: tuple
    dim: int

    @property
    def is_open(self) -> bool:
        return not self.gamma


@dataclass(frozen=True)
class DrinfeldStratum:
    lam: tuple
    mu: tuple
    gamma: tuple
    genus: int
    dims: GroupDims
    dim: int

    @property
    def nu(self):
        return self.mu

    @property
    def is_open(self) -> bool:
        return not self.gamma


@dataclass(frozen=True)
class BunUStratum:
    mu: tuple
    gamma: tuple
    genus: int
    dim_U: int
    dim: int

    @property
    def nu(self):
        return self.mu

    @property
    def is_open(self) -> bool:
        return not self.gamma


@dataclass(frozen=True)
class SymPowerStratum:
    mu: tuple
    gamma: tuple
    dim: int


def zastava_stratum_dim(mu, nu, gamma) -> int:
    return len(gamma) + pairing_2rho(sub(mu, nu))


def zastava_strata(rs: RootSystem, mu) -> list[ZastavaStratum]:
    mu = rs.coweight(mu)
    require_nonnegative(mu)
    return [
        ZastavaStratum(mu, nu, gamma, zastava_stratum_dim(mu, nu, gamma))
        for nu in box(mu)
        for gamma in enumerate_partitions(nu)
    ]


def drinfeld_stratum_dim(lam, mu, gamma, genus: int, dims: GroupDims) -> int:
    return len(gamma) + pairing_2rho(sub(lam, mu)) + (genus - 1) * dims.dim_B


def drinfeld_strata(rs: RootSystem, lam, genus: int, torus_rank: int, cutoff) -> list[DrinfeldStratum]:
    """Strata of the degree-``lam`` component with defect ``0 <= mu <= cutoff``."""
    lam = rs.coweight(lam)
    cutoff = rs.coweight(cutoff)
    require_nonnegative(cutoff)
    dims = group_dims(rs, torus_rank)
    return [
        DrinfeldStratum(lam, mu, gamma, genus, dims, drinfeld_stratum_dim(lam, mu, gamma, genus, dims))
        for mu in box(cutoff)
        for gamma in enumerate_partitions(mu)
    ]


def bunU_stratum_dim(rs: RootSystem, mu, gamma, genus: int) -> int:
    mu = rs.coweight(mu)
    if partition_sum(gamma, rs.rank) != mu:
        raise PartitionSumMismatch(f"parts {gamma} do not sum to {mu}")
    return len(gamma) - pairing_2rho(mu) + (genus - 1) * len(rs.positive_coroots)


def bunU_strata(rs: RootSystem, genus: int, cutoff) -> list[BunUStratum]:
    cutoff = rs.coweight(cutoff)
    require_nonnegative(cutoff)
    dim_u = len(rs.positive_coroots)
    return [
        BunUStratum(mu, gamma, genus, dim_u, bunU_stratum_dim(rs, mu, gamma, genus))
        for mu in box(cutoff)
        for gamma in enumerate_partitions(mu)
    ]


@dataclass(frozen=True)
class ModuliDims:
    bun_T: int
    bun_B: int
    bun_Bminus: int
    bun_U: int


def moduli_dims(rs: RootSystem, lam, genus: int, torus_rank: int | None = None) -> ModuliDims:
    lam = rs.coweight(lam)
    d = group_dims(rs, torus_rank)
    g1 = genus - 1
    return ModuliDims(
        bun_T=g1 * d.dim_T,
        bun_B=g1 * d.dim_B + pairing_2rho(lam),
        bun_Bminus=g1 * d.dim_B - pairing_2rho(lam),
        bun_U=g1 * d.dim_U,
    )


def central_fiber_dim(rs: RootSystem, mu) -> int:
    mu = rs.coweight(mu)
    require_nonnegative(mu)
    return pairing_rho(mu)


@dataclass(frozen=True)
class RegularityBounds:
    in_bun_T_r: bool
    r_mu_smooth: bool


def regularity_bounds(rs: RootSystem, lam, genus: int) -> RegularityBounds:
    """Strict inequalities ``<lam, alpha> < 2 - 2g`` and ``<lam, alpha> > 2g - 2``
    over all positive roots ``alpha``."""
    lam = rs.coweight(lam)
    pairings = [rs.root_pairing(lam, alpha) for alpha in rs.positive_roots]
    return RegularityBounds(
        in_bun_T_r=all(p < 2 - 2 * genus for p in pairings),
        r_mu_smooth=all(p > 2 * genus - 2 for p in pairings),
    )


def sympower_strata(rs: RootSystem, mu) -> list[SymPowerStratum]:
    mu = rs.coweight(mu)
    require_nonnegative(mu)
    return [SymPowerStratum(mu, gamma, len(gamma)) for gamma in enumerate_partitions(mu)]

