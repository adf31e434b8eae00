"""Stalk and costalk tables of IC complexes on Zastava schemes, Drinfeld's
compactification and its U-version, with the parity and support validators.

Every table entry keeps both the normalized polynomial ``P_Gamma`` (or
``Q_Gamma``) and the raw map ``cohomological degree -> rank``.  The two are
related by an affine re-indexing: on a stratum of dimension ``d``, the
coefficient of ``q**n`` sits in degree ``-d - n`` for stalks and ``-d + n``
for costalks.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial

from .errors import AmbientMismatch, NotStrictlyDominant, WrongSide
from .qkostant import kostant_q, kostant_table
from .ring import ONE, ZERO, QPolynomial, divide_by_q, multiply_by_q, substitute_q_squared
from .rootdata import (
    RootSystem,
    box,
    group_dims,
    is_nonnegative,
    pairing_2rho,
    require_nonnegative,
    sub,
)
from .strata import bunU_strata, drinfeld_strata, zastava_strata

STALK = "stalk"
COSTALK = "costalk"


def P_poly(rs: RootSystem, mu) -> QPolynomial:
    """``P^mu = q**-1 * P(mu, q**2)`` for ``mu > 0``, and 1 for ``mu = 0``."""
    mu = rs.coweight(mu)
    require_nonnegative(mu)
    if not any(mu):
        return ONE
    return divide_by_q(substitute_q_squared(kostant_q(rs, mu)))


def P_table(rs: RootSystem, bound) -> dict:
    """``P^nu`` for every ``0 <= nu <= bound``, from a single Kostant sweep."""
    table = kostant_table(rs, bound)
    out = {}
    for nu, poly in table.values.items():
        out[nu] = ONE if not any(nu) else divide_by_q(substitute_q_squared(poly))
    return out


def stalk_poly_for_partition(rs: RootSystem, gamma, cache: dict | None = None) -> QPolynomial:
    """Product of ``P^nu_i`` over the parts of ``gamma`` (1 for the empty partition)."""
    result = ONE
    for part in gamma:
        p = cache.get(part) if cache is not None else None
        if p is None:
            p = P_poly(rs, part)
            if cache is not None:
                cache[part] = p
        result = result * p
    return result


def gaitsgory_costalk(rs: RootSystem, nu) -> QPolynomial:
    """Costalk rank polynomial of the Gaitsgory sheaf at ``nu``: ``P(-nu, q**2)``."""
    nu = rs.coweight(nu)
    neg = tuple(-c for c in nu)
    if not is_nonnegative(neg):
        return ZERO
    return substitute_q_squared(kostant_q(rs, neg))


def crosscheck_gaitsgory(rs: RootSystem, mu) -> bool:
    """Check ``q * P^mu == P(mu, q**2)`` through the Gaitsgory costalk at ``-mu``."""
    mu = rs.coweight(mu)
    if not is_nonnegative(mu) or not any(mu):
        raise NotStrictlyDominant(f"{mu} is not a nonzero sum of positive coroots")
    return multiply_by_q(P_poly(rs, mu)) == gaitsgory_costalk(rs, tuple(-c for c in mu))


@dataclass(frozen=True)
class Ambient:
    """Which space a table describes, with all parameters fixing its strata."""

    kind: str  # "zastava" | "drinfeld" | "bunU"
    root_system: RootSystem = field(compare=False)
    cartan: tuple = ()
    mu: tuple | None = None
    lam: tuple | None = None
    genus: int | None = None
    torus_rank: int | None = None
    cutoff: tuple | None = None

    @classmethod
    def zastava(cls, rs, mu):
        return cls("zastava", rs, rs.cartan, mu=rs.coweight(mu))

    @classmethod
    def drinfeld(cls, rs, lam, genus, torus_rank, cutoff):
        return cls("drinfeld", rs, rs.cartan, lam=rs.coweight(lam), genus=int(genus),
                   torus_rank=int(torus_rank), cutoff=rs.coweight(cutoff))

    @classmethod
    def bunU(cls, rs, genus, cutoff):
        return cls("bunU", rs, rs.cartan, genus=int(genus), cutoff=rs.coweight(cutoff))

    def strata(self):
        rs = self.root_system
        if self.kind == "zastava":
            return zastava_strata(rs, self.mu)
        if self.kind == "drinfeld":
            return drinfeld_strata(rs, self.lam, self.genus, self.torus_rank, self.cutoff)
        if self.kind == "bunU":
            return bunU_strata(rs, self.genus, self.cutoff)
        raise ValueError(f"unknown ambient kind {self.kind!r}")

    def degree_base(self, stratum) -> int:
        """Cohomological degree carrying ``q**0``, written exactly as in the
        definitions of ``P_Gamma`` / ``Q_Gamma``; equals ``-stratum.dim``."""
        size = len(stratum.gamma)
        if self.kind == "zastava":
            return -size + pairing_2rho(sub(stratum.nu, self.mu))
        if self.kind == "drinfeld":
            dims = group_dims(self.root_system, self.torus_rank)
            return -size + pairing_2rho(sub(stratum.nu, self.lam)) - (self.genus - 1) * dims.dim_B
        dim_u = len(self.root_system.positive_coroots)
        return -size + pairing_2rho(stratum.nu) - (self.genus - 1) * dim_u

    def expected_parity(self) -> int:
        """Parity shared by all occupied stalk degrees."""
        if self.kind == "zastava":
            return 0
        dims = group_dims(self.root_system, self.torus_rank)
        if self.kind == "drinfeld":
            return ((self.genus - 1) * dims.dim_B) % 2
        return ((self.genus - 1) * dims.dim_U) % 2

    def defect_bound(self):
        return self.mu if self.kind == "zastava" else self.cutoff

    def to_json(self) -> dict:
        out = {"kind": self.kind, "root_system": self.root_system.name,
               "cartan": [list(r) for r in self.cartan]}
        for key in ("mu", "lam", "cutoff"):
            val = getattr(self, key)
            if val is not None:
                out["lambda" if key == "lam" else key] = list(val)
        for key in ("genus", "torus_rank"):
            val = getattr(self, key)
            if val is not None:
                out[key] = val
        return out


@dataclass(frozen=True)
class StalkEntry:
    stratum: object
    poly: QPolynomial
    degree_ranks: dict


@dataclass(frozen=True)
class StalkTable:
    ambient: Ambient
    side: str
    entries: tuple

    def to_json(self) -> dict:
        return {
            "ambient": self.ambient.to_json(),
            "side": self.side,
            "entries": [
                {
                    "nu": list(e.stratum.nu),
                    "gamma": [list(p) for p in e.stratum.gamma],
                    "dim": e.stratum.dim,
                    "poly": e.poly.to_json(),
                    "degree_ranks": {str(m): r for m, r in sorted(e.degree_ranks.items())},
                }
                for e in self.entries
            ],
        }


def reindex(poly: QPolynomial, base: int, side: str) -> dict:
    sign = -1 if side == STALK else 1
    return {base + sign * n: c for n, c in poly.items()}


def _entry(stratum, base, pmap, side):
    poly = ONE
    for part in stratum.gamma:
        poly = poly * pmap[part]
    return StalkEntry(stratum, poly, reindex(poly, base, side))


def build_table(ambient: Ambient, side: str = STALK, jobs: int = 1) -> StalkTable:
    if side not in (STALK, COSTALK):
        raise ValueError(f"side must be {STALK!r} or {COSTALK!r}")
    bound = ambient.defect_bound()
    require_nonnegative(bound)
    pmap = P_table(ambient.root_system, bound)
    strata = ambient.strata()
    bases = [ambient.degree_base(s) for s in strata]
    if jobs > 1 and len(strata) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = tuple(pool.map(partial(_entry, pmap=pmap, side=side), strata, bases,
                                     chunksize=max(1, len(strata) // (4 * jobs))))
    else:
        entries = tuple(_entry(s, b, pmap, side) for s, b in zip(strata, bases))
    return StalkTable(ambient, side, entries)


def zastava_stalk_table(rs: RootSystem, mu, side: str = STALK, jobs: int = 1) -> StalkTable:
    return build_table(Ambient.zastava(rs, mu), side, jobs)


def drinfeld_stalk_table(rs: RootSystem, lam, genus: int, torus_rank: int, cutoff,
                         side: str = STALK, jobs: int = 1) -> StalkTable:
    return build_table(Ambient.drinfeld(rs, lam, genus, torus_rank, cutoff), side, jobs)


def bunU_stalk_table(rs: RootSystem, genus: int, cutoff, side: str = STALK, jobs: int = 1) -> StalkTable:
    return build_table(Ambient.bunU(rs, genus, cutoff), side, jobs)


@dataclass
class Report:
    name: str
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def fail(self, stratum, message):
        self.violations.append(f"nu={list(stratum.nu)} gamma={[list(p) for p in stratum.gamma]}: {message}")

    def __str__(self):
        head = f"{self.name}: {'pass' if self.ok else 'FAIL'} ({self.checked} entries"
        head += ")" if self.ok else f", {len(self.violations)} violations)"
        return "\n".join([head] + ["  " + v for v in self.violations])


def parity_check(table: StalkTable) -> Report:
    report = Report(f"parity [{table.side}]")
    expected = table.ambient.expected_parity()
    for e in table.entries:
        report.checked += 1
        size = len(e.stratum.gamma)
        for n, _ in e.poly.items():
            if (n - size) % 2:
                report.fail(e.stratum, f"exponent {n} has parity opposite to |Gamma| = {size}")
        for m in e.degree_ranks:
            if m % 2 != expected:
                report.fail(e.stratum, f"degree {m} is not congruent to {expected} mod 2")
    return report


def support_condition_check(table: StalkTable) -> Report:
    if table.side != STALK:
        raise WrongSide("the support condition applies to stalk tables")
    report = Report("support")
    for e in table.entries:
        report.checked += 1
        s, poly, dim = e.stratum, e.poly, e.stratum.dim
        if any(r < 0 for r in e.degree_ranks.values()):
            report.fail(s, "negative rank")
        if s.is_open:
            if poly != ONE:
                report.fail(s, f"open-stratum polynomial is {poly}, expected 1")
            if e.degree_ranks != {-dim: 1}:
                report.fail(s, f"open stratum ranks {e.degree_ranks}, expected {{{-dim}: 1}}")
            continue
        if poly[0] != 0:
            report.fail(s, f"nonzero constant term {poly[0]}")
        for m in e.degree_ranks:
            if m > -dim - 1:
                report.fail(s, f"degree {m} exceeds {-dim - 1}")
        low = poly.valuation
        if low is not None and low < len(s.gamma):
            report.fail(s, f"lowest exponent {low} below |Gamma| = {len(s.gamma)}")
        if table.ambient.kind == "zastava" and s.nu == table.ambient.mu:
            for m in e.degree_ranks:
                if m > -2 * len(s.gamma):
                    report.fail(s, f"degree {m} exceeds -2|Gamma| = {-2 * len(s.gamma)}")
    return report


def duality_check(stalks: StalkTable, costalks: StalkTable) -> Report:
    """Entrywise ``costalk rank at -m - 2 dim == stalk rank at m``."""
    if stalks.ambient != costalks.ambient or len(stalks.entries) != len(costalks.entries):
        raise AmbientMismatch("duality needs the stalk and costalk tables of one ambient")
    report = Report("duality")
    for a, b in zip(stalks.entries, costalks.entries):
        report.checked += 1
        if a.stratum != b.stratum:
            raise AmbientMismatch("stratum lists differ")
        dual = {-m - 2 * a.stratum.dim: r for m, r in a.degree_ranks.items()}
        if dual != b.degree_ranks:
            report.fail(a.stratum, f"costalk ranks {b.degree_ranks} != dual of stalk {dual}")
    return report


def reindex_check(table: StalkTable) -> Report:
    """Each entry's degree map must be the re-indexing of its polynomial."""
    report = Report(f"reindex [{table.side}]")
    for e in table.entries:
        report.checked += 1
        base = table.ambient.degree_base(e.stratum)
        if base != -e.stratum.dim:
            report.fail(e.stratum, f"dim {e.stratum.dim} inconsistent with degree offset {base}")
        elif e.degree_ranks != reindex(e.poly, base, table.side):
            report.fail(e.stratum, f"degree map {e.degree_ranks} does not match {e.poly}")
    return report


def consistency_check(table: StalkTable) -> Report:
    """Recompute ``table`` from its ambient and compare entry by entry."""
    report = Report("recompute")
    fresh = build_table(table.ambient, table.side)
    if len(fresh.entries) != len(table.entries):
        report.violations.append(
            f"{len(table.entries)} entries, expected {len(fresh.entries)}")
        return report
    for got, want in zip(table.entries, fresh.entries):
        report.checked += 1
        if got.stratum.nu != want.stratum.nu or got.stratum.gamma != want.stratum.gamma:
            report.fail(got.stratum, "stratum out of order or unexpected")
        elif got.stratum.dim != want.stratum.dim:
            report.fail(got.stratum, f"dim {got.stratum.dim} != {want.stratum.dim}")
        elif got.poly != want.poly or got.degree_ranks != want.degree_ranks:
            report.fail(got.stratum, f"polynomial {got.poly} != {want.poly}")
    return report


def table_from_json(data: dict, rs: RootSystem | None = None) -> StalkTable:
    """Rebuild a table written by :meth:`StalkTable.to_json`.

    Strata are matched positionally against the ambient's catalog; the stored
    ``dim`` is kept as written so that corrupted files are caught by checks.
    """
    from dataclasses import replace

    from .rootdata import build_root_system

    amb = data["ambient"]
    if rs is None:
        rs = build_root_system(amb["cartan"], amb.get("root_system"))
    kind = amb["kind"]
    if kind == "zastava":
        ambient = Ambient.zastava(rs, amb["mu"])
    elif kind == "drinfeld":
        ambient = Ambient.drinfeld(rs, amb["lambda"], amb["genus"], amb["torus_rank"], amb["cutoff"])
    elif kind == "bunU":
        ambient = Ambient.bunU(rs, amb["genus"], amb["cutoff"])
    else:
        raise ValueError(f"unknown ambient kind {kind!r}")
    side = data["side"]
    if side not in (STALK, COSTALK):
        raise ValueError(f"unknown side {side!r}")
    catalog = {(s.nu, s.gamma): s for s in ambient.strata()}
    entries = []
    for raw in data["entries"]:
        nu = tuple(int(x) for x in raw["nu"])
        gamma = tuple(tuple(int(x) for x in p) for p in raw["gamma"])
        stratum = catalog.get((nu, gamma))
        if stratum is None:
            raise AmbientMismatch(f"no stratum nu={list(nu)} gamma={raw['gamma']} in this ambient")
        stratum = replace(stratum, dim=int(raw["dim"]))
        entries.append(StalkEntry(
            stratum,
            QPolynomial.from_json(raw["poly"]),
            {int(m): int(r) for m, r in raw["degree_ranks"].items()},
        ))
    return StalkTable(ambient, side, tuple(entries))


def all_strictly_positive(bound):
    return [nu for nu in box(bound) if any(nu)]
