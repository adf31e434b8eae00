"""Homological algebra over the integers as a model principal ideal domain.

Complexes are cohomological: ``d^i`` maps degree ``i`` to degree ``i + 1``
and is stored as an ``IntMatrix`` of shape ``ranks[i+1] x ranks[i]``.
Residue fields are ``Q`` (``PrimeSpec.zero()``) and ``F_p``.

>>> M = ChainComplex.from_json({"degrees": [0, 1], "ranks": [1, 1], "differentials": [[2]]})
>>> homology(M)
{0: Homology(rank=0, torsion=()), 1: Homology(rank=0, torsion=(2,))}
>>> tensor_homology_dims(M, PrimeSpec(2)).direct
{0: 1, 1: 1}
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import AmbientMismatch, InvalidComplex
from .ring import IntMatrix


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True, order=True)
class PrimeSpec:
    """A prime ideal of Z: ``p is None`` for the zero ideal."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @classmethod
    def zero(cls) -> PrimeSpec:
        return cls(None)

    @classmethod
    def parse(cls, text) -> PrimeSpec:
        value = int(text)
        return cls(None) if value == 0 else cls(value)

    def __str__(self):
        return "0" if self.p is None else str(self.p)


@dataclass(frozen=True)
class SmithForm:
    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def invariant_factors(self) -> tuple:
        """Nonzero diagonal entries of ``D`` in order."""
        n = min(self.D.rows, self.D.cols)
        return tuple(d for d in (self.D[i, i] for i in range(n)) if d)


def smith_normal_form(A: IntMatrix) -> SmithForm:
    """``A = U @ D @ V`` with ``U``, ``V`` unimodular and ``D`` diagonal,
    its diagonal a nonnegative divisibility chain.

    Pivots on the entry of smallest absolute value and reduces the pivot row
    and column by Euclidean steps before moving on.
    """
    m, n = A.rows, A.cols
    D = A.to_rows()
    U = IntMatrix.identity(m).to_rows()
    V = IntMatrix.identity(n).to_rows()

    # D <- E D  requires  U <- U E^-1 ;  D <- D F  requires  V <- F^-1 V
    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        for row in U:
            row[i], row[j] = row[j], row[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        V[i], V[j] = V[j], V[i]

    def add_row(dst, src, c):
        # row dst += c * row src
        D[dst] = [x + c * y for x, y in zip(D[dst], D[src])]
        for row in U:
            row[src] -= c * row[dst]

    def add_col(dst, src, c):
        # col dst += c * col src
        for row in D:
            row[dst] += c * row[src]
        V[src] = [x - c * y for x, y in zip(V[src], V[dst])]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if D[i][j] and (best is None or abs(D[i][j]) < abs(D[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            if best[0] != t:
                swap_rows(t, best[0])
            if best[1] != t:
                swap_cols(t, best[1])
            piv = D[t][t]
            dirty = False
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // piv))
                    dirty = dirty or D[i][t] != 0
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // piv))
                    dirty = dirty or D[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % piv),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if t < m and t < n and D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            for row in U:
                row[t] = -row[t]

    return SmithForm(
        IntMatrix.from_rows(U, cols=m),
        IntMatrix.from_rows(D, cols=n),
        IntMatrix.from_rows(V, cols=n),
    )


def invariant_factors(A: IntMatrix) -> tuple:
    return smith_normal_form(A).invariant_factors


@dataclass(frozen=True)
class ChainComplex:
    """Bounded complex of free Z-modules in degrees ``lo..hi``."""

    lo: int
    ranks: tuple
    differentials: tuple  # differentials[k] is d^(lo+k)

    def __post_init__(self):
        ranks = tuple(int(r) for r in self.ranks)
        if any(r < 0 for r in ranks):
            raise InvalidComplex("negative module rank")
        if len(self.differentials) != max(len(ranks) - 1, 0):
            raise InvalidComplex(
                f"{len(ranks)} degrees need {max(len(ranks) - 1, 0)} differentials, "
                f"got {len(self.differentials)}")
        for k, d in enumerate(self.differentials):
            if (d.rows, d.cols) != (ranks[k + 1], ranks[k]):
                raise InvalidComplex(
                    f"d^{self.lo + k} has shape {d.rows}x{d.cols}, "
                    f"expected {ranks[k + 1]}x{ranks[k]}")
        for k in range(len(self.differentials) - 1):
            if not (self.differentials[k + 1] @ self.differentials[k]).is_zero():
                raise InvalidComplex(f"d^{self.lo + k + 1} d^{self.lo + k} != 0")
        object.__setattr__(self, "ranks", ranks)
        object.__setattr__(self, "differentials", tuple(self.differentials))

    @property
    def hi(self) -> int:
        return self.lo + len(self.ranks) - 1

    @property
    def degrees(self) -> range:
        return range(self.lo, self.hi + 1)

    def rank(self, i: int) -> int:
        return self.ranks[i - self.lo] if self.lo <= i <= self.hi else 0

    def d(self, i: int) -> IntMatrix:
        """``d^i``; zero maps outside the stored range."""
        if self.lo <= i < self.hi:
            return self.differentials[i - self.lo]
        return IntMatrix.zeros(self.rank(i + 1), self.rank(i))

    @classmethod
    def from_json(cls, data: dict) -> ChainComplex:
        lo, hi = (int(x) for x in data["degrees"])
        ranks = [int(r) for r in data["ranks"]]
        if len(ranks) != hi - lo + 1:
            raise InvalidComplex(f"degrees [{lo}, {hi}] but {len(ranks)} ranks")
        raws = data.get("differentials", [])
        if len(raws) != len(ranks) - 1:
            raise InvalidComplex(f"{len(ranks)} degrees need {len(ranks) - 1} differentials")
        mats = []
        for k, raw in enumerate(raws):
            rows, cols = ranks[k + 1], ranks[k]
            if raw and isinstance(raw[0], list):
                flat = [x for r in raw for x in r]
            else:
                flat = list(raw)
            if len(flat) != rows * cols:
                raise InvalidComplex(f"d^{lo + k}: {len(flat)} entries, expected {rows * cols}")
            mats.append(IntMatrix(rows, cols, tuple(flat)))
        return cls(lo, tuple(ranks), tuple(mats))

    def to_json(self) -> dict:
        return {
            "degrees": [self.lo, self.hi],
            "ranks": list(self.ranks),
            "differentials": [list(d.entries) for d in self.differentials],
        }


def direct_sum(A: ChainComplex, B: ChainComplex) -> ChainComplex:
    lo, hi = min(A.lo, B.lo), max(A.hi, B.hi)
    ranks = [A.rank(i) + B.rank(i) for i in range(lo, hi + 1)]
    mats = []
    for i in range(lo, hi):
        a, b = A.d(i), B.d(i)
        rows = [r + [0] * b.cols for r in a.to_rows()] + [[0] * a.cols + r for r in b.to_rows()]
        mats.append(IntMatrix.from_rows(rows, cols=a.cols + b.cols))
    return ChainComplex(lo, tuple(ranks), tuple(mats))


@dataclass(frozen=True)
class Homology:
    rank: int
    torsion: tuple


def homology(M: ChainComplex) -> dict:
    """``{degree: Homology}`` for every degree of ``M``."""
    factors = {i: invariant_factors(M.d(i)) for i in range(M.lo - 1, M.hi + 1)}
    out = {}
    for i in M.degrees:
        incoming = factors[i - 1]
        free = M.rank(i) - len(factors[i]) - len(incoming)
        out[i] = Homology(free, tuple(d for d in incoming if d > 1))
    return out


def _rank_over(mat: IntMatrix, prime: PrimeSpec) -> int:
    """Rank of an integer matrix over Q or F_p, by Gaussian elimination."""
    if prime.p is None:
        rows = [[Fraction(x) for x in r] for r in mat.to_rows()]
        inv = lambda x: 1 / x  # noqa: E731
        red = lambda x: x  # noqa: E731
    else:
        p = prime.p
        rows = [[x % p for x in r] for r in mat.to_rows()]
        inv = lambda x: pow(x, -1, p)  # noqa: E731
        red = lambda x: x % p  # noqa: E731
    rank = 0
    for c in range(mat.cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][c]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        scale = inv(rows[rank][c])
        rows[rank] = [red(x * scale) for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][c]:
                f = rows[r][c]
                rows[r] = [red(x - f * y) for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class TensorDims:
    formula: dict
    direct: dict

    @property
    def agree(self) -> bool:
        return self.formula == self.direct


def tensor_homology_dims(M: ChainComplex, prime: PrimeSpec) -> TensorDims:
    """Dimensions of ``H^m(k(p) (x)^L M)`` computed two ways.

    ``formula`` uses the universal coefficient sequence: the integral rank in
    degree m plus the number of invariant factors divisible by p in the
    torsion of ``H^m`` and of ``H^(m+1)``.  ``direct`` reduces the
    differentials to ``k(p)`` and takes ranks.
    """
    H = homology(M)

    def t(i):
        if prime.p is None or i not in H:
            return 0
        return sum(1 for d in H[i].torsion if d % prime.p == 0)

    formula = {m: H[m].rank + t(m) + t(m + 1) for m in M.degrees}
    ranks = {i: _rank_over(M.d(i), prime) for i in range(M.lo - 1, M.hi + 1)}
    direct = {m: M.rank(m) - ranks[m] - ranks[m - 1] for m in M.degrees}
    return TensorDims(formula, direct)


def euler_characteristic(M: ChainComplex, prime: PrimeSpec) -> int:
    dims = tensor_homology_dims(M, prime).direct
    return sum((-1) ** (m % 2) * d for m, d in dims.items())


@dataclass
class Verdict:
    ok: bool
    mismatches: list
    common_ranks: dict | None = None

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return ("rank tables agree: stalks are locally constant with free stalks "
                    "of the common ranks")
        return "rank tables differ:\n" + "\n".join("  " + m for m in self.mismatches)


def rank_table_independence(tables: dict) -> Verdict:
    """Check that the degree -> rank data of tables computed over different
    residue fields agree entry by entry."""
    if not tables:
        return Verdict(True, [], {})
    items = sorted(tables.items(), key=lambda kv: (kv[0].p is not None, kv[0].p or 0))
    ref_prime, ref = items[0]
    keys = [(e.stratum.nu, e.stratum.gamma) for e in ref.entries]
    for prime, table in items[1:]:
        if table.ambient != ref.ambient or table.side != ref.side:
            raise AmbientMismatch(f"table over {prime} has a different ambient")
        if [(e.stratum.nu, e.stratum.gamma) for e in table.entries] != keys:
            raise AmbientMismatch(f"table over {prime} has a different stratum list")
    mismatches = []
    for prime, table in items[1:]:
        for a, b in zip(ref.entries, table.entries):
            if a.degree_ranks != b.degree_ranks:
                mismatches.append(
                    f"nu={list(a.stratum.nu)} gamma={[list(p) for p in a.stratum.gamma]}: "
                    f"{ref_prime} gives {a.degree_ranks}, {prime} gives {b.degree_ranks}")
    if mismatches:
        return Verdict(False, mismatches)
    common = {(e.stratum.nu, e.stratum.gamma): dict(e.degree_ranks) for e in ref.entries}
    return Verdict(True, [], common)

