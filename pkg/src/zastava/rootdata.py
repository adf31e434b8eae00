"""Finite root systems from Cartan matrices, and coroot-lattice combinatorics.

Coweights are plain tuples of integers giving coordinates in the basis of
simple coroots.  The Cartan matrix convention is

    a[i][j] = <alpha_i, alpha_j^vee>,  i.e.  <alpha_i^vee, alpha_j> = a[j][i],

so in type B2 the first simple root is long: ``[[2, -2], [-1, 2]]``.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path

from .errors import (
    InvalidCartanMatrix,
    NotDominantSum,
    NotFiniteType,
    RankMismatch,
    TorusRankTooSmall,
)

CLOSURE_BOUND = 10_000

CARTAN_PATH_ENV = "ZASTAVA_CARTAN_PATH"


def _chain(n):
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        if i + 1 < n:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


def cartan_matrix(name: str) -> tuple[tuple[int, ...], ...]:
    """Built-in Cartan matrix for a type name such as ``"A2"`` or ``"G2"``."""
    name = name.strip().upper()
    letter, digits = name[:1], name[1:]
    if not digits.isdigit():
        raise InvalidCartanMatrix(f"unknown root system type {name!r}")
    n = int(digits)
    if letter == "A" and 1 <= n <= 8:
        a = _chain(n)
    elif letter == "B" and 2 <= n <= 4:
        a = _chain(n)
        a[n - 2][n - 1] = -2  # alpha_n short
    elif letter == "C" and 2 <= n <= 4:
        a = _chain(n)
        a[n - 1][n - 2] = -2  # alpha_n long
    elif letter == "D" and n == 4:
        a = [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]]
    elif letter == "G" and n == 2:
        a = [[2, -1], [-3, 2]]  # alpha_1 short
    elif letter == "F" and n == 4:
        a = _chain(4)
        a[1][2] = -2  # alpha_1, alpha_2 long
    else:
        raise InvalidCartanMatrix(f"unknown root system type {name!r}")
    return tuple(tuple(r) for r in a)


NAMED_TYPES = (
    [f"A{n}" for n in range(1, 9)]
    + [f"B{n}" for n in range(2, 5)]
    + [f"C{n}" for n in range(2, 5)]
    + ["D4", "G2", "F4"]
)


def validate_cartan(entries) -> tuple[tuple[int, ...], ...]:
    a = tuple(tuple(int(x) for x in row) for row in entries)
    n = len(a)
    if n == 0:
        raise InvalidCartanMatrix("empty Cartan matrix")
    if any(len(row) != n for row in a):
        raise InvalidCartanMatrix("Cartan matrix must be square")
    for i in range(n):
        if a[i][i] != 2:
            raise InvalidCartanMatrix(f"diagonal entry a[{i}][{i}] = {a[i][i]} != 2")
        for j in range(n):
            if i != j:
                if a[i][j] > 0:
                    raise InvalidCartanMatrix(f"positive off-diagonal entry a[{i}][{j}]")
                if (a[i][j] == 0) != (a[j][i] == 0):
                    raise InvalidCartanMatrix(f"a[{i}][{j}] and a[{j}][{i}] disagree on zero")
    return a


def load_cartan_file(path) -> tuple[tuple[int, ...], ...]:
    """Read a Cartan matrix from JSON: either a bare nested list or
    ``{"cartan": [[...], ...]}``.  Relative paths that do not exist are
    looked up in the directories listed in ``$ZASTAVA_CARTAN_PATH``."""
    p = Path(path)
    if not p.exists() and not p.is_absolute():
        for d in os.environ.get(CARTAN_PATH_ENV, "").split(os.pathsep):
            if d and (Path(d) / p).exists():
                p = Path(d) / p
                break
    data = json.loads(p.read_text())
    if isinstance(data, dict):
        data = data["cartan"]
    return validate_cartan(data)


def _closure(a, transpose: bool):
    """Positive roots of the Cartan matrix ``a`` (or of its transpose), in
    simple coordinates, by closing the simple roots under simple reflections."""
    n = len(a)
    if transpose:
        # pairing of a coroot with simple root i: <alpha_i, beta^vee> = sum_j c_j a[i][j]
        pair = [[a[i][j] for j in range(n)] for i in range(n)]
    else:
        # <beta, alpha_i^vee> = sum_j c_j <alpha_j, alpha_i^vee> = sum_j c_j a[j][i]
        pair = [[a[j][i] for j in range(n)] for i in range(n)]
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                k = sum(c * x for c, x in zip(beta, pair[i]))
                if k == 0:
                    continue
                image = tuple(c - k * int(j == i) for j, c in enumerate(beta))
                if all(c <= 0 for c in image):
                    image = tuple(-c for c in image)
                elif any(c < 0 for c in image):
                    raise NotFiniteType("reflection produced a root of mixed sign")
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
                    if len(seen) > CLOSURE_BOUND:
                        raise NotFiniteType(
                            f"more than {CLOSURE_BOUND} positive roots; not of finite type"
                        )
        frontier = nxt
    return tuple(sorted(seen, key=lambda v: (sum(v), tuple(-c for c in v))))


@dataclass(frozen=True)
class RootSystem:
    cartan: tuple
    positive_coroots: tuple
    positive_roots: tuple
    name: str | None = field(default=None, compare=False)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def simple_coroots(self):
        return self.positive_coroots[: self.rank]

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.rank

    def coweight(self, coords) -> tuple[int, ...]:
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.rank:
            raise RankMismatch(f"expected {self.rank} coordinates, got {len(coords)}")
        return coords

    def root_pairing(self, lam, root) -> int:
        """``<lam, root>`` for a coweight and a root, both in simple coordinates."""
        a = self.cartan
        return sum(
            lam[i] * root[j] * a[j][i] for i in range(self.rank) for j in range(self.rank)
        )

    def __str__(self):
        return self.name or f"RootSystem(rank={self.rank})"


def build_root_system(cartan, name: str | None = None) -> RootSystem:
    """Positive coroots (and roots) for a finite-type Cartan matrix.

    >>> build_root_system(cartan_matrix("A2")).positive_coroots
    ((1, 0), (0, 1), (1, 1))
    """
    a = validate_cartan(cartan)
    coroots = _closure(a, transpose=True)
    roots = _closure(a, transpose=False)
    return RootSystem(a, coroots, roots, name)


def root_system(source) -> RootSystem:
    """Root system from a type name, a Cartan matrix, or a JSON file path."""
    if isinstance(source, RootSystem):
        return source
    if isinstance(source, str):
        name = source.strip().upper()
        if name[:1].isalpha() and name[1:].isdigit():
            return build_root_system(cartan_matrix(name), name)
        return build_root_system(load_cartan_file(source), None)
    return build_root_system(source)


def _check_rank(a, b):
    if len(a) != len(b):
        raise RankMismatch(f"rank {len(a)} vs rank {len(b)}")


def leq(lam, mu) -> bool:
    """``lam`` precedes ``mu``: ``mu - lam`` is a sum of positive coroots."""
    _check_rank(lam, mu)
    return all(x <= y for x, y in zip(lam, mu))


def is_nonnegative(mu) -> bool:
    return all(c >= 0 for c in mu)


def require_nonnegative(mu):
    if not is_nonnegative(mu):
        raise NotDominantSum(f"{tuple(mu)} has a negative coordinate")


def add(lam, mu):
    _check_rank(lam, mu)
    return tuple(x + y for x, y in zip(lam, mu))


def sub(lam, mu):
    _check_rank(lam, mu)
    return tuple(x - y for x, y in zip(lam, mu))


def pairing_rho(mu) -> int:
    return sum(mu)


def pairing_2rho(mu) -> int:
    return 2 * sum(mu)


def box(bound):
    """All coweights ``0 <= lam <= bound`` in lexicographic order."""
    out = [()]
    for b in bound:
        out = [p + (c,) for p in out for c in range(b + 1)]
    return out


def coweights_of_height(rank: int, height: int):
    """Nonnegative coweights with coordinate sum exactly ``height``."""
    if rank == 1:
        return [(height,)]
    return [
        (c,) + rest
        for c in range(height + 1)
        for rest in coweights_of_height(rank - 1, height - c)
    ]


def coweights_up_to_height(rank: int, height: int):
    return [v for h in range(height + 1) for v in coweights_of_height(rank, h)]


@dataclass(frozen=True)
class GroupDims:
    dim_T: int
    dim_U: int
    dim_B: int


def group_dims(rs: RootSystem, torus_rank: int | None = None) -> GroupDims:
    if torus_rank is None:
        torus_rank = rs.rank
    if torus_rank < rs.rank:
        raise TorusRankTooSmall(f"torus rank {torus_rank} < semisimple rank {rs.rank}")
    dim_u = len(rs.positive_coroots)
    return GroupDims(torus_rank, dim_u, torus_rank + dim_u)
