"""Dense polynomials in q with unbounded integer coefficients, and integer matrices.

>>> p = QPolynomial([0, 1]) + QPolynomial([0, 0, 1])
>>> p
QPolynomial([0, 1, 1])
>>> str(substitute_q_squared(p))
'q^2 + q^4'
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import zip_longest

from .errors import NonzeroConstantTerm


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class QPolynomial:
    """A polynomial ``sum(c[n] * q**n)``, stored densely without trailing zeros.

    Instances are immutable and hashable.  The zero polynomial has no
    coefficients at all.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = _trim(int(c) for c in coeffs)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("QPolynomial is immutable")

    def __reduce__(self):
        return (QPolynomial, (self.coeffs,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> QPolynomial:
        if degree < 0:
            raise ValueError("negative exponent")
        return cls([0] * degree + [coeff])

    @classmethod
    def from_json(cls, data) -> QPolynomial:
        """Inverse of :meth:`to_json`; plain integers are accepted too."""
        return cls(int(c) for c in data)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def valuation(self) -> int | None:
        """Lowest exponent with a nonzero coefficient (None for zero)."""
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, n: int) -> int:
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        return 0

    def __len__(self):
        return len(self.coeffs)

    def items(self):
        """Yield ``(exponent, coefficient)`` for the nonzero terms."""
        for n, c in enumerate(self.coeffs):
            if c:
                yield n, c

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, QPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = QPolynomial([other])
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, int):
            other = QPolynomial([other])
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return poly_add(self, -other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = QPolynomial([other])
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = ONE
        for _ in range(k):
            result = poly_mul(result, self)
        return result

    def __repr__(self):
        return f"QPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for n, c in self.items():
            if n == 0:
                mono = str(c)
            else:
                base = "q" if n == 1 else f"q^{n}"
                mono = base if c == 1 else ("-" + base if c == -1 else f"{c}*{base}")
            terms.append(mono)
        return " + ".join(terms).replace("+ -", "- ")


ZERO = QPolynomial()
ONE = QPolynomial([1])
Q = QPolynomial([0, 1])


def poly_add(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    return QPolynomial(x + y for x, y in zip_longest(a.coeffs, b.coeffs, fillvalue=0))


def poly_mul(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    if not a.coeffs or not b.coeffs:
        return ZERO
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                out[i + j] += x * y
    return QPolynomial(out)


def substitute_q_squared(p: QPolynomial) -> QPolynomial:
    """Return ``p(q**2)``."""
    out = [0] * (2 * len(p.coeffs))
    out[::2] = p.coeffs
    return QPolynomial(out)


def divide_by_q(p: QPolynomial) -> QPolynomial:
    """Return ``p / q``; the constant term of ``p`` must vanish."""
    if p[0] != 0:
        raise NonzeroConstantTerm(f"{p} is not divisible by q")
    return QPolynomial(p.coeffs[1:])


def multiply_by_q(p: QPolynomial) -> QPolynomial:
    if not p.coeffs:
        return ZERO
    return QPolynomial((0,) + p.coeffs)


# names used throughout the docs
poly_substitute_q_squared = substitute_q_squared
poly_divide_by_q = divide_by_q


@dataclass(frozen=True)
class IntMatrix:
    """Row-major integer matrix with unbounded entries."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimension")
        entries = tuple(int(x) for x in self.entries)
        if len(entries) != self.rows * self.cols:
            raise ValueError(
                f"{len(entries)} entries for a {self.rows}x{self.cols} matrix"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows, cols: int | None = None) -> IntMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        a, b = self.to_rows(), other.to_rows()
        out = [
            [sum(a[i][k] * b[k][j] for k in range(self.cols)) for j in range(other.cols)]
            for i in range(self.rows)
        ]
        return IntMatrix(self.rows, other.cols, tuple(x for r in out for x in r))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def transpose(self) -> IntMatrix:
        return IntMatrix.from_rows(
            [[self[i, j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )
