"""Lusztig's q-analogue of Kostant's partition function, over positive coroots.

The grading is by the number of summands: the coefficient of ``q**k`` in
``kostant_q(rs, lam)`` counts multisets of ``k`` positive coroots with sum
``lam``.  Hence ``kostant_q(rs, 0) == 1`` and every other value has zero
constant term, which is what makes ``q**-1 * P(mu, q**2)`` a polynomial.

>>> from zastava.rootdata import root_system
>>> str(kostant_q(root_system("A2"), (2, 1)))
'q^2 + q^3'
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .errors import HeightBoundExceeded
from .ring import ONE, ZERO, QPolynomial
from .rootdata import RootSystem, box, is_nonnegative, pairing_rho, require_nonnegative

BRUTEFORCE_HEIGHT_LIMIT = 12


@dataclass(frozen=True)
class KostantTable:
    root_system: RootSystem
    bound: tuple
    values: dict

    def __getitem__(self, lam) -> QPolynomial:
        return self.values[tuple(lam)]

    def get(self, lam) -> QPolynomial:
        """Value at ``lam``, or zero outside the nonnegative cone.  Raises
        KeyError for nonnegative ``lam`` beyond the table's bound."""
        lam = tuple(lam)
        if not is_nonnegative(lam):
            return ZERO
        return self.values[lam]


def kostant_table(rs: RootSystem, bound, order=None) -> KostantTable:
    """All values ``kostant_q(rs, lam)`` for ``0 <= lam <= bound`` in one sweep.

    ``order`` overrides the processing order of the positive coroots; the
    result does not depend on it.
    """
    bound = rs.coweight(bound)
    require_nonnegative(bound)
    coroots = rs.positive_coroots if order is None else tuple(order)
    width = pairing_rho(bound) + 1
    flat = kernels.graded_knapsack(bound, coroots, width - 1)
    values = {
        lam: QPolynomial(flat[i * width:(i + 1) * width])
        for i, lam in enumerate(box(bound))
    }
    return KostantTable(rs, bound, values)


def kostant_q(rs: RootSystem, lam) -> QPolynomial:
    lam = rs.coweight(lam)
    if not is_nonnegative(lam):
        return ZERO
    if not any(lam):
        return ONE
    return kostant_table(rs, lam)[lam]


def enumerate_coroot_multisets(rs: RootSystem, lam):
    """Yield each multiset of positive coroots summing to ``lam`` once, as a
    nonincreasing tuple of indices into ``rs.positive_coroots``."""
    lam = rs.coweight(lam)
    coroots = rs.positive_coroots

    def rec(rest, top, chosen):
        if not any(rest):
            yield tuple(chosen)
            return
        for i in range(top, -1, -1):
            g = coroots[i]
            if all(x >= y for x, y in zip(rest, g)):
                chosen.append(i)
                yield from rec(tuple(x - y for x, y in zip(rest, g)), i, chosen)
                chosen.pop()

    if is_nonnegative(lam):
        yield from rec(lam, len(coroots) - 1, [])


def kostant_q_bruteforce(rs: RootSystem, lam) -> QPolynomial:
    """Exhaustive-enumeration oracle for :func:`kostant_q`."""
    lam = rs.coweight(lam)
    if not is_nonnegative(lam):
        return ZERO
    if pairing_rho(lam) > BRUTEFORCE_HEIGHT_LIMIT:
        raise HeightBoundExceeded(
            f"height {pairing_rho(lam)} exceeds the enumeration limit {BRUTEFORCE_HEIGHT_LIMIT}"
        )
    counts = [0] * (pairing_rho(lam) + 1)
    for multiset in enumerate_coroot_multisets(rs, lam):
        counts[len(multiset)] += 1
    return QPolynomial(counts)
