"""Independent reference computations used only by the tests.

None of these call into the code paths they check.
"""

from itertools import combinations, product
from math import gcd


def integer_partitions(n):
    """p(0..n) by the classical largest-part recursion p(n, k)."""
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for k in range(n + 1):
        table[0][k] = 1
    for m in range(1, n + 1):
        for k in range(1, n + 1):
            table[m][k] = table[m][k - 1] + (table[m - k][k] if k <= m else 0)
    return [table[m][m] for m in range(n + 1)]


def truncated_product(generators, bound):
    """Coefficients of prod_g sum_k q^k x^(k g), truncated to exponents <= bound.

    Returns ``{lam: {degree: coeff}}`` by multiplying truncated series one
    factor at a time with plain dictionaries.
    """
    zero = tuple(0 for _ in bound)
    series = {zero: {0: 1}}
    for g in generators:
        factor = {}
        k = 0
        while True:
            e = tuple(k * x for x in g)
            if any(a > b for a, b in zip(e, bound)):
                break
            factor[e] = k
            k += 1
            if not any(g):
                break
        out = {}
        for lam, poly in series.items():
            for e, deg in factor.items():
                tot = tuple(a + b for a, b in zip(lam, e))
                if any(a > b for a, b in zip(tot, bound)):
                    continue
                slot = out.setdefault(tot, {})
                for d, c in poly.items():
                    slot[d + deg] = slot.get(d + deg, 0) + c
        series = out
    return series


def dict_to_coeffs(poly):
    if not poly:
        return ()
    top = max(d for d, c in poly.items() if c) if any(poly.values()) else -1
    return tuple(poly.get(d, 0) for d in range(top + 1))


def vector_partitions_by_sets(nu):
    """Partitions of ``nu`` by building all multisets from scratch and
    deduplicating through a set of sorted tuples."""
    vectors = [v for v in product(*(range(b + 1) for b in nu)) if any(v)]
    results = set()

    def rec(rest, chosen):
        if not any(rest):
            results.add(tuple(sorted(chosen)))
            return
        for v in vectors:
            if all(a >= b for a, b in zip(rest, v)):
                rec(tuple(a - b for a, b in zip(rest, v)), chosen + [v])

    rec(tuple(nu), [])
    return results


def det(m):
    """Determinant by Laplace expansion (small matrices only)."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j]:
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            total += (-1) ** j * m[0][j] * det(minor)
    return total


def gcd_of_minors(rows, k):
    """gcd of all k x k minors of an integer matrix (0 if they all vanish)."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    g = 0
    for rs in combinations(range(m), k):
        for cs in combinations(range(n), k):
            g = gcd(g, det([[rows[i][j] for j in cs] for i in rs]))
    return g


def determinantal_factors(rows):
    """Invariant factors d_k = D_k / D_(k-1) from gcds of minors."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    out = []
    prev = 1
    for k in range(1, min(m, n) + 1):
        dk = gcd_of_minors(rows, k)
        if dk == 0:
            break
        out.append(dk // prev)
        prev = dk
    return tuple(out)


def rank_mod(rows, p):
    """Rank over F_p (p prime) or over Q (p = 0, via exact fractions)."""
    from fractions import Fraction

    if p == 0:
        a = [[Fraction(x) for x in r] for r in rows]
    else:
        a = [[x % p for x in r] for r in rows]
    rank = 0
    ncols = len(a[0]) if a else 0
    for c in range(ncols):
        piv = None
        for r in range(rank, len(a)):
            if a[r][c] != 0:
                piv = r
                break
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for r in range(len(a)):
            if r != rank and a[r][c] != 0:
                if p == 0:
                    f = a[r][c] / a[rank][c]
                    a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
                else:
                    f = a[r][c] * pow(a[rank][c], -1, p)
                    a[r] = [(x - f * y) % p for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank


def elementary_divisors(orders):
    """Sorted prime powers of a finite abelian group given as a sum of cyclics."""
    out = []
    for n in orders:
        p = 2
        while n > 1:
            if n % p == 0:
                q = 1
                while n % p == 0:
                    n //= p
                    q *= p
                out.append(q)
            p += 1
    return sorted(out)
