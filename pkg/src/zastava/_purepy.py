"""Pure-Python box knapsack kernels.  Same contract as ``_speedups.pyx``.

Both kernels work on the box ``0 <= lam <= dims`` flattened in
lexicographic (row-major) order, so ``lam - part`` always has a smaller
flat index than ``lam`` and a single ascending sweep per part realizes
unbounded multiplicities.
"""


def _layout(dims):
    strides = [1] * len(dims)
    for i in range(len(dims) - 2, -1, -1):
        strides[i] = strides[i + 1] * (dims[i + 1] + 1)
    size = strides[0] * (dims[0] + 1) if dims else 1
    coords = [()]
    for b in dims:
        coords = [c + (x,) for c in coords for x in range(b + 1)]
    return strides, size, coords


def _usable(dims, parts):
    return [
        p for p in parts
        if any(p) and all(0 <= x <= b for x, b in zip(p, dims))
    ]


def graded_knapsack(dims, parts, max_degree):
    """Flat table ``t[idx * (max_degree + 1) + k]`` counting multisets of
    ``k`` parts summing to the coweight at flat index ``idx``."""
    dims = tuple(dims)
    strides, size, coords = _layout(dims)
    width = max_degree + 1
    table = [0] * (size * width)
    table[0] = 1
    for part in _usable(dims, parts):
        offset = sum(x * s for x, s in zip(part, strides))
        for idx in range(size):
            c = coords[idx]
            if any(x < p for x, p in zip(c, part)):
                continue
            src = (idx - offset) * width
            dst = idx * width
            for k in range(width - 1):
                v = table[src + k]
                if v:
                    table[dst + k + 1] += v
    return table


def knapsack_count(dims, parts):
    """Flat table ``t[idx]`` counting multisets of parts summing to the
    coweight at flat index ``idx``."""
    dims = tuple(dims)
    strides, size, coords = _layout(dims)
    table = [0] * size
    table[0] = 1
    for part in _usable(dims, parts):
        offset = sum(x * s for x, s in zip(part, strides))
        for idx in range(size):
            c = coords[idx]
            if any(x < p for x, p in zip(c, part)):
                continue
            table[idx] += table[idx - offset]
    return table
