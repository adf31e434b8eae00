# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled box knapsack kernels.  Same contract as ``_purepy``.

Index arithmetic runs on C integers; coefficients stay Python ints so
counts never overflow.
"""

from libc.stdlib cimport malloc, free


cdef long *_coords(tuple dims, Py_ssize_t size, long *strides) except NULL:
    cdef Py_ssize_t r = len(dims), i, idx
    cdef long *out = <long *> malloc(sizeof(long) * size * (r if r else 1))
    if out == NULL:
        raise MemoryError()
    for idx in range(size):
        for i in range(r):
            out[idx * r + i] = (idx // strides[i]) % (<long> dims[i] + 1)
    return out


cdef long *_strides(tuple dims, Py_ssize_t *size) except NULL:
    cdef Py_ssize_t r = len(dims), i
    cdef long *s = <long *> malloc(sizeof(long) * (r if r else 1))
    if s == NULL:
        raise MemoryError()
    if r:
        s[r - 1] = 1
        for i in range(r - 2, -1, -1):
            s[i] = s[i + 1] * (<long> dims[i + 1] + 1)
        size[0] = s[0] * (<long> dims[0] + 1)
    else:
        size[0] = 1
    return s


def _usable(dims, parts):
    return [
        tuple(p) for p in parts
        if any(p) and all(0 <= x <= b for x, b in zip(p, dims))
    ]


cdef inline bint _fits(long *coords, Py_ssize_t idx, long *part, Py_ssize_t r):
    cdef Py_ssize_t i
    for i in range(r):
        if coords[idx * r + i] < part[i]:
            return False
    return True


def graded_knapsack(dims, parts, long max_degree):
    cdef tuple d = tuple(int(x) for x in dims)
    cdef Py_ssize_t r = len(d), size = 0, idx, k, i
    cdef long width = max_degree + 1, offset
    cdef long *strides = _strides(d, &size)
    cdef long *coords = NULL
    cdef long *part = <long *> malloc(sizeof(long) * (r if r else 1))
    cdef list table
    cdef object v
    try:
        coords = _coords(d, size, strides)
        table = [0] * (size * width)
        table[0] = 1
        for p in _usable(d, parts):
            offset = 0
            for i in range(r):
                part[i] = p[i]
                offset += part[i] * strides[i]
            for idx in range(size):
                if not _fits(coords, idx, part, r):
                    continue
                for k in range(width - 1):
                    v = table[(idx - offset) * width + k]
                    if v:
                        table[idx * width + k + 1] += v
        return table
    finally:
        free(strides)
        free(part)
        if coords != NULL:
            free(coords)


def knapsack_count(dims, parts):
    cdef tuple d = tuple(int(x) for x in dims)
    cdef Py_ssize_t r = len(d), size = 0, idx, i
    cdef long offset
    cdef long *strides = _strides(d, &size)
    cdef long *coords = NULL
    cdef long *part = <long *> malloc(sizeof(long) * (r if r else 1))
    cdef list table
    try:
        coords = _coords(d, size, strides)
        table = [0] * size
        table[0] = 1
        for p in _usable(d, parts):
            offset = 0
            for i in range(r):
                part[i] = p[i]
                offset += part[i] * strides[i]
            for idx in range(size):
                if _fits(coords, idx, part, r):
                    table[idx] += table[idx - offset]
        return table
    finally:
        free(strides)
        free(part)
        if coords != NULL:
            free(coords)
