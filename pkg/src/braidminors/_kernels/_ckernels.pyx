# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot loops; same contracts as ``_pykernels``."""

from array import array

from cpython.mem cimport PyMem_Malloc, PyMem_Free


cdef Py_ssize_t _scan(const long long[:] u, const long long[:] v, Py_ssize_t *out) noexcept nogil:
    cdef Py_ssize_t m = u.shape[0]
    cdef Py_ssize_t lv = v.shape[0]
    cdef Py_ssize_t t = 0
    cdef Py_ssize_t pos
    for pos in range(lv):
        if t == m:
            break
        if v[pos] == u[t]:
            if out != NULL:
                out[t] = pos + 1
            t += 1
    return t


def _as_view(seq):
    if isinstance(seq, array) and seq.typecode == "q":
        return seq
    return array("q", seq)


def greedy_embed(u, v):
    cdef const long long[:] uu = _as_view(u)
    cdef const long long[:] vv = _as_view(v)
    cdef Py_ssize_t m = uu.shape[0]
    cdef Py_ssize_t t
    cdef Py_ssize_t *buf
    if m > vv.shape[0]:
        return None
    buf = <Py_ssize_t *> PyMem_Malloc((m + 1) * sizeof(Py_ssize_t))
    if buf == NULL:
        raise MemoryError()
    try:
        with nogil:
            t = _scan(uu, vv, buf)
        if t != m:
            return None
        return [buf[k] for k in range(m)]
    finally:
        PyMem_Free(buf)


def embeds(u, v):
    cdef const long long[:] uu = _as_view(u)
    cdef const long long[:] vv = _as_view(v)
    cdef Py_ssize_t t
    if uu.shape[0] > vv.shape[0]:
        return False
    with nogil:
        t = _scan(uu, vv, NULL)
    return t == uu.shape[0]


def transposition_product(Py_ssize_t n, left, right):
    cdef const long long[:] ll = _as_view(left)
    cdef const long long[:] rr = _as_view(right)
    cdef Py_ssize_t k, xa, xb
    cdef long long a, b
    cdef Py_ssize_t *where = <Py_ssize_t *> PyMem_Malloc((n + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *inv = <Py_ssize_t *> PyMem_Malloc((n + 1) * sizeof(Py_ssize_t))
    if where == NULL or inv == NULL:
        PyMem_Free(where)
        PyMem_Free(inv)
        raise MemoryError()
    try:
        for k in range(n + 1):
            where[k] = k
            inv[k] = k
        with nogil:
            for k in range(ll.shape[0]):
                a = ll[k]
                b = rr[k]
                xa = inv[a]
                xb = inv[b]
                where[xa] = b
                where[xb] = a
                inv[a] = xb
                inv[b] = xa
        return [where[k] for k in range(1, n + 1)]
    finally:
        PyMem_Free(where)
        PyMem_Free(inv)


def count_cycles(images):
    cdef Py_ssize_t n = len(images)
    cdef Py_ssize_t start, x, cycles = 0
    cdef const long long[:] im = _as_view(images)
    cdef char *seen = <char *> PyMem_Malloc(n + 1)
    if seen == NULL:
        raise MemoryError()
    try:
        for x in range(n + 1):
            seen[x] = 0
        with nogil:
            for start in range(1, n + 1):
                if seen[start]:
                    continue
                cycles += 1
                x = start
                while not seen[x]:
                    seen[x] = 1
                    x = im[x - 1]
        return cycles
    finally:
        PyMem_Free(seen)
