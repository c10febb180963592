# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled lattice kernels; see _pykernels.py for the reference semantics."""

import numpy as np

from libc.stdint cimport int64_t, uint8_t


def nu_table(const int64_t[::1] t, Py_ssize_t t_lo,
             const int64_t[::1] ti, Py_ssize_t ti_lo,
             const uint8_t[::1] member,
             Py_ssize_t a0, Py_ssize_t b0, Py_ssize_t n):
    out = np.zeros((n + 1, n + 1), dtype=np.int64)
    cdef int64_t[:, ::1] X = out
    cdef Py_ssize_t u, v, i, A, off, x
    cdef int64_t cnt
    with nogil:
        for u in range(n + 1):
            A = a0 + u
            cnt = 0
            off = A + 1 - t_lo
            for i in range(A + b0 + 2):
                if member[i] and t[off - i] <= b0:
                    cnt += 1
            X[u, 0] = cnt
            for v in range(1, n + 1 - u):
                x = A + 1 - ti[b0 + v - ti_lo]
                if x >= 0 and member[x]:
                    cnt += 1
                X[u, v] = cnt
    return out


def dim_table(const int64_t[::1] t, Py_ssize_t t_lo,
              const int64_t[::1] ti, Py_ssize_t ti_lo,
              Py_ssize_t a0, Py_ssize_t b0, Py_ssize_t n, int64_t base):
    out = np.zeros((n + 1, n + 1), dtype=np.int64)
    cdef int64_t[:, ::1] D = out
    cdef Py_ssize_t u, v
    cdef int64_t tA
    with nogil:
        D[0, 0] = base
        for v in range(1, n + 1):
            D[0, v] = D[0, v - 1] + (ti[b0 + v - ti_lo] <= a0)
        for u in range(1, n + 1):
            tA = t[a0 + u - t_lo]
            for v in range(n + 1 - u):
                D[u, v] = D[u - 1, v] + (tA <= b0 + v)
    return out


def bottleneck(const int64_t[::1] t, Py_ssize_t t_lo,
               const int64_t[::1] ti, Py_ssize_t ti_lo,
               const int64_t[:, ::1] nu_p, const int64_t[:, ::1] nu_pinf,
               Py_ssize_t a0, Py_ssize_t b0, Py_ssize_t n, int64_t floor):
    out = np.zeros((n + 1, n + 1), dtype=np.int64)
    cdef int64_t[:, ::1] V = out
    cdef Py_ssize_t u, v, d, A, B
    cdef int64_t vp, vq
    with nogil:
        for u in range(n + 1):
            V[u, n - u] = floor
        for d in range(n - 1, -1, -1):
            for u in range(d + 1):
                v = d - u
                A = a0 + u
                B = b0 + v
                vp = V[u + 1, v]
                if t[A + 1 - t_lo] <= B and nu_p[u, v] < vp:
                    vp = nu_p[u, v]
                vq = V[u, v + 1]
                if ti[B + 1 - ti_lo] <= A and nu_pinf[u, v] < vq:
                    vq = nu_pinf[u, v]
                V[u, v] = vp if vp > vq else vq
    return out
