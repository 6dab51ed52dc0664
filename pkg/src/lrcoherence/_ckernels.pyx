# cython: language_level=3
"""
Compiled hot loops.

Every kernel parallelises over time points only; each output element is an
independent sequential sum, so results do not depend on the thread count.
"""

import numpy as np

cimport cython
from cython.parallel cimport prange
from libc.math cimport cos, sin, fabs, sqrt, ldexp
from libc.stdlib cimport malloc, free


def enumerate_frequencies(const double[::1] weights):
    """``out[k] = 2 * sum_b s_b(k) * weights[b]`` over all sign words ``k``."""
    cdef Py_ssize_t m = weights.shape[0]
    cdef Py_ssize_t total = (<Py_ssize_t>1) << m
    out_arr = np.empty(total, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t k, b, half
    cdef double w, v
    out[0] = 0.0
    # doubling: bit b is the upper half; additions run bit 0 first
    for b in range(m):
        half = (<Py_ssize_t>1) << b
        w = weights[b]
        for k in range(half):
            v = out[k]
            out[k] = v + (-w)
            out[k + half] = v + w
    for k in range(total):
        out[k] = 2.0 * out[k]
    return out_arr


def phase_sum_modulus(const double[::1] freqs, const double[::1] times):
    """``out[t] = |sum_l exp(i * freqs[l] * times[t])|``, summed in index order."""
    cdef Py_ssize_t nf = freqs.shape[0]
    cdef Py_ssize_t nt = times.shape[0]
    out_arr = np.empty(nt, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t it, l
    cdef double re, im, t, ph
    for it in prange(nt, nogil=True, schedule="static"):
        t = times[it]
        re = 0.0
        im = 0.0
        for l in range(nf):
            ph = freqs[l] * t
            re = re + cos(ph)
            im = im + sin(ph)
        out[it] = sqrt(re * re + im * im)
    return out_arr


def pattern_coherence(const double[:, ::1] fields, const double[::1] weights,
                      const double[::1] times):
    """``out[t] = sum_p weights[p] * prod_m |cos(times[t] * fields[p, m])|``."""
    cdef Py_ssize_t npat = fields.shape[0]
    cdef Py_ssize_t nm = fields.shape[1]
    cdef Py_ssize_t nt = times.shape[0]
    out_arr = np.empty(nt, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t it, p, q
    cdef double t, acc, prod
    for it in prange(nt, nogil=True, schedule="static"):
        t = times[it]
        acc = 0.0
        for p in range(npat):
            prod = weights[p]
            for q in range(nm):
                prod = prod * fabs(cos(t * fields[p, q]))
            acc = acc + prod
        out[it] = acc
    return out_arr


def density_matrix_sum(const double[:, ::1] energies, double t):
    """``out[a, b] = sum_s exp(-i (E[a, s] - E[b, s]) t)``, summed in ``s`` order."""
    cdef Py_ssize_t na = energies.shape[0]
    cdef Py_ssize_t ns = energies.shape[1]
    out_arr = np.empty((na, na), dtype=np.complex128)
    cdef double complex[:, ::1] out = out_arr
    cdef Py_ssize_t a, b, s
    cdef double re, im, ph
    for a in prange(na, nogil=True, schedule="static"):
        for b in range(na):
            re = 0.0
            im = 0.0
            for s in range(ns):
                ph = (energies[a, s] - energies[b, s]) * t
                re = re + cos(ph)
                im = im - sin(ph)
            out[a, b] = re + 1j * im
    return out_arr


cdef double _pattern_walk(int depth, int n_in, int n_out, bint started, int zeros,
                          double* zre, double* zim,
                          const double* cre, const double* cim) noexcept nogil:
    """Sum over difference patterns below ``depth``; digits tried in order 0, +2, -2."""
    cdef int m
    cdef Py_ssize_t cur, nxt, row
    cdef double prod, total, a, b
    if depth == n_in:
        if not started:
            return 0.0
        prod = 2.0 * ldexp(1.0, zeros)
        cur = <Py_ssize_t>depth * n_out
        for m in range(n_out):
            prod = prod * fabs(zre[cur + m])
        return prod
    cur = <Py_ssize_t>depth * n_out
    nxt = cur + n_out
    row = <Py_ssize_t>depth * n_out
    for m in range(n_out):
        zre[nxt + m] = zre[cur + m]
        zim[nxt + m] = zim[cur + m]
    total = _pattern_walk(depth + 1, n_in, n_out, started, zeros + 1, zre, zim, cre, cim)
    for m in range(n_out):
        a = zre[cur + m]
        b = zim[cur + m]
        zre[nxt + m] = a * cre[row + m] - b * cim[row + m]
        zim[nxt + m] = a * cim[row + m] + b * cre[row + m]
    total = total + _pattern_walk(depth + 1, n_in, n_out, True, zeros, zre, zim, cre, cim)
    # d and -d have equal moduli: -2 only after the first nonzero digit
    if started:
        for m in range(n_out):
            a = zre[cur + m]
            b = zim[cur + m]
            zre[nxt + m] = a * cre[row + m] + b * cim[row + m]
            zim[nxt + m] = b * cre[row + m] - a * cim[row + m]
        total = total + _pattern_walk(depth + 1, n_in, n_out, True, zeros, zre, zim, cre, cim)
    return total


def block_pattern_sum(const double[:, ::1] j_out, const double[::1] times):
    """
    ``out[t] = sum_{d != 0} 2**zeros(d) prod_m |cos(t * (j_out @ d)[m])|``.

    Phases ``exp(i t h_m)`` are built digit by digit with complex products
    instead of one cosine per pattern and outside spin.
    """
    cdef int n_out = <int>j_out.shape[0]
    cdef int n_in = <int>j_out.shape[1]
    cdef Py_ssize_t nt = times.shape[0]
    out_arr = np.empty(nt, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t it
    cdef int q, m
    cdef double t
    cdef double* zre
    cdef double* zim
    cdef double* cre
    cdef double* cim
    cdef Py_ssize_t zsize = <Py_ssize_t>(n_in + 1) * n_out
    cdef Py_ssize_t csize = <Py_ssize_t>n_in * n_out
    for it in prange(nt, nogil=True, schedule="static"):
        t = times[it]
        zre = <double*>malloc((zsize + 1) * sizeof(double))
        zim = <double*>malloc((zsize + 1) * sizeof(double))
        cre = <double*>malloc((csize + 1) * sizeof(double))
        cim = <double*>malloc((csize + 1) * sizeof(double))
        for q in range(n_in):
            for m in range(n_out):
                cre[q * n_out + m] = cos(2.0 * t * j_out[m, q])
                cim[q * n_out + m] = sin(2.0 * t * j_out[m, q])
        for m in range(n_out):
            zre[m] = 1.0
            zim[m] = 0.0
        out[it] = _pattern_walk(0, n_in, n_out, False, 0, zre, zim, cre, cim)
        free(zre)
        free(zim)
        free(cre)
        free(cim)
    return out_arr
