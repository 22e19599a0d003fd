# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled butterfly-counting kernels.

Hot inner loops for exact 4-cycle counting over CSR adjacency.  Semantics
match ``bimeta._pykernel`` exactly; per-source subtotals stay well inside
int64 (bounded by m^2/2) and the grand total is returned as a Python int.
"""

import numpy as np


def butterfly_total(const long long[::1] src_indptr, const long long[::1] src_indices,
                    const long long[::1] ctr_indptr, const long long[::1] ctr_indices,
                    long long n_src):
    cdef long long[::1] acc = np.zeros(n_src, dtype=np.int64)
    cdef long long[::1] touched = np.empty(n_src, dtype=np.int64)
    cdef long long i, a, b, j, ip, k, nt, t
    cdef long long subtotal
    total = 0
    for i in range(n_src):
        nt = 0
        for a in range(src_indptr[i], src_indptr[i + 1]):
            j = src_indices[a]
            for b in range(ctr_indptr[j], ctr_indptr[j + 1]):
                ip = ctr_indices[b]
                if ip == i:
                    continue
                if acc[ip] == 0:
                    touched[nt] = ip
                    nt += 1
                acc[ip] += 1
        subtotal = 0
        for t in range(nt):
            k = acc[touched[t]]
            subtotal += k * (k - 1) // 2
            acc[touched[t]] = 0
        total += subtotal
    return total // 2


def butterflies_per_edge(const long long[::1] src_indptr, const long long[::1] src_indices,
                         const long long[::1] ctr_indptr, const long long[::1] ctr_indices,
                         long long n_src):
    out_arr = np.zeros(len(src_indices), dtype=np.int64)
    cdef long long[::1] out = out_arr
    cdef long long[::1] acc = np.zeros(n_src, dtype=np.int64)
    cdef long long[::1] touched = np.empty(n_src, dtype=np.int64)
    cdef long long i, a, b, j, ip, nt, t, s
    for i in range(n_src):
        nt = 0
        for a in range(src_indptr[i], src_indptr[i + 1]):
            j = src_indices[a]
            for b in range(ctr_indptr[j], ctr_indptr[j + 1]):
                ip = ctr_indices[b]
                if ip == i:
                    continue
                if acc[ip] == 0:
                    touched[nt] = ip
                    nt += 1
                acc[ip] += 1
        for a in range(src_indptr[i], src_indptr[i + 1]):
            j = src_indices[a]
            s = 0
            for b in range(ctr_indptr[j], ctr_indptr[j + 1]):
                ip = ctr_indices[b]
                if ip != i:
                    s += acc[ip] - 1
            out[a] = s
        for t in range(nt):
            acc[touched[t]] = 0
    return out_arr
