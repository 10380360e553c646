# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled collapsed Gibbs sweep.

Mirrors _gibbs_py.gibbs_sweep exactly: same PCG32 stream, same count
arithmetic, same sequential cumulative sum, so results are bit-identical
to the fallback.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND = "compiled"

cdef extern from *:
    """
    #include <stdint.h>

    static inline uint32_t dt_pcg32_next(uint64_t *state, uint64_t inc) {
        uint64_t old = *state;
        *state = old * 6364136223846793005ULL + inc;
        uint32_t xorshifted = (uint32_t)(((old >> 18u) ^ old) >> 27u);
        uint32_t rot = (uint32_t)(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((-rot) & 31u));
    }
    """
    unsigned int dt_pcg32_next(unsigned long long *state, unsigned long long inc) nogil


def gibbs_sweep(
    cnp.int64_t[::1] indptr,
    cnp.int32_t[::1] word_ids,
    cnp.int32_t[::1] z,
    cnp.float64_t[:, ::1] n_dk,
    cnp.float64_t[:, ::1] n_kv,
    cnp.float64_t[::1] n_k,
    double alpha,
    double beta,
    cnp.uint64_t[::1] rng_state,
):
    """One full resampling pass over every token, mutating counts in place."""
    cdef unsigned long long state = rng_state[0]
    cdef unsigned long long inc = rng_state[1]
    cdef Py_ssize_t n_docs = indptr.shape[0] - 1
    cdef Py_ssize_t n_topics = n_kv.shape[0]
    cdef double vbeta = n_kv.shape[1] * beta
    cdef cnp.float64_t[::1] cum = np.empty(n_topics, dtype=np.float64)

    cdef Py_ssize_t d, t, kk
    cdef int v, k, k_new
    cdef double acc, u

    with nogil:
        for d in range(n_docs):
            for t in range(indptr[d], indptr[d + 1]):
                v = word_ids[t]
                k = z[t]
                n_dk[d, k] -= 1.0
                n_kv[k, v] -= 1.0
                n_k[k] -= 1.0

                acc = 0.0
                for kk in range(n_topics):
                    acc += (n_kv[kk, v] + beta) / (n_k[kk] + vbeta) * (n_dk[d, kk] + alpha)
                    cum[kk] = acc
                u = (dt_pcg32_next(&state, inc) * (2.0 ** -32)) * acc

                k_new = 0
                while k_new < n_topics - 1 and u >= cum[k_new]:
                    k_new += 1

                z[t] = k_new
                n_dk[d, k_new] += 1.0
                n_kv[k_new, v] += 1.0
                n_k[k_new] += 1.0

    rng_state[0] = state
    rng_state[1] = inc
