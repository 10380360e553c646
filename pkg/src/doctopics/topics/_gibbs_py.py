"""Pure-NumPy collapsed Gibbs sweep, the fallback for the compiled kernel.

Must stay operation-for-operation identical to _gibbs.pyx: same count
arithmetic, same cumulative-sum sampling, same PCG32 stream. np.cumsum
accumulates sequentially, matching the C loop's summation order, so the
two backends produce bit-identical chains.
"""

from __future__ import annotations

import numpy as np

from .rng import Pcg32

BACKEND = "python"


def gibbs_sweep(
    indptr: np.ndarray,
    word_ids: np.ndarray,
    z: np.ndarray,
    n_dk: np.ndarray,
    n_kv: np.ndarray,
    n_k: np.ndarray,
    alpha: float,
    beta: float,
    rng_state: np.ndarray,
) -> None:
    """One full resampling pass over every token, mutating counts in place."""
    rng = Pcg32.from_state(rng_state)
    n_docs = len(indptr) - 1
    n_topics = n_kv.shape[0]
    vbeta = n_kv.shape[1] * beta

    for d in range(n_docs):
        row_dk = n_dk[d]
        for t in range(indptr[d], indptr[d + 1]):
            v = word_ids[t]
            k = z[t]
            row_dk[k] -= 1.0
            n_kv[k, v] -= 1.0
            n_k[k] -= 1.0

            p = (n_kv[:, v] + beta) / (n_k + vbeta) * (row_dk + alpha)
            cum = np.cumsum(p)
            u = rng.next_double() * cum[-1]
            k_new = int(np.searchsorted(cum, u, side="right"))
            if k_new >= n_topics:
                k_new = n_topics - 1

            z[t] = k_new
            row_dk[k_new] += 1.0
            n_kv[k_new, v] += 1.0
            n_k[k_new] += 1.0

    rng_state[:] = rng.state_array()
