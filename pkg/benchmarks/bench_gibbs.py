#!/usr/bin/env python3
"""Benchmark the compiled Gibbs kernel against the NumPy fallback.

Both backends are bit-identical by construction; this script measures the
speed gap and verifies equality on the benchmark workload.

Usage: python benchmarks/bench_gibbs.py [--docs 200] [--tokens 120] [--sweeps 50]
"""

import argparse
import time

import numpy as np

from doctopics.topics import _gibbs_py
from doctopics.topics.rng import Pcg32

try:
    from doctopics.topics import _gibbs as gibbs_c
except ImportError:
    gibbs_c = None


def build_workload(n_docs: int, tokens_per_doc: int, K: int = 5, V: int = 400, seed: int = 1):
    rng = Pcg32(seed)
    total = n_docs * tokens_per_doc
    word_ids = np.array([rng.next_below(V) for _ in range(total)], dtype=np.int32)
    indptr = (np.arange(n_docs + 1) * tokens_per_doc).astype(np.int64)
    z = np.array([rng.next_below(K) for _ in range(total)], dtype=np.int32)
    n_dk = np.zeros((n_docs, K))
    n_kv = np.zeros((K, V))
    n_k = np.zeros(K)
    for d in range(n_docs):
        for t in range(indptr[d], indptr[d + 1]):
            n_dk[d, z[t]] += 1
            n_kv[z[t], word_ids[t]] += 1
            n_k[z[t]] += 1
    return indptr, word_ids, z, n_dk, n_kv, n_k


def run(kernel, args, sweeps: int, seed: int = 42) -> tuple[float, tuple]:
    state = Pcg32(seed).state_array()
    work = tuple(a.copy() for a in args)
    start = time.perf_counter()
    for _ in range(sweeps):
        kernel.gibbs_sweep(*work, 0.1, 0.01, state)
    return time.perf_counter() - start, work


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--docs", type=int, default=200)
    parser.add_argument("--tokens", type=int, default=120)
    parser.add_argument("--sweeps", type=int, default=50)
    opts = parser.parse_args()

    args = build_workload(opts.docs, opts.tokens)
    total_updates = opts.docs * opts.tokens * opts.sweeps

    t_py, out_py = run(_gibbs_py, args, opts.sweeps)
    print(f"python fallback : {t_py:8.3f} s   {total_updates / t_py / 1e6:6.2f} M tokens/s")

    if gibbs_c is None:
        print("compiled kernel : not built")
        return

    t_c, out_c = run(gibbs_c, args, opts.sweeps)
    print(f"compiled kernel : {t_c:8.3f} s   {total_updates / t_c / 1e6:6.2f} M tokens/s")
    print(f"speedup         : {t_py / t_c:8.1f} x")

    identical = all(np.array_equal(a, b) for a, b in zip(out_py, out_c))
    print(f"bit-identical   : {identical}")
    if not identical:
        raise SystemExit("backend mismatch!")


if __name__ == "__main__":
    main()
