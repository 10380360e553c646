"""Density-based clustering: mutual-reachability MST, condensed tree,
excess-of-mass cluster extraction, noise labeling.

Follows the reference HDBSCAN construction. Conventions pinned here:
core distance is the distance to the min_samples-th nearest *other* point;
the root cluster is never selectable, so inputs with no dense split (for
example all points mutually equidistant with min_cluster_size = n) come
back as all noise.
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import TooFewPoints
from .clusters import ClusterResult, canonical_labels
from .divergence import DistanceMatrix


def core_distances(d: np.ndarray, min_samples: int) -> np.ndarray:
    n = d.shape[0]
    core = np.empty(n, dtype=np.float64)
    for i in range(n):
        others = np.sort(np.delete(d[i], i))
        core[i] = others[min_samples - 1]
    return core


def mutual_reachability(d: np.ndarray, core: np.ndarray) -> np.ndarray:
    return np.maximum(d, np.maximum(core[:, None], core[None, :]))


def prim_mst(w: np.ndarray) -> list[tuple[int, int, float]]:
    """MST edges of a dense weighted graph; ties broken by smallest index."""
    n = w.shape[0]
    in_tree = np.zeros(n, dtype=bool)
    key = np.full(n, math.inf)
    parent = np.full(n, -1, dtype=np.int64)
    key[0] = 0.0
    edges: list[tuple[int, int, float]] = []
    for _ in range(n):
        u = -1
        for v in range(n):  # linear scan keeps the smallest-index tie-break
            if not in_tree[v] and (u == -1 or key[v] < key[u]):
                u = v
        in_tree[u] = True
        if parent[u] >= 0:
            edges.append((int(parent[u]), u, float(key[u])))
        for v in range(n):
            if not in_tree[v] and w[u, v] < key[v]:
                key[v] = w[u, v]
                parent[v] = u
    return edges


def _single_linkage(edges: list[tuple[int, int, float]], n: int) -> np.ndarray:
    """scipy-style merge table (left, right, height, size) from MST edges."""
    order = sorted(range(len(edges)), key=lambda e: (edges[e][2], min(edges[e][:2]), max(edges[e][:2])))
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    size = [1] * (2 * n - 1)
    merges = np.zeros((n - 1, 4), dtype=np.float64)
    cluster_of = list(range(n))  # union-find root -> hierarchy node id
    for s, e in enumerate(order):
        a, b, height = edges[e]
        ra, rb = find(a), find(b)
        ca, cb = cluster_of[ra], cluster_of[rb]
        new = n + s
        merges[s] = (min(ca, cb), max(ca, cb), height, size[ca] + size[cb])
        size[new] = size[ca] + size[cb]
        parent[ra] = rb
        cluster_of[find(rb)] = new
    return merges


def _bfs_leaves(merges: np.ndarray, n: int, node: int) -> list[int]:
    out, stack = [], [node]
    while stack:
        x = stack.pop()
        if x < n:
            out.append(x)
        else:
            row = merges[x - n]
            stack.append(int(row[0]))
            stack.append(int(row[1]))
    return out


def _condense(merges: np.ndarray, n: int, min_cluster_size: int):
    """Condensed tree rows (parent, child, lambda, size); root cluster id = n."""
    root = 2 * n - 2
    relabel = {root: n}
    next_label = n + 1
    rows: list[tuple[int, int, float, int]] = []

    def node_size(x: int) -> int:
        return 1 if x < n else int(merges[x - n][3])

    # BFS top-down over internal nodes; dissolved subtrees are simply not enqueued
    queue = [root]
    while queue:
        node = queue.pop(0)
        if node < n:
            continue
        left, right, height, _ = merges[node - n]
        left, right = int(left), int(right)
        lam = 1.0 / height if height > 0 else math.inf
        parent_label = relabel[node]
        ls, rs = node_size(left), node_size(right)

        if ls >= min_cluster_size and rs >= min_cluster_size:
            relabel[left] = next_label
            rows.append((parent_label, next_label, lam, ls))
            next_label += 1
            relabel[right] = next_label
            rows.append((parent_label, next_label, lam, rs))
            next_label += 1
            queue.extend((left, right))
        elif ls < min_cluster_size and rs < min_cluster_size:
            for sub in _bfs_leaves(merges, n, left):
                rows.append((parent_label, sub, lam, 1))
            for sub in _bfs_leaves(merges, n, right):
                rows.append((parent_label, sub, lam, 1))
            # whole subtree is dissolved; nothing further to walk
        elif ls < min_cluster_size:
            relabel[right] = parent_label
            for sub in _bfs_leaves(merges, n, left):
                rows.append((parent_label, sub, lam, 1))
            queue.append(right)
        else:
            relabel[left] = parent_label
            for sub in _bfs_leaves(merges, n, right):
                rows.append((parent_label, sub, lam, 1))
            queue.append(left)
    return rows


def _select_clusters(rows, n: int) -> set[int]:
    """Excess-of-mass selection; the root cluster (id n) is never selected."""
    births: dict[int, float] = {n: 0.0}
    children: dict[int, list[int]] = {}
    for parent, child, lam, size in rows:
        if child >= n:
            births[child] = lam
            children.setdefault(parent, []).append(child)
    # cap infinite density levels (duplicate points) at the largest finite one
    finite_lams = [lam for _, _, lam, _ in rows if math.isfinite(lam)]
    cap = max(finite_lams) if finite_lams else 1.0
    stability: dict[int, float] = {c: 0.0 for c in births}
    for parent, child, lam, size in rows:
        stability[parent] += (min(lam, cap) - min(births[parent], cap)) * size

    is_cluster = {c: True for c in stability}
    for node in sorted(stability, reverse=True):
        if node == n:
            continue
        subtree = sum(stability[c] for c in children.get(node, []))
        if subtree > stability[node]:
            stability[node] = subtree
            is_cluster[node] = False
        else:
            stack = list(children.get(node, []))
            while stack:
                c = stack.pop()
                is_cluster[c] = False
                stack.extend(children.get(c, []))
    return {c for c, flag in is_cluster.items() if flag and c != n}


def hdbscan(
    dist: DistanceMatrix, min_cluster_size: int = 5, min_samples: int = 3
) -> ClusterResult:
    if min_cluster_size < 2:
        raise ValueError("min_cluster_size must be >= 2")
    if min_samples < 1:
        raise ValueError("min_samples must be >= 1")
    n = dist.n
    if n < min_cluster_size:
        raise TooFewPoints(f"{n} points < min_cluster_size={min_cluster_size}")
    if min_samples >= n:
        raise TooFewPoints(f"min_samples={min_samples} needs at least {min_samples + 1} points")

    core = core_distances(dist.values, min_samples)
    reach = mutual_reachability(dist.values, core)
    mst = prim_mst(reach)
    merges = _single_linkage(mst, n)
    rows = _condense(merges, n, min_cluster_size)
    selected = _select_clusters(rows, n)

    # climb each point's exit parent until a selected cluster (or give up -> noise)
    cluster_parent: dict[int, int] = {}
    exit_parent: dict[int, int] = {}
    for parent, child, lam, size in rows:
        if child >= n:
            cluster_parent[child] = parent
        else:
            exit_parent[child] = parent
    raw = np.full(n, -1, dtype=np.int64)
    for p in range(n):
        node = exit_parent.get(p, n)
        while node is not None:
            if node in selected:
                raw[p] = node
                break
            node = cluster_parent.get(node)

    return ClusterResult(
        algorithm="hdbscan",
        labels=canonical_labels(raw),
        params={
            "min_cluster_size": min_cluster_size,
            "min_samples": min_samples,
            "metric": dist.metric,
        },
        doc_ids=list(dist.doc_ids),
        condensed_tree=[(int(a), int(b), float(l), int(s)) for a, b, l, s in rows],
    )
