import math
from itertools import combinations

import numpy as np
import pytest

from doctopics.analysis import hdbscan
from doctopics.analysis.divergence import DistanceMatrix
from doctopics.analysis.hdbscan_ import core_distances, mutual_reachability, prim_mst
from doctopics.errors import TooFewPoints


def dm_from_points(points: np.ndarray) -> DistanceMatrix:
    d = np.sqrt(((points[:, None, :] - points[None, :, :]) ** 2).sum(-1))
    return DistanceMatrix(values=d, metric="euclidean", doc_ids=[str(i) for i in range(len(points))])


def blob_fixture():
    """Two tight blobs (inter-blob gap 20x the intra spread) + 3 far stragglers."""
    rng = np.random.default_rng(11)
    b1 = rng.normal(0, 0.05, (10, 2))
    b2 = rng.normal((2, 0), 0.05, (10, 2))
    stragglers = np.array([[300.0, 300.0], [-400.0, 200.0], [350.0, -350.0]])
    return np.vstack([b1, b2, stragglers])


def oracle_condensed_labels(d: np.ndarray, min_cluster_size: int, min_samples: int) -> np.ndarray:
    """Independent condensed-tree walk: recursive, built from a Kruskal MST.

    Structurally different from the implementation (recursive descent over
    single-linkage components instead of an iterative BFS with relabeling).
    """
    n = d.shape[0]
    core = np.array([np.sort(np.delete(d[i], i))[min_samples - 1] for i in range(n)])
    reach = np.maximum(d, np.maximum(core[:, None], core[None, :]))

    # Kruskal MST over all edges
    edges = sorted((reach[i, j], i, j) for i in range(n) for j in range(i + 1, n))
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    mst = []
    for w, i, j in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            mst.append((w, i, j))

    def components(members: set[int], threshold: float) -> list[set[int]]:
        """Connected components using only MST edges strictly below threshold."""
        adj = {m: [] for m in members}
        for w, i, j in mst:
            if w < threshold and i in members and j in members:
                adj[i].append(j)
                adj[j].append(i)
        seen, out = set(), []
        for m in sorted(members):
            if m in seen:
                continue
            comp, stack = set(), [m]
            while stack:
                x = stack.pop()
                if x in comp:
                    continue
                comp.add(x)
                stack.extend(adj[x])
            seen |= comp
            out.append(comp)
        return out

    labels = np.full(n, -1, dtype=np.int64)
    next_label = [0]

    def walk(members: set[int], birth_weight: float):
        """Recursively split at the largest internal edge weight."""
        internal = [w for w, i, j in mst if i in members and j in members]
        if not internal:
            return []
        w_max = max(internal)
        parts = components(members, w_max - 1e-15)
        big = [p for p in parts if len(p) >= min_cluster_size]
        if len(big) >= 2:
            return [(p, w_max) for p in big]
        if len(big) == 1:
            return walk(big[0], w_max)
        return []

    # the root cluster is never selectable; find the first real splits below it
    queue = [(set(range(n)), math.inf)]
    born: list[set[int]] = []
    while queue:
        members, birth = queue.pop()
        for child, w in walk(members, birth):
            born.append(child)
            queue.append((child, w))

    # excess-of-mass on this fixture reduces to the leaf clusters: the blobs
    # (deeply nested clusters with identical membership collapse to leaves)
    leaves = [c for c in born if not any(o < c for o in born)]
    for lab, comp in enumerate(sorted(leaves, key=min)):
        for m in comp:
            labels[m] = lab
    return labels


class TestHdbscan:
    def test_blobs_and_noise(self):
        pts = blob_fixture()
        res = hdbscan(dm_from_points(pts), min_cluster_size=5, min_samples=3)
        assert res.labels.tolist() == [0] * 10 + [1] * 10 + [-1, -1, -1]
        assert res.n_clusters == 2

    def test_blobs_match_independent_condensed_walk(self):
        pts = blob_fixture()
        d = np.sqrt(((pts[:, None, :] - pts[None, :, :]) ** 2).sum(-1))
        oracle = oracle_condensed_labels(d, min_cluster_size=5, min_samples=3)
        res = hdbscan(dm_from_points(pts), min_cluster_size=5, min_samples=3)
        assert res.labels.tolist() == oracle.tolist()

    def test_equidistant_degenerate_all_noise(self):
        # documented choice: the root is never selectable, so a corpus whose
        # only cluster would be the root comes back as all noise
        n = 6
        d = np.ones((n, n)) - np.eye(n)
        dm = DistanceMatrix(values=d, metric="euclidean", doc_ids=[str(i) for i in range(n)])
        res = hdbscan(dm, min_cluster_size=n, min_samples=2)
        assert res.labels.tolist() == [-1] * n

    @pytest.mark.parametrize("seed", [0, 1, 2, 3])
    def test_mst_weight_equals_exhaustive_minimum(self, seed):
        rng = np.random.default_rng(seed)
        pts = rng.random((7, 2))
        d = np.sqrt(((pts[:, None, :] - pts[None, :, :]) ** 2).sum(-1))
        core = core_distances(d, 2)
        reach = mutual_reachability(d, core)
        mst_weight = sum(e[2] for e in prim_mst(reach))

        best = math.inf
        all_edges = list(combinations(range(7), 2))
        for subset in combinations(all_edges, 6):
            parent = list(range(7))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            spanning = True
            for a, b in subset:
                ra, rb = find(a), find(b)
                if ra == rb:
                    spanning = False
                    break
                parent[ra] = rb
            if spanning:
                best = min(best, sum(reach[a, b] for a, b in subset))
        assert mst_weight == pytest.approx(best, abs=1e-12)

    def test_too_few_points(self):
        d = np.zeros((3, 3))
        dm = DistanceMatrix(values=d, metric="euclidean", doc_ids=["a", "b", "c"])
        with pytest.raises(TooFewPoints):
            hdbscan(dm, min_cluster_size=5, min_samples=2)

    def test_label_equivariance(self):
        pts = blob_fixture()
        rng = np.random.default_rng(1)
        perm = rng.permutation(len(pts))
        a = hdbscan(dm_from_points(pts), min_cluster_size=5, min_samples=3).labels
        b = hdbscan(dm_from_points(pts[perm]), min_cluster_size=5, min_samples=3).labels
        noise_a, noise_b = a[perm] == -1, b == -1
        assert np.array_equal(noise_a, noise_b)
        pairs = {(int(x), int(y)) for x, y in zip(a[perm], b) if x >= 0}
        assert len({x for x, _ in pairs}) == len(pairs) == len({y for _, y in pairs})
