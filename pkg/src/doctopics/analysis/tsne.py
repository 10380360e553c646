"""Exact t-SNE over a precomputed distance matrix.

Fixed schedule: early exaggeration x12 for the first 250 iterations,
learning rate 200, momentum 0.5 switching to 0.8 at iteration 250, exact
O(n^2) gradients, per-coordinate adaptive gains with optimizer state
restarted at the phase switch (as in the reference implementations).
Momentum alone is not a descent method, so post-exaggeration steps are
safeguarded by velocity backtracking: a step that would raise the KL is
halved until it does not. The KL objective against the un-exaggerated P
is recorded every iteration. Deterministic per seed.
"""

from __future__ import annotations

import numpy as np

from ..errors import PerplexityTooLarge
from .divergence import DistanceMatrix
from .mds import Embedding2D

_P_FLOOR = 1e-12

EXAGGERATION = 12.0
EXAGGERATION_ITERS = 250
LEARNING_RATE = 200.0
MOMENTUM_EARLY = 0.5
MOMENTUM_LATE = 0.8


def conditional_p(d_row: np.ndarray, i: int, perplexity: float, tol: float = 1e-4, max_tries: int = 50):
    """Row of conditional affinities with sigma tuned by binary search.

    Searches precision beta = 1/(2 sigma^2) until exp(entropy) matches the
    target perplexity within tol (or max_tries halvings/doublings).
    """
    n = len(d_row)
    mask = np.arange(n) != i
    d2 = d_row[mask] ** 2
    beta, beta_min, beta_max = 1.0, -np.inf, np.inf
    p = np.zeros(n)
    for _ in range(max_tries):
        w = np.exp(-d2 * beta)
        total = w.sum()
        if total <= 0:
            w = np.full_like(d2, 1e-300)
            total = w.sum()
        pj = w / total
        pos = pj > 0
        entropy = float(-(pj[pos] * np.log(pj[pos])).sum())
        perp = float(np.exp(entropy))
        if abs(perp - perplexity) <= tol:
            break
        if perp > perplexity:
            beta_min = beta
            beta = beta * 2.0 if np.isinf(beta_max) else (beta + beta_max) / 2.0
        else:
            beta_max = beta
            beta = beta / 2.0 if np.isinf(beta_min) else (beta + beta_min) / 2.0
    p[mask] = pj
    return p


def joint_p(dist_values: np.ndarray, perplexity: float) -> np.ndarray:
    n = dist_values.shape[0]
    cond = np.zeros((n, n))
    for i in range(n):
        cond[i] = conditional_p(dist_values[i], i, perplexity)
    P = (cond + cond.T) / (2.0 * n)
    return np.maximum(P, _P_FLOOR)


def q_matrix(Y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Student-t affinities: returns (Q, W) with W the unnormalized kernel."""
    d2 = np.sum((Y[:, None, :] - Y[None, :, :]) ** 2, axis=2)
    W = 1.0 / (1.0 + d2)
    np.fill_diagonal(W, 0.0)
    Q = W / W.sum()
    return Q, W


def kl_objective(P: np.ndarray, Y: np.ndarray) -> float:
    Q, _ = q_matrix(Y)
    mask = ~np.eye(P.shape[0], dtype=bool)
    p = P[mask]
    q = np.maximum(Q[mask], _P_FLOOR)
    return float(np.sum(p * np.log(p / q)))


def kl_gradient(P: np.ndarray, Y: np.ndarray) -> np.ndarray:
    Q, W = q_matrix(Y)
    M = (P - Q) * W
    grad = 4.0 * ((np.diag(M.sum(axis=1)) - M) @ Y)
    return grad


def tsne(
    dist: DistanceMatrix,
    perplexity: float | None = None,
    seed: int = 0,
    iters: int = 1000,
) -> Embedding2D:
    n = dist.n
    if perplexity is None:
        perplexity = min(30.0, (n - 1) / 3.0)
    if perplexity >= n - 1:
        raise PerplexityTooLarge(f"perplexity {perplexity} must be < n-1 = {n - 1}")

    P = joint_p(dist.values, perplexity)
    rng = np.random.default_rng(seed)
    Y = rng.normal(0.0, 1e-4, size=(n, 2))
    velocity = np.zeros_like(Y)
    gains = np.ones_like(Y)
    trace: list[float] = []

    def centered(A: np.ndarray) -> np.ndarray:
        return A - A.mean(axis=0, keepdims=True)

    for it in range(iters):
        if it == EXAGGERATION_ITERS:
            velocity = np.zeros_like(Y)
            gains = np.ones_like(Y)
        P_eff = P * EXAGGERATION if it < EXAGGERATION_ITERS else P
        grad = kl_gradient(P_eff, Y)
        momentum = MOMENTUM_EARLY if it < EXAGGERATION_ITERS else MOMENTUM_LATE
        flip = np.sign(grad) != np.sign(velocity)
        gains = np.where(flip, gains + 0.2, gains * 0.8)
        np.clip(gains, 0.01, None, out=gains)
        velocity = momentum * velocity - LEARNING_RATE * gains * grad
        if it >= EXAGGERATION_ITERS:
            current = kl_objective(P, Y)
            proposal = centered(Y + velocity)
            tries = 0
            while kl_objective(P, proposal) > current and tries < 50:
                velocity = 0.5 * velocity
                proposal = centered(Y + velocity)
                tries += 1
            Y = proposal
        else:
            Y = centered(Y + velocity)
        trace.append(kl_objective(P, Y))

    return Embedding2D(
        coords=Y,
        method="tsne",
        doc_ids=list(dist.doc_ids),
        objective_trace=trace,
    )
