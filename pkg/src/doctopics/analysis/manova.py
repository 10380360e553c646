"""MANOVA on topic distributions per cluster (Wilks' lambda, Rao's F).

The simplex makes theta rank-deficient, so the last topic coordinate is
dropped before computing the SSCP matrices. A numerically singular
within-groups matrix triggers the Pillai's-trace fallback; a fully
degenerate input (zero scatter everywhere) is reported as such instead of
fabricating a p-value.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.stats import f as f_dist

from ..errors import GroupTooSmall, TooFewGroups

_SINGULAR_COND = 1e12


@dataclass
class ManovaReport:
    wilks_lambda: float | None
    F_stat: float | None
    df1: float | None
    df2: float | None
    p_value: float | None
    fallback_used: str = "none"   # "none" | "pillai" | "degenerate"
    n_groups: int = 0
    n_obs: int = 0


def manova(thetas, labels) -> ManovaReport:
    """Test mean differences of reduced theta coordinates across clusters.

    Noise points (label -1) are excluded. Requires >= 2 groups of >= 2.
    """
    X = np.asarray(thetas, dtype=np.float64)
    labels = np.asarray(labels)
    keep = labels >= 0
    X, labels = X[keep], labels[keep]

    groups = np.unique(labels)
    if len(groups) < 2:
        raise TooFewGroups(f"need >= 2 non-noise groups, got {len(groups)}")
    for g in groups:
        if np.sum(labels == g) < 2:
            raise GroupTooSmall(f"group {g} has fewer than 2 members")

    Y = X[:, :-1]  # drop last simplex coordinate
    n, p = Y.shape
    g = len(groups)

    grand = Y.mean(axis=0)
    W = np.zeros((p, p))
    B = np.zeros((p, p))
    for lab in groups:
        Yg = Y[labels == lab]
        mg = Yg.mean(axis=0)
        cg = Yg - mg
        W += cg.T @ cg
        dm = (mg - grand)[:, None]
        B += len(Yg) * (dm @ dm.T)

    T = B + W
    if np.allclose(T, 0.0, atol=1e-30):
        return ManovaReport(None, None, None, None, None, "degenerate", g, n)

    cond_w = np.linalg.cond(W) if np.any(W) else np.inf
    if cond_w > _SINGULAR_COND:
        return _pillai(B, W, T, p, g, n)

    wilks = float(np.linalg.det(W) / np.linalg.det(T))
    nu_h = g - 1
    nu_e = n - g
    denom = p * p + nu_h * nu_h - 5
    t = np.sqrt((p * p * nu_h * nu_h - 4) / denom) if denom > 0 else 1.0
    w = nu_e + nu_h - (p + nu_h + 1) / 2.0
    df1 = p * nu_h
    df2 = w * t - (p * nu_h - 2) / 2.0
    lam_t = wilks ** (1.0 / t)
    if lam_t <= 0 or df2 <= 0:
        return ManovaReport(wilks, None, df1, df2, None, "degenerate", g, n)
    F = (1.0 - lam_t) / lam_t * df2 / df1
    p_value = float(f_dist.sf(F, df1, df2))
    return ManovaReport(wilks, float(F), float(df1), float(df2), p_value, "none", g, n)


def _pillai(B, W, T, p, g, n) -> ManovaReport:
    try:
        V = float(np.trace(B @ np.linalg.inv(T)))
    except np.linalg.LinAlgError:
        return ManovaReport(None, None, None, None, None, "degenerate", g, n)
    nu_h = g - 1
    nu_e = n - g
    s = min(p, nu_h)
    m = (abs(p - nu_h) - 1) / 2.0
    r = (nu_e - p - 1) / 2.0
    df1 = s * (2 * m + s + 1)
    df2 = s * (2 * r + s + 1)
    if df2 <= 0 or V >= s:
        return ManovaReport(None, None, None, None, None, "degenerate", g, n)
    F = (2 * r + s + 1) / (2 * m + s + 1) * V / (s - V)
    p_value = float(f_dist.sf(F, df1, df2))
    return ManovaReport(None, float(F), float(df1), float(df2), p_value, "pillai", g, n)
