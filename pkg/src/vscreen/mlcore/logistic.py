"""Elastic-net logistic regression via a SAGA-style solver.

Objective (C-parameterized, so small C means strong regularization):

    (1/n) sum_i log(1 + exp(-t_i (x_i.w + b)))
    + (1/(C n)) * ( l1_ratio * ||w||_1 + (1 - l1_ratio)/2 * ||w||_2^2 )

with t = 2y - 1. The l2 part and the data term are handled by stochastic
average gradients; the l1 part by a proximal soft-threshold step. The bias
is unpenalized.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


def sigmoid(z: np.ndarray) -> np.ndarray:
    out = np.empty_like(z, dtype=np.float64)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


def log1pexp(z: np.ndarray) -> np.ndarray:
    """log(1+exp(z)) without overflow."""
    out = np.where(z > 0, z, 0.0)
    return out + np.log1p(np.exp(-np.abs(z)))


@dataclass
class LinearModel:
    w: np.ndarray
    b: float
    C: float = 0.02
    l1_ratio: float = 0.05
    epochs_run: int = 0
    converged: bool = False
    family: str = field(default="lr", init=False)

    def decision(self, X: np.ndarray) -> np.ndarray:
        return X @ self.w + self.b

    def predict_proba(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=np.float64)
        if X.shape[1] != self.w.shape[0]:
            raise ValueError(f"expected {self.w.shape[0]} features, got {X.shape[1]}")
        return sigmoid(self.decision(X))


def smooth_loss_grad(
    w: np.ndarray, b: float, X: np.ndarray, y: np.ndarray, C: float, l1_ratio: float
) -> tuple[float, np.ndarray, float]:
    """Value and gradient of the differentiable part (data term + l2)."""
    n = X.shape[0]
    z = X @ w + b
    t = 2.0 * y - 1.0
    loss = float(np.mean(log1pexp(-t * z)))
    lam2 = (1.0 - l1_ratio) / (C * n)
    loss += 0.5 * lam2 * float(w @ w)
    resid = sigmoid(z) - y  # d loss_i / dz
    gw = X.T @ resid / n + lam2 * w
    gb = float(resid.mean())
    return loss, gw, gb


def full_objective(
    w: np.ndarray, b: float, X: np.ndarray, y: np.ndarray, C: float, l1_ratio: float
) -> float:
    n = X.shape[0]
    loss, _, _ = smooth_loss_grad(w, b, X, y, C, l1_ratio)
    return loss + l1_ratio / (C * n) * float(np.abs(w).sum())


def _soft_threshold(w: np.ndarray, thresh: float) -> np.ndarray:
    return np.sign(w) * np.maximum(np.abs(w) - thresh, 0.0)


def train_logistic_elastic(
    X: np.ndarray,
    y: np.ndarray,
    C: float = 0.02,
    l1_ratio: float = 0.05,
    seed: int = 0,
    max_epochs: int = 500,
    tol: float = 1e-6,
) -> LinearModel:
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if set(np.unique(y)) - {0.0, 1.0}:
        raise ValueError("labels must be binary 0/1")
    n, d = X.shape
    lam1 = l1_ratio / (C * n)
    lam2 = (1.0 - l1_ratio) / (C * n)
    # SAGA step size from the max per-sample Lipschitz constant
    L = 0.25 * float((X * X).sum(axis=1).max()) + lam2
    gamma = 1.0 / (3.0 * L)

    w = np.zeros(d)
    b = 0.0
    z = X @ w + b
    phi = sigmoid(z) - y  # stored per-sample gradient scalars
    avg_gw = X.T @ phi / n
    avg_gb = float(phi.mean())

    rng = np.random.default_rng(seed)
    epochs = 0
    converged = False
    for epoch in range(max_epochs):
        epochs = epoch + 1
        w_start = w.copy()
        for j in rng.permutation(n):
            xj = X[j]
            phi_new = float(sigmoid(np.array([xj @ w + b]))[0] - y[j])
            delta = phi_new - phi[j]
            gw = delta * xj + avg_gw + lam2 * w
            gb = delta + avg_gb
            w = _soft_threshold(w - gamma * gw, gamma * lam1)
            b -= gamma * gb
            avg_gw += (delta / n) * xj
            avg_gb += delta / n
            phi[j] = phi_new
        if float(np.max(np.abs(w - w_start))) < tol:
            converged = True
            break
    return LinearModel(w=w, b=b, C=C, l1_ratio=l1_ratio,
                       epochs_run=epochs, converged=converged)
