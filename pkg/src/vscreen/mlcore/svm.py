"""Soft-margin RBF SVM trained with sequential minimal optimization."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .logistic import sigmoid


def rbf_kernel(A: np.ndarray, B: np.ndarray, gamma: float) -> np.ndarray:
    aa = (A * A).sum(axis=1)[:, None]
    bb = (B * B).sum(axis=1)[None, :]
    d2 = np.maximum(aa + bb - 2.0 * (A @ B.T), 0.0)
    K = np.exp(-gamma * d2)
    if not np.isfinite(K).all():
        raise ValueError("non-finite kernel values")
    return K


def gamma_scale(X: np.ndarray) -> float:
    """The 'scale' convention: 1 / (n_features * Var(X)) over all elements."""
    var = float(X.var())
    if var <= 0.0:
        var = 1.0
    return 1.0 / (X.shape[1] * var)


@dataclass
class SvmModel:
    sv_X: np.ndarray
    sv_y: np.ndarray  # in {-1, +1}
    alpha: np.ndarray  # dual coefficients, 0 <= alpha <= C
    b: float
    gamma: float
    C: float = 1.8
    objective_trace: list[float] = field(default_factory=list)
    train_alpha: np.ndarray | None = None  # full training alphas, diagnostics only
    family: str = field(default="svm", init=False)

    @property
    def dual_coef(self) -> np.ndarray:
        return self.alpha * self.sv_y

    def decision(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=np.float64)
        if X.shape[1] != self.sv_X.shape[1]:
            raise ValueError(f"expected {self.sv_X.shape[1]} features, got {X.shape[1]}")
        K = rbf_kernel(X, self.sv_X, self.gamma)
        return K @ self.dual_coef + self.b

    def predict_proba(self, X: np.ndarray) -> np.ndarray:
        # logistic link on the margin; simple, monotone, documented
        return sigmoid(self.decision(X))


def _dual_objective(alpha: np.ndarray, y: np.ndarray, K: np.ndarray) -> float:
    ay = alpha * y
    return float(alpha.sum() - 0.5 * ay @ K @ ay)


def train_svm_rbf(
    X: np.ndarray,
    y: np.ndarray,
    C: float = 1.8,
    seed: int = 0,
    tol: float = 1e-3,
    max_passes: int = 200,
) -> SvmModel:
    """Simplified SMO over the full kernel matrix.

    Sweeps stop after a full pass changes no pair; the dual objective is
    recorded per sweep.
    """
    X = np.asarray(X, dtype=np.float64)
    y01 = np.asarray(y, dtype=np.float64)
    t = np.where(y01 > 0.5, 1.0, -1.0)
    n = X.shape[0]
    gamma = gamma_scale(X)
    K = rbf_kernel(X, X, gamma)

    alpha = np.zeros(n)
    b = 0.0
    f = np.zeros(n)  # decision values without b
    rng = np.random.default_rng(seed)
    trace: list[float] = []

    def take_step(i: int, j: int) -> bool:
        nonlocal b
        if i == j:
            return False
        Ei = f[i] + b - t[i]
        Ej = f[j] + b - t[j]
        ai_old, aj_old = alpha[i], alpha[j]
        if t[i] != t[j]:
            L, H = max(0.0, aj_old - ai_old), min(C, C + aj_old - ai_old)
        else:
            L, H = max(0.0, ai_old + aj_old - C), min(C, ai_old + aj_old)
        if H - L < 1e-12:
            return False
        eta = 2.0 * K[i, j] - K[i, i] - K[j, j]
        if eta >= 0:  # duplicate points under an RBF kernel; no curvature
            return False
        aj = aj_old - t[j] * (Ei - Ej) / eta
        aj = min(H, max(L, aj))
        if abs(aj - aj_old) < 1e-12 * (aj + aj_old + 1e-12):
            return False
        ai = ai_old + t[i] * t[j] * (aj_old - aj)
        alpha[i], alpha[j] = ai, aj
        di, dj = (ai - ai_old) * t[i], (aj - aj_old) * t[j]
        f[:] = f + di * K[i] + dj * K[j]
        b1 = b - Ei - di * K[i, i] - dj * K[i, j]
        b2 = b - Ej - di * K[i, j] - dj * K[j, j]
        if 0 < ai < C:
            b = b1
        elif 0 < aj < C:
            b = b2
        else:
            b = (b1 + b2) / 2.0
        return True

    def examine(i: int) -> bool:
        Ei = f[i] + b - t[i]
        r = Ei * t[i]
        if not ((r < -tol and alpha[i] < C) or (r > tol and alpha[i] > 0)):
            return False
        # second choice: largest |Ei - Ej|, then non-bound sweep, then all
        E = f + b - t
        if take_step(i, int(np.argmax(np.abs(E - Ei)))):
            return True
        non_bound = np.nonzero((alpha > 0) & (alpha < C))[0]
        start = int(rng.integers(max(len(non_bound), 1)))
        for k in range(len(non_bound)):
            if take_step(i, int(non_bound[(start + k) % len(non_bound)])):
                return True
        start = int(rng.integers(n))
        for k in range(n):
            if take_step(i, (start + k) % n):
                return True
        return False

    examine_all = True
    for _ in range(max_passes):
        changed = 0
        if examine_all:
            for i in range(n):
                changed += examine(i)
        else:
            for i in np.nonzero((alpha > 0) & (alpha < C))[0]:
                changed += examine(int(i))
        trace.append(_dual_objective(alpha, t, K))
        if examine_all:
            if changed == 0:
                break
            examine_all = False
        elif changed == 0:
            examine_all = True

    keep = alpha > 1e-10
    return SvmModel(
        sv_X=X[keep].copy(),
        sv_y=t[keep].copy(),
        alpha=alpha[keep].copy(),
        b=b,
        gamma=gamma,
        C=C,
        objective_trace=trace,
        train_alpha=alpha,
    )


def kkt_violation(model: SvmModel, X: np.ndarray, y: np.ndarray) -> float:
    """Largest KKT residual over the training set (0 means satisfied)."""
    if model.train_alpha is None:
        raise ValueError("model was loaded without training alphas")
    t = np.where(np.asarray(y, dtype=np.float64) > 0.5, 1.0, -1.0)
    margins = t * model.decision(np.asarray(X, dtype=np.float64))
    worst = 0.0
    for a, m in zip(model.train_alpha, margins):
        if a <= 1e-10:
            worst = max(worst, 1.0 - m)  # need m >= 1
        elif a >= model.C - 1e-10:
            worst = max(worst, m - 1.0)  # need m <= 1
        else:
            worst = max(worst, abs(m - 1.0))
    return max(worst, 0.0)
