"""Gradient boosting for binary targets: logistic loss, Newton leaf values."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .logistic import log1pexp, sigmoid
from .trees import LEAF, Tree, grow_tree

log = logging.getLogger(__name__)

_LOGODDS_CLAMP = 10.0


@dataclass
class GbmParams:
    n_estimators: int = 45
    learning_rate: float = 0.4
    max_depth: int = 3
    min_samples_split: int = 2


@dataclass
class GbmModel:
    f0: float
    trees: list[Tree]
    params: GbmParams
    n_features: int
    train_loss: list[float] = field(default_factory=list)
    family: str = field(default="gb", init=False)

    def decision(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=np.float64)
        if X.shape[1] != self.n_features:
            raise ValueError(f"expected {self.n_features} features, got {X.shape[1]}")
        F = np.full(X.shape[0], self.f0)
        for tree in self.trees:
            F += self.params.learning_rate * tree.predict_value(X)
        return F

    def predict_proba(self, X: np.ndarray) -> np.ndarray:
        return sigmoid(self.decision(X))


def _logloss(F: np.ndarray, y: np.ndarray) -> float:
    t = 2.0 * y - 1.0
    return float(np.mean(log1pexp(-t * F)))


def _newton_leaves(tree: Tree, leaf_of: np.ndarray, r: np.ndarray, h: np.ndarray) -> None:
    """Replace leaf means with one Newton step: sum(residual)/sum(hessian)."""
    for node in np.nonzero(tree.feature == LEAF)[0]:
        mask = leaf_of == node
        if not mask.any():
            continue
        denom = float(h[mask].sum())
        tree.value[node] = float(r[mask].sum()) / max(denom, 1e-12)


def _leaf_index(tree: Tree, X: np.ndarray) -> np.ndarray:
    idx = np.zeros(X.shape[0], dtype=np.int64)
    while True:
        feat = tree.feature[idx]
        active = feat != LEAF
        if not active.any():
            return idx
        rows = np.nonzero(active)[0]
        go_left = X[rows, feat[rows]] <= tree.threshold[idx[rows]]
        idx[rows] = np.where(go_left, tree.left[idx[rows]], tree.right[idx[rows]])


def train_gradient_boosting(
    X: np.ndarray,
    y: np.ndarray,
    params: GbmParams | None = None,
    seed: int = 0,
) -> GbmModel:
    """Stagewise depth-capped regression trees on logistic pseudo-residuals."""
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if set(np.unique(y)) - {0.0, 1.0}:
        raise ValueError("labels must be binary 0/1")
    if params is None:
        params = GbmParams()
    base = float(y.mean())
    if base <= 0.0 or base >= 1.0:
        log.warning("single-class targets: clamping initial log-odds to +/-%g", _LOGODDS_CLAMP)
        f0 = _LOGODDS_CLAMP if base >= 1.0 else -_LOGODDS_CLAMP
    else:
        f0 = float(np.log(base / (1.0 - base)))
    F = np.full(len(y), f0)
    trees: list[Tree] = []
    losses = [_logloss(F, y)]
    for _ in range(params.n_estimators):
        p = sigmoid(F)
        r = y - p
        h = p * (1.0 - p)
        tree = grow_tree(
            X, r,
            criterion="mse",
            max_depth=params.max_depth,
            min_samples_split=params.min_samples_split,
        )
        leaf_of = _leaf_index(tree, X)
        _newton_leaves(tree, leaf_of, r, h)
        trees.append(tree)
        F += params.learning_rate * tree.value[leaf_of]
        losses.append(_logloss(F, y))
    return GbmModel(f0=f0, trees=trees, params=params, n_features=X.shape[1],
                    train_loss=losses)
