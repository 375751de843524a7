"""Random forest with Gini splits and mean-decrease-in-impurity scores."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .trees import Tree, grow_tree, tree_impurity_decrease


@dataclass
class ForestParams:
    n_trees: int = 56
    max_depth: int = 13
    min_samples_split: int = 6
    max_features: str = "sqrt"


@dataclass
class ForestModel:
    trees: list[Tree]
    params: ForestParams
    n_features: int
    seed: int
    family: str = field(default="rf", init=False)

    def predict_proba(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=np.float64)
        if X.shape[1] != self.n_features:
            raise ValueError(f"expected {self.n_features} features, got {X.shape[1]}")
        acc = np.zeros(X.shape[0])
        for tree in self.trees:
            acc += tree.predict_value(X)[:, 1]
        return acc / len(self.trees)


def train_random_forest(
    X: np.ndarray,
    y: np.ndarray,
    params: ForestParams | None = None,
    seed: int = 0,
) -> ForestModel:
    """Bootstrap + per-node sqrt-feature Gini trees, deterministic given seed."""
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if params is None:
        params = ForestParams()
    n, d = X.shape
    if params.max_features == "sqrt":
        k = max(1, math.ceil(math.sqrt(d)))
    elif params.max_features == "all":
        k = d
    else:
        k = int(params.max_features)
    trees = []
    for child_seed in np.random.SeedSequence(seed).spawn(params.n_trees):
        rng = np.random.default_rng(child_seed)
        boot = rng.integers(0, n, size=n)
        trees.append(
            grow_tree(
                X[boot], y[boot],
                criterion="gini",
                max_depth=params.max_depth,
                min_samples_split=params.min_samples_split,
                max_features=k,
                rng=rng,
            )
        )
    return ForestModel(trees=trees, params=params, n_features=d, seed=seed)


def mdi_importance(model) -> tuple[np.ndarray, np.ndarray]:
    """(raw, normalized) per-feature mean decrease in impurity.

    Raw scores average the per-tree weighted impurity decreases over the
    ensemble; normalized scores rescale the raw ones to sum to 1 for
    report readability (an all-zero raw vector stays all zero).
    """
    trees = model.trees
    n_features = model.n_features
    raw = np.zeros(n_features)
    for tree in trees:
        raw += tree_impurity_decrease(tree, n_features)
    raw /= len(trees)
    total = raw.sum()
    norm = raw / total if total > 0 else raw.copy()
    return raw, norm
