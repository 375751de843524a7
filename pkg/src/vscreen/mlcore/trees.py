"""CART trees on flat arrays: Gini classification and variance regression.

Shared by the random forest (classification, feature subsampling) and the
gradient booster (regression on pseudo-residuals). Trees store per-node
sample counts and impurities so mean-decrease-in-impurity can be read off
the structure afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

LEAF = -1


@dataclass
class Tree:
    criterion: str  # "gini" or "mse"
    feature: np.ndarray = field(default_factory=lambda: np.empty(0, dtype=np.int64))
    threshold: np.ndarray = field(default_factory=lambda: np.empty(0))
    left: np.ndarray = field(default_factory=lambda: np.empty(0, dtype=np.int64))
    right: np.ndarray = field(default_factory=lambda: np.empty(0, dtype=np.int64))
    n_samples: np.ndarray = field(default_factory=lambda: np.empty(0, dtype=np.int64))
    impurity: np.ndarray = field(default_factory=lambda: np.empty(0))
    value: np.ndarray = field(default_factory=lambda: np.empty(0))  # (nodes,) or (nodes, 2)

    def predict_value(self, X: np.ndarray) -> np.ndarray:
        """Leaf values for each row (class-prob rows or regression scalars)."""
        idx = np.zeros(X.shape[0], dtype=np.int64)
        while True:
            feat = self.feature[idx]
            active = feat != LEAF
            if not active.any():
                break
            rows = np.nonzero(active)[0]
            f = feat[rows]
            go_left = X[rows, f] <= self.threshold[idx[rows]]
            idx[rows] = np.where(go_left, self.left[idx[rows]], self.right[idx[rows]])
        return self.value[idx]

    def max_depth(self) -> int:
        depth = np.zeros(len(self.feature), dtype=np.int64)
        out = 0
        for node in range(len(self.feature)):
            if self.feature[node] != LEAF:
                depth[self.left[node]] = depth[node] + 1
                depth[self.right[node]] = depth[node] + 1
            else:
                out = max(out, int(depth[node]))
        return out


def _gini(pos: float, n: int) -> float:
    if n == 0:
        return 0.0
    p = pos / n
    return 2.0 * p * (1.0 - p)


def _node_impurity(y: np.ndarray, criterion: str) -> float:
    if criterion == "gini":
        return _gini(float(y.sum()), len(y))
    return float(np.var(y))


def _leaf_value(y: np.ndarray, criterion: str):
    if criterion == "gini":
        n = len(y)
        pos = float(y.sum())
        return np.array([1.0 - pos / n, pos / n])
    return float(y.mean())


def _best_split(
    X: np.ndarray, y: np.ndarray, candidates: np.ndarray, criterion: str
) -> tuple[int, float, float] | None:
    """(feature, threshold, weighted child impurity) or None when unsplittable."""
    n = len(y)
    best_feat = -1
    best_thr = 0.0
    best_imp = np.inf
    for f in candidates:
        vals = X[:, f]
        order = np.argsort(vals, kind="stable")
        sv = vals[order]
        sy = y[order]
        boundary = np.nonzero(sv[:-1] < sv[1:])[0]
        if boundary.size == 0:
            continue
        ln = boundary + 1
        rn = n - ln
        if criterion == "gini":
            cpos = np.cumsum(sy)
            lpos = cpos[boundary]
            rpos = cpos[-1] - lpos
            lp = lpos / ln
            rp = rpos / rn
            child = ln * 2.0 * lp * (1.0 - lp) + rn * 2.0 * rp * (1.0 - rp)
        else:
            cs = np.cumsum(sy)
            cs2 = np.cumsum(sy * sy)
            lsum, lsum2 = cs[boundary], cs2[boundary]
            rsum, rsum2 = cs[-1] - lsum, cs2[-1] - lsum2
            child = (lsum2 - lsum * lsum / ln) + (rsum2 - rsum * rsum / rn)
            child = np.maximum(child, 0.0)
        child = child / n
        k = int(np.argmin(child))
        if child[k] < best_imp - 1e-15:
            best_imp = float(child[k])
            best_feat = int(f)
            b = boundary[k]
            best_thr = float((sv[b] + sv[b + 1]) / 2.0)
    if best_feat < 0:
        return None
    return best_feat, best_thr, best_imp


def grow_tree(
    X: np.ndarray,
    y: np.ndarray,
    criterion: str = "gini",
    max_depth: int | None = None,
    min_samples_split: int = 2,
    max_features: int | None = None,
    rng: np.random.Generator | None = None,
) -> Tree:
    """Greedy CART fit; feature subsampling needs an rng."""
    n_features = X.shape[1]
    nodes: dict[str, list] = {
        "feature": [], "threshold": [], "left": [], "right": [],
        "n_samples": [], "impurity": [], "value": [],
    }

    def new_node(idx: np.ndarray, depth: int) -> int:
        node = len(nodes["feature"])
        yn = y[idx]
        imp = _node_impurity(yn, criterion)
        nodes["feature"].append(LEAF)
        nodes["threshold"].append(0.0)
        nodes["left"].append(LEAF)
        nodes["right"].append(LEAF)
        nodes["n_samples"].append(len(idx))
        nodes["impurity"].append(imp)
        nodes["value"].append(_leaf_value(yn, criterion))
        if (
            imp <= 1e-12
            or len(idx) < min_samples_split
            or (max_depth is not None and depth >= max_depth)
        ):
            return node
        if max_features is not None and max_features < n_features:
            candidates = np.sort(rng.choice(n_features, size=max_features, replace=False))
        else:
            candidates = np.arange(n_features)
        split = _best_split(X[idx], yn, candidates, criterion)
        if split is None:
            return node
        feat, thr, child_imp = split
        if child_imp >= imp - 1e-15:
            return node
        mask = X[idx, feat] <= thr
        left = new_node(idx[mask], depth + 1)
        right = new_node(idx[~mask], depth + 1)
        nodes["feature"][node] = feat
        nodes["threshold"][node] = thr
        nodes["left"][node] = left
        nodes["right"][node] = right
        return node

    new_node(np.arange(len(y)), 0)
    value = np.asarray(nodes["value"])
    return Tree(
        criterion=criterion,
        feature=np.asarray(nodes["feature"], dtype=np.int64),
        threshold=np.asarray(nodes["threshold"], dtype=np.float64),
        left=np.asarray(nodes["left"], dtype=np.int64),
        right=np.asarray(nodes["right"], dtype=np.int64),
        n_samples=np.asarray(nodes["n_samples"], dtype=np.int64),
        impurity=np.asarray(nodes["impurity"], dtype=np.float64),
        value=value,
    )


def tree_impurity_decrease(tree: Tree, n_features: int) -> np.ndarray:
    """Per-feature sum of weighted impurity decreases over the tree's splits."""
    out = np.zeros(n_features)
    root_n = tree.n_samples[0] if len(tree.n_samples) else 1
    for node in range(len(tree.feature)):
        f = tree.feature[node]
        if f == LEAF:
            continue
        l, r = tree.left[node], tree.right[node]
        drop = (
            tree.n_samples[node] * tree.impurity[node]
            - tree.n_samples[l] * tree.impurity[l]
            - tree.n_samples[r] * tree.impurity[r]
        ) / root_n
        out[f] += drop
    return out
