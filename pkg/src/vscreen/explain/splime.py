"""Group-ablation surrogate explanations with submodular global aggregation.

Local explanations perturb feature groups on or off (off = training-mean
imputation), query the model, and fit a kernel-weighted ridge surrogate
over the on/off bits. Global group importances take the square root of the
summed absolute surrogate coefficients over a representative instance
subset chosen by greedy submodular pick.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class KernelConfig:
    d: int  # number of feature groups
    sigma: float = 0.0  # 0 means the 0.75*sqrt(d) default
    ridge: float = 1e-6

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("need at least one group")
        if self.sigma == 0.0:
            object.__setattr__(self, "sigma", 0.75 * math.sqrt(self.d))
        if self.sigma <= 0:
            raise ValueError("sigma must be positive")


@dataclass
class GroupLayout:
    """Group order and the feature columns each group owns."""

    names: list[str]
    columns: list[np.ndarray]

    @property
    def d(self) -> int:
        return len(self.names)


def make_group_layout(groups: list[str], columns: dict[str, list[int]]) -> GroupLayout:
    return GroupLayout(
        names=list(groups),
        columns=[np.asarray(columns[g], dtype=np.int64) for g in groups],
    )


def perturb_instance(
    x: np.ndarray, mask: np.ndarray, baseline: np.ndarray, layout: GroupLayout
) -> np.ndarray:
    """Masked-off groups take the baseline (training-mean) values."""
    if mask.shape != (layout.d,):
        raise ValueError(f"mask must have {layout.d} bits, got {mask.shape}")
    out = x.copy()
    for bit, cols in zip(mask, layout.columns):
        if not bit:
            out[cols] = baseline[cols]
    return out


def proximity_kernel(mask: np.ndarray, kcfg: KernelConfig) -> float:
    """exp(-D^2 / sigma^2) with D = Hamming distance to the all-ones mask."""
    D = float(np.sum(mask == 0))
    return math.exp(-(D * D) / (kcfg.sigma * kcfg.sigma))


def perturb_series(
    s: np.ndarray, mask: np.ndarray, baseline: np.ndarray, layout: GroupLayout
) -> np.ndarray:
    """Series variant: masked-off group columns take the baseline in every row."""
    out = s.copy()
    for bit, cols in zip(mask, layout.columns):
        if not bit:
            out[:, cols] = baseline[cols]
    return out


def _solve_surrogate(
    masks: np.ndarray, probs: np.ndarray, weights: np.ndarray, kcfg: KernelConfig
) -> np.ndarray:
    """Weighted ridge of probabilities on mask bits, unpenalized intercept."""
    d = masks.shape[1]
    Z = np.hstack([masks.astype(np.float64), np.ones((len(masks), 1))])
    WZ = Z * weights[:, None]
    A = Z.T @ WZ
    reg = np.zeros(d + 1)
    reg[:d] = kcfg.ridge
    A[np.diag_indices(d + 1)] += reg
    rhs = WZ.T @ probs
    try:
        coef = np.linalg.solve(A, rhs)
    except np.linalg.LinAlgError as exc:
        raise ValueError("surrogate system is singular even with ridge") from exc
    return coef[:d]


def _draw_masks(n_samples: int, d: int, rng: np.random.Generator) -> np.ndarray:
    if n_samples < d + 2:
        raise ValueError(f"need at least {d + 2} samples for {d} groups")
    masks = (rng.random((n_samples, d)) < 0.5).astype(np.int64)
    masks[0] = 1  # the unperturbed instance is always present
    return masks


def fit_local_surrogate(
    model_predict_fn,
    x: np.ndarray,
    baseline: np.ndarray,
    layout: GroupLayout,
    n_samples: int = 1000,
    kcfg: KernelConfig | None = None,
    seed: int = 0,
    series: np.ndarray | None = None,
) -> np.ndarray:
    """Weighted ridge fit of model probabilities on group on/off bits.

    Returns the d surrogate coefficients for this instance. When `series`
    is given the perturbations apply to its rows and `model_predict_fn`
    receives a list of matrices instead of one stacked matrix.
    """
    if kcfg is None:
        kcfg = KernelConfig(d=layout.d)
    rng = np.random.default_rng(seed)
    masks = _draw_masks(n_samples, layout.d, rng)
    if series is None:
        X_pert = np.empty((n_samples, x.shape[0]))
        for i in range(n_samples):
            X_pert[i] = perturb_instance(x, masks[i], baseline, layout)
        probs = np.asarray(model_predict_fn(X_pert), dtype=np.float64)
    else:
        perturbed = [perturb_series(series, m, baseline, layout) for m in masks]
        probs = np.asarray(model_predict_fn(perturbed), dtype=np.float64)
    weights = np.array([proximity_kernel(m, kcfg) for m in masks])
    return _solve_surrogate(masks, probs, weights, kcfg)


def global_importance(W: np.ndarray) -> np.ndarray:
    """Per-group I = sqrt(sum_i |W_ij|) over local surrogate rows."""
    W = np.atleast_2d(np.asarray(W, dtype=np.float64))
    if W.size == 0:
        raise ValueError("no surrogate rows")
    return np.sqrt(np.abs(W).sum(axis=0))


def coverage(W_abs: np.ndarray, selected: list[int]) -> float:
    """c(V) = sum_j sqrt(sum_{i in V} |W_ij|)."""
    if not selected:
        return 0.0
    return float(np.sqrt(W_abs[selected].sum(axis=0)).sum())


def submodular_pick(
    W: np.ndarray, instance_ids: list, budget: int
) -> list:
    """Greedy coverage maximization; ties break toward the lowest instance id.

    A budget at or above the number of instances selects everything.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    W_abs = np.abs(np.atleast_2d(np.asarray(W, dtype=np.float64)))
    n = W_abs.shape[0]
    if len(instance_ids) != n:
        raise ValueError("instance_ids must match surrogate rows")
    if budget >= n:
        return list(instance_ids)
    order = sorted(range(n), key=lambda i: instance_ids[i])
    selected: list[int] = []
    chosen: set[int] = set()
    current = np.zeros(W_abs.shape[1])
    for _ in range(budget):
        best_gain = -1.0
        best_row = -1
        base = np.sqrt(current).sum()
        for row in order:
            if row in chosen:
                continue
            gain = float(np.sqrt(current + W_abs[row]).sum()) - base
            if gain > best_gain + 1e-15:
                best_gain = gain
                best_row = row
        selected.append(best_row)
        chosen.add(best_row)
        current = current + W_abs[best_row]
    return [instance_ids[i] for i in selected]


@dataclass
class ExplainResult:
    group_names: list[str]
    i_values: np.ndarray
    picked_ids: list
    W: np.ndarray  # local surrogate rows for the picked instances


def explain_model(
    model_predict_fn,
    X: np.ndarray,
    layout: GroupLayout,
    n_samples: int = 1000,
    budget: int = 200,
    seed: int = 0,
    kcfg: KernelConfig | None = None,
    baseline: np.ndarray | None = None,
    series: list[np.ndarray] | None = None,
) -> ExplainResult:
    """Local surrogates for every instance, submodular pick, global I-values.

    `series` switches to sequence-level perturbation (one matrix per row of
    X) for recurrent models; X still provides the baseline statistics.
    """
    X = np.asarray(X, dtype=np.float64)
    if baseline is None:
        baseline = X.mean(axis=0)
    if kcfg is None:
        kcfg = KernelConfig(d=layout.d)
    rows = []
    seeds = np.random.SeedSequence(seed).spawn(X.shape[0])
    for i in range(X.shape[0]):
        rows.append(
            fit_local_surrogate(
                model_predict_fn, X[i], baseline, layout,
                n_samples=n_samples, kcfg=kcfg,
                seed=int(seeds[i].generate_state(1)[0]),
                series=None if series is None else series[i],
            )
        )
    W_all = np.vstack(rows)
    ids = list(range(X.shape[0]))
    picked = submodular_pick(W_all, ids, budget)
    W_picked = W_all[picked]
    return ExplainResult(
        group_names=list(layout.names),
        i_values=global_importance(W_picked),
        picked_ids=picked,
        W=W_picked,
    )
