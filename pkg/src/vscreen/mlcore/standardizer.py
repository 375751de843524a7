"""Column standardization fitted on training rows only."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass
class Standardizer:
    mean: np.ndarray
    std: np.ndarray  # population std; zeros replaced by 1

    def apply(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=np.float64)
        if X.shape[1] != self.mean.shape[0]:
            raise ValueError(
                f"expected {self.mean.shape[0]} columns, got {X.shape[1]}"
            )
        return (X - self.mean) / self.std


def fit_standardizer(X: np.ndarray) -> Standardizer:
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2 or X.shape[0] < 2:
        raise ValueError("standardizer needs at least 2 rows")
    if not np.isfinite(X).all():
        bad = np.nonzero(~np.isfinite(X).all(axis=0))[0]
        raise ValueError(f"non-finite values in columns {bad.tolist()}")
    mean = X.mean(axis=0)
    std = X.std(axis=0)  # population std
    std = np.where(std == 0.0, 1.0, std)
    return Standardizer(mean=mean, std=std)


def apply_standardizer(s: Standardizer, X: np.ndarray) -> np.ndarray:
    return s.apply(X)
