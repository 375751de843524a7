"""Shared probability/label prediction across model families."""

from __future__ import annotations

import numpy as np


def predict_proba(model, X: np.ndarray) -> np.ndarray:
    """Positive-class probabilities in [0,1] for any trained family."""
    p = model.predict_proba(np.asarray(X, dtype=np.float64))
    return np.clip(p, 0.0, 1.0)


def predict(model, X: np.ndarray, threshold: float = 0.5) -> np.ndarray:
    """Labels at the threshold; a tie goes to the positive class."""
    return (predict_proba(model, X) >= threshold).astype(np.int64)
