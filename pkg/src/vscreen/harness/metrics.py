"""Positive-class precision/recall/F1 rows."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass
class MetricsRow:
    model: str
    precision: float
    recall: float
    f1: float
    change_f1: float | None = None

    def to_dict(self) -> dict:
        out = {
            "model": self.model,
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
        }
        if self.change_f1 is not None:
            out["change_f1"] = self.change_f1
        return out


def compute_metrics(y_true, y_pred, model: str = "") -> MetricsRow:
    """Precision, recall and F1 for the positive class; 0/0 counts as 0."""
    y_true = np.asarray(y_true)
    y_pred = np.asarray(y_pred)
    if y_true.size == 0:
        raise ValueError("empty inputs")
    if y_true.shape != y_pred.shape:
        raise ValueError("length mismatch")
    for arr in (y_true, y_pred):
        extra = set(np.unique(arr)) - {0, 1}
        if extra:
            raise ValueError(f"labels must be binary, got {sorted(extra)}")
    tp = int(np.sum((y_true == 1) & (y_pred == 1)))
    fp = int(np.sum((y_true == 0) & (y_pred == 1)))
    fn = int(np.sum((y_true == 1) & (y_pred == 0)))
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return MetricsRow(model=model, precision=precision, recall=recall, f1=f1)
