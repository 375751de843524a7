"""Importance reporting: group I-values with direction arrows, MDI tables."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..features.registry import GROUP_DISPLAY, FeatureRegistry

UP = "↑"
DOWN = "↓"


@dataclass
class GroupRow:
    group: str
    display: str
    i_value: float
    direction: str  # UP when most of the group's features average higher in positives


@dataclass
class MdiRow:
    code: str
    name: str
    category: str
    importance: float


@dataclass
class ImportanceReport:
    groups: list[GroupRow]  # sorted by descending I-value
    mdi: list[MdiRow]  # sorted by descending importance, top-k
    explained_model: str

    def group_table(self) -> str:
        lines = ["Feature Group\tI-value\tDirection"]
        for row in self.groups:
            lines.append(f"{row.display}\t{row.i_value:.3f}\t{row.direction}")
        return "\n".join(lines) + "\n"

    def mdi_table(self) -> str:
        lines = ["Feature\tName\tCategory\tImportance"]
        for row in self.mdi:
            lines.append(f"{row.code}\t{row.name}\t{row.category}\t{row.importance!r}")
        return "\n".join(lines) + "\n"


def group_directions(
    X: np.ndarray, y: np.ndarray, registry: FeatureRegistry
) -> dict[str, str]:
    """Majority vote over a group's features: higher positive-class mean = UP.

    Computed from training rows only; the caller is responsible for passing
    the training split.
    """
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y)
    pos = X[y == 1].mean(axis=0)
    neg = X[y == 0].mean(axis=0)
    higher = pos > neg
    out = {}
    for group, cols in registry.group_columns().items():
        ups = int(higher[cols].sum())
        out[group] = UP if ups * 2 >= len(cols) else DOWN
    return out


def build_report(
    i_values: np.ndarray,
    group_names: list[str],
    directions: dict[str, str],
    mdi_scores: np.ndarray,
    registry: FeatureRegistry,
    explained_model: str,
    top_k: int = 25,
) -> ImportanceReport:
    order = np.argsort(-np.asarray(i_values, dtype=np.float64), kind="stable")
    groups = [
        GroupRow(
            group=group_names[i],
            display=GROUP_DISPLAY.get(group_names[i], group_names[i]),
            i_value=float(i_values[i]),
            direction=directions.get(group_names[i], UP),
        )
        for i in order
    ]
    mdi_order = np.argsort(-np.asarray(mdi_scores, dtype=np.float64), kind="stable")[:top_k]
    mdi = [
        MdiRow(
            code=registry.specs[j].code,
            name=registry.specs[j].name,
            category=GROUP_DISPLAY.get(registry.specs[j].group, registry.specs[j].group),
            importance=float(mdi_scores[j]),
        )
        for j in mdi_order
    ]
    return ImportanceReport(groups=groups, mdi=mdi, explained_model=explained_model)
