"""Model explanation: group-ablation surrogates and impurity importances."""

from .report import DOWN, UP, GroupRow, ImportanceReport, MdiRow, build_report, group_directions
from .splime import (
    ExplainResult,
    GroupLayout,
    KernelConfig,
    coverage,
    explain_model,
    fit_local_surrogate,
    global_importance,
    make_group_layout,
    perturb_instance,
    perturb_series,
    proximity_kernel,
    submodular_pick,
)

__all__ = [
    "DOWN",
    "UP",
    "ExplainResult",
    "GroupLayout",
    "GroupRow",
    "ImportanceReport",
    "KernelConfig",
    "MdiRow",
    "build_report",
    "coverage",
    "explain_model",
    "fit_local_surrogate",
    "global_importance",
    "group_directions",
    "make_group_layout",
    "perturb_instance",
    "perturb_series",
    "proximity_kernel",
    "submodular_pick",
]
