"""Experiment orchestration: metrics, synthetic fixtures, runs, reports."""

from .config import DEFAULTS, load_config, model_params, parse_config
from .manifest import RunManifest, corpus_digest, ids_digest
from .metrics import MetricsRow, compute_metrics
from .pipeline import (
    FAMILIES,
    FeatureBundle,
    FingerprintMismatch,
    LeakageError,
    ModelSpec,
    RunResult,
    extract_bundle,
    run_indomain,
    run_ood,
    sample_ood_users,
)
from .reportio import emit_report, render_metrics_table
from .synthetic import (
    SHIFTED_PROFILE,
    CorpusProfile,
    control_pool_fixture,
    planted_group_matrix,
    raw_dump_fixture,
    synthetic_corpus,
)

__all__ = [
    "DEFAULTS",
    "FAMILIES",
    "SHIFTED_PROFILE",
    "CorpusProfile",
    "FeatureBundle",
    "FingerprintMismatch",
    "LeakageError",
    "MetricsRow",
    "ModelSpec",
    "RunManifest",
    "RunResult",
    "compute_metrics",
    "control_pool_fixture",
    "corpus_digest",
    "emit_report",
    "extract_bundle",
    "ids_digest",
    "load_config",
    "model_params",
    "parse_config",
    "planted_group_matrix",
    "raw_dump_fixture",
    "render_metrics_table",
    "run_indomain",
    "run_ood",
    "sample_ood_users",
    "synthetic_corpus",
]
