"""Flat key=value config files; every hyperparameter defaults to the
reference value and can be overridden."""

from __future__ import annotations

from pathlib import Path

DEFAULTS: dict[str, dict] = {
    "lr": {"C": 0.02, "l1_ratio": 0.05},
    "rf": {"n_trees": 56, "max_depth": 13, "min_samples_split": 6},
    "svm": {"C": 1.8},
    "gb": {"n_estimators": 45, "learning_rate": 0.4, "max_depth": 3},
    "bilstm": {
        "layers": 3,
        "hidden": 256,
        "head_width": 512,
        "head_layers": 3,
        "dropout": 0.2,
        "max_sentences": 200,
        "epochs": 60,
        "max_lr": 0.01,
        "warmup_fraction": 0.3,
        "initial_div": 25.0,
        "final_div": 1e4,
        "weight_decay": 0.01,
        "patience": 5,
    },
}

_INT_KEYS = {
    "n_trees", "max_depth", "min_samples_split", "n_estimators", "layers",
    "hidden", "head_width", "head_layers", "max_sentences", "epochs", "patience",
}


def parse_config(text: str) -> dict[str, str]:
    out: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected key = value, got {line!r}")
        key, _, value = line.partition("=")
        out[key.strip()] = value.strip()
    return out


def load_config(path: str | Path) -> dict[str, str]:
    return parse_config(Path(path).read_text(encoding="utf-8"))


def model_params(family: str, raw: dict[str, str] | None = None) -> dict:
    """Family hyperparameters: reference defaults overlaid with config values."""
    if family not in DEFAULTS:
        raise ValueError(f"unknown model family {family!r}")
    params = dict(DEFAULTS[family])
    if raw:
        for key, value in raw.items():
            if key not in params:
                continue
            params[key] = int(value) if key in _INT_KEYS else float(value)
    return params
