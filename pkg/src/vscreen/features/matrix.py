"""Feature matrix files: CSV of registry-ordered columns plus a sidecar manifest."""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .extract import UserFeatureSeries


def _fmt(v: float) -> str:
    if math.isnan(v):
        return ""
    return repr(float(v))


def write_user_matrix(
    path: str | Path,
    codes: list[str],
    matrix: np.ndarray,
    user_ids: list[str],
    labels: list[int],
    fingerprint: str,
) -> None:
    """Aggregate mode: one row per user, order given by user_ids."""
    if matrix.shape != (len(user_ids), len(codes)):
        raise ValueError("matrix shape does not match users/codes")
    path = Path(path)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(",".join(codes) + "\n")
        for row in matrix:
            fh.write(",".join(_fmt(v) for v in row) + "\n")
    manifest = {
        "mode": "user",
        "registry_fingerprint": fingerprint,
        "users": [{"user_id": u, "label": int(l)} for u, l in zip(user_ids, labels)],
    }
    _write_manifest(path, manifest)


def write_series_matrix(
    path: str | Path,
    codes: list[str],
    series_list: list[UserFeatureSeries],
    labels: list[int],
    fingerprint: str,
) -> None:
    """Series mode: one row per sentence, users stacked in order."""
    path = Path(path)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(",".join(codes) + "\n")
        for series in series_list:
            for row in series.matrix:
                fh.write(",".join(_fmt(v) for v in row) + "\n")
    manifest = {
        "mode": "sentence",
        "registry_fingerprint": fingerprint,
        "users": [
            {
                "user_id": s.user_id,
                "label": int(l),
                "rows": int(s.matrix.shape[0]),
                "post_boundaries": [int(b) for b in s.post_boundaries],
            }
            for s, l in zip(series_list, labels)
        ],
    }
    _write_manifest(path, manifest)


def _write_manifest(matrix_path: Path, manifest: dict) -> None:
    sidecar = matrix_path.with_suffix(matrix_path.suffix + ".manifest.json")
    sidecar.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n", "utf-8")


def read_matrix(path: str | Path) -> tuple[list[str], np.ndarray, dict]:
    path = Path(path)
    with open(path, encoding="utf-8") as fh:
        codes = fh.readline().rstrip("\n").split(",")
        rows = []
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            rows.append([float(v) if v else math.nan for v in line.split(",")])
    matrix = np.asarray(rows, dtype=np.float64).reshape(len(rows), len(codes))
    sidecar = path.with_suffix(path.suffix + ".manifest.json")
    manifest = json.loads(sidecar.read_text(encoding="utf-8"))
    return codes, matrix, manifest
