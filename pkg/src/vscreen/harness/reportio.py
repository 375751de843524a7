"""Report emission: machine-readable results plus human-readable tables."""

from __future__ import annotations

import json
from pathlib import Path

from ..explain.report import ImportanceReport
from .manifest import RunManifest
from .metrics import MetricsRow


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def render_metrics_table(rows: list[MetricsRow]) -> str:
    with_change = any(r.change_f1 is not None for r in rows)
    header = ["Model", "Precision", "Recall", "F1-score"]
    if with_change:
        header.append("Change F1")
    lines = ["\t".join(header)]
    for r in rows:
        cells = [r.model, _fmt(r.precision), _fmt(r.recall), _fmt(r.f1)]
        if with_change:
            cells.append("" if r.change_f1 is None else f"{r.change_f1:+.2f}")
        lines.append("\t".join(cells))
    return "\n".join(lines) + "\n"


def emit_report(
    rows: list[MetricsRow],
    importance: ImportanceReport | None,
    manifest: RunManifest,
    out_dir: str | Path,
) -> dict[str, Path]:
    """Write results.jsonl and report.txt; byte-identical for equal inputs."""
    if not rows:
        raise ValueError("need at least one metrics row")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    digest = manifest.digest()

    results_path = out / "results.jsonl"
    with open(results_path, "w", encoding="utf-8") as fh:
        for r in rows:
            rec = r.to_dict()
            rec["manifest_digest"] = digest
            fh.write(json.dumps(rec, sort_keys=True) + "\n")

    sections = ["# Screening results", "", render_metrics_table(rows)]
    if importance is not None:
        sections += [
            f"# Feature-group importance (model: {importance.explained_model})",
            "",
            importance.group_table(),
            "# Top features by mean decrease in impurity",
            "",
            importance.mdi_table(),
        ]
    report_path = out / "report.txt"
    report_path.write_text("\n".join(sections), encoding="utf-8")

    manifest_path = out / "run_manifest.json"
    manifest.save(manifest_path)
    return {"results": results_path, "report": report_path, "manifest": manifest_path}
