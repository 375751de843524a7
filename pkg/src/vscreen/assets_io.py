"""Locate bundled data assets (lexicons, tagger weights, pattern files)."""

from __future__ import annotations

from importlib import resources
from pathlib import Path


def asset_path(*parts: str) -> Path:
    """Absolute path of a bundled asset, e.g. asset_path("textproc", "abbreviations.txt")."""
    root = resources.files("vscreen") / "assets"
    p = Path(str(root))
    for part in parts:
        p = p / part
    if not p.exists():
        raise FileNotFoundError(f"bundled asset not found: {'/'.join(parts)}")
    return p


def read_asset_lines(*parts: str) -> list[str]:
    """Non-empty, non-comment lines of a text asset."""
    text = asset_path(*parts).read_text(encoding="utf-8")
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out
