"""Self-reported diagnosis matching and label-leakage removal."""

from __future__ import annotations

import re
from functools import lru_cache
from pathlib import Path

from ..assets_io import asset_path
from .types import DiagnosisPattern, MatchSpan, RawPost


def _word_bounded(needle: str) -> re.Pattern:
    return re.compile(r"(?<![a-z0-9])" + re.escape(needle) + r"(?![a-z0-9])")


class _CompiledPattern:
    """Pattern with compiled word-boundary regexes."""

    def __init__(self, pattern: DiagnosisPattern):
        self.phrases = [(_word_bounded(p), p) for p in pattern.diagnosis_phrases]
        self.keywords = [(_word_bounded(k), k) for k in pattern.condition_keywords]


@lru_cache(maxsize=8)
def _compiled(pattern: DiagnosisPattern) -> _CompiledPattern:
    return _CompiledPattern(pattern)


def match_diagnosis(text: str, pattern: DiagnosisPattern) -> MatchSpan | None:
    """First self-reported diagnosis span, or None.

    A match pairs a diagnosis phrase with a condition keyword whose start
    lies within `window_chars` characters of the phrase end (after the
    phrase, or before it when the pattern is bidirectional). Matching is
    case-insensitive and aligned on word boundaries.
    """
    if not text:
        return None
    low = text.lower()
    cp = _compiled(pattern)
    keyword_hits = []
    for regex, keyword in cp.keywords:
        for m in regex.finditer(low):
            keyword_hits.append((m.start(), m.end(), keyword))
    if not keyword_hits:
        return None
    keyword_hits.sort()
    candidates = []
    for regex, phrase in cp.phrases:
        for m in regex.finditer(low):
            p_start, p_end = m.start(), m.end()
            for k_start, k_end, keyword in keyword_hits:
                gap = k_start - p_end
                if 0 <= gap <= pattern.window_chars or (
                    pattern.bidirectional and 0 <= -gap <= pattern.window_chars
                ):
                    span = MatchSpan(
                        start=min(p_start, k_start),
                        end=max(p_end, k_end),
                        phrase=phrase,
                        keyword=keyword,
                    )
                    candidates.append((span.start, span.end, span))
                    break
    if not candidates:
        return None
    return min(candidates, key=lambda c: (c[0], c[1]))[2]


def strip_leakage(posts: list[RawPost], pattern: DiagnosisPattern) -> list[RawPost]:
    """Drop every post where the diagnosis pattern fires; order preserved.

    Mental-health posts without an explicit diagnosis match are retained.
    Returns an empty list when everything leaks; the caller then drops the
    user.
    """
    return [p for p in posts if match_diagnosis(p.text, pattern) is None]


def load_pattern_file(path: str | Path) -> DiagnosisPattern:
    """Read a pattern asset: [phrases] / [keywords] / [window_chars] sections."""
    phrases, keywords, window = [], [], 40
    section = None
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1]
            continue
        if section == "phrases":
            phrases.append(line.lower())
        elif section == "keywords":
            keywords.append(line.lower())
        elif section == "window_chars":
            window = int(line)
        else:
            raise ValueError(f"entry outside a known section: {line!r}")
    return DiagnosisPattern(
        diagnosis_phrases=tuple(phrases),
        condition_keywords=tuple(keywords),
        window_chars=window,
    )


def load_exclusions_file(path: str | Path) -> tuple[frozenset[str], frozenset[str]]:
    """Read an exclusions asset: [forums] and [terms] sections."""
    forums, terms = set(), set()
    section = None
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1]
            continue
        if section == "forums":
            forums.add(line.lower())
        elif section == "terms":
            terms.add(line.lower())
        else:
            raise ValueError(f"entry outside a known section: {line!r}")
    return frozenset(forums), frozenset(terms)


def default_pattern() -> DiagnosisPattern:
    return load_pattern_file(asset_path("patterns", "diagnosis.txt"))


def default_exclusions() -> tuple[frozenset[str], frozenset[str]]:
    return load_exclusions_file(asset_path("patterns", "exclusions.txt"))
