"""Tokenization and sentence segmentation for normalized text."""

from __future__ import annotations

import re

from ..assets_io import read_asset_lines

# Words keep internal apostrophes ("can't"); every other non-space character
# becomes its own token.
_TOKEN_RE = re.compile(r"[a-z0-9]+(?:'[a-z0-9]+)*|[^\s]", re.IGNORECASE)

_TERMINATOR_RE = re.compile(r"[.!?]")

_DEFAULT_ABBREVIATIONS: frozenset[str] | None = None


def tokenize(sentence_text: str) -> list[str]:
    """Split a sentence into surface tokens.

    Whitespace-delimited words with punctuation separated out; contractions
    stay whole.
    """
    if not sentence_text:
        return []
    return _TOKEN_RE.findall(sentence_text)


def default_abbreviations() -> frozenset[str]:
    global _DEFAULT_ABBREVIATIONS
    if _DEFAULT_ABBREVIATIONS is None:
        _DEFAULT_ABBREVIATIONS = frozenset(
            line.lower() for line in read_asset_lines("textproc", "abbreviations.txt")
        )
    return _DEFAULT_ABBREVIATIONS


def segment_sentences(text: str, abbreviations: frozenset[str] | None = None) -> list[str]:
    """Split text into sentences at . ! ? followed by whitespace.

    A period does not end a sentence when the token it closes is a known
    abbreviation ("dr.", "e.g."). Terminators stay attached to their
    sentence; empty segments are dropped.
    """
    if abbreviations is None:
        abbreviations = default_abbreviations()
    sentences: list[str] = []
    start = 0
    n = len(text)
    for m in _TERMINATOR_RE.finditer(text):
        end = m.end()
        # run of terminators ("?!") ends at the last one
        if end < n and text[end] in ".!?":
            continue
        if end < n and not text[end].isspace():
            continue  # mid-token, e.g. "3.5"
        if m.group() == ".":
            # word immediately before the period, with the period attached
            i = m.start() - 1
            while i >= 0 and not text[i].isspace():
                i -= 1
            word = text[i + 1 : end].lower()
            if word in abbreviations:
                continue
        seg = text[start:end].strip()
        if seg:
            sentences.append(seg)
        start = end
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences
