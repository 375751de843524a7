"""Post normalization: lowercase, strip markup, decompose hashtags, segment.

The kept punctuation set is exactly {. ! ? , '} — enough to preserve
sentence boundaries and contractions. Everything else non-alphanumeric
becomes a word separator.
"""

from __future__ import annotations

import re

from ..textproc.tokenizer import segment_sentences

_URL_RE = re.compile(r"(?:https?://|www\.)\S+", re.IGNORECASE)
_HTML_RE = re.compile(r"<[^>\s][^>]*>")
_MENTION_RE = re.compile(r"(?:(?<=\s)|^)(?:@\w+|/?u/\w+|/?r/\w+)", re.IGNORECASE)
_HASHTAG_RE = re.compile(r"#(\w+)")
_CAMEL_RE = re.compile(r"[A-Z]+(?=[A-Z][a-z])|[A-Z]?[a-z]+|[A-Z]+|[0-9]+")
_KEEP_RE = re.compile(r"[^a-z0-9.!?,' ]")
_APOSTROPHE_FIX = re.compile(r"(?<![a-z0-9])'|'(?![a-z0-9])")
_PUNCT_RUN = re.compile(r"([.!?,])[.!?,]+")
_SPACE_BEFORE_PUNCT = re.compile(r"\s+([.!?,])")
_WS_RE = re.compile(r"\s+")


def split_hashtag(tag: str) -> str:
    """Words inside a hashtag body, split on camel-case/digit boundaries."""
    parts = _CAMEL_RE.findall(tag.replace("_", " "))
    return " ".join(parts)


def normalize_text(text: str) -> str:
    """Single normalized string (the sentence-segmentation input)."""
    if not text:
        return ""
    t = _URL_RE.sub(" ", text)
    t = _HTML_RE.sub(" ", t)
    t = _MENTION_RE.sub(" ", t)
    t = _HASHTAG_RE.sub(lambda m: " " + split_hashtag(m.group(1)) + " ", t)
    t = t.lower()
    t = _KEEP_RE.sub(" ", t)
    t = _APOSTROPHE_FIX.sub(" ", t)  # keep only word-internal apostrophes
    t = _PUNCT_RUN.sub(r"\1", t)  # "now!!" -> "now!"
    t = _SPACE_BEFORE_PUNCT.sub(r"\1", t)
    t = _WS_RE.sub(" ", t).strip()
    # drop punctuation left dangling at the start
    t = t.lstrip(".!?, ")
    return t


def preprocess_post(text: str) -> list[str]:
    """Normalized sentences of one post; may be empty."""
    normalized = normalize_text(text)
    if not normalized:
        return []
    out = []
    for sent in segment_sentences(normalized):
        sent = sent.strip()
        if sent and sent.strip(".!?,' "):
            out.append(sent)
    return out
