"""Individually callable feature measures.

These are the reference implementations the vectorized extractor must agree
with exactly; tests hold the two routes together.
"""

from __future__ import annotations

import math

from ..textproc.clauses import count_finite_clauses
from ..textproc.syllables import count_syllables
from ..textproc.types import Sentence

MISSING = float("nan")


def is_missing(value: float) -> bool:
    return math.isnan(value)


# ---------------------------------------------------------------- readability

def _counts(sentences: list[Sentence]) -> tuple[int, int, int, int, int]:
    words = syllables = chars = longwords = complexwords = 0
    for sent in sentences:
        for tok in sent.words():
            words += 1
            s = count_syllables(tok.surface)
            syllables += s
            chars += len(tok.surface)
            if len(tok.surface) > 6:
                longwords += 1
            if s >= 3:
                complexwords += 1
    return words, syllables, chars, longwords, complexwords


def compute_fkgl(sentences: list[Sentence]) -> float:
    """0.39*(words/sentences) + 11.8*(syllables/words) - 15.59, punctuation excluded."""
    if not sentences:
        raise ValueError("need at least one sentence")
    words, syllables, _, _, _ = _counts(sentences)
    if words == 0:
        raise ValueError("no words to measure")
    n = len(sentences)
    return 0.39 * (words / n) + 11.8 * (syllables / words) - 15.59


def compute_readability(sentences: list[Sentence], stat: str) -> float:
    if not sentences:
        raise ValueError("need at least one sentence")
    words, syllables, chars, longwords, complexwords = _counts(sentences)
    if words == 0:
        raise ValueError("no words to measure")
    n = len(sentences)
    wps = words / n
    spw = syllables / words
    if stat == "fkgl":
        return 0.39 * wps + 11.8 * spw - 15.59
    if stat == "fre":
        return 206.835 - 1.015 * wps - 84.6 * spw
    if stat == "ari":
        return 4.71 * (chars / words) + 0.5 * wps - 21.43
    if stat == "cli":
        return 5.88 * (chars / words) - 29.6 * (n / words) - 15.8
    if stat == "lix":
        return wps + 100.0 * (longwords / words)
    if stat == "rix":
        return longwords / n
    if stat == "fog":
        return 0.4 * (wps + 100.0 * (complexwords / words))
    raise ValueError(f"unknown readability stat {stat!r}")


# -------------------------------------------------------------------- lexical

def compute_bttr(tokens: list[str]) -> float:
    """log(types)/log(tokens), natural log; fewer than 2 tokens is undefined."""
    if len(tokens) < 2:
        return MISSING
    types = len(set(tokens))
    return math.log(types) / math.log(len(tokens))


# ------------------------------------------------------------------- cohesion

_SELECTORS = ("lemma", "noun", "pronoun", "function_word", "adverb")


def selector_set(sentence: Sentence, selector: str) -> set[str]:
    if selector == "lemma":
        return {t.lemma for t in sentence.words()}
    if selector == "noun":
        return {t.lemma for t in sentence.tokens if t.pos in ("noun", "propn")}
    if selector == "pronoun":
        return {t.surface.lower() for t in sentence.tokens if t.pos == "pron"}
    if selector == "function_word":
        return {t.surface.lower() for t in sentence.tokens if t.is_function_word}
    if selector == "adverb":
        return {t.lemma for t in sentence.tokens if t.pos == "adv"}
    raise ValueError(f"unknown overlap selector {selector!r}")


def compute_overlap(a: Sentence, b_window: list[Sentence], selector: str) -> float:
    """Jaccard similarity between a's type set and the window's union set."""
    if selector not in _SELECTORS:
        raise ValueError(f"unknown overlap selector {selector!r}")
    if not b_window:
        return 0.0
    left = selector_set(a, selector)
    right: set[str] = set()
    for s in b_window:
        right |= selector_set(s, selector)
    if not left and not right:
        return 0.0
    union = left | right
    if not union:
        return 0.0
    return len(left & right) / len(union)


# ------------------------------------------------------------------ syntactic

SYNTACTIC_STATS = (
    "slen", "cs", "mlc", "subr", "crdr", "sconjc", "conjc", "pphr",
    "vps", "nps", "adjps", "advps",
)


def compute_syntactic(sentence: Sentence) -> dict[str, float]:
    """All syntactic measures for one tagged sentence."""
    words = sentence.words()
    clauses = count_finite_clauses(sentence)
    sconj = sum(1 for t in sentence.tokens if t.pos == "sconj")
    conj = sum(1 for t in sentence.tokens if t.pos == "conj")
    verbs = sum(1 for t in sentence.tokens if t.pos in ("verb", "aux"))
    nouns = sum(1 for t in sentence.tokens if t.pos in ("noun", "propn"))
    adjs = sum(1 for t in sentence.tokens if t.pos == "adj")
    advs = sum(1 for t in sentence.tokens if t.pos == "adv")
    # participial phrase approximation: a verb token directly after a noun
    pphr = 0
    prev = None
    for tok in sentence.tokens:
        if prev is not None and prev.pos in ("noun", "propn") and tok.pos == "verb":
            pphr += 1
        prev = tok
    return {
        "slen": float(len(words)),
        "cs": float(clauses),
        "mlc": len(words) / clauses if clauses else 0.0,
        "subr": sconj / clauses if clauses else 0.0,
        "crdr": conj / clauses if clauses else 0.0,
        "sconjc": float(sconj),
        "conjc": float(conj),
        "pphr": float(pphr),
        "vps": float(verbs),
        "nps": float(nouns),
        "adjps": float(adjs),
        "advps": float(advs),
    }
