"""Finite-clause counting via a finite-verb heuristic.

Full parsing is deliberately avoided: a clause is counted for every verb or
auxiliary token that looks finite. Participle-like verbs (-ing forms, or a
verb right after an auxiliary) and to-infinitives are skipped, so "she has
left" and "i want to go" each count one clause.
"""

from __future__ import annotations

from .types import Sentence, Token


def _is_finite(tok: Token, prev: Token | None) -> bool:
    if tok.pos not in ("verb", "aux"):
        return False
    if prev is not None and prev.surface == "to":
        return False
    if tok.pos == "verb":
        if tok.surface.endswith("ing"):
            return False
        if prev is not None and prev.pos == "aux":
            return False
    return True


def count_finite_clauses(sentence: Sentence) -> int:
    count = 0
    prev: Token | None = None
    for tok in sentence.tokens:
        if _is_finite(tok, prev):
            count += 1
        prev = tok
    return count
