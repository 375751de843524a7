"""Heuristic syllable counting for readability measures."""

from __future__ import annotations

_VOWELS = frozenset("aeiouy")


def count_syllables(word: str) -> int:
    """Count vowel groups with a silent-final-e correction; never below 1.

    Non-alphabetic input counts as one syllable.
    """
    w = word.lower()
    if not w.isalpha():
        return 1
    groups = 0
    prev_vowel = False
    for ch in w:
        is_vowel = ch in _VOWELS
        if is_vowel and not prev_vowel:
            groups += 1
        prev_vowel = is_vowel
    # final silent e: "make" -> 1, but keep the consonant-le syllable ("table")
    if groups > 1 and w.endswith("e") and not w.endswith("le"):
        groups -= 1
    return max(groups, 1)
