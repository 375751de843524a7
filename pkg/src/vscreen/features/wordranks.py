"""Frequency-rank word list backing sophistication/prevalence features."""

from __future__ import annotations

from pathlib import Path

from ..assets_io import asset_path


class WordRanks:
    """1-based ranks; words outside the list rank just past the end."""

    def __init__(self, ordered_words: list[str]):
        if not ordered_words:
            raise ValueError("rank list is empty")
        self._ranks = {w: i + 1 for i, w in enumerate(ordered_words)}
        self.unseen_rank = len(ordered_words) + 1

    def __len__(self) -> int:
        return len(self._ranks)

    def rank(self, word: str) -> int:
        return self._ranks.get(word, self.unseen_rank)


def load_wordranks(path: str | Path) -> WordRanks:
    words = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.append(line)
    return WordRanks(words)


_DEFAULT: WordRanks | None = None


def default_wordranks() -> WordRanks:
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = load_wordranks(asset_path("wordranks.txt"))
    return _DEFAULT
