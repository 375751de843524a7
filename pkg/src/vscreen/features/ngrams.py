"""Register-specific n-gram frequency tables and normalized log frequency."""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

from ..assets_io import asset_path
from ..textproc.types import Sentence

MAGIC = "VSNGR1"

REGISTERS = ("fiction", "weblog", "web", "news", "spoken")


@dataclass
class NgramTable:
    register: str
    order: int
    counts: dict[tuple[str, ...], int]
    max_count: int

    def __post_init__(self):
        if self.register not in REGISTERS:
            raise ValueError(f"unknown register {self.register!r}")
        if self.order not in (2, 3):
            raise ValueError("order must be 2 or 3")
        if self.counts:
            if min(self.counts.values()) < 1:
                raise ValueError("n-gram counts must be >= 1")
            if self.max_count != max(self.counts.values()):
                raise ValueError("max_count must equal the table maximum")


def load_ngram_table(path: str | Path) -> NgramTable:
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    header = lines[0].split()
    if len(header) != 3 or header[0] != MAGIC:
        raise ValueError(f"not a {MAGIC} n-gram table: {path}")
    register, order = header[1], int(header[2])
    counts: dict[tuple[str, ...], int] = {}
    for line in lines[1:]:
        if not line.strip():
            continue
        gram, count = line.rsplit("\t", 1)
        counts[tuple(gram.split(" "))] = int(count)
    return NgramTable(register=register, order=order, counts=counts,
                      max_count=max(counts.values()) if counts else 1)


def save_ngram_table(table: NgramTable, path: str | Path) -> None:
    rows = [f"{MAGIC} {table.register} {table.order}"]
    for gram in sorted(table.counts):
        rows.append(f"{' '.join(gram)}\t{table.counts[gram]}")
    Path(path).write_text("\n".join(rows) + "\n", encoding="utf-8")


def load_ngram_dir(directory: str | Path) -> dict[tuple[str, int], NgramTable]:
    tables = {}
    for p in sorted(Path(directory).glob("*.vsngr")):
        t = load_ngram_table(p)
        tables[(t.register, t.order)] = t
    return tables


def default_ngram_tables() -> dict[tuple[str, int], NgramTable]:
    return load_ngram_dir(asset_path("ngrams"))


def sentence_ngrams(words: list[str], order: int) -> list[tuple[str, ...]]:
    if len(words) < order:
        return []
    return [tuple(words[i : i + order]) for i in range(len(words) - order + 1)]


def nlf_of_grams(grams: list[tuple[str, ...]], table: NgramTable) -> float:
    """Mean of log(1+count)/log(1+max_count); unseen n-grams contribute 0."""
    if not grams:
        return 0.0
    denom = math.log1p(table.max_count)
    if denom == 0.0:
        return 0.0
    total = 0.0
    counts = table.counts
    for g in grams:
        c = counts.get(g)
        if c:
            total += math.log1p(c)
    return total / (denom * len(grams))


def compute_ngram_nlf(sentence: Sentence, table: NgramTable) -> float:
    words = [t.surface.lower() for t in sentence.words()]
    return nlf_of_grams(sentence_ngrams(words, table.order), table)
