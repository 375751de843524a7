"""Category lexicons (emotion, topical, grammatical, connectives) and rates."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from ..assets_io import asset_path
from ..textproc.types import Sentence

MAGIC = "VSLEX1"


@dataclass(frozen=True)
class Lexicon:
    name: str
    category: str
    entries: frozenset[str]
    match_mode: str  # "lemma" or "surface"

    def __post_init__(self):
        if self.match_mode not in ("lemma", "surface"):
            raise ValueError(f"bad match mode {self.match_mode!r}")
        if not self.entries:
            raise ValueError(f"lexicon {self.category} is empty")
        for e in self.entries:
            if not e or e != e.lower():
                raise ValueError(f"lexicon entries must be lowercase, got {e!r}")


def load_lexicon(path: str | Path) -> Lexicon:
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines:
        raise ValueError(f"empty lexicon file {path}")
    header = lines[0].split()
    if len(header) != 3 or header[0] != MAGIC:
        raise ValueError(f"not a {MAGIC} lexicon: {path}")
    _, category, mode = header
    entries = frozenset(
        ln.strip() for ln in lines[1:] if ln.strip() and not ln.startswith("#")
    )
    return Lexicon(name=Path(path).stem, category=category, entries=entries, match_mode=mode)


def save_lexicon(lex: Lexicon, path: str | Path) -> None:
    body = "\n".join(sorted(lex.entries))
    Path(path).write_text(f"{MAGIC} {lex.category} {lex.match_mode}\n{body}\n", "utf-8")


def load_lexicon_dir(directory: str | Path) -> dict[str, Lexicon]:
    lexicons = {}
    for p in sorted(Path(directory).glob("*.lex")):
        lex = load_lexicon(p)
        if lex.category in lexicons:
            raise ValueError(f"duplicate lexicon category {lex.category}")
        lexicons[lex.category] = lex
    return lexicons


def default_lexicons() -> dict[str, Lexicon]:
    return load_lexicon_dir(asset_path("lexicons"))


def compute_lexicon_rate(sentence: Sentence, lexicon: Lexicon) -> float:
    """Matched tokens / non-punctuation tokens; 0 when there are no words."""
    words = sentence.words()
    if not words:
        return 0.0
    if lexicon.match_mode == "lemma":
        hits = sum(1 for t in words if t.lemma in lexicon.entries)
    else:
        hits = sum(1 for t in words if t.surface.lower() in lexicon.entries)
    return hits / len(words)
