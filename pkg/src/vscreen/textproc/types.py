"""Token and sentence containers shared across the text analysis stack."""

from __future__ import annotations

from dataclasses import dataclass, field

COARSE_TAGS = frozenset(
    {
        "noun", "verb", "aux", "adj", "adv", "pron", "det", "adp", "conj",
        "sconj", "num", "part", "intj", "punct", "sym", "x", "propn",
    }
)

# Closed classes whose members count as function words.
FUNCTION_TAGS = frozenset({"aux", "det", "adp", "pron", "conj", "sconj", "part"})


@dataclass(frozen=True)
class Token:
    surface: str
    lemma: str
    pos: str
    is_function_word: bool = field(default=False)

    def __post_init__(self):
        if not self.surface:
            raise ValueError("token surface must be non-empty")
        if self.pos not in COARSE_TAGS:
            raise ValueError(f"unknown coarse tag {self.pos!r}")


def make_token(surface: str, lemma: str, pos: str) -> Token:
    return Token(surface=surface, lemma=lemma, pos=pos,
                 is_function_word=pos in FUNCTION_TAGS)


@dataclass
class Sentence:
    tokens: list[Token]
    index_in_document: int = 0

    def __post_init__(self):
        if not self.tokens:
            raise ValueError("a sentence needs at least one token")

    def words(self) -> list[Token]:
        """Tokens that count as words (everything except punctuation/symbols)."""
        return [t for t in self.tokens if t.pos not in ("punct", "sym")]
