"""Deterministic text analysis primitives: tokenize, segment, tag, lemmatize."""

from .clauses import count_finite_clauses
from .lemmatizer import lemma_for, lemmatize
from .syllables import count_syllables
from .tagger import (
    TaggerModel,
    default_tagger,
    evaluate_tagger,
    pos_tag,
    read_tagged_corpus,
    tag_sentence,
    train_tagger,
)
from .tokenizer import default_abbreviations, segment_sentences, tokenize
from .types import COARSE_TAGS, FUNCTION_TAGS, Sentence, Token, make_token


def analyze_text(text: str, model: TaggerModel | None = None) -> list[Sentence]:
    """Segment normalized text and return tagged sentences."""
    sentences = []
    for i, raw in enumerate(segment_sentences(text)):
        toks = tokenize(raw)
        if toks:
            sentences.append(tag_sentence(toks, index=i, model=model))
    # re-index in case empties were dropped
    for i, s in enumerate(sentences):
        s.index_in_document = i
    return sentences


__all__ = [
    "COARSE_TAGS",
    "FUNCTION_TAGS",
    "Sentence",
    "TaggerModel",
    "Token",
    "analyze_text",
    "count_finite_clauses",
    "count_syllables",
    "default_abbreviations",
    "default_tagger",
    "evaluate_tagger",
    "lemma_for",
    "lemmatize",
    "make_token",
    "pos_tag",
    "read_tagged_corpus",
    "segment_sentences",
    "tag_sentence",
    "tokenize",
    "train_tagger",
]
