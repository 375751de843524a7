"""Eight-group sentence feature profiles with sliding-window extraction."""

from .extract import (
    DocCache,
    FeatureExtractor,
    SentenceProfile,
    SentenceWindow,
    UserFeatureSeries,
    aggregate_user,
    extract_sentence_features,
    zscore_contour,
)
from .lexicons import Lexicon, compute_lexicon_rate, default_lexicons, load_lexicon, save_lexicon
from .matrix import read_matrix, write_series_matrix, write_user_matrix
from .measures import (
    MISSING,
    compute_bttr,
    compute_fkgl,
    compute_overlap,
    compute_readability,
    compute_syntactic,
    is_missing,
)
from .ngrams import (
    NgramTable,
    compute_ngram_nlf,
    default_ngram_tables,
    load_ngram_table,
    save_ngram_table,
)
from .registry import GROUP_DISPLAY, GROUPS, FeatureRegistry, FeatureSpec, default_registry
from .wordranks import WordRanks, default_wordranks, load_wordranks

__all__ = [
    "GROUPS",
    "GROUP_DISPLAY",
    "MISSING",
    "DocCache",
    "FeatureExtractor",
    "FeatureRegistry",
    "FeatureSpec",
    "Lexicon",
    "NgramTable",
    "SentenceProfile",
    "SentenceWindow",
    "UserFeatureSeries",
    "WordRanks",
    "aggregate_user",
    "compute_bttr",
    "compute_fkgl",
    "compute_lexicon_rate",
    "compute_ngram_nlf",
    "compute_overlap",
    "compute_readability",
    "compute_syntactic",
    "default_lexicons",
    "default_ngram_tables",
    "default_registry",
    "default_wordranks",
    "extract_sentence_features",
    "is_missing",
    "load_lexicon",
    "load_ngram_table",
    "load_wordranks",
    "read_matrix",
    "save_lexicon",
    "save_ngram_table",
    "write_series_matrix",
    "write_user_matrix",
    "zscore_contour",
]
