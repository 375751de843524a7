"""Corpus construction: diagnosis labeling, control sampling, normalization, splits."""

from .build import CorpusError, build_dataset, group_posts, select_controls, split_dataset
from .io import (
    file_digest,
    read_raw_dump,
    read_split,
    read_users,
    user_from_dict,
    user_to_dict,
    write_split,
    write_users,
)
from .normalize import normalize_text, preprocess_post, split_hashtag
from .patterns import (
    default_exclusions,
    default_pattern,
    load_exclusions_file,
    load_pattern_file,
    match_diagnosis,
    strip_leakage,
)
from .types import CONTROL, POSITIVE, DatasetSplit, DiagnosisPattern, MatchSpan, RawPost, UserRecord

__all__ = [
    "CONTROL",
    "POSITIVE",
    "CorpusError",
    "DatasetSplit",
    "DiagnosisPattern",
    "MatchSpan",
    "RawPost",
    "UserRecord",
    "build_dataset",
    "default_exclusions",
    "default_pattern",
    "file_digest",
    "group_posts",
    "load_exclusions_file",
    "load_pattern_file",
    "match_diagnosis",
    "normalize_text",
    "preprocess_post",
    "read_raw_dump",
    "read_split",
    "read_users",
    "select_controls",
    "split_dataset",
    "split_hashtag",
    "strip_leakage",
    "user_from_dict",
    "user_to_dict",
    "write_split",
    "write_users",
]
