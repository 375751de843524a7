"""Dataset assembly: control sampling, filtering, dedup, stratified split."""

from __future__ import annotations

import random
from collections import defaultdict
from typing import Iterable, Sequence

from .normalize import preprocess_post
from .patterns import match_diagnosis, strip_leakage
from .types import CONTROL, POSITIVE, DatasetSplit, DiagnosisPattern, RawPost, UserRecord


class CorpusError(ValueError):
    pass


def group_posts(posts: Iterable[RawPost]) -> dict[str, list[RawPost]]:
    by_user: dict[str, list[RawPost]] = defaultdict(list)
    for p in posts:
        by_user[p.user_id].append(p)
    return dict(by_user)


def select_controls(
    candidates: Iterable[UserRecord],
    exclusion_forums: frozenset[str] | set[str],
    exclusion_terms: frozenset[str] | set[str],
    n: int,
    seed: int,
) -> list[UserRecord]:
    """Sample n eligible control users uniformly without replacement.

    Eligible means: no post in any exclusion forum, and no exclusion term
    anywhere in the user's concatenated text (substring, case-insensitive).
    """
    if n < 1:
        raise CorpusError("control sample size must be at least 1")
    forums = {f.lower() for f in exclusion_forums}
    terms = [t.lower() for t in exclusion_terms]
    eligible: list[UserRecord] = []
    for user in candidates:
        if any(p.source_forum.lower() in forums for p in user.posts):
            continue
        text = user.text().lower()
        if any(t in text for t in terms):
            continue
        eligible.append(user)
    if len(eligible) < n:
        raise CorpusError(
            f"only {len(eligible)} eligible control candidates for n={n} "
            f"(short by {n - len(eligible)})"
        )
    eligible.sort(key=lambda u: u.user_id)
    rng = random.Random(seed)
    picked = rng.sample(eligible, n)
    picked.sort(key=lambda u: u.user_id)
    return picked


def _normalize_user_posts(
    posts: Sequence[RawPost],
    min_sentences: int,
    reject_pattern: DiagnosisPattern | None = None,
) -> list[RawPost]:
    """Normalize post texts, drop short posts, dedup exact normalized text.

    When reject_pattern is given, posts whose normalized text still matches
    the diagnosis pattern are dropped too (leakage can survive raw-text
    stripping when normalization shrinks character distances).
    """
    seen: set[str] = set()
    kept: list[RawPost] = []
    for post in sorted(posts, key=lambda p: (p.created_utc, p.post_id)):
        sentences = preprocess_post(post.text)
        if len(sentences) < min_sentences:
            continue
        normalized = " ".join(sentences)
        if normalized in seen:
            continue
        if reject_pattern is not None and match_diagnosis(normalized, reject_pattern):
            continue
        seen.add(normalized)
        kept.append(
            RawPost(
                post_id=post.post_id,
                user_id=post.user_id,
                created_utc=post.created_utc,
                source_forum=post.source_forum,
                text=normalized,
            )
        )
    return kept


def build_dataset(
    positives_raw: Iterable[RawPost],
    controls_raw: Iterable[RawPost],
    pattern: DiagnosisPattern,
    min_sentences: int = 3,
) -> list[UserRecord]:
    """Label, leak-strip, normalize, filter and dedup into UserRecords.

    Users in the positives dump are labeled positive iff some post matches
    the diagnosis pattern; matching posts are then removed. Users from
    either side that end up with zero posts are dropped.
    """
    users: list[UserRecord] = []
    positives_by_user = group_posts(positives_raw)
    for user_id in sorted(positives_by_user):
        posts = positives_by_user[user_id]
        if not any(match_diagnosis(p.text, pattern) for p in posts):
            continue
        retained = strip_leakage(posts, pattern)
        normalized = _normalize_user_posts(retained, min_sentences, reject_pattern=pattern)
        if normalized:
            users.append(UserRecord(user_id=user_id, label=POSITIVE, posts=normalized))
    controls_by_user = group_posts(controls_raw)
    for user_id in sorted(controls_by_user):
        normalized = _normalize_user_posts(controls_by_user[user_id], min_sentences)
        if normalized:
            users.append(UserRecord(user_id=user_id, label=CONTROL, posts=normalized))
    if not users:
        raise CorpusError("dataset is empty after filtering")
    return users


def prepare_control_candidates(
    candidate_posts: Iterable[RawPost], min_sentences: int = 3
) -> list[UserRecord]:
    """Normalize/filter a raw candidate pool into control-labeled records."""
    by_user = group_posts(candidate_posts)
    out = []
    for user_id in sorted(by_user):
        normalized = _normalize_user_posts(by_user[user_id], min_sentences)
        if normalized:
            out.append(UserRecord(user_id=user_id, label=CONTROL, posts=normalized))
    return out


_RATIOS = (("train", 0.8), ("validation", 0.1), ("test", 0.1))


def _allocate(n: int) -> dict[str, int]:
    """Largest-remainder allocation of n users across 8:1:1."""
    floors = {name: int(n * frac) for name, frac in _RATIOS}
    remainders = {name: n * frac - floors[name] for name, frac in _RATIOS}
    leftover = n - sum(floors.values())
    # ties broken by partition order: train, validation, test
    order = sorted(_RATIOS, key=lambda nf: -remainders[nf[0]])
    for name, _ in order[:leftover]:
        floors[name] += 1
    return floors


def split_dataset(users: list[UserRecord], seed: int) -> DatasetSplit:
    """8:1:1 user-level split, stratified by label, deterministic given seed."""
    by_label: dict[int, list[UserRecord]] = defaultdict(list)
    for u in users:
        by_label[u.label].append(u)
    for label, group in by_label.items():
        if len(group) < 10:
            raise CorpusError(f"need at least 10 users per label, label {label} has {len(group)}")
    parts: dict[str, list[UserRecord]] = {"train": [], "validation": [], "test": []}
    rng = random.Random(seed)
    for label in sorted(by_label):
        group = sorted(by_label[label], key=lambda u: u.user_id)
        rng.shuffle(group)
        counts = _allocate(len(group))
        i = 0
        for name, _ in _RATIOS:
            parts[name].extend(group[i : i + counts[name]])
            i += counts[name]
    for part in parts.values():
        part.sort(key=lambda u: u.user_id)
    return DatasetSplit(
        train=parts["train"], validation=parts["validation"], test=parts["test"], seed=seed
    )
