"""Synthetic fixtures: raw dumps, separable/shifted text corpora, planted signals.

The real corpora cannot be redistributed, so every evaluation protocol in
this package runs against these generators. They are deterministic given a
seed and write the same record formats the production pipeline consumes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from ..corpus.types import CONTROL, POSITIVE, RawPost, UserRecord
from ..features.registry import FeatureRegistry

# word pools for synthetic sentence assembly
_FILLER_SUBJECT = ["i", "we", "they", "she", "he", "it"]
_NEUTRAL_NOUNS = [
    "garden", "morning", "book", "coffee", "street", "window", "music",
    "dinner", "weekend", "photo", "train", "letter", "river", "market",
]
_NEUTRAL_VERBS = ["walked", "watched", "opened", "visited", "cooked", "played",
                  "painted", "cleaned", "finished", "started"]
_NEUTRAL_ADJ = ["quiet", "bright", "small", "warm", "green", "simple", "calm",
                "pleasant", "nice", "friendly"]
_POSITIVE_EMO = [
    "angry", "furious", "anxious", "worried", "stressed", "scared",
    "terrified", "annoyed", "frustrated", "miserable", "overwhelmed",
    "restless", "gross", "hateful",
]
_POSITIVE_TOPIC = [
    "doctor", "medicine", "therapy", "symptom", "appointment", "clinic",
    "treatment", "medication", "hospital", "illness",
]
_CONTROL_TOPIC = [
    "recipe", "playlist", "painting", "holiday", "match", "festival",
    "novel", "garden", "museum", "picnic",
]


def _sentence(rng: random.Random, signal: float, positive: bool, length: int) -> str:
    """One normalized sentence; `signal` is the chance each slot carries class words."""
    words = []
    words.append(rng.choice(_FILLER_SUBJECT) if rng.random() < 0.8 else "the")
    for _ in range(length):
        r = rng.random()
        if r < signal:
            if positive:
                pool = _POSITIVE_EMO if rng.random() < 0.7 else _POSITIVE_TOPIC
            else:
                pool = _NEUTRAL_ADJ if rng.random() < 0.7 else _CONTROL_TOPIC
            words.append(rng.choice(pool))
        elif r < 0.55:
            words.append(rng.choice(_NEUTRAL_NOUNS))
        elif r < 0.8:
            words.append(rng.choice(_NEUTRAL_VERBS))
        else:
            words.append(rng.choice(["and", "the", "my", "was", "very", "really"]))
    return " ".join(words) + " ."


@dataclass
class CorpusProfile:
    """Knobs for the text generator; shift these to build an OOD partner."""

    signal_rate_positive: float = 0.4
    signal_rate_control: float = 0.02
    sentence_length: tuple[int, int] = (4, 8)
    sentences_per_post: tuple[int, int] = (3, 5)
    posts_per_user: tuple[int, int] = (1, 2)


SHIFTED_PROFILE = CorpusProfile(
    signal_rate_positive=0.12,
    signal_rate_control=0.10,
    sentence_length=(3, 6),
    sentences_per_post=(3, 4),
    posts_per_user=(1, 1),
)


def synthetic_corpus(
    n_per_class: int,
    seed: int,
    profile: CorpusProfile | None = None,
    id_prefix: str = "u",
) -> list[UserRecord]:
    """Separable two-class corpus of normalized UserRecords."""
    if profile is None:
        profile = CorpusProfile()
    rng = random.Random(seed)
    users: list[UserRecord] = []
    for label, signal in (
        (POSITIVE, profile.signal_rate_positive),
        (CONTROL, profile.signal_rate_control),
    ):
        for u in range(n_per_class):
            uid = f"{id_prefix}{label}_{u:05d}"
            posts = []
            for pi in range(rng.randint(*profile.posts_per_user)):
                n_sent = rng.randint(*profile.sentences_per_post)
                sents = [
                    _sentence(rng, signal, label == POSITIVE,
                              rng.randint(*profile.sentence_length))
                    for _ in range(n_sent)
                ]
                posts.append(
                    RawPost(
                        post_id=f"{uid}_p{pi}",
                        user_id=uid,
                        created_utc=1_600_000_000 + pi,
                        source_forum="synthetic",
                        text=" ".join(sents),
                    )
                )
            users.append(UserRecord(user_id=uid, label=label, posts=posts))
    users.sort(key=lambda u: u.user_id)
    return users


def planted_group_matrix(
    n: int,
    registry: FeatureRegistry,
    group: str,
    seed: int,
    delta_group: float = 0.8,
    delta_feature: float = 2.0,
):
    """Feature matrix where only one group separates the classes.

    Returns (X, y, planted_feature_index): the planted feature carries the
    largest shift so it should top any impurity ranking.
    """
    rng = np.random.default_rng(seed)
    F = len(registry)
    cols = registry.group_columns()[group]
    if not cols:
        raise ValueError(f"group {group!r} has no features")
    y = np.zeros(n, dtype=np.int64)
    y[: n // 2] = 1
    y = rng.permutation(y)
    X = rng.normal(size=(n, F))
    signs = 2.0 * y - 1.0
    for c in cols:
        X[:, c] += delta_group * signs
    planted = cols[0]
    X[:, planted] += (delta_feature - delta_group) * signs
    return X, y, planted


# ------------------------------------------------------------- raw dump fixture

_DIAGNOSIS_SENTENCES = [
    "after years of tests i was diagnosed with adhd last spring.",
    "my doctor said i have been diagnosed with attention deficit disorder.",
    "so it is official, diagnosed with adhd at thirty.",
    "the psychiatrist confirmed a diagnosis of adhd this week.",
    "i got diagnosed with hyperactivity when i was nine.",
]

_DISTRACTOR_SENTENCES = [
    "my cousin was diagnosed with a broken arm after the match.",
    "the mechanic diagnosed the engine with a worn belt.",
    "she was diagnosed with a mild flu and slept all weekend.",
]

_PLAIN_SENTENCES = [
    "the garden needs water again. the tomatoes look thirsty. summer is long.",
    "we walked to the market this morning. the bread was still warm. it was a good start.",
    "i finished the novel at midnight. the ending surprised me. i want the next book now.",
    "the train was late again today. everyone just waited quietly. the platform was cold.",
    "my neighbor plays the piano at night. the melody drifts over the fence. i do not mind it.",
    "we cooked pasta for dinner. the sauce needed more salt. the kitchen smelled great.",
    "the movie was longer than expected. the seats were comfortable though. we stayed to the end.",
    "rain kept us inside all day. we played cards by the window. the afternoon went fast.",
]


def raw_dump_fixture(seed: int = 11, n_posts: int = 200, n_diagnosed: int = 10):
    """A 200-post dump with exactly `n_diagnosed` self-reported-diagnosis users.

    Returns (posts, diagnosed_user_ids). Diagnosed users carry one diagnosis
    post plus clean posts; distractor users mention 'diagnosed with' without
    a condition keyword; the rest are plain. Every user has enough 3+
    sentence posts to survive filtering.
    """
    rng = random.Random(seed)
    posts: list[RawPost] = []
    diagnosed_ids = [f"pos{k:02d}" for k in range(n_diagnosed)]
    pid = 0

    def add(uid: str, text: str, forum: str = "offtopic"):
        nonlocal pid
        posts.append(RawPost(
            post_id=f"d{pid:04d}", user_id=uid, created_utc=1_500_000_000 + pid,
            source_forum=forum, text=text,
        ))
        pid += 1

    for uid in diagnosed_ids:
        filler = rng.choice(_PLAIN_SENTENCES)
        add(uid, rng.choice(_DIAGNOSIS_SENTENCES) + " " + filler)
        for _ in range(2):
            add(uid, rng.choice(_PLAIN_SENTENCES))
    n_distractor = 5
    for k in range(n_distractor):
        uid = f"dis{k:02d}"
        add(uid, rng.choice(_DISTRACTOR_SENTENCES) + " " + rng.choice(_PLAIN_SENTENCES))
        add(uid, rng.choice(_PLAIN_SENTENCES))
    k = 0
    while pid < n_posts:
        uid = f"plain{k // 3:02d}"
        add(uid, rng.choice(_PLAIN_SENTENCES))
        k += 1
    return posts, diagnosed_ids


def control_pool_fixture(seed: int = 12, n_users: int = 60):
    """Candidate control users; a few are poisoned so exclusions matter."""
    rng = random.Random(seed)
    posts: list[RawPost] = []
    pid = 0
    for k in range(n_users):
        uid = f"cand{k:03d}"
        poisoned_forum = k % 10 == 7
        poisoned_term = k % 10 == 8
        for pi in range(3):
            text = rng.choice(_PLAIN_SENTENCES)
            forum = "offtopic"
            if poisoned_forum and pi == 1:
                forum = "adhd"
            if poisoned_term and pi == 2:
                text = "honestly my adhd brain cannot handle this. " + text
            posts.append(RawPost(
                post_id=f"c{pid:04d}", user_id=uid, created_utc=1_500_100_000 + pid,
                source_forum=forum, text=text,
            ))
            pid += 1
    return posts
