"""Sliding-window feature extraction over documents of tagged sentences.

One vector per sentence, aligned to registry order. Lookahead features read
up to two following sentences; document-cumulative features read a running
token cache. Undefined values (bTTR under 2 tokens, word statistics of a
word-less sentence) are stored as NaN, the single missing sentinel, and are
excluded from user-level means.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from ..textproc import analyze_text
from ..textproc.syllables import count_syllables
from ..textproc.types import Sentence
from ..corpus.types import UserRecord
from . import measures
from .lexicons import Lexicon, default_lexicons
from .measures import MISSING, compute_syntactic, selector_set
from .ngrams import NgramTable, default_ngram_tables, nlf_of_grams, sentence_ngrams
from .registry import FeatureRegistry, default_registry
from .wordranks import WordRanks, default_wordranks

log = logging.getLogger(__name__)

_SELECTOR_NAMES = ("lemma", "noun", "pronoun", "function_word", "adverb")
_CONTENT_POS = ("noun", "propn", "verb", "adj", "adv")

_syllable_cache: dict[str, int] = {}


def _syllables(word: str) -> int:
    s = _syllable_cache.get(word)
    if s is None:
        s = count_syllables(word)
        _syllable_cache[word] = s
    return s


@dataclass
class DocCache:
    """Document-so-far token statistics, including the current sentence."""

    tokens: int = 0
    types: set[str] = field(default_factory=set)

    def add_sentence(self, surfaces: list[str]) -> None:
        self.tokens += len(surfaces)
        self.types.update(surfaces)


class SentenceProfile:
    """Everything the extractor needs about one sentence, computed once."""

    __slots__ = (
        "sentence", "surfaces", "lemmas", "n_words", "n_content",
        "syllables", "chars", "longwords", "complexwords", "hapax",
        "sets", "grams2", "grams3", "syntactic",
    )

    def __init__(self, sentence: Sentence):
        self.sentence = sentence
        words = sentence.words()
        self.surfaces = [t.surface.lower() for t in words]
        self.lemmas = [t.lemma for t in words]
        self.n_words = len(words)
        self.n_content = sum(1 for t in words if t.pos in _CONTENT_POS)
        syl = chars = longw = complexw = 0
        for t in words:
            s = _syllables(t.surface)
            syl += s
            chars += len(t.surface)
            if len(t.surface) > 6:
                longw += 1
            if s >= 3:
                complexw += 1
        self.syllables = syl
        self.chars = chars
        self.longwords = longw
        self.complexwords = complexw
        counts: dict[str, int] = {}
        for w in self.surfaces:
            counts[w] = counts.get(w, 0) + 1
        self.hapax = sum(1 for c in counts.values() if c == 1)
        self.sets = {name: selector_set(sentence, name) for name in _SELECTOR_NAMES}
        self.grams2 = sentence_ngrams(self.surfaces, 2)
        self.grams3 = sentence_ngrams(self.surfaces, 3)
        self.syntactic = compute_syntactic(sentence)


@dataclass
class SentenceWindow:
    """The extraction unit: current sentence, lookahead, document cache."""

    current: SentenceProfile
    following: list[SentenceProfile]
    cache: DocCache


@dataclass
class UserFeatureSeries:
    user_id: str
    matrix: np.ndarray  # (n_sentences, F)
    post_boundaries: list[int]  # row index of each post's first sentence

    def __post_init__(self):
        if self.matrix.ndim != 2 or self.matrix.shape[0] < 1:
            raise ValueError("series needs at least one sentence row")
        if list(self.post_boundaries) != sorted(set(self.post_boundaries)):
            raise ValueError("post boundaries must be strictly increasing")


class FeatureExtractor:
    """Registry + assets compiled into a per-sentence vector function."""

    def __init__(
        self,
        registry: FeatureRegistry | None = None,
        lexicons: dict[str, Lexicon] | None = None,
        ngram_tables: dict[tuple[str, int], NgramTable] | None = None,
        wordranks: WordRanks | None = None,
    ):
        self.registry = registry if registry is not None else default_registry()
        self.lexicons = lexicons if lexicons is not None else default_lexicons()
        self.tables = ngram_tables if ngram_tables is not None else default_ngram_tables()
        self.ranks = wordranks if wordranks is not None else default_wordranks()
        # rank thresholds cap at the list length so a short list still
        # separates "common" from "everything else"
        self._soph_threshold = min(2000, len(self.ranks))
        self._prev_threshold = min(1000, len(self.ranks))
        self._compile()

    def _compile(self) -> None:
        """Resolve every registry recipe now; mismatches must not surface per sentence."""
        self._syntactic: list[tuple[int, str]] = []
        self._lexical: list[tuple[int, str]] = []
        self._overlap: list[tuple[int, str, int]] = []
        self._ngram: list[tuple[int, NgramTable]] = []
        self._readability: list[tuple[int, str]] = []
        self._lex_rate_codes: list[int] = []
        lemma_reverse: dict[str, list[int]] = {}
        surface_reverse: dict[str, list[int]] = {}
        self._rate_slot_of: dict[int, int] = {}

        def add_lexicon(idx: int, category: str) -> None:
            lex = self.lexicons.get(category)
            if lex is None:
                raise ValueError(f"registry needs lexicon {category!r} but it is not loaded")
            slot = len(self._lex_rate_codes)
            self._lex_rate_codes.append(idx)
            self._rate_slot_of[idx] = slot
            reverse = lemma_reverse if lex.match_mode == "lemma" else surface_reverse
            for entry in lex.entries:
                reverse.setdefault(entry, []).append(slot)

        for idx, spec in enumerate(self.registry):
            if spec.recipe == "syntactic":
                stat = spec.param("stat")
                if stat not in measures.SYNTACTIC_STATS:
                    raise ValueError(f"unknown syntactic stat {stat!r}")
                self._syntactic.append((idx, stat))
            elif spec.recipe == "lexical":
                stat = spec.param("stat")
                if stat not in ("ttr", "bttr", "rttr", "cttr", "lden", "lsoph",
                                "wprev", "wrank", "mwl", "msw", "dttr", "dbttr", "hapx"):
                    raise ValueError(f"unknown lexical stat {stat!r}")
                self._lexical.append((idx, stat))
            elif spec.recipe == "overlap":
                selector = spec.param("selector")
                window = int(spec.param("window"))
                if selector not in _SELECTOR_NAMES or window not in (1, 2):
                    raise ValueError(f"bad overlap recipe for {spec.code}")
                self._overlap.append((idx, selector, window))
            elif spec.recipe == "connectives":
                which = spec.param("which")
                category = "CONN" if which == "all" else f"CONN{which}"
                add_lexicon(idx, category)
            elif spec.recipe == "ngram":
                key = (spec.param("register"), int(spec.param("order")))
                table = self.tables.get(key)
                if table is None:
                    raise ValueError(f"registry needs n-gram table {key} but it is not loaded")
                self._ngram.append((idx, table))
            elif spec.recipe == "readability":
                stat = spec.param("stat")
                if stat not in ("fkgl", "fre", "ari", "cli", "lix", "rix", "fog"):
                    raise ValueError(f"unknown readability stat {stat!r}")
                self._readability.append((idx, stat))
            elif spec.recipe == "lexicon":
                add_lexicon(idx, spec.param("category"))
            else:  # unreachable: registry validates kinds
                raise ValueError(f"unknown recipe {spec.recipe!r}")
        self._lemma_reverse = lemma_reverse
        self._surface_reverse = surface_reverse

    # ------------------------------------------------------------ per sentence

    def profile(self, sentence: Sentence) -> SentenceProfile:
        return SentenceProfile(sentence)

    def extract_sentence_features(self, window: SentenceWindow) -> np.ndarray:
        """One value per registry entry for the windowed sentence."""
        prof = window.current
        vec = np.zeros(len(self.registry), dtype=np.float64)
        nw = prof.n_words

        for idx, stat in self._syntactic:
            vec[idx] = prof.syntactic[stat]

        for idx, stat in self._lexical:
            vec[idx] = self._lexical_stat(prof, stat, window.cache)

        for idx, selector, win in self._overlap:
            vec[idx] = self._window_overlap(prof, window.following, selector, win)

        if self._lex_rate_codes:
            counts = [0] * len(self._lex_rate_codes)
            lr = self._lemma_reverse
            sr = self._surface_reverse
            for lemma in prof.lemmas:
                slots = lr.get(lemma)
                if slots:
                    for s in slots:
                        counts[s] += 1
            for surface in prof.surfaces:
                slots = sr.get(surface)
                if slots:
                    for s in slots:
                        counts[s] += 1
            if nw:
                for slot, idx in enumerate(self._lex_rate_codes):
                    vec[idx] = counts[slot] / nw

        for idx, table in self._ngram:
            grams = prof.grams2 if table.order == 2 else prof.grams3
            vec[idx] = nlf_of_grams(grams, table)

        if nw == 0:
            for idx, _ in self._readability:
                vec[idx] = MISSING
        else:
            wps = float(nw)
            spw = prof.syllables / nw
            cpw = prof.chars / nw
            for idx, stat in self._readability:
                if stat == "fkgl":
                    vec[idx] = 0.39 * wps + 11.8 * spw - 15.59
                elif stat == "fre":
                    vec[idx] = 206.835 - 1.015 * wps - 84.6 * spw
                elif stat == "ari":
                    vec[idx] = 4.71 * cpw + 0.5 * wps - 21.43
                elif stat == "cli":
                    vec[idx] = 5.88 * cpw - 29.6 * (1.0 / nw) - 15.8
                elif stat == "lix":
                    vec[idx] = wps + 100.0 * (prof.longwords / nw)
                elif stat == "rix":
                    vec[idx] = float(prof.longwords)
                else:  # fog
                    vec[idx] = 0.4 * (wps + 100.0 * (prof.complexwords / nw))
        return vec

    def _lexical_stat(self, prof: SentenceProfile, stat: str, cache: DocCache) -> float:
        nw = prof.n_words
        if stat == "dttr":
            return len(cache.types) / cache.tokens if cache.tokens else MISSING
        if stat == "dbttr":
            if cache.tokens < 2:
                return MISSING
            return math.log(len(cache.types)) / math.log(cache.tokens)
        if nw == 0:
            return MISSING
        if stat == "ttr":
            return len(set(prof.surfaces)) / nw
        if stat == "bttr":
            if nw < 2:
                return MISSING
            return math.log(len(set(prof.surfaces))) / math.log(nw)
        if stat == "rttr":
            return len(set(prof.surfaces)) / math.sqrt(nw)
        if stat == "cttr":
            return len(set(prof.surfaces)) / math.sqrt(2.0 * nw)
        if stat == "lden":
            return prof.n_content / nw
        if stat == "lsoph":
            k = self._soph_threshold
            return sum(1 for w in prof.surfaces if self.ranks.rank(w) > k) / nw
        if stat == "wprev":
            k = self._prev_threshold
            return sum(1 for w in prof.surfaces if self.ranks.rank(w) <= k) / nw
        if stat == "wrank":
            return sum(math.log2(1 + self.ranks.rank(w)) for w in prof.surfaces) / nw
        if stat == "mwl":
            return prof.chars / nw
        if stat == "msw":
            return prof.syllables / nw
        return prof.hapax / nw  # hapx

    @staticmethod
    def _window_overlap(
        prof: SentenceProfile, following: list[SentenceProfile], selector: str, window: int
    ) -> float:
        scope = following[:window]
        if not scope:
            return 0.0
        left = prof.sets[selector]
        if len(scope) == 1:
            right = scope[0].sets[selector]
        else:
            right = scope[0].sets[selector] | scope[1].sets[selector]
        if not left and not right:
            return 0.0
        inter = len(left & right)
        union = len(left) + len(right) - inter
        return inter / union if union else 0.0

    # -------------------------------------------------------------- documents

    def extract_document(self, sentences: list[Sentence]) -> np.ndarray:
        """Feature rows for a document (post-concatenated sentence list)."""
        profiles = [SentenceProfile(s) for s in sentences]
        cache = DocCache()
        rows = np.empty((len(profiles), len(self.registry)), dtype=np.float64)
        for i, prof in enumerate(profiles):
            cache.add_sentence(prof.surfaces)
            win = SentenceWindow(current=prof, following=profiles[i + 1 : i + 3], cache=cache)
            rows[i] = self.extract_sentence_features(win)
        return rows

    def extract_user_series(self, user: UserRecord) -> UserFeatureSeries:
        """Rows for every sentence of every post, in post order."""
        if not user.posts:
            raise ValueError(f"user {user.user_id} has no posts")
        sentences: list[Sentence] = []
        boundaries: list[int] = []
        for post in user.posts:
            post_sents = analyze_text(post.text)
            if not post_sents:
                continue
            boundaries.append(len(sentences))
            sentences.extend(post_sents)
        if not sentences:
            raise ValueError(f"user {user.user_id} has no sentences")
        for i, s in enumerate(sentences):
            s.index_in_document = i
        return UserFeatureSeries(
            user_id=user.user_id,
            matrix=self.extract_document(sentences),
            post_boundaries=boundaries,
        )


def extract_sentence_features(window: SentenceWindow, extractor: FeatureExtractor) -> np.ndarray:
    return extractor.extract_sentence_features(window)


def aggregate_user(series: UserFeatureSeries) -> np.ndarray:
    """Column-wise mean over sentence rows, skipping missing sentinels."""
    m = series.matrix
    if m.shape[0] < 1:
        raise ValueError("need at least one row")
    valid = ~np.isnan(m)
    counts = valid.sum(axis=0)
    sums = np.where(valid, m, 0.0).sum(axis=0)
    out = np.zeros(m.shape[1], dtype=np.float64)
    nonzero = counts > 0
    out[nonzero] = sums[nonzero] / counts[nonzero]
    if not nonzero.all():
        log.warning(
            "user %s: %d all-missing feature columns set to 0",
            series.user_id, int((~nonzero).sum()),
        )
    return out


def zscore_contour(
    series: UserFeatureSeries, codes: list[str], registry: FeatureRegistry
) -> list[tuple[int, str, float]]:
    """Per-sentence z-standardized values for the requested feature codes.

    Standardization uses the population std over the series' own rows; a
    constant column z-scores to all zeros. Missing values stay missing.
    """
    if series.matrix.shape[0] < 2:
        raise ValueError("contour needs at least 2 sentence rows")
    rows: list[tuple[int, str, float]] = []
    for code in codes:
        if code not in registry.index:
            raise KeyError(f"unknown feature code {code!r}")
        col = series.matrix[:, registry.index[code]]
        finite = col[~np.isnan(col)]
        if finite.size == 0:
            mean, std = 0.0, 1.0
        else:
            mean = float(finite.mean())
            std = float(finite.std())
        for i, v in enumerate(col):
            if np.isnan(v):
                rows.append((i, code, MISSING))
            elif std == 0.0:
                rows.append((i, code, 0.0))
            else:
                rows.append((i, code, (float(v) - mean) / std))
    return rows
