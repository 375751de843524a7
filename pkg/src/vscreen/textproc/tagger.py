"""Averaged-perceptron POS tagger over the 17-tag coarse set.

Closed-class words are tagged from a bundled lexicon before the model is
consulted; the perceptron only has to learn open-class words from context
and suffix features.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path

from ..assets_io import asset_path
from .lemmatizer import lemma_for
from .types import COARSE_TAGS, FUNCTION_TAGS, Sentence, Token

MAGIC = "VSTAG1"

_SENT_PUNCT = frozenset(".!?,'")

_CLOSED_LEXICON: dict[str, str] | None = None
_DEFAULT_MODEL: "TaggerModel | None" = None


def closed_class_lexicon() -> dict[str, str]:
    global _CLOSED_LEXICON
    if _CLOSED_LEXICON is None:
        lex: dict[str, str] = {}
        for line in asset_path("textproc", "closed_class.tsv").read_text("utf-8").splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            word, tag = line.split("\t")
            if tag not in COARSE_TAGS:
                raise ValueError(f"bad tag {tag!r} in closed-class lexicon")
            lex[word] = tag
        _CLOSED_LEXICON = lex
    return _CLOSED_LEXICON


def _rule_tag(word: str, lexicon: dict[str, str]) -> str | None:
    """Tag decided without the model: punctuation, numbers, closed classes."""
    if all(not ch.isalnum() for ch in word):
        return "punct" if any(ch in _SENT_PUNCT for ch in word) else "sym"
    if word[0].isdigit():
        return "num"
    return lexicon.get(word)


def _features(i: int, word: str, context: list[str], prev: str, prev2: str) -> list[str]:
    w = word
    feats = [
        "b",
        "w=" + w,
        "s3=" + w[-3:],
        "s2=" + w[-2:],
        "p1=" + w[0],
        "t1=" + prev,
        "t2=" + prev2,
        "t1w=" + prev + "+" + w[-3:],
        "pw=" + context[i - 1] if i > 0 else "pw=<s>",
        "nw=" + (context[i + 1] if i + 1 < len(context) else "</s>"),
    ]
    if any(ch.isdigit() for ch in w):
        feats.append("d")
    if "'" in w:
        feats.append("a")
    return feats


@dataclass
class TaggerModel:
    weights: dict[str, dict[str, float]] = field(default_factory=dict)
    averaged: bool = False

    @property
    def trained(self) -> bool:
        return bool(self.weights)

    def score_tag(self, feats: list[str]) -> str:
        scores: dict[str, float] = defaultdict(float)
        for f in feats:
            per_class = self.weights.get(f)
            if per_class:
                for tag, w in per_class.items():
                    scores[tag] += w
        if not scores:
            return "noun"
        # deterministic argmax: highest score, ties by tag name
        return max(scores.items(), key=lambda kv: (kv[1], kv[0]))[0]

    def save(self, path: str | Path) -> None:
        lines = [MAGIC]
        for feat in sorted(self.weights):
            for tag in sorted(self.weights[feat]):
                w = self.weights[feat][tag]
                if w != 0.0:
                    lines.append(f"{feat}\t{tag}\t{w!r}")
        Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "TaggerModel":
        lines = Path(path).read_text(encoding="utf-8").splitlines()
        if not lines or lines[0] != MAGIC:
            raise ValueError(f"not a {MAGIC} tagger asset: {path}")
        weights: dict[str, dict[str, float]] = {}
        for line in lines[1:]:
            if not line:
                continue
            feat, tag, w = line.split("\t")
            weights.setdefault(feat, {})[tag] = float(w)
        return cls(weights=weights, averaged=True)


def pos_tag(tokens: list[str], model: TaggerModel | None = None) -> list[Token]:
    """One Token per surface string, tagging closed classes from the lexicon first."""
    if model is None:
        model = default_tagger()
    if not model.trained:
        raise ValueError("tagger model is untrained")
    lexicon = closed_class_lexicon()
    out: list[Token] = []
    prev, prev2 = "<s>", "<s>"
    for i, word in enumerate(tokens):
        tag = _rule_tag(word, lexicon)
        if tag is None:
            tag = model.score_tag(_features(i, word, tokens, prev, prev2))
        out.append(Token(surface=word, lemma=lemma_for(word, tag), pos=tag,
                         is_function_word=tag in FUNCTION_TAGS))
        prev2, prev = prev, tag
    return out


def tag_sentence(tokens: list[str], index: int = 0, model: TaggerModel | None = None) -> Sentence:
    return Sentence(tokens=pos_tag(tokens, model), index_in_document=index)


def train_tagger(
    sentences: list[list[tuple[str, str]]],
    epochs: int = 8,
    seed: int = 13,
) -> TaggerModel:
    """Averaged-perceptron training on (word, tag) sentences."""
    lexicon = closed_class_lexicon()
    weights: dict[str, dict[str, float]] = defaultdict(dict)
    totals: dict[tuple[str, str], float] = defaultdict(float)
    stamps: dict[tuple[str, str], int] = defaultdict(int)
    step = 0
    rng = random.Random(seed)
    order = list(range(len(sentences)))

    def bump(feat: str, tag: str, delta: float) -> None:
        key = (feat, tag)
        cur = weights[feat].get(tag, 0.0)
        totals[key] += (step - stamps[key]) * cur
        stamps[key] = step
        weights[feat][tag] = cur + delta

    for _ in range(epochs):
        rng.shuffle(order)
        for si in order:
            sent = sentences[si]
            context = [w for w, _ in sent]
            prev, prev2 = "<s>", "<s>"
            for i, (word, gold) in enumerate(sent):
                ruled = _rule_tag(word, lexicon)
                if ruled is not None:
                    prev2, prev = prev, ruled
                    continue
                step += 1
                feats = _features(i, word, context, prev, prev2)
                model = TaggerModel(weights=weights)
                guess = model.score_tag(feats)
                if guess != gold:
                    for f in feats:
                        bump(f, gold, 1.0)
                        bump(f, guess, -1.0)
                prev2, prev = prev, gold
    # average
    averaged: dict[str, dict[str, float]] = {}
    for feat, per_class in weights.items():
        for tag, w in per_class.items():
            key = (feat, tag)
            total = totals[key] + (step - stamps[key]) * w
            avg = total / max(step, 1)
            if avg != 0.0:
                averaged.setdefault(feat, {})[tag] = avg
    return TaggerModel(weights=averaged, averaged=True)


def evaluate_tagger(model: TaggerModel, sentences: list[list[tuple[str, str]]]) -> float:
    """Token accuracy of the full pipeline (rules + model) on tagged sentences."""
    right = total = 0
    for sent in sentences:
        words = [w for w, _ in sent]
        predicted = pos_tag(words, model)
        for tok, (_, gold) in zip(predicted, sent):
            total += 1
            right += tok.pos == gold
    return right / total if total else 0.0


def read_tagged_corpus(path: str | Path) -> list[list[tuple[str, str]]]:
    """Read a corpus of 'word_tag' sentences, one sentence per line."""
    sentences = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        pairs = []
        for item in line.split():
            word, _, tag = item.rpartition("_")
            if tag not in COARSE_TAGS:
                raise ValueError(f"bad tag in corpus line: {item!r}")
            pairs.append((word, tag))
        sentences.append(pairs)
    return sentences


def default_tagger() -> TaggerModel:
    global _DEFAULT_MODEL
    if _DEFAULT_MODEL is None:
        _DEFAULT_MODEL = TaggerModel.load(asset_path("textproc", "tagger_weights.vstag"))
    return _DEFAULT_MODEL
