"""The ordered feature catalog: codes, groups, display names, recipes.

The default registry spans all eight feature groups with 123 features.
Registry order is load-bearing: vectors, matrices and model artifacts all
align to it, and a fingerprint of the catalog is embedded in every
artifact so mismatched pairings fail loudly.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path

GROUPS = (
    "syntactic",
    "lexical",
    "cohesion",
    "stylistics",
    "readability",
    "grammatical",
    "topical",
    "emotion",
)

GROUP_DISPLAY = {
    "syntactic": "Syntactic Complexity",
    "lexical": "Lexical Complexity",
    "cohesion": "Cohesion",
    "stylistics": "Stylistics",
    "readability": "Readability",
    "grammatical": "Grammatical Categories",
    "topical": "Topical Categories",
    "emotion": "Emotion Categories",
}

RECIPE_KINDS = frozenset(
    {"syntactic", "lexical", "overlap", "connectives", "ngram", "readability", "lexicon"}
)


@dataclass(frozen=True)
class FeatureSpec:
    code: str
    group: str
    name: str
    recipe: str
    params: tuple[tuple[str, object], ...] = field(default_factory=tuple)

    def param(self, key: str, default=None):
        for k, v in self.params:
            if k == key:
                return v
        return default

    def to_dict(self) -> dict:
        return {
            "code": self.code,
            "group": self.group,
            "name": self.name,
            "recipe": self.recipe,
            "params": dict(self.params),
        }


class FeatureRegistry:
    def __init__(self, specs: list[FeatureSpec]):
        codes = [s.code for s in specs]
        if len(set(codes)) != len(codes):
            raise ValueError("duplicate feature codes in registry")
        groups = {s.group for s in specs}
        missing = set(GROUPS) - groups
        if missing:
            raise ValueError(f"registry is missing groups: {sorted(missing)}")
        for s in specs:
            if s.recipe not in RECIPE_KINDS:
                raise ValueError(f"unknown recipe kind {s.recipe!r} for {s.code}")
        self.specs = list(specs)
        self.index = {s.code: i for i, s in enumerate(self.specs)}

    def __len__(self) -> int:
        return len(self.specs)

    def __iter__(self):
        return iter(self.specs)

    @property
    def codes(self) -> list[str]:
        return [s.code for s in self.specs]

    def group_of(self, code: str) -> str:
        return self.specs[self.index[code]].group

    def group_columns(self) -> dict[str, list[int]]:
        cols: dict[str, list[int]] = {g: [] for g in GROUPS}
        for i, s in enumerate(self.specs):
            cols[s.group].append(i)
        return cols

    def fingerprint(self) -> str:
        canonical = json.dumps([s.to_dict() for s in self.specs], sort_keys=True)
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()

    def save(self, path: str | Path) -> None:
        payload = {"features": [s.to_dict() for s in self.specs]}
        Path(path).write_text(json.dumps(payload, indent=1) + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "FeatureRegistry":
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
        specs = [
            FeatureSpec(
                code=rec["code"],
                group=rec["group"],
                name=rec["name"],
                recipe=rec["recipe"],
                params=tuple(sorted(rec.get("params", {}).items())),
            )
            for rec in payload["features"]
        ]
        return cls(specs)


def _spec(code, group, name, recipe, **params) -> FeatureSpec:
    return FeatureSpec(code=code, group=group, name=name, recipe=recipe,
                       params=tuple(sorted(params.items())))


_EMOTIONS = [
    # revised hourglass inventory: four dimensions, six levels each
    ("EMOecs", "Emotion Ecstasy"), ("EMOjoy", "Emotion Joy"),
    ("EMOcon", "Emotion Contentment"), ("EMOmel", "Emotion Melancholy"),
    ("EMOsad", "Emotion Sadness"), ("EMOgri", "Emotion Grief"),
    ("EMObli", "Emotion Bliss"), ("EMOcal", "Emotion Calmness"),
    ("EMOser", "Emotion Serenity"), ("EMOann", "Emotion Annoyance"),
    ("EMOang", "Emotion Anger"), ("EMOrag", "Emotion Rage"),
    ("EMOdel", "Emotion Delight"), ("EMOple", "Emotion Pleasantness"),
    ("EMOacc", "Emotion Acceptance"), ("EMOdsl", "Emotion Dislike"),
    ("EMOdsg", "Emotion Disgust"), ("EMOloa", "Emotion Loathing"),
    ("EMOent", "Emotion Enthusiasm"), ("EMOeag", "Emotion Eagerness"),
    ("EMOres", "Emotion Responsiveness"), ("EMOanx", "Emotion Anxiety"),
    ("EMOfea", "Emotion Fear"), ("EMOter", "Emotion Terror"),
]

_TOPICS = [
    ("TOPart", "Topic Art"), ("TOPbus", "Topic Business"),
    ("TOPedu", "Topic Education"), ("TOPent", "Topic Entertainment"),
    ("TOPfas", "Topic Fashion"), ("TOPfoo", "Topic Food"),
    ("TOPhea", "Topic Health"), ("TOPmus", "Topic Music"),
    ("TOPpol", "Topic Politics"), ("TOPrel", "Topic Relationships"),
    ("TOPsci", "Topic Science"), ("TOPspo", "Topic Sports"),
    ("TOPtec", "Topic Technology"), ("TOPtra", "Topic Travel"),
]

_GRAMMATICAL = [
    ("PRN", "Pronoun (all)"), ("PRN1s", "Pronoun (1st, sg)"),
    ("PRN1p", "Pronoun (1st, pl)"), ("PRN2", "Pronoun (2nd)"),
    ("PRN3s", "Pronoun (3rd, sg)"), ("PRN3p", "Pronoun (3rd, pl)"),
    ("PRNposs", "Pronoun (possessive)"), ("PRNref", "Pronoun (reflexive)"),
    ("PRNref1s", "Pronoun (reflexive, 1st, sg)"),
    ("PRNindef", "Pronoun (indefinite)"),
    ("DET", "Determiner (all)"), ("DETdef", "Determiner (definite)"),
    ("DETindef", "Determiner (indefinite)"), ("DETdem", "Determiner (demonstrative)"),
    ("DETposs", "Determiner (possessive)"), ("DETposs1s", "Determiner (possessive, 1st, sg)"),
    ("DETposs1p", "Determiner (possessive, 1st, pl)"),
    ("PREP", "Preposition"), ("AUX", "Auxiliary Verb (all)"),
    ("AUXmod", "Auxiliary Verb (modal)"), ("AUXbe", "Auxiliary Verb (be)"),
    ("AUXhave", "Auxiliary Verb (have)"), ("AUXdo", "Auxiliary Verb (do)"),
    ("CNJcrd", "Conjunction (coordinating)"), ("CNJsub", "Conjunction (subordinating)"),
    ("QUANT", "Quantifier"), ("NEG", "Negation"), ("INTJ", "Interjection"),
]

_OVERLAPS = [
    ("NSLO", "Next-Sentence Lemma Overlap", "lemma", 1),
    ("NSNO", "Next-Sentence Noun Overlap", "noun", 1),
    ("NSPO", "Next-Sentence Pronoun Overlap", "pronoun", 1),
    ("NSFWO", "Next-Sentence Function Word Overlap", "function_word", 1),
    ("NSAdvO", "Next-Sentence Adverb Overlap", "adverb", 1),
    ("N2SLO", "Next-Two Sentences Lemma Overlap", "lemma", 2),
    ("N2SNO", "Next-Two Sentences Noun Overlap", "noun", 2),
    ("N2SPO", "Next-Two Sentences Pronoun Overlap", "pronoun", 2),
    ("N2SFWO", "Next-Two Sentences Function Word Overlap", "function_word", 2),
    ("N2SAdvO", "Next-Two Sentences Adverb Overlap", "adverb", 2),
]

_REGISTERS = [("f", "Fiction"), ("b", "Weblog"), ("w", "Web"), ("n", "News"), ("s", "Spoken")]

_SYNTACTIC = [
    ("SLEN", "Sentence Length (words)", "slen"),
    ("CS", "Clauses per Sentence", "cs"),
    ("MLC", "Mean Length of Clause", "mlc"),
    ("SUBR", "Subordination Rate", "subr"),
    ("CRDR", "Coordination Rate", "crdr"),
    ("SCONJC", "Subordinator Count", "sconjc"),
    ("CONJC", "Coordinator Count", "conjc"),
    ("PPHR", "Participial Phrase Count (approx.)", "pphr"),
    ("VPS", "Verbs per Sentence", "vps"),
    ("NPS", "Nouns per Sentence", "nps"),
    ("ADJPS", "Adjectives per Sentence", "adjps"),
    ("ADVPS", "Adverbs per Sentence", "advps"),
]

_LEXICAL = [
    ("TTR", "Type-Token Ratio", "ttr"),
    ("bTTR", "Bilogarithmic Type-Token Ratio", "bttr"),
    ("RTTR", "Root Type-Token Ratio", "rttr"),
    ("CTTR", "Corrected Type-Token Ratio", "cttr"),
    ("LDEN", "Lexical Density", "lden"),
    ("LSOPH", "Lexical Sophistication (rank > 2000)", "lsoph"),
    ("WPREV", "Word Prevalence (rank <= 1000)", "wprev"),
    ("WRANK", "Mean Log Word Rank", "wrank"),
    ("MWL", "Mean Word Length", "mwl"),
    ("MSW", "Mean Syllables per Word", "msw"),
    ("DTTR", "Document-Cumulative Type-Token Ratio", "dttr"),
    ("DbTTR", "Document-Cumulative Bilogarithmic TTR", "dbttr"),
    ("HAPX", "Hapax Proportion (within sentence)", "hapx"),
]

_READABILITY = [
    ("FKGL", "Flesch-Kincaid Grade Level", "fkgl"),
    ("FRE", "Flesch Reading Ease", "fre"),
    ("ARI", "Automated Readability Index", "ari"),
    ("CLI", "Coleman-Liau Index", "cli"),
    ("LIX", "Lasbarhetsindex", "lix"),
    ("RIX", "Rate Index", "rix"),
    ("FOG", "Gunning Fog Index", "fog"),
]

_CONNECTIVES = [
    ("CONN", "Connectives (all)", "all"),
    ("CONNcaus", "Causal Connectives", "caus"),
    ("CONNadve", "Adversative Connectives", "adve"),
    ("CONNtemp", "Temporal Connectives", "temp"),
    ("CONNadd", "Additive Connectives", "add"),
]


def default_registry() -> FeatureRegistry:
    specs: list[FeatureSpec] = []
    for code, name, stat in _SYNTACTIC:
        specs.append(_spec(code, "syntactic", name, "syntactic", stat=stat))
    for code, name, stat in _LEXICAL:
        specs.append(_spec(code, "lexical", name, "lexical", stat=stat))
    for code, name, selector, window in _OVERLAPS:
        specs.append(_spec(code, "cohesion", name, "overlap",
                           selector=selector, window=window))
    for code, name, which in _CONNECTIVES:
        specs.append(_spec(code, "cohesion", name, "connectives", which=which))
    for order, oname in ((2, "Bigram"), (3, "Trigram")):
        for rkey, rname in _REGISTERS:
            specs.append(
                _spec(f"{order}GNLF{rkey}", "stylistics",
                      f"{oname} {rname} Normalized Log Frequency", "ngram",
                      register=rname.lower(), order=order)
            )
    for code, name, stat in _READABILITY:
        specs.append(_spec(code, "readability", name, "readability", stat=stat))
    for code, name in _GRAMMATICAL:
        specs.append(_spec(code, "grammatical", name, "lexicon", category=code))
    for code, name in _TOPICS:
        specs.append(_spec(code, "topical", name, "lexicon", category=code))
    for code, name in _EMOTIONS:
        specs.append(_spec(code, "emotion", name, "lexicon", category=code))
    return FeatureRegistry(specs)
