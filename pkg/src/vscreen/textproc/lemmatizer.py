"""Suffix-rule lemmatizer with an irregular-form exception table."""

from __future__ import annotations

from .types import Token

# irregular verbs (surface -> lemma)
_IRREGULAR_VERBS = {
    "am": "be", "is": "be", "are": "be", "was": "be", "were": "be",
    "been": "be", "being": "be",
    "has": "have", "had": "have", "having": "have",
    "does": "do", "did": "do", "done": "do", "doing": "do",
    "went": "go", "gone": "go", "goes": "go",
    "ran": "run", "running": "run", "runs": "run",
    "said": "say", "says": "say",
    "got": "get", "gotten": "get", "getting": "get",
    "made": "make", "making": "make",
    "took": "take", "taken": "take", "taking": "take",
    "came": "come", "coming": "come",
    "saw": "see", "seen": "see", "seeing": "see",
    "knew": "know", "known": "know",
    "thought": "think", "thinking": "think",
    "told": "tell", "found": "find", "gave": "give", "given": "give",
    "giving": "give", "felt": "feel", "kept": "keep", "left": "leave",
    "meant": "mean", "met": "meet", "paid": "pay", "put": "put",
    "read": "read", "sat": "sit", "spoke": "speak", "spoken": "speak",
    "stood": "stand", "wrote": "write", "written": "write",
    "writing": "write", "won": "win", "lost": "lose", "losing": "lose",
    "brought": "bring", "bought": "buy", "built": "build",
    "caught": "catch", "taught": "teach", "heard": "hear", "held": "hold",
    "led": "lead", "sent": "send", "spent": "spend", "began": "begin",
    "begun": "begin", "broke": "break", "broken": "break", "chose": "choose",
    "chosen": "choose", "drank": "drink", "drove": "drive", "driven": "drive",
    "ate": "eat", "eaten": "eat", "fell": "fall", "fallen": "fall",
    "flew": "fly", "forgot": "forget", "forgotten": "forget",
    "grew": "grow", "grown": "grow", "hit": "hit", "let": "let",
    "lay": "lie", "rose": "rise", "risen": "rise", "slept": "sleep",
    "threw": "throw", "thrown": "throw", "understood": "understand",
    "woke": "wake", "wore": "wear", "worn": "wear",
    "using": "use", "having": "have", "makes": "make", "tries": "try",
    "tried": "try", "trying": "try", "lived": "live", "living": "live",
    "loved": "love", "loving": "love", "hated": "hate", "hating": "hate",
    "liked": "like", "liking": "like", "moved": "move", "moving": "move",
    "hoped": "hope", "hoping": "hope", "cared": "care", "caring": "care",
}

# irregular noun plurals
_IRREGULAR_NOUNS = {
    "children": "child", "men": "man", "women": "woman", "people": "person",
    "feet": "foot", "teeth": "tooth", "mice": "mouse", "geese": "goose",
    "lives": "life", "wives": "wife", "knives": "knife", "leaves": "leaf",
    "wolves": "wolf", "selves": "self", "shelves": "shelf",
}

# -ing/-ed stems that need a final e restored
_E_RESTORE = frozenset(
    {"mak", "tak", "giv", "hav", "com", "us", "liv", "lov", "hat", "lik",
     "mov", "hop", "car", "writ", "rid", "driv", "shar", "stat", "creat",
     "caus", "chang", "clos", "decid", "describ", "notic", "realiz",
     "receiv", "sav", "serv", "smil", "voic", "wast", "manag", "imagin"}
)

_DOUBLE_FINAL = frozenset("bdgklmnprtv")


def _strip_doubling(stem: str) -> str:
    if len(stem) >= 3 and stem[-1] == stem[-2] and stem[-1] in _DOUBLE_FINAL:
        return stem[:-1]
    return stem


def _verb_lemma(w: str) -> str:
    if w in _IRREGULAR_VERBS:
        return _IRREGULAR_VERBS[w]
    if w.endswith("ies") and len(w) > 4:
        return w[:-3] + "y"
    if w.endswith("ing") and len(w) > 5:
        stem = w[:-3]
        if stem in _E_RESTORE:
            return stem + "e"
        return _strip_doubling(stem)
    if w.endswith("ed") and len(w) > 4:
        stem = w[:-1]  # "liked" -> "like"
        if stem.endswith("e") and stem[:-1] in _E_RESTORE:
            return stem
        stem = w[:-2]
        if stem in _E_RESTORE:
            return stem + "e"
        return _strip_doubling(stem)
    if w.endswith(("ses", "xes", "zes", "ches", "shes")) and len(w) > 4:
        return w[:-2]
    if w.endswith("s") and not w.endswith("ss") and len(w) > 3:
        return w[:-1]
    return w


def _noun_lemma(w: str) -> str:
    if w in _IRREGULAR_NOUNS:
        return _IRREGULAR_NOUNS[w]
    if w.endswith("ies") and len(w) > 4:
        return w[:-3] + "y"
    if w.endswith(("ses", "xes", "zes", "ches", "shes")) and len(w) > 4:
        return w[:-2]
    if w.endswith("s") and not w.endswith(("ss", "us", "is")) and len(w) > 3:
        return w[:-1]
    return w


def lemmatize(token: Token) -> str:
    """Lemma for a tagged token; falls back to the surface form."""
    w = token.surface.lower()
    if token.pos in ("verb", "aux"):
        return _verb_lemma(w)
    if token.pos in ("noun", "propn"):
        return _noun_lemma(w)
    return w


def lemma_for(surface: str, pos: str) -> str:
    w = surface.lower()
    if pos in ("verb", "aux"):
        return _verb_lemma(w)
    if pos in ("noun", "propn"):
        return _noun_lemma(w)
    return w
