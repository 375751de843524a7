"""Core records for corpus construction."""

from __future__ import annotations

from dataclasses import dataclass, field

POSITIVE = 1
CONTROL = 0


@dataclass(frozen=True)
class RawPost:
    post_id: str
    user_id: str
    created_utc: int
    source_forum: str
    text: str

    def __post_init__(self):
        if not self.post_id:
            raise ValueError("post_id must be non-empty")


@dataclass(frozen=True)
class MatchSpan:
    """Location of a self-reported diagnosis: phrase plus nearby keyword."""

    start: int
    end: int
    phrase: str
    keyword: str


@dataclass(frozen=True)
class DiagnosisPattern:
    diagnosis_phrases: tuple[str, ...]
    condition_keywords: tuple[str, ...]
    window_chars: int = 40
    bidirectional: bool = True

    def __post_init__(self):
        if self.window_chars <= 0:
            raise ValueError("window_chars must be positive")
        if not self.diagnosis_phrases or not self.condition_keywords:
            raise ValueError("phrase and keyword lists must be non-empty")
        for entry in (*self.diagnosis_phrases, *self.condition_keywords):
            if entry != entry.lower():
                raise ValueError(f"pattern entries must be lowercase: {entry!r}")


@dataclass
class UserRecord:
    user_id: str
    label: int  # POSITIVE or CONTROL
    posts: list[RawPost] = field(default_factory=list)

    def __post_init__(self):
        if self.label not in (POSITIVE, CONTROL):
            raise ValueError("label must be 0 (control) or 1 (positive)")
        self.posts = sorted(self.posts, key=lambda p: (p.created_utc, p.post_id))

    def text(self) -> str:
        return " ".join(p.text for p in self.posts)


@dataclass
class DatasetSplit:
    train: list[UserRecord]
    validation: list[UserRecord]
    test: list[UserRecord]
    seed: int

    def partitions(self) -> dict[str, list[UserRecord]]:
        return {"train": self.train, "validation": self.validation, "test": self.test}
