"""Run manifests: everything needed to reproduce a run byte-for-byte."""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass, field
from pathlib import Path

from ..corpus.io import user_to_dict
from ..corpus.types import UserRecord


def corpus_digest(users: list[UserRecord]) -> str:
    h = hashlib.sha256()
    for user in sorted(users, key=lambda u: u.user_id):
        h.update(json.dumps(user_to_dict(user), sort_keys=True).encode("utf-8"))
    return h.hexdigest()


@dataclass
class RunManifest:
    corpus_digest: str
    registry_fingerprint: str
    model_family: str
    hyperparameters: dict
    seed: int
    split_ratios: tuple[float, float, float] = (0.8, 0.1, 0.1)
    counts: dict = field(default_factory=dict)
    fit_user_digest: str = ""  # digest of the ids the standardizer/model saw
    timestamp: float = field(default_factory=time.time)

    def digest(self) -> str:
        """Stable digest of the run inputs; the timestamp is metadata only."""
        payload = {
            "corpus_digest": self.corpus_digest,
            "registry_fingerprint": self.registry_fingerprint,
            "model_family": self.model_family,
            "hyperparameters": self.hyperparameters,
            "seed": self.seed,
            "split_ratios": list(self.split_ratios),
            "counts": self.counts,
            "fit_user_digest": self.fit_user_digest,
        }
        canon = json.dumps(payload, sort_keys=True)
        return hashlib.sha256(canon.encode("utf-8")).hexdigest()

    def to_dict(self) -> dict:
        return {
            "corpus_digest": self.corpus_digest,
            "registry_fingerprint": self.registry_fingerprint,
            "model_family": self.model_family,
            "hyperparameters": self.hyperparameters,
            "seed": self.seed,
            "split_ratios": list(self.split_ratios),
            "counts": self.counts,
            "fit_user_digest": self.fit_user_digest,
            "timestamp": self.timestamp,
            "manifest_digest": self.digest(),
        }

    def save(self, path: str | Path) -> None:
        Path(path).write_text(
            json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )

    @classmethod
    def load(cls, path: str | Path) -> "RunManifest":
        d = json.loads(Path(path).read_text(encoding="utf-8"))
        return cls(
            corpus_digest=d["corpus_digest"],
            registry_fingerprint=d["registry_fingerprint"],
            model_family=d["model_family"],
            hyperparameters=d["hyperparameters"],
            seed=int(d["seed"]),
            split_ratios=tuple(d.get("split_ratios", (0.8, 0.1, 0.1))),
            counts=d.get("counts", {}),
            fit_user_digest=d.get("fit_user_digest", ""),
            timestamp=float(d.get("timestamp", 0.0)),
        )


def ids_digest(user_ids: list[str]) -> str:
    h = hashlib.sha256()
    for uid in sorted(user_ids):
        h.update(uid.encode("utf-8"))
        h.update(b"\0")
    return h.hexdigest()
