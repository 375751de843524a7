"""Newline-delimited JSON readers/writers for dumps, user records and splits."""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Iterable

from .types import DatasetSplit, RawPost, UserRecord


def read_raw_dump(path: str | Path) -> list[RawPost]:
    """Read a raw post dump; unknown extra fields are ignored."""
    posts = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ValueError(f"{path}:{lineno}: invalid json: {exc}") from exc
            posts.append(
                RawPost(
                    post_id=str(rec["id"]),
                    user_id=str(rec["author"]),
                    created_utc=int(rec["created_utc"]),
                    source_forum=str(rec.get("subreddit", "")),
                    text=str(rec.get("body", "")),
                )
            )
    return posts


def user_to_dict(user: UserRecord) -> dict:
    return {
        "user_id": user.user_id,
        "label": user.label,
        "posts": [
            {"id": p.post_id, "created_utc": p.created_utc, "text": p.text}
            for p in user.posts
        ],
    }


def user_from_dict(rec: dict) -> UserRecord:
    posts = [
        RawPost(
            post_id=str(p["id"]),
            user_id=str(rec["user_id"]),
            created_utc=int(p.get("created_utc", 0)),
            source_forum=str(p.get("subreddit", "")),
            text=str(p["text"]),
        )
        for p in rec["posts"]
    ]
    return UserRecord(user_id=str(rec["user_id"]), label=int(rec["label"]), posts=posts)


def write_users(users: Iterable[UserRecord], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for user in users:
            fh.write(json.dumps(user_to_dict(user), sort_keys=True) + "\n")


def read_users(path: str | Path) -> list[UserRecord]:
    users = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                users.append(user_from_dict(json.loads(line)))
    return users


def file_digest(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def write_split(split: DatasetSplit, out_dir: str | Path, pattern_digests: dict[str, str]) -> None:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    counts = {}
    for name, users in split.partitions().items():
        write_users(users, out / f"{name}.jsonl")
        counts[name] = {
            "users": len(users),
            "positive": sum(u.label == 1 for u in users),
        }
    manifest = {
        "seed": split.seed,
        "pattern_digests": pattern_digests,
        "counts": counts,
    }
    (out / "manifest.json").write_text(
        json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )


def read_split(split_dir: str | Path) -> DatasetSplit:
    split_dir = Path(split_dir)
    manifest = json.loads((split_dir / "manifest.json").read_text(encoding="utf-8"))
    return DatasetSplit(
        train=read_users(split_dir / "train.jsonl"),
        validation=read_users(split_dir / "validation.jsonl"),
        test=read_users(split_dir / "test.jsonl"),
        seed=int(manifest["seed"]),
    )
