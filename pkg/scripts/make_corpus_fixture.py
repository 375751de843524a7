#!/usr/bin/env python3
"""Write the 200-post corpus fixture dump and its expected labels."""

from __future__ import annotations

import json
import sys
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

from vscreen.harness.synthetic import control_pool_fixture, raw_dump_fixture  # noqa: E402

OUT = REPO / "tests" / "fixtures"


def write_dump(posts, path: Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for p in posts:
            fh.write(json.dumps({
                "id": p.post_id,
                "author": p.user_id,
                "created_utc": p.created_utc,
                "subreddit": p.source_forum,
                "body": p.text,
            }, sort_keys=True) + "\n")


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    posts, diagnosed = raw_dump_fixture(seed=11, n_posts=200, n_diagnosed=10)
    write_dump(posts, OUT / "dump_positives.jsonl")
    write_dump(control_pool_fixture(seed=12, n_users=60), OUT / "dump_candidates.jsonl")
    (OUT / "expected_positive_ids.json").write_text(
        json.dumps(sorted(diagnosed)) + "\n", encoding="utf-8"
    )
    print(f"wrote {len(posts)} posts, {len(diagnosed)} diagnosed users -> {OUT}")


if __name__ == "__main__":
    main()
