#!/usr/bin/env python3
"""Train the bundled POS model on the tagged corpus asset and report accuracy."""

from __future__ import annotations

import sys
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

from vscreen.textproc.tagger import evaluate_tagger, read_tagged_corpus, train_tagger  # noqa: E402

ASSETS = REPO / "src" / "vscreen" / "assets" / "textproc"
HELD_OUT_EVERY = 5  # every 5th sentence is held out


def main() -> None:
    corpus = read_tagged_corpus(ASSETS / "tagger_corpus.txt")
    train = [s for i, s in enumerate(corpus) if i % HELD_OUT_EVERY != 0]
    held = [s for i, s in enumerate(corpus) if i % HELD_OUT_EVERY == 0]
    model = train_tagger(train, epochs=8, seed=13)
    acc_train = evaluate_tagger(model, train)
    acc_held = evaluate_tagger(model, held)
    print(f"train accuracy: {acc_train:.4f}  held-out accuracy: {acc_held:.4f}")
    out = ASSETS / "tagger_weights.vstag"
    model.save(out)
    print("weights written to", out)


if __name__ == "__main__":
    main()
