"""The shared model artifact container.

Layout: a "VSCRN1" magic line, the family tag, the registry fingerprint,
then one JSON document holding the fitted standardizer and the family
payload. Arrays are base64-encoded little-endian float64/int64 bytes, so a
save -> load -> save round trip is bit-exact.
"""

from __future__ import annotations

import base64
import json
from pathlib import Path

import numpy as np

from .forest import ForestModel, ForestParams
from .gbm import GbmModel, GbmParams
from .logistic import LinearModel
from .standardizer import Standardizer
from .svm import SvmModel
from .trees import Tree

MAGIC = "VSCRN1"


def encode_array(a: np.ndarray) -> dict:
    a = np.ascontiguousarray(a)
    if a.dtype == np.int64:
        dtype = "<i8"
    else:
        a = a.astype(np.float64)
        dtype = "<f8"
    return {
        "shape": list(a.shape),
        "dtype": dtype,
        "data": base64.b64encode(a.astype(dtype).tobytes()).decode("ascii"),
    }


def decode_array(d: dict) -> np.ndarray:
    raw = base64.b64decode(d["data"])
    a = np.frombuffer(raw, dtype=d["dtype"]).copy()
    return a.reshape(d["shape"])


def _tree_to_dict(t: Tree) -> dict:
    return {
        "criterion": t.criterion,
        "feature": encode_array(t.feature),
        "threshold": encode_array(t.threshold),
        "left": encode_array(t.left),
        "right": encode_array(t.right),
        "n_samples": encode_array(t.n_samples),
        "impurity": encode_array(t.impurity),
        "value": encode_array(t.value),
    }


def _tree_from_dict(d: dict) -> Tree:
    return Tree(
        criterion=d["criterion"],
        feature=decode_array(d["feature"]).astype(np.int64),
        threshold=decode_array(d["threshold"]),
        left=decode_array(d["left"]).astype(np.int64),
        right=decode_array(d["right"]).astype(np.int64),
        n_samples=decode_array(d["n_samples"]).astype(np.int64),
        impurity=decode_array(d["impurity"]),
        value=decode_array(d["value"]),
    )


def _model_payload(model) -> dict:
    family = model.family
    if family == "lr":
        return {
            "w": encode_array(model.w), "b": model.b, "C": model.C,
            "l1_ratio": model.l1_ratio, "epochs_run": model.epochs_run,
            "converged": model.converged,
        }
    if family == "rf":
        return {
            "trees": [_tree_to_dict(t) for t in model.trees],
            "params": vars(model.params),
            "n_features": model.n_features,
            "seed": model.seed,
        }
    if family == "svm":
        return {
            "sv_X": encode_array(model.sv_X), "sv_y": encode_array(model.sv_y),
            "alpha": encode_array(model.alpha), "b": model.b,
            "gamma": model.gamma, "C": model.C,
        }
    if family == "gb":
        return {
            "f0": model.f0,
            "trees": [_tree_to_dict(t) for t in model.trees],
            "params": vars(model.params),
            "n_features": model.n_features,
        }
    if family == "bilstm":
        return model.to_payload()
    raise ValueError(f"unknown model family {family!r}")


def _model_from_payload(family: str, payload: dict):
    if family == "lr":
        return LinearModel(
            w=decode_array(payload["w"]), b=float(payload["b"]),
            C=float(payload["C"]), l1_ratio=float(payload["l1_ratio"]),
            epochs_run=int(payload["epochs_run"]), converged=bool(payload["converged"]),
        )
    if family == "rf":
        return ForestModel(
            trees=[_tree_from_dict(t) for t in payload["trees"]],
            params=ForestParams(**payload["params"]),
            n_features=int(payload["n_features"]),
            seed=int(payload["seed"]),
        )
    if family == "svm":
        return SvmModel(
            sv_X=decode_array(payload["sv_X"]), sv_y=decode_array(payload["sv_y"]),
            alpha=decode_array(payload["alpha"]), b=float(payload["b"]),
            gamma=float(payload["gamma"]), C=float(payload["C"]),
        )
    if family == "gb":
        return GbmModel(
            f0=float(payload["f0"]),
            trees=[_tree_from_dict(t) for t in payload["trees"]],
            params=GbmParams(**payload["params"]),
            n_features=int(payload["n_features"]),
        )
    if family == "bilstm":
        from ..seqmodel.bilstm import BiLstmModel

        return BiLstmModel.from_payload(payload)
    raise ValueError(f"unknown model family {family!r}")


def save_artifact(
    path: str | Path,
    model,
    standardizer: Standardizer | None,
    registry_fingerprint: str,
) -> None:
    doc = {
        "standardizer": None
        if standardizer is None
        else {"mean": encode_array(standardizer.mean), "std": encode_array(standardizer.std)},
        "payload": _model_payload(model),
    }
    body = json.dumps(doc, sort_keys=True, separators=(",", ":"))
    Path(path).write_text(
        f"{MAGIC}\n{model.family}\n{registry_fingerprint}\n{body}\n", encoding="utf-8"
    )


def load_artifact(path: str | Path) -> tuple[object, Standardizer | None, str]:
    """(model, standardizer, registry_fingerprint)."""
    lines = Path(path).read_text(encoding="utf-8").split("\n", 3)
    if len(lines) < 4 or lines[0] != MAGIC:
        raise ValueError(f"not a {MAGIC} artifact: {path}")
    family, fingerprint = lines[1], lines[2]
    doc = json.loads(lines[3])
    std = None
    if doc["standardizer"] is not None:
        std = Standardizer(
            mean=decode_array(doc["standardizer"]["mean"]),
            std=decode_array(doc["standardizer"]["std"]),
        )
    model = _model_from_payload(family, doc["payload"])
    return model, std, fingerprint
