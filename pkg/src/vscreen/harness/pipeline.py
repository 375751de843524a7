"""Train/evaluate orchestration: in-domain runs and cross-corpus transfer."""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from ..corpus.types import DatasetSplit, UserRecord
from ..features.extract import FeatureExtractor, aggregate_user
from ..mlcore import (
    ForestParams,
    GbmParams,
    Standardizer,
    fit_standardizer,
    predict,
    train_gradient_boosting,
    train_logistic_elastic,
    train_random_forest,
    train_svm_rbf,
)
from ..seqmodel import (
    BiLstmConfig,
    BiLstmModel,
    OneCycleConfig,
    TrainConfig,
    predict_bilstm_batch,
    train_bilstm,
)
from .manifest import RunManifest, corpus_digest, ids_digest
from .metrics import MetricsRow, compute_metrics

log = logging.getLogger(__name__)

FAMILIES = ("lr", "rf", "svm", "gb", "bilstm")


class LeakageError(RuntimeError):
    pass


class FingerprintMismatch(RuntimeError):
    pass


@dataclass
class ModelSpec:
    family: str
    overrides: dict = field(default_factory=dict)
    grid: dict[str, list] | None = None  # small fixture-scale search only

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown model family {self.family!r}")
        if self.grid:
            for key, values in self.grid.items():
                if len(values) > 3:
                    raise ValueError(f"grid for {key} exceeds 3 values")


@dataclass
class FeatureBundle:
    user_ids: list[str]
    labels: np.ndarray
    aggregate: np.ndarray  # (n_users, F)
    series: list[np.ndarray]  # per-user sentence matrices


_WORKER_EXTRACTOR: FeatureExtractor | None = None


def _init_worker(extractor: FeatureExtractor) -> None:
    global _WORKER_EXTRACTOR
    _WORKER_EXTRACTOR = extractor


def _extract_one(user: UserRecord):
    s = _WORKER_EXTRACTOR.extract_user_series(user)
    return user.user_id, user.label, s.matrix, aggregate_user(s)


def extract_bundle(
    users: list[UserRecord], extractor: FeatureExtractor, n_workers: int = 1
) -> FeatureBundle:
    """Per-user feature extraction; output order is fixed by user_id.

    Extraction is pure, so the worker pool only changes wall time, never
    bytes: results are identical for any worker count.
    """
    users = sorted(users, key=lambda u: u.user_id)
    ids, labels, series, rows = [], [], [], []
    if n_workers > 1:
        import multiprocessing as mp
        from concurrent.futures import ProcessPoolExecutor

        ctx = mp.get_context("fork")
        with ProcessPoolExecutor(
            max_workers=n_workers, mp_context=ctx,
            initializer=_init_worker, initargs=(extractor,),
        ) as pool:
            results = list(pool.map(_extract_one, users, chunksize=16))
        results.sort(key=lambda r: r[0])
        for uid, label, matrix, agg in results:
            ids.append(uid)
            labels.append(label)
            series.append(matrix)
            rows.append(agg)
    else:
        for user in users:
            s = extractor.extract_user_series(user)
            ids.append(user.user_id)
            labels.append(user.label)
            series.append(s.matrix)
            rows.append(aggregate_user(s))
    return FeatureBundle(
        user_ids=ids,
        labels=np.asarray(labels, dtype=np.int64),
        aggregate=np.vstack(rows),
        series=series,
    )


def _series_std(series: list[np.ndarray], std: Standardizer) -> list[np.ndarray]:
    return [std.apply(np.nan_to_num(s, nan=0.0)) for s in series]


def _train_one(
    family: str,
    params: dict,
    seed: int,
    Xtr: np.ndarray,
    ytr: np.ndarray,
    series_tr: list[np.ndarray] | None,
    series_val: list[np.ndarray] | None,
    yval: np.ndarray | None,
):
    """Train one family; returns (model, train_log_or_None)."""
    if family == "lr":
        return (
            train_logistic_elastic(
                Xtr, ytr,
                C=params.get("C", 0.02),
                l1_ratio=params.get("l1_ratio", 0.05),
                seed=seed,
            ),
            None,
        )
    if family == "rf":
        fp = ForestParams(
            n_trees=params.get("n_trees", 56),
            max_depth=params.get("max_depth", 13),
            min_samples_split=params.get("min_samples_split", 6),
        )
        return train_random_forest(Xtr, ytr, fp, seed=seed), None
    if family == "svm":
        return train_svm_rbf(Xtr, ytr, C=params.get("C", 1.8), seed=seed), None
    if family == "gb":
        gp = GbmParams(
            n_estimators=params.get("n_estimators", 45),
            learning_rate=params.get("learning_rate", 0.4),
            max_depth=params.get("max_depth", 3),
        )
        return train_gradient_boosting(Xtr, ytr, gp, seed=seed), None
    # bilstm
    mcfg = BiLstmConfig(
        input_dim=Xtr.shape[1],
        layers=params.get("layers", 3),
        hidden=params.get("hidden", 256),
        head_width=params.get("head_width", 512),
        head_layers=params.get("head_layers", 3),
        dropout=params.get("dropout", 0.2),
        max_sentences=params.get("max_sentences", 200),
    )
    tcfg = TrainConfig(
        epochs=params.get("epochs", 60),
        seed=seed,
        weight_decay=params.get("weight_decay", 0.01),
        patience=params.get("patience", 5),
        schedule=OneCycleConfig(
            max_lr=params.get("max_lr", 0.01),
            warmup_fraction=params.get("warmup_fraction", 0.3),
            initial_div=params.get("initial_div", 25.0),
            final_div=params.get("final_div", 1e4),
        ),
    )
    model, rows = train_bilstm(
        list(zip(series_tr, ytr.tolist())),
        list(zip(series_val, yval.tolist())),
        tcfg, mcfg,
    )
    return model, rows


def _scores(model, family: str, X: np.ndarray, series: list[np.ndarray] | None) -> np.ndarray:
    if family == "bilstm":
        return predict_bilstm_batch(model, series)
    return model.predict_proba(X)


@dataclass
class RunResult:
    metrics: MetricsRow
    model: object
    standardizer: Standardizer
    manifest: RunManifest
    validation_f1: float
    train_log: list | None = None


def run_indomain(
    split: DatasetSplit,
    spec: ModelSpec,
    seed: int,
    extractor: FeatureExtractor | None = None,
) -> RunResult:
    """Full pipeline on one split: fit on train, select on validation F1,
    report test metrics. Aborts if any test user id leaks into the fit."""
    if extractor is None:
        extractor = FeatureExtractor()
    train_ids = {u.user_id for u in split.train}
    val_ids = {u.user_id for u in split.validation}
    test_ids = {u.user_id for u in split.test}
    if train_ids & test_ids or val_ids & test_ids:
        raise LeakageError("test users overlap the fit partitions")

    tr = extract_bundle(split.train, extractor)
    va = extract_bundle(split.validation, extractor)
    te = extract_bundle(split.test, extractor)

    if spec.family == "bilstm":
        # sentence-level standardization; sentinels map to 0 first
        std = fit_standardizer(np.vstack([np.nan_to_num(s, nan=0.0) for s in tr.series]))
    else:
        std = fit_standardizer(tr.aggregate)

    def prepared(bundle: FeatureBundle):
        X = std.apply(bundle.aggregate) if spec.family != "bilstm" else bundle.aggregate
        series = _series_std(bundle.series, std) if spec.family == "bilstm" else None
        return X, series

    Xtr, str_tr = prepared(tr)
    Xva, str_va = prepared(va)
    Xte, str_te = prepared(te)

    combos: list[dict] = [dict(spec.overrides)]
    if spec.grid:
        keys = sorted(spec.grid)
        combos = [
            {**spec.overrides, **dict(zip(keys, values))}
            for values in product(*(spec.grid[k] for k in keys))
        ]
    best = None
    for params in combos:
        model, train_log = _train_one(
            spec.family, params, seed, Xtr, tr.labels, str_tr, str_va, va.labels
        )
        val_pred = (_scores(model, spec.family, Xva, str_va) >= 0.5).astype(np.int64)
        val_f1 = compute_metrics(va.labels, val_pred, spec.family).f1
        if best is None or val_f1 > best[0]:
            best = (val_f1, model, params, train_log)
    val_f1, model, params, train_log = best

    test_pred = (_scores(model, spec.family, Xte, str_te) >= 0.5).astype(np.int64)
    metrics = compute_metrics(te.labels, test_pred, spec.family)
    all_users = split.train + split.validation + split.test
    manifest = RunManifest(
        corpus_digest=corpus_digest(all_users),
        registry_fingerprint=extractor.registry.fingerprint(),
        model_family=spec.family,
        hyperparameters=params,
        seed=seed,
        counts={
            "train": len(split.train),
            "validation": len(split.validation),
            "test": len(split.test),
        },
        fit_user_digest=ids_digest(sorted(train_ids | val_ids)),
    )
    return RunResult(
        metrics=metrics,
        model=model,
        standardizer=std,
        manifest=manifest,
        validation_f1=val_f1,
        train_log=train_log,
    )


def sample_ood_users(
    users: list[UserRecord], n_per_class: int, seed: int
) -> list[UserRecord]:
    rng = random.Random(seed)
    picked: list[UserRecord] = []
    for label in (0, 1):
        pool = sorted((u for u in users if u.label == label), key=lambda u: u.user_id)
        if len(pool) < n_per_class:
            raise ValueError(
                f"need {n_per_class} users of label {label}, corpus has {len(pool)}"
            )
        picked.extend(rng.sample(pool, n_per_class))
    picked.sort(key=lambda u: u.user_id)
    return picked


def run_ood(
    indomain: RunResult,
    test_corpus: list[UserRecord],
    n_per_class: int = 1000,
    seed: int = 0,
    extractor: FeatureExtractor | None = None,
) -> MetricsRow:
    """Evaluate a stored in-domain model on users sampled from another corpus.

    change_f1 compares against the stored in-domain manifest's run, not a
    recomputation.
    """
    if extractor is None:
        extractor = FeatureExtractor()
    if extractor.registry.fingerprint() != indomain.manifest.registry_fingerprint:
        raise FingerprintMismatch(
            "test corpus features use a different registry than the model artifact"
        )
    family = indomain.manifest.model_family
    sampled = sample_ood_users(test_corpus, n_per_class, seed)
    bundle = extract_bundle(sampled, extractor)
    if family == "bilstm":
        series = _series_std(bundle.series, indomain.standardizer)
        scores = _scores(indomain.model, family, bundle.aggregate, series)
    else:
        X = indomain.standardizer.apply(bundle.aggregate)
        scores = _scores(indomain.model, family, X, None)
    pred = (scores >= 0.5).astype(np.int64)
    row = compute_metrics(bundle.labels, pred, family)
    row.change_f1 = row.f1 - indomain.metrics.f1
    return row
