"""Command-line entry points for the screening toolkit."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click
import numpy as np

from .assets_io import asset_path
from .corpus import (
    build_dataset,
    default_exclusions,
    default_pattern,
    file_digest,
    load_exclusions_file,
    load_pattern_file,
    read_raw_dump,
    read_split,
    read_users,
    select_controls,
    split_dataset,
    write_split,
)
from .corpus.build import prepare_control_candidates
from .corpus.types import POSITIVE, UserRecord
from .explain import build_report, explain_model, group_directions, make_group_layout
from .features import (
    FeatureExtractor,
    FeatureRegistry,
    default_registry,
    load_wordranks,
    write_series_matrix,
    write_user_matrix,
    zscore_contour,
)
from .features.lexicons import load_lexicon_dir
from .features.ngrams import load_ngram_dir
from .harness import (
    ModelSpec,
    RunManifest,
    compute_metrics,
    corpus_digest,
    emit_report,
    load_config,
    model_params,
    run_indomain,
    run_ood,
)
from .harness.pipeline import FeatureBundle, extract_bundle, _series_std, _scores
from .mlcore import load_artifact, mdi_importance, save_artifact, train_random_forest
from .mlcore.forest import ForestParams
from .seqmodel import format_train_log


@click.group()
def main():
    """Interpretable linguistic screening toolkit."""


def _load_extractor(registry_path: str | None, assets_dir: str | None) -> FeatureExtractor:
    registry = FeatureRegistry.load(registry_path) if registry_path else default_registry()
    lexicons = tables = ranks = None
    if assets_dir:
        base = Path(assets_dir)
        lexicons = load_lexicon_dir(base / "lexicons")
        tables = load_ngram_dir(base / "ngrams")
        ranks = load_wordranks(base / "wordranks.txt")
    return FeatureExtractor(registry=registry, lexicons=lexicons,
                            ngram_tables=tables, wordranks=ranks)


def _load_corpus_path(path: str) -> list[UserRecord]:
    """A users JSONL file, or a split directory (partitions concatenated)."""
    p = Path(path)
    if p.is_dir():
        split = read_split(p)
        return split.train + split.validation + split.test
    return read_users(p)


# ------------------------------------------------------------------ build-corpus

@main.command("build-corpus")
@click.option("--positives", required=True, type=click.Path(exists=True))
@click.option("--candidates", required=True, type=click.Path(exists=True))
@click.option("--patterns", type=click.Path(exists=True), default=None,
              help="Diagnosis pattern file (bundled default when omitted).")
@click.option("--exclusions", type=click.Path(exists=True), default=None,
              help="Control exclusion file (bundled default when omitted).")
@click.option("--min-sentences", default=3, show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--out", required=True, type=click.Path())
def build_corpus_cmd(positives, candidates, patterns, exclusions, min_sentences, seed, out):
    """Label diagnosed users, sample matched controls, split 8:1:1."""
    pattern = load_pattern_file(patterns) if patterns else default_pattern()
    forums, terms = (
        load_exclusions_file(exclusions) if exclusions else default_exclusions()
    )
    positive_posts = read_raw_dump(positives)
    candidate_posts = read_raw_dump(candidates)

    positives_users = [
        u for u in build_dataset(positive_posts, [], pattern, min_sentences)
        if u.label == POSITIVE
    ]
    if not positives_users:
        raise click.ClickException("no self-reported diagnoses found in the positives dump")

    candidate_users = prepare_control_candidates(candidate_posts, min_sentences)
    controls = select_controls(candidate_users, forums, terms,
                               n=len(positives_users), seed=seed)

    users = positives_users + controls
    split = split_dataset(users, seed=seed)
    digests = {
        "patterns": file_digest(patterns) if patterns else file_digest(
            asset_path("patterns", "diagnosis.txt")),
        "exclusions": file_digest(exclusions) if exclusions else file_digest(
            asset_path("patterns", "exclusions.txt")),
    }
    write_split(split, out, digests)
    click.echo(
        f"built corpus: {len(positives_users)} positive / {len(controls)} control users -> {out}"
    )


# ----------------------------------------------------------------------- extract

@main.command("extract")
@click.option("--corpus", required=True, type=click.Path(exists=True))
@click.option("--registry", "registry_path", type=click.Path(exists=True), default=None)
@click.option("--assets", "assets_dir", type=click.Path(exists=True), default=None)
@click.option("--mode", type=click.Choice(["user", "sentence"]), default="user",
              show_default=True)
@click.option("--workers", default=1, show_default=True,
              help="Worker processes; output is identical for any count.")
@click.option("--out", required=True, type=click.Path())
def extract_cmd(corpus, registry_path, assets_dir, mode, workers, out):
    """Write the feature matrix for a corpus."""
    extractor = _load_extractor(registry_path, assets_dir)
    users = _load_corpus_path(corpus)
    users.sort(key=lambda u: u.user_id)
    fingerprint = extractor.registry.fingerprint()
    codes = extractor.registry.codes
    if mode == "user":
        bundle = extract_bundle(users, extractor, n_workers=workers)
        write_user_matrix(out, codes, bundle.aggregate, bundle.user_ids,
                          bundle.labels.tolist(), fingerprint)
    else:
        series_list, labels = [], []
        for user in users:
            series_list.append(extractor.extract_user_series(user))
            labels.append(user.label)
        write_series_matrix(out, codes, series_list, labels, fingerprint)
    click.echo(f"wrote {mode} feature matrix for {len(users)} users -> {out}")


# ----------------------------------------------------------------------- contour

@main.command("contour")
@click.option("--corpus", required=True, type=click.Path(exists=True))
@click.option("--user", "user_id", required=True)
@click.option("--features", "feature_codes", required=True,
              help="Comma-separated feature codes, e.g. CS,bTTR.")
@click.option("--out", required=True, type=click.Path())
@click.option("--plot", "plot_path", type=click.Path(), default=None,
              help="Optional PNG of the contours (requires matplotlib).")
def contour_cmd(corpus, user_id, feature_codes, out, plot_path):
    """Per-sentence z-score contours for one user."""
    extractor = FeatureExtractor()
    users = {u.user_id: u for u in _load_corpus_path(corpus)}
    if user_id not in users:
        raise click.ClickException(f"user {user_id!r} not in corpus")
    codes = [c.strip() for c in feature_codes.split(",") if c.strip()]
    series = extractor.extract_user_series(users[user_id])
    rows = zscore_contour(series, codes, extractor.registry)
    with open(out, "w", encoding="utf-8") as fh:
        fh.write("sentence_index\tfeature\tz\n")
        for idx, code, z in rows:
            fh.write(f"{idx}\t{code}\t{'' if np.isnan(z) else repr(z)}\n")
    if plot_path:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        fig, ax = plt.subplots(figsize=(8, 3))
        for code in codes:
            pts = [(i, z) for i, c, z in rows if c == code and not np.isnan(z)]
            ax.plot([p[0] for p in pts], [p[1] for p in pts], marker="o", label=code)
        for b in series.post_boundaries[1:]:
            ax.axvline(b - 0.5, color="grey", lw=0.5, ls="--")
        ax.set_xlabel("sentence")
        ax.set_ylabel("z-score")
        ax.legend()
        fig.tight_layout()
        fig.savefig(plot_path, dpi=120)
    click.echo(f"wrote contour table for {user_id} -> {out}")


# ------------------------------------------------------------------------- train

_FAMILY_CHOICES = click.Choice(["lr", "rf", "svm", "gb", "bilstm"])


@main.command("train")
@click.option("--corpus", required=True, type=click.Path(exists=True),
              help="Split directory from build-corpus.")
@click.option("--model", "family", required=True, type=_FAMILY_CHOICES)
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
@click.option("--seed", default=0, show_default=True)
@click.option("--out", required=True, type=click.Path())
def train_cmd(corpus, family, config_path, seed, out):
    """Train one model family on a split and store the artifact."""
    raw = load_config(config_path) if config_path else {}
    params = model_params(family, raw)
    split = read_split(corpus)
    extractor = FeatureExtractor()
    result = run_indomain(split, ModelSpec(family, overrides=params), seed=seed,
                          extractor=extractor)
    out_dir = Path(out)
    out_dir.mkdir(parents=True, exist_ok=True)
    save_artifact(out_dir / "model.vscrn", result.model, result.standardizer,
                  result.manifest.registry_fingerprint)
    emit_report([result.metrics], None, result.manifest, out_dir)
    if result.train_log:
        (out_dir / "train_log.tsv").write_text(format_train_log(result.train_log),
                                               encoding="utf-8")
    click.echo(
        f"{family}: validation F1 {result.validation_f1:.3f}, "
        f"test F1 {result.metrics.f1:.3f} -> {out_dir}"
    )


# ---------------------------------------------------------------------- evaluate

@main.command("evaluate")
@click.option("--model-artifact", "artifact_path", required=True,
              type=click.Path(exists=True))
@click.option("--corpus", required=True, type=click.Path(exists=True))
@click.option("--out", required=True, type=click.Path())
def evaluate_cmd(artifact_path, corpus, out):
    """Evaluate a stored artifact on a corpus (test partition of a split)."""
    model, std, fingerprint = load_artifact(artifact_path)
    extractor = FeatureExtractor()
    if extractor.registry.fingerprint() != fingerprint:
        raise click.ClickException("registry fingerprint mismatch with artifact")
    p = Path(corpus)
    users = read_split(p).test if p.is_dir() else read_users(p)
    bundle = extract_bundle(users, extractor)
    family = model.family
    if family == "bilstm":
        scores = _scores(model, family, bundle.aggregate, _series_std(bundle.series, std))
    else:
        scores = _scores(model, family, std.apply(bundle.aggregate), None)
    pred = (scores >= 0.5).astype(np.int64)
    metrics = compute_metrics(bundle.labels, pred, family)
    manifest = RunManifest(
        corpus_digest=corpus_digest(users),
        registry_fingerprint=fingerprint,
        model_family=family,
        hyperparameters={},
        seed=0,
        counts={"evaluated": len(users)},
    )
    emit_report([metrics], None, manifest, out)
    click.echo(f"{family}: P {metrics.precision:.3f} R {metrics.recall:.3f} "
               f"F1 {metrics.f1:.3f} -> {out}")


# ----------------------------------------------------------------------- explain

@main.command("explain")
@click.option("--model-artifact", "artifact_path", required=True,
              type=click.Path(exists=True))
@click.option("--corpus", required=True, type=click.Path(exists=True),
              help="Split directory; surrogates are fit on training users.")
@click.option("--samples", default=1000, show_default=True)
@click.option("--budget", default=200, show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--out", required=True, type=click.Path())
def explain_cmd(artifact_path, corpus, samples, budget, seed, out):
    """Group-ablation importances plus an impurity table for an artifact."""
    model, std, fingerprint = load_artifact(artifact_path)
    extractor = FeatureExtractor()
    registry = extractor.registry
    if registry.fingerprint() != fingerprint:
        raise click.ClickException("registry fingerprint mismatch with artifact")
    p = Path(corpus)
    users = read_split(p).train if p.is_dir() else read_users(p)
    bundle = extract_bundle(users, extractor)
    family = model.family
    layout = make_group_layout(list(registry.group_columns()), registry.group_columns())
    if family == "bilstm":
        series = _series_std(bundle.series, std)
        X = np.vstack([s.mean(axis=0) for s in series])
        result = explain_model(
            lambda ss: model.predict_proba_batch(ss), X, layout,
            n_samples=samples, budget=budget, seed=seed, series=series,
        )
    else:
        X = std.apply(bundle.aggregate)
        result = explain_model(model.predict_proba, X, layout,
                               n_samples=samples, budget=budget, seed=seed)
    if family in ("rf", "gb"):
        _, mdi = mdi_importance(model)
    else:
        # impurity scores always come from a forest, whatever was explained
        companion = train_random_forest(
            std.apply(bundle.aggregate), bundle.labels, ForestParams(), seed=seed
        )
        _, mdi = mdi_importance(companion)
    directions = group_directions(bundle.aggregate, bundle.labels, registry)
    report = build_report(result.i_values, result.group_names, directions, mdi,
                          registry, explained_model=family)
    manifest = RunManifest(
        corpus_digest=corpus_digest(users),
        registry_fingerprint=fingerprint,
        model_family=family,
        hyperparameters={"samples": samples, "budget": budget},
        seed=seed,
        counts={"explained": len(result.picked_ids)},
    )
    out_dir = Path(out)
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "importance.json").write_text(
        json.dumps(
            {
                "groups": [
                    {"group": g.group, "i_value": g.i_value, "direction": g.direction}
                    for g in report.groups
                ],
                "mdi": [
                    {"code": m.code, "importance": m.importance} for m in report.mdi
                ],
                "manifest_digest": manifest.digest(),
            },
            sort_keys=True, indent=2,
        ) + "\n",
        encoding="utf-8",
    )
    (out_dir / "report.txt").write_text(
        f"# Feature-group importance (model: {report.explained_model})\n\n"
        + report.group_table()
        + "\n# Top features by mean decrease in impurity\n\n"
        + report.mdi_table(),
        encoding="utf-8",
    )
    manifest.save(out_dir / "run_manifest.json")
    click.echo(f"explained {family}; top group: {report.groups[0].display} -> {out}")


# --------------------------------------------------------------------------- ood

@main.command("ood")
@click.option("--train-corpus", required=True, type=click.Path(exists=True),
              help="Split directory for the in-domain run.")
@click.option("--test-corpus", required=True, type=click.Path(exists=True))
@click.option("--model", "family", required=True, type=_FAMILY_CHOICES)
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
@click.option("--n", "n_per_class", default=1000, show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--out", required=True, type=click.Path())
def ood_cmd(train_corpus, test_corpus, family, config_path, n_per_class, seed, out):
    """Train in-domain, evaluate on another corpus, report the F1 change."""
    raw = load_config(config_path) if config_path else {}
    params = model_params(family, raw)
    split = read_split(train_corpus)
    extractor = FeatureExtractor()
    indomain = run_indomain(split, ModelSpec(family, overrides=params), seed=seed,
                            extractor=extractor)
    test_users = _load_corpus_path(test_corpus)
    row = run_ood(indomain, test_users, n_per_class=n_per_class, seed=seed,
                  extractor=extractor)
    emit_report([indomain.metrics, row], None, indomain.manifest, out)
    click.echo(
        f"{family}: in-domain F1 {indomain.metrics.f1:.3f}, "
        f"ood F1 {row.f1:.3f}, change {row.change_f1:+.3f} -> {out}"
    )


if __name__ == "__main__":
    sys.exit(main())
