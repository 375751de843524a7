"""Interpretable linguistic screening toolkit.

Builds labeled corpora from self-reported diagnoses in social media dumps,
computes an eight-group per-sentence linguistic feature profile, trains
shallow and recurrent classifiers, and explains predictions with
group-ablation surrogates and impurity-based importances.
"""

__version__ = "0.1.0"
