"""Shallow classifiers at the reference hyperparameters, plus MDI importances."""

from .artifact import decode_array, encode_array, load_artifact, save_artifact
from .forest import ForestModel, ForestParams, mdi_importance, train_random_forest
from .gbm import GbmModel, GbmParams, train_gradient_boosting
from .logistic import (
    LinearModel,
    full_objective,
    sigmoid,
    smooth_loss_grad,
    train_logistic_elastic,
)
from .predict import predict, predict_proba
from .standardizer import Standardizer, apply_standardizer, fit_standardizer
from .svm import SvmModel, gamma_scale, kkt_violation, rbf_kernel, train_svm_rbf
from .trees import Tree, grow_tree, tree_impurity_decrease

__all__ = [
    "ForestModel",
    "ForestParams",
    "GbmModel",
    "GbmParams",
    "LinearModel",
    "Standardizer",
    "SvmModel",
    "Tree",
    "apply_standardizer",
    "decode_array",
    "encode_array",
    "fit_standardizer",
    "full_objective",
    "gamma_scale",
    "grow_tree",
    "kkt_violation",
    "load_artifact",
    "mdi_importance",
    "predict",
    "predict_proba",
    "rbf_kernel",
    "save_artifact",
    "sigmoid",
    "smooth_loss_grad",
    "train_gradient_boosting",
    "train_logistic_elastic",
    "train_random_forest",
    "train_svm_rbf",
    "tree_impurity_decrease",
]
