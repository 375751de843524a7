"""Recurrent sequence classifier over sentence feature series."""

from .bilstm import BiLstmConfig, BiLstmModel, ParamVector, bce_loss, init_params, prepare_input
from .schedule import OneCycleConfig, onecycle_lr
from .train import (
    AdamW,
    TrainConfig,
    TrainLogRow,
    dataset_loss,
    format_train_log,
    predict_bilstm,
    predict_bilstm_batch,
    train_bilstm,
)

__all__ = [
    "AdamW",
    "BiLstmConfig",
    "BiLstmModel",
    "OneCycleConfig",
    "ParamVector",
    "TrainConfig",
    "TrainLogRow",
    "bce_loss",
    "dataset_loss",
    "format_train_log",
    "init_params",
    "onecycle_lr",
    "predict_bilstm",
    "predict_bilstm_batch",
    "prepare_input",
    "train_bilstm",
]
