"""Per-user BPTT training with AdamW, the one-cycle schedule, early stopping."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .bilstm import BiLstmConfig, BiLstmModel, ParamVector, bce_loss, init_params, prepare_input
from .schedule import OneCycleConfig, onecycle_lr

log = logging.getLogger(__name__)


@dataclass
class TrainConfig:
    epochs: int = 60
    seed: int = 0
    adam_beta1: float = 0.9
    adam_beta2: float = 0.999
    adam_eps: float = 1e-8
    weight_decay: float = 0.01
    patience: int = 5
    min_delta: float = 1e-4  # improvements below this don't reset patience
    schedule: OneCycleConfig = field(default_factory=OneCycleConfig)

    def __post_init__(self):
        if self.patience < 1:
            raise ValueError("patience must be at least 1")
        if not 1 <= self.epochs <= 60:
            raise ValueError("epochs must lie in [1, 60]")


class AdamW:
    """Decoupled weight decay Adam over one flat parameter vector.

    All state and scratch buffers are preallocated; a step makes no
    allocations, which matters at batch size 1.
    """

    def __init__(self, flat: np.ndarray, cfg: TrainConfig):
        self.cfg = cfg
        self.m = np.zeros_like(flat)
        self.v = np.zeros_like(flat)
        self.buf = np.empty_like(flat)
        self.t = 0

    def step(self, flat: np.ndarray, grad: np.ndarray, lr: float):
        c = self.cfg
        self.t += 1
        m, v, buf = self.m, self.v, self.buf
        # m += (1-b1)(g - m);  v += (1-b2)(g^2 - v)
        np.subtract(grad, m, out=buf)
        buf *= 1.0 - c.adam_beta1
        m += buf
        np.multiply(grad, grad, out=buf)
        buf -= v
        buf *= 1.0 - c.adam_beta2
        v += buf
        bc1 = 1.0 - c.adam_beta1**self.t
        bc2 = 1.0 - c.adam_beta2**self.t
        # update = (m/bc1) / (sqrt(v/bc2) + eps)
        np.divide(v, bc2, out=buf)
        np.sqrt(buf, out=buf)
        buf += c.adam_eps
        np.divide(m, buf, out=buf)
        flat *= 1.0 - lr * c.weight_decay
        buf *= lr / bc1
        flat -= buf


@dataclass
class TrainLogRow:
    epoch: int
    train_loss: float
    val_loss: float
    lr: float


def dataset_loss(model: BiLstmModel, data: list[tuple[np.ndarray, int]]) -> float:
    total = 0.0
    for series, y in data:
        total += bce_loss(model.forward(series, training=False), float(y))
    return total / len(data)


def train_bilstm(
    train: list[tuple[np.ndarray, int]],
    val: list[tuple[np.ndarray, int]],
    tcfg: TrainConfig,
    mcfg: BiLstmConfig,
) -> tuple[BiLstmModel, list[TrainLogRow]]:
    """Returns the checkpoint with the lowest validation loss and the log.

    Sequences are visited one user at a time in a seeded shuffled order;
    the schedule steps once per sequence.
    """
    if not train or not val:
        raise ValueError("train and validation sets must be non-empty")
    params = init_params(mcfg, tcfg.seed)
    model = BiLstmModel(config=mcfg, params=params)
    optimizer = AdamW(params.flat, tcfg)
    grad = ParamVector(mcfg)
    shuffle_rng = np.random.default_rng(tcfg.seed + 1)
    dropout_rng = np.random.default_rng(tcfg.seed + 2)

    # pre-truncate/clean once so epochs don't redo the work
    train_prep = [(prepare_input(s, mcfg), int(y)) for s, y in train]
    val_prep = [(prepare_input(s, mcfg), int(y)) for s, y in val]

    total_steps = tcfg.epochs * len(train_prep)
    step = 0
    best_val = np.inf
    best_flat: np.ndarray | None = None
    best_epoch = 0
    rows: list[TrainLogRow] = []
    order = np.arange(len(train_prep))
    for epoch in range(1, tcfg.epochs + 1):
        shuffle_rng.shuffle(order)
        running = 0.0
        lr = onecycle_lr(step, total_steps, tcfg.schedule)
        for i in order:
            series, y = train_prep[i]
            lr = onecycle_lr(step, total_steps, tcfg.schedule)
            prob, cache = model.forward(
                series, training=True, dropout_rng=dropout_rng, return_cache=True
            )
            loss = bce_loss(prob, float(y))
            if not np.isfinite(loss):
                raise RuntimeError(
                    f"training diverged at epoch {epoch}, step {step}: loss={loss}"
                )
            running += loss
            model.backward(cache, float(y), out=grad)
            optimizer.step(params.flat, grad.flat, lr)
            step += 1
        train_loss = running / len(train_prep)
        val_loss = dataset_loss(model, val_prep)
        rows.append(TrainLogRow(epoch=epoch, train_loss=train_loss,
                                val_loss=val_loss, lr=lr))
        log.info("epoch %d train %.4f val %.4f lr %.2e", epoch, train_loss, val_loss, lr)
        if val_loss < best_val - tcfg.min_delta:
            best_val = val_loss
            best_flat = params.flat.copy()
            best_epoch = epoch
        elif epoch - best_epoch >= tcfg.patience:
            log.info("early stop at epoch %d (best epoch %d)", epoch, best_epoch)
            break
    assert best_flat is not None
    return BiLstmModel(config=mcfg, params=ParamVector(mcfg, best_flat)), rows


def predict_bilstm(model: BiLstmModel, series_matrix: np.ndarray) -> float:
    return model.forward(series_matrix, training=False)


def predict_bilstm_batch(model: BiLstmModel, series_list: list[np.ndarray]) -> np.ndarray:
    return np.array([model.forward(s, training=False) for s in series_list])


def format_train_log(rows: list[TrainLogRow]) -> str:
    out = ["epoch\ttrain_loss\tval_loss\tlr"]
    for r in rows:
        out.append(f"{r.epoch}\t{r.train_loss!r}\t{r.val_loss!r}\t{r.lr!r}")
    return "\n".join(out) + "\n"
