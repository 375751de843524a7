"""Stacked bidirectional LSTM over per-sentence feature vectors.

Forward runs per user sequence (no cross-user batching); input projections
for a whole sequence are computed as one matmul so only the hidden-to-hidden
recurrence steps through time. The classifier head takes the concatenated
final forward/backward hidden states through three PReLU layers to a
sigmoid. Backward is exact backpropagation through time over every
parameter tensor.

All parameters live in one flat vector with named views, so the optimizer
and the gradient buffers touch contiguous memory. Training defaults to
float32; gradient checks run the same code in float64.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

# gate layout within the 4H axis: [input, forget, candidate, output]


def _sigmoid_(z: np.ndarray) -> np.ndarray:
    """In-place stable sigmoid."""
    np.clip(z, -60.0, 60.0, out=z)
    np.negative(z, out=z)
    np.exp(z, out=z)
    z += 1.0
    np.reciprocal(z, out=z)
    return z


def _sigmoid_scalar(z: float) -> float:
    if z >= 0:
        return 1.0 / (1.0 + np.exp(-min(z, 60.0)))
    ez = np.exp(max(z, -60.0))
    return ez / (1.0 + ez)


@dataclass
class BiLstmConfig:
    input_dim: int
    layers: int = 3
    hidden: int = 256
    head_width: int = 512
    head_layers: int = 3
    dropout: float = 0.2
    max_sentences: int = 200
    prelu_init: float = 0.25
    dtype: str = "float32"

    def __post_init__(self):
        for name in ("input_dim", "layers", "hidden", "head_width", "head_layers",
                     "max_sentences"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if not 0.0 <= self.dropout < 1.0:
            raise ValueError("dropout must be in [0, 1)")
        if self.dtype not in ("float32", "float64"):
            raise ValueError("dtype must be float32 or float64")

    @property
    def np_dtype(self):
        return np.float32 if self.dtype == "float32" else np.float64


def _param_shapes(cfg: BiLstmConfig) -> list[tuple[str, tuple[int, ...]]]:
    H = cfg.hidden
    shapes: list[tuple[str, tuple[int, ...]]] = []
    for layer in range(cfg.layers):
        d_in = cfg.input_dim if layer == 0 else 2 * H
        for d in ("f", "b"):
            shapes.append((f"Wx{layer}{d}", (d_in, 4 * H)))
            shapes.append((f"Wh{layer}{d}", (H, 4 * H)))
            shapes.append((f"b{layer}{d}", (4 * H,)))
    d_in = 2 * H
    for k in range(cfg.head_layers):
        shapes.append((f"Hw{k}", (d_in, cfg.head_width)))
        shapes.append((f"Hb{k}", (cfg.head_width,)))
        shapes.append((f"Ha{k}", (1,)))
        d_in = cfg.head_width
    shapes.append(("Ow", (d_in, 1)))
    shapes.append(("Ob", (1,)))
    return shapes


class ParamVector:
    """One contiguous parameter array plus named tensor views into it."""

    def __init__(self, cfg: BiLstmConfig, flat: np.ndarray | None = None):
        self.shapes = _param_shapes(cfg)
        total = sum(int(np.prod(s)) for _, s in self.shapes)
        if flat is None:
            flat = np.zeros(total, dtype=cfg.np_dtype)
        if flat.shape != (total,):
            raise ValueError(f"flat vector must have {total} entries")
        self.flat = flat
        self.views: dict[str, np.ndarray] = {}
        offset = 0
        for name, shape in self.shapes:
            size = int(np.prod(shape))
            self.views[name] = flat[offset : offset + size].reshape(shape)
            offset += size

    def __getitem__(self, name: str) -> np.ndarray:
        return self.views[name]

    def copy(self, cfg: BiLstmConfig) -> "ParamVector":
        return ParamVector(cfg, self.flat.copy())


def init_params(cfg: BiLstmConfig, seed: int) -> ParamVector:
    """Uniform +-1/sqrt(hidden) recurrent init, forget-gate bias +1."""
    rng = np.random.default_rng(seed)
    H = cfg.hidden
    pv = ParamVector(cfg)
    bound = 1.0 / np.sqrt(H)
    for layer in range(cfg.layers):
        for d in ("f", "b"):
            for w in (f"Wx{layer}{d}", f"Wh{layer}{d}"):
                pv[w][:] = rng.uniform(-bound, bound, size=pv[w].shape)
            pv[f"b{layer}{d}"][H : 2 * H] = 1.0  # forget gate starts open
    for k in range(cfg.head_layers):
        hw = pv[f"Hw{k}"]
        hb = 1.0 / np.sqrt(hw.shape[0])
        hw[:] = rng.uniform(-hb, hb, size=hw.shape)
        pv[f"Ha{k}"][:] = cfg.prelu_init
    ow = pv["Ow"]
    ob = 1.0 / np.sqrt(ow.shape[0])
    ow[:] = rng.uniform(-ob, ob, size=ow.shape)
    return pv


def prepare_input(series_matrix: np.ndarray, cfg: BiLstmConfig) -> np.ndarray:
    """Truncate to the sentence cap, map missing sentinels to 0, cast."""
    X = np.asarray(series_matrix, dtype=np.float64)
    if X.ndim != 2 or X.shape[1] != cfg.input_dim:
        raise ValueError(f"expected (*, {cfg.input_dim}) feature rows, got {X.shape}")
    X = X[: cfg.max_sentences]
    return np.where(np.isnan(X), 0.0, X).astype(cfg.np_dtype)


def _run_direction(seq: np.ndarray, Wx, Wh, b, H: int):
    """One direction over `seq` (already in processing order)."""
    L = seq.shape[0]
    gates = seq @ Wx
    gates += b
    c_all = np.empty((L, H), dtype=seq.dtype)
    tc_all = np.empty((L, H), dtype=seq.dtype)
    h_all = np.empty((L, H), dtype=seq.dtype)
    h = np.zeros(H, dtype=seq.dtype)
    c = np.zeros(H, dtype=seq.dtype)
    for t in range(L):
        g = gates[t]
        g += h @ Wh
        gi = _sigmoid_(g[:H])
        gf = _sigmoid_(g[H : 2 * H])
        gg = np.tanh(g[2 * H : 3 * H], out=g[2 * H : 3 * H])
        go = _sigmoid_(g[3 * H :])
        c = gf * c
        c += gi * gg
        tc = np.tanh(c, out=tc_all[t])
        h = go * tc
        c_all[t] = c
        h_all[t] = h
    return gates, c_all, tc_all, h_all


def _direction_backward(seq, gates, c_all, tc_all, h_all, d_h_ext, Wx, Wh, H,
                        out_dWx, out_dWh, out_db, out_dseq):
    """BPTT for one direction, writing into preallocated gradient views."""
    L = seq.shape[0]
    dG = np.empty((L, 4 * H), dtype=seq.dtype)
    dh_rec = np.zeros(H, dtype=seq.dtype)
    dc_rec = np.zeros(H, dtype=seq.dtype)
    WhT = Wh.T
    zeros = np.zeros(H, dtype=seq.dtype)
    for t in range(L - 1, -1, -1):
        g = gates[t]
        gi = g[:H]
        gf = g[H : 2 * H]
        gg = g[2 * H : 3 * H]
        go = g[3 * H :]
        tc = tc_all[t]
        c_prev = c_all[t - 1] if t > 0 else zeros
        dh = d_h_ext[t] + dh_rec
        do = dh * tc
        dc = dh * go
        dc *= 1.0 - tc * tc
        dc += dc_rec
        row = dG[t]
        row[:H] = dc * gg * gi * (1.0 - gi)
        row[H : 2 * H] = dc * c_prev * gf * (1.0 - gf)
        row[2 * H : 3 * H] = dc * gi * (1.0 - gg * gg)
        row[3 * H :] = do * go * (1.0 - go)
        dc_rec = dc * gf
        dh_rec = row @ WhT
    np.matmul(seq.T, dG, out=out_dWx)
    # h_prev rows: zero, then h_0 .. h_{L-2}
    np.matmul(h_all[: L - 1].T, dG[1:], out=out_dWh) if L > 1 else out_dWh.fill(0.0)
    dG.sum(axis=0, out=out_db)
    np.matmul(dG, Wx.T, out=out_dseq[:L])
    return out_dseq[:L]


@dataclass
class BiLstmModel:
    config: BiLstmConfig
    params: ParamVector
    family: str = field(default="bilstm", init=False)

    # ---------------------------------------------------------------- forward

    def forward(
        self,
        series_matrix: np.ndarray,
        training: bool = False,
        dropout_rng: np.random.Generator | None = None,
        return_cache: bool = False,
    ):
        cfg = self.config
        H = cfg.hidden
        X = prepare_input(series_matrix, cfg)
        L = X.shape[0]
        p = self.params
        cache: dict = {"X": X, "layers": [], "masks": []}
        inp = X
        for layer in range(cfg.layers):
            gf_, cf_, tcf_, hf_ = _run_direction(
                inp, p[f"Wx{layer}f"], p[f"Wh{layer}f"], p[f"b{layer}f"], H
            )
            # contiguous copy: negative-stride views hit a slow matmul path
            rev = np.ascontiguousarray(inp[::-1])
            gb_, cb_, tcb_, hb_ = _run_direction(
                rev, p[f"Wx{layer}b"], p[f"Wh{layer}b"], p[f"b{layer}b"], H
            )
            out = np.empty((L, 2 * H), dtype=X.dtype)
            out[:, :H] = hf_
            out[:, H:] = hb_[::-1]
            if training and cfg.dropout > 0.0:
                if dropout_rng is None:
                    raise ValueError("training forward needs a dropout rng")
                mask = (
                    dropout_rng.random(out.shape) >= cfg.dropout
                ).astype(X.dtype) / np.asarray(1.0 - cfg.dropout, dtype=X.dtype)
                out *= mask
            else:
                mask = None
            cache["layers"].append(
                {"in": inp, "in_rev": rev, "gf": gf_, "cf": cf_, "tcf": tcf_, "hf": hf_,
                 "gb": gb_, "cb": cb_, "tcb": tcb_, "hb": hb_, "out": out}
            )
            cache["masks"].append(mask)
            inp = out
        # final vector: forward last state and backward last state
        final = np.empty(2 * H, dtype=X.dtype)
        final[:H] = inp[L - 1, :H]
        final[H:] = inp[0, H:]
        cache["final"] = final
        v = final
        head = []
        for k in range(cfg.head_layers):
            z = v @ p[f"Hw{k}"] + p[f"Hb{k}"]
            a = float(p[f"Ha{k}"][0])
            act = np.where(z > 0, z, a * z)
            head.append({"v": v, "z": z, "act": act})
            v = act
        logit = float(v @ p["Ow"][:, 0] + p["Ob"][0])
        cache["head"] = head
        cache["head_out"] = v
        cache["logit"] = logit
        prob = _sigmoid_scalar(logit)
        if return_cache:
            return prob, cache
        return prob

    # --------------------------------------------------------------- backward

    def backward(self, cache: dict, y: float, out: ParamVector | None = None) -> ParamVector:
        """BCE gradients at the cached forward pass, into `out` (allocated if None)."""
        cfg = self.config
        H = cfg.hidden
        p = self.params
        if out is None:
            out = ParamVector(cfg)
        g = out
        dlogit = _sigmoid_scalar(cache["logit"]) - y

        v = cache["head_out"]
        np.multiply(v[:, None], dlogit, out=g["Ow"])
        g["Ob"][0] = dlogit
        dv = p["Ow"][:, 0] * np.asarray(dlogit, dtype=v.dtype)
        for k in range(cfg.head_layers - 1, -1, -1):
            hd = cache["head"][k]
            a = float(p[f"Ha{k}"][0])
            neg = hd["z"] <= 0
            dz = dv * np.where(neg, a, 1.0).astype(v.dtype)
            g[f"Ha{k}"][0] = float((dv * np.where(neg, hd["z"], 0.0)).sum())
            np.matmul(hd["v"][:, None], dz[None, :], out=g[f"Hw{k}"])
            g[f"Hb{k}"][:] = dz
            dv = p[f"Hw{k}"] @ dz

        L = cache["X"].shape[0]
        d_out = np.zeros((L, 2 * H), dtype=cache["X"].dtype)
        d_out[L - 1, :H] = dv[:H]
        d_out[0, H:] = dv[H:]
        buf_a = np.empty((L, 2 * H), dtype=cache["X"].dtype)
        for layer in range(cfg.layers - 1, -1, -1):
            lc = cache["layers"][layer]
            mask = cache["masks"][layer]
            if mask is not None:
                d_out *= mask
            din_f = np.empty((L, lc["in"].shape[1]), dtype=cache["X"].dtype)
            din_b = np.empty((L, lc["in"].shape[1]), dtype=cache["X"].dtype)
            _direction_backward(
                lc["in"], lc["gf"], lc["cf"], lc["tcf"], lc["hf"],
                d_out[:, :H], p[f"Wx{layer}f"], p[f"Wh{layer}f"], H,
                g[f"Wx{layer}f"], g[f"Wh{layer}f"], g[f"b{layer}f"], din_f,
            )
            _direction_backward(
                lc["in_rev"], lc["gb"], lc["cb"], lc["tcb"], lc["hb"],
                np.ascontiguousarray(d_out[::-1, H:]), p[f"Wx{layer}b"],
                p[f"Wh{layer}b"], H,
                g[f"Wx{layer}b"], g[f"Wh{layer}b"], g[f"b{layer}b"], din_b,
            )
            if layer > 0:
                d_out = np.add(din_f, din_b[::-1], out=buf_a[:, : din_f.shape[1]])
        return out

    # ------------------------------------------------------------- prediction

    def predict_proba_series(self, series_matrix: np.ndarray) -> float:
        return self.forward(series_matrix, training=False)

    def predict_proba_batch(self, series_list: list[np.ndarray]) -> np.ndarray:
        return np.array([self.forward(s, training=False) for s in series_list])

    # ---------------------------------------------------------- serialization

    def to_payload(self) -> dict:
        from ..mlcore.artifact import encode_array

        return {
            "config": {
                "input_dim": self.config.input_dim,
                "layers": self.config.layers,
                "hidden": self.config.hidden,
                "head_width": self.config.head_width,
                "head_layers": self.config.head_layers,
                "dropout": self.config.dropout,
                "max_sentences": self.config.max_sentences,
                "prelu_init": self.config.prelu_init,
                "dtype": self.config.dtype,
            },
            "params": {
                k: encode_array(v.astype(np.float64)) for k, v in sorted(self.params.views.items())
            },
        }

    @classmethod
    def from_payload(cls, payload: dict) -> "BiLstmModel":
        from ..mlcore.artifact import decode_array

        cfg = BiLstmConfig(**payload["config"])
        pv = ParamVector(cfg)
        for k, enc in payload["params"].items():
            pv[k][:] = decode_array(enc).astype(cfg.np_dtype)
        return cls(config=cfg, params=pv)


def bce_loss(prob: float, y: float) -> float:
    eps = 1e-12
    p = min(max(prob, eps), 1.0 - eps)
    return -(y * np.log(p) + (1.0 - y) * np.log(1.0 - p))
