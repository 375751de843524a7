"""One-cycle learning-rate policy with linear ramps."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class OneCycleConfig:
    max_lr: float = 0.01
    warmup_fraction: float = 0.3
    initial_div: float = 25.0
    final_div: float = 1e4

    def __post_init__(self):
        if not 0.0 < self.warmup_fraction < 1.0:
            raise ValueError("warmup_fraction must be in (0, 1)")
        if min(self.max_lr, self.initial_div, self.final_div) <= 0:
            raise ValueError("rates and divisors must be positive")


def onecycle_lr(step: int, total_steps: int, cfg: OneCycleConfig) -> float:
    """Linear rise to max_lr over the warmup fraction, then linear decay.

    Starts at max_lr/initial_div and ends at that start value divided again
    by final_div.
    """
    if total_steps <= 0:
        raise ValueError("total_steps must be positive")
    if not 0 <= step <= total_steps:
        raise ValueError(f"step {step} outside [0, {total_steps}]")
    start = cfg.max_lr / cfg.initial_div
    end = start / cfg.final_div
    up = cfg.warmup_fraction * total_steps
    if step <= up:
        return start + (cfg.max_lr - start) * (step / up)
    return cfg.max_lr + (end - cfg.max_lr) * ((step - up) / (total_steps - up))
