"""First-order room model under fuzzy-WABL or bang-bang thermostat control.

Plant: ``dT/dt = alpha * (t_outside - T) - beta * v`` with fan speed ``v``,
integrated by explicit Euler with step ``dt`` (minutes).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .defuzz import WablParams
from .errors import ConfigError, FuzzyError, MetricsWindowError
from .inference import RuleBase, infer

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimConfig:
    t_outside: float = 35.0
    alpha: float = 0.1
    beta: float = 0.002
    dt: float = 0.1
    horizon: float = 600.0
    t_initial: float = 30.0
    thermostat_setpoint: float = 24.0
    thermostat_hysteresis: float = 1.0
    thermostat_speed: float = 800.0

    def __post_init__(self):
        if not self.alpha > 0:
            raise ConfigError(f"alpha must be > 0, got {self.alpha}")
        if not self.beta >= 0:
            raise ConfigError(f"beta must be >= 0, got {self.beta}")
        if not self.dt > 0:
            raise ConfigError(f"dt must be > 0, got {self.dt}")
        if not self.dt * self.alpha < 1:
            raise ConfigError(f"dt * alpha must be < 1 for a stable step, got {self.dt * self.alpha}")
        if not self.horizon >= 0:
            raise ConfigError(f"horizon must be >= 0, got {self.horizon}")
        if not self.thermostat_hysteresis > 0:
            raise ConfigError(f"thermostat_hysteresis must be > 0, got {self.thermostat_hysteresis}")

    @property
    def n_steps(self) -> int:
        return int(round(self.horizon / self.dt))


@dataclass(frozen=True)
class SimTrace:
    time: np.ndarray
    temperature: np.ndarray
    fan_speed: np.ndarray
    controller: str

    def __len__(self) -> int:
        return len(self.time)

    @property
    def mean_fan_speed(self) -> float:
        return float(np.mean(self.fan_speed))


def plant_step(T: float, v: float, cfg: SimConfig) -> float:
    return T + cfg.dt * (cfg.alpha * (cfg.t_outside - T) - cfg.beta * v)


def _run(cfg: SimConfig, controller, tag: str) -> SimTrace:
    n = cfg.n_steps
    temps = np.empty(n + 1)
    speeds = np.empty(n + 1)
    T = cfg.t_initial
    for i in range(n + 1):
        v = controller(T)
        temps[i] = T
        speeds[i] = v
        T = plant_step(T, v, cfg)
    return SimTrace(np.arange(n + 1) * cfg.dt, temps, speeds, tag)


def run_fuzzy(cfg: SimConfig, rb: RuleBase, params: WablParams, normalize: bool = False) -> SimTrace:
    if len(rb.inputs) != 1:
        raise FuzzyError("closed-loop simulation needs a single-input rule base")
    var = rb.inputs[0]
    lo, hi = var.universe
    warned = False

    def control(T: float) -> float:
        nonlocal warned
        if not lo <= T <= hi:
            if not warned:
                log.warning("temperature %.4g outside %s universe [%g, %g]; clamping controller input",
                            T, var.name, lo, hi)
                warned = True
            T = min(max(T, lo), hi)
        return infer(rb, {var.name: T}, params, normalize).crisp_output

    return _run(cfg, control, "fuzzy")


def run_thermostat(cfg: SimConfig) -> SimTrace:
    """Bang-bang fan: on at ``setpoint + h``, off at ``setpoint - h``, else hold."""
    on_at = cfg.thermostat_setpoint + cfg.thermostat_hysteresis
    off_at = cfg.thermostat_setpoint - cfg.thermostat_hysteresis
    state = False

    def control(T: float) -> float:
        nonlocal state
        if T >= on_at:
            state = True
        elif T <= off_at:
            state = False
        return cfg.thermostat_speed if state else 0.0

    return _run(cfg, control, "thermostat")


def oscillation_metric(trace: SimTrace, window: float) -> tuple[float, float]:
    """Peak-to-peak and mean absolute deviation of temperature over the tail window."""
    duration = float(trace.time[-1] - trace.time[0]) if len(trace) else 0.0
    if not 0 < window <= duration:
        raise MetricsWindowError(
            f"metrics window {window} min must be positive and no longer than the trace ({duration} min)"
        )
    start = trace.time[-1] - window
    tail = trace.temperature[trace.time >= start - 1e-9]
    return float(np.ptp(tail)), float(np.mean(np.abs(tail - tail.mean())))

