"""Built-in air-conditioner fan controller and its temperature/speed curve."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .defuzz import WablParams
from .errors import FuzzyError
from .fuzzy_num import PiecewiseLinearMF
from .inference import LinguisticVariable, Rule, RuleBase, infer

TEMPERATURE_UNIVERSE = (0.0, 60.0)
SPEED_UNIVERSE = (0.0, 1000.0)

# c_left = 0.5, m = 2 reproduces the worked example (400 and 766.67 rot/min)
DEFAULT_PARAMS = WablParams(0.5, 0.5, 2.0)
DEFAULT_NORMALIZE = False


def build_conditioner() -> RuleBase:
    t_terms = (
        ("lower", [(12, 1), (20, 0)]),
        ("middle", [(12, 0), (20, 1), (30, 0)]),
        ("higher", [(20, 0), (30, 1)]),
    )
    v_terms = (
        ("lower", [(200, 1), (400, 0)]),
        ("middle", [(200, 0), (400, 1), (600, 0)]),
        ("higher", [(400, 0), (600, 1)]),
    )
    temperature = LinguisticVariable(
        "temperature",
        TEMPERATURE_UNIVERSE,
        tuple((n, PiecewiseLinearMF(p, TEMPERATURE_UNIVERSE, f"temperature.{n}")) for n, p in t_terms),
        units="degC",
    )
    speed = LinguisticVariable(
        "speed",
        SPEED_UNIVERSE,
        tuple((n, PiecewiseLinearMF(p, SPEED_UNIVERSE, f"speed.{n}")) for n, p in v_terms),
        units="rot/min",
    )
    rules = tuple(Rule((("temperature", n),), ("speed", n)) for n in ("lower", "middle", "higher"))
    return RuleBase((temperature,), speed, rules)


@dataclass(frozen=True)
class ResponseCurve:
    samples: tuple[tuple[float, float], ...]
    params: WablParams

    @property
    def t(self) -> list[float]:
        return [s[0] for s in self.samples]

    @property
    def v(self) -> list[float]:
        return [s[1] for s in self.samples]


def response_curve(rb: RuleBase, params: WablParams, t_grid: Sequence[float],
                   normalize: bool = False, input_name: str | None = None) -> ResponseCurve:
    """Crisp output at each grid point of the (single) input variable."""
    if input_name is None:
        if len(rb.inputs) != 1:
            raise FuzzyError("response curves need a single-input rule base or an explicit input name")
        input_name = rb.inputs[0].name
    grid = [float(t) for t in t_grid]
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise FuzzyError("response-curve grid must be strictly increasing")
    samples = []
    for t in grid:
        try:
            out = infer(rb, {input_name: t}, params, normalize).crisp_output
        except FuzzyError as exc:
            raise type(exc)(f"at {input_name}={t}: {exc}") from exc
        samples.append((t, out))
    return ResponseCurve(tuple(samples), params)


def linear_grid(start: float, stop: float, steps: int) -> list[float]:
    """``steps + 1`` evenly spaced points; a single point when start == stop."""
    if start == stop:
        return [float(start)]
    return [start + (stop - start) * i / steps for i in range(steps + 1)]
