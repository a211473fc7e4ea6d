"""JSON documents for controllers (rule bases) and simulation configs.

Controller document, ``version`` 1::

    {
      "version": 1,
      "inputs": [{"name": "temperature", "units": "degC", "universe": [0, 60],
                  "terms": {"lower": [[12, 1], [20, 0]], ...}}],
      "output": {"name": "speed", "units": "rot/min", "universe": [0, 1000],
                 "terms": {...}},
      "rules": [{"if": [{"var": "temperature", "term": "lower"}], "then": "lower"}],
      "defaults": {"c_left": 0.5, "c_right": 0.5, "m": 2, "normalize": false}
    }

Each term is a membership-function literal: ``[x, mu]`` pairs over the
variable's universe.  ``units`` and ``defaults`` (and each key inside it) are
optional.  Simulation documents carry ``version`` plus any ``SimConfig``
field.  Unknown keys are rejected with their JSON path.
"""
from __future__ import annotations

import dataclasses
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .defuzz import WablParams
from .errors import ConfigError, FuzzyError
from .fuzzy_num import PiecewiseLinearMF
from .inference import LinguisticVariable, Rule, RuleBase
from .scenarios import DEFAULT_NORMALIZE, DEFAULT_PARAMS
from .thermal_sim import SimConfig

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class ControllerDocument:
    rule_base: RuleBase
    params: WablParams = DEFAULT_PARAMS
    normalize: bool = DEFAULT_NORMALIZE
    version: int = SCHEMA_VERSION


def _keys(obj: Any, path: str, required: set[str], optional: set[str] = frozenset()) -> dict:
    if not isinstance(obj, dict):
        raise ConfigError(f"{path}: expected an object")
    for key in obj:
        if key not in required | optional:
            raise ConfigError(f"{path}.{key}: unknown field")
    for key in sorted(required):
        if key not in obj:
            raise ConfigError(f"{path}.{key}: missing required field")
    return obj


def _number(obj: Any, path: str) -> float:
    if isinstance(obj, bool) or not isinstance(obj, (int, float)) or not math.isfinite(obj):
        raise ConfigError(f"{path}: expected a finite number, got {obj!r}")
    return float(obj)


def _string(obj: Any, path: str) -> str:
    if not isinstance(obj, str) or not obj:
        raise ConfigError(f"{path}: expected a non-empty string, got {obj!r}")
    return obj


def _version(doc: dict, path: str) -> int:
    version = doc.get("version")
    if version != SCHEMA_VERSION:
        raise ConfigError(f"{path}.version: unsupported version {version!r} (expected {SCHEMA_VERSION})")
    return version


def _variable(obj: Any, path: str) -> LinguisticVariable:
    obj = _keys(obj, path, {"name", "universe", "terms"}, {"units"})
    name = _string(obj["name"], f"{path}.name")
    uni = obj["universe"]
    if not isinstance(uni, list) or len(uni) != 2:
        raise ConfigError(f"{path}.universe: expected [lo, hi]")
    universe = (_number(uni[0], f"{path}.universe[0]"), _number(uni[1], f"{path}.universe[1]"))
    if not universe[0] < universe[1]:
        raise ConfigError(f"{path}.universe: lo must be below hi")
    if not isinstance(obj["terms"], dict) or not obj["terms"]:
        raise ConfigError(f"{path}.terms: expected a non-empty object")
    terms = []
    for tname, pts in obj["terms"].items():
        tpath = f"{path}.terms.{tname}"
        if not isinstance(pts, list) or not pts:
            raise ConfigError(f"{tpath}: expected a list of [x, mu] pairs")
        pairs = []
        for i, pair in enumerate(pts):
            if not isinstance(pair, list) or len(pair) != 2:
                raise ConfigError(f"{tpath}[{i}]: expected [x, mu]")
            pairs.append((_number(pair[0], f"{tpath}[{i}][0]"), _number(pair[1], f"{tpath}[{i}][1]")))
        try:
            terms.append((tname, PiecewiseLinearMF(tuple(pairs), universe, f"{name}.{tname}")))
        except FuzzyError as exc:
            raise ConfigError(f"{tpath}: {exc}") from exc
    units = obj.get("units", "")
    if not isinstance(units, str):
        raise ConfigError(f"{path}.units: expected a string")
    return LinguisticVariable(name, universe, tuple(terms), units)


def _rule(obj: Any, path: str, output: str) -> Rule:
    obj = _keys(obj, path, {"if", "then"})
    conds = obj["if"]
    if not isinstance(conds, list) or not conds:
        raise ConfigError(f"{path}.if: expected a non-empty list")
    ants = []
    for i, cond in enumerate(conds):
        cond = _keys(cond, f"{path}.if[{i}]", {"var", "term"})
        ants.append((_string(cond["var"], f"{path}.if[{i}].var"), _string(cond["term"], f"{path}.if[{i}].term")))
    return Rule(tuple(ants), (output, _string(obj["then"], f"{path}.then")))


def controller_from_dict(doc: Any) -> ControllerDocument:
    doc = _keys(doc, "$", {"version", "inputs", "output", "rules"}, {"defaults"})
    version = _version(doc, "$")
    if not isinstance(doc["inputs"], list) or not doc["inputs"]:
        raise ConfigError("$.inputs: expected a non-empty list")
    inputs = tuple(_variable(v, f"$.inputs[{i}]") for i, v in enumerate(doc["inputs"]))
    output = _variable(doc["output"], "$.output")
    if not isinstance(doc["rules"], list):
        raise ConfigError("$.rules: expected a list")
    rules = tuple(_rule(r, f"$.rules[{i}]", output.name) for i, r in enumerate(doc["rules"]))
    try:
        rb = RuleBase(inputs, output, rules)
    except FuzzyError as exc:
        raise ConfigError(f"$.rules: {exc}") from exc

    params, normalize = DEFAULT_PARAMS, DEFAULT_NORMALIZE
    if "defaults" in doc:
        d = _keys(doc["defaults"], "$.defaults", set(), {"c_left", "c_right", "m", "normalize"})
        c_left = _number(d["c_left"], "$.defaults.c_left") if "c_left" in d else None
        c_right = _number(d["c_right"], "$.defaults.c_right") if "c_right" in d else None
        m = _number(d["m"], "$.defaults.m") if "m" in d else params.m
        try:
            params = resolve_params(params, c_left, c_right, m)
        except FuzzyError as exc:
            raise ConfigError(f"$.defaults: {exc}") from exc
        if "normalize" in d:
            if not isinstance(d["normalize"], bool):
                raise ConfigError("$.defaults.normalize: expected true or false")
            normalize = d["normalize"]
    return ControllerDocument(rb, params, normalize, version)


def resolve_params(base: WablParams, c_left: float | None = None, c_right: float | None = None,
                   m: float | None = None) -> WablParams:
    """Apply overrides; a lone side weight implies the other as its complement."""
    if c_left is None and c_right is None:
        c_left, c_right = base.c_left, base.c_right
    elif c_right is None:
        c_right = 1.0 - c_left
    elif c_left is None:
        c_left = 1.0 - c_right
    return WablParams(c_left, c_right, base.m if m is None else m)


def _mf_literal(mf: PiecewiseLinearMF) -> list[list[float]]:
    return [[x, mu] for x, mu in mf.points]


def _variable_to_dict(var: LinguisticVariable) -> dict:
    out = {"name": var.name}
    if var.units:
        out["units"] = var.units
    out["universe"] = list(var.universe)
    out["terms"] = {name: _mf_literal(mf) for name, mf in var.terms}
    return out


def controller_to_dict(doc: ControllerDocument) -> dict:
    rb = doc.rule_base
    return {
        "version": SCHEMA_VERSION,
        "inputs": [_variable_to_dict(v) for v in rb.inputs],
        "output": _variable_to_dict(rb.output),
        "rules": [
            {"if": [{"var": v, "term": t} for v, t in r.antecedents], "then": r.consequent[1]}
            for r in rb.rules
        ],
        "defaults": {
            "c_left": doc.params.c_left,
            "c_right": doc.params.c_right,
            "m": doc.params.m,
            "normalize": doc.normalize,
        },
    }


def sim_from_dict(doc: Any) -> SimConfig:
    fields = {f.name for f in dataclasses.fields(SimConfig)}
    doc = _keys(doc, "$", {"version"}, fields)
    _version(doc, "$")
    kwargs = {k: _number(v, f"$.{k}") for k, v in doc.items() if k != "version"}
    return SimConfig(**kwargs)


def sim_to_dict(cfg: SimConfig) -> dict:
    return {"version": SCHEMA_VERSION, **dataclasses.asdict(cfg)}


def _read_json(path: str | Path) -> Any:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"{path}: cannot read ({exc.strerror})") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc


def load_controller(path: str | Path) -> ControllerDocument:
    doc = _read_json(path)
    try:
        return controller_from_dict(doc)
    except ConfigError as exc:
        raise ConfigError(f"{path}: {exc}") from exc


def load_sim_config(path: str | Path) -> SimConfig:
    doc = _read_json(path)
    try:
        return sim_from_dict(doc)
    except ConfigError as exc:
        raise ConfigError(f"{path}: {exc}") from exc
