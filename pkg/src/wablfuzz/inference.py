"""WABL-based logic deduction over a single-output rule base.

Pipeline: rules and linguistic variables (steps 1-2), firing degrees of the
crisp inputs (3), WABL value of every output term (4), firing-weighted sum
of the consequents' WABL values (5).  Output terms are defuzzified unclipped,
so step 4 does not depend on the inputs and is cached per rule base/params.
"""
from __future__ import annotations

import functools
import logging
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .defuzz import WablParams, wabl_analytic
from .errors import ConfigError, NoRuleFiresError, RepresentationError, UnknownTermError
from .fuzzy_num import PiecewiseLinearMF, mf_eval, to_level_rep

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinguisticVariable:
    name: str
    universe: tuple[float, float]
    terms: tuple[tuple[str, PiecewiseLinearMF], ...]
    units: str = ""

    def __post_init__(self):
        names = [t for t, _ in self.terms]
        if len(set(names)) != len(names):
            raise ConfigError(f"variable {self.name!r}: duplicate term names")
        if not self.terms:
            raise ConfigError(f"variable {self.name!r}: no terms")
        lo, hi = self.universe
        for tname, mf in self.terms:
            if tuple(mf.universe) != (float(lo), float(hi)):
                raise ConfigError(
                    f"variable {self.name!r}: term {tname!r} universe {mf.universe} "
                    f"differs from variable universe {self.universe}"
                )

    @property
    def term_names(self) -> tuple[str, ...]:
        return tuple(t for t, _ in self.terms)

    def term(self, name: str) -> PiecewiseLinearMF:
        for tname, mf in self.terms:
            if tname == name:
                return mf
        raise UnknownTermError(f"variable {self.name!r} has no term {name!r}")


@dataclass(frozen=True)
class Rule:
    antecedents: tuple[tuple[str, str], ...]
    consequent: tuple[str, str]

    def __str__(self) -> str:
        cond = " and ".join(f"{v} is {t}" for v, t in self.antecedents)
        return f"if {cond} then {self.consequent[0]} is {self.consequent[1]}"


@dataclass(frozen=True)
class RuleBase:
    inputs: tuple[LinguisticVariable, ...]
    output: LinguisticVariable
    rules: tuple[Rule, ...]

    def __post_init__(self):
        if not self.rules:
            raise ConfigError("rule base needs at least one rule")
        names = [v.name for v in self.inputs]
        if len(set(names)) != len(names):
            raise ConfigError("duplicate input variable names")
        for i, rule in enumerate(self.rules):
            if not rule.antecedents:
                raise ConfigError(f"rule {i}: no antecedents")
            for var, term in rule.antecedents:
                self.input(var).term(term)
            if rule.consequent[0] != self.output.name:
                raise ConfigError(
                    f"rule {i}: consequent variable {rule.consequent[0]!r} is not the output"
                )
            self.output.term(rule.consequent[1])

    def input(self, name: str) -> LinguisticVariable:
        for var in self.inputs:
            if var.name == name:
                return var
        raise ConfigError(f"unknown input variable {name!r}")


@dataclass(frozen=True)
class InferenceResult:
    crisp_output: float
    firing: dict[int, float]
    term_wabl: dict[str, float]
    normalized: bool
    warnings: tuple[str, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "crisp_output": self.crisp_output,
            "firing": {str(k): v for k, v in self.firing.items()},
            "term_wabl": dict(self.term_wabl),
            "normalized": self.normalized,
            "warnings": list(self.warnings),
        }


def firing_degrees(rb: RuleBase, x: Mapping[str, float]) -> dict[int, float]:
    """Degree of each rule: min over its antecedents of the input's membership."""
    memo: dict[tuple[str, str], float] = {}
    out = {}
    for i, rule in enumerate(rb.rules):
        degree = 1.0
        for var, term in rule.antecedents:
            key = (var, term)
            if key not in memo:
                if var not in x:
                    raise ConfigError(f"no value given for input variable {var!r}")
                memo[key] = mf_eval(rb.input(var).term(term), x[var])
            degree = min(degree, memo[key])
        out[i] = degree
    return out


@functools.lru_cache(maxsize=256)
def _term_wabl(output: LinguisticVariable, params: WablParams) -> tuple[tuple[str, float], ...]:
    values = []
    for name, mf in output.terms:
        try:
            rep = to_level_rep(mf)
        except RepresentationError as exc:
            raise RepresentationError(f"output term {name!r}: {exc}") from exc
        values.append((name, wabl_analytic(rep, params)))
    return tuple(values)


def defuzzify_terms(rb: RuleBase, params: WablParams) -> dict[str, float]:
    return dict(_term_wabl(rb.output, params))


def infer(rb: RuleBase, x: Mapping[str, float], params: WablParams,
          normalize: bool = False) -> InferenceResult:
    """Crisp output ``sum_r firing(r) * I(consequent(r))``.

    With ``normalize`` the sum is divided by the total firing degree.  Each
    rule contributes only its own consequent; the input degrees are not
    crossed with every output term.
    """
    firing = firing_degrees(rb, x)
    terms = defuzzify_terms(rb, params)
    total = sum(firing.values())
    value = sum(d * terms[rb.rules[i].consequent[1]] for i, d in firing.items())
    warnings: tuple[str, ...] = ()
    if total == 0.0:
        if normalize:
            raise NoRuleFiresError(f"no rule fires for inputs {dict(x)}")
        msg = f"no rule fires for inputs {dict(x)}; output is 0"
        log.warning(msg)
        warnings = (msg,)
    elif normalize:
        value /= total
    return InferenceResult(value, firing, terms, normalize, warnings)


def double_sum_output(rb: RuleBase, x: Mapping[str, float], params: WablParams) -> float:
    """Every rule's degree times every output term's WABL value.

    Kept only to show that crossing all input degrees with all output terms
    does not give the rule-paired result of ``infer``.
    """
    firing = firing_degrees(rb, x)
    terms = defuzzify_terms(rb, params)
    return sum(firing.values()) * sum(terms.values())


def make_rule(antecedents: Sequence[tuple[str, str]], output: str, term: str) -> Rule:
    return Rule(tuple((v, t) for v, t in antecedents), (output, term))
