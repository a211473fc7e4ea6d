"""WABL defuzzification, WABL-based fuzzy inference and a fan-controller testbed."""
from .defuzz import (
    WablParams,
    centroid,
    median_of_maximum,
    wabl_analytic,
    wabl_quadrature,
    weight_density,
)
from .fuzzy_num import (
    LevelFunction,
    LevelRep,
    PiecewiseLinearMF,
    level_add,
    mf_eval,
    singleton,
    to_level_rep,
    trapezoid,
    triangle,
)
from .inference import (
    InferenceResult,
    LinguisticVariable,
    Rule,
    RuleBase,
    defuzzify_terms,
    firing_degrees,
    infer,
)
from .scenarios import ResponseCurve, build_conditioner, response_curve
from .thermal_sim import (
    SimConfig,
    SimTrace,
    oscillation_metric,
    plant_step,
    run_fuzzy,
    run_thermostat,
)

__version__ = "0.1.0"
