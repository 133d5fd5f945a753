"""Analysis and simulation of a two-player affinity/power linear dynamical system."""

from .classifier import (
    Archetype,
    BehavioralClass,
    CaseLabel,
    ClassificationReport,
    Fate,
    Limit,
    LimitKind,
    SpectralClass,
    Stance,
    asymptotic_fate,
    asymptotic_signs,
    classify,
    classify_archetype,
    classify_stability,
    equilibrium_limit,
    oscillation_points,
)
from .errors import (
    DegenerateModel,
    GammaNotPositive,
    ModelError,
    NonFiniteInput,
    NotConvergent,
    NotOscillatory,
    TrivialOrbit,
)
from .model import ModelParams, State, Trajectory, power, simulate, step, validate_params
from .spectral import (
    Mat2,
    Spectrum,
    matrix_power_closed,
    matrix_power_iterative,
    spectrum,
    state_at,
    transition_matrix,
)

__version__ = "0.1.0"
