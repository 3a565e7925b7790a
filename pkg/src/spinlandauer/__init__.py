"""Mean-field spin thermodynamics, analog erasure bounds, and Monte Carlo checks."""

__version__ = "0.1.0"

from .erasure import (
    CapacityReport,
    ErasureReport,
    Regulator,
    Rounding,
    analog_erasure_entropy,
    capacity,
    discrete_erasure_entropy,
    landauer_ratio,
)
from .meanfield import (
    EntropyLimits,
    NoConvergenceError,
    SweepResult,
    ThermoPoint,
    critical_temperature,
    entropy_limits,
    entropy_per_spin,
    free_energy_per_spin,
    magnetization_rhs,
    solve_magnetization,
    sweep,
)
from .models import (
    ClassicalOn,
    DiscreteZq,
    ModelSpec,
    QuantumSpin,
    RegularizedSpin,
    UnsupportedModelError,
    parse_model,
)
from .montecarlo import (
    McConfig,
    McEstimate,
    McTrace,
    energy_curve,
    entropy_by_integration,
    run_chain,
)

__all__ = [
    "__version__",
    "CapacityReport",
    "ErasureReport",
    "Regulator",
    "Rounding",
    "analog_erasure_entropy",
    "capacity",
    "discrete_erasure_entropy",
    "landauer_ratio",
    "EntropyLimits",
    "NoConvergenceError",
    "SweepResult",
    "ThermoPoint",
    "critical_temperature",
    "entropy_limits",
    "entropy_per_spin",
    "free_energy_per_spin",
    "magnetization_rhs",
    "solve_magnetization",
    "sweep",
    "ClassicalOn",
    "DiscreteZq",
    "ModelSpec",
    "QuantumSpin",
    "RegularizedSpin",
    "UnsupportedModelError",
    "parse_model",
    "McConfig",
    "McEstimate",
    "McTrace",
    "energy_curve",
    "entropy_by_integration",
    "run_chain",
]
