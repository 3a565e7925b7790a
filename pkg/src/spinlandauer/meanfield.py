"""Mean-field thermodynamics of the supported spin models.

Self-consistent magnetization, entropy and free energy per spin, and the
analytic entropy limits at the critical temperature and at T -> 0. All
temperatures are reduced (t = kT/J), entropies are in units of k, free
energies in units of J.
"""

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .models import (
    ClassicalOn,
    DiscreteZq,
    ModelSpec,
    QuantumSpin,
    RegularizedSpin,
    UnsupportedModelError,
    model_to_dict,
)
from .specfun import (
    _log_sinhc,
    bessel_i,
    bessel_ratio,
    brillouin,
    log_sinh_ratio,
    log_sphere_area,
)

__all__ = [
    "ThermoPoint",
    "SweepResult",
    "EntropyLimits",
    "NoConvergenceError",
    "magnetization_rhs",
    "critical_temperature",
    "solve_magnetization",
    "entropy_from_argument",
    "entropy_per_spin",
    "free_energy_at_magnetization",
    "free_energy_per_spin",
    "entropy_limits",
    "sweep",
]

LOG_4PI = math.log(4.0 * math.pi)

_RESIDUAL_TOL = 1e-13
_BRACKET_LO = 1e-12
_MAX_SOLVER_ITER = 200


class NoConvergenceError(RuntimeError):
    """Root finder exhausted its iteration budget (a solver bug, not physics)."""


@dataclass(frozen=True)
class ThermoPoint:
    """One point of a temperature sweep (reduced units)."""

    t: float
    m: float
    entropy_per_spin: float
    free_energy_per_spin: Optional[float] = None

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "m": self.m,
            "entropy_per_spin": self.entropy_per_spin,
            "free_energy_per_spin": self.free_energy_per_spin,
        }


@dataclass(frozen=True)
class SweepResult:
    """Temperature sweep of a model: points sorted by ascending t."""

    model: ModelSpec
    points: tuple
    t_c: float

    def to_dict(self) -> dict:
        return {
            "model": model_to_dict(self.model),
            "t_c": self.t_c,
            "points": [p.to_dict() for p in self.points],
        }


@dataclass(frozen=True)
class EntropyLimits:
    """Analytic entropy per spin at t_c and at t -> 0; -inf flags a divergence."""

    s_at_tc: float
    s_at_zero: float

    @property
    def zero_divergent(self) -> bool:
        return math.isinf(self.s_at_zero)

    @property
    def delta_s(self) -> float:
        return self.s_at_tc - self.s_at_zero


def magnetization_rhs(model: ModelSpec, x: float) -> float:
    """Right-hand side f(x) of the self-consistency m = f(m/t).

    The thermal single-spin alignment in a reduced field x: the Langevin
    function generalized to n components for classical O(n) spins (a ratio
    of modified Bessel functions), the Brillouin function for quantum
    spins, tanh for the two-state model.
    """
    if x < 0:
        raise ValueError(f"magnetization_rhs: argument must be >= 0, got {x}")
    if isinstance(model, ClassicalOn):
        return bessel_ratio(0.5 * model.n - 1.0, x)
    if isinstance(model, (QuantumSpin, RegularizedSpin)):
        s = model.s if isinstance(model, QuantumSpin) else model.s_max
        return brillouin(s, x)
    if isinstance(model, DiscreteZq):
        if model.q != 2:
            raise UnsupportedModelError(
                f"no mean-field thermodynamics for zq:{model.q} (only q=2)"
            )
        return math.tanh(x)
    raise TypeError(f"not a model spec: {model!r}")


def critical_temperature(model: ModelSpec) -> float:
    """Reduced critical temperature t_c = f'(0) of the self-consistency."""
    if isinstance(model, ClassicalOn):
        return 1.0 / model.n
    if isinstance(model, (QuantumSpin, RegularizedSpin)):
        s = model.s if isinstance(model, QuantumSpin) else model.s_max
        return (s + 1.0) / (3.0 * s)
    if isinstance(model, DiscreteZq):
        if model.q != 2:
            raise UnsupportedModelError(
                f"no mean-field thermodynamics for zq:{model.q} (only q=2)"
            )
        return 1.0
    raise TypeError(f"not a model spec: {model!r}")


def solve_magnetization(model: ModelSpec, t: float) -> float:
    """Spontaneous magnetization m(t): 0 for t >= t_c, else the positive root.

    The root of m = f(m/t) on (0, 1] is found by bisection refined with
    bracket-safeguarded secant steps (Illinois rule); the returned m
    satisfies |m - f(m/t)| < 1e-12.
    """
    if not t > 0:
        raise ValueError(f"solve_magnetization: t must be > 0, got {t}")
    t_c = critical_temperature(model)
    if t >= t_c:
        return 0.0

    def g(m: float) -> float:
        return m - magnetization_rhs(model, m / t)

    lo, hi = _BRACKET_LO, 1.0
    g_lo, g_hi = g(lo), g(hi)
    if g_lo >= 0.0:
        # Below t_c the ordered root exists; within rounding of t_c it
        # collapses onto the disordered solution.
        return 0.0
    for _ in range(_MAX_SOLVER_ITER):
        # secant candidate through the bracket endpoints
        mid = lo - g_lo * (hi - lo) / (g_hi - g_lo)
        width = hi - lo
        if not (lo + 0.01 * width < mid < hi - 0.01 * width):
            mid = 0.5 * (lo + hi)
        g_mid = g(mid)
        if abs(g_mid) < _RESIDUAL_TOL:
            return mid
        if g_mid < 0.0:
            if lo == mid:
                return mid  # bracket exhausted at float resolution
            lo, g_lo = mid, g_mid
            g_hi *= 0.5  # Illinois rule: damp the stagnant endpoint
        else:
            if hi == mid:
                return mid
            hi, g_hi = mid, g_mid
            g_lo *= 0.5
    raise NoConvergenceError(
        f"magnetization solver exceeded {_MAX_SOLVER_ITER} iterations for {model!r}, t={t}"
    )


def entropy_from_argument(model: ModelSpec, x: float) -> float:
    """Entropy per spin (units of k) as a function of the reduced field x = m/t."""
    if x < 0:
        raise ValueError(f"entropy_from_argument: argument must be >= 0, got {x}")
    if isinstance(model, ClassicalOn):
        n = model.n
        nu = 0.5 * n - 1.0
        if x < 1e-6:
            # ln[(2 pi)^{n/2} I_nu(x)/x^nu] -> ln S_{n-1} + x^2/(2n) and the
            # field term is x^2/n, leaving -x^2/(2n)
            return log_sphere_area(n) - x * x / (2.0 * n)
        log_term = (
            0.5 * n * math.log(2.0 * math.pi)
            + x
            + math.log(bessel_i(nu, x, scaled=True))
            - nu * math.log(x)
        )
        return log_term - x * bessel_ratio(nu, x)
    if isinstance(model, QuantumSpin):
        return log_sinh_ratio(model.s, x) - x * brillouin(model.s, x)
    if isinstance(model, RegularizedSpin):
        base = log_sinh_ratio(model.s_max, x) - x * brillouin(model.s_max, x)
        return base + LOG_4PI - math.log(2.0 * model.s_max + 1.0)
    if isinstance(model, DiscreteZq):
        if model.q != 2:
            raise UnsupportedModelError(
                f"no mean-field thermodynamics for zq:{model.q} (only q=2)"
            )
        # ln(2 cosh x) = x + ln(1 + e^{-2x}) for x >= 0
        return x + math.log1p(math.exp(-2.0 * x)) - x * math.tanh(x)
    raise TypeError(f"not a model spec: {model!r}")


def entropy_per_spin(model: ModelSpec, t: float) -> float:
    """Equilibrium entropy per spin at reduced temperature t (units of k)."""
    m = solve_magnetization(model, t)
    return entropy_from_argument(model, m / t)


def free_energy_at_magnetization(model: ModelSpec, t: float, m: float) -> float:
    """Mean-field free energy per spin (units of J) at a trial magnetization.

    Only stated for the classical three-component model:
    F/NJ = m^2/2 - t ln[4 pi sinh(m/t) / (m/t)], with the m -> 0 limit
    -t ln(4 pi). Stationary in m at the self-consistent solution.
    """
    if not (isinstance(model, ClassicalOn) and model.n == 3):
        raise UnsupportedModelError(
            f"free energy is only defined for on:3, got {getattr(model, 'label', model)}"
        )
    if not t > 0:
        raise ValueError(f"free_energy_at_magnetization: t must be > 0, got {t}")
    x = m / t
    return 0.5 * m * m - t * (LOG_4PI + _log_sinhc(x))


def free_energy_per_spin(model: ModelSpec, t: float) -> float:
    """Equilibrium free energy per spin (units of J); classical O(3) only."""
    m = solve_magnetization(model, t)
    return free_energy_at_magnetization(model, t, m)


def entropy_limits(model: ModelSpec) -> EntropyLimits:
    """Analytic entropy per spin at t_c and at t -> 0.

    The classical O(n) entropy diverges to -inf at t -> 0; quantum and
    discrete models reach exactly 0; the regularized model reaches
    ln(4 pi / (2 s_max + 1)).
    """
    if isinstance(model, ClassicalOn):
        return EntropyLimits(log_sphere_area(model.n), -math.inf)
    if isinstance(model, QuantumSpin):
        return EntropyLimits(math.log(2.0 * model.s + 1.0), 0.0)
    if isinstance(model, RegularizedSpin):
        return EntropyLimits(
            LOG_4PI, LOG_4PI - math.log(2.0 * model.s_max + 1.0)
        )
    if isinstance(model, DiscreteZq):
        return EntropyLimits(math.log(model.q), 0.0)
    raise TypeError(f"not a model spec: {model!r}")


def sweep(model: ModelSpec, t_grid: Sequence[float]) -> SweepResult:
    """Evaluate magnetization, entropy and (for on:3) free energy on a t grid.

    Points come back sorted by ascending t. Aborts on the first per-point
    error.
    """
    t_c = critical_temperature(model)
    has_free_energy = isinstance(model, ClassicalOn) and model.n == 3
    points = []
    for t in sorted(t_grid):
        if not t > 0:
            raise ValueError(f"sweep: grid temperatures must be > 0, got {t}")
        m = solve_magnetization(model, t)
        x = m / t
        entropy = entropy_from_argument(model, x)
        free_energy = free_energy_at_magnetization(model, t, m) if has_free_energy else None
        points.append(ThermoPoint(t, m, entropy, free_energy))
    return SweepResult(model=model, points=tuple(points), t_c=t_c)
