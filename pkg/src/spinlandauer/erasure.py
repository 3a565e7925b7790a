"""Erasure-entropy, information-capacity and minimum-heat calculators.

The reset of a continuous degree of freedom produces at least
ln(configuration volume / minimal volume quantum) of entropy per spin,
which degenerates to the familiar ln 2 per bit for a two-state system.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .models import (
    ClassicalOn,
    DiscreteZq,
    ModelSpec,
    QuantumSpin,
    RegularizedSpin,
    UnsupportedModelError,
    model_to_dict,
)
from .specfun import log_sphere_area

__all__ = [
    "Regulator",
    "ErasureReport",
    "CapacityReport",
    "Rounding",
    "discrete_erasure_entropy",
    "analog_erasure_entropy",
    "raw_state_count",
    "capacity",
    "landauer_ratio",
]

LN2 = math.log(2.0)


@dataclass(frozen=True)
class Regulator:
    """Minimal configuration-volume quantum and its parametrization.

    delta is the minimum state volume on the unit sphere; for the
    regularized spin model it satisfies delta * (2 s_max + 1) = 4 pi and
    delta = hbar_eff^2 s_max / 2. For the conjectured O(n) form only
    delta is known.
    """

    delta: float
    s_max: Optional[float] = None
    hbar_eff: Optional[float] = None

    def to_dict(self) -> dict:
        return {"s_max": self.s_max, "delta": self.delta, "hbar_eff": self.hbar_eff}


@dataclass(frozen=True)
class ErasureReport:
    """Entropy production per spin for a full reset of the given model."""

    model: ModelSpec
    delta_s_per_spin: float
    regulator: Optional[Regulator] = None
    conjectured: bool = False

    def to_dict(self) -> dict:
        return {
            "model": model_to_dict(self.model),
            "delta_s_per_spin": self.delta_s_per_spin,
            "regulator": self.regulator.to_dict() if self.regulator else None,
            "conjectured": self.conjectured,
        }


@dataclass(frozen=True)
class CapacityReport:
    """Logic-state count and minimum reset heat for an angular momentum L."""

    angular_momentum_L: float
    hbar_eff: float
    n_states: int
    bits: float
    q_min_over_kT: float

    def to_dict(self) -> dict:
        return {
            "angular_momentum_L": self.angular_momentum_L,
            "hbar_eff": self.hbar_eff,
            "n_states": self.n_states,
            "bits": self.bits,
            "q_min_over_kT": self.q_min_over_kT,
        }


class Rounding(str, Enum):
    """How to turn the raw state count 8 pi L / hbar into an integer."""

    TRUNC = "trunc"
    NEAREST = "nearest"


def discrete_erasure_entropy(q: int) -> float:
    """Entropy production per spin (units of k) for erasing a q-state variable: ln q."""
    if q != int(q) or q < 2:
        raise ValueError(f"discrete erasure needs an integer q >= 2, got {q}")
    return math.log(q)


def analog_erasure_entropy(model: ModelSpec, delta: Optional[float] = None) -> ErasureReport:
    """Entropy production per spin for resetting a continuous spin variable.

    For the regularized spin model the result is exact:
    ln 4pi - ln(4pi/(2 s_max + 1)) = ln(2 s_max + 1), with the regulator
    pair (delta, hbar_eff) populated. For classical O(n) the caller must
    supply the minimal volume quantum ``delta``; the result
    ln(S_{n-1}/delta) is flagged as conjectured.
    """
    if isinstance(model, RegularizedSpin):
        if delta is not None:
            raise ValueError("delta is derived for regularized models, do not pass it")
        s_max = model.s_max
        two_s_plus_1 = 2.0 * s_max + 1.0
        reg = Regulator(
            delta=4.0 * math.pi / two_s_plus_1,
            s_max=s_max,
            hbar_eff=math.sqrt(8.0 * math.pi / (s_max * two_s_plus_1)),
        )
        return ErasureReport(
            model=model,
            delta_s_per_spin=math.log(two_s_plus_1),
            regulator=reg,
            conjectured=False,
        )
    if isinstance(model, ClassicalOn):
        if delta is None:
            raise ValueError(
                "classical O(n) erasure needs an explicit minimal volume quantum (delta)"
            )
        if not 0 < delta:
            raise ValueError(f"delta must be > 0, got {delta}")
        return ErasureReport(
            model=model,
            delta_s_per_spin=log_sphere_area(model.n) - math.log(delta),
            regulator=Regulator(delta=delta),
            conjectured=True,
        )
    if isinstance(model, DiscreteZq):
        raise UnsupportedModelError(
            f"use discrete_erasure_entropy for zq:{model.q} (analog form does not apply)"
        )
    if isinstance(model, QuantumSpin):
        raise UnsupportedModelError(
            "analog erasure is defined for reg:<s_max> (regularized) models; "
            "plain quantum spins carry no volume regulator"
        )
    raise TypeError(f"not a model spec: {model!r}")


def raw_state_count(angular_momentum_L: float, hbar_eff: float = 1.0) -> float:
    """Pre-rounding state count 8 pi L / hbar_eff."""
    if not angular_momentum_L > 0:
        raise ValueError(f"angular momentum must be > 0, got {angular_momentum_L}")
    if not hbar_eff > 0:
        raise ValueError(f"hbar_eff must be > 0, got {hbar_eff}")
    return 8.0 * math.pi * angular_momentum_L / hbar_eff


def capacity(
    angular_momentum_L: float,
    hbar_eff: float = 1.0,
    rounding: Rounding = Rounding.TRUNC,
) -> CapacityReport:
    """Logic-state capacity of an angular momentum L (in units of hbar_eff).

    n_states = int(8 pi L / hbar_eff) by default (truncation); the
    ``nearest`` mode rounds instead. Heat per full reset is
    ln(n_states) in units of kT.
    """
    raw = raw_state_count(angular_momentum_L, hbar_eff)
    # tiny guard so that exactly representable integers are not lost to
    # the floating division (e.g. L = 1/(8 pi))
    guarded = raw + 1e-9
    if guarded < 1.0:
        raise ValueError(
            f"8 pi L / hbar_eff = {raw:.6g} < 1: no representable logic state"
        )
    rounding = Rounding(rounding)
    if rounding is Rounding.TRUNC:
        n_states = int(math.floor(guarded))
    else:
        n_states = max(1, int(round(raw)))
    return CapacityReport(
        angular_momentum_L=angular_momentum_L,
        hbar_eff=hbar_eff,
        n_states=n_states,
        bits=math.log2(n_states),
        q_min_over_kT=math.log(n_states),
    )


def landauer_ratio(report: CapacityReport) -> float:
    """Minimum heat in units of the one-bit reset cost kT ln 2 (equals the bit count)."""
    return report.q_min_over_kT / LN2
