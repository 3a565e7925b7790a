"""Spin-model descriptions shared by the thermodynamics and erasure calculators.

A model spec is one of four frozen dataclasses; everything downstream
dispatches on the variant. All temperatures elsewhere are reduced
(t = kT/J), so the coupling J is carried only as metadata.
"""

from dataclasses import dataclass
from typing import Union

__all__ = [
    "DiscreteZq",
    "ClassicalOn",
    "QuantumSpin",
    "RegularizedSpin",
    "ModelSpec",
    "UnsupportedModelError",
    "parse_model",
    "model_to_dict",
]


class UnsupportedModelError(ValueError):
    """Raised when an operation has no defined result for the given model."""


def _check_half_integer(value: float, name: str) -> None:
    doubled = 2.0 * value
    if value <= 0 or abs(doubled - round(doubled)) > 1e-9:
        raise ValueError(f"{name} must be a positive half-integer (1/2, 1, 3/2, ...), got {value}")


def _check_coupling(j: float) -> None:
    if not j > 0:
        raise ValueError(f"coupling_J must be > 0, got {j}")


@dataclass(frozen=True)
class DiscreteZq:
    """Discrete q-state clock symmetry; only q=2 (Ising) has mean-field thermodynamics here."""

    q: int
    coupling_J: float = 1.0

    def __post_init__(self):
        if self.q != int(self.q) or self.q < 2:
            raise ValueError(f"q must be an integer >= 2, got {self.q}")
        _check_coupling(self.coupling_J)

    @property
    def label(self) -> str:
        return f"zq:{self.q}"


@dataclass(frozen=True)
class ClassicalOn:
    """Classical n-component unit spin, O(n) symmetric."""

    n: int
    coupling_J: float = 1.0

    def __post_init__(self):
        if self.n != int(self.n) or self.n < 2:
            raise ValueError(f"n must be an integer >= 2, got {self.n}")
        _check_coupling(self.coupling_J)

    @property
    def label(self) -> str:
        return f"on:{self.n}"


@dataclass(frozen=True)
class QuantumSpin:
    """Quantum spin of magnitude s (2s+1 states)."""

    s: float
    coupling_J: float = 1.0

    def __post_init__(self):
        _check_half_integer(self.s, "s")
        _check_coupling(self.coupling_J)

    @property
    def label(self) -> str:
        return f"spin:{_fmt_spin(self.s)}"


@dataclass(frozen=True)
class RegularizedSpin:
    """Quantum spin s_max with entropy shifted onto the classical sphere scale.

    The shift ln(4 pi / (2 s_max + 1)) distributes the 2 s_max + 1 states
    over the unit sphere, giving a finite zero-temperature entropy.
    """

    s_max: float
    coupling_J: float = 1.0

    def __post_init__(self):
        _check_half_integer(self.s_max, "s_max")
        _check_coupling(self.coupling_J)

    @property
    def label(self) -> str:
        return f"reg:{_fmt_spin(self.s_max)}"


ModelSpec = Union[DiscreteZq, ClassicalOn, QuantumSpin, RegularizedSpin]


def _fmt_spin(s: float) -> str:
    return str(int(s)) if s == int(s) else str(s)


def parse_model(label: str) -> ModelSpec:
    """Parse a model label of the form zq:<q> | on:<n> | spin:<s> | reg:<s_max>."""
    kind, sep, arg = label.partition(":")
    if not sep or not arg:
        raise ValueError(f"model must look like zq:<q>, on:<n>, spin:<s> or reg:<s_max>, got {label!r}")
    try:
        if kind == "zq":
            return DiscreteZq(q=int(arg))
        if kind == "on":
            return ClassicalOn(n=int(arg))
        if kind == "spin":
            return QuantumSpin(s=float(arg))
        if kind == "reg":
            return RegularizedSpin(s_max=float(arg))
    except ValueError as exc:
        raise ValueError(f"invalid model {label!r}: {exc}") from None
    raise ValueError(f"unknown model kind {kind!r} (expected zq, on, spin or reg)")


def model_to_dict(model: ModelSpec) -> dict:
    """Stable JSON representation of a model spec."""
    if isinstance(model, DiscreteZq):
        return {"variant": "discrete_zq", "q": model.q, "coupling_J": model.coupling_J}
    if isinstance(model, ClassicalOn):
        return {"variant": "classical_on", "n": model.n, "coupling_J": model.coupling_J}
    if isinstance(model, QuantumSpin):
        return {"variant": "quantum_spin", "s": model.s, "coupling_J": model.coupling_J}
    if isinstance(model, RegularizedSpin):
        return {"variant": "regularized_spin", "s_max": model.s_max, "coupling_J": model.coupling_J}
    raise TypeError(f"not a model spec: {model!r}")
