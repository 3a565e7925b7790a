"""Metropolis sampling of fully connected (Curie-Weiss) spin models.

The all-to-all coupling J/N makes the mean-field solution exact in the
N -> infinity limit, so deviations from the analytic thermodynamics are
pure finite-size and statistical effects. Entropy is recovered from the
sampled energy by thermodynamic integration from beta = 0, where the
integration constant (ln 4pi per spin for three-component spins, ln 2
for Ising) is exact.
"""

import math
from dataclasses import dataclass, replace
from typing import List, Sequence, Tuple, Union

import numpy as np
from numba import njit

__all__ = [
    "MC_MODELS",
    "DEFAULT_PROPOSAL_WIDTH",
    "McConfig",
    "McEstimate",
    "McTrace",
    "random_unit_vector",
    "derive_seed",
    "blocked_estimate",
    "run_chain",
    "energy_curve",
    "entropy_by_integration",
    "ising_microstate_counts",
]

MC_MODELS = ("on3", "ising")

# Cone half-angle (radians) giving reasonable mobility in the ordered
# phase while keeping moves large enough to matter in the disordered one.
DEFAULT_PROPOSAL_WIDTH = 1.5

# Fraction of proposals that are global uniform resets (ergodicity aid).
RESET_MIX = 0.1

# Sweeps between from-scratch recomputations of the running total spin.
ENERGY_CHECK_INTERVAL = 1000

_U64_MASK = (1 << 64) - 1


@dataclass(frozen=True)
class McConfig:
    """One Metropolis run: model, size, temperature, schedule and seed."""

    model: str
    n_spins: int
    t: float
    sweeps: int
    burn_in: int
    seed: int
    proposal_width: float = DEFAULT_PROPOSAL_WIDTH

    def __post_init__(self):
        if self.model not in MC_MODELS:
            raise ValueError(f"model must be one of {MC_MODELS}, got {self.model!r}")
        if self.n_spins != int(self.n_spins) or self.n_spins < 2:
            raise ValueError(f"n_spins must be an integer >= 2, got {self.n_spins}")
        if not self.t > 0:
            raise ValueError(f"t must be > 0, got {self.t}")
        # blocking analysis needs at least 8 measurement samples
        if self.sweeps < 8:
            raise ValueError(f"sweeps must be >= 8, got {self.sweeps}")
        if self.burn_in < 1:
            raise ValueError(f"burn_in must be >= 1, got {self.burn_in}")
        if not 0 <= self.seed <= _U64_MASK:
            raise ValueError(f"seed must fit in 64 bits, got {self.seed}")
        if not self.proposal_width > 0:
            raise ValueError(f"proposal_width must be > 0, got {self.proposal_width}")

    def to_dict(self) -> dict:
        return {
            "model": self.model,
            "n_spins": self.n_spins,
            "t": self.t,
            "sweeps": self.sweeps,
            "burn_in": self.burn_in,
            "seed": self.seed,
            "proposal_width": self.proposal_width,
        }


@dataclass(frozen=True)
class McEstimate:
    """Sample mean with a blocking-analysis standard error."""

    mean: float
    std_error: float
    n_blocks: int

    def to_dict(self) -> dict:
        return {"mean": self.mean, "std_error": self.std_error, "n_blocks": self.n_blocks}


@dataclass(frozen=True)
class McTrace:
    """Observables of one chain: energy and magnetization per spin."""

    config: McConfig
    energy_per_spin: McEstimate
    magnetization: McEstimate
    acceptance_rate: float
    energy_check_max_rel_err: float

    def to_dict(self) -> dict:
        return {
            "config": self.config.to_dict(),
            "energy_per_spin": self.energy_per_spin.to_dict(),
            "magnetization": self.magnetization.to_dict(),
            "acceptance_rate": self.acceptance_rate,
            "energy_check_max_rel_err": self.energy_check_max_rel_err,
        }


def random_unit_vector(rng: np.random.Generator, n: int) -> np.ndarray:
    """Uniform draw from the unit (n-1)-sphere via normalized Gaussians."""
    if n < 2:
        raise ValueError(f"dimension must be >= 2, got {n}")
    while True:
        v = rng.standard_normal(n)
        norm = np.linalg.norm(v)
        if norm > 1e-12:
            return v / norm


def derive_seed(master_seed: int, index: int) -> int:
    """Stable per-grid-point seed, independent of evaluation order."""
    ss = np.random.SeedSequence([int(master_seed) & _U64_MASK, int(index)])
    return int(ss.generate_state(1, np.uint64)[0])


@njit(cache=True)
def _run_o3(rng, spins, burn_in, sweeps, beta, cos_cap, reset_mix, check_interval,
            e_series, m_series):
    n = spins.shape[0]
    sx = 0.0
    sy = 0.0
    sz = 0.0
    for i in range(n):
        sx += spins[i, 0]
        sy += spins[i, 1]
        sz += spins[i, 2]
    accepted = 0
    total = 0
    max_rel = 0.0
    for sw in range(burn_in + sweeps):
        for _ in range(n):
            i = rng.integers(0, n)
            ox = spins[i, 0]
            oy = spins[i, 1]
            oz = spins[i, 2]
            if rng.random() < reset_mix:
                # global reset: uniform on the sphere
                while True:
                    gx = rng.standard_normal()
                    gy = rng.standard_normal()
                    gz = rng.standard_normal()
                    norm2 = gx * gx + gy * gy + gz * gz
                    if norm2 > 1e-24:
                        break
                inv = 1.0 / math.sqrt(norm2)
                px = gx * inv
                py = gy * inv
                pz = gz * inv
            else:
                # uniform draw from the spherical cap of opening cos_cap
                cos_t = 1.0 - rng.random() * (1.0 - cos_cap)
                sin_t = math.sqrt(max(0.0, 1.0 - cos_t * cos_t))
                phi = 2.0 * math.pi * rng.random()
                if abs(oz) < 0.9:
                    pn = math.sqrt(ox * ox + oy * oy)
                    e1x, e1y, e1z = oy / pn, -ox / pn, 0.0
                else:
                    pn = math.sqrt(oy * oy + oz * oz)
                    e1x, e1y, e1z = 0.0, oz / pn, -oy / pn
                e2x = oy * e1z - oz * e1y
                e2y = oz * e1x - ox * e1z
                e2z = ox * e1y - oy * e1x
                cp = math.cos(phi)
                sp = math.sin(phi)
                px = cos_t * ox + sin_t * (cp * e1x + sp * e2x)
                py = cos_t * oy + sin_t * (cp * e1y + sp * e2y)
                pz = cos_t * oz + sin_t * (cp * e1z + sp * e2z)
                inv = 1.0 / math.sqrt(px * px + py * py + pz * pz)
                px *= inv
                py *= inv
                pz *= inv
            dx = px - ox
            dy = py - oy
            dz = pz - oz
            d_e = -(sx * dx + sy * dy + sz * dz) / n - (dx * dx + dy * dy + dz * dz) / (2.0 * n)
            if d_e <= 0.0 or rng.random() < math.exp(-beta * d_e):
                spins[i, 0] = px
                spins[i, 1] = py
                spins[i, 2] = pz
                sx += dx
                sy += dy
                sz += dz
                accepted += 1
            total += 1
        if sw >= burn_in:
            k = sw - burn_in
            s2 = sx * sx + sy * sy + sz * sz
            e_series[k] = -s2 / (2.0 * n * n)
            m_series[k] = math.sqrt(s2) / n
        if (sw + 1) % check_interval == 0:
            tx = 0.0
            ty = 0.0
            tz = 0.0
            for i in range(n):
                tx += spins[i, 0]
                ty += spins[i, 1]
                tz += spins[i, 2]
            e_inc = -(sx * sx + sy * sy + sz * sz) / (2.0 * n * n)
            e_ref = -(tx * tx + ty * ty + tz * tz) / (2.0 * n * n)
            rel = abs(e_inc - e_ref) / max(abs(e_ref), 1e-30)
            if rel > max_rel:
                max_rel = rel
            sx, sy, sz = tx, ty, tz
    return accepted, total, max_rel


@njit(cache=True)
def _run_ising(rng, spins, burn_in, sweeps, beta, check_interval, e_series, m_series):
    n = spins.shape[0]
    stot = 0.0
    for i in range(n):
        stot += spins[i]
    accepted = 0
    total = 0
    max_rel = 0.0
    for sw in range(burn_in + sweeps):
        for _ in range(n):
            i = rng.integers(0, n)
            ds = -2.0 * spins[i]
            d_e = -(stot * ds) / n - (ds * ds) / (2.0 * n)
            if d_e <= 0.0 or rng.random() < math.exp(-beta * d_e):
                spins[i] = -spins[i]
                stot += ds
                accepted += 1
            total += 1
        if sw >= burn_in:
            k = sw - burn_in
            e_series[k] = -(stot * stot) / (2.0 * n * n)
            m_series[k] = abs(stot) / n
        if (sw + 1) % check_interval == 0:
            tref = 0.0
            for i in range(n):
                tref += spins[i]
            e_inc = -(stot * stot) / (2.0 * n * n)
            e_ref = -(tref * tref) / (2.0 * n * n)
            rel = abs(e_inc - e_ref) / max(abs(e_ref), 1e-30)
            if rel > max_rel:
                max_rel = rel
            stot = tref
    return accepted, total, max_rel


@njit(cache=True)
def _ising_counts(rng, spins, sweeps, beta, counts):
    n = spins.shape[0]
    stot = 0.0
    for i in range(n):
        stot += spins[i]
    for _ in range(sweeps):
        for _ in range(n):
            i = rng.integers(0, n)
            ds = -2.0 * spins[i]
            d_e = -(stot * ds) / n - (ds * ds) / (2.0 * n)
            if d_e <= 0.0 or rng.random() < math.exp(-beta * d_e):
                spins[i] = -spins[i]
                stot += ds
        idx = 0
        for i in range(n):
            if spins[i] > 0.0:
                idx |= 1 << i
        counts[idx] += 1


def blocked_estimate(series: Sequence[float]) -> McEstimate:
    """Mean and standard error of a correlated series by block doubling.

    Block size doubles (up to 2^10) while at least 8 blocks remain; the
    reported error is the plateau (maximum) of the blocking curve.
    """
    x = np.asarray(series, dtype=float)
    if x.size < 8:
        raise ValueError(f"blocking needs at least 8 samples, got {x.size}")
    mean = float(x.mean())
    best_se = 0.0
    best_nb = int(x.size)
    cur = x
    for _level in range(11):
        if cur.size < 8:
            break
        nb = cur.size
        se = float(np.sqrt(np.var(cur, ddof=1) / nb))
        if se >= best_se:
            best_se = se
            best_nb = nb
        half = cur.size // 2
        cur = 0.5 * (cur[: 2 * half : 2] + cur[1 : 2 * half : 2])
    return McEstimate(mean=mean, std_error=best_se, n_blocks=best_nb)


def run_chain(config: McConfig) -> McTrace:
    """Run one Metropolis chain; deterministic for a fixed config (incl. seed)."""
    rng = np.random.default_rng(np.random.SeedSequence([config.seed]))
    n = config.n_spins
    e_series = np.empty(config.sweeps)
    m_series = np.empty(config.sweeps)
    beta = 1.0 / config.t
    if config.model == "on3":
        g = rng.standard_normal((n, 3))
        spins = g / np.linalg.norm(g, axis=1)[:, None]
        cos_cap = math.cos(min(config.proposal_width, math.pi))
        accepted, total, max_rel = _run_o3(
            rng, spins, config.burn_in, config.sweeps, beta, cos_cap,
            RESET_MIX, ENERGY_CHECK_INTERVAL, e_series, m_series,
        )
    else:
        spins = np.where(rng.random(n) < 0.5, -1.0, 1.0)
        accepted, total, max_rel = _run_ising(
            rng, spins, config.burn_in, config.sweeps, beta,
            ENERGY_CHECK_INTERVAL, e_series, m_series,
        )
    return McTrace(
        config=config,
        energy_per_spin=blocked_estimate(e_series),
        magnetization=blocked_estimate(m_series),
        acceptance_rate=accepted / total,
        energy_check_max_rel_err=float(max_rel),
    )


def energy_curve(
    config_template: McConfig, beta_grid: Sequence[float]
) -> List[Tuple[float, McTrace]]:
    """One chain per beta, seeds split from the template seed by grid index.

    The grid must be strictly ascending and start at beta <= 0.01 so that
    thermodynamic integration can anchor at the exactly known beta = 0
    entropy.
    """
    betas = [float(b) for b in beta_grid]
    if not betas:
        raise ValueError("beta grid must not be empty")
    if any(b <= 0 for b in betas):
        raise ValueError("beta grid values must be > 0")
    if any(b2 <= b1 for b1, b2 in zip(betas, betas[1:])):
        raise ValueError("beta grid must be strictly ascending")
    if betas[0] > 0.01 + 1e-12:
        raise ValueError(f"first beta must be <= 0.01, got {betas[0]}")
    out = []
    for k, beta in enumerate(betas):
        cfg = replace(config_template, t=1.0 / beta, seed=derive_seed(config_template.seed, k))
        out.append((beta, run_chain(cfg)))
    return out


def entropy_by_integration(
    curve: Sequence[Tuple[float, Union[McTrace, McEstimate]]],
    s_infinite_t: float,
) -> List[Tuple[float, McEstimate]]:
    """Entropy per spin on the beta grid via s(b) = s0 + b e(b) - int_0^b e.

    The integral uses the trapezoid rule with constant extrapolation of
    the first grid energy down to beta = 0 (the first beta is <= 0.01 by
    construction, and e(0) is O(1/N)). Errors are propagated linearly
    from the per-point energy error bars.
    """
    if len(curve) < 3:
        raise ValueError(f"thermodynamic integration needs >= 3 grid points, got {len(curve)}")
    betas = np.array([b for b, _ in curve], dtype=float)
    ests = [
        item.energy_per_spin if isinstance(item, McTrace) else item for _, item in curve
    ]
    e = np.array([est.mean for est in ests])
    sig = np.array([est.std_error for est in ests])
    nb_min = min(est.n_blocks for est in ests)
    out = []
    npts = len(betas)
    for k in range(npts):
        w = np.zeros(npts)
        w[0] += betas[0]  # segment [0, beta_0] with e == e[0]
        for j in range(k):
            h = betas[j + 1] - betas[j]
            w[j] += 0.5 * h
            w[j + 1] += 0.5 * h
        s_val = s_infinite_t + betas[k] * e[k] - float(w @ e)
        coeff = -w
        coeff[k] += betas[k]
        s_err = float(np.sqrt(np.sum((coeff * sig) ** 2)))
        out.append((float(betas[k]), McEstimate(mean=float(s_val), std_error=s_err, n_blocks=nb_min)))
    return out


def ising_microstate_counts(
    n_spins: int, t: float, sweeps: int, seed: int
) -> np.ndarray:
    """Per-sweep visit counts of all 2^n Ising microstates (small n only).

    Used as a detailed-balance check against the exactly enumerated
    Boltzmann distribution.
    """
    if n_spins < 2 or n_spins > 20:
        raise ValueError(f"microstate counting needs 2 <= n_spins <= 20, got {n_spins}")
    if not t > 0:
        raise ValueError(f"t must be > 0, got {t}")
    rng = np.random.default_rng(np.random.SeedSequence([seed]))
    spins = np.where(rng.random(n_spins) < 0.5, -1.0, 1.0)
    counts = np.zeros(2 ** n_spins, dtype=np.int64)
    _ising_counts(rng, spins, sweeps, 1.0 / t, counts)
    return counts
