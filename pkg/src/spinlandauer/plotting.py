"""Figure rendering for sweep and Monte Carlo results (files only, no GUI)."""

from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .meanfield import SweepResult, entropy_limits

__all__ = ["plot_sweep", "plot_mc_curve"]


def plot_sweep(result: SweepResult, path: str) -> None:
    """Magnetization and entropy per spin versus reduced temperature."""
    ts = [p.t for p in result.points]
    ms = [p.m for p in result.points]
    ss = [p.entropy_per_spin for p in result.points]
    fig, (ax_m, ax_s) = plt.subplots(1, 2, figsize=(9.0, 3.6))
    ax_m.plot(ts, ms, "o-", ms=3)
    ax_m.axvline(result.t_c, color="gray", ls="--", lw=0.8, label=f"$t_c$ = {result.t_c:.4g}")
    ax_m.set_xlabel("t = kT/J")
    ax_m.set_ylabel("m")
    ax_m.legend(frameon=False)
    ax_s.plot(ts, ss, "s-", ms=3, color="C1")
    limits = entropy_limits(result.model)
    ax_s.axhline(limits.s_at_tc, color="gray", ls=":", lw=0.8)
    if not limits.zero_divergent:
        ax_s.axhline(limits.s_at_zero, color="gray", ls=":", lw=0.8)
    ax_s.axvline(result.t_c, color="gray", ls="--", lw=0.8)
    ax_s.set_xlabel("t = kT/J")
    ax_s.set_ylabel("S / kN")
    fig.suptitle(result.model.label)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_mc_curve(rows: Sequence[dict], path: str, s_reference: float = None) -> None:
    """Sampled energy (and entropy, when present) against inverse temperature.

    ``s_reference`` draws a dotted line at the infinite-temperature entropy
    of the sampled model.
    """
    betas = [r["beta"] for r in rows]
    has_entropy = any(r["entropy_mean"] is not None for r in rows)
    n_panels = 2 if has_entropy else 1
    fig, axes = plt.subplots(1, n_panels, figsize=(4.8 * n_panels, 3.6), squeeze=False)
    ax_e = axes[0][0]
    ax_e.errorbar(
        betas,
        [r["energy_mean"] for r in rows],
        yerr=[r["energy_err"] for r in rows],
        fmt="o-",
        ms=3,
        capsize=2,
    )
    ax_e.set_xlabel(r"$\beta$ = J/kT")
    ax_e.set_ylabel("E / NJ")
    if has_entropy:
        ax_s = axes[0][1]
        ax_s.errorbar(
            betas,
            [r["entropy_mean"] for r in rows],
            yerr=[r["entropy_err"] for r in rows],
            fmt="s-",
            ms=3,
            capsize=2,
            color="C1",
        )
        if s_reference is not None:
            ax_s.axhline(s_reference, color="gray", ls=":", lw=0.8)
        ax_s.set_xlabel(r"$\beta$ = J/kT")
        ax_s.set_ylabel("S / kN")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
