"""Stable CSV/JSON renderings of sweep, Monte Carlo and report results.

Column orders and field names are part of the public contract; floats are
written with shortest round-trip precision so that re-running a seeded
command reproduces files byte for byte.
"""

import json
import math
from typing import List, Optional, Sequence, Tuple

from .meanfield import SweepResult
from .montecarlo import McEstimate, McTrace

__all__ = [
    "SWEEP_CSV_COLUMNS",
    "MC_CSV_COLUMNS",
    "format_value",
    "sweep_csv",
    "mc_rows",
    "mc_csv",
    "json_document",
]

SWEEP_CSV_COLUMNS = ("t", "m", "entropy_per_spin", "free_energy_per_spin")
MC_CSV_COLUMNS = (
    "beta",
    "t",
    "energy_mean",
    "energy_err",
    "m_mean",
    "m_err",
    "entropy_mean",
    "entropy_err",
)


def format_value(value) -> str:
    """Shortest round-trip text for a float; empty string for missing values."""
    if value is None:
        return ""
    return repr(float(value))


def sweep_csv(result: SweepResult) -> str:
    lines = [",".join(SWEEP_CSV_COLUMNS)]
    for p in result.points:
        lines.append(
            ",".join(
                (
                    format_value(p.t),
                    format_value(p.m),
                    format_value(p.entropy_per_spin),
                    format_value(p.free_energy_per_spin),
                )
            )
        )
    return "\n".join(lines) + "\n"


def mc_rows(
    curve: Sequence[Tuple[float, McTrace]],
    entropies: Optional[Sequence[Tuple[float, McEstimate]]] = None,
) -> List[dict]:
    """Rows of the Monte Carlo output table, one per beta grid point."""
    s_by_beta = {b: est for b, est in entropies} if entropies else {}
    rows = []
    for beta, trace in curve:
        s_est = s_by_beta.get(beta)
        rows.append(
            {
                "beta": beta,
                "t": trace.config.t,
                "energy_mean": trace.energy_per_spin.mean,
                "energy_err": trace.energy_per_spin.std_error,
                "m_mean": trace.magnetization.mean,
                "m_err": trace.magnetization.std_error,
                "entropy_mean": s_est.mean if s_est else None,
                "entropy_err": s_est.std_error if s_est else None,
            }
        )
    return rows


def mc_csv(rows: Sequence[dict]) -> str:
    lines = [",".join(MC_CSV_COLUMNS)]
    for row in rows:
        lines.append(",".join(format_value(row[col]) for col in MC_CSV_COLUMNS))
    return "\n".join(lines) + "\n"


def _jsonable(obj):
    """Recursively make a payload strict-JSON safe (infinities to strings)."""
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, float) and math.isinf(obj):
        return "divergent"
    return obj


def json_document(manifest: dict, data: dict) -> str:
    """The single top-level JSON object with manifest and data keys."""
    return json.dumps({"manifest": manifest, "data": _jsonable(data)}, indent=2) + "\n"
