"""Feasibility-region sweeps: where does assisted routing save energy.

Evaluates the closed-form distance rules of the relay and FWA
comparisons over a grid and reports the advantageous set as a boolean
mask. Two grid modes:

* ``normalized``: coordinates are (d1/d3, d2/d3) with the direct
  distance fixed at 1; axes must be non-negative.
* ``planar``: coordinates are candidate relay positions in the plane,
  source at the origin, sink at (d3, 0); d1 and d2 are Euclidean
  distances to the grid point.

Membership uses the strict inequality, so boundary points (where the
two routes tie) count as not advantageous. Evaluations are pointwise
independent; sweeps may fan rows out to worker threads and still
assemble bit-identical masks.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .fwa import FwaScenario, rule_coefficients
from .relay import RelayScenario

__all__ = [
    "GridSpec",
    "FeasibilityRegion",
    "sweep_relay",
    "sweep_fwa",
    "region_subset",
    "write_region_csv",
    "region_json_doc",
    "write_region_json",
    "rle_decode",
]

_MODES = ("normalized", "planar")


@dataclass(frozen=True)
class GridSpec:
    """Sampling grid for a feasibility sweep."""

    mode: str = "normalized"
    x_range: tuple[float, float] = (0.0, 1.5)
    y_range: tuple[float, float] = (0.0, 1.5)
    nx: int = 201
    ny: int = 201
    d3: float = 1.0  # direct source-sink distance; used by planar mode only

    def __post_init__(self) -> None:
        if self.mode not in _MODES:
            raise ValueError(f"mode must be one of {_MODES}, got {self.mode!r}")
        for name in ("x_range", "y_range"):
            rng = getattr(self, name)
            try:
                lo, hi = (float(rng[0]), float(rng[1]))
            except (TypeError, ValueError, IndexError):
                raise ValueError(f"{name} must be a (low, high) pair, got {rng!r}") from None
            object.__setattr__(self, name, (lo, hi))
            if not (math.isfinite(lo) and math.isfinite(hi) and hi > lo):
                raise ValueError(f"{name} must satisfy low < high, got {rng!r}")
            if self.mode == "normalized" and lo < 0.0:
                raise ValueError(
                    f"{name}: normalized coordinates are distance ratios and "
                    f"cannot be negative, got lower bound {lo!r}"
                )
        for name in ("nx", "ny"):
            n = getattr(self, name)
            if not isinstance(n, int) or isinstance(n, bool) or n < 2:
                raise ValueError(f"{name} must be an integer >= 2, got {n!r}")
        if not (self.d3 > 0.0 and math.isfinite(self.d3)):
            raise ValueError(f"d3 must be positive and finite, got {self.d3!r}")

    @classmethod
    def planar_around(cls, d3: float, nx: int = 201, ny: int = 201) -> "GridSpec":
        """Planar grid boxing the source-sink segment with 1.5x its span."""
        return cls(
            mode="planar",
            x_range=(-0.25 * d3, 1.25 * d3),
            y_range=(-0.75 * d3, 0.75 * d3),
            nx=nx,
            ny=ny,
            d3=d3,
        )

    def x_points(self) -> np.ndarray:
        return np.linspace(self.x_range[0], self.x_range[1], self.nx)

    def y_points(self) -> np.ndarray:
        return np.linspace(self.y_range[0], self.y_range[1], self.ny)


@dataclass(frozen=True, eq=False)
class FeasibilityRegion:
    """Advantageous set of a sweep: mask[i, j] is grid point (x_i, y_j)."""

    spec: GridSpec
    mask: np.ndarray
    area_fraction: float
    scenario: RelayScenario | FwaScenario


def _rule_mask(spec: GridSpec, alpha: float, a: float, b: float, workers: int) -> np.ndarray:
    xs = spec.x_points()
    ys = spec.y_points()

    def rows(i0: int, i1: int) -> np.ndarray:
        x = xs[i0:i1, None]
        y = ys[None, :]
        if spec.mode == "normalized":
            d1, d2, lhs = x, y, 1.0
        else:
            d1 = np.hypot(x, y)
            d2 = np.hypot(x - spec.d3, y)
            lhs = spec.d3**alpha
        return lhs > a * d1**alpha + b * d2**alpha

    if workers <= 1:
        return rows(0, spec.nx)
    mask = np.empty((spec.nx, spec.ny), dtype=bool)
    bounds = np.linspace(0, spec.nx, workers + 1, dtype=int)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [
            (i0, i1, pool.submit(rows, i0, i1))
            for i0, i1 in zip(bounds[:-1], bounds[1:])
            if i1 > i0
        ]
        for i0, i1, fut in futures:
            mask[i0:i1] = fut.result()
    return mask


def _finish(spec: GridSpec, mask: np.ndarray, scenario) -> FeasibilityRegion:
    mask.setflags(write=False)
    return FeasibilityRegion(
        spec=spec,
        mask=mask,
        area_fraction=float(mask.mean()),
        scenario=scenario,
    )


def sweep_relay(s: RelayScenario, spec: GridSpec, workers: int = 1) -> FeasibilityRegion:
    """Sweep the relay distance rule (negligible non-path power form).

    The scenario's stored d1/d2/d3 are not used: each grid point implies
    its own geometry (normalized ratios, or planar positions with the
    grid's d3).
    """
    a = s.g_rx_sink / s.g_rx_relay
    b = s.w_tx_relay / s.w_tx_source
    return _finish(spec, _rule_mask(spec, s.alpha, a, b, workers), s)


def sweep_fwa(s: FwaScenario, spec: GridSpec, workers: int = 1) -> FeasibilityRegion:
    """Sweep the FWA distance rule; coefficients follow the traffic mix."""
    a, b = rule_coefficients(s)
    return _finish(spec, _rule_mask(spec, s.alpha, a, b, workers), s)


def region_subset(inner: FeasibilityRegion, outer: FeasibilityRegion) -> bool:
    """True iff every advantageous point of ``inner`` is advantageous in ``outer``."""
    if inner.spec != outer.spec:
        raise ValueError("region subset is only defined on identical grids")
    return bool(np.all(outer.mask | ~inner.mask))


def write_region_csv(region: FeasibilityRegion, path) -> None:
    """Write the sweep as CSV rows x,y,advantageous (floats at full precision)."""
    xs = region.spec.x_points()
    ys = region.spec.y_points()
    lines = ["x,y,advantageous"]
    for i in range(region.spec.nx):
        x = xs[i]
        row = region.mask[i]
        for j in range(region.spec.ny):
            lines.append(f"{x:.17g},{ys[j]:.17g},{int(row[j])}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def _rle_encode(flat: np.ndarray) -> tuple[int, list[int]]:
    changes = np.flatnonzero(flat[1:] != flat[:-1]) + 1
    bounds = np.concatenate(([0], changes, [flat.size]))
    return int(flat[0]), np.diff(bounds).tolist()


def rle_decode(first: int, runs: list[int], shape: tuple[int, int]) -> np.ndarray:
    """Rebuild a mask from its run-length encoding (x-major order)."""
    values = (first + np.arange(len(runs))) % 2
    flat = np.repeat(values.astype(bool), runs)
    return flat.reshape(shape)


def region_json_doc(region: FeasibilityRegion) -> dict:
    """Sweep as a JSON-ready mapping: grid, scenario echo, RLE mask, area."""
    first, runs = _rle_encode(region.mask.ravel(order="C"))
    return {
        "grid": {
            "mode": region.spec.mode,
            "x_range": list(region.spec.x_range),
            "y_range": list(region.spec.y_range),
            "nx": region.spec.nx,
            "ny": region.spec.ny,
            "d3": region.spec.d3,
        },
        "scenario": region.scenario.to_config(),
        "area_fraction": region.area_fraction,
        "mask": {"order": "x-major", "first": first, "runs": runs},
    }


def write_region_json(region: FeasibilityRegion, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(region_json_doc(region), fh, indent=2)
        fh.write("\n")
