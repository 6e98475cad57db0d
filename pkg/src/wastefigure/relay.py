"""Relay-versus-direct energy comparison for a single traffic direction.

Three nodes: a source transmitting either straight to the sink
(distance d3) or through a relay (source-relay d1, relay-sink d2), all
links following the same power-law channel ``G = k / d**alpha``. Both
routes run at the same rate and the relay hop re-transmits everything,
so the comparison reduces to energy per bit: the relayed route pays the
non-path power twice but can win on transmission waste when the direct
path is long or the relay hardware is favorable.

In the wide-coverage regime each hop's waste factor collapses to
``W_tx / (G_rx * G_hop)``, which turns "relaying uses less energy per
bit" into a closed-form test on distances and hardware ratios alone
when non-path power is negligible:

    d3**alpha > (g_rx_sink / g_rx_relay) * d1**alpha
                + (w_tx_relay / w_tx_source) * d2**alpha

At alpha = 2 the boundary of the advantageous set in normalized
(d1/d3, d2/d3) coordinates is a quarter ellipse with semi-axes
``sqrt(g_rx_relay / g_rx_sink)`` and ``sqrt(w_tx_source / w_tx_relay)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .energy import LN2, EnergyContext, _check_regime, _require

__all__ = [
    "RelayScenario",
    "RelayVerdict",
    "direct_energy",
    "relayed_energy",
    "relay_ratio",
    "decision_rule_holds",
    "ellipse_axes",
    "relay_verdict",
]


@dataclass(frozen=True)
class RelayScenario:
    """Hardware, geometry and operating point of a relay comparison.

    Waste factors are transmit-side figures of the transmitting node on
    each hop; gains are receive-side figures of the receiving node.
    Both routes share the energy context (same rate, same non-path
    power per active transmitter).
    """

    w_tx_source: float
    w_tx_relay: float
    g_rx_relay: float
    g_rx_sink: float
    alpha: float
    d1: float
    d2: float
    d3: float
    ctx: EnergyContext
    k: float = 1.0

    def __post_init__(self) -> None:
        _require("w_tx_source", self.w_tx_source, minimum=1.0)
        _require("w_tx_relay", self.w_tx_relay, minimum=1.0)
        for name in ("g_rx_relay", "g_rx_sink", "alpha", "d1", "d2", "d3", "k"):
            _require(name, getattr(self, name), minimum=0.0, exclusive=True)
        if not isinstance(self.ctx, EnergyContext):
            raise ValueError(f"ctx must be an EnergyContext, got {self.ctx!r}")

    def to_config(self) -> dict:
        """Scenario as a config mapping (linear units, re-parseable)."""
        return {
            "relay_scenario": {
                "w_tx_source": self.w_tx_source,
                "w_tx_relay": self.w_tx_relay,
                "g_rx_relay": self.g_rx_relay,
                "g_rx_sink": self.g_rx_sink,
                "alpha": self.alpha,
                "k": self.k,
                "d1": self.d1,
                "d2": self.d2,
                "d3": self.d3,
                "energy": {
                    "n0": self.ctx.n0,
                    "capacity": self.ctx.capacity,
                    "p_np": self.ctx.p_np,
                },
            }
        }


@dataclass(frozen=True)
class RelayVerdict:
    """Outcome of a relay comparison; use_relay iff ratio < 1 (tie -> direct)."""

    e_direct: float
    e_relayed: float
    ratio: float
    use_relay: bool
    decision_margin: float


def _hop_waste(w_tx: float, g_rx: float, d: float, alpha: float, k: float, hop: str) -> float:
    """Wide-coverage waste of one hop: w_tx / (g_rx * g_hop), g_hop = k/d**alpha."""
    g_hop = k / d**alpha
    _check_regime(g_rx * g_hop, hop)
    return w_tx / (g_rx * g_hop)


def direct_energy(s: RelayScenario) -> float:
    """Energy per bit of the single-hop route, wide-coverage waste model."""
    w3 = _hop_waste(s.w_tx_source, s.g_rx_sink, s.d3, s.alpha, s.k, "direct hop")
    return s.ctx.p_np / s.ctx.capacity + LN2 * s.ctx.n0 * w3


def relayed_energy(s: RelayScenario) -> float:
    """Energy per bit of the two-hop route; pays non-path power twice."""
    w1 = _hop_waste(s.w_tx_source, s.g_rx_relay, s.d1, s.alpha, s.k, "source-relay hop")
    w2 = _hop_waste(s.w_tx_relay, s.g_rx_sink, s.d2, s.alpha, s.k, "relay-sink hop")
    return 2.0 * s.ctx.p_np / s.ctx.capacity + LN2 * s.ctx.n0 * (w1 + w2)


def relay_ratio(s: RelayScenario) -> float:
    """Relayed over direct energy per bit; below 1 means the relay wins."""
    return relayed_energy(s) / direct_energy(s)


def decision_rule_holds(s: RelayScenario, include_pnp: bool = False) -> bool:
    """Closed-form test for the relay route using less energy per bit.

    The default form assumes negligible non-path power and compares
    distances weighted by hardware ratios only. With include_pnp the
    fixed-cost term enters, scaled by the channel constant so the test
    stays exactly equivalent to relay_ratio < 1 for any k.
    """
    rhs = (
        (s.g_rx_sink / s.g_rx_relay) * s.d1**s.alpha
        + (s.w_tx_relay / s.w_tx_source) * s.d2**s.alpha
    )
    if include_pnp:
        rhs += (
            s.k
            * (s.g_rx_sink / s.w_tx_source)
            * s.ctx.p_np
            / (s.ctx.n0 * s.ctx.capacity * LN2)
        )
    return s.d3**s.alpha > rhs


def ellipse_axes(s: RelayScenario) -> tuple[float, float]:
    """Semi-axes (a, b) of the advantageous-region boundary at alpha = 2.

    Coordinates are normalized distances: a along d1/d3, b along d2/d3.
    """
    if s.alpha != 2.0:
        raise ValueError(
            f"the advantageous region is an ellipse only at alpha = 2, got {s.alpha!r}"
        )
    return (
        math.sqrt(s.g_rx_relay / s.g_rx_sink),
        math.sqrt(s.w_tx_source / s.w_tx_relay),
    )


def relay_verdict(s: RelayScenario) -> RelayVerdict:
    """Full comparison: energies, ratio, decision, and rule margin."""
    e3 = direct_energy(s)
    e12 = relayed_energy(s)
    ratio = e12 / e3
    margin = s.d3**s.alpha - (
        (s.g_rx_sink / s.g_rx_relay) * s.d1**s.alpha
        + (s.w_tx_relay / s.w_tx_source) * s.d2**s.alpha
    )
    return RelayVerdict(
        e_direct=e3,
        e_relayed=e12,
        ratio=ratio,
        use_relay=ratio < 1.0,
        decision_margin=margin,
    )
