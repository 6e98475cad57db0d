"""Command-line entry point.

Usage:

    wastefigure cascade|link|relay|fwa <scenario.json>
                [--json PATH] [--csv PATH] [--grid NX NY] [--quiet]

stdout carries the report (numbers at 4 significant figures), stderr
carries diagnostics. Machine-readable outputs hold full precision.
Exit codes: 0 on success, 1 on validation errors, 2 on I/O errors.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import warnings

from . import config
from .cascade import Cascade, contribution_report
from .energy import (
    ApproximationRegimeWarning,
    energy_per_bit_link,
    link_waste,
    link_waste_approx,
    max_efficient_distance,
)
from .fwa import fwa_ellipse_axes, fwa_verdict
from .region import GridSpec, sweep_fwa, sweep_relay, region_json_doc, write_region_csv
from .relay import ellipse_axes, relay_verdict
from .units import linear_to_db

__all__ = ["main"]


def _fmt(x: float) -> str:
    return format(x, "#.4g")


def _fmt_db(x: float) -> str:
    return f"{x:.2f}"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wastefigure",
        description="Waste-factor analysis of cascaded wireless systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("cascade", "waste factor and per-stage contributions of a chain"),
        ("link", "end-to-end link waste, energy per bit, max efficient distance"),
        ("relay", "relay-versus-direct energy comparison"),
        ("fwa", "access-point-versus-direct comparison under a traffic mix"),
    ):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("file", help="scenario file (JSON)")
        cmd.add_argument("--json", dest="json_path", metavar="PATH",
                         help="write a machine-readable report/region document")
        cmd.add_argument("--csv", dest="csv_path", metavar="PATH",
                         help="write the swept region as CSV (relay/fwa sweeps)")
        cmd.add_argument("--grid", nargs=2, type=int, metavar=("NX", "NY"),
                         help="sweep the advantageous region on an NX x NY grid")
        cmd.add_argument("--quiet", action="store_true", help="suppress the stdout report")
    return parser


def _energy_line(name: str, e: float, n0: float) -> str:
    return f"{name} = {_fmt(e)} J/bit (E/N0 {_fmt_db(linear_to_db(e / n0))} dB)"


def _noted(fn, *args, **kwargs):
    """Call fn, demoting regime warnings to stderr notes."""
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", ApproximationRegimeWarning)
        result = fn(*args, **kwargs)
    for w in caught:
        print(f"note: {w.message}", file=sys.stderr)
    return result


def _cmd_cascade(sf: config.ScenarioFile, args) -> tuple[list[str], dict]:
    c: Cascade = sf.cascade
    rep = contribution_report(c)
    wf_db = linear_to_db(rep.total_waste)
    lines = [f"W = {_fmt(rep.total_waste)}, WF = {_fmt_db(wf_db)} dB"]
    lines.append("stage contributions (largest first):")
    lines.append(f"  {'stage':<20} {'term':>12} {'share':>10}")
    for term in rep.terms:
        lines.append(f"  {term.label:<20} {_fmt(term.term):>12} {_fmt(term.share):>10}")
    doc = {
        "scenario": config.cascade_to_config(c),
        "report": {
            "waste": rep.total_waste,
            "waste_figure_db": wf_db,
            "terms": [dataclasses.asdict(t) for t in rep.terms],
        },
    }
    return lines, doc


def _cmd_link(sf: config.ScenarioFile, args) -> tuple[list[str], dict]:
    setup = sf.link
    w_exact = link_waste(setup.terminals, setup.g_ch)
    w_approx = link_waste_approx(setup.terminals, setup.g_ch)
    e_exact = energy_per_bit_link(setup.ctx, setup.terminals, setup.g_ch, mode="exact")
    e_approx = _noted(
        energy_per_bit_link, setup.ctx, setup.terminals, setup.g_ch, mode="approximate"
    )
    lines = [
        f"W_link = {_fmt(w_exact)} (WF {_fmt_db(linear_to_db(w_exact))} dB)",
        f"W_link approx = {_fmt(w_approx)}",
        _energy_line("E_b exact", e_exact, setup.ctx.n0),
        _energy_line("E_b approx", e_approx, setup.ctx.n0),
    ]
    if setup.channel is not None:
        d_star = max_efficient_distance(
            setup.ctx, setup.terminals, setup.channel.k, setup.channel.alpha
        )
        lines.append(
            "max efficient distance = "
            + (_fmt(d_star) if d_star is not None else "none")
        )
    else:
        d_star = None
        lines.append("max efficient distance = n/a (channel given as explicit gain)")
    doc = {
        "scenario": setup.to_config(),
        "report": {
            "w_link": w_exact,
            "w_link_approx": w_approx,
            "e_b": e_exact,
            "e_b_approx": e_approx,
            "max_efficient_distance": d_star,
        },
    }
    return lines, doc


def _grid_for(sf: config.ScenarioFile, args) -> GridSpec | None:
    spec = sf.sweep
    if args.grid is not None:
        nx, ny = args.grid
        spec = dataclasses.replace(spec or GridSpec(), nx=nx, ny=ny)
    return spec


def _sweep_lines(region) -> list[str]:
    spec = region.spec
    return [
        f"advantageous area fraction = {_fmt(region.area_fraction)} "
        f"({spec.mode} grid {spec.nx}x{spec.ny})"
    ]


def _cmd_relay(sf: config.ScenarioFile, args) -> tuple[list[str], dict]:
    s = sf.relay
    v = _noted(relay_verdict, s)
    lines = [
        _energy_line("direct energy", v.e_direct, s.ctx.n0),
        _energy_line("assisted energy", v.e_relayed, s.ctx.n0),
        f"energy ratio (assisted/direct) = {_fmt(v.ratio)}",
        f"verdict: {'use relay' if v.use_relay else 'use direct'}",
        f"rule margin = {_fmt(v.decision_margin)}",
    ]
    report = dataclasses.asdict(v)
    if s.alpha == 2.0:
        a, b = ellipse_axes(s)
        lines.append(f"ellipse semi-axes: a = {_fmt(a)} (d1/d3), b = {_fmt(b)} (d2/d3)")
        report["ellipse"] = {"a": a, "b": b}
    doc = {"scenario": s.to_config(), "report": report}
    spec = _grid_for(sf, args)
    if spec is not None:
        region = sweep_relay(s, spec)
        lines += _sweep_lines(region)
        _write_region_outputs(region, sf, args, doc)
    elif args.csv_path or (sf.output and sf.output.csv):
        raise ValueError("csv output requires a sweep (add a sweep section or --grid)")
    return lines, doc


def _cmd_fwa(sf: config.ScenarioFile, args) -> tuple[list[str], dict]:
    s = sf.fwa
    v = _noted(fwa_verdict, s)
    lines = [
        f"traffic mix: rho_u = {_fmt(s.traffic.rho_u)}, rho_d = {_fmt(s.traffic.rho_d)}",
        _energy_line("direct energy", v.e_direct, s.ctx.n0),
        _energy_line("assisted energy", v.e_relayed, s.ctx.n0),
        f"energy ratio (assisted/direct) = {_fmt(v.ratio)}",
        f"verdict: {'use access point' if v.use_ap else 'use direct'}",
        f"rule margin = {_fmt(v.decision_margin)}",
    ]
    report = dataclasses.asdict(v)
    if s.alpha == 2.0:
        a, b = fwa_ellipse_axes(s)
        lines.append(f"ellipse semi-axes: a = {_fmt(a)} (d1/d3), b = {_fmt(b)} (d2/d3)")
        report["ellipse"] = {"a": a, "b": b}
    doc = {"scenario": s.to_config(), "report": report}
    spec = _grid_for(sf, args)
    if spec is not None:
        region = sweep_fwa(s, spec)
        lines += _sweep_lines(region)
        _write_region_outputs(region, sf, args, doc)
    elif args.csv_path or (sf.output and sf.output.csv):
        raise ValueError("csv output requires a sweep (add a sweep section or --grid)")
    return lines, doc


def _write_region_outputs(region, sf: config.ScenarioFile, args, doc: dict) -> None:
    region_doc = region_json_doc(region)
    doc["region"] = {k: region_doc[k] for k in ("grid", "area_fraction", "mask")}
    doc["report"]["area_fraction"] = region.area_fraction
    csv_path = args.csv_path or (sf.output.csv if sf.output else None)
    if csv_path:
        write_region_csv(region, csv_path)
        print(f"wrote region CSV: {csv_path}", file=sys.stderr)


_COMMANDS = {
    "cascade": _cmd_cascade,
    "link": _cmd_link,
    "relay": _cmd_relay,
    "fwa": _cmd_fwa,
}


def _run(args) -> int:
    sf = config.load_scenario(args.file)
    if sf.kind != args.command:
        raise ValueError(
            f"the {args.command} command needs a matching scenario section; "
            f"the file holds a {sf.kind} scenario"
        )
    if args.command not in ("relay", "fwa"):
        if args.grid is not None:
            raise ValueError("--grid applies to the relay and fwa commands only")
        if args.csv_path or (sf.output and sf.output.csv):
            raise ValueError("csv output applies to region sweeps (relay/fwa)")
    lines, doc = _COMMANDS[args.command](sf, args)
    json_path = args.json_path or (sf.output.json if sf.output else None)
    if json_path:
        with open(json_path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
        print(f"wrote JSON report: {json_path}", file=sys.stderr)
    if not args.quiet:
        print("\n".join(lines))
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _run(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
