"""Command-line front end.

Subcommands: concurrence, density, sweep, figures, verify.  Exit codes:
0 success, 1 domain error, 2 usage error.  Numbers print with 12
significant digits; omitting --t selects the T -> 0 ground-state path.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from .entanglement import (
    ground_state_concurrence,
    thermal_concurrence,
    wootters_concurrence,
)
from .model import QubitParams, build_full_hamiltonian
from .sweep import (
    FIGURE_IDS,
    GridAxis,
    GridSpec,
    compare_experiments,
    dataset_to_csv,
    dataset_to_json,
    figure_dataset,
    format_number,
    run_sweep,
    write_dataset,
)
from .thermal import (
    closed_form_density,
    gibbs_state,
    ground_projector_state,
    zero_temperature_state,
)

__all__ = ["main", "build_parser"]


def _add_point_flags(parser: argparse.ArgumentParser, with_gate_charges: bool) -> None:
    parser.add_argument("--ej", type=float, help="both Josephson energies at once")
    parser.add_argument("--ej1", type=float, help="Josephson energy of qubit 1")
    parser.add_argument("--ej2", type=float, help="Josephson energy of qubit 2")
    parser.add_argument("--em", type=float, default=1.0, help="coupling energy (default 1)")
    parser.add_argument(
        "--t", type=float, default=None,
        help="temperature in units of e_m/k; omit for the T -> 0 ground state",
    )
    if with_gate_charges:
        parser.add_argument("--ng1", type=float, default=0.5, help="gate charge 1 (default 0.5)")
        parser.add_argument("--ng2", type=float, default=0.5, help="gate charge 2 (default 0.5)")
        parser.add_argument("--ec1", type=float, default=0.0, help="charging energy 1 (default 0)")
        parser.add_argument("--ec2", type=float, default=0.0, help="charging energy 2 (default 0)")


def _resolve_josephson(parser, args) -> tuple[float, float]:
    if args.ej is not None and (args.ej1 is not None or args.ej2 is not None):
        parser.error("--ej is mutually exclusive with --ej1/--ej2")
    if args.ej is not None:
        return args.ej, args.ej
    if args.ej1 is None or args.ej2 is None:
        parser.error("provide --ej, or both --ej1 and --ej2")
    return args.ej1, args.ej2


def _at_degeneracy_point(args) -> bool:
    return (
        getattr(args, "ng1", 0.5) == 0.5
        and getattr(args, "ng2", 0.5) == 0.5
        and getattr(args, "ec1", 0.0) == 0.0
        and getattr(args, "ec2", 0.0) == 0.0
    )


def _matrix_lines(matrix: np.ndarray) -> list[str]:
    return [",".join(format_number(x) for x in row) for row in matrix]


def _emit(text: str, out_path: str | None) -> None:
    if out_path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out_path).write_text(text)


def cmd_concurrence(parser, args) -> int:
    e_j1, e_j2 = _resolve_josephson(parser, args)
    if _at_degeneracy_point(args):
        if args.t is None:
            value = ground_state_concurrence(e_j1, e_j2, args.em)
        else:
            value = thermal_concurrence(e_j1, e_j2, args.em, args.t)
    else:
        params = QubitParams(
            e_c1=args.ec1, e_c2=args.ec2, e_j1=e_j1, e_j2=e_j2,
            e_m=args.em, n_g1=args.ng1, n_g2=args.ng2,
        )
        h = build_full_hamiltonian(params)
        state = ground_projector_state(h) if args.t is None else gibbs_state(h, args.t)
        value = wootters_concurrence(state)

    lines = [
        f"e_j1 = {format_number(e_j1)}",
        f"e_j2 = {format_number(e_j2)}",
        f"e_m = {format_number(args.em)}",
        "t = 0+ (ground-state limit)" if args.t is None else f"t = {format_number(args.t)}",
    ]
    if not _at_degeneracy_point(args):
        lines += [
            f"n_g1 = {format_number(args.ng1)}",
            f"n_g2 = {format_number(args.ng2)}",
            f"e_c1 = {format_number(args.ec1)}",
            f"e_c2 = {format_number(args.ec2)}",
        ]
    lines.append(f"C = {format_number(value)}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_density(parser, args) -> int:
    e_j1, e_j2 = _resolve_josephson(parser, args)
    if args.check and args.t is None:
        parser.error("--check requires --t (the closed form is a finite-T construction)")
    if args.check and not _at_degeneracy_point(args):
        parser.error("--check is defined at the charge degeneracy point only")

    if _at_degeneracy_point(args) and args.t is None:
        state = zero_temperature_state(e_j1, e_j2, args.em)
    else:
        params = QubitParams(
            e_c1=args.ec1, e_c2=args.ec2, e_j1=e_j1, e_j2=e_j2,
            e_m=args.em, n_g1=args.ng1, n_g2=args.ng2,
        )
        h = build_full_hamiltonian(params)
        state = ground_projector_state(h) if args.t is None else gibbs_state(h, args.t)

    if args.format == "json":
        import json

        payload: dict[str, object] = {
            "basis": ["|00>", "|01>", "|10>", "|11>"],
            "matrix": [[float(format_number(x)) for x in row] for row in state.matrix],
        }
        if args.check:
            closed = closed_form_density(e_j1, e_j2, args.em, args.t)
            diff = float(np.max(np.abs(state.matrix - closed.matrix)))
            payload["closed_form"] = [
                [float(format_number(x)) for x in row] for row in closed.matrix
            ]
            payload["max_abs_difference"] = float(format_number(diff))
        _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.out)
        return 0

    lines = _matrix_lines(state.matrix)
    if args.check:
        closed = closed_form_density(e_j1, e_j2, args.em, args.t)
        diff = float(np.max(np.abs(state.matrix - closed.matrix)))
        lines.append("closed-form:")
        lines.extend(_matrix_lines(closed.matrix))
        lines.append(f"max |spectral - closed-form| = {format_number(diff)}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _parse_axis(parser, text: str) -> GridAxis:
    parts = text.split(":")
    if len(parts) != 4:
        parser.error(f"axis {text!r} must look like name:start:stop:count")
    name, start, stop, count = parts
    try:
        return GridAxis(name, float(start), float(stop), int(count))
    except ValueError as exc:
        parser.error(str(exc))


def cmd_sweep(parser, args) -> int:
    axes = tuple(_parse_axis(parser, text) for text in args.axis)
    fixed: dict[str, float] = {}
    for flag, name in (("ej", "e_j"), ("ej1", "e_j1"), ("ej2", "e_j2"), ("em", "e_m"), ("t", "t")):
        value = getattr(args, flag)
        if value is not None:
            fixed[name] = value
    try:
        spec = GridSpec(axes=axes, fixed=fixed)
    except ValueError as exc:
        parser.error(str(exc))
    dataset = run_sweep(spec, t_physical_mk=args.t_physical_mk)
    text = dataset_to_csv(dataset) if args.format == "csv" else dataset_to_json(dataset)
    _emit(text, args.out)
    return 0


def cmd_figures(parser, args) -> int:
    ids = args.only if args.only else list(FIGURE_IDS)
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for figure_id in ids:
        dataset = figure_dataset(
            figure_id, literal_t=args.literal_t, t_physical_mk=args.t_physical_mk
        )
        path = outdir / f"{figure_id}.{args.format}"
        write_dataset(dataset, path, fmt=args.format)
        sys.stdout.write(f"wrote {path} ({len(dataset.rows)} rows)\n")
    return 0


def cmd_verify(parser, args) -> int:
    points = compare_experiments()
    header = (
        f"{'point':<18} {'e_j1':>6} {'e_j2':>6} {'measured':>9} "
        f"{'theory':>8} {'computed':>15} {'|diff|':>10} status"
    )
    sys.stdout.write(header + "\n")
    all_ok = True
    for p in points:
        diff = abs(p.computed_c - p.reported_theory_c)
        ok = p.within_tolerance
        all_ok &= ok
        sys.stdout.write(
            f"{p.label:<18} {p.e_j1:>6} {p.e_j2:>6} {p.reported_measured_c:>9} "
            f"{p.reported_theory_c:>8} {format_number(p.computed_c):>15} "
            f"{diff:>10.3e} {'PASS' if ok else 'FAIL'}\n"
        )
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qubitent",
        description="Thermal and ground-state entanglement of two coupled charge qubits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_conc = sub.add_parser("concurrence", help="concurrence at one operating point")
    _add_point_flags(p_conc, with_gate_charges=True)
    p_conc.add_argument("--out", default=None, help="output path (default stdout)")

    p_dens = sub.add_parser("density", help="dump the thermal density matrix")
    _add_point_flags(p_dens, with_gate_charges=True)
    p_dens.add_argument("--check", action="store_true",
                        help="also print the closed form and the max element difference")
    p_dens.add_argument("--format", choices=("csv", "json"), default="csv")
    p_dens.add_argument("--out", default=None, help="output path (default stdout)")

    p_sweep = sub.add_parser("sweep", help="concurrence over a 1- or 2-axis grid")
    p_sweep.add_argument("--axis", action="append", required=True,
                         metavar="NAME:START:STOP:COUNT",
                         help="sweep axis (repeat for a 2-d grid)")
    _add_point_flags(p_sweep, with_gate_charges=False)
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.add_argument("--out", default=None, help="output path (default stdout)")
    p_sweep.add_argument("--t-physical-mk", type=float, default=None,
                         help="annotated physical temperature in mK (warning above 450)")

    p_figs = sub.add_parser("figures", help="write the shipped figure datasets")
    p_figs.add_argument("--only", action="append", choices=FIGURE_IDS,
                        help="restrict to one figure id (repeatable)")
    p_figs.add_argument("--outdir", default=".", help="output directory (default .)")
    p_figs.add_argument("--format", choices=("csv", "json"), default="csv")
    p_figs.add_argument("--literal-t", action="store_true",
                        help="evaluate fixed-temperature figures at the literal t = 20")
    p_figs.add_argument("--t-physical-mk", type=float, default=None,
                        help="annotated physical temperature in mK (warning above 450)")

    sub.add_parser("verify", help="compare computed concurrence with the reference values")

    return parser


_COMMANDS = {
    "concurrence": cmd_concurrence,
    "density": cmd_density,
    "sweep": cmd_sweep,
    "figures": cmd_figures,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](parser, args)
    except (ValueError, TypeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
