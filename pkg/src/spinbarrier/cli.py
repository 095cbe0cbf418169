"""Command-line front end: single points, sweeps, and verification runs.

Exit codes: 0 success, 1 input error, 2 solver non-convergence,
3 verification failure.  Diagnostics go to stderr as single lines; the
data stream only ever receives complete output.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .core import (
    EvanescentIncidentError,
    KleinRegimeError,
    NoBoundStateError,
    NoConvergenceError,
    NonpositiveMassError,
    NotPropagatingError,
    SpinBarrierError,
    StiffFailureError,
    WellSpec,
)
from .dispersion import energy_from_k_rel, reflection_angles, wave_vectors_rel
from .reflection import (
    amplitudes_rel,
    beam_report,
    boundary_residuals,
    fully_evanescent,
    matching_params_rel,
)
from .soc import SlopedBarrier, barrier_soe
from .verify import DEFAULT_WIDTHS, slope_convergence_sweep, sweep_csv_lines
from .well import dump_wavefunction, solve_bound_state, soe_integral_form

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_SOLVER = 2
EXIT_VERIFY = 3

_INPUT_ERRORS = (
    ValueError,
    KleinRegimeError,
    EvanescentIncidentError,
    NotPropagatingError,
    NonpositiveMassError,
)
_SOLVER_ERRORS = (NoBoundStateError, NoConvergenceError, StiffFailureError)

_REFLECT_SWEEP_HEADER = (
    "param,value,energy_ev,delta_ev,alpha_deg,alpha_prime_deg,"
    "refl_conserving,refl_flip,transmitted,flux_imbalance,error"
)
_WELL_SWEEP_HEADER = (
    "param,value,e0_ev,delta_ev,psi_sq_left_iface,psi_sq_right_iface,"
    "iterations,residual,error"
)

_WELL_PARAMS = {"kperp", "width", "vl", "vr"}
_REFLECT_PARAMS = {"kx", "kz", "energy-ev", "vb", "delta"}


class _CliInputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on bad flags; remap to the input-error code.
    def error(self, message):
        raise _CliInputError(message)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="spinbarrier",
        description=(
            "Spin-resolved electron reflection from a potential step and "
            "bound states of asymmetric wells. Units are fixed: energies "
            "in eV, lengths in cm, wave vectors in cm^-1; all numeric "
            "flags accept scientific notation."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--config", help="JSON file with flag values; explicit flags win")
        p.add_argument("--output", help="write data to this path instead of stdout")

    def add_reflect_inputs(p):
        p.add_argument("--energy-ev", type=float, help="kinetic energy, eV")
        p.add_argument("--kz", type=float, help="incident longitudinal wave vector, cm^-1")
        p.add_argument("--kx", type=float, help="transverse wave vector, cm^-1")
        p.add_argument("--vb", type=float, help="barrier height, eV")
        p.add_argument("--delta", type=float, help="spin-orbit half-splitting, eV")
        p.add_argument("--slope-width", type=float, help="barrier slope width, cm")

    p_reflect = sub.add_parser("reflect", help="single-point step reflection")
    add_reflect_inputs(p_reflect)
    p_reflect.add_argument("--format", choices=("table", "json"), default="table")
    add_common(p_reflect)

    p_well = sub.add_parser("well", help="asymmetric-well ground state")
    p_well.add_argument("--width", type=float, help="well width, cm")
    p_well.add_argument("--vl", type=float, help="left wall height, eV")
    p_well.add_argument("--vr", type=float, help="right wall height, eV")
    p_well.add_argument("--kperp", type=float, help="transverse wave vector, cm^-1")
    p_well.add_argument("--steps", type=int, default=2000)
    p_well.add_argument("--psi-out", help="dump the wavefunction to this path")
    p_well.add_argument("--format", choices=("table", "json"), default="table")
    add_common(p_well)

    p_sweep = sub.add_parser("sweep", help="1D parameter sweep, CSV output")
    p_sweep.add_argument(
        "--param",
        required=False,
        choices=sorted(_REFLECT_PARAMS | _WELL_PARAMS),
    )
    p_sweep.add_argument("--from", dest="start", type=float)
    p_sweep.add_argument("--to", dest="stop", type=float)
    p_sweep.add_argument("--steps", type=int)
    add_reflect_inputs(p_sweep)
    p_sweep.add_argument("--width", type=float, help="well width, cm")
    p_sweep.add_argument("--vl", type=float, help="left wall height, eV")
    p_sweep.add_argument("--vr", type=float, help="right wall height, eV")
    p_sweep.add_argument("--kperp", type=float, help="transverse wave vector, cm^-1")
    add_common(p_sweep)

    p_verify = sub.add_parser("verify", help="oracle convergence sweep vs closed forms")
    add_reflect_inputs(p_verify)
    p_verify.add_argument(
        "--widths",
        default=",".join(repr(w) for w in DEFAULT_WIDTHS),
        help="comma-separated slope widths, cm, decreasing",
    )
    p_verify.add_argument("--steps", type=int, default=4000)
    p_verify.add_argument("--threshold", type=float, default=1e-3)
    p_verify.add_argument("--format", choices=("csv", "table"), default="csv")
    add_common(p_verify)

    return parser


def _explicit_flags(argv) -> set[str]:
    names = set()
    for token in argv:
        if token.startswith("--"):
            names.add(token[2:].split("=", 1)[0].replace("-", "_"))
    return names


def _apply_config(args, argv) -> None:
    if not getattr(args, "config", None):
        return
    try:
        with open(args.config, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise _CliInputError(f"cannot read config: {exc}") from exc
    if not isinstance(data, dict):
        raise _CliInputError("config must be a JSON object")
    explicit = _explicit_flags(argv)
    for key, value in data.items():
        dest = key.replace("-", "_")
        if dest in explicit:
            continue
        if not hasattr(args, dest):
            raise _CliInputError(f"unknown config key: {key}")
        setattr(args, dest, value)


def _require(args, names) -> None:
    missing = [n for n in names if getattr(args, n.replace("-", "_"), None) is None]
    if missing:
        flags = ", ".join("--" + n for n in missing)
        raise _CliInputError(f"missing required flag(s): {flags}")


def _resolve_delta(args) -> float:
    """Direct value wins over the slope-derived one, with a warning."""
    delta = getattr(args, "delta", None)
    slope_width = getattr(args, "slope_width", None)
    if delta is not None:
        if slope_width is not None:
            print(
                "warning: both --delta and --slope-width given; using --delta",
                file=sys.stderr,
            )
        return float(delta)
    if slope_width is not None:
        _require(args, ("kx", "vb"))
        return barrier_soe(args.kx, args.vb, slope_width)
    return 0.0


def _resolve_energy(args, delta: float) -> float:
    energy = getattr(args, "energy_ev", None)
    kz = getattr(args, "kz", None)
    if (energy is None) == (kz is None):
        raise _CliInputError("give exactly one of --energy-ev and --kz")
    if energy is not None:
        return float(energy)
    if not kz > 0.0:
        raise _CliInputError("--kz must be positive")
    return energy_from_k_rel(args.kx, kz, delta)


def _fmt(value) -> str:
    if isinstance(value, complex):
        return f"{value.real:.6g}{value.imag:+.6g}j"
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def _emit(text: str, output_path) -> None:
    if output_path:
        with open(output_path, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _complex_json(value: complex) -> dict:
    return {"re": value.real, "im": value.imag}


def _reflect_document(args) -> dict:
    _require(args, ("kx", "vb"))
    if args.kx < 0.0:
        raise _CliInputError("--kx must be non-negative")
    if not args.vb > 0.0:
        raise _CliInputError("--vb must be positive")
    delta = _resolve_delta(args)
    energy = _resolve_energy(args, delta)
    wv = wave_vectors_rel(energy, delta, args.kx, args.vb)
    params = matching_params_rel(energy, args.kx, args.vb)
    amps = amplitudes_rel(energy, delta, args.kx, args.vb)
    residuals = boundary_residuals(amps, wv, params)
    report = beam_report(energy, delta, args.kx, args.vb)
    classification = {k: v.value for k, v in wv.classification().items()}
    return {
        "inputs": {
            "energy_ev": energy,
            "kx": args.kx,
            "kz": wv.kz.real,
            "vb": args.vb,
            "slope_width": getattr(args, "slope_width", None),
        },
        "delta_ev": delta,
        "wave_vectors": {
            name: {**_complex_json(getattr(wv, name)), "classification": classification[name]}
            for name in ("kz", "kz_prime", "qz", "qz_prime")
        },
        "angles_deg": {
            "alpha_deg": report.alpha,
            "alpha_prime_deg": report.alpha_prime,
        },
        "amplitudes": {
            name: _complex_json(getattr(amps, name))
            for name in (
                "up_refl_keep",
                "up_refl_flip",
                "up_trans_keep",
                "up_trans_flip",
                "down_refl_keep",
                "down_refl_flip",
                "down_trans_keep",
                "down_trans_flip",
            )
        },
        "fractions": {
            "refl_conserving": report.refl_conserving_fraction,
            "refl_flip": report.refl_flip_fraction,
            "transmitted": report.transmitted_fraction,
            "flux_imbalance": report.flux_imbalance,
        },
        "residuals": [float(r) for r in residuals],
        "diagnostics": {
            "fully_evanescent": fully_evanescent(wv),
            "mass_ratio": params.mass_ratio,
            "spin_coupling": params.spin_coupling,
        },
    }


def _flatten_table(doc: dict, prefix: str = "") -> list[str]:
    lines = []
    for key, value in doc.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            if set(value) == {"re", "im"}:
                lines.append(f"{name} = {_fmt(complex(value['re'], value['im']))}")
            elif set(value) == {"re", "im", "classification"}:
                c = complex(value["re"], value["im"])
                lines.append(f"{name} = {_fmt(c)} ({value['classification']})")
            else:
                lines.extend(_flatten_table(value, name + "."))
        elif isinstance(value, list):
            lines.append(f"{name} = [{', '.join(_fmt(v) for v in value)}]")
        else:
            lines.append(f"{name} = {_fmt(value)}")
    return lines


def _run_reflect(args) -> int:
    doc = _reflect_document(args)
    if args.format == "json":
        _emit(json.dumps(doc, indent=2), args.output)
    else:
        _emit("\n".join(_flatten_table(doc)), args.output)
    return EXIT_OK


def _run_well(args) -> int:
    _require(args, ("width", "vl", "vr", "kperp"))
    well = WellSpec(width=args.width, v_left=args.vl, v_right=args.vr)
    result = solve_bound_state(well, args.kperp, steps=args.steps)
    if args.psi_out:
        dump_wavefunction(result, args.psi_out)
    doc = {
        "inputs": {
            "width": args.width,
            "vl": args.vl,
            "vr": args.vr,
            "kperp": args.kperp,
            "steps": args.steps,
        },
        "e0_ev": result.e0,
        "delta_ev": result.delta,
        "psi_sq_left_iface": result.psi_sq_left_iface,
        "psi_sq_right_iface": result.psi_sq_right_iface,
        "iterations": result.iterations,
        "residual": result.residual,
        "diagnostics": {
            "bracket_ev": list(result.bracket),
            "delta_integral_form_ev": soe_integral_form(result, well, args.kperp),
        },
    }
    if args.format == "json":
        _emit(json.dumps(doc, indent=2), args.output)
    else:
        _emit("\n".join(_flatten_table(doc)), args.output)
    return EXIT_OK


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _run_sweep(args) -> int:
    _require(args, ("param",))
    if args.start is None or args.stop is None:
        raise _CliInputError("sweep needs --from and --to")
    if args.steps is None or args.steps < 2:
        raise _CliInputError("sweep needs --steps >= 2")
    param = args.param
    dest = param.replace("-", "_")
    if getattr(args, dest, None) is not None:
        raise _CliInputError(f"swept parameter --{param} must not also be fixed")
    if param in _REFLECT_PARAMS:
        if param == "energy-ev" and args.kz is not None:
            raise _CliInputError("sweeping --energy-ev conflicts with fixed --kz")
        if param == "kz" and args.energy_ev is not None:
            raise _CliInputError("sweeping --kz conflicts with fixed --energy-ev")
        if param not in ("energy-ev", "kz") and (args.energy_ev is None) == (args.kz is None):
            raise _CliInputError("give exactly one of --energy-ev and --kz")
        if param == "delta" and args.slope_width is not None:
            print(
                "warning: --slope-width ignored while sweeping --delta",
                file=sys.stderr,
            )
            args.slope_width = None
    values = np.linspace(args.start, args.stop, args.steps)

    rows = []
    if param in _WELL_PARAMS:
        header = _WELL_SWEEP_HEADER
        for value in values:
            setattr(args, dest, float(value))
            try:
                _require(args, ("width", "vl", "vr", "kperp"))
                well = WellSpec(width=args.width, v_left=args.vl, v_right=args.vr)
                result = solve_bound_state(well, args.kperp)
                cells = [
                    param,
                    float(value),
                    result.e0,
                    result.delta,
                    result.psi_sq_left_iface,
                    result.psi_sq_right_iface,
                    result.iterations,
                    result.residual,
                    "",
                ]
            except (_CliInputError, SpinBarrierError, ValueError) as exc:
                cells = [param, float(value), None, None, None, None, None, None,
                         str(exc).replace(",", ";").replace("\n", " ")]
            rows.append(",".join(_csv_cell(c) for c in cells))
            setattr(args, dest, None)
    else:
        header = _REFLECT_SWEEP_HEADER
        for value in values:
            setattr(args, dest, float(value))
            try:
                doc = _reflect_document(args)
                cells = [
                    param,
                    float(value),
                    doc["inputs"]["energy_ev"],
                    doc["delta_ev"],
                    doc["angles_deg"]["alpha_deg"],
                    doc["angles_deg"]["alpha_prime_deg"],
                    doc["fractions"]["refl_conserving"],
                    doc["fractions"]["refl_flip"],
                    doc["fractions"]["transmitted"],
                    doc["fractions"]["flux_imbalance"],
                    "",
                ]
            except (_CliInputError, SpinBarrierError, ValueError) as exc:
                cells = [param, float(value), None, None, None, None, None, None,
                         None, None, str(exc).replace(",", ";").replace("\n", " ")]
            rows.append(",".join(_csv_cell(c) for c in cells))
            setattr(args, dest, None)

    _emit("\n".join([header] + rows), args.output)
    return EXIT_OK


def _run_verify(args) -> int:
    _require(args, ("kx", "vb"))
    delta = _resolve_delta(args)
    energy = _resolve_energy(args, delta)
    try:
        widths = [float(w) for w in str(args.widths).split(",") if w.strip()]
    except ValueError as exc:
        raise _CliInputError(f"bad --widths: {exc}") from exc
    rows = slope_convergence_sweep(
        energy, delta, args.kx, args.vb, widths=widths, steps=args.steps
    )
    lines = sweep_csv_lines(rows)
    if args.format == "table":
        lines = ["width_cm dev_R dev_Rp dev_T dev_Tp"] + [
            " ".join(_fmt(float(x)) for x in line.split(","))
            for line in lines[1:]
        ]
    _emit("\n".join(lines), args.output)

    maxima = [row.max_deviation for row in rows]
    monotone = all(b < a for a, b in zip(maxima, maxima[1:]))
    if maxima[-1] > args.threshold or not monotone:
        print(
            f"verification failed: final deviation {maxima[-1]:.3e} "
            f"(threshold {args.threshold:.1e}), monotone={monotone}",
            file=sys.stderr,
        )
        return EXIT_VERIFY
    return EXIT_OK


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        _apply_config(args, argv)
        if args.command == "reflect":
            return _run_reflect(args)
        if args.command == "well":
            return _run_well(args)
        if args.command == "sweep":
            return _run_sweep(args)
        return _run_verify(args)
    except (_CliInputError, *_INPUT_ERRORS) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except _SOLVER_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SOLVER


if __name__ == "__main__":
    raise SystemExit(main())
