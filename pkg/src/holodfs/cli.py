"""Command-line interface: synthesis, verification, classification, sweeps.

All commands are deterministic: identical invocations produce byte-identical
output (Monte-Carlo estimates are controlled by ``--seed``, default 0).
Reports are JSON with complex numbers encoded as ``[re, im]`` pairs and
matrices row-major; sweeps are CSV.  The environment variable
``HOLODFS_OUTPUT_DIR`` supplies a default directory for relative ``--out``
paths.

Exit codes: 0 success, 2 flag/precondition validation, 3 tolerance breach,
4 output I/O failure, 5 unparseable input file.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from .entanglement import (
    classify_gate,
    entangling_power_analytic,
    entangling_power_mc,
    local_invariants,
    weyl_coordinates,
    CNOT_POINT,
)
from .linalg import unitarity_defect
from .holonomy import (
    GateParams2Q,
    analytic_gate_1q,
    analytic_gate_2q,
    evolve_and_project,
    params_for_rotation,
)
from .noise import GATE_PRESETS, SweepSpec, run_sweep
from .spin_model import (
    build_h1,
    build_h2,
    dfs3_frame,
    dfs6_frame,
    logical_frame_1q,
    logical_frame_2q,
    restrict,
)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_TOLERANCE = 3
EXIT_IO = 4
EXIT_PARSE = 5

TOLERANCES = {
    "analytic_distance": 1e-8,
    "cyclicity_residual": 1e-10,
    "leakage": 1e-10,
    "max_dynamical_norm": 1e-12,
    "input_unitarity": 1e-8,
    "cnot_weyl": 1e-6,
}

OUTPUT_DIR_ENV = "HOLODFS_OUTPUT_DIR"


class CommandError(Exception):
    """CLI failure carrying its exit code."""

    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _encode(value):
    """Recursively convert a payload into JSON-serializable primitives.

    Complex numbers become ``[re, im]`` pairs; negative zeros are
    normalized away so equivalent payloads serialize identically.
    """
    if isinstance(value, (complex, np.complexfloating)):
        return [float(value.real) + 0.0, float(value.imag) + 0.0]
    if isinstance(value, float):
        return value + 0.0
    if isinstance(value, np.ndarray):
        return _encode(value.tolist())
    if isinstance(value, np.floating):
        return float(value) + 0.0
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, dict):
        return {key: _encode(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_encode(item) for item in value]
    return value


def _resolve_out_path(path: str) -> str:
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not os.path.isabs(path):
        return os.path.join(base, path)
    return path


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    path = _resolve_out_path(out)
    try:
        with open(path, "w", newline="") as handle:
            handle.write(text)
    except OSError as exc:
        raise CommandError(f"cannot write output file {path}: {exc}", EXIT_IO)


def _json_text(payload: dict) -> str:
    return json.dumps(_encode(payload), indent=2, sort_keys=True) + "\n"


def _report_block(report) -> dict:
    block = {
        "holonomy": report.holonomy,
        "cyclicity_residual": report.cyclicity_residual,
        "max_dynamical_norm": report.max_dynamical_norm,
        "leakage": report.leakage,
        "analytic_distance": report.analytic_distance,
    }
    if report.fidelity is not None:
        block["fidelity"] = report.fidelity
    if report.sector_leakage is not None:
        block["sector_leakage"] = report.sector_leakage
    return block


def _single_qubit_runs(theta: float, gamma: float, m: int, omega: float,
                       samples: int):
    params = params_for_rotation(theta, gamma, m=m, omega=omega)
    ideal = analytic_gate_1q(theta, gamma)
    h_full = build_h1(params.couplings())
    h_eff, _ = restrict(h_full, dfs3_frame())
    effective = evolve_and_project(
        h_eff, logical_frame_1q(effective=True), params.tau, samples=samples,
        ideal=ideal,
    )
    full = evolve_and_project(
        h_full, logical_frame_1q(), params.tau, samples=samples, ideal=ideal
    )
    return params, ideal, effective, full


def _two_qubit_runs(theta_tilde: float, m_tilde: int, omega_tilde: float,
                    samples: int):
    params = GateParams2Q(theta_tilde=theta_tilde, m_tilde=m_tilde,
                          omega_tilde=omega_tilde)
    ideal = analytic_gate_2q(theta_tilde)
    h_full = build_h2(params.couplings())
    h_eff, _ = restrict(h_full, dfs6_frame())
    effective = evolve_and_project(
        h_eff, logical_frame_2q(effective=True), params.tau, samples=samples,
        ideal=ideal,
    )
    full = evolve_and_project(
        h_full, logical_frame_2q(), params.tau, samples=samples, ideal=ideal
    )
    return params, ideal, effective, full


def _check_distance(*reports) -> None:
    worst = max(report.analytic_distance for report in reports)
    if worst > TOLERANCES["analytic_distance"]:
        raise CommandError(
            f"analytic distance {worst:.3e} exceeds tolerance "
            f"{TOLERANCES['analytic_distance']:.0e}",
            EXIT_TOLERANCE,
        )


def _resolve_1q_target(args) -> tuple[float, float]:
    if args.gate is not None:
        if args.theta is not None or args.gamma is not None:
            raise CommandError(
                "--gate conflicts with --theta/--gamma", EXIT_VALIDATION
            )
        return GATE_PRESETS[args.gate]
    if args.theta is None or args.gamma is None:
        raise CommandError(
            "provide --gate or both --theta and --gamma", EXIT_VALIDATION
        )
    return args.theta, args.gamma


def cmd_synth_1q(args) -> int:
    theta, gamma = _resolve_1q_target(args)
    params, ideal, effective, full = _single_qubit_runs(
        theta, gamma, args.m, args.omega, args.samples
    )
    couplings = params.couplings()
    payload = {
        "command": "synth-1q",
        "params": {
            "theta": params.theta,
            "gamma": gamma,
            "phi": params.phi,
            "m": params.m,
            "omega": params.omega,
            "tau": params.tau,
            "couplings": {"j1a": couplings.j1a, "j2a": couplings.j2a, "b": couplings.b},
        },
        "target": {
            "axis": [math.sin(theta), 0.0, -math.cos(theta)],
            "rotation_angle": gamma,
            "matrix": ideal,
        },
        "effective": _report_block(effective),
        "full": _report_block(full),
        "tolerances": TOLERANCES,
    }
    _emit(_json_text(payload), args.out)
    _check_distance(effective, full)
    return EXIT_OK


def cmd_synth_2q(args) -> int:
    params, ideal, effective, full = _two_qubit_runs(
        args.theta_tilde, args.m_tilde, args.omega_tilde, args.samples
    )
    couplings = params.couplings()
    g1, g2 = local_invariants(full.holonomy)
    weyl = weyl_coordinates(full.holonomy)
    ep_mc, ep_stderr = entangling_power_mc(full.holonomy, args.mc_samples, args.seed)
    payload = {
        "command": "synth-2q",
        "params": {
            "theta_tilde": params.theta_tilde,
            "m_tilde": params.m_tilde,
            "omega_tilde": params.omega_tilde,
            "tau": params.tau,
            "couplings": {"j32": couplings.j32, "j42": couplings.j42},
        },
        "target": {"matrix": ideal},
        "effective": _report_block(effective),
        "full": _report_block(full),
        "entanglement": {
            "g1": g1,
            "g2": g2,
            "weyl": list(weyl),
            "ep": entangling_power_analytic(params.theta_tilde),
            "ep_mc": ep_mc,
            "ep_mc_stderr": ep_stderr,
            "mc_samples": args.mc_samples,
            "seed": args.seed,
            "cnot_equivalent": all(
                abs(c - ref) <= TOLERANCES["cnot_weyl"]
                for c, ref in zip(weyl, CNOT_POINT)
            ),
        },
        "tolerances": TOLERANCES,
    }
    _emit(_json_text(payload), args.out)
    _check_distance(effective, full)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.theta_tilde is not None:
        mode = "2q"
        _, _, effective, full = _two_qubit_runs(
            args.theta_tilde, args.m_tilde, args.omega_tilde, args.samples
        )
    else:
        mode = "1q"
        theta, gamma = _resolve_1q_target(args)
        _, _, effective, full = _single_qubit_runs(
            theta, gamma, args.m, args.omega, args.samples
        )

    def criteria(report) -> dict:
        checks = {
            "cyclicity_residual": report.cyclicity_residual,
            "max_dynamical_norm": report.max_dynamical_norm,
            "leakage": report.leakage,
            "analytic_distance": report.analytic_distance,
        }
        return {
            name: {"value": value, "tolerance": TOLERANCES[name],
                   "pass": bool(value <= TOLERANCES[name])}
            for name, value in checks.items()
        }

    blocks = {"effective": criteria(effective), "full": criteria(full)}
    all_pass = all(
        entry["pass"] for block in blocks.values() for entry in block.values()
    )
    payload = {
        "command": "verify",
        "mode": mode,
        "criteria": blocks,
        "pass": all_pass,
        "tolerances": TOLERANCES,
    }
    _emit(_json_text(payload), args.out)
    if not all_pass:
        raise CommandError("one or more verification criteria failed", EXIT_TOLERANCE)
    return EXIT_OK


def _load_matrix(path: str) -> np.ndarray:
    try:
        with open(path) as handle:
            raw = json.load(handle)
    except OSError as exc:
        raise CommandError(f"cannot read matrix file {path}: {exc}", EXIT_PARSE)
    except json.JSONDecodeError as exc:
        raise CommandError(f"matrix file {path} is not valid JSON: {exc}", EXIT_PARSE)
    matrix = np.empty((4, 4), dtype=complex)
    try:
        if len(raw) != 4:
            raise ValueError("expected 4 rows")
        for i, row in enumerate(raw):
            if len(row) != 4:
                raise ValueError(f"row {i} does not have 4 entries")
            for j, pair in enumerate(row):
                re, im = pair
                matrix[i, j] = float(re) + 1j * float(im)
    except (TypeError, ValueError) as exc:
        raise CommandError(
            f"matrix file {path} is not a 4x4 array of [re, im] pairs: {exc}",
            EXIT_PARSE,
        )
    return matrix


def cmd_classify(args) -> int:
    matrix = _load_matrix(args.matrix_file)
    defect = unitarity_defect(matrix)
    if defect > TOLERANCES["input_unitarity"]:
        raise CommandError(
            f"input matrix is not unitary: defect {defect:.3e} exceeds "
            f"{TOLERANCES['input_unitarity']:.0e}",
            EXIT_VALIDATION,
        )
    report = classify_gate(
        matrix, ep_samples=args.samples, seed=args.seed, cnot_tol=args.cnot_tol
    )
    payload = {
        "command": "classify",
        "g1": report.g1,
        "g2": report.g2,
        "weyl": list(report.weyl),
        "ep": report.ep,
        "ep_stderr": report.ep_stderr,
        "mc_samples": args.samples,
        "seed": args.seed,
        "cnot_equivalent": report.cnot_equivalent,
        "unitarity_defect": defect,
        "tolerances": TOLERANCES,
    }
    _emit(_json_text(payload), args.out)
    return EXIT_OK


def cmd_sweep(args) -> int:
    gate = args.gate.replace("-", "_")
    try:
        spec = SweepSpec(
            gate_target=gate,
            ratio_min=args.min,
            ratio_max=args.max,
            steps_per_axis=args.steps,
            log_scale=not args.linear,
            theta=args.theta,
            gamma=args.gamma,
            theta_tilde=args.theta_tilde,
            m=args.m,
            omega=args.omega,
        )
        table = run_sweep(spec)
    except ValueError as exc:
        raise CommandError(str(exc), EXIT_VALIDATION)
    lines = ["ratio1,ratio2,fidelity,leakage"]
    for i, r1 in enumerate(table.axis1):
        for j, r2 in enumerate(table.axis2):
            lines.append(
                f"{r1:.12g},{r2:.12g},{table.fidelity[i, j]:.12g},"
                f"{table.leakage[i, j]:.12g}"
            )
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="holodfs",
        description="Holonomic gates in decoherence-free subspaces of XY chains",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_1q_target(p):
        p.add_argument("--gate", choices=sorted(GATE_PRESETS),
                       help="preset single-qubit target")
        p.add_argument("--theta", type=float, help="rotation axis angle in [0, pi]")
        p.add_argument("--gamma", type=float, help="rotation angle in [0, 2*m*pi]")
        p.add_argument("--m", type=int, default=1, help="winding integer")
        p.add_argument("--omega", type=float, default=1.0, help="energy scale")

    def add_common(p):
        p.add_argument("--samples", type=int, default=101,
                       help="time samples for the dynamics checks")
        p.add_argument("--format", choices=["json"], default="json")
        p.add_argument("--out", help="output file (default: stdout)")

    s1 = sub.add_parser("synth-1q", help="synthesize and verify a single-qubit gate")
    add_1q_target(s1)
    add_common(s1)
    s1.set_defaults(func=cmd_synth_1q)

    s2 = sub.add_parser("synth-2q", help="synthesize, verify and classify a two-qubit gate")
    s2.add_argument("--theta-tilde", type=float, required=True,
                    help="coupling-ratio angle in (0, pi/2)")
    s2.add_argument("--m-tilde", type=int, default=1, help="odd winding integer")
    s2.add_argument("--omega-tilde", type=float, default=1.0, help="energy scale")
    s2.add_argument("--mc-samples", type=int, default=100_000,
                    help="Monte-Carlo samples for the entangling power")
    s2.add_argument("--seed", type=int, default=0, help="Monte-Carlo seed")
    add_common(s2)
    s2.set_defaults(func=cmd_synth_2q)

    v = sub.add_parser("verify", help="check the holonomic-gate criteria for a loop")
    add_1q_target(v)
    v.add_argument("--theta-tilde", type=float,
                   help="two-qubit coupling-ratio angle (selects 2q mode)")
    v.add_argument("--m-tilde", type=int, default=1, help="odd winding integer")
    v.add_argument("--omega-tilde", type=float, default=1.0, help="energy scale")
    add_common(v)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("classify", help="classify a two-qubit unitary from file")
    c.add_argument("matrix_file",
                   help="JSON file: 4x4 array of [re, im] pairs, row-major")
    c.add_argument("--samples", type=int, default=100_000,
                   help="Monte-Carlo samples for the entangling power")
    c.add_argument("--seed", type=int, default=0, help="Monte-Carlo seed")
    c.add_argument("--cnot-tol", type=float, default=1e-6,
                   help="Weyl-distance tolerance for CNOT equivalence")
    c.add_argument("--format", choices=["json"], default="json")
    c.add_argument("--out", help="output file (default: stdout)")
    c.set_defaults(func=cmd_classify)

    w = sub.add_parser("sweep", help="DM-noise robustness sweep to CSV")
    w.add_argument("--gate", required=True,
                   choices=["hadamard", "pi8", "custom", "two-qubit"])
    w.add_argument("--theta", type=float, help="axis angle for --gate custom")
    w.add_argument("--gamma", type=float, help="rotation angle for --gate custom")
    w.add_argument("--theta-tilde", type=float,
                   help="coupling-ratio angle for --gate two-qubit")
    w.add_argument("--m", type=int, default=1, help="winding integer")
    w.add_argument("--omega", type=float, default=1.0, help="energy scale")
    w.add_argument("--min", type=float, default=1.0, help="smallest omega/D ratio")
    w.add_argument("--max", type=float, default=100.0, help="largest omega/D ratio")
    w.add_argument("--steps", type=int, default=50, help="grid points per axis")
    scale = w.add_mutually_exclusive_group()
    scale.add_argument("--log", action="store_true",
                       help="logarithmic ratio spacing (the default)")
    scale.add_argument("--linear", action="store_true",
                       help="linear ratio spacing")
    w.add_argument("--format", choices=["csv"], default="csv")
    w.add_argument("--out", help="output file (default: stdout)")
    w.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CommandError as exc:
        print(f"holodfs {args.command}: {exc}", file=sys.stderr)
        return exc.code
    except ValueError as exc:
        # Precondition violations raised by the library surface as flag
        # validation failures.
        print(f"holodfs {args.command}: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
