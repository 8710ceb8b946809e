"""``gaqc`` command line: simulate circuit files, decompose rotations, check universality.

Exit status is 0 on success, 1 when a verification check fails and 2 for
unreadable input or bad usage.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Optional, Sequence

import numpy as np

from .gates import run_circuit
from .msta import StateError, encode_basis, mv_to_spinor
from .oracle import basis_state, run_statevector
from .parser import CircuitSyntaxError, parse_circuit
from .rotors import (
    DegenerateRotorError,
    Rotor,
    approximate_with_ht,
    boykin_axes,
    euler_decompose,
    euler_rotor,
    rotor_distance,
    rotor_from_su2,
    universality_rotors,
)

__all__ = ["main", "build_parser", "universality_checks", "EXIT_OK", "EXIT_FAIL", "EXIT_USAGE"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
SIM_TOL = 1e-8
EULER_TOL = 1e-10
RENORM_WARN = 1e-6
MAX_WORD_LEN = 20


class UsageError(Exception):
    pass


def _err(msg: str):
    print(f"gaqc: {msg}", file=sys.stderr)


# -- simulate ---------------------------------------------------------------


def _mv_dict(mv) -> dict[str, float]:
    return {mv.sig.blade_name(m): c for m, c in mv.terms(1e-15)}


def _amps(v: np.ndarray) -> list[list[float]]:
    return [[float(z.real), float(z.imag)] for z in v]


def _fmt_complex(z: complex) -> str:
    return f"{z.real:+.12f}{z.imag:+.12f}i"


def cmd_simulate(args) -> int:
    try:
        with open(args.file, encoding="utf-8-sig") as fh:
            text = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read {args.file}: {exc}")
    try:
        circuit = parse_circuit(text)
    except CircuitSyntaxError as exc:
        for d in exc.diagnostics:
            _err(f"{args.file}: {d}")
        return EXIT_USAGE

    bits = args.input if args.input is not None else "0" * circuit.n
    if len(bits) != circuit.n or set(bits) - {"0", "1"}:
        raise UsageError(f"--input must be {circuit.n} binary digit(s), got {bits!r}")

    report: dict = {"backend": args.backend, "input": bits, "state": {}}
    ga_amps = mat_amps = None
    if args.backend in ("ga", "both"):
        final = run_circuit(circuit, encode_basis(bits))
        ga_amps = mv_to_spinor(final)
        report["state"]["multivector"] = _mv_dict(final.mv)
        report["state"]["amplitudes"] = _amps(ga_amps)
    if args.backend in ("matrix", "both"):
        mat_amps = run_statevector(circuit, basis_state(bits))
        report["state"]["matrix_amplitudes" if ga_amps is not None else "amplitudes"] = _amps(mat_amps)

    status = EXIT_OK
    if ga_amps is not None and mat_amps is not None:
        disc = float(np.max(np.abs(ga_amps - mat_amps)))
        report["discrepancy"] = disc
        if disc > SIM_TOL:
            status = EXIT_FAIL

    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(f"circuit: {circuit.n} qubit(s), {len(circuit)} gate(s), input |{bits}>")
        if "multivector" in report["state"]:
            terms = report["state"]["multivector"]
            print("multivector:")
            for name, c in terms.items():
                print(f"  {name:>12s}  {c:+.12f}")
        shown = ga_amps if ga_amps is not None else mat_amps
        print("amplitudes:")
        for label, z in enumerate(shown):
            print(f"  |{label:0{circuit.n}b}>  {_fmt_complex(z)}")
        if "discrepancy" in report:
            verdict = "ok" if status == EXIT_OK else "FAIL"
            print(f"max discrepancy ga vs matrix: {report['discrepancy']:.3e} ({verdict})")
    return status


# -- decompose --------------------------------------------------------------


def _floats(text: str, count: int, flag: str) -> list[float]:
    try:
        vals = [float(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"{flag} expects {count} comma-separated numbers")
    if len(vals) != count or not all(math.isfinite(v) for v in vals):
        raise UsageError(f"{flag} expects {count} comma-separated finite numbers, got {len(vals)}")
    return vals


def _target_rotor(args) -> tuple[Rotor, str]:
    if args.target is not None:
        ax, ay, az, theta = _floats(args.target, 4, "--target")
        axis = np.array([ax, ay, az])
        norm = float(np.linalg.norm(axis))
        if norm == 0.0:
            raise UsageError("--target axis must be nonzero")
        if abs(norm - 1.0) > RENORM_WARN:
            _err(f"warning: axis renormalised (length was {norm:.9g})")
        axis = axis / norm
        # exp(i n theta) = cos(theta) + sin(theta) i n
        r = Rotor.from_components([math.cos(theta), *(math.sin(theta) * axis)])
        return r, "axis-angle"
    if args.su2 is not None:
        v = _floats(args.su2, 8, "--su2")
        u = np.array(v[0::2]) + 1j * np.array(v[1::2])
        try:
            return rotor_from_su2(u.reshape(2, 2)), "su2"
        except ValueError as exc:
            raise UsageError(f"--su2 target rejected: {exc}")
    rng = np.random.default_rng(args.seed)
    q = rng.normal(size=4)
    return Rotor.from_components(q / np.linalg.norm(q)), f"random(seed={args.seed})"


def cmd_decompose(args) -> int:
    if not 0 <= args.max_len <= MAX_WORD_LEN:
        raise UsageError(f"--max-len must be between 0 and {MAX_WORD_LEN}")
    target, source = _target_rotor(args)
    n1, n2 = (a.axis for a in boykin_axes())
    alpha, beta, gamma = euler_decompose(target, n1, n2, atol=1.0)
    residual = rotor_distance(euler_rotor(n1, n2, alpha, beta, gamma), target)
    word = approximate_with_ht(target, args.max_len)
    status = EXIT_OK if residual < EULER_TOL else EXIT_FAIL

    letters = "".join(word.letters)
    report = {
        "target": {"source": source, "rotor": [float(c) for c in target.components]},
        "angles": {"alpha": alpha, "beta": beta, "gamma": gamma, "residual": residual},
        "word": letters,
        "error": word.error,
        "max_len": args.max_len,
    }
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        r = target.components
        print(f"target ({source}): {r[0]:+.12f} {r[1]:+.12f} is1 {r[2]:+.12f} is2 {r[3]:+.12f} is3")
        print("euler angles about n1, n2, n1:")
        print(f"  alpha = {alpha:+.12f}\n  beta  = {beta:+.12f}\n  gamma = {gamma:+.12f}")
        verdict = "ok" if status == EXIT_OK else "FAIL"
        print(f"  reconstruction residual = {residual:.3e} ({verdict})")
        print(f"best H/T word up to length {args.max_len}: {letters or '(empty)'}")
        print(f"  approximation error = {word.error:.6e}")
    return status


# -- universality -----------------------------------------------------------


def universality_checks() -> dict:
    """Computed universality rotors and axes next to their closed forms."""
    r2 = math.sqrt(2)
    c = 0.5 * (1 + 1 / r2)
    ref_r1 = np.array([c, -1 / (2 * r2), 0.5 * (1 - 1 / r2), 1 / (2 * r2)])
    ref_r2 = np.array([c, -0.5 * (0.5 - 1 / r2), 0.5, 0.5 * (0.5 - 1 / r2)])
    s = math.sqrt(1 - c * c)
    ref_n1 = ref_r1[1:] / s
    ref_n2 = ref_r2[1:] / s
    ref_lam = math.acos(c) / math.pi

    R1, R2 = universality_rotors()
    a1, a2 = boykin_axes()
    n1, n2 = np.asarray(a1.axis), np.asarray(a2.axis)
    dot = float(n1 @ n2)
    values = {
        "R1": [float(x) for x in R1.components],
        "R2": [float(x) for x in R2.components],
        "lambda1": a1.lam,
        "lambda2": a2.lam,
        "n1": [float(x) for x in n1],
        "n2": [float(x) for x in n2],
        "n1_dot_n2": dot,
    }
    flags = {
        "R1": bool(np.max(np.abs(R1.components - ref_r1)) < 1e-12),
        "R2": bool(np.max(np.abs(R2.components - ref_r2)) < 1e-12),
        "lambda": abs(a1.lam - ref_lam) < 1e-12 and abs(math.cos(a1.lam * math.pi) - c) < 1e-12,
        "lambda1_eq_lambda2": abs(a1.lam - a2.lam) < 1e-12,
        "n1": bool(np.max(np.abs(n1 - ref_n1)) < 1e-10),
        "n2": bool(np.max(np.abs(n2 - ref_n2)) < 1e-10),
        "orthogonal": abs(dot) < 1e-12,
    }
    return {"values": values, "flags": flags}


def cmd_universality(args) -> int:
    report = universality_checks()
    ok = all(report["flags"].values())
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        v = report["values"]
        for key in ("R1", "R2"):
            r = v[key]
            print(f"{key} = {r[0]:+.15f} {r[1]:+.15f} is1 {r[2]:+.15f} is2 {r[3]:+.15f} is3")
        print(f"lambda1 = {v['lambda1']:.15f}")
        print(f"lambda2 = {v['lambda2']:.15f}")
        print("n1 = ({:+.15f}, {:+.15f}, {:+.15f})".format(*v["n1"]))
        print("n2 = ({:+.15f}, {:+.15f}, {:+.15f})".format(*v["n2"]))
        print(f"n1.n2 = {v['n1_dot_n2']:+.3e}")
        for name, flag in report["flags"].items():
            print(f"  [{'pass' if flag else 'FAIL'}] {name}")
    return EXIT_OK if ok else EXIT_FAIL


# -- entry point --------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        _err(message)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gaqc", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sim = sub.add_parser("simulate", help="run a circuit file on the multivector and/or matrix backend")
    sim.add_argument("file")
    sim.add_argument("--backend", choices=("ga", "matrix", "both"), default="both")
    sim.add_argument("--input", help="initial basis label, qubit 0 first (default all zeros)")
    sim.add_argument("--json", action="store_true")
    sim.set_defaults(func=cmd_simulate)

    dec = sub.add_parser("decompose", help="Euler angles about n1, n2 and the best H/T word for a rotation")
    tgt = dec.add_mutually_exclusive_group()
    tgt.add_argument("--target", metavar="AX,AY,AZ,THETA", help="rotor cos(theta) + sin(theta) i n, theta in radians (write --target=... if it starts with '-')")
    tgt.add_argument("--su2", metavar="U", help="8 reals: re,im of u00,u01,u10,u11 (write --su2=... if it starts with '-')")
    dec.add_argument("--max-len", type=int, default=12)
    dec.add_argument("--seed", type=int, default=42, help="seed for the random target used when none is given")
    dec.add_argument("--json", action="store_true")
    dec.set_defaults(func=cmd_decompose)

    uni = sub.add_parser("universality", help="check the H/T universality rotors and axes")
    uni.add_argument("--json", action="store_true")
    uni.set_defaults(func=cmd_universality)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        _err(str(exc))
        return EXIT_USAGE
    except (StateError, DegenerateRotorError) as exc:
        _err(str(exc))
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
