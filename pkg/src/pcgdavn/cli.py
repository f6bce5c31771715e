"""Command-line front end.

Outcome bitstrings use '0' for Z = +1 (qubit in |0>) and '1' for Z = -1,
qubit 1 first.  Exit codes: 0 success, 1 negative verdict under
``--expect-davn``, 2 input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from . import families
from .coloring import (Pcg, brute_force_colorable, build_pcg, check_colorable,
                       export_dot, has_odd_red_loop, result_to_dict)
from .davn import lhv_consistent_assignments, verify_davn
from .hardy import ZeroProbabilityError, derive_conditions
from .state import (PAPER_COMPATIBLE, STRICT, Certified, StateValidationError,
                    bits_to_outcome, certify_nonstabilizer, max_qubits,
                    nonstabilizer_to_dict, outcome_support, outcome_to_bits,
                    reduced_density, validate_pcg_state)


class InputError(Exception):
    pass


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc}") from None


def _load_state(args):
    mode = PAPER_COMPATIBLE if getattr(args, "paper_compatible", False) else STRICT
    try:
        return validate_pcg_state(_load_json(args.file), mode=mode, limit=args.max_qubits)
    except StateValidationError as exc:
        raise InputError("invalid state:\n  " + "\n  ".join(exc.violations)) from None


def _outcome(args, state):
    try:
        outcome = bits_to_outcome(args.outcome)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if len(outcome) != state.n:
        raise InputError(f"outcome {args.outcome!r} has {len(outcome)} bits, state has {state.n} qubits")
    return outcome


def _emit(text: str, path: str | None = None):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_validate(args) -> int:
    mode = PAPER_COMPATIBLE if args.paper_compatible else STRICT
    try:
        state = validate_pcg_state(_load_json(args.file), mode=mode, limit=args.max_qubits)
    except StateValidationError as exc:
        print(f"invalid ({mode}):", file=sys.stderr)
        for v in exc.violations:
            print(f"  - {v}", file=sys.stderr)
        return 2
    print(f"valid ({mode}): n={state.n}, |I|={state.size}")
    _emit(_dumps(state.to_dict()))
    return 0


def cmd_family(args) -> int:
    try:
        state = families.generate(args.name, args.n)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(_dumps(state.to_dict()), args.output)
    return 0


def cmd_outcomes(args) -> int:
    state = _load_state(args)
    for outcome, p in outcome_support(state):
        print(f"{outcome_to_bits(outcome)}  {p}")
    return 0


def _conditions(args):
    state = _load_state(args)
    outcome = _outcome(args, state)
    try:
        return derive_conditions(state, outcome, args.paper_edges_only)
    except ZeroProbabilityError as exc:
        raise InputError(str(exc)) from None


def cmd_hardy(args) -> int:
    _emit(_dumps(_conditions(args).to_dict()))
    return 0


def cmd_pcg(args) -> int:
    conds = _conditions(args)
    _emit(_dumps(build_pcg(conds.outcome, conds).to_dict()), args.output)
    return 0


def _load_pcg(args) -> Pcg:
    try:
        return Pcg.from_dict(_load_json(args.file))
    except ValueError as exc:
        raise InputError(f"invalid PCG: {exc}") from None


def cmd_color(args) -> int:
    pcg = _load_pcg(args)
    if args.brute_force:
        try:
            result = brute_force_colorable(pcg)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    else:
        result = check_colorable(pcg)
    out = result_to_dict(result, pcg)
    loop = has_odd_red_loop(pcg)
    out["odd_red_loop"] = None if loop is None else [
        {"vertices": list(v), "weight": w} for v, w in loop]
    _emit(_dumps(out))
    return 0


def cmd_dot(args) -> int:
    _emit(export_dot(_load_pcg(args)), args.output)
    return 0


def _davn_text(report) -> str:
    state = report.state
    lines = [f"state: n={state.n}, |I|={state.size}"]
    for r in report.records:
        head = (f"outcome {outcome_to_bits(r.outcome)}  p={r.probability}  "
                f"conditions={r.condition_count}  ")
        if r.paradox:
            cert = r.verdict.certificate or ()
            edges = ", ".join(
                f"{{{','.join(map(str, r.pcg.edges[i][0]))}}} "
                f"{'red' if r.pcg.edges[i][1] == -1 else 'green'}" for i in cert)
            lines.append(head + f"un-colorable -> HLQP paradox [{edges}]")
        else:
            lines.append(head + f"colorable (witness {list(r.verdict.witness)}) -> no paradox")
    verdict = "yes" if report.davn else "no"
    lines.append(f"DAVN proof: {verdict} (success probability "
                 f"{report.paradox_count}/{len(report.records)})")
    ns = report.nonstabilizer
    if isinstance(ns, Certified):
        lines.append(f"non-stabilizer: certified by qubit {ns.qubit}, rho = {ns.rho}")
    else:
        lines.append(f"non-stabilizer: inconclusive ({ns.reason})")
    if report.lhv_consistent_count is not None:
        lines.append(f"LHV-consistent assignments: {report.lhv_consistent_count}")
    return "\n".join(lines) + "\n"


def cmd_davn(args) -> int:
    state = _load_state(args)
    if args.with_lhv and state.n > 12:
        raise InputError(f"--with-lhv is limited to n <= 12, got n = {state.n}")
    if args.jobs < 1:
        raise InputError("--jobs must be at least 1")
    if args.jobs == 1:
        report = verify_davn(state, args.paper_edges_only, args.with_lhv)
    else:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            report = verify_davn(state, args.paper_edges_only, args.with_lhv, mapper=pool.map)
    _emit(_dumps(report.to_dict()) if args.json else _davn_text(report))
    if args.expect_davn and not report.davn:
        return 1
    return 0


def cmd_lhv(args) -> int:
    state = _load_state(args)
    try:
        result = lhv_consistent_assignments(state, limit=args.limit,
                                            allow_large=args.allow_large,
                                            conditioned_only=args.paper_edges_only)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(_dumps({
        "lhv_consistent_count": result.count,
        "samples": [{"z": outcome_to_bits(s.z), "x": outcome_to_bits(s.x)}
                    for s in result.samples],
    }))
    return 0


def cmd_nonstab(args) -> int:
    state = _load_state(args)
    out = nonstabilizer_to_dict(certify_nonstabilizer(state))
    out["marginals"] = {str(q): str(reduced_density(state, q)) for q in state.qubits}
    _emit(_dumps(out))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pcgdavn",
        description="Exact DAVN verification for PCG states. Outcome bitstrings "
                    "use '0' for Z=+1 and '1' for Z=-1, qubit 1 first.")
    parser.add_argument("--max-qubits", type=int, default=None,
                        help="qubit guard (default: $PCG_MAX_QUBITS or 16)")
    sub = parser.add_subparsers(dest="command", required=True)

    def state_cmd(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", help="state JSON file")
        p.add_argument("--paper-compatible", action="store_true",
                       help="allow a component with every qubit in |1>")
        p.set_defaults(func=func)
        return p

    p = sub.add_parser("validate", help="check a state file against the PCG invariants")
    p.add_argument("file")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--strict", dest="paper_compatible", action="store_false")
    g.add_argument("--paper-compatible", dest="paper_compatible", action="store_true")
    p.set_defaults(func=cmd_validate, paper_compatible=False)

    p = sub.add_parser("family", help="emit a named state as JSON")
    p.add_argument("name", choices=families.NAMES)
    p.add_argument("--n", type=int, default=None, help="family parameter (phi_n, phi_2n3)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_family)

    state_cmd("outcomes", cmd_outcomes, "list Z outcomes with exact probabilities")

    for name, func, help_ in (("hardy", cmd_hardy, "derive Hardy-like conditions for one outcome"),
                              ("pcg", cmd_pcg, "build the PCG of one outcome")):
        p = state_cmd(name, func, help_)
        p.add_argument("--outcome", required=True, help="bitstring, '0' = Z=+1")
        p.add_argument("--paper-edges-only", dest="paper_edges_only", action="store_true",
                       help="skip the unconditioned all-qubit edge")
        if name == "pcg":
            p.add_argument("-o", "--output")

    p = sub.add_parser("color", help="decide colorability of a PCG file")
    p.add_argument("file")
    p.add_argument("--brute-force", action="store_true")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("dot", help="render a PCG file as Graphviz DOT")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_dot)

    p = state_cmd("davn", cmd_davn, "full DAVN verdict over the outcome support")
    p.add_argument("--json", action="store_true")
    p.add_argument("--with-lhv", action="store_true", help="also run the LHV brute-force oracle")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--expect-davn", action="store_true", help="exit 1 unless davn is true")
    p.add_argument("--paper-edges-only", action="store_true")

    p = state_cmd("lhv", cmd_lhv, "count consistent deterministic LHV assignments")
    p.add_argument("--limit", type=int, default=10, help="sample assignments to print")
    p.add_argument("--allow-large", action="store_true")
    p.add_argument("--paper-edges-only", action="store_true")

    state_cmd("nonstab", cmd_nonstab, "non-stabilizer certificate")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.max_qubits is None:
            args.max_qubits = max_qubits()
        return args.func(args)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


run = main
