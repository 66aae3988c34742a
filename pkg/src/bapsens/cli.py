"""Command-line front end.

Exit codes: 0 ok, 1 unreadable input, 2 no finite assignment, 3 anchor is
not a bottleneck edge, 4 supplied assignment is not optimal, 5 perturbation
is not allowable.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional

import numpy as np

from .assignment_sensitivity import (
    assignment_sensitivity,
    is_allowable,
    is_edge_allowable,
)
from .core import Edge, WeightMatrix, validate_matrix, validate_perturbation
from .edge_sensitivity import edge_sensitivity
from .errors import (
    BapError,
    BudgetExceeded,
    NoFeasibleAssignment,
    NotABottleneckEdge,
    NotOptimalAssignment,
    ParseError,
)
from .intervals import contains, corner_perturbation, rho, sample_uniform
from .io import (
    dumps_report,
    encode_edge,
    encode_edges,
    encode_intervals,
    encode_number,
    parse_assignment,
    read_matrix,
)
from .lex_assignment import lexicographic_assignment
from .oracle import brute_bap, brute_lex_assignment, closed_form_uniform_radius
from .solver import BottleneckSolver, solve_bap

EXIT_PARSE = 1
EXIT_INFEASIBLE = 2
EXIT_NOT_BOTTLENECK = 3
EXIT_NOT_OPTIMAL = 4
EXIT_NOT_ALLOWABLE = 5


def load_matrix(path: str, fmt: Optional[str] = None) -> WeightMatrix:
    try:
        raw = read_matrix(path, fmt)
    except OSError as exc:
        raise ParseError(str(exc)) from None
    try:
        return validate_matrix(raw)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def load_assignment(path: str, W: WeightMatrix):
    try:
        return parse_assignment(Path(path).read_text(), W)
    except OSError as exc:
        raise ParseError(str(exc)) from None


def _anchor(W: WeightMatrix, pair) -> Optional[Edge]:
    if pair is None:
        return None
    e = W.internal_edge(Edge.from_one_based(pair))
    if not (0 <= e.row < W.n and 0 <= e.col < W.m):
        raise ParseError(f"anchor {list(pair)} outside the matrix")
    return e


def _pick_assignment(W: WeightMatrix, args):
    if getattr(args, "assignment", None):
        return load_assignment(args.assignment, W)
    if getattr(args, "lex", False):
        return lexicographic_assignment(W).assignment
    return solve_bap(W).assignment


# -- reports -----------------------------------------------------------------

def solve_report(W: WeightMatrix) -> dict:
    sol = solve_bap(W)
    return {
        "bottleneck_edge": encode_edge(W, sol.bottleneck_edge),
        "bottleneck_value": encode_number(sol.bottleneck_value),
        "assignment": encode_edges(W, sol.assignment.edges),
        "tie": not sol.edge_unique,
        "bottleneck_edges": encode_edges(W, sol.candidates),
        "warnings": [],
    }


def edge_report(W: WeightMatrix, anchor: Optional[Edge] = None, warm: bool = True) -> dict:
    rep = edge_sensitivity(W, anchor, warm=warm)
    return {
        "bottleneck_edge": encode_edge(W, rep.anchor),
        "bottleneck_value": encode_number(W[rep.anchor]),
        "assignment": encode_edges(W, rep.lex_assignment_used.edges),
        "intervals": encode_intervals(W, rep.intervals),
        # removal order, not sorted
        "exclusive_set": [encode_edge(W, e) for e in rep.exclusive_set.members],
        "lambda_up": encode_number(rep.lambda_up_star),
        "lambda_down": encode_number(rep.lambda_down_star),
        "certified": rep.certified,
        "warnings": list(rep.warnings),
        "iterations": len(rep.exclusive_set.members),
    }


def assignment_report(W: WeightMatrix, A=None, incremental: bool = True) -> dict:
    rep = assignment_sensitivity(W, A, incremental=incremental)
    top = max(rep.assignment.edges, key=lambda e: (W[e], e))
    return {
        "bottleneck_edge": encode_edge(W, top),
        "bottleneck_value": encode_number(W[top]),
        "assignment": encode_edges(W, rep.assignment.edges),
        "intervals": encode_intervals(W, rep.intervals),
        "exclusive_sets": [
            {"edge": encode_edge(W, e), "members": encode_edges(W, members)}
            for e, members in sorted(rep.exclusive_sets.items(),
                                     key=lambda kv: encode_edge(W, kv[0]))
        ],
        "radius": encode_number(rho(rep.intervals, 1)),
        "determined": [
            {"iteration": it, "edge": encode_edge(W, e), "side": side,
             "value": encode_number(v)}
            for it, e, side, v in rep.determined_log
        ],
        "certified": rep.certified,
        "warnings": list(rep.warnings),
        "iterations": rep.iterations,
    }


def verify_report(W: WeightMatrix, P, A=None, anchor: Optional[Edge] = None) -> dict:
    p = W.internal_array(validate_perturbation(P, W.external_array(W.weights).shape))
    try:
        value = encode_number(solve_bap(W.weights + p).bottleneck_value)
    except NoFeasibleAssignment:
        value = "inf"
    if anchor is not None:
        ok = is_edge_allowable(W, anchor, p)
        target = {"anchor": encode_edge(W, anchor)}
    else:
        A = A if A is not None else solve_bap(W).assignment
        ok = is_allowable(W, A, p)
        target = {"assignment": encode_edges(W, A.edges)}
    return {"allowable": ok, "perturbed_bottleneck_value": value, **target}


def oracle_report(W: WeightMatrix) -> dict:
    value, optimizers = brute_bap(W)
    lex = brute_lex_assignment(W)
    return {
        "bottleneck_value": encode_number(value),
        "optimal_assignments": len(optimizers),
        "bottleneck_edges": encode_edges(
            W, {e for A in optimizers for e in A.edges if W[e] == value}),
        "lex_assignment": encode_edges(W, lex.edges),
        "lex_radius": encode_number(closed_form_uniform_radius(W, lex)),
    }


def suite_report(W: WeightMatrix, seed: int = 0, samples: int = 100) -> dict:
    """Random and corner perturbations inside each reported interval array."""
    rng = np.random.default_rng(seed)
    checks = []
    erep = edge_sensitivity(W)
    checks.append(("edge", erep.intervals, erep.certified,
                   lambda P: is_edge_allowable(W, erep.anchor, P)))
    arep = assignment_sensitivity(W)
    checks.append(("assignment", arep.intervals, arep.certified,
                   lambda P: is_allowable(W, arep.assignment, P)))
    out = {}
    for name, L, certified, test in checks:
        trials = [sample_uniform(L, rng) for _ in range(samples)]
        for e in W.edges():
            trials.append(corner_perturbation(L, e))
            trials.append(corner_perturbation(L, e, mirror=True))
        failures = sum(1 for P in trials if contains(L, P) and not test(P))
        out[name] = {"certified": certified, "trials": len(trials), "failures": failures}
    return out


# -- entry point -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="weight matrix (CSV or JSON)")
    common.add_argument("--format", choices=["csv", "json"], default=None,
                        help="input format (default: by extension or content)")
    common.add_argument("--output", default=None, help="report file (default: stdout)")
    common.add_argument("--cold", action="store_true", help="disable warm starts")

    parser = argparse.ArgumentParser(prog="bapsens", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("solve", parents=[common], help="bottleneck value, edge and assignment")
    p = sub.add_parser("edge-sens", parents=[common], help="intervals for a bottleneck edge")
    p.add_argument("--anchor", nargs=2, type=int, metavar=("I", "J"))
    for name, text in (("assign-sens", "intervals for an optimal assignment"),
                       ("radius", "largest uniform perturbation keeping an assignment")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--assignment", metavar="FILE")
        p.add_argument("--lex", action="store_true", help="use the lexicographic assignment")
    p = sub.add_parser("verify", parents=[common], help="check one perturbation")
    p.add_argument("perturbation", help="perturbation matrix, same shape as the input")
    p.add_argument("--anchor", nargs=2, type=int, metavar=("I", "J"))
    p.add_argument("--assignment", metavar="FILE")
    p.add_argument("--lex", action="store_true")
    sub.add_parser("oracle", parents=[common], help="brute-force summary (small inputs)")
    p = sub.add_parser("verify-suite", parents=[common], help="sampling battery")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100)
    return parser


def run(args) -> tuple[dict, int]:
    W = load_matrix(args.input, args.format)
    cmd = args.command
    if cmd == "solve":
        return solve_report(W), 0
    if cmd == "edge-sens":
        anchor = _anchor(W, args.anchor)
        try:
            return edge_report(W, anchor, warm=not args.cold), 0
        except NotABottleneckEdge:
            raise NotABottleneckEdge(
                f"edge {args.anchor} (weight {W[anchor]}) is not a bottleneck edge") from None
    if cmd == "assign-sens":
        return assignment_report(W, _pick_assignment(W, args), incremental=not args.cold), 0
    if cmd == "radius":
        rep = assignment_sensitivity(W, _pick_assignment(W, args), incremental=not args.cold)
        return {"assignment": encode_edges(W, rep.assignment.edges),
                "radius": encode_number(rho(rep.intervals, 1)),
                "certified": rep.certified}, 0
    if cmd == "verify":
        try:
            P = read_matrix(args.perturbation, args.format)
        except OSError as exc:
            raise ParseError(str(exc)) from None
        anchor = _anchor(W, args.anchor)
        A = None if anchor is not None else _pick_assignment(W, args)
        try:
            rep = verify_report(W, P, A, anchor)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
        return rep, 0 if rep["allowable"] else EXIT_NOT_ALLOWABLE
    if cmd == "oracle":
        return oracle_report(W), 0
    if cmd == "verify-suite":
        rep = suite_report(W, args.seed, args.samples)
        bad = any(r["certified"] and r["failures"] for r in rep.values())
        return rep, EXIT_NOT_ALLOWABLE if bad else 0
    raise AssertionError(cmd)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    codes = [
        (ParseError, EXIT_PARSE),
        (NoFeasibleAssignment, EXIT_INFEASIBLE),
        (NotABottleneckEdge, EXIT_NOT_BOTTLENECK),
        (NotOptimalAssignment, EXIT_NOT_OPTIMAL),
        (BudgetExceeded, EXIT_PARSE),
        (BapError, EXIT_PARSE),
    ]
    try:
        report, code = run(args)
    except BapError as exc:
        code = next(c for t, c in codes if isinstance(exc, t))
        print(f"bapsens: {type(exc).__name__}: {exc}", file=sys.stderr)
        return code
    text = dumps_report(report)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
