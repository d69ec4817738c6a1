"""Command-line front end.

Exit codes: 0 ok, 2 parse error, 3 dimension error, 4 singular matrix,
5 zero leading minor, 6 identity or closed-form check failure.
Results go to stdout; every diagnostic goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Any, Sequence

from .affine import AffineSolution
from .determinant import det_fast, det_leibniz, leading_minors
from .errors import DimensionError, SingularMatrixError, ZeroLeadingMinorError
from .files import FileFormatError, load_model, load_system
from .full import solve_full
from .matrix import SystemSpec
from .models import build_chain_system, chain_closed_form
from .partial import (
    EliminationTrace,
    check_induction_identity,
    eliminate_stepwise,
    random_consistent_point,
    reorder_for_nonzero_minors,
    solve_partial,
)
from .sampling import DEFAULT_SEED
from .scalars import ScalarKind, close, format_scalar, to_json_value

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DIMENSION = 3
EXIT_SINGULAR = 4
EXIT_ZERO_MINOR = 5
EXIT_CHECK_FAILED = 6


def _err(msg: str) -> None:
    print(f"partial-cramer: {msg}", file=sys.stderr)


def _kind_flag(args: argparse.Namespace) -> ScalarKind | None:
    if args.exact:
        return ScalarKind.RATIONAL
    if args.float:
        return ScalarKind.FLOAT
    return None


def _emit_json(payload: dict[str, Any]) -> None:
    print(json.dumps(payload, indent=2, ensure_ascii=False))


def _trace_json(trace: EliminationTrace) -> dict[str, Any]:
    return {"steps": [step.solution.to_json() for step in trace.steps]}


def _print_trace(trace: EliminationTrace, out=None) -> None:
    out = out or sys.stdout
    for step in trace.steps:
        print(f"step {step.j}: D{step.j} = {format_scalar(step.d_j)}", file=out)
        for line in step.solution.expressions():
            print(f"  {line}", file=out)


def _run_solve(sys_: SystemSpec, args: argparse.Namespace) -> tuple[dict[str, Any], list[str], Any, tuple[int, ...] | None]:
    """Shared core of ``solve`` and ``model``; returns JSON payload, text lines, raw result and permutation."""
    perm = None
    if args.reorder:
        sys_, perm = reorder_for_nonzero_minors(sys_)
    lines: list[str] = []
    payload: dict[str, Any]
    if perm is not None:
        lines.append("equation order: " + " ".join(str(p) for p in perm))
        lines.append("(x'i and equation i refer to the reordered system)")

    if args.partial is not None and not 1 <= args.partial <= sys_.n:
        raise DimensionError(f"--partial {args.partial} outside 1..{sys_.n}")

    if args.trace:
        trace = eliminate_stepwise(sys_) if args.partial is None else _trace_upto(sys_, args.partial)
        payload = _trace_json(trace)
        for step in trace.steps:
            lines.append(f"step {step.j}: D{step.j} = {format_scalar(step.d_j)}")
            lines.extend(f"  {line}" for line in step.solution.expressions())
        result: Any = trace.final
    elif args.partial is not None:
        sol = solve_partial(sys_, args.partial, method=args.method)
        payload = sol.to_json()
        lines.append(f"D{sol.j} = {format_scalar(sol.d_j)}")
        lines.extend(sol.expressions())
        result = sol
    else:
        full = solve_full(sys_, method=args.method)
        payload = {
            "n": sys_.n,
            "scalar": sys_.kind.value,
            "det": to_json_value(full.det_r),
            "x": [to_json_value(v) for v in full.x],
        }
        lines.append(f"det(R) = {format_scalar(full.det_r)}")
        lines.extend(f"x{i} = {format_scalar(v)}" for i, v in enumerate(full.x, start=1))
        result = full
    if perm is not None:
        payload["row_permutation"] = list(perm)
    return payload, lines, result, perm


def _trace_upto(sys_: SystemSpec, j: int) -> EliminationTrace:
    """Stepwise elimination truncated to the first ``j`` steps.

    Only minors up to ``D_j`` have to be nonzero, so a failure beyond ``j``
    does not matter here.
    """
    try:
        trace = eliminate_stepwise(sys_)
    except ZeroLeadingMinorError as exc:
        if exc.j <= j:
            raise
        trace = exc.partial_trace
    return EliminationTrace(trace.steps[:j])


def cmd_det(args: argparse.Namespace) -> int:
    sys_ = load_system(args.input, _kind_flag(args))
    det = det_leibniz(sys_.r) if args.method == "leibniz" else det_fast(sys_.r)
    if args.json:
        _emit_json({"n": sys_.n, "scalar": sys_.kind.value, "method": args.method, "det": to_json_value(det)})
    else:
        print(f"det = {format_scalar(det)}")
    return EXIT_OK


def cmd_minors(args: argparse.Namespace) -> int:
    sys_ = load_system(args.input, _kind_flag(args))
    minors = leading_minors(sys_.r)
    if args.json:
        _emit_json({"n": sys_.n, "scalar": sys_.kind.value, "minors": [to_json_value(d) for d in minors]})
    else:
        for j, d in enumerate(minors, start=1):
            print(f"D{j} = {format_scalar(d)}")
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    sys_ = load_system(args.input, _kind_flag(args))
    payload, lines, _, _ = _run_solve(sys_, args)
    if args.json:
        _emit_json(payload)
    else:
        print("\n".join(lines))
    return EXIT_OK


def _closed_form_ok(sys_: SystemSpec, result: Any, expected: Sequence, perm) -> bool:
    if isinstance(result, AffineSolution):
        # plug the primed values of the system actually solved and the known tail
        j = result.j
        primes = list(sys_.x_prime.entries[:j]) if perm is None else [sys_.x_prime[p - 1] for p in perm[:j]]
        got = result.evaluate(primes, list(expected[j:]))
        return all(close(a, b) for a, b in zip(got, expected[:j]))
    return all(close(a, b) for a, b in zip(result.x, expected))


def cmd_model(args: argparse.Namespace) -> int:
    spec = load_model(args.input, _kind_flag(args))
    sys_ = build_chain_system(spec)
    payload, lines, result, perm = _run_solve(sys_, args)
    expected = chain_closed_form(spec)
    ok = _closed_form_ok(sys_, result, expected.entries, perm)
    verdict = "PASS" if ok else "FAIL"
    if args.json:
        payload["model"] = "chain"
        payload["closed_form"] = [to_json_value(v) for v in expected]
        payload["closed_form_check"] = verdict
        _emit_json(payload)
    else:
        print("# chain model: unknowns x_i are the rope tensions T_i, x'_i = m_i a")
        print("\n".join(lines))
        print(f"closed-form check: {verdict}")
    if not ok:
        _err("closed-form check failed; this indicates an implementation bug")
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    sys_ = load_system(args.input, _kind_flag(args))
    r, n = sys_.r, sys_.n
    if args.identity is not None:
        if not 2 <= args.identity <= n:
            raise DimensionError(f"--identity {args.identity} outside 2..{n}")
        steps = [args.identity]
    else:
        steps = list(range(2, n + 1))
    if not steps:
        print(f"no identity steps for n = {n}")
        return EXIT_OK
    minors = leading_minors(r)
    rng = random.Random(args.seed)
    failed = False
    for p in steps:
        zero_at = next((k for k in range(1, p) if minors[k] == 0), None)
        if zero_at is not None:
            raise ZeroLeadingMinorError(zero_at, message=f"identity step p={p} needs D{zero_at} != 0; try reordering the equations")
        bad = 0
        for _ in range(args.trials):
            x, xp = random_consistent_point(r, p, rng)
            lhs, rhs = check_induction_identity(r, p, x, xp)
            if not close(lhs, rhs):
                bad += 1
        status = "PASS" if bad == 0 else "FAIL"
        failed = failed or bad > 0
        print(f"p={p}: {status} ({args.trials - bad}/{args.trials} points)")
    if failed:
        _err("induction identity failed; this indicates an implementation bug")
        return EXIT_CHECK_FAILED
    return EXIT_OK


def _add_kind_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--exact", action="store_true", help="use exact rational arithmetic")
    g.add_argument("--float", action="store_true", help="use binary floating point")


def _add_solve_flags(p: argparse.ArgumentParser) -> None:
    _add_kind_flags(p)
    p.add_argument("--partial", type=int, metavar="J", help="solve only x_1..x_J as affine maps")
    p.add_argument("--reorder", action="store_true", help="permute equations so all leading minors are nonzero")
    p.add_argument("--trace", action="store_true", help="print the stepwise elimination chain")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--method", choices=("elimination", "columns"), default="elimination",
                   help="evaluate column-replaced determinants in one sweep or one by one")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="partial-cramer", description="Cramer's rule for all or a leading subset of unknowns.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("det", help="determinant of the system matrix")
    p.add_argument("input")
    _add_kind_flags(p)
    p.add_argument("--method", choices=("leibniz", "fast"), default="fast")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("minors", help="leading principal minors D_1..D_n")
    p.add_argument("input")
    _add_kind_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_minors)

    p = sub.add_parser("solve", help="full or partial solve of a system file")
    p.add_argument("input")
    _add_solve_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("model", help="build and solve a physical model file")
    p.add_argument("input")
    _add_solve_flags(p)
    p.set_defaults(func=cmd_model)

    p = sub.add_parser("check", help="verify the induction identity at random consistent points")
    p.add_argument("input")
    _add_kind_flags(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--identity", type=int, metavar="P", help="check step P only")
    g.add_argument("--all", action="store_true", help="check every step p = 2..n")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--trials", type=int, default=10)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FileFormatError as exc:
        _err(str(exc))
        return EXIT_PARSE
    except DimensionError as exc:
        _err(str(exc))
        return EXIT_DIMENSION
    except SingularMatrixError as exc:
        _err(str(exc))
        return EXIT_SINGULAR
    except ZeroLeadingMinorError as exc:
        _err(str(exc))
        if exc.partial_trace is not None and len(exc.partial_trace):
            print("completed steps before the failure:", file=sys.stderr)
            _print_trace(exc.partial_trace, out=sys.stderr)
        return EXIT_ZERO_MINOR


if __name__ == "__main__":
    sys.exit(main())
