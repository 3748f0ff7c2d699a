"""
CLI entry point: build, verify and decide the q-Pascal B3 representations.

Exit codes: 0 success or irreducible, 10 reducible, 20 undecidable pattern, 2 input or
parse error, 3 constraint violation, 1 internal check failure.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .braidrep import (
    BraidRep,
    RepParams,
    build_rep,
    identity_lambda_irreducible,
    identity_lambdas,
    operator_irred_criterion_q1,
    sigma1_eigenvalues,
)
from .determinism import resolve_seed, set_global_determinism
from .dim6 import (
    build_dim6,
    diagonalization_holds,
    diagonalize,
    is_symbolic,
    k_column_mismatches,
    matches_general_construction,
    printed_value_checks,
)
from .errors import ExprSyntaxError, InputError, QPascalError
from .fields import RatFunc, parse_element, parse_list
from .invariance import (
    Status,
    Verdict,
    analyse_rep,
    decide_irreducible,
    expected_conditions,
    generates_full_algebra,
    oracle_sample,
    restrict_to_V,
    symbolic_verdict,
    verify_restriction,
)
from .io_utils import dump_json, read_expression, write_output
from .logging_cfg import setup_logging
from .qcomb import QContext
from .report import (
    build_report,
    element_to_json,
    matrix_to_json,
    poly_to_json,
    render_text,
    timed,
    verdict_to_json,
)

logger = logging.getLogger(__name__)

EXIT_BY_STATUS = {Status.IRREDUCIBLE: 0, Status.REDUCIBLE: 10, Status.UNDECIDABLE: 20}


class UsageError(InputError):
    kind = "usage_error"


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--conductor", type=int, default=None, help="Embed inputs into Q(zeta_N)")
    p.add_argument("--out", default=None, help="Write the report to this file instead of stdout")
    p.add_argument("--format", choices=("json", "text"), default="json", help="Report format")
    p.add_argument(
        "--raw-coeffs",
        action="store_true",
        help="Serialize field elements as coefficient records instead of expressions",
    )


def _add_rep_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, default=None, help="Representation dimension minus one")
    p.add_argument("--q", default=None, help="Deformation parameter q (expression or @file)")
    p.add_argument("--lambdas", default=None, help="Comma-separated lambda_0..lambda_n")
    p.add_argument("--c", default=None, help="Product lambda_i * lambda_(n-i) (default derived)")
    p.add_argument("--dim6", action="store_true", help="The dimension-6 family at q = z(3)")
    p.add_argument("--lambda1", default=None, help="lambda_1 for --dim6; L keeps it symbolic")


def _add_engine_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--workers", type=int, default=None, help="Threads for pattern checks")
    p.add_argument("--progress", action="store_true", help="Show a progress bar on stderr")


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    ap = argparse.ArgumentParser(
        prog="qpascal",
        description="Exact q-Pascal-triangle representations of B3 and their irreducibility",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", help="Build both generator images")
    _add_rep_args(build)
    _add_common(build)

    verify = sub.add_parser("verify", help="Check braid relation, diagonalization and oracle")
    _add_rep_args(verify)
    verify.add_argument(
        "--oracle-samples", type=int, default=0, help="Random brute-force samples (seeded by SEED)"
    )
    _add_common(verify)

    decide = sub.add_parser("decide", help="Decide irreducibility")
    _add_rep_args(decide)
    decide.add_argument("--symbolic", action="store_true", help="Constraints on lambda_1 over L")
    _add_engine_args(decide)
    _add_common(decide)

    restrict = sub.add_parser("restrict", help="Restriction to the 4-dimensional subspace")
    restrict.add_argument("--lambda1", required=True, help="lambda_1 with lambda_1^3 = q^2")
    _add_engine_args(restrict)
    _add_common(restrict)

    criterion = sub.add_parser("criterion", help="Irreducibility predicates for general n")
    criterion.add_argument(
        "--n", type=int, required=True, help="Representation dimension minus one"
    )
    criterion.add_argument("--lambdas", default=None, help="lambda list for the minors test at q=1")
    criterion.add_argument("--q", default=None, help="q for the Lambda = I test")
    criterion.add_argument("--r", type=int, default=None, help="Report only this r")
    _add_common(criterion)

    return ap.parse_args(argv)


# ---- input handling ----


def _element(text: Optional[str], conductor: Optional[int], what: str) -> Any:
    if text is None:
        raise UsageError(f"missing --{what}")
    return parse_element(read_expression(text), conductor)


def _elements(text: Optional[str], conductor: Optional[int], what: str) -> List[Any]:
    if text is None:
        raise UsageError(f"missing --{what}")
    return parse_list(read_expression(text), conductor)


def _check_conductor(args: argparse.Namespace) -> None:
    if args.conductor is not None and args.conductor < 1:
        raise UsageError(f"--conductor must be >= 1, got {args.conductor}")


def _job(args: argparse.Namespace) -> Dict[str, Any]:
    """Echo of the invocation without output plumbing."""
    skip = {"out", "format", "progress", "workers"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip and v not in (None, False)}


def _general_rep(args: argparse.Namespace) -> BraidRep:
    if args.n is None:
        raise UsageError("give --n with --q and --lambdas, or --dim6 with --lambda1")
    q = _element(args.q, args.conductor, "q")
    lambdas = _elements(args.lambdas, args.conductor, "lambdas")
    if len(lambdas) != args.n + 1:
        raise UsageError(f"expected {args.n + 1} lambdas, got {len(lambdas)}")
    c = _element(args.c, args.conductor, "c") if args.c is not None else lambdas[0] * lambdas[-1]
    return build_rep(RepParams(args.n, q, tuple(lambdas), c))


def _rep_payload(rep: BraidRep, raw: bool) -> Dict[str, Any]:
    out: Dict[str, Any] = {
        "dimension": rep.dim,
        "sigma1": matrix_to_json(rep.sigma1, raw),
        "sigma2": matrix_to_json(rep.sigma2, raw),
        "braid_relation": rep.satisfies_braid_relation(),
    }
    if rep.params is not None:
        out["sigma1_eigenvalues"] = [
            element_to_json(x, raw) for x in sigma1_eigenvalues(rep.params)
        ]
    return out


# ---- commands ----


def cmd_build(args: argparse.Namespace) -> Tuple[Dict[str, Any], int]:
    raw = args.raw_coeffs
    if args.dim6:
        d6 = build_dim6(_element(args.lambda1, args.conductor, "lambda1"))
        payload = _rep_payload(d6.as_braid_rep(), raw)
        payload["admissible"] = d6.admissible
        return {"representation": payload}, 0
    return {"representation": _rep_payload(_general_rep(args), raw)}, 0


def cmd_verify(args: argparse.Namespace) -> Tuple[Dict[str, Any], int]:
    raw = args.raw_coeffs
    if not args.dim6:
        rep = _general_rep(args)
        ok = rep.satisfies_braid_relation()
        return {"checks": {"braid_relation": ok}}, 0 if ok else 1

    lambda1 = _element(args.lambda1, args.conductor, "lambda1")
    d6 = build_dim6(lambda1, cross_check=False)
    pair = diagonalize(d6)
    mismatches = k_column_mismatches(pair)
    checks: Dict[str, Any] = {
        "braid_relation": d6.as_braid_rep().satisfies_braid_relation(),
        "matches_general_construction": matches_general_construction(d6.rho1, d6.rho2, lambda1),
        "diagonalized": diagonalization_holds(d6, pair),
        "X": matrix_to_json(pair.X, raw),
        "printed_k_mismatches": [f"K{col}[{comp}]" for col, comp in mismatches],
        "printed_values": [
            {
                "name": c.name,
                "lambda1": element_to_json(c.lambda1, raw),
                "claimed": element_to_json(c.claimed, raw),
                "restated": element_to_json(c.restated, raw),
                "from_printed_k": element_to_json(c.from_printed_k, raw),
                "computed": element_to_json(c.computed, raw),
                "agrees": c.agrees,
                "nonzero": c.nonzero,
            }
            for c in printed_value_checks()
        ],
    }
    failed = not all(
        checks[k] for k in ("braid_relation", "matches_general_construction", "diagonalized")
    )
    if args.oracle_samples > 0:
        if is_symbolic(lambda1):
            raise UsageError("--oracle-samples needs a concrete --lambda1")
        seed = resolve_seed()
        rng = set_global_determinism(seed)
        sampled = oracle_sample(pair.X, pair.Y, rng, args.oracle_samples)
        checks["oracle"] = {
            "seed": seed,
            "samples": sampled.samples,
            "agreements": sampled.agreements,
            "invariant_samples": sampled.invariant_hits,
            "disagreements": sampled.disagreements,
        }
        failed = failed or bool(sampled.disagreements)
    return {"checks": checks}, 1 if failed else 0


def cmd_decide(args: argparse.Namespace) -> Tuple[Dict[str, Any], int]:
    raw = args.raw_coeffs
    verdict: Verdict
    if args.symbolic:
        verdict, sweep = symbolic_verdict(workers=args.workers, progress=args.progress)
        result = {
            "verdict": verdict_to_json(verdict, raw),
            "per_dimension": {
                str(d): [
                    {"pattern": p.label(), "constraints": [poly_to_json(c, raw) for c in cs]}
                    for p, cs in entries
                ]
                for d, entries in sweep.items()
            },
            "expected": [poly_to_json(p, raw) for p in expected_conditions()],
        }
        return result, 0
    if args.dim6 or (args.lambda1 is not None and args.n is None):
        lambda1 = _element(args.lambda1, args.conductor, "lambda1")
        if isinstance(lambda1, RatFunc):
            raise UsageError("symbolic lambda_1 needs --symbolic")
        verdict = decide_irreducible(lambda1, workers=args.workers, progress=args.progress)
    else:
        verdict = analyse_rep(_general_rep(args), workers=args.workers, progress=args.progress)
    return {"verdict": verdict_to_json(verdict, raw)}, EXIT_BY_STATUS[verdict.status]


def cmd_restrict(args: argparse.Namespace) -> Tuple[Dict[str, Any], int]:
    raw = args.raw_coeffs
    lambda1 = _element(args.lambda1, args.conductor, "lambda1")
    rest = restrict_to_V(lambda1)
    verdict = verify_restriction(
        lambda1, workers=args.workers, progress=args.progress, restriction=rest
    )
    result = {
        "restriction": {
            "A": matrix_to_json(rest.A, raw),
            "X_prime": matrix_to_json(rest.x_prime, raw),
            "Y_prime": matrix_to_json(rest.y_prime, raw),
            "braid_relation": rest.rep.satisfies_braid_relation(),
        },
        "verdict": verdict_to_json(verdict, raw),
    }
    return result, EXIT_BY_STATUS[verdict.status]


def cmd_criterion(args: argparse.Namespace) -> Tuple[Dict[str, Any], int]:
    result: Dict[str, Any] = {}
    n = args.n
    if args.lambdas is not None:
        lambdas = _elements(args.lambdas, args.conductor, "lambdas")
        crit = operator_irred_criterion_q1(n, lambdas)
        witnesses = {
            str(r): (list(rows) if rows is not None else None)
            for r, rows in crit.witnesses.items()
            if args.r is None or r == args.r
        }
        result["minors_criterion_q1"] = {"holds": crit.holds, "witness_rows": witnesses}
    if args.q is not None:
        q = _element(args.q, args.conductor, "q")
        predicted = identity_lambda_irreducible(n, QContext(q))
        rep = build_rep(RepParams(n, q, identity_lambdas(n), 1))
        result["identity_lambda"] = {
            "q_integer_nonzero": predicted,
            "generates_full_algebra": generates_full_algebra(rep.sigma1, rep.sigma2),
        }
    if not result:
        raise UsageError("criterion needs --lambdas and/or --q")
    return result, 0


COMMANDS = {
    "build": cmd_build,
    "verify": cmd_verify,
    "decide": cmd_decide,
    "restrict": cmd_restrict,
    "criterion": cmd_criterion,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run one job and return its exit code."""
    args = parse_args(argv)
    setup_logging()

    try:
        _check_conductor(args)
        sink: Dict[str, Any] = {}
        with timed(sink):
            result, code = COMMANDS[args.command](args)
        report = build_report(args.command, _job(args), result, sink["timing_ms"])
        if args.format == "text":
            write_output(render_text(report), args.out)
        else:
            write_output(dump_json(report).decode(), args.out)
    except ExprSyntaxError as e:
        print(f"[error] {e.kind}: {e.msg}", file=sys.stderr)
        print(f"  {e.text}", file=sys.stderr)
        print("  " + " " * e.position + "^", file=sys.stderr)
        return e.exit_code
    except QPascalError as e:
        logger.error(f"{args.command} failed: {e.kind}: {e}")
        print(f"[error] {e.kind}: {e}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        print(f"[error] io_error: {e}", file=sys.stderr)
        return 1
    logger.info(f"{args.command} finished with exit code {code}")
    return code


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
