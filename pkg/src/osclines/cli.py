"""Command-line front end.

Subcommands cover every pipeline and lab computation.  Human-readable
tables go to stdout; --json writes a structured document whose bytes are a
pure function of the inputs and seeds (integers are rendered as decimal
strings, and wall time is reported on stdout only).

Exit codes: 0 success, 1 usage error, 2 precondition violation,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import asdict, is_dataclass
from fractions import Fraction

from . import lab
from .grassmann import SchubertClass
from .incidence import (
    IncidenceClass,
    IncidenceVariety,
    RangeError,
    canonical_class,
    canonical_class_via_bundles,
    divisor_coefficients,
    osculating_canonical_class,
    osculating_class,
    osculating_degree,
)
from .pipeline import (
    DegenerateWeightsError,
    FanoRegimeReport,
    bott_count_lines,
    count_lines,
    numerology,
    swept_locus_degree,
    torus_weights,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECONDITION = 2
EXIT_VERIFY_FAIL = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


class PreconditionFailure(Exception):
    pass


class VerificationFailure(Exception):
    pass


def _default_seed() -> int:
    raw = os.environ.get("OSCLINES_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        return 0


def _jsonable(value):
    """Recursively render ints as decimal strings and classes as listings."""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}" if value.denominator != 1 else str(value.numerator)
    if isinstance(value, SchubertClass):
        return {
            ",".join(map(str, p)) if p else "": str(c)
            for p, c in sorted(value.coeffs.items())
        }
    if isinstance(value, IncidenceClass):
        return {"grass": _jsonable(value.a), "grass_times_h": _jsonable(value.b)}
    if is_dataclass(value) and not isinstance(value, type):
        return {k: _jsonable(v) for k, v in asdict(value).items()}
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _emit(args, command: str, params: dict, result: dict, provenance: str,
          seed: int | None, elapsed: float) -> None:
    for key, value in result.items():
        print(f"{key}: {value}")
    print(f"elapsed_ms: {elapsed * 1000.0:.1f}")
    if getattr(args, "json", None):
        doc = {
            "command": command,
            "params": _jsonable(params),
            "result": _jsonable(result),
            "provenance": provenance,
            "seed": None if seed is None else str(seed),
        }
        text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(text)


def _divisor_str(cls) -> str:
    h, l = divisor_coefficients(cls)
    sign = "+" if l >= 0 else "-"
    return f"{h}*H {sign} {abs(l)}*L"


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_count_lines(args) -> tuple[dict, dict, str]:
    if args.n_range:
        lo, hi = args.n_range
        rows = []
        for n in range(lo, hi + 1):
            d = 2 * n - 3
            rows.append((n, d, count_lines(n, d)))
        if args.csv:
            with open(args.csv, "w", encoding="utf-8") as fh:
                fh.write("n,d,count\n")
                for n, d, c in rows:
                    fh.write(f"{n},{d},{c}\n")
        result = {f"n={n} d={d}": str(c) for n, d, c in rows}
        return {"n_range": list(args.n_range)}, result, "schubert-engine"

    if args.n is None or args.d is None:
        raise PreconditionFailure("count-lines needs --n and --d (or --n-range)")
    value = count_lines(args.n, args.d)
    params = {"n": args.n, "d": args.d, "check": bool(args.check)}
    if isinstance(value, FanoRegimeReport):
        result = {
            "finite": False,
            "fano_dim": value.fano_dim,
            "regime": value.regime,
        }
        return params, result, "schubert-engine"
    provenance = "schubert-engine"
    if args.check:
        for offset in range(3):
            w = torus_weights(args.n, args.seed + offset)
            oracle = bott_count_lines(args.n, args.d, w)
            if oracle.denominator != 1 or oracle.numerator != value:
                raise VerificationFailure(
                    f"engine {value} vs oracle {oracle} at seed {w.seed}"
                )
        provenance = "both-agree"
    return params, {"count": value, "finite": True}, provenance


def _cmd_oracle(args) -> tuple[dict, dict, str]:
    w = torus_weights(args.n, args.seed)
    try:
        value = bott_count_lines(args.n, args.d, w)
    except (ValueError, DegenerateWeightsError) as exc:
        raise PreconditionFailure(str(exc))
    result = {
        "value": value,
        "integral": value.denominator == 1,
        "weights": list(w.weights),
    }
    return {"n": args.n, "d": args.d}, result, "bott-oracle"


def _cmd_numerology(args) -> tuple[dict, dict, str]:
    rep = numerology(args.n, args.k)
    result = {
        "d": rep.d,
        "coeff_space_dim": rep.coeff_space_dim,
        "family_codim": rep.family_codim,
        "canonical_twist": rep.canonical_twist,
        "osculating_dim": rep.osculating_dim,
        "fano_dim": rep.fano_dim,
        "in_range": rep.in_range,
    }
    return {"n": args.n, "k": args.k}, result, "schubert-engine"


def _cmd_osculating(args) -> tuple[dict, dict, str]:
    ctx = IncidenceVariety(args.n)
    try:
        cls, dim = osculating_class(ctx, args.d)
        degree = osculating_degree(ctx, args.d)
    except RangeError as exc:
        raise PreconditionFailure(str(exc))
    result = {"class": cls, "dim": dim, "degree": degree}
    return {"n": args.n, "d": args.d}, result, "schubert-engine"


def _cmd_canonical(args) -> tuple[dict, dict, str]:
    ctx = IncidenceVariety(args.n)
    ambient = canonical_class(ctx)
    if ambient != canonical_class_via_bundles(ctx):
        raise VerificationFailure("canonical-class routes disagree")
    try:
        osc, very_ample = osculating_canonical_class(ctx, args.d)
    except RangeError as exc:
        raise PreconditionFailure(str(exc))
    result = {
        "ambient_canonical": _divisor_str(ambient),
        "osculating_canonical": _divisor_str(osc),
        "very_ample": very_ample,
    }
    return {"n": args.n, "d": args.d}, result, "schubert-engine"


def _cmd_swept_degree(args) -> tuple[dict, dict, str]:
    try:
        value = swept_locus_degree(args.n, args.d)
    except ValueError as exc:
        raise PreconditionFailure(str(exc))
    return {"n": args.n, "d": args.d}, {"degree": value}, "schubert-engine"


def _cmd_verify(args) -> tuple[dict, dict, str]:
    prime = args.prime
    seed = args.seed
    if args.verb == "gg-pn":
        rep = lab.check_gg_pn(args.n, args.d, num_points=args.points, prime=prime, seed=seed)
        result = {
            "passed": rep.passed,
            "fiber_dim": rep.fiber_dim,
            "kernel_dim": rep.kernel_dim,
            "expected_kernel_dim": rep.expected_kernel_dim,
            "min_rank": rep.min_rank,
        }
        params = {"n": args.n, "d": args.d, "points": args.points, "prime": prime}
    elif args.verb == "gg-gr":
        rep = lab.check_gg_grassmann(
            args.n, num_lines=args.lines, num_translates=args.translates,
            prime=prime, seed=seed,
        )
        result = {
            "passed": rep.passed,
            "fiber_dim": rep.fiber_dim,
            "min_rank": min(rep.ranks) if rep.ranks else 0,
        }
        params = {"n": args.n, "lines": args.lines, "translates": args.translates, "prime": prime}
    elif args.verb == "wedge2":
        try:
            rep = lab.wedge2_image_report(
                args.n, args.d, prime=prime, seed=seed, max_entries=args.max_entries,
            )
        except lab.BudgetError as exc:
            raise PreconditionFailure(str(exc))
        result = {
            "fiber_dim": rep.fiber_dim,
            "kernel_dim": rep.kernel_dim,
            "image_rank": rep.image_rank,
            "generated": rep.generated,
            "witness_consistent": rep.witness_consistent,
            "passed": rep.witness_consistent,
        }
        params = {"n": args.n, "d": args.d, "prime": prime}
    elif args.verb == "lemma-linalg":
        rep = lab.bracket_pairing_check(
            args.dim_w, args.dim_k, trials=args.trials, prime=prime, seed=seed,
        )
        result = {
            "passed": rep.passed,
            "worst_codim": rep.worst_codim,
            "violations": rep.violations,
        }
        params = {"dim_w": args.dim_w, "dim_k": args.dim_k, "trials": args.trials, "prime": prime}
    elif args.verb == "contact":
        import numpy as np
        rng = np.random.default_rng(seed)
        order = args.order if args.order is not None else args.d
        checked = 0
        for _ in range(args.samples):
            cs = lab.random_contact_system(args.n, args.d, order, rng, prime)
            if lab.contact_rank(cs, prime) != order:
                raise VerificationFailure(f"contact rank != {order} at sample {checked}")
            checked += 1
        from math import comb
        result = {
            "passed": True,
            "rank": order,
            "fiber_dim": comb(args.n + args.d, args.d) - order,
            "samples": checked,
        }
        params = {"n": args.n, "d": args.d, "order": order, "samples": args.samples, "prime": prime}
    else:  # pragma: no cover
        raise PreconditionFailure(f"unknown verify verb {args.verb}")
    if not result.get("passed", True):
        raise VerificationFailure(json.dumps(_jsonable(result), sort_keys=True))
    return params, result, "verification-lab"


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _range_pair(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition(":")
    return int(lo), int(hi)


def build_parser() -> _Parser:
    parser = _Parser(prog="osclines", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=_default_seed())
        p.add_argument("--prime", type=int, default=lab.DEFAULT_PRIME)
        p.add_argument("--json", metavar="PATH", default=None)

    p = sub.add_parser("count-lines", help="lines on a general hypersurface")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--check", action="store_true",
                   help="also run the localization oracle and compare")
    p.add_argument("--n-range", type=_range_pair, default=None, metavar="LO:HI",
                   help="table of finite counts d = 2n-3 for n in LO..HI")
    p.add_argument("--csv", metavar="PATH", default=None)
    common(p)
    p.set_defaults(handler=_cmd_count_lines)

    p = sub.add_parser("oracle", help="torus localization count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    common(p)
    p.set_defaults(handler=_cmd_oracle)

    p = sub.add_parser("numerology", help="degree regime bookkeeping")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    common(p)
    p.set_defaults(handler=_cmd_numerology)

    p = sub.add_parser("osculating", help="class, dimension and degree of the osculating locus")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    common(p)
    p.set_defaults(handler=_cmd_osculating)

    p = sub.add_parser("canonical", help="canonical classes and very-ampleness")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    common(p)
    p.set_defaults(handler=_cmd_canonical)

    p = sub.add_parser("swept-degree", help="degree of the locus swept by lines")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    common(p)
    p.set_defaults(handler=_cmd_swept_degree)

    p = sub.add_parser("verify", help="finite linear-algebra verification lab")
    verbs = p.add_subparsers(dest="verb", required=True)

    v = verbs.add_parser("gg-pn")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--d", type=int, required=True)
    v.add_argument("--points", type=int, default=100)
    common(v)
    v.set_defaults(handler=_cmd_verify)

    v = verbs.add_parser("gg-gr")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--lines", type=int, default=50)
    v.add_argument("--translates", type=int, default=5)
    common(v)
    v.set_defaults(handler=_cmd_verify)

    v = verbs.add_parser("wedge2")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--d", type=int, required=True)
    v.add_argument("--max-entries", type=int, default=2_000_000)
    common(v)
    v.set_defaults(handler=_cmd_verify)

    v = verbs.add_parser("lemma-linalg")
    v.add_argument("--dim-w", type=int, required=True)
    v.add_argument("--dim-k", type=int, required=True)
    v.add_argument("--trials", type=int, default=1000)
    common(v)
    v.set_defaults(handler=_cmd_verify)

    v = verbs.add_parser("contact")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--d", type=int, required=True)
    v.add_argument("--order", type=int, default=None)
    v.add_argument("--samples", type=int, default=100)
    common(v)
    v.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    command = args.command if args.command != "verify" else f"verify {args.verb}"
    start = time.perf_counter()
    try:
        params, result, provenance = args.handler(args)
    except PreconditionFailure as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (RangeError, ValueError) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except VerificationFailure as exc:
        print(f"verification FAILED: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAIL
    elapsed = time.perf_counter() - start
    seed = getattr(args, "seed", None)
    _emit(args, command, params, result, provenance, seed, elapsed)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
