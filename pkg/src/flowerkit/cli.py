"""Command-line interface.

Every command prints one JSON report (stdout, or ``--out``) that embeds a run
manifest.  Reports hold no timestamps or timings, so the same manifest gives
byte-identical output.

Exit codes: 0 when every assertion in the report holds, 1 when one fails,
2 for usage, parse and parameter errors.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from fractions import Fraction

from . import __version__
from . import constructions as cons
from .checks import C_GRID, GRID_N_MAX, GRID_RS, check_closed_forms, check_stability
from .core import (
    SetFamily, fmt_rational, is_intersecting, max_degree, parse_family, parse_rational,
    tau, to_text,
)
from .core.canon import CANON_MAX_N, canonical_form
from .diversity import degree_ratio, distance_to_two_out_of_three, diversity, weighted_diversity
from .errors import FlowerkitError, ParseError
from .flower import base_cardinality_bounds, flower_base, inheritance_check

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _jsonable(x):
    if isinstance(x, Fraction):
        return fmt_rational(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    return x


def max_workers(requested: int = 1) -> int:
    cap = os.environ.get("FLOWERKIT_THREADS")
    if cap is None:
        return max(1, requested)
    try:
        return max(1, min(requested, int(cap)))
    except ValueError:
        raise UsageError(f"FLOWERKIT_THREADS must be an integer, got {cap!r}") from None


class Run:
    """Collects inputs and outputs for the manifest of one command."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.inputs: list[bytes] = []
        self.outputs: list[str] = []

    def read(self, path: str) -> str:
        try:
            with open(path, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
        self.inputs.append(data)
        return data.decode()

    def family(self, path: str) -> SetFamily:
        return parse_family(self.read(path))

    def manifest(self) -> dict:
        params = {k: _jsonable(v) for k, v in sorted(vars(self.args).items())
                  if k not in ("func", "command", "command_path")}
        if not self.inputs:
            digest = None
        elif len(self.inputs) == 1:
            digest = "sha256:" + hashlib.sha256(self.inputs[0]).hexdigest()
        else:
            joined = "".join(hashlib.sha256(d).hexdigest() for d in self.inputs)
            digest = "sha256:" + hashlib.sha256(joined.encode()).hexdigest()
        return {
            "command": self.args.command_path,
            "parameters": params,
            "tool_version": __version__,
            "input_digest": digest,
            "outputs": list(self.outputs),
        }


def _summary(F: SetFamily, Cs) -> dict:
    delta, x = max_degree(F)
    out = {
        "n": F.n, "r": F.r, "size": len(F), "max_degree": delta, "argmax": x,
        "tau": tau(F) if len(F) else 0,
        "diversity": diversity(F),
    }
    out["d_C"] = {fmt_rational(C): fmt_rational(weighted_diversity(F, C)) for C in Cs}
    return out


# commands ------------------------------------------------------------------

def cmd_construct(run: Run, a) -> tuple[dict, bool]:
    params = {"n": a.n, "r": a.r, "p": a.p, "u": a.u, "alpha": a.alpha, "x": a.x}
    F = cons.construct(a.kind, **{k: v for k, v in params.items() if v is not None})
    result = {"kind": a.kind, **_summary(F, a.C)}
    text = to_text(F)
    if a.out:
        with open(a.out, "w") as fh:
            fh.write(text)
        run.outputs.append(a.out)
    else:
        sys.stdout.write(text)
    return result, True


def cmd_analyze(run: Run, a) -> tuple[dict, bool]:
    F = run.family(a.file)
    result = _summary(F, a.C)
    result["degree_ratio"] = fmt_rational(degree_ratio(F)) if len(F) else None
    result["is_intersecting"] = is_intersecting(F)
    dist = None
    if F.r >= 3:
        found = distance_to_two_out_of_three(F)
        if found is not None:
            dist = {"triple": found[0].to_list(), "missing": found[1]}
    result["distance_to_two_out_of_three"] = dist
    return result, True


def cmd_flower_base(run: Run, a) -> tuple[dict, bool]:
    F = run.family(a.file)
    base = flower_base(F, a.alpha)
    inh = inheritance_check(F, base)
    ks = a.k or list(range(1, F.r + 1))
    bounds = []
    for k in ks:
        b3, b5 = base_cardinality_bounds(F, base, k)
        bounds.append({"k": k, "bound3": b3, "bound5": b5,
                       "holds": len(F) <= b3 and len(F) <= b5})
    result = {
        "size": len(F),
        "base": base.to_json(),
        "inheritance": inh.to_json(),
        "bounds": bounds,
    }
    return result, inh.passed and all(b["holds"] for b in bounds)


def cmd_search(run: Run, a) -> tuple[dict, bool]:
    from .search import anneal_max_dC, exhaustive_max_dC

    if a.anneal:
        if a.seed is None:
            raise UsageError("--anneal needs --seed")
        res = anneal_max_dC(a.n, a.r, a.C, steps=a.steps, t0=a.t0, t1=a.t1, seed=a.seed,
                            warm_start=not a.no_warm_start)
    else:
        res = exhaustive_max_dC(a.n, a.r, a.C, limit=a.limit, prune=not a.no_prune,
                                symmetry=not a.no_symmetry)
    result = res.to_json()
    ok = res.verify(a.C)
    result["verified"] = ok
    return result, ok


def cmd_verify_folklore(run: Run, a) -> tuple[dict, bool]:
    from .search import verify_folklore

    rep = verify_folklore(a.n0)
    return rep.to_json(), rep.passed


def cmd_verify_designs(run: Run, a) -> tuple[dict, bool]:
    from itertools import combinations

    from .search import enumerate_designs

    designs = enumerate_designs(a.v, a.k, a.lam)
    valid = True
    for D in designs:
        for x, y in combinations(range(a.v), 2):
            if sum(1 for m in D.masks if m >> x & 1 and m >> y & 1) != a.lam:
                valid = False
    result = {"v": a.v, "k": a.k, "lambda": a.lam, "count": len(designs), "all_valid": valid}
    if a.v <= CANON_MAX_N:
        result["isomorphism_classes"] = len({canonical_form(D) for D in designs})
    if a.list:
        result["designs"] = [D.to_lists() for D in designs]
    return result, valid


def cmd_verify_constructions(run: Run, a) -> tuple[dict, bool]:
    rep = check_closed_forms(a.r or GRID_RS, a.n_max, a.C or C_GRID)
    return rep, rep["passed"]


def cmd_verify_stability(run: Run, a) -> tuple[dict, bool]:
    rep = check_stability(a.n, a.r, a.u, a.samples, a.seed)
    return rep, rep["passed"]


def cmd_lp_baby(run: Run, a) -> tuple[dict, bool]:
    from .ratlp import BabyLemmaReport, check_family, verify_baby_lemma

    if a.family:
        rep = BabyLemmaReport(a.C, [check_family(run.family(a.family), a.C)])
    else:
        rep = verify_baby_lemma(a.C, workers=max_workers(a.workers))
    return rep.to_json(), rep.passed


def cmd_lp_solve(run: Run, a) -> tuple[dict, bool]:
    from .ratlp import check_certificate, lp_from_text, simplex_max

    lp = lp_from_text(run.read(a.file))
    out = simplex_max(lp)
    result = out.to_json()
    ok = True
    if out.status == "optimal":
        ok = lp.is_feasible(out.solution) and check_certificate(lp, out)
        result["certified"] = ok
    return result, ok


# parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="flowerkit", description=__doc__.split("\n")[0])
    ap.add_argument("--version", action="version", version=f"flowerkit {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(parent, name, func, help_, path=None):
        p = parent.add_parser(name, help=help_, description=help_)
        p.set_defaults(func=func, command_path=path or name)
        return p

    def c_list(p, help_="weights C as p/q"):
        p.add_argument("--C", type=_rational, nargs="+", default=[], help=help_)

    p = add(sub, "construct", cmd_construct, "build a named family and write it in text format")
    p.add_argument("kind", choices=sorted(cons.KINDS))
    for name in ("n", "r", "p", "u", "alpha", "x"):
        p.add_argument(f"--{name}", type=int)
    c_list(p)
    p.add_argument("--out", help="family file (default: stdout, report then goes to stderr)")

    p = add(sub, "analyze", cmd_analyze, "size, degrees, tau and diversities of a family file")
    p.add_argument("file")
    c_list(p)
    p.add_argument("--out")

    p = add(sub, "flower-base", cmd_flower_base, "flower base, inheritance checks and counting bounds")
    p.add_argument("file")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--k", type=int, nargs="+", help="layers for the counting bounds (default: all)")
    p.add_argument("--out")

    p = add(sub, "search", cmd_search, "maximize |F| - C*Δ(F) over intersecting families")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--C", type=_rational, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", help="exact branch and bound (default)")
    mode.add_argument("--anneal", action="store_true", help="simulated annealing, needs --seed")
    p.add_argument("--limit", type=int, default=60, help="max candidate edges for --exhaustive")
    p.add_argument("--no-prune", action="store_true")
    p.add_argument("--no-symmetry", action="store_true")
    p.add_argument("--seed", type=int)
    p.add_argument("--steps", type=int, default=20000)
    p.add_argument("--t0", type=_rational, default=Fraction(2))
    p.add_argument("--t1", type=_rational, default=Fraction(1, 20))
    p.add_argument("--no-warm-start", action="store_true")
    p.add_argument("--out")

    v = add(sub, "verify", None, "exhaustive verifiers").add_subparsers(dest="what", required=True)
    p = add(v, "folklore", cmd_verify_folklore, "span and size of tau = 3 triple systems",
            "verify folklore")
    p.add_argument("--n0", type=int, default=7, choices=(7, 8, 9))
    p.add_argument("--out")
    p = add(v, "designs", cmd_verify_designs, "enumerate labeled (v,k,lambda)-designs",
            "verify designs")
    p.add_argument("--v", type=int, default=7)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--lambda", dest="lam", type=int, default=1)
    p.add_argument("--list", action="store_true", help="include every design in the report")
    p.add_argument("--out")
    p = add(v, "constructions", cmd_verify_constructions,
            "enumerated d_C of the constructions against their closed forms", "verify constructions")
    p.add_argument("--r", type=int, nargs="+")
    p.add_argument("--n-max", type=int, default=GRID_N_MAX)
    c_list(p, "weights (default: a fixed 20-value grid)")
    p.add_argument("--out")
    p = add(v, "stability", cmd_verify_stability,
            "distance to a two-out-of-three family on random subfamilies", "verify stability")
    p.add_argument("--n", type=int, default=12)
    p.add_argument("--r", type=int, default=4)
    p.add_argument("--u", type=int, default=3)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")

    lp = add(sub, "lp-check", None, "exact LP checks").add_subparsers(dest="what", required=True)
    p = add(lp, "baby-lemma", cmd_lp_baby, "LP sweep over the 7-vertex tau = 3 catalog",
            "lp-check baby-lemma")
    p.add_argument("--C", type=_rational, required=True)
    p.add_argument("--family", help="check one family file instead of the catalog")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p = add(lp, "solve", cmd_lp_solve, "solve an LP in the plain-text row format", "lp-check solve")
    p.add_argument("file")
    p.add_argument("--out")
    return ap


def _emit(report: dict, path: str | None, stream) -> None:
    text = json.dumps(report, indent=2) + "\n"
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        stream.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    run = Run(args)
    # construct writes the family itself to --out; its report goes elsewhere
    report_path = None if args.command == "construct" else args.out
    if report_path:
        run.outputs.append(report_path)
    stream = sys.stderr if args.command == "construct" and not args.out else sys.stdout
    try:
        result, passed = args.func(run, args)
    except (FlowerkitError, UsageError) as exc:
        error = {"type": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, ParseError) and exc.line is not None:
            error["line"] = exc.line
        _emit({"manifest": run.manifest(), "passed": False, "error": error}, report_path, stream)
        if not isinstance(exc, ParseError):
            parser.print_usage(sys.stderr)
        return EXIT_USAGE
    _emit({"manifest": run.manifest(), "passed": passed, "result": _jsonable(result)},
          report_path, stream)
    return EXIT_OK if passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
