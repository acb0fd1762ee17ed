"""
orthorep.py
───────────
Command-line front door.  Every verb maps to one library operation and
prints a deterministic JSON (or markdown) report.

    python orthorep.py classify --nakayama 3,2 --kind max-1-orthosymmetric
    python orthorep.py rigidity --nakayama 3,2 --module L:0,1
    python orthorep.py hom --algebra a.json --x x.json --y y.json
    python orthorep.py verify-paper s5 --format md

Exit status: 0 success, 1 a mathematical "no", 2 bad input, 3 budget
or cutoff exhausted.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

from ar_translate import tau_higher, tau_higher_minus
from bound_quiver import Algebra, NakayamaParams, load_algebra
from errors import (
    CatalogueRequired,
    DecompositionFailed,
    Inconclusive,
    NonAdmissible,
    OrthorepError,
    OutOfRange,
    ParamsMismatch,
    PreconditionFailed,
    SearchBudgetExceeded,
)
from exact_field import parse_field
from nakayama import bridge, classify, dd, dd_table, dd_table_markdown, parse_literal
from orthosym import (
    AtLeast,
    gorenstein_dims_of_end,
    is_n_orthosymmetric,
    is_nm_orthosymmetric,
    nakayama_catalogue,
    rigidity_degree,
)
from relative_homology import left_approx, right_approx
from rep_module import AddSet, cosyzygy, decompose, direct_sum, ext_dim, hom_dim, projectives, syzygy
from representation import Module, load_module
from settings import REPORT_VERSION, TOOL_VERSION, Settings
from tilting import is_tilting, mutate_left, mutate_right
from verify_paper import run_suite

logger = logging.getLogger("orthorep")

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

INPUT_ERRORS = (ValueError, FileNotFoundError, ParamsMismatch, OutOfRange, NonAdmissible, PreconditionFailed)
BUDGET_ERRORS = (SearchBudgetExceeded, Inconclusive, DecompositionFailed)


# ── Context ──────────────────────────────────────────────────────────

@dataclass
class Context:
    """Algebra, module resolver and settings for one invocation."""
    algebra: Algebra
    settings: Settings
    params: Optional[NakayamaParams] = None
    builder: Optional[Callable] = None
    _catalogue: object = field(default=None, repr=False)

    def module(self, text: str) -> Module:
        """A module file path, or ``L:i,t`` over a Nakayama algebra."""
        if text.upper().startswith("L:"):
            if self.params is None:
                raise ValueError(f"module literal {text!r} needs --nakayama")
            return self.builder(parse_literal(text, self.params))
        return load_module(self.algebra, text)

    def catalogue(self):
        if self._catalogue is None:
            if self.params is None:
                raise CatalogueRequired("catalogue-based verbs need --nakayama")
            self._catalogue = nakayama_catalogue(self.params, bridged=(self.algebra, self.builder))
        return self._catalogue

    def addset(self, texts: List[str]):
        """add(A ⊕ given modules)."""
        out = projectives(self.algebra)
        for t in texts or []:
            out = out.union(AddSet.of(self.module(t), rng=None))
        return out


def _parse_params(text: str) -> NakayamaParams:
    try:
        e, a = (int(x) for x in text.split(","))
    except ValueError as exc:
        raise ValueError(f"--nakayama expects e,a, got {text!r}") from exc
    return NakayamaParams(e, a)


def build_context(args: argparse.Namespace) -> Context:
    settings = Settings.from_env(seed=args.seed, cutoff=args.cutoff) if args.cutoff else Settings.from_env(seed=args.seed)
    F = parse_field(args.field)
    if getattr(args, "nakayama", None):
        params = _parse_params(args.nakayama)
        A, builder = bridge(params, F)
        return Context(A, settings, params, builder)
    if getattr(args, "algebra", None):
        return Context(load_algebra(args.algebra), settings)
    raise ValueError("give --nakayama e,a or --algebra PATH")


# ── Verbs ────────────────────────────────────────────────────────────

def _verdict(ok: bool, payload: dict) -> Tuple[int, dict]:
    return (EXIT_OK if ok else EXIT_FAIL), payload


def cmd_hom(ctx: Context, args) -> Tuple[int, dict]:
    return EXIT_OK, {"hom": hom_dim(ctx.module(args.x), ctx.module(args.y))}


def cmd_ext(ctx: Context, args) -> Tuple[int, dict]:
    return EXIT_OK, {"i": args.i, "ext": ext_dim(ctx.module(args.x), ctx.module(args.y), args.i)}


def cmd_syzygy(ctx: Context, args) -> Tuple[int, dict]:
    X = ctx.module(args.x)
    Z = syzygy(X, args.k) if args.k >= 0 else cosyzygy(X, -args.k)
    return EXIT_OK, {"k": args.k, "dims": list(Z.dims), "module": Z.to_dict()}


def cmd_tau(ctx: Context, args) -> Tuple[int, dict]:
    X = ctx.module(args.x)
    Z = tau_higher_minus(X, args.n) if args.inverse else tau_higher(X, args.n)
    return EXIT_OK, {"n": args.n, "inverse": args.inverse, "dims": list(Z.dims), "module": Z.to_dict()}


def cmd_approx(ctx: Context, args) -> Tuple[int, dict]:
    M = ctx.addset(args.module)
    X = ctx.module(args.x)
    ap = right_approx(M, X) if args.side == "right" else left_approx(M, X)
    return EXIT_OK, {
        "side": ap.side,
        "object": list(ap.object.dims),
        "multiplicities": ap.multiplicities,
        "complement": list(ap.complement.dims),
    }


def cmd_rigidity(ctx: Context, args) -> Tuple[int, dict]:
    M = ctx.addset(args.module)
    r = rigidity_degree(M, args.cap)
    out = {"rigidity": repr(r) if isinstance(r, AtLeast) else r}
    if ctx.params is not None and args.module and all(m.upper().startswith("L:") for m in args.module):
        xs = [parse_literal(m, ctx.params) for m in args.module]
        out["dd"] = {repr(x): dd(x) for x in xs if not x.is_projective}
    return EXIT_OK, out


def cmd_orthosym(ctx: Context, args) -> Tuple[int, dict]:
    M = ctx.addset(args.module)
    if args.m:
        ok = is_nm_orthosymmetric(M, args.n, args.m, ctx.catalogue())
        return _verdict(ok, {"n": args.n, "m": args.m, "method": "enumeration", "ortho_symmetric": ok})
    report = is_n_orthosymmetric(M, args.n)
    payload = report.to_dict()
    if args.assume_mueller_exact:
        payload["domdim"] = payload.pop("domdim_lower")
    return _verdict(report.ortho_symmetric, payload)


def cmd_gorenstein(ctx: Context, args) -> Tuple[int, dict]:
    left, right = gorenstein_dims_of_end(ctx.addset(args.module), args.n, ctx.settings.cutoff,
                                         allow_selfinjective=args.allow_selfinjective)
    return EXIT_OK, {"n": args.n, "left": left.to_dict(), "right": right.to_dict()}


def cmd_tilting(ctx: Context, args) -> Tuple[int, dict]:
    parts = [ctx.module(t) for t in args.module]
    T = parts[0] if len(parts) == 1 else direct_sum(parts, name="T")[0]
    report = is_tilting(T, args.cap)
    return _verdict(report.verdict.kind == "tilting", report.to_dict())


def cmd_mutate(ctx: Context, args) -> Tuple[int, dict]:
    M = ctx.addset(args.module + args.pivot)
    pivot = AddSet.of(*(ctx.module(t) for t in args.pivot))
    result = mutate_right(M, pivot) if args.side == "right" else mutate_left(M, pivot)
    payload = result.to_dict()
    if ctx.params is not None:
        cat = ctx.catalogue()
        payload["output"] = sorted(cat.label_of(Y) for Y in result.output.summands)
    return EXIT_OK, payload


def cmd_decompose(ctx: Context, args) -> Tuple[int, dict]:
    pieces = decompose(ctx.module(args.x), rng=ctx.settings.rng())
    if ctx.params is not None:
        cat = ctx.catalogue()
        return EXIT_OK, {"summands": sorted([cat.label_of(Y), k] for Y, k in pieces)}
    return EXIT_OK, {"summands": [[list(Y.dims), k] for Y, k in pieces]}


def cmd_classify(ctx: Context, args) -> Tuple[int, dict]:
    if ctx.params is None or ctx.params.e % 3:
        raise ValueError("classify needs --nakayama e,a with e divisible by 3")
    report = classify(ctx.params.e // 3, ctx.params.a, args.kind, pruned=not args.unpruned, limit=args.limit)
    payload = report.to_dict()
    if not args.timing:
        payload.pop("elapsed_s", None)
    return EXIT_OK, {"_markdown": report.to_markdown(), **payload}


def cmd_dd_table(ctx: Context, args) -> Tuple[int, dict]:
    p = ctx.params
    if p is None:
        raise ValueError("dd-table needs --nakayama e,a")
    table = dd_table(p.e, p.a)
    return EXIT_OK, {
        "_markdown": dd_table_markdown(p.e, p.a),
        "table": {f"L({i},{t})": v for (i, t), v in sorted(table.items())},
    }


def cmd_verify_paper(args) -> Tuple[int, dict]:
    report = run_suite(args.scope)
    payload = report.to_dict(timing=args.timing)
    return _verdict(report.passed, {"_markdown": report.to_markdown(), **payload})


VERBS: Dict[str, Callable] = {
    "hom": cmd_hom,
    "ext": cmd_ext,
    "syzygy": cmd_syzygy,
    "tau": cmd_tau,
    "approx": cmd_approx,
    "rigidity": cmd_rigidity,
    "orthosym": cmd_orthosym,
    "gorenstein": cmd_gorenstein,
    "tilting": cmd_tilting,
    "mutate": cmd_mutate,
    "decompose": cmd_decompose,
    "classify": cmd_classify,
    "dd-table": cmd_dd_table,
}


# ── Argument parsing ─────────────────────────────────────────────────

def _common(p: argparse.ArgumentParser, algebra: bool = True) -> None:
    if algebra:
        src = p.add_mutually_exclusive_group()
        src.add_argument("--nakayama", metavar="E,A", help="use A_{e,ae+1}; enables L:i,t literals")
        src.add_argument("--algebra", metavar="PATH", help="TOML or JSON bound quiver file")
    p.add_argument("--field", default="Fp:101", help="Fp:<prime> or Q (default Fp:101)")
    p.add_argument("--seed", type=int, default=None, help="overridden by $ORTHOREP_SEED")
    p.add_argument("--cutoff", type=int, default=None, help="resolution cutoff")
    p.add_argument("--format", choices=("json", "md"), default="json")
    p.add_argument("--out", metavar="PATH", help="also write the report here")
    p.add_argument("--timing", action="store_true", help="include wall-clock timings")
    p.add_argument("-v", "--verbose", action="count", default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orthorep", description="Exact homological workbench for bound quiver algebras.")
    sub = parser.add_subparsers(dest="verb", required=True)

    for verb in ("hom", "ext"):
        p = sub.add_parser(verb)
        _common(p)
        p.add_argument("--x", required=True)
        p.add_argument("--y", required=True)
        if verb == "ext":
            p.add_argument("--i", type=int, default=1)

    p = sub.add_parser("syzygy")
    _common(p)
    p.add_argument("--x", required=True)
    p.add_argument("--k", type=int, default=1)

    p = sub.add_parser("tau")
    _common(p)
    p.add_argument("--x", required=True)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--inverse", action="store_true")

    p = sub.add_parser("approx")
    _common(p)
    p.add_argument("--module", action="append", default=[])
    p.add_argument("--x", required=True)
    p.add_argument("--side", choices=("right", "left"), default="right")

    p = sub.add_parser("rigidity")
    _common(p)
    p.add_argument("--module", action="append", default=[])
    p.add_argument("--cap", type=int, default=12)

    p = sub.add_parser("orthosym")
    _common(p)
    p.add_argument("--module", action="append", default=[])
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--assume-mueller-exact", action="store_true",
                   help="report the dominant dimension lower bound as the exact value")

    p = sub.add_parser("gorenstein")
    _common(p)
    p.add_argument("--module", action="append", default=[])
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--allow-selfinjective", action="store_true")

    p = sub.add_parser("tilting")
    _common(p)
    p.add_argument("--module", action="append", required=True)
    p.add_argument("--cap", type=int, default=12)

    p = sub.add_parser("mutate")
    _common(p)
    p.add_argument("--module", action="append", default=[])
    p.add_argument("--pivot", action="append", required=True)
    p.add_argument("--side", choices=("right", "left"), default="right")

    p = sub.add_parser("decompose")
    _common(p)
    p.add_argument("--x", required=True)

    p = sub.add_parser("classify")
    _common(p)
    p.add_argument("--kind", choices=("max-1-orthosymmetric", "max-1-rigid"), default="max-1-orthosymmetric")
    p.add_argument("--unpruned", "--exhaustive-unpruned", action="store_true")
    p.add_argument("--limit", type=int, default=1 << 22)

    p = sub.add_parser("dd-table")
    _common(p)

    p = sub.add_parser("verify-paper")
    _common(p, algebra=False)
    p.add_argument("scope", choices=("s2", "s3", "s4", "s5", "all"))

    return parser


# ── Output ───────────────────────────────────────────────────────────

def _markdown(verb: str, body: dict) -> str:
    if "_markdown" in body:
        return body["_markdown"]
    lines = [f"### {verb}", "", "| key | value |", "|---|---|"]
    for k, v in body.items():
        lines.append(f"| {k} | {json.dumps(v, ensure_ascii=False)} |")
    return "\n".join(lines)


def _md_header(args, settings: Optional[Settings]) -> str:
    seed = settings.seed if settings else None
    cutoff = settings.cutoff if settings else None
    return (f"> orthorep {TOOL_VERSION} · report {REPORT_VERSION} · field {args.field}"
            f" · seed {seed} · cutoff {cutoff}")


def render(verb: str, args, settings: Optional[Settings], body: dict) -> str:
    if args.format == "md":
        return _md_header(args, settings) + "\n\n" + _markdown(verb, body)
    doc = {
        "report_version": REPORT_VERSION,
        "tool_version": TOOL_VERSION,
        "verb": verb,
        "field": args.field,
        "seed": settings.seed if settings else None,
        "cutoff": settings.cutoff if settings else None,
        "result": {k: v for k, v in body.items() if not k.startswith("_")},
    }
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")

    settings = None
    try:
        if args.verb == "verify-paper":
            settings = Settings.from_env(seed=args.seed)
            status, body = cmd_verify_paper(args)
        else:
            ctx = build_context(args)
            settings = ctx.settings
            status, body = VERBS[args.verb](ctx, args)
    except BUDGET_ERRORS as exc:
        logger.error("%s", exc)
        print(f"❌ {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except INPUT_ERRORS as exc:
        print(f"❌ {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OrthorepError as exc:
        print(f"❌ {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT

    text = render(args.verb, args, settings, body)
    print(text)
    if args.out:
        Path(args.out).write_text(text + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
