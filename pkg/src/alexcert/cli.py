"""
Command-line interface.

Exit codes: 0 success, 1 usage or parse error, 2 verification or property
failure, 3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import laurent, pmembership
from .alexander import BurauError, braid_poly, burau_poly, skein_oracle, tree_poly
from .braid import PositiveBraidWord, SearchExhausted, closure_components, parse_letters, parse_word, torus_word
from .laurent import HalfLaurent, summarize
from .satellite import SatellitePattern, cable_pattern, obstruction, satellite_poly
from .surfaces import parse_tree
from .sweeps import MODES, SweepConfig, run_sweep

EXIT_OK, EXIT_USAGE, EXIT_FAILED, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps({"schema": 1, **payload}, indent=2, sort_keys=False))
    else:
        print(text)


def _poly_payload(p: HalfLaurent) -> dict:
    return {"polynomial": str(p), "polynomial_json": laurent.to_json(p), "summary": summarize(p).to_dict()}


def _summary_text(p: HalfLaurent) -> str:
    s = summarize(p)
    if s.is_zero:
        return "zero polynomial"
    return f"d={s.degree} alpha={s.alpha} beta={s.beta}"


def _read_braid(args) -> PositiveBraidWord:
    try:
        if getattr(args, "braid", None):
            return parse_word(args.braid)
        if args.strands is not None and args.word is not None:
            return parse_letters(args.strands, args.word)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    raise UsageError("give a braid as 'n: l1 l2 ...' or with --strands N --word l1,l2,...")


def _parse_companion(text: str) -> PositiveBraidWord:
    try:
        return parse_word(text)
    except ValueError as exc:
        raise UsageError(f"companion: {exc}") from exc


def _tree_arg(args):
    text = args.tree_text or args.tree
    if not text:
        raise UsageError("give a tree with --tree, e.g. --tree 'v(v(v))'")
    try:
        return parse_tree(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_poly(args) -> int:
    if args.kind == "braid":
        w = _read_braid(args)
        route = {"seifert": braid_poly, "skein": skein_oracle, "burau": burau_poly}[args.method]
        p = route(w)
        label = str(w)
        extra = {"components": closure_components(w)}
    elif args.kind == "tree":
        T = _tree_arg(args)
        p = tree_poly(T)
        label = str(T)
        extra = {}
    else:
        if args.p is None or args.q is None:
            raise UsageError("poly torus needs P Q")
        try:
            w = torus_word(args.p, args.q)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        p = braid_poly(w)
        label = f"T({args.p},{args.q})"
        extra = {"components": closure_components(w)}
    _emit(args, {"input": label, **extra, **_poly_payload(p)}, f"{p}\n{_summary_text(p)}")
    return EXIT_OK


def _build_cert(args):
    if args.kind == "braid":
        try:
            return pmembership.certify_braid(_read_braid(args))
        except pmembership.NotInScope as exc:
            raise UsageError(str(exc)) from exc
    if args.kind == "tree":
        return pmembership.certify_tree(_tree_arg(args))
    if len(args.files) != 2:
        raise UsageError("certify sum needs two certificate files")
    a, b = (_load_cert(f) for f in args.files)
    return pmembership.certify_sum(a, b)


def _read_path(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _load_cert(path: str):
    return pmembership.loads(_read_path(path))


def cmd_certify(args) -> int:
    cert = _build_cert(args)
    text = pmembership.dumps(cert)
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    cert = _load_cert(args.path)
    r = pmembership.verify(cert)
    status = "VALID" if r.valid else f"INVALID at {r.failed_node}: {', '.join(r.failed_checks)}"
    text = f"{status}\n{r.delta}\n{_summary_text(r.delta)}"
    _emit(args, r.to_dict(), text)
    return EXIT_OK if r.valid else EXIT_FAILED


def _verdict_payload(v) -> dict:
    return {
        "winding_ok": v.winding_ok,
        "sign_ok": v.sign_ok,
        "fires": v.fires,
        "zero_pattern": v.zero_pattern,
        "verdict": v.label,
    }


def _satellite_report(args, pat: SatellitePattern, companion: PositiveBraidWord) -> int:
    if closure_components(companion) != 1:
        raise UsageError(f"companion {companion} does not close to a knot")
    dk = braid_poly(companion)
    p = satellite_poly(pat, dk)
    v = obstruction(pat)
    payload = {
        "winding": pat.winding,
        "pattern_poly": str(pat.pattern_poly),
        "companion": str(companion),
        "companion_poly": str(dk),
        **_poly_payload(p),
        **_verdict_payload(v),
    }
    text = f"{p}\n{_summary_text(p)}\n{v.label}"
    if v.zero_pattern:
        text += " (pattern polynomial is zero)"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_satellite(args) -> int:
    try:
        pat = SatellitePattern(args.winding, laurent.parse(args.pattern_poly))
    except (ValueError, json.JSONDecodeError) as exc:
        raise UsageError(f"pattern polynomial: {exc}") from exc
    return _satellite_report(args, pat, _parse_companion(args.companion))


def cmd_cable(args) -> int:
    try:
        pat = cable_pattern(args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return _satellite_report(args, pat, _parse_companion(args.companion))


def cmd_sweep(args) -> int:
    try:
        cfg = SweepConfig(args.mode, args.max_strands, args.max_len, args.max_vertices, args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    r = run_sweep(cfg, sort=args.sorted)
    lines = [f"mode={r.mode} cases={r.cases_run} failures={len(r.failures)} time={r.wall_time:.1f}s"]
    lines += [f"FAIL {f.input}: expected {f.expected}; observed {f.observed}" for f in r.failures]
    payload = r.to_dict()
    payload.pop("schema")
    if args.sorted:
        payload.pop("wall_time")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if r.ok else EXIT_FAILED


def cmd_ito(args) -> int:
    words = [_parse_companion(s) for s in args.summands]
    (row,) = pmembership.ito_summand_check([words])
    ok = row.ok
    payload = {"word": str(row.word), "summands": row.summands, "beta": row.beta, "is_knot": row.is_knot, "ok": ok}
    text = f"{row.word}\nsummands={row.summands} -beta={-row.beta} {'OK' if ok else 'MISMATCH'}"
    _emit(args, payload, text)
    return EXIT_OK if ok else EXIT_FAILED


def _add_braid_args(p):
    p.add_argument("braid", nargs="?", help="braid as 'n: l1 l2 ...' or T(p,q)")
    p.add_argument("--strands", type=int)
    p.add_argument("--word", help="comma-separated generator indices")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="alexcert", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--json", action="store_true", help="structured output on stdout")
        return p

    p = common(sub.add_parser("poly", help="Alexander polynomial of a braid closure, tree plumbing or torus link"))
    p.add_argument("kind", choices=["braid", "tree", "torus"])
    p.add_argument("args", nargs="*")
    p.add_argument("--strands", type=int)
    p.add_argument("--word")
    p.add_argument("--tree")
    p.add_argument("--method", choices=["seifert", "skein", "burau"], default="seifert")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("certify", help="write a membership certificate")
    p.add_argument("kind", choices=["braid", "tree", "sum"])
    p.add_argument("args", nargs="*", help="braid text, tree text, or two certificate files for 'sum'")
    p.add_argument("--strands", type=int)
    p.add_argument("--word")
    p.add_argument("--tree")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_certify)

    p = common(sub.add_parser("verify-cert", help="verify a certificate file ('-' for stdin)"))
    p.add_argument("path")
    p.set_defaults(func=cmd_verify)

    p = common(sub.add_parser("satellite", help="satellite polynomial and obstruction verdict"))
    p.add_argument("--winding", type=int, required=True)
    p.add_argument("--pattern-poly", required=True, help="JSON pairs or text, e.g. 't^(1/2) - t^(-1/2)'")
    p.add_argument("--companion", required=True, help="companion knot braid, e.g. '2: 1 1 1'")
    p.set_defaults(func=cmd_satellite)

    p = common(sub.add_parser("cable", help="(n,1)-cable of a positive braid knot"))
    p.add_argument("n", type=int)
    p.add_argument("--companion", required=True)
    p.set_defaults(func=cmd_cable)

    p = common(sub.add_parser("sweep", help="exhaustive property sweep"))
    p.add_argument("--mode", choices=MODES, default="theorem1")
    p.add_argument("--max-strands", type=int, default=3)
    p.add_argument("--max-len", type=int, default=6)
    p.add_argument("--max-vertices", type=int, default=0, help="also sweep plane trees (theorem1 mode)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--sorted", action="store_true", help="sort failures and drop timing for byte-stable output")
    p.set_defaults(func=cmd_sweep)

    p = common(sub.add_parser("ito-check", help="compare -beta with the number of prime summands"))
    p.add_argument("summands", nargs="+", help="prime knot braids, e.g. 'T(2,3)' '2: 1 1 1 1 1'")
    p.set_defaults(func=cmd_ito)
    return parser


def _normalize(args) -> None:
    """Map positional leftovers of poly/certify onto named fields."""
    if args.command not in ("poly", "certify"):
        return
    rest = list(args.args)
    args.braid = None
    args.tree_text = None
    args.files = []
    args.p = args.q = None
    if args.kind == "braid":
        if len(rest) > 1:
            raise UsageError("give the braid as one quoted argument, e.g. '3: 1 2 1 2'")
        args.braid = rest[0] if rest else None
    elif args.kind == "tree":
        args.tree_text = rest[0] if rest else None
    elif args.kind == "torus":
        try:
            args.p, args.q = (int(x) for x in rest)
        except ValueError:
            raise UsageError("poly torus needs two integers P Q") from None
    else:
        args.files = rest


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _normalize(args)
        return args.func(args)
    except UsageError as exc:
        print(f"alexcert: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except pmembership.CertificateFormatError as exc:
        print(f"alexcert: malformed certificate: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SearchExhausted, BurauError) as exc:
        print(f"alexcert: internal invariant breach: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
