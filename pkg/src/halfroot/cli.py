"""Command line front end.

Exit codes: 0 yes / success, 1 no, 2 error. Errors print one line to stderr,
``error: <token>: <message>``.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io as gio
from .certificates import CLASS_TAGS, RootCertificate, dumps
from .crosscheck import all_graphs_upto, sweep
from .graph import half_square
from .halfsquare import recognize, verify_root
from .hardness import (
    AssumptionError,
    CliqueCover,
    EccInstance,
    build_root_from_cover,
    extract_cover_from_root,
    reduce_ecc,
    solve_ecc,
)
from .oracle import OracleRefusal, brute_root_search


class CliError(Exception):
    def __init__(self, token: str, message: str):
        super().__init__(message)
        self.token = token


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError("usage", message)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise CliError("parse_error", f"{path}: {exc}") from None


# -- subcommands -------------------------------------------------------------------


def cmd_recognize(args) -> int:
    g = gio.read_graph(args.input)
    out = recognize(g, args.cls, forest=args.forest)
    text = dumps(out)
    if args.cert:
        Path(args.cert).write_text(text)
        sys.stdout.write(f"{args.cls}: {'yes' if out.verdict else 'no'}\n")
    else:
        sys.stdout.write(text)
    return 0 if out.verdict else 1


def cmd_half_square(args) -> int:
    b = gio.read_bigraph(args.input)
    _emit(gio.render(half_square(b, args.side), args.format), args.output)
    return 0


def cmd_build_root(args) -> int:
    g = gio.read_graph(args.input)
    out = recognize(g, args.cls, forest=args.forest)
    if not out.verdict:
        sys.stdout.write(dumps(out))
        return 1
    _emit(gio.render(out.certificate.root, args.format), args.output)
    return 0


def cmd_verify_root(args) -> int:
    g = gio.read_graph(args.input)
    try:
        cert = RootCertificate.from_json(_load_json(args.cert))
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError("bad_certificate", str(exc)) from None
    try:
        res = verify_root(g, cert, forest=args.forest)
    except ValueError as exc:
        raise CliError("size_mismatch", str(exc)) from None
    sys.stdout.write("ok\n" if res else f"fail: {res.reason}\n")
    return 0 if res else 1


def _reduction(args):
    g = gio.read_graph(args.input)
    return g, reduce_ecc(EccInstance(g, args.k))


def cmd_ecc(args) -> int:
    if args.k < 1:
        raise CliError("bad_k", "k must be at least 1")
    if args.ecc_cmd == "solve":
        g = gio.read_graph(args.input)
        cover = solve_ecc(EccInstance(g, args.k))
        if cover is None:
            sys.stdout.write("null\n")
            return 1
        sys.stdout.write(json.dumps(cover.to_json()) + "\n")
        return 0
    g, red = _reduction(args)
    if args.ecc_cmd == "reduce":
        if args.format == "json":
            d = gio.to_json(red.g_prime)
            d["u_set"] = list(red.u_set)
            _emit(json.dumps(d, sort_keys=True) + "\n", args.output)
        else:
            text = gio.render(red.g_prime, args.format)
            if args.format == "text":
                text = f"# U = {' '.join(map(str, red.u_set))}\n" + text
            _emit(text, args.output)
        return 0
    if args.ecc_cmd == "build-root":
        try:
            cover = CliqueCover.from_json(_load_json(args.cover))
            root = build_root_from_cover(red, cover)
        except (TypeError, ValueError) as exc:
            raise CliError("invalid_cover", str(exc)) from None
        d = {"root": gio.to_json(root.b), "partition": root.partition.to_json()}
        _emit(json.dumps(d, sort_keys=True, indent=2) + "\n", args.output)
        return 0
    # extract
    text = Path(args.root).read_text()
    if text.lstrip().startswith("{") and '"root"' in text:
        b = gio.parse_json(json.loads(text)["root"])
    else:
        b = gio.loads(text)
    try:
        cover = extract_cover_from_root(red, b)
    except ValueError as exc:
        raise CliError("invalid_root", str(exc)) from None
    sys.stdout.write(json.dumps(cover.to_json()) + "\n")
    return 0


def cmd_oracle(args) -> int:
    if args.oracle_cmd == "check":
        g = gio.read_graph(args.input)
        try:
            b = brute_root_search(g, args.cls, w_max=args.wmax, prune=not args.no_prune)
        except OracleRefusal as exc:
            raise CliError("oracle_refusal", str(exc)) from None
        if b is None:
            sys.stdout.write("none\n")
            return 1
        sys.stdout.write(gio.render(b, args.format))
        return 0
    rep = sweep(args.cls, all_graphs_upto(args.n), forest=args.forest)
    sys.stdout.write("\n".join(rep.lines()) + "\n")
    return 0 if rep.ok else 1


# -- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="halfroot", description="Half-square recognition with certified half-roots.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    def cls_arg(sp):
        sp.add_argument("--class", dest="cls", required=True, choices=CLASS_TAGS)

    def fmt_arg(sp, default="text"):
        sp.add_argument("--format", choices=("text", "json", "dot"), default=default)

    r = sub.add_parser("recognize", help="decide membership and print a certificate or obstruction")
    cls_arg(r)
    r.add_argument("-i", "--input", required=True)
    r.add_argument("--cert", help="write the certificate JSON here instead of stdout")
    r.add_argument("--forest", action="store_true", help="tree class: accept forest roots")
    r.set_defaults(func=cmd_recognize)

    h = sub.add_parser("half-square", help="half-square of a bipartite graph")
    h.add_argument("-i", "--input", required=True)
    h.add_argument("--side", choices=("x", "y"), default="x")
    h.add_argument("-o", "--output")
    fmt_arg(h)
    h.set_defaults(func=cmd_half_square)

    b = sub.add_parser("build-root", help="print a half-root of the input graph")
    cls_arg(b)
    b.add_argument("-i", "--input", required=True)
    b.add_argument("-o", "--output")
    b.add_argument("--forest", action="store_true")
    fmt_arg(b)
    b.set_defaults(func=cmd_build_root)

    v = sub.add_parser("verify-root", help="check a certificate against a graph")
    v.add_argument("-i", "--input", required=True)
    v.add_argument("--cert", required=True)
    v.add_argument("--forest", action="store_true")
    v.set_defaults(func=cmd_verify_root)

    e = sub.add_parser("ecc", help="edge clique cover tools")
    esub = e.add_subparsers(dest="ecc_cmd", required=True, parser_class=_Parser)
    for name in ("solve", "reduce", "build-root", "extract"):
        sp = esub.add_parser(name)
        sp.add_argument("-i", "--input", required=True)
        sp.add_argument("-k", type=int, required=True)
        sp.add_argument("-o", "--output")
        if name == "reduce":
            fmt_arg(sp)
        if name == "build-root":
            sp.add_argument("--cover", required=True)
        if name == "extract":
            sp.add_argument("--root", required=True)
    e.set_defaults(func=cmd_ecc)

    o = sub.add_parser("oracle", help="brute-force checks")
    osub = o.add_subparsers(dest="oracle_cmd", required=True, parser_class=_Parser)
    oc = osub.add_parser("check")
    cls_arg(oc)
    oc.add_argument("-i", "--input", required=True)
    oc.add_argument("--wmax", type=int, default=None)
    oc.add_argument("--no-prune", action="store_true")
    fmt_arg(oc)
    osw = osub.add_parser("sweep")
    cls_arg(osw)
    osw.add_argument("--n", type=int, default=6)
    osw.add_argument("--forest", action="store_true")
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except CliError as exc:
        token, msg = exc.token, str(exc)
    except AssumptionError as exc:
        token, msg = exc.token, str(exc).split(": ", 1)[-1]
    except gio.FormatError as exc:
        token, msg = "parse_error", str(exc)
    except OSError as exc:
        token, msg = "io_error", f"{exc.strerror}: {exc.filename}"
    except (KeyError, TypeError, ValueError) as exc:
        token, msg = "invalid_input", str(exc)
    except Exception as exc:  # keep the exit-code contract total
        token, msg = "internal_error", f"{type(exc).__name__}: {exc}"
    sys.stderr.write(f"error: {token}: {' '.join(msg.split())}\n")
    return 2


run = main

if __name__ == "__main__":
    sys.exit(main())
