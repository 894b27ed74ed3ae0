"""Command-line front end.

Exit codes: 0 success, 1 computation or invariant failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from fractions import Fraction

from . import suites
from .leclerc import ENGINES, Engine
from .oracle import WindowExhausted
from .order import GeneralizedOrder, UnsupportedOperation, WeightedOrder, parse_order
from .rootsys import ConfigurationError, RootSystem, build
from .typea import bcd_multiset, build_table, closed_form_word
from .weyl import (
    InvariantViolation,
    NotReducedOrder,
    beta_sequence,
    extract_reduced_word,
    l_block,
    p_constants,
    terminal_segment,
    translation_terminal_set,
)
from .words import render, to_json

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}") from None


def parse_range(text: str) -> range:
    """``"a..b"`` inclusive; a single integer is a one-point range."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        v = int(text)
        return range(v, v + 1)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected a..b") from None


def parse_slopes(text: str, rank: int):
    """``"1,1/2:2,1"`` gives slopes for ``d >= 0`` before the colon and ``d < 0`` after it."""
    pos, _, neg = text.partition(":")
    try:
        a_pos = tuple(Fraction(t) for t in pos.split(","))
        a_neg = tuple(Fraction(t) for t in neg.split(",")) if neg else a_pos
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad slopes {text!r}") from None
    if len(a_pos) != rank or len(a_neg) != rank:
        raise UsageError(f"expected {rank} slopes on each side of ':'")
    return a_pos, a_neg


def make_system(args) -> RootSystem:
    if not args.type:
        raise UsageError("--type is required")
    return build(args.type, args.rank, labeling=args.labeling)


def make_policy(args, sys_: RootSystem):
    n = sys_.rank
    order = parse_order(args.order, n) if args.order else tuple(range(1, n + 1))
    if args.weights and args.slopes:
        raise UsageError("--weights and --slopes are mutually exclusive")
    if args.slopes:
        a_pos, a_neg = parse_slopes(args.slopes, n)
        return GeneralizedOrder(order, a_pos, a_neg)
    weights = parse_ints(args.weights) if args.weights else (1,) * n
    return WeightedOrder(order, weights)


def d_values(args, default=None):
    if args.d is not None and args.d_range is not None:
        raise UsageError("--d and --d-range are mutually exclusive")
    if args.d is not None:
        return range(args.d, args.d + 1)
    if args.d_range is not None:
        return parse_range(args.d_range)
    return default


def root_label(alpha) -> str:
    parts = []
    for i, k in enumerate(alpha, start=1):
        if k:
            parts.append(f"{'' if k == 1 else k}α{i}")
    return "+".join(parts)


def render_affine(r) -> str:
    return f"({root_label(r.lam) if all(x >= 0 for x in r.lam) else '-' + root_label([-x for x in r.lam])},{r.level})"


def word_record(sys_, policy, alpha, d, w) -> dict:
    rec = {"type": sys_.name, "rank": sys_.rank, "order": list(policy.index_order)}
    rec.update(policy.to_json())
    rec.update({"alpha": list(alpha), "d": d, "word": to_json(w)})
    return rec


def _policy_text(policy) -> tuple[str, str]:
    order = "".join(map(str, policy.index_order)) if policy.rank < 10 else ",".join(map(str, policy.index_order))
    if policy.is_weighted:
        return order, ",".join(map(str, policy.weights))
    pos = ",".join(map(str, policy.slopes_pos))
    neg = ",".join(map(str, policy.slopes_neg))
    return order, f"{pos}:{neg}"


def emit_words(out, fmt, sys_, policy, rows):
    if fmt == "json":
        records = [word_record(sys_, policy, a, d, w) for a, d, w in rows]
        out.write(json.dumps(records[0] if len(records) == 1 else records) + "\n")
        return
    for a, d, w in rows:
        if fmt == "tsv":
            order, weights = _policy_text(policy)
            out.write("\t".join([sys_.name, order, weights, ",".join(map(str, a)), str(d), render(w)]) + "\n")
        else:
            out.write(render(w) + "\n")


# -- subcommands ------------------------------------------------------------------


def cmd_word(args, out) -> int:
    sys_ = make_system(args)
    policy = make_policy(args, sys_)
    alpha = sys_.parse_root(args.root or "theta")
    ds = d_values(args)
    if ds is None:
        raise UsageError("word needs --d or --d-range")
    eng = Engine(sys_, policy)
    rows = [(alpha, d, eng.word(alpha, d, args.engine, s=args.s)) for d in ds]
    emit_words(out, args.format, sys_, policy, rows)
    return EXIT_OK


def cmd_table(args, out) -> int:
    sys_ = make_system(args)
    policy = make_policy(args, sys_)
    eng = Engine(sys_, policy)
    roots = [sys_.parse_root(args.root)] if args.root else list(sys_.positive_roots)
    rows = []
    for alpha in roots:
        ds = d_values(args)
        if ds is None:
            if not policy.is_weighted:
                raise UsageError("generalized orders need an explicit --d-range")
            ds = range(policy.weighted_height(alpha))
        rows.extend((alpha, d, eng.word(alpha, d, args.engine, s=args.s)) for d in ds)
    if args.format == "text":
        for a, d, w in rows:
            out.write(f"{','.join(map(str, a))}\t{d}\t{render(w)}\n")
    else:
        emit_words(out, args.format, sys_, policy, rows)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.suite not in suites.SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; expected one of {', '.join(suites.SUITES)}")
    sys_ = make_system(args)
    policy = make_policy(args, sys_)
    eng = Engine(sys_, policy)
    ds = d_values(args)
    s = args.s if args.s is not None else 3
    count = args.count if args.count is not None else 200
    total = failed = 0
    for check in suites.run(args.suite, eng, ds, s=s, count=count):
        total += 1
        failed += not check.ok
        out.write(check.line() + "\n")
    verdict = "pass" if failed == 0 else "fail"
    out.write(f"{args.suite}: {verdict} ({total - failed}/{total} checks)\n")
    return EXIT_OK if failed == 0 else EXIT_FAIL


def cmd_weyl(args, out) -> int:
    sys_ = make_system(args)
    emit = args.emit
    if emit == "terminal-set" and args.mu:
        mu = parse_ints(args.mu)
        if len(mu) != sys_.rank:
            raise UsageError(f"--mu needs {sys_.rank} entries")
        try:
            roots = translation_terminal_set(sys_, mu)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        index = {a: k for k, a in enumerate(sys_.positive_roots)}
        roots = sorted(roots, key=lambda r: (index[r.lam], r.level))
        return _emit_roots(out, args.format, roots, braces=True)

    policy = make_policy(args, sys_)
    eng = Engine(sys_, policy)
    if emit == "p-constants":
        if args.i is None or args.d is None:
            raise UsageError("p-constants needs --i and --d")
        if args.d < 0:
            raise UsageError("p-constants needs --d >= 0")
        p = p_constants(sys_, policy, args.i, args.d)
        if args.format == "json":
            out.write(json.dumps({"p": list(p)}) + "\n")
        else:
            out.write(f"p = {','.join(map(str, p))}\n")
        return EXIT_OK
    if emit == "beta":
        count = args.count if args.count is not None else 20
        return _emit_roots(out, args.format, beta_sequence(eng, -count + 1, 0, depth=args.depth))
    if args.i is not None:
        if args.d is None or args.d < 0:
            raise UsageError("a terminal segment needs --i and --d >= 0")
        roots = terminal_segment(eng, args.i, args.d)
    else:
        roots = l_block(eng, args.depth)
    if emit == "terminal-set":
        return _emit_roots(out, args.format, roots, braces=True)
    word = extract_reduced_word(sys_, roots)
    if args.format == "json":
        out.write(json.dumps(word) + "\n")
    else:
        out.write(" ".join(map(str, word)) + "\n")
    return EXIT_OK


def _emit_roots(out, fmt, roots, braces=False) -> int:
    if fmt == "json":
        out.write(json.dumps([[list(r.lam), r.level] for r in roots]) + "\n")
    elif braces:
        out.write("{" + ",".join(render_affine(r) for r in roots) + "}\n")
    else:
        for r in roots:
            out.write(render_affine(r) + "\n")
    return EXIT_OK


def cmd_typea(args, out) -> int:
    if args.n is None or not args.weights:
        raise UsageError("typea needs --n and --weights")
    weights = parse_ints(args.weights)
    mult = parse_ints(args.m) if args.m else None
    emit = args.emit
    if emit == "table":
        table = build_table(args.n, weights, mult)
        if args.format == "json":
            out.write(table.to_json() + "\n")
        else:
            out.write(" ".join(map(str, table.sequence)) + "\n\n" + table.render() + "\n")
        return EXIT_OK
    ds = d_values(args)
    if ds is None:
        raise UsageError(f"--emit {emit} needs --d or --d-range")
    for d in ds:
        if emit == "word":
            w = closed_form_word(args.n, weights, d)
            out.write((json.dumps(to_json(w)) if args.format == "json" else render(w)) + "\n")
        else:
            ms = bcd_multiset(weights, mult or (1,) * args.n, d)
            letters = sorted(ms.elements())
            if args.format == "json":
                out.write(json.dumps(to_json(letters)) + "\n")
            else:
                out.write("{" + " ".join(f"{i}^({e})" for i, e in letters) + "}\n")
    return EXIT_OK


COMMANDS = {"word": cmd_word, "table": cmd_table, "verify": cmd_verify, "weyl": cmd_weyl, "typea": cmd_typea}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lyndonloop", description="Standard Lyndon loop words and related checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", help="Lie type: A, B, C, D (with --rank) or G2, F4, E6, E7, E8")
    common.add_argument("--rank", type=int)
    common.add_argument("--labeling", choices=("table", "bourbaki"), default="table",
                        help="node numbering for exceptional types (default: table)")
    common.add_argument("--order", help="nodes in increasing order, e.g. 51324 or 5,1,3,2,4")
    common.add_argument("--weights", help="comma-separated positive integers, one per node")
    common.add_argument("--slopes", help="piecewise-linear slopes 'a+_1,...:a-_1,...' (rationals allowed)")
    common.add_argument("--root", help="'theta', 'simple:i' or a coefficient vector like 1,2,1")
    common.add_argument("--d", type=int)
    common.add_argument("--d-range", dest="d_range", help="inclusive range a..b")
    common.add_argument("--engine", choices=ENGINES, default="fast")
    common.add_argument("--s", type=int, help="letter window for the oracle")
    common.add_argument("--format", choices=("text", "json", "tsv"), default="text")
    common.add_argument("--out", help="write to this file instead of stdout")

    sub.add_parser("word", parents=[common], help="compute l(alpha, d)")
    sub.add_parser("table", parents=[common], help="one row per (alpha, d)")
    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--count", type=int)
    p = sub.add_parser("weyl", parents=[common], help="affine Weyl group utilities")
    p.add_argument("--emit", choices=("beta", "reduced-word", "terminal-set", "p-constants"), required=True)
    p.add_argument("--i", type=int)
    p.add_argument("--mu", help="dominant regular coweight, comma-separated")
    p.add_argument("--count", type=int)
    p.add_argument("--depth", type=int, default=1, help="marker depth for generalized orders")
    p = sub.add_parser("typea", parents=[common], help="closed forms for divisible weights")
    p.add_argument("--n", type=int)
    p.add_argument("--m", help="root coefficients for the multiset variant")
    p.add_argument("--emit", choices=("table", "word", "multiset"), required=True)
    return parser


@contextmanager
def _output(path):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh
    else:
        yield sys.stdout


def _glue_negative_values(argv):
    # argparse takes "-2..4" for an option, so bind it to its flag explicitly
    out = []
    it = iter(argv)
    for tok in it:
        if tok in ("--d-range", "--d", "--slopes"):
            nxt = next(it, None)
            if nxt is not None and nxt.startswith("-"):
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = _glue_negative_values(sys.argv[1:] if argv is None else list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        with _output(args.out) as out:
            return COMMANDS[args.command](args, out)
    except (UsageError, ConfigurationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (WindowExhausted, InvariantViolation, NotReducedOrder, UnsupportedOperation, AssertionError) as exc:
        print(f"failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
