"""Command-line interface: ``aztec count|enumerate|sample|convert|verify|render|bench``."""

from __future__ import annotations

import argparse
import sys
import time
import tracemalloc
from fractions import Fraction
from pathlib import Path

from .config import BoundExceeded
from .formats import FORMATS, FormatError, dump, guess_format, load

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BOUND, EXIT_IO, EXIT_FORMAT = 0, 1, 2, 3, 4, 5


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _order(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"order must be an integer, got {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError("order must be nonnegative")
    return n


def _seed(text: str) -> int:
    try:
        s = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be a decimal integer, got {text!r}") from None
    if not 0 <= s < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return s


def _weight(text: str) -> Fraction:
    try:
        w = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"weight must be a rational like 2 or 3/2, got {text!r}") from None
    if w < 0:
        raise argparse.ArgumentTypeError("weight must be nonnegative")
    return w


def _orders(text: str) -> list[int]:
    try:
        out = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"orders must be comma-separated integers, got {text!r}") from None
    if not out or any(n < 1 for n in out):
        raise argparse.ArgumentTypeError("orders must be positive")
    return out


def _write(text: str, output: str | None) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
        return
    try:
        Path(output).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot write {output}: {exc.strerror}", EXIT_IO) from exc


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_IO) from exc


# commands ---------------------------------------------------------------------


def cmd_count(args) -> int:
    from .enumeration import ad_poly_brute, ad_poly_product
    from .poly import Poly

    n = args.order
    if args.brute:
        poly = ad_poly_brute(n)
    else:
        poly = ad_poly_product(n)
    if args.poly == "none":
        out = str(poly(1, 1))
    elif args.poly == "xq":
        out = str(poly)
    else:
        keep = args.poly
        terms: dict = {}
        for (ex, eq), c in poly.terms.items():
            e = ex if keep == "x" else eq
            terms[(e,)] = terms.get((e,), 0) + c
        out = str(Poly((keep,), terms))
    _write(out + "\n", args.output)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    from .asm import enumerate_asm
    from .enumeration import enumerate_diamond
    from .monotone import complete_triangles

    n = args.order
    if args.kind == "tilings":
        objs = enumerate_diamond(n)
        fmt = args.format or "tiling-json"
    elif args.kind == "asm":
        objs = enumerate_asm(n)
        fmt = args.format or "asm-txt"
    else:
        objs = complete_triangles(n)
        fmt = args.format or "triangle-txt"
    sep = "" if fmt == "tiling-json" else "\n"
    chunks = [dump(o, fmt) for o in objs]
    _write(sep.join(chunks), args.output)
    return EXIT_OK


def cmd_sample(args) -> int:
    from .shuffle import sample_uniform, sample_weighted

    if args.weight_x is None or args.weight_x == 1:
        t = sample_uniform(args.order, args.seed)
    else:
        t = sample_weighted(args.order, args.weight_x, args.seed)
    _write(dump(t, args.format, heights_overlay=args.heights), args.output)
    return EXIT_OK


def cmd_convert(args) -> int:
    src = args.source_format or guess_format(args.inputs[0])
    if args.source_format is None and len(args.inputs) > 1:
        others = {guess_format(p) for p in args.inputs[1:]}
        if others != {src}:
            raise FormatError("all inputs must share one format")
    obj = load([_read(p) for p in args.inputs], src)
    _write(dump(obj, args.format), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import run_suite

    failed = 0
    total_start = time.perf_counter()
    for o in run_suite(args.suite, args.max_order):
        status = "PASS" if o.ok else "FAIL"
        print(f"{status}  [{o.check.suite}] {o.check.name} (n <= {o.order}, {o.seconds:.2f}s)")
        if not o.ok:
            failed += 1
            print(f"      counterexample: {o.detail}")
    print(f"{'all checks passed' if not failed else f'{failed} check(s) failed'} in {time.perf_counter() - total_start:.1f}s")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_render(args) -> int:
    src = args.source_format or guess_format(args.input)
    obj = load([_read(args.input)], src)
    _write(dump(obj, args.style, heights_overlay=args.heights), args.output)
    return EXIT_OK


def cmd_bench(args) -> int:
    from .shuffle import sample_uniform

    sample_uniform(2, 0)  # load or compile the kernel outside the timings
    lines = ["order,repetition,seconds,peak_bytes"]
    for n in args.orders:
        for rep in range(args.repetitions):
            tracemalloc.start()
            start = time.perf_counter()
            sample_uniform(n, args.seed + rep)
            elapsed = time.perf_counter() - start
            _, peak = tracemalloc.get_traced_memory()
            tracemalloc.stop()
            lines.append(f"{n},{rep},{elapsed:.4f},{peak}")
    _write("\n".join(lines) + "\n", args.output)
    return EXIT_OK


# parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="aztec", description="Domino tilings of Aztec diamonds and their relatives.")
    sub = p.add_subparsers(dest="command", required=True)

    def order_arg(sp, required=True):
        sp.add_argument("--order", "-n", type=_order, required=required, help="diamond order / matrix size")

    def output_arg(sp):
        sp.add_argument("--output", "-o", help="output file (default: stdout)")

    sp = sub.add_parser("count", help="AD(n) or its generating polynomial")
    order_arg(sp)
    sp.add_argument("--poly", choices=("none", "x", "q", "xq"), default="none",
                    help="print AD(n;x), AD(n;q) or AD(n;x,q) instead of the plain count")
    sp.add_argument("--brute", action="store_true", help="enumerate tilings instead of using the product")
    output_arg(sp)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("enumerate", help="list every tiling, ASM or monotone triangle")
    order_arg(sp)
    sp.add_argument("--kind", choices=("tilings", "asm", "triangles"), default="tilings")
    sp.add_argument("--format", "-f", choices=FORMATS)
    output_arg(sp)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("sample", help="random tiling by domino shuffling")
    order_arg(sp)
    sp.add_argument("--seed", type=_seed, default=0)
    sp.add_argument("--weight-x", type=_weight, help="weight per vertical pair, e.g. 2 or 1/3")
    sp.add_argument("--format", "-f", choices=FORMATS, default="tiling-json")
    sp.add_argument("--heights", action="store_true", help="overlay heights in SVG output")
    output_arg(sp)
    sp.set_defaults(func=cmd_sample)

    sp = sub.add_parser("convert", help="convert between representations")
    sp.add_argument("inputs", nargs="+", help="input file(s); two asm-txt files form a pair")
    sp.add_argument("--from", dest="source_format", choices=FORMATS)
    sp.add_argument("--format", "-f", choices=FORMATS, required=True, help="target format")
    output_arg(sp)
    sp.set_defaults(func=cmd_convert)

    sp = sub.add_parser("verify", help="run identity checks")
    sp.add_argument("--suite", choices=("theorem", "asm", "monotone", "poset", "shuffle", "ice", "all"), default="all")
    sp.add_argument("--max-order", type=_order, default=4)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("render", help="draw a tiling, height function or ice state")
    sp.add_argument("input")
    sp.add_argument("--from", dest="source_format", choices=FORMATS)
    sp.add_argument("--style", default="svg", help="svg or ascii")
    sp.add_argument("--heights", action="store_true", help="overlay heights on a tiling")
    output_arg(sp)
    sp.set_defaults(func=cmd_render)

    sp = sub.add_parser("bench", help="time the sampler")
    sp.add_argument("--orders", type=_orders, default=[100, 500, 1000])
    sp.add_argument("--repetitions", type=int, default=1)
    sp.add_argument("--seed", type=_seed, default=0)
    output_arg(sp)
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "style", "svg") not in ("svg", "ascii"):
        print(f"aztec: unknown render style {args.style!r} (use svg or ascii)", file=sys.stderr)
        return EXIT_FORMAT
    try:
        return args.func(args)
    except BoundExceeded as exc:
        print(f"aztec: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except FormatError as exc:
        print(f"aztec: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except CliError as exc:
        print(f"aztec: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
