"""Reading and writing every on-disk representation, plus conversion between them."""

from __future__ import annotations

import json
from pathlib import Path

from .asm import Asm, AsmError, AsmPair, asm_pair_from_tiling, format_matrix, parse_matrices, tiling_from_asm_pair
from .height import HeightError, HeightFunction, format_heights, heights_from_tiling, parse_heights, tiling_from_heights
from .ice import IceError, IceState, asm_from_ice, format_ice, ice_from_asm, parse_ice
from .lattice import Domino, Tiling, TilingError, validate_tiling
from .monotone import MonotoneTriangle, TriangleError, asm_from_triangle, format_triangle, parse_triangle, triangle_from_asm
from .shuffle import ShuffleError, decode, encode, format_bits, parse_bits

FORMATS = ("tiling-json", "asm-txt", "triangle-txt", "bits-txt", "ice-txt", "heights-txt", "svg", "ascii")

EXTENSIONS = {
    ".json": "tiling-json",
    ".asm": "asm-txt",
    ".tri": "triangle-txt",
    ".bits": "bits-txt",
    ".ice": "ice-txt",
    ".heights": "heights-txt",
    ".svg": "svg",
    ".txt": "ascii",
}


class FormatError(ValueError):
    pass


def tiling_to_json(t: Tiling) -> str:
    ds = [{"a": d.a, "b": d.b, "o": d.orient} for d in sorted(t.dominoes, key=Domino.sort_key)]
    return json.dumps({"order": t.order, "dominoes": ds}, separators=(",", ":")) + "\n"


def tiling_from_json(text: str) -> Tiling:
    try:
        data = json.loads(text)
        n = int(data["order"])
        ds = [Domino(int(d["a"]), int(d["b"]), str(d["o"])) for d in data["dominoes"]]
    except (ValueError, KeyError, TypeError) as exc:
        raise FormatError(f"not a tiling JSON document: {exc}") from exc
    return validate_tiling(n, ds)


def guess_format(path: str | Path) -> str:
    fmt = EXTENSIONS.get(Path(path).suffix.lower())
    if fmt is None:
        raise FormatError(f"cannot tell the format of {path}; pass it explicitly")
    return fmt


def load(texts: list[str], fmt: str):
    """Parse one or two input documents into a library object."""
    try:
        if fmt == "asm-txt":
            mats = [m for text in texts for m in parse_matrices(text)]
            if len(mats) == 1:
                return Asm(mats[0])
            if len(mats) == 2:
                A, B = sorted((Asm(m) for m in mats), key=lambda a: a.size)
                return AsmPair(A, B)
            raise FormatError(f"expected one ASM or a pair, found {len(mats)} matrices")
        if len(texts) != 1:
            raise FormatError(f"{fmt} takes a single input")
        text = texts[0]
        if fmt == "tiling-json":
            return tiling_from_json(text)
        if fmt == "bits-txt":
            return decode(parse_bits(text))
        if fmt == "triangle-txt":
            return parse_triangle(text)
        if fmt == "ice-txt":
            return parse_ice(text)
        if fmt == "heights-txt":
            return parse_heights(text)
    except (AsmError, HeightError, IceError, TilingError, TriangleError, ShuffleError) as exc:
        raise FormatError(str(exc)) from exc
    raise FormatError(f"{fmt} cannot be read")


def _as_tiling(obj) -> Tiling:
    if isinstance(obj, Tiling):
        return obj
    if isinstance(obj, AsmPair):
        return tiling_from_asm_pair(obj)
    if isinstance(obj, HeightFunction):
        return tiling_from_heights(obj)
    if isinstance(obj, (Asm, MonotoneTriangle, IceState)):
        size = obj.size
        raise FormatError(
            f"a single ASM of size {size} does not determine a tiling; "
            f"supply its partner ASM of size {size + 1} (or {size - 1}) as a second input"
        )
    raise FormatError(f"cannot turn {type(obj).__name__} into a tiling")


def _as_asm(obj) -> Asm:
    if isinstance(obj, Asm):
        return obj
    if isinstance(obj, MonotoneTriangle):
        return asm_from_triangle(obj)
    if isinstance(obj, IceState):
        return asm_from_ice(obj)
    raise FormatError(f"{type(obj).__name__} does not correspond to a single ASM")


def dump(obj, fmt: str, heights_overlay: bool = False) -> str:
    from .render import render_ascii, render_ice_ascii, render_ice_svg, render_svg

    try:
        if fmt == "tiling-json":
            return tiling_to_json(_as_tiling(obj))
        if fmt == "bits-txt":
            return format_bits(encode(_as_tiling(obj)))
        if fmt == "heights-txt":
            h = obj if isinstance(obj, HeightFunction) else heights_from_tiling(_as_tiling(obj))
            return format_heights(h)
        if fmt == "asm-txt":
            if isinstance(obj, (Tiling, HeightFunction)):
                obj = asm_pair_from_tiling(_as_tiling(obj))
            if isinstance(obj, AsmPair):
                return format_matrix(obj.A.entries) + "\n" + format_matrix(obj.B.entries)
            return format_matrix(_as_asm(obj).entries)
        if fmt == "triangle-txt":
            return format_triangle(triangle_from_asm(_as_asm(obj)))
        if fmt == "ice-txt":
            return format_ice(obj if isinstance(obj, IceState) else ice_from_asm(_as_asm(obj)))
        if fmt == "svg":
            if isinstance(obj, IceState):
                return render_ice_svg(obj)
            return render_svg(_as_tiling(obj), heights=heights_overlay or isinstance(obj, HeightFunction))
        if fmt == "ascii":
            if isinstance(obj, IceState):
                return render_ice_ascii(obj)
            return render_ascii(_as_tiling(obj))
    except (AsmError, HeightError, IceError, TilingError, TriangleError, ShuffleError) as exc:
        raise FormatError(str(exc)) from exc
    raise FormatError(f"unknown output format {fmt!r}")
