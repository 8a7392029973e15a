"""Domino tilings of Aztec diamonds and the objects in bijection with them."""

from __future__ import annotations

from .asm import Asm, AsmPair, asm_pair_from_tiling, compatible, enumerate_asm, tiling_from_asm_pair
from .enumeration import ad_poly_brute, ad_poly_product, enumerate_diamond
from .height import HeightFunction, heights_from_tiling, rank
from .lattice import Domino, Tiling, canonical_tiling, v_stat, validate_tiling
from .shuffle import decode, encode, sample_uniform, sample_weighted

__version__ = "0.1.0"

__all__ = [
    "Asm",
    "AsmPair",
    "Domino",
    "HeightFunction",
    "Tiling",
    "ad_poly_brute",
    "ad_poly_product",
    "asm_pair_from_tiling",
    "canonical_tiling",
    "compatible",
    "decode",
    "encode",
    "enumerate_asm",
    "enumerate_diamond",
    "heights_from_tiling",
    "rank",
    "sample_uniform",
    "sample_weighted",
    "tiling_from_asm_pair",
    "v_stat",
    "validate_tiling",
]
