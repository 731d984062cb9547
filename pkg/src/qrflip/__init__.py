"""Reed-Solomon coding over GF(2^m), byte-mode QR codes, and selective
bit-flip manipulation of their codewords."""

from . import attack, codes, gf, poly, qr, rs
from .gf import Field, gf2, gf16, gf256
from .poly import Poly
from .qr import QrConfig
from .rs import DecodeFailure, RsCodeword, RsParams, rs_decode, rs_encode, rs_params

__version__ = "0.1.0"

__all__ = [
    "DecodeFailure", "Field", "Poly", "QrConfig", "RsCodeword", "RsParams",
    "attack", "codes", "gf", "gf2", "gf16", "gf256", "poly", "qr", "rs",
    "rs_decode", "rs_encode", "rs_params",
]
