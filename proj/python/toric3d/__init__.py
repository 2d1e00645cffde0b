"""3D toric, solid and welded codes: construction, decoders and threshold sweeps."""

from ._core import (
    CSV_HEADER,
    CodeSpec,
    IoError,
    build_code,
    decode_bitflip,
    decode_erasure_x,
    decode_erasure_z,
    decode_gauss,
    decode_phase,
    decode_welded_x,
    decode_welded_z,
    is_logical_failure,
    simulate,
    syndrome,
)

__all__ = [
    "CSV_HEADER",
    "CodeSpec",
    "IoError",
    "build_code",
    "decode_bitflip",
    "decode_erasure_x",
    "decode_erasure_z",
    "decode_gauss",
    "decode_phase",
    "decode_welded_x",
    "decode_welded_z",
    "is_logical_failure",
    "simulate",
    "syndrome",
]
