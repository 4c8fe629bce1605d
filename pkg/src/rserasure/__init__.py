"""Erasure-only Reed-Solomon codec over GF(2^m) with a decoder cycle model."""
from .field import (
    FieldSpec,
    OpCounter,
    add,
    field_preset,
    inverse,
    is_primitive,
    make_field,
    mul,
    mul_matrix,
    mul_ref,
    power,
)
from .codec import CodeSpec, encode, generator_poly, is_codeword, make_code
from .decoder import DecodeError, DecodeReport, UncorrectableError, decode
from .perf import HardwareConfig, cycle_counts, sweep_curves, throughput

__version__ = "0.1.0"
