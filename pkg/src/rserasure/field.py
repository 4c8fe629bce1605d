"""GF(2^m) arithmetic in polynomial basis, 2 <= m <= 32.

Field elements are plain ints (or int64 numpy arrays): bit i is the
coefficient of x^i. Addition is XOR.

Three multipliers are provided:

* ``mul_ref``    -- shift-and-reduce carry-less product. The oracle.
* ``mul_matrix`` -- builds the bit matrix Z(a) column by column from the
  Q-matrix and forms C = Z(a) B. Pure Python, one product at a time.
* ``mul``        -- the compiled production multiplier used by the codec.
  It evaluates the same Z(a) B sum with the columns regrouped: the
  unreduced product bits below x^m, plus one Q row per set bit above.

``mul`` and ``inverse`` accept an optional :class:`OpCounter` so callers can
count field multiplications per pipeline stage.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import _kernels

MIN_DEGREE = 2
MAX_DEGREE = 32
PRIMITIVITY_LIMIT = 24

#: P(x) = 1 + x + x^3 + x^31 + x^32
POLY_32 = (1 << 32) | (1 << 31) | (1 << 3) | (1 << 1) | 1

PRESETS = {
    "gf4": (4, 0b10011),
    "gf8": (8, 0x11D),
    "gf32": (32, POLY_32),
}


@dataclass
class OpCounter:
    """Multiplication and inversion tally for one pipeline stage."""

    muls: int = 0
    inversions: int = 0


@dataclass(frozen=True)
class FieldSpec:
    """A GF(2^m) instance: degree, reduction polynomial and its Q-matrix.

    ``q_rows[i]`` packs row i of the Q-matrix as an int, bit j = q_{i,j}:
    the coefficients of x^(m+i) mod P(x).
    """

    m: int
    poly_mask: int
    q_rows: tuple
    _fold: np.ndarray = dc_field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_fold", _kernels.build_fold_table(self.q_rows, self.m))

    @property
    def order(self):
        return 1 << self.m

    @property
    def mask(self):
        return (1 << self.m) - 1

    @property
    def q_matrix(self):
        """Q-matrix as an (m-1) x m array of bits."""
        return np.array([[(row >> j) & 1 for j in range(self.m)] for row in self.q_rows],
                        dtype=np.uint8)

    def __str__(self):
        return f"GF(2^{self.m}) mod {format_poly(self.poly_mask)}"


@dataclass(frozen=True)
class ZMatrix:
    """m x m bit matrix Z(a) with C = Z(a) B over GF(2)."""

    entries: np.ndarray

    def apply(self, b):
        bits = np.array([(b >> j) & 1 for j in range(self.entries.shape[1])], dtype=np.uint8)
        out = (self.entries.astype(np.int64) @ bits) & 1
        return int(sum(int(c) << i for i, c in enumerate(out)))


@dataclass(frozen=True)
class MulCostReport:
    xor_term_count: int
    depth_estimate: int
    terms_per_bit: tuple


def make_field(m, poly_mask):
    """Build a FieldSpec for GF(2^m) reduced by ``poly_mask``.

    ``poly_mask`` may be an int or any string accepted by :func:`parse_poly`.
    """
    if isinstance(poly_mask, str):
        poly_mask = parse_poly(poly_mask)
    if not MIN_DEGREE <= m <= MAX_DEGREE:
        raise ValueError(f"degree m={m} out of range [{MIN_DEGREE}, {MAX_DEGREE}]")
    if poly_mask >> (m + 1) or not (poly_mask >> m) & 1:
        raise ValueError(f"polynomial {poly_mask:#x} does not have degree {m}")
    if not poly_mask & 1:
        raise ValueError(f"polynomial {poly_mask:#x} has no constant term")

    low = poly_mask & ((1 << m) - 1)   # x^m == low (mod P)
    rows = []
    row = low
    for _ in range(m - 1):
        rows.append(row)
        row <<= 1
        if row >> m:
            row = (row & ((1 << m) - 1)) ^ low
    return FieldSpec(m, poly_mask, tuple(rows))


def field_preset(name):
    m, poly = PRESETS[name]
    return make_field(m, poly)


def parse_poly(text):
    """Parse "0x18000000B", "[32,31,3,1,0]" or a plain integer string."""
    text = text.strip()
    if text.startswith("["):
        if not re.fullmatch(r"\[\s*\d+(\s*,\s*\d+)*\s*\]", text):
            raise ValueError(f"malformed exponent list: {text!r}")
        exps = [int(e) for e in text[1:-1].split(",")]
        if len(set(exps)) != len(exps):
            raise ValueError(f"repeated exponent in {text!r}")
        return sum(1 << e for e in exps)
    try:
        return int(text, 0)
    except ValueError:
        raise ValueError(f"cannot parse polynomial {text!r}") from None


def format_poly(mask):
    """Exponent-list notation, highest degree first."""
    exps = [i for i in range(mask.bit_length() - 1, -1, -1) if (mask >> i) & 1]
    return "[" + ",".join(map(str, exps)) + "]"


def check_element(a, field):
    if not 0 <= a < field.order:
        raise ValueError(f"{a:#x} is not an element of GF(2^{field.m})")


def add(a, b):
    return a ^ b


def mul_ref(a, b, field):
    """Carry-less product of a and b reduced modulo P(x)."""
    check_element(a, field)
    check_element(b, field)
    p = 0
    while b:
        if b & 1:
            p ^= a
        b >>= 1
        a <<= 1
    for deg in range(2 * field.m - 2, field.m - 1, -1):
        if (p >> deg) & 1:
            p ^= field.poly_mask << (deg - field.m)
    return p


def _z_columns(a, field):
    # column j of Z(a) as an int: f_{i,j}(A) for i = 0..m-1
    m, q = field.m, field.q_rows
    cols = [a]
    for j in range(1, m):
        col = (a << j) & field.mask          # u[i-j] a_{i-j}
        for t in range(j):
            if (a >> (m - 1 - t)) & 1:
                col ^= q[j - 1 - t]
        cols.append(col)
    return cols


def build_z_matrix(a, field):
    check_element(a, field)
    cols = _z_columns(a, field)
    m = field.m
    entries = np.array([[(cols[j] >> i) & 1 for j in range(m)] for i in range(m)], dtype=np.uint8)
    return ZMatrix(entries)


def mul_matrix(a, b, field):
    """C = Z(a) B, one product at a time."""
    check_element(a, field)
    check_element(b, field)
    c = 0
    for j, col in enumerate(_z_columns(a, field)):
        if (b >> j) & 1:
            c ^= col
    return c


def _as_int64(x):
    return np.ascontiguousarray(x, dtype=np.int64)


def _is_vector(x):
    return (isinstance(x, np.ndarray) and x.ndim == 1 and x.dtype == np.int64
            and x.flags.c_contiguous)


def mul(a, b, field, counter=None):
    """Production multiplier; ints in, int out, or arrays broadcast elementwise."""
    m, fold = field.m, field._fold
    if np.ndim(a) == 0 and np.ndim(b) == 0:
        if counter is not None:
            counter.muls += 1
        return int(_kernels.mul_scalar(int(a), int(b), m, fold))
    if _is_vector(a) and np.ndim(b) == 0:
        out = _kernels.mul_array_scalar(a, np.int64(b), m, fold, np.empty_like(a))
    elif _is_vector(a) and _is_vector(b) and a.size == b.size:
        out = _kernels.mul_arrays(a, b, m, fold, np.empty_like(a))
    else:
        a, b = np.broadcast_arrays(_as_int64(a), _as_int64(b))
        flat_a, flat_b = _as_int64(a).ravel(), _as_int64(b).ravel()
        out = _kernels.mul_arrays(flat_a, flat_b, m, fold, np.empty_like(flat_a)).reshape(a.shape)
    if counter is not None:
        counter.muls += out.size
    return out


def inverse(a, field, counter=None):
    """beta^(2^m - 2) by repeated square-and-multiply: 2m-3 multiplications each."""
    scalar = np.ndim(a) == 0
    arr = _as_int64(a).ravel()
    if np.any(arr == 0):
        raise ZeroDivisionError("zero has no inverse")
    out = np.empty_like(arr)
    _kernels.inv_arrays(arr, field.m, field._fold, out)
    if counter is not None:
        counter.inversions += arr.size
        counter.muls += arr.size * (2 * field.m - 3)
    return int(out[0]) if scalar else out.reshape(np.shape(a))


def power(a, exponent, field):
    if exponent < 0:
        raise ValueError("negative exponent")
    result = 1
    base = a
    while exponent:
        if exponent & 1:
            result = mul(result, base, field)
        base = mul(base, base, field)
        exponent >>= 1
    return result


def _prime_factors(n):
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        factors.append(n)
    return factors


def is_primitive(field, limit=PRIMITIVITY_LIMIT):
    """True iff x has multiplicative order 2^m - 1 modulo P(x).

    Fields above ``limit`` are not checked and return None (trusted fixture).
    The order is tested against every maximal proper divisor of 2^m - 1,
    which also rules out reducible P(x).
    """
    if field.m > limit:
        return None
    group = field.order - 1
    if power(2, group, field) != 1:
        return False
    return all(power(2, group // q, field) != 1 for q in _prime_factors(group))


def xor_cost_estimate(field):
    """Count the AND terms feeding each output bit of C = Z(a) B.

    Each entry f_{i,j} is expanded to its set of a-indices (cancelling
    pairs mod 2); output bit i is the XOR of terms a_r b_j over all of them.
    A bit with t terms needs t-1 two-input XORs and a tree of depth
    ceil(log2 t).
    """
    m, q = field.m, field.q_rows
    per_bit = []
    for i in range(m):
        terms = 0
        for j in range(m):
            idx = set()
            if i >= j:
                idx ^= {i - j}
            for t in range(j):
                if (q[j - 1 - t] >> i) & 1:
                    idx ^= {m - 1 - t}
            terms += len(idx)
        per_bit.append(terms)
    xors = sum(max(t - 1, 0) for t in per_bit)
    depth = math.ceil(math.log2(max(per_bit))) if max(per_bit) > 1 else 0
    return MulCostReport(xors, depth, tuple(per_bit))
