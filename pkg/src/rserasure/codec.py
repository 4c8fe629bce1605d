"""Systematic RS(n, k) encoding over a FieldSpec.

Polynomials are coefficient sequences in ascending degree. A codeword
stores c_j at index j; parity sits at 0..n-k-1 and the data block at
n-k..n-1. The generator roots are alpha^0 .. alpha^(n-k-1) with alpha = x.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .field import FieldSpec, inverse, mul

ALPHA = 0b10


@dataclass(frozen=True)
class CodeSpec:
    field: FieldSpec
    n: int
    k: int
    m0: int = 0

    @property
    def nk(self):
        return self.n - self.k

    def __str__(self):
        return f"RS({self.n},{self.k}) over {self.field}"


def make_code(field, n, k):
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got n={n}, k={k}")
    if n > field.order - 1:
        raise ValueError(f"n={n} exceeds 2^{field.m} - 1 = {field.order - 1}")
    return CodeSpec(field, n, k)


# -- scalar polynomial helpers ----------------------------------------------

def poly_eval(coeffs, x, field):
    """Horner evaluation at a scalar point."""
    acc = 0
    for c in reversed(list(coeffs)):
        acc = mul(acc, x, field) ^ int(c)
    return acc


def poly_mul(a, b, field):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] ^= mul(int(ai), int(bj), field)
    return out


def poly_divmod(num, den, field):
    """Long division; ``den`` must have a nonzero leading coefficient."""
    num = [int(c) for c in num]
    den = [int(c) for c in den]
    if not den or den[-1] == 0:
        raise ValueError("divisor must have a nonzero leading coefficient")
    lead_inv = inverse(den[-1], field)
    dd = len(den) - 1
    quot = [0] * max(len(num) - dd, 1)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            f = mul(c, lead_inv, field)
            quot[i - dd] = f
            for j, dj in enumerate(den):
                num[i - dd + j] ^= mul(f, dj, field)
    return quot, num[:dd]


# -- cached per-code tables --------------------------------------------------

@lru_cache(maxsize=64)
def _generator(code):
    g = [1]
    root = 1
    for _ in range(code.nk):
        g = poly_mul(g, [root, 1], code.field)   # (z - a^i) == (z + a^i)
        root = mul(root, ALPHA, code.field)
    return tuple(g)


def generator_poly(code):
    """Monic G(z), degree n-k, ascending coefficients."""
    return list(_generator(code))


@lru_cache(maxsize=64)
def _parity_matrix(code):
    # row i = z^(n-k+i) mod G(z)
    field, nk = code.field, code.nk
    g_low = np.array(_generator(code)[:nk], dtype=np.int64)
    rows = np.empty((code.k, nk), dtype=np.int64)
    row = g_low.copy()          # z^(n-k) == G_low (mod G), char 2
    for i in range(code.k):
        rows[i] = row
        top = int(row[-1])
        row = np.concatenate(([0], row[:-1]))
        if top:
            row ^= mul(top, g_low, field)
    rows.setflags(write=False)
    return rows


@lru_cache(maxsize=64)
def root_powers(code):
    """Table of alpha^(i*p): row i in 0..n-k, column p in 0..n-1."""
    field = code.field
    first = np.empty(code.n, dtype=np.int64)
    x = 1
    for p in range(code.n):
        first[p] = x
        x = mul(x, ALPHA, field)
    table = np.empty((code.nk + 1, code.n), dtype=np.int64)
    table[0] = 1
    for i in range(1, code.nk + 1):
        table[i] = mul(table[i - 1], first, field)
    table.setflags(write=False)
    return table


def _as_symbols(values, length, field, what):
    arr = np.asarray(values, dtype=np.int64)
    if arr.ndim != 1 or arr.size != length:
        raise ValueError(f"{what} must have exactly {length} symbols, got shape {arr.shape}")
    if arr.size and (arr.min() < 0 or arr.max() >= field.order):
        raise ValueError(f"{what} has symbols outside GF(2^{field.m})")
    return arr


def evaluate_at_roots(code, word, counter=None):
    """s_i = R(alpha^i) for i = 0..n-k-1."""
    word = _as_symbols(word, code.n, code.field, "word")
    terms = mul(root_powers(code)[:code.nk], word[None, :], code.field, counter)
    return np.bitwise_xor.reduce(terms, axis=1)


def encode(code, data):
    """Systematic codeword: parity (D(z) z^(n-k) mod G(z)) followed by the data."""
    data = _as_symbols(data, code.k, code.field, "data block")
    parity = np.bitwise_xor.reduce(mul(data[:, None], _parity_matrix(code), code.field), axis=0)
    return np.concatenate((parity, data))


def is_codeword(code, word):
    return not evaluate_at_roots(code, word).any()
