"""Compiled GF(2^m) multiply and invert loops.

All values are int64; m <= 32 keeps every carry-less product below 2^63.
The reduction step folds the high half of the product back through the
Q-matrix rows, eight rows at a time via a precomputed table.
"""
import numpy as np
from numba import njit

FOLD_BITS = 8


def build_fold_table(q_rows, m):
    """Group the Q rows in bytes: table[g, v] = XOR of rows 8g+i for bits i of v."""
    groups = max(1, -(-(m - 1) // FOLD_BITS))
    table = np.zeros((groups, 1 << FOLD_BITS), dtype=np.int64)
    for g in range(groups):
        for v in range(1, 1 << FOLD_BITS):
            low = v & -v
            bit = low.bit_length() - 1
            row = FOLD_BITS * g + bit
            table[g, v] = table[g, v ^ low] ^ (q_rows[row] if row < m - 1 else 0)
    return table


@njit(cache=True)
def _mul1(x, y, m, fold):
    p = np.int64(0)
    for j in range(m):
        p ^= (x << j) & -((y >> j) & 1)
    c = p & ((np.int64(1) << m) - 1)
    hi = p >> m
    g = 0
    while hi:
        c ^= fold[g, hi & 255]
        hi >>= 8
        g += 1
    return c


@njit(cache=True)
def mul_scalar(x, y, m, fold):
    return _mul1(np.int64(x), np.int64(y), m, fold)


@njit(cache=True)
def mul_arrays(a, b, m, fold, out):
    for i in range(a.shape[0]):
        out[i] = _mul1(a[i], b[i], m, fold)
    return out


@njit(cache=True)
def mul_array_scalar(a, y, m, fold, out):
    for i in range(a.shape[0]):
        out[i] = _mul1(a[i], y, m, fold)
    return out


@njit(cache=True)
def inv_arrays(a, m, fold, out):
    # beta^(2^m - 2) as (((b^2 b)^2 b)...)^2: m-2 square-multiply steps, then one square
    for i in range(a.shape[0]):
        b = a[i]
        r = b
        for _ in range(m - 2):
            r = _mul1(_mul1(r, r, m, fold), b, m, fold)
        out[i] = _mul1(r, r, m, fold)
    return out
