"""Erasure-only decoding: syndromes, locator, evaluator, Forney values.

Erased positions are zero-filled, so the syndromes are exactly the
evaluations of E(z) = sum of the erased true symbols c_p z^p. The error
values come from the reversed forms of Omega(z) and z Lambda'(z), evaluated
directly at the locators X_j = alpha^p (no per-locator inversion); only the
Forney denominator is inverted.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .codec import _as_symbols, evaluate_at_roots, poly_eval, root_powers
from .field import OpCounter, inverse, mul

STAGES = ("syndromes", "locator", "evaluator", "forney", "inversion")


class UncorrectableError(ValueError):
    """More erasures than parity symbols."""


class DecodeError(RuntimeError):
    """The corrected word failed its syndrome re-check."""


@dataclass
class DecodeReport:
    code: object
    corrected: np.ndarray
    values: list
    op_counts: dict = dc_field(default_factory=dict)

    @property
    def data(self):
        return self.corrected[self.code.nk:]

    def to_text(self):
        width = -(-self.code.field.m // 4)
        lines = [f"# {self.code}", f"erasures: {len(self.values)}", "values:"]
        lines += [f"  {pos}:{val:0{width}x}" for pos, val in self.values]
        lines.append(f"{'stage':<12}{'muls':>10}{'inversions':>12}")
        for stage in STAGES:
            c = self.op_counts.get(stage, OpCounter())
            lines.append(f"{stage:<12}{c.muls:>10}{c.inversions:>12}")
        return "\n".join(lines) + "\n"


def erasure_pattern(positions, n):
    """Validated, sorted tuple of erased positions."""
    pos = [int(p) for p in positions]
    if len(set(pos)) != len(pos):
        raise ValueError("duplicate erasure positions")
    bad = [p for p in pos if not 0 <= p < n]
    if bad:
        raise ValueError(f"erasure positions out of range [0, {n}): {bad}")
    return tuple(sorted(pos))


def syndromes(code, received, counter=None):
    return evaluate_at_roots(code, received, counter)


def erasure_locators(code, positions):
    """X_j = alpha^(i_j)."""
    positions = erasure_pattern(positions, code.n)
    return root_powers(code)[1, list(positions)].copy()


def lambda_poly(locators, field, counter=None):
    """Coefficients of prod (1 + X_j z); stage j costs j multiplications."""
    locators = np.asarray(locators, dtype=np.int64)
    if len(set(locators.tolist())) != locators.size:
        raise ValueError("duplicate erasure locators")
    lam = np.zeros(locators.size + 1, dtype=np.int64)
    lam[0] = 1
    for j, x in enumerate(locators.tolist(), start=1):
        lam[1:j + 1] ^= mul(lam[:j], x, field, counter)
    return lam


def key_equation(s, lam, nk, field, counter=None):
    """Omega(z) = Lambda(z) S(z) mod z^nk."""
    s = np.asarray(s, dtype=np.int64)[:nk]
    lam = np.asarray(lam, dtype=np.int64)
    omega = np.zeros(nk, dtype=np.int64)
    # only products landing below z^nk are formed
    for i, li in enumerate(lam[:nk].tolist()):
        omega[i:] ^= mul(s[:nk - i], li, field, counter)
    return omega


def odd_part(lam):
    """z Lambda'(z) in characteristic 2: the odd-degree terms of Lambda."""
    out = np.array(lam, dtype=np.int64)
    out[0::2] = 0
    return out


def _reversed(coeffs, nk):
    padded = np.zeros(nk + 1, dtype=np.int64)
    padded[:len(coeffs)] = coeffs
    return padded[::-1]


def forney_values(omega, lam, locators, nk, field, counter=None, inv_counter=None):
    """Y_j = N(X_j) / D(X_j), N and D the degree-nk reversals of Omega and z Lambda'."""
    locators = np.asarray(locators, dtype=np.int64)
    e = locators.size
    if e == 0:
        return np.zeros(0, dtype=np.int64)
    num = _reversed(omega, nk)
    den = _reversed(odd_part(lam), nk)
    # Horner over both polynomials at once: nk multiplications per evaluation
    xs = np.concatenate((locators, locators))
    acc = np.concatenate((np.full(e, num[-1]), np.full(e, den[-1])))
    for i in range(nk - 1, -1, -1):
        acc = mul(acc, xs, field, counter)
        acc[:e] ^= num[i]
        acc[e:] ^= den[i]
    n_val, d_val = acc[:e], acc[e:]
    if not d_val.all():
        raise DecodeError("zero Forney denominator: duplicate or invalid locator")
    return mul(n_val, inverse(d_val, field, inv_counter), field, counter)


def decode(code, received, positions, check_locators=False):
    """Recover the erased symbols of ``received``.

    Symbols at erased positions are ignored. Raises UncorrectableError for
    more than n-k erasures and DecodeError if the result is not a codeword.
    """
    field, nk = code.field, code.nk
    pattern = erasure_pattern(positions, code.n)
    if len(pattern) > nk:
        raise UncorrectableError(
            f"uncorrectable: {len(pattern)} erasures exceed n-k = {nk}")
    word = _as_symbols(received, code.n, field, "received word").copy()
    idx = list(pattern)
    word[idx] = 0

    counts = {stage: OpCounter() for stage in STAGES}
    s = syndromes(code, word, counts["syndromes"])
    values = np.zeros(0, dtype=np.int64)
    if pattern:
        x = erasure_locators(code, pattern)
        lam = lambda_poly(x, field, counts["locator"])
        if check_locators:
            _check_locator_roots(lam, x, field)
        omega = key_equation(s, lam, nk, field, counts["evaluator"])
        values = forney_values(omega, lam, x, nk, field,
                               counts["forney"], counts["inversion"])
        word[idx] = values

    if syndromes(code, word).any():
        raise DecodeError("corrected word fails the syndrome check")
    return DecodeReport(code, word, list(zip(idx, values.tolist())), counts)


def _check_locator_roots(lam, locators, field):
    for x in locators.tolist():
        if poly_eval(lam, inverse(x, field), field) != 0:
            raise DecodeError(f"locator polynomial does not vanish at 1/{x:#x}")
