"""
Recovering lost packets
=======================

RS(200,136) over GF(2^32): 136 data symbols, 64 parity symbols, and any
64 known-position losses can be repaired.
"""

import numpy as np

from rserasure import decode, encode, field_preset, make_code
from rserasure.decoder import UncorrectableError

code = make_code(field_preset("gf32"), 200, 136)
rng = np.random.default_rng(1)

# Parity comes first, data is copied verbatim after it.
data = rng.integers(0, 2**32, code.k)
word = encode(code, data)
print("systematic:", np.array_equal(word[code.nk:], data))

# Lose the maximum number of symbols. Whatever sits in those slots is ignored.
lost = np.sort(rng.choice(code.n, code.nk, replace=False))
received = word.copy()
received[lost] = 0

report = decode(code, received, lost)
print("recovered:", np.array_equal(report.data, data))

# The report lists recovered values and the multiplications each stage spent.
print("\n".join(report.to_text().splitlines()[-7:]))

# One more loss is beyond what the parity can cover.
try:
    decode(code, received, np.arange(code.nk + 1))
except UncorrectableError as exc:
    print("65 erasures:", exc)
