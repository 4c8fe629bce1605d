"""
Decoder throughput model
========================

Cycle counts for a decoder with P parallel multipliers at 100 MHz.
"""

from rserasure.perf import HardwareConfig, cycle_counts, reference_points, sweep_curves, to_csv

# Where the cycles go for RS(200,136), 64 erasures, one multiplier.
plan = cycle_counts(200, 136, 64, 32, HardwareConfig(1))
for name in ("n_x", "n_s", "n_lambda", "n_omega", "n_forney", "n_inv"):
    print(f"{name:>9} {getattr(plan, name):6d}")
print(f"{'total':>9} {plan.total:6d}")

# More multipliers: every term except the input pass shrinks by P.
for pt in reference_points():
    print(f"P={pt.hw.parallel_multipliers}: {pt.throughput_mbps:7.2f} Mbps")

# Throughput against erasure budget for a few block sizes.
rows = sweep_curves([1024, 4352, 16384], range(0, 257, 32), 32, HardwareConfig(4))
print(to_csv(rows))
