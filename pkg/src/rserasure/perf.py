"""Cycle-count and throughput model of the time-shared FPGA decoder.

Worst case decode of ``e`` erasures with ``P`` single-cycle multipliers:

    N_x      = n + 2e              (serial, not divided by P)
    N_s      = n (n-k) / P
    N_lambda = e^2 / 2P
    N_omega  = e (n-k) / 2P
    N_F      = (e^2 + (n-k) e) / P
    N_inv    = 2m e / P

Each divided term is rounded up to whole cycles.
"""
from __future__ import annotations

import csv
import io
import logging
import math
from dataclasses import dataclass

log = logging.getLogger(__name__)

CSV_COLUMNS = ("data_bits", "n", "k", "max_erasures", "m", "P", "clock_hz",
               "total_cycles", "throughput_mbps")

# GF(2^32) RS(200,136), e = 64, 100 MHz: measured decode rate per P (Mbps)
REFERENCE_MBPS = {1: 14.7, 2: 29.1, 4: 57.1, 8: 101.0}
REFERENCE_TOLERANCE = {1: 0.02, 2: 0.02, 4: 0.02, 8: 0.10}

# Synthesis results for the same decoder on XC7020. Reference only, not modeled.
REFERENCE_DECODER_RESOURCES = {
    1: {"LUT": 1641, "FF": 188, "RAMB36": 1},
    2: {"LUT": 2282, "FF": 250, "RAMB36": 1},
    4: {"LUT": 3564, "FF": 376, "RAMB36": 1},
    8: {"LUT": 6128, "FF": 628, "RAMB36": 1},
}

# GF(2^32) multiplier synthesis per pentanomial on XC7020. Reference only.
REFERENCE_MULTIPLIER_RESOURCES = {
    "[32,25,15,7,0]": {"LUT": 934, "F7Mux": 58, "F8Mux": None, "Slice": 258},
    "[32,28,27,1,0]": {"LUT": 705, "F7Mux": 8, "F8Mux": None, "Slice": 200},
    "[32,16,7,2,0]": {"LUT": 708, "F7Mux": 5, "F8Mux": None, "Slice": 198},
    "[32,7,6,2,0]": {"LUT": 558, "F7Mux": 11, "F8Mux": 1, "Slice": 151},
    "[32,31,3,1,0]": {"LUT": 541, "F7Mux": None, "F8Mux": None, "Slice": 148},
}


@dataclass(frozen=True)
class HardwareConfig:
    parallel_multipliers: int = 1
    clock_hz: float = 100e6

    def __post_init__(self):
        if self.parallel_multipliers < 1:
            raise ValueError("need at least one multiplier")
        if not self.clock_hz > 0:
            raise ValueError("clock frequency must be positive")


@dataclass(frozen=True)
class CyclePlan:
    n_x: int
    n_s: int
    n_lambda: int
    n_omega: int
    n_forney: int
    n_inv: int

    @property
    def total(self):
        return self.n_x + self.n_s + self.n_lambda + self.n_omega + self.n_forney + self.n_inv


@dataclass(frozen=True)
class ThroughputPoint:
    n: int
    k: int
    erasures: int
    m: int
    hw: HardwareConfig
    cycles: CyclePlan

    @property
    def data_bits(self):
        return self.k * self.m

    @property
    def total_cycles(self):
        return self.cycles.total

    @property
    def throughput_bps(self):
        return self.data_bits * self.hw.clock_hz / self.cycles.total

    @property
    def throughput_mbps(self):
        return self.throughput_bps / 1e6

    def csv_row(self):
        return (self.data_bits, self.n, self.k, self.erasures, self.m,
                self.hw.parallel_multipliers, f"{self.hw.clock_hz:.0f}",
                self.total_cycles, f"{self.throughput_mbps:.4f}")


@dataclass(frozen=True)
class SkippedPoint:
    data_bits: int
    erasures: int
    reason: str


def _ceil_div(a, b):
    return -(-a // b)


def cycle_counts(n, k, e, m, hw=HardwareConfig()):
    if not 0 < k <= n:
        raise ValueError(f"need 0 < k <= n, got n={n}, k={k}")
    if not 0 <= e <= n - k:
        raise ValueError(f"erasure count {e} outside [0, n-k={n - k}]")
    if m < 1:
        raise ValueError("symbol width must be positive")
    p = hw.parallel_multipliers
    nk = n - k
    return CyclePlan(
        n_x=n + 2 * e,
        n_s=_ceil_div(n * nk, p),
        n_lambda=_ceil_div(e * e, 2 * p),
        n_omega=_ceil_div(e * nk, 2 * p),
        n_forney=_ceil_div(e * e + nk * e, p),
        n_inv=_ceil_div(2 * m * e, p),
    )


def throughput(n, k, e, m, hw=HardwareConfig()):
    return ThroughputPoint(n, k, e, m, hw, cycle_counts(n, k, e, m, hw))


def reference_points(parallel=(1, 2, 4, 8), clock_hz=100e6):
    return [throughput(200, 136, 64, 32, HardwareConfig(p, clock_hz)) for p in parallel]


def sweep_curves(data_lengths, max_erasures, m, hw=HardwareConfig()):
    """Worst-case throughput for every (data length, erasure budget) pair.

    A data length of ``bits`` gives k = ceil(bits / m) symbols and n = k + e.
    Pairs that cannot form a code over GF(2^m) come back as SkippedPoint.
    """
    rows = []
    for bits in data_lengths:
        k = _ceil_div(bits, m) if bits > 0 else 0
        for e in max_erasures:
            n = k + e
            if k < 1 or e < 0:
                reason = "empty data block" if k < 1 else "negative erasure count"
            elif n > (1 << m) - 1:
                reason = f"n={n} exceeds 2^{m}-1"
            else:
                rows.append(throughput(n, k, e, m, hw))
                continue
            log.warning("skipping data_bits=%s max_erasures=%s: %s", bits, e, reason)
            rows.append(SkippedPoint(bits, e, reason))
    return rows


def to_csv(rows, resources=False):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        if isinstance(row, SkippedPoint):
            buf.write(f"# skipped data_bits={row.data_bits} max_erasures={row.erasures}: {row.reason}\n")
        else:
            writer.writerow(row.csv_row())
    if resources:
        buf.write("\n# reference synthesis results (XC7020), not modeled\n")
        writer.writerow(("P", "LUT", "FF", "RAMB36", "reference_mbps"))
        for p, res in REFERENCE_DECODER_RESOURCES.items():
            writer.writerow((p, res["LUT"], res["FF"], res["RAMB36"], REFERENCE_MBPS[p]))
    return buf.getvalue()


def within_tolerance(point):
    p = point.hw.parallel_multipliers
    want = REFERENCE_MBPS[p]
    return math.isclose(point.throughput_mbps, want, rel_tol=REFERENCE_TOLERANCE[p])
