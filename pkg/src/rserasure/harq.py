"""Monte-Carlo comparison of FEC-only, ARQ-only and hybrid-ARQ delivery.

One block is one RS codeword sent as one symbol per packet over an i.i.d.
packet-erasure channel. Feedback is lossless and instantaneous.

Strategies
----------
fec_only
    Send all n packets once; the block is delivered iff at most n-k are lost.
arq_only
    Send the k data packets uncoded, then resend exactly the lost ones each
    round, for at most ``max_rounds`` retransmission rounds.
hybrid
    Send all n packets; while more than n-k are missing, resend just enough
    of the missing ones (lowest positions first) to bring the count back to
    n-k, for at most ``max_rounds`` rounds. Decode once within budget.

Trial ``i`` draws from ``SeedSequence(seed, spawn_key=(i,))``, so every
trial is reproducible on its own and strategies see identical data blocks.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field as dc_field

import numpy as np

from .codec import encode
from .decoder import decode

STRATEGIES = ("fec_only", "arq_only", "hybrid")


@dataclass(frozen=True)
class ChannelModel:
    loss_probability: float
    seed: int = 0

    def __post_init__(self):
        if not 0 <= self.loss_probability < 1:
            raise ValueError("loss probability must lie in [0, 1)")

    def rng(self, trial):
        return np.random.default_rng(np.random.SeedSequence(self.seed, spawn_key=(trial,)))


@dataclass(frozen=True)
class SessionConfig:
    code: object
    strategy: str
    max_rounds: int = 4

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if self.max_rounds < 0:
            raise ValueError("max_rounds must be >= 0")


@dataclass(frozen=True)
class BlockRecord:
    delivered: bool
    packets_sent: int
    rounds: int            # transmission rounds used, first send included
    first_round_losses: int


@dataclass
class SessionStats:
    blocks: int = 0
    delivered: int = 0
    total_packets_sent: int = 0
    rounds_histogram: dict = dc_field(default_factory=dict)

    @property
    def residual_failure_rate(self):
        return 1 - self.delivered / self.blocks if self.blocks else 0.0

    @property
    def delivery_rate(self):
        return self.delivered / self.blocks if self.blocks else 0.0

    @property
    def packets_per_block(self):
        return self.total_packets_sent / self.blocks if self.blocks else 0.0

    def add(self, record):
        self.blocks += 1
        self.delivered += record.delivered
        self.total_packets_sent += record.packets_sent
        self.rounds_histogram[record.rounds] = self.rounds_histogram.get(record.rounds, 0) + 1


def _lost(rng, count, p):
    return rng.random(count) < p


def simulate_block(config, channel, trial=0):
    code = config.code
    n, k, nk = code.n, code.k, code.nk
    p = channel.loss_probability
    rng = channel.rng(trial)
    data = rng.integers(0, code.field.order, size=k, dtype=np.int64)

    if config.strategy == "arq_only":
        missing = np.flatnonzero(_lost(rng, k, p))
        first = missing.size
        sent, rounds = k, 1
        while missing.size and rounds <= config.max_rounds:
            sent += missing.size
            rounds += 1
            missing = missing[_lost(rng, missing.size, p)]
        # uncoded: what arrived is the data itself
        return BlockRecord(missing.size == 0, sent, rounds, first)

    word = encode(code, data)
    missing = np.flatnonzero(_lost(rng, n, p))
    first = missing.size
    sent, rounds = n, 1
    if config.strategy == "hybrid":
        while missing.size > nk and rounds <= config.max_rounds:
            resend = missing[:missing.size - nk]
            sent += resend.size
            rounds += 1
            still = resend[_lost(rng, resend.size, p)]
            missing = np.union1d(still, missing[resend.size:])
    if missing.size > nk:
        return BlockRecord(False, sent, rounds, first)

    received = word.copy()
    received[missing] = 0
    report = decode(code, received, missing)
    ok = bool(np.array_equal(report.data, data))
    return BlockRecord(ok, sent, rounds, first)


def run_monte_carlo(config, channel, trials):
    if trials < 1:
        raise ValueError("need at least one trial")
    stats = SessionStats()
    for t in range(trials):
        stats.add(simulate_block(config, channel, t))
    stats.rounds_histogram = dict(sorted(stats.rounds_histogram.items()))
    return stats


def compare_strategies(code, channel, trials, max_rounds=4, strategies=STRATEGIES):
    return {s: run_monte_carlo(SessionConfig(code, s, max_rounds), channel, trials)
            for s in strategies}


def stats_csv(results, channel, max_rounds):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("strategy", "loss_probability", "seed", "max_rounds", "blocks", "delivered",
                "residual_failure_rate", "total_packets_sent", "packets_per_block",
                "rounds_histogram"))
    for name, st in results.items():
        hist = ";".join(f"{r}:{c}" for r, c in st.rounds_histogram.items())
        w.writerow((name, channel.loss_probability, channel.seed, max_rounds, st.blocks,
                    st.delivered, f"{st.residual_failure_rate:.6f}", st.total_packets_sent,
                    f"{st.packets_per_block:.4f}", hist))
    return buf.getvalue()


def summary(results, code, channel, max_rounds):
    lines = [f"{code}, p={channel.loss_probability}, seed={channel.seed}, max_rounds={max_rounds}"]
    lines.append(f"{'strategy':<10}{'delivered':>12}{'failure':>11}{'pkts/block':>12}")
    for name, st in results.items():
        lines.append(f"{name:<10}{st.delivered:>6}/{st.blocks:<5}"
                     f"{st.residual_failure_rate:>11.4%}{st.packets_per_block:>12.2f}")
    return "\n".join(lines) + "\n"
