import numpy as np
import pytest

from rserasure import harq
from rserasure.codec import make_code
from rserasure.field import field_preset
from rserasure.harq import (ChannelModel, SessionConfig, compare_strategies, run_monte_carlo,
                            simulate_block, stats_csv)

from oracles import binomial_tail

RS32 = make_code(field_preset("gf32"), 200, 136)
SMALL = make_code(field_preset("gf8"), 40, 30)


def test_lossless_channel():
    ch = ChannelModel(0.0, 1)
    res = compare_strategies(RS32, ch, 5)
    for st in res.values():
        assert st.delivered == 5 and st.rounds_histogram == {1: 5}
    assert res["arq_only"].total_packets_sent == 5 * 136
    assert res["fec_only"].total_packets_sent == res["hybrid"].total_packets_sent == 5 * 200


def test_hybrid_no_retransmission_when_fec_suffices():
    ch = ChannelModel(0.2, 3)
    cfg = SessionConfig(SMALL, "hybrid", 4)
    seen = 0
    for t in range(200):
        rec = simulate_block(cfg, ch, t)
        if rec.first_round_losses <= SMALL.nk:
            seen += 1
            assert rec.packets_sent == SMALL.n and rec.rounds == 1 and rec.delivered
        else:
            assert rec.rounds > 1
    assert seen > 0


def test_fec_only_predicate():
    ch = ChannelModel(0.25, 4)
    cfg = SessionConfig(SMALL, "fec_only")
    for t in range(300):
        rec = simulate_block(cfg, ch, t)
        assert rec.delivered == (rec.first_round_losses <= SMALL.nk)
        assert rec.packets_sent == SMALL.n


def test_arq_round_cap():
    ch = ChannelModel(0.5, 5)
    for cap in (0, 1, 3):
        st = run_monte_carlo(SessionConfig(SMALL, "arq_only", cap), ch, 100)
        assert max(st.rounds_histogram) <= cap + 1
    assert run_monte_carlo(SessionConfig(SMALL, "arq_only", 0), ch, 100).delivered == 0


def test_determinism():
    ch = ChannelModel(0.3, 77)
    a = compare_strategies(SMALL, ch, 200)
    b = compare_strategies(SMALL, ch, 200)
    assert a == b
    assert stats_csv(a, ch, 4) == stats_csv(b, ch, 4)


def test_single_trial_matches_record():
    ch = ChannelModel(0.3, 8)
    cfg = SessionConfig(RS32, "hybrid", 4)
    rec = simulate_block(cfg, ch, 0)
    st = run_monte_carlo(cfg, ch, 1)
    assert st.blocks == 1 and st.delivered == int(rec.delivered)
    assert st.total_packets_sent == rec.packets_sent
    assert st.rounds_histogram == {rec.rounds: 1}
    assert st.residual_failure_rate == 1 - st.delivered


def test_delivery_requires_correct_payload(monkeypatch):
    real = harq.decode

    def corrupting(code, received, positions):
        rep = real(code, received, positions)
        rep.corrected[-1] ^= 1
        return rep

    monkeypatch.setattr(harq, "decode", corrupting)
    st = run_monte_carlo(SessionConfig(SMALL, "fec_only"), ChannelModel(0.0, 1), 3)
    assert st.delivered == 0


def test_fec_only_low_loss_rs200():
    st = run_monte_carlo(SessionConfig(RS32, "fec_only"), ChannelModel(0.1, 2026), 10_000)
    assert binomial_tail(200, 0.1, 64) < 1e-9
    assert st.residual_failure_rate < 1e-3


def test_hybrid_beats_fec_only_at_p03():
    res = compare_strategies(RS32, ChannelModel(0.3, 11), 400, strategies=("fec_only", "hybrid"))
    assert res["hybrid"].residual_failure_rate < res["fec_only"].residual_failure_rate


def test_channel_validation():
    with pytest.raises(ValueError):
        ChannelModel(1.0)
    with pytest.raises(ValueError):
        SessionConfig(SMALL, "carrier_pigeon")
    with pytest.raises(ValueError):
        SessionConfig(SMALL, "hybrid", -1)
    with pytest.raises(ValueError):
        run_monte_carlo(SessionConfig(SMALL, "hybrid"), ChannelModel(0.1), 0)


def test_trial_streams_independent_of_run_length():
    ch = ChannelModel(0.3, 9)
    cfg = SessionConfig(SMALL, "hybrid")
    first = [simulate_block(cfg, ch, t) for t in range(10)]
    assert first == [simulate_block(cfg, ch, t) for t in range(10)]
    assert ch.rng(3).random() == np.random.default_rng(
        np.random.SeedSequence(9, spawn_key=(3,))).random()
