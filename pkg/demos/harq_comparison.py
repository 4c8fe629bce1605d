"""
FEC, ARQ and hybrid-ARQ on a lossy link
=======================================

Each packet carries one symbol of an RS(200,136) codeword and is lost
independently with probability p.
"""

from rserasure import field_preset, make_code
from rserasure.harq import ChannelModel, compare_strategies, summary

code = make_code(field_preset("gf32"), 200, 136)

# FEC alone fails whenever more than 64 packets go missing. Hybrid asks for
# exactly the shortfall, so it rarely fails. Pure ARQ resends every loss.
for p in (0.1, 0.3):
    channel = ChannelModel(p, seed=1)
    results = compare_strategies(code, channel, trials=500, max_rounds=4)
    print(summary(results, code, channel, 4))

# With enough rounds ARQ also delivers, and it never sends more than it must:
# on this model it needs about k / (1 - p) packets per block.
channel = ChannelModel(0.3, seed=1)
results = compare_strategies(code, channel, trials=500, max_rounds=10,
                             strategies=("arq_only", "hybrid"))
print(summary(results, code, channel, 10))
