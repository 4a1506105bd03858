"""Bit flip and phase-bit flip
=============================

Under bit flip the transition comes earlier as the detector gets hotter.
Under phase-bit flip it does not move at all.
"""

from unruh_discord import BellDiagonalParams, ChannelKind, UnruhParams, find_transition

for q in (0.0, 0.25, 0.5, 0.75, 1.0):
    bit = find_transition(BellDiagonalParams(0.6, -0.6, 1.0), UnruhParams.from_q(q), ChannelKind.BIT_FLIP)
    pbf = find_transition(BellDiagonalParams(1.0, 0.6, -0.6), UnruhParams.from_q(q),
                          ChannelKind.PHASE_BIT_FLIP)
    print(f"q = {q:4.2f}: bit flip {bit.transition_time:.6f}   phase-bit flip {pbf.transition_time:.6f}")
