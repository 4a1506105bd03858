"""Mutual information, classical correlation and discord
======================================================

The classical part is the best information one can extract about the
accelerated mode by a projective measurement on the other qubit. The rest of
the mutual information is discord.
"""

import math

import numpy as np

from unruh_discord import (
    BellDiagonalParams, ChannelKind, MeasurementAngles, UnruhParams,
    conditional_entropy, correlation_record, evolve,
)

params = BellDiagonalParams(1.0, -0.6, 0.6)
rho = evolve(params, UnruhParams(1.0, 0.0), ChannelKind.PHASE_FLIP, 0.1)

# %%
# Conditional entropy along a few measurement axes. The minimum sits on a
# coordinate axis for these states.
for name, angles in [("z", MeasurementAngles(0.0)),
                     ("x", MeasurementAngles(math.pi / 2, 0.0)),
                     ("y", MeasurementAngles(math.pi / 2, math.pi / 2)),
                     ("tilted", MeasurementAngles(0.7, 1.1))]:
    print(f"{name:>7}: S(I|A) = {conditional_entropy(rho, angles):.6f} bits")

# %%
rec = correlation_record(rho, 0.1)
print(f"\nI = {rec.mutual_info:.6f}")
print(f"C = {rec.classical:.6f}  (optimal theta={rec.theta_opt:.4f}, phi={rec.phi_opt:.4f})")
print(f"D = {rec.discord:.6f}")
print(f"concurrence = {rec.concurrence:.6f}")
print("I - C - D =", rec.mutual_info - rec.classical - rec.discord)

# %%
# Acceleration degrades every correlation.
print("\n   T        I         C         D      concurrence")
for t in np.linspace(0, 3, 7):
    r = correlation_record(evolve(params, UnruhParams(1.0, t), ChannelKind.PHASE_FLIP, 0.1), 0.1)
    print(f"{t:5.2f}  {r.mutual_info:8.5f}  {r.classical:8.5f}  {r.discord:8.5f}  {r.concurrence:8.5f}")
