"""Sudden change under phase flip
================================

For c = (1, -0.6, 0.6) the inertial observer sees frozen discord up to a
critical time, after which the classical correlation freezes instead.
Acceleration moves the critical time later and unfreezes the discord.
"""

import math

import numpy as np

from unruh_discord import (
    BellDiagonalParams, ChannelKind, SweepConfig, UnruhParams,
    closed_form_transition_phase_flip_T0, find_transition, sweep,
)

params = BellDiagonalParams(1.0, -0.6, 0.6)
temperatures = {
    "0": 0.0,
    "1/(2 ln cot(pi/8))": 1 / (2 * math.log(1 / math.tan(math.pi / 8))),
    "1/(2 ln cot(pi/6))": 1 / (2 * math.log(1 / math.tan(math.pi / 6))),
    "inf": float("inf"),
}

# %%
print("inertial closed form:", closed_form_transition_phase_flip_T0(params))
for label, t in temperatures.items():
    rep = find_transition(params, UnruhParams(1.0, t), ChannelKind.PHASE_FLIP)
    print(f"T = {label:>20}: lambda t = {rep.transition_time:.5f}")

# %%
# Sweep at T = 0 and at the first finite temperature.
grid = np.linspace(0, 0.6, 13)
for label in ("0", "1/(2 ln cot(pi/8))"):
    cfg = SweepConfig(params, UnruhParams(1.0, temperatures[label]), ChannelKind.PHASE_FLIP, grid)
    print(f"\nT = {label}")
    print(" lambda t      C         D")
    for r in sweep(cfg):
        print(f"  {r.lambda_t:5.2f}   {r.classical:8.5f}  {r.discord:8.5f}")
