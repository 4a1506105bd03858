"""Entanglement sudden death
===========================

Concurrence reaches zero in finite time, while discord survives.
"""

import math

from unruh_discord import (
    BellDiagonalParams, ChannelKind, UnruhParams, correlation_record, evolve, find_sudden_death,
)
from unruh_discord.dynamics import closed_form_sudden_death_phase_flip

params = BellDiagonalParams(1.0, -0.3, 0.3)
for t in (0.0, 0.5, 1.0, 2.0, math.inf):
    u = UnruhParams(1.0, t)
    rep = find_sudden_death(params, u, ChannelKind.PHASE_FLIP)
    rec = correlation_record(evolve(params, u, ChannelKind.PHASE_FLIP, rep.sudden_death_time),
                             rep.sudden_death_time)
    print(f"T = {t:>4}: t_S = {rep.sudden_death_time:.6f} "
          f"(closed form {closed_form_sudden_death_phase_flip(params, u):.6f}), discord there {rec.discord:.4f}")
