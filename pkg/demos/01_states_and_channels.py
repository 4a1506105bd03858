"""States and channels
=====================

Build a Bell-diagonal state, let one half be observed by an accelerated
detector, then switch on phase-flip noise on both qubits.
"""

import numpy as np

from unruh_discord import (
    BellDiagonalParams, ChannelKind, UnruhParams, bell_diagonal, evolve,
    evolved_phase_flip_analytic, hermitian_eigenvalues, kraus_for, p_of_t,
    unruh_joint_state, validate,
)

np.set_printoptions(precision=4, suppress=True)

# %%
# A Bell-diagonal state is fixed by the three correlation coefficients.
params = BellDiagonalParams(1.0, -0.6, 0.6)
print("Bell-basis weights:", params.bell_eigenvalues())
print(bell_diagonal(params).real)

# %%
# The accelerated observer sees a thermal (Unruh) bath. Its strength enters
# only through q = exp(-omega / T), so T = 0 is the inertial case and T = inf
# gives q = 1.
for t in (0.0, 0.5, 2.0, float("inf")):
    u = UnruhParams(omega=1.0, temperature=t)
    print(f"T = {t:>4}: q = {u.q:.4f}")

rho = unruh_joint_state(params, UnruhParams(1.0, 1.0))
print("\nstate seen by the accelerated observer (T = 1):")
print(rho.real)
print("valid:", validate(rho).ok)

# %%
# Noise strength after a dimensionless time lambda*t.
for lt in (0.0, 0.25, 1.0, 5.0):
    ch = kraus_for(ChannelKind.PHASE_FLIP, p_of_t(lt))
    print(f"lambda t = {lt:<5} p = {p_of_t(lt):.6f}  completeness residual {ch.completeness_residual():.1e}")

# %%
# The Kraus route and the closed form agree.
u = UnruhParams(1.0, 1.0)
numeric = evolve(params, u, ChannelKind.PHASE_FLIP, 0.3)
closed = evolved_phase_flip_analytic(params, u, 0.3)
print("\nmax |Kraus - closed form| =", np.abs(numeric - closed).max())
print("spectrum:", hermitian_eigenvalues(numeric))
