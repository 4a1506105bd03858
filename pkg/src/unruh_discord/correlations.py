"""Mutual information, measurement-based classical correlation, discord and concurrence.

Measurements are projective and act on Alice's qubit only. The measurement
direction is ``n = (sin t cos f, sin t sin f, cos t)`` and the projectors are
``(1 +- n.sigma)/2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateOutcome, DomainError
from .numerics import (
    PAULI_I,
    PAULI_Y,
    PAULIS,
    binary_entropy_of_bloch,
    general_eigenvalues,
    von_neumann_entropy,
)
from .states import partial_trace

PROB_FLOOR = 1e-14
GRID_SHAPE = (37, 73)
ANGLE_TOL = 1e-9
INV_PHI = (math.sqrt(5) - 1) / 2


@dataclass(frozen=True)
class MeasurementAngles:
    theta: float
    phi: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.theta) and math.isfinite(self.phi)):
            raise DomainError("measurement angles must be finite")

    @property
    def direction(self) -> np.ndarray:
        st = math.sin(self.theta)
        return np.array([st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta)])

    def canonical(self) -> "MeasurementAngles":
        """Same projector pair with theta in [0, pi/2] and phi in [0, pi).

        ``n -> -n`` only swaps the two outcomes, so it leaves every
        outcome-symmetric quantity unchanged.
        """
        n = self.direction
        if n[2] < 0 or (n[2] == 0 and (n[1] < 0 or (n[1] == 0 and n[0] < 0))):
            n = -n
        theta = math.acos(min(1.0, max(-1.0, n[2])))
        phi = math.atan2(n[1], n[0]) % (2 * math.pi) if math.hypot(n[0], n[1]) > 0 else 0.0
        if abs(theta) < 1e-15:
            phi = 0.0
        return MeasurementAngles(theta, phi)


@dataclass(frozen=True)
class CorrelationRecord:
    lambda_t: float
    mutual_info: float
    classical: float
    discord: float
    concurrence: float
    optimal_angles: MeasurementAngles

    @property
    def theta_opt(self) -> float:
        return self.optimal_angles.theta

    @property
    def phi_opt(self) -> float:
        return self.optimal_angles.phi


def mutual_information(rho) -> float:
    s_a = von_neumann_entropy(partial_trace(rho, "A"))
    s_i = von_neumann_entropy(partial_trace(rho, "I"))
    return s_a + s_i - von_neumann_entropy(rho)


def measurement_projectors(angles: MeasurementAngles) -> tuple[np.ndarray, np.ndarray]:
    """``(Pi_+, Pi_-)`` on Alice's qubit, lifted to the 4x4 space."""
    n_sigma = sum(ni * s for ni, s in zip(angles.direction, PAULIS))
    plus = np.kron((PAULI_I + n_sigma) / 2, PAULI_I)
    minus = np.kron((PAULI_I - n_sigma) / 2, PAULI_I)
    return plus, minus


def conditioned_state(rho, angles: MeasurementAngles, outcome: str) -> tuple[float, np.ndarray]:
    """Probability of `outcome` (``"+"`` or ``"-"``) and the post-measurement state of mode I.

    Raises
    ------
    DegenerateOutcome
        When the outcome probability is below 1e-14.
    """
    plus, minus = measurement_projectors(angles)
    if outcome == "+":
        proj = plus
    elif outcome == "-":
        proj = minus
    else:
        raise DomainError(f"outcome must be '+' or '-', got {outcome!r}")
    post = proj @ np.asarray(rho, dtype=complex) @ proj
    p = float(np.trace(post).real)
    if p < PROB_FLOOR:
        raise DegenerateOutcome(f"outcome {outcome} has probability {p:.3e}")
    return p, partial_trace(post, "I") / p


class MeasurementModel:
    """Conditional entropy of mode I given a measurement on A, for one state.

    The unnormalised post-measurement state of I is
    ``(rho_I +- sum_k n_k M_k) / 2`` with ``M_k = Tr_A[(sigma_k x 1) rho]``, so
    each evaluation reduces to 2x2 closed-form eigenvalues. Works on scalar or
    array angles.
    """

    def __init__(self, rho):
        rho = np.asarray(rho, dtype=complex)
        self.rho_i = partial_trace(rho, "I")
        self.moments = [partial_trace(np.kron(s, PAULI_I) @ rho, "I") for s in PAULIS]

    def conditional_entropy(self, theta, phi):
        theta = np.asarray(theta, dtype=float)
        phi = np.asarray(phi, dtype=float)
        st = np.sin(theta)
        n = (st * np.cos(phi), st * np.sin(phi), np.cos(theta))
        # entries of sum_k n_k M_k, each broadcast over the angle arrays
        nm = [
            [sum(n[k] * self.moments[k][i, j] for k in range(3)) for j in range(2)]
            for i in range(2)
        ]
        total = 0.0
        for sign in (1.0, -1.0):
            a = 0.5 * (self.rho_i[0, 0] + sign * nm[0][0]).real
            d = 0.5 * (self.rho_i[1, 1] + sign * nm[1][1]).real
            b = 0.5 * (self.rho_i[0, 1] + sign * nm[0][1])
            p = a + d
            spread = np.sqrt((a - d) ** 2 + 4 * np.abs(b) ** 2)
            ok = p > PROB_FLOOR
            r = np.where(ok, spread / np.where(ok, p, 1.0), 0.0)
            total = total + np.where(ok, p * binary_entropy_of_bloch(r), 0.0)
        return total if np.ndim(total) else float(total)


def conditional_entropy(rho, angles: MeasurementAngles) -> float:
    """``p_+ S(rho_I|+) + p_- S(rho_I|-)`` in bits."""
    return MeasurementModel(rho).conditional_entropy(angles.theta, angles.phi)


def golden_section_min(f, lo: float, hi: float, tol: float = ANGLE_TOL, max_iter: int = 200):
    """Minimise a unimodal scalar function on ``[lo, hi]``.

    Returns ``(x, f(x))``. The bracket endpoints are also compared, so a
    monotone `f` returns its better endpoint.
    """
    a, b = lo, hi
    x1 = b - INV_PHI * (b - a)
    x2 = a + INV_PHI * (b - a)
    f1, f2 = f(x1), f(x2)
    for _ in range(max_iter):
        if b - a <= tol:
            break
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - INV_PHI * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + INV_PHI * (b - a)
            f2 = f(x2)
    best = min(((x1, f1), (x2, f2), (lo, f(lo)), (hi, f(hi))), key=lambda t: t[1])
    return best


def minimize_conditional_entropy(rho, model: MeasurementModel | None = None):
    """Minimal conditional entropy over all projective measurements on A.

    Strategy: exact evaluation on the candidate set theta, phi in {0, pi/2};
    a coarse 37 x 73 grid over the sphere; then alternating golden-section
    refinement in theta and phi around the best grid point. The candidate
    value is kept unless refinement beats it by more than rounding noise.

    Returns
    -------
    (float, MeasurementAngles)
    """
    model = model or MeasurementModel(rho)
    f = model.conditional_entropy

    candidates = [(0.0, 0.0), (math.pi / 2, 0.0), (math.pi / 2, math.pi / 2)]
    cand_vals = [f(t, p) for t, p in candidates]
    i_best = int(np.argmin(cand_vals))
    best_angles, best_val = candidates[i_best], cand_vals[i_best]

    thetas = np.linspace(0.0, math.pi, GRID_SHAPE[0])
    phis = np.linspace(0.0, 2 * math.pi, GRID_SHAPE[1])
    grid = f(thetas[:, None], phis[None, :])
    it, ip = np.unravel_index(int(np.argmin(grid)), grid.shape)
    theta, phi = float(thetas[it]), float(phis[ip])
    val = float(grid[it, ip])
    h_theta = thetas[1] - thetas[0]
    h_phi = phis[1] - phis[0]
    for _ in range(50):
        prev = val
        theta, val = golden_section_min(
            lambda t: f(t, phi), max(0.0, theta - h_theta), min(math.pi, theta + h_theta))
        phi, val = golden_section_min(lambda p: f(theta, p), phi - h_phi, phi + h_phi)
        if prev - val < 1e-14:
            break

    if val < best_val - 1e-13:
        best_angles, best_val = (theta, phi), val
    return best_val, MeasurementAngles(*best_angles).canonical()


def classical_correlation(rho) -> tuple[float, MeasurementAngles]:
    """``S(rho_I) - min S(I|A)`` and the optimal measurement angles."""
    model = MeasurementModel(rho)
    s_min, angles = minimize_conditional_entropy(rho, model)
    return von_neumann_entropy(model.rho_i) - s_min, angles


def quantum_discord(rho) -> float:
    classical, _ = classical_correlation(rho)
    return mutual_information(rho) - classical


def spin_flip(rho) -> np.ndarray:
    yy = np.kron(PAULI_Y, PAULI_Y)
    return yy @ np.asarray(rho, dtype=complex).conj() @ yy


def concurrence_margin(rho) -> float:
    """``sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)`` before clipping at zero."""
    rho = np.asarray(rho, dtype=complex)
    lam = general_eigenvalues(rho @ spin_flip(rho))
    root = np.sqrt(np.clip(lam, 0.0, None))
    return float(root[0] - root[1:].sum())


def concurrence(rho) -> float:
    return max(0.0, concurrence_margin(rho))


def correlation_record(rho, lambda_t: float) -> CorrelationRecord:
    info = mutual_information(rho)
    classical, angles = classical_correlation(rho)
    return CorrelationRecord(
        lambda_t=float(lambda_t),
        mutual_info=info,
        classical=classical,
        discord=info - classical,
        concurrence=concurrence(rho),
        optimal_angles=angles,
    )
