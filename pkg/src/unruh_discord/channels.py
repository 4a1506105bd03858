"""Flip channels and their local, two-sided operator-sum action."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidState
from .numerics import PAULI_I, PAULI_X, PAULI_Y, PAULI_Z
from .states import BellDiagonalParams, UnruhParams, unruh_joint_state, validate

COMPLETENESS_TOL = 1e-12


class ChannelKind(enum.Enum):
    PHASE_FLIP = "phase"
    BIT_FLIP = "bit"
    PHASE_BIT_FLIP = "phase-bit"

    @property
    def pauli(self) -> np.ndarray:
        return {
            ChannelKind.PHASE_FLIP: PAULI_Z,
            ChannelKind.BIT_FLIP: PAULI_X,
            ChannelKind.PHASE_BIT_FLIP: PAULI_Y,
        }[self]


@dataclass(frozen=True)
class KrausChannel:
    """Single-qubit Kraus operators acting on subsystem ``"A"`` or ``"I"``."""

    operators: tuple[np.ndarray, ...]
    subsystem: str = "A"

    def __post_init__(self):
        if self.subsystem not in ("A", "I"):
            raise DomainError(f"subsystem must be 'A' or 'I', got {self.subsystem!r}")
        res = self.completeness_residual()
        if res > COMPLETENESS_TOL:
            raise DomainError(f"Kraus operators not trace preserving (residual {res:.3e})")

    def completeness_residual(self) -> float:
        total = sum(k.conj().T @ k for k in self.operators)
        return float(np.max(np.abs(total - PAULI_I)))

    def on_subsystem(self, subsystem: str) -> "KrausChannel":
        return KrausChannel(self.operators, subsystem)

    def embedded(self) -> list[np.ndarray]:
        """Operators lifted to the 4x4 (A, I) space."""
        if self.subsystem == "A":
            return [np.kron(k, PAULI_I) for k in self.operators]
        return [np.kron(PAULI_I, k) for k in self.operators]


def kraus_for(kind: ChannelKind, p: float, subsystem: str = "A") -> KrausChannel:
    """``{sqrt(1 - p/2) 1, sqrt(p/2) sigma}`` with sigma = Z, X or Y."""
    kind = ChannelKind(kind)
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"channel strength p={p!r} outside [0, 1]")
    ops = (math.sqrt(1 - p / 2) * PAULI_I, math.sqrt(p / 2) * kind.pauli)
    return KrausChannel(ops, subsystem)


def p_of_t(lambda_t: float) -> float:
    """Flip strength after dimensionless time ``lambda t``: ``1 - exp(-lambda t)``."""
    if lambda_t < 0 or math.isnan(lambda_t):
        raise DomainError(f"lambda_t must be >= 0, got {lambda_t!r}")
    return -math.expm1(-lambda_t)


def apply_two_sided(rho, ch_a: KrausChannel, ch_i: KrausChannel) -> np.ndarray:
    """Apply independent local channels to Alice's qubit and Rindler mode I."""
    ops_a = ch_a.on_subsystem("A").embedded()
    ops_i = ch_i.on_subsystem("I").embedded()
    rho = np.asarray(rho, dtype=complex)
    out = np.zeros((4, 4), dtype=complex)
    for ga in ops_a:
        for gi in ops_i:
            k = ga @ gi
            out += k @ rho @ k.conj().T
    report = validate(out)
    if not report.ok:
        raise InvalidState(f"channel output invalid: {report}")
    return out


def evolve(params: BellDiagonalParams, unruh: UnruhParams, kind: ChannelKind,
           lambda_t: float) -> np.ndarray:
    """Unruh-traced state after both parties' qubits decohere for ``lambda t``."""
    p = p_of_t(lambda_t)
    ch = kraus_for(kind, p)
    return apply_two_sided(unruh_joint_state(params, unruh), ch, ch.on_subsystem("I"))


def phase_flip_coefficients(params: BellDiagonalParams, unruh: UnruhParams,
                            lambda_t: float) -> tuple[float, float, float, float]:
    """Closed-form ``(c0', c1', c2', c3')`` of the phase-flipped Unruh state."""
    q = unruh.q
    decay = math.exp(-2 * lambda_t)
    c1, c2, c3 = params.coefficients
    return (
        -q / (1 + q),
        c1 * decay / math.sqrt(1 + q),
        c2 * decay / math.sqrt(1 + q),
        c3 / (1 + q),
    )


def evolved_phase_flip_analytic(params: BellDiagonalParams, unruh: UnruhParams,
                                lambda_t: float) -> np.ndarray:
    params.check()
    if lambda_t < 0:
        raise DomainError(f"lambda_t must be >= 0, got {lambda_t!r}")
    c0, *c = phase_flip_coefficients(params, unruh, lambda_t)
    rho = np.eye(4, dtype=complex) + c0 * np.kron(PAULI_I, PAULI_Z)
    for ci, s in zip(c, (PAULI_X, PAULI_Y, PAULI_Z)):
        rho = rho + ci * np.kron(s, s)
    rho /= 4
    report = validate(rho)
    if not report.ok:
        raise InvalidState(str(report))
    return rho


def analytic_eigenvalues_phase_flip(params: BellDiagonalParams, unruh: UnruhParams,
                                    lambda_t: float) -> np.ndarray:
    """Closed-form spectrum of the phase-flipped Unruh state, descending."""
    params.check()
    c1, c2, c3 = params.coefficients
    q = unruh.q
    tilt = c3 * (1 - q) / (1 + q)
    decay = math.exp(-4 * lambda_t)
    shift = (q / (1 + q)) ** 2
    root_plus = 2 * math.sqrt((c1 + c2) ** 2 * decay / (q + 1) + shift)
    root_minus = 2 * math.sqrt((c1 - c2) ** 2 * decay / (q + 1) + shift)
    lam = np.array([
        (2 - c3 - tilt - root_plus) / 8,
        (2 - c3 - tilt + root_plus) / 8,
        (2 + c3 + tilt - root_minus) / 8,
        (2 + c3 + tilt + root_minus) / 8,
    ])
    return np.sort(lam)[::-1]
