"""Bell-diagonal states and their Unruh-traced Alice / Rindler-I form.

Basis ordering is ``|n_A n_I>`` with Alice's qubit as the slow index:
``|00>, |01>, |10>, |11>``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, InvalidState
from .numerics import (
    EPS_PSD,
    PAULIS,
    as_matrix,
    hermiticity_residual,
)

INFINITE = math.inf
TRACE_TOL = 1e-12


@dataclass(frozen=True)
class BellDiagonalParams:
    """Correlation coefficients ``(c1, c2, c3)`` of ``1/4 (1 + sum c_i s_i x s_i)``."""

    c1: float
    c2: float
    c3: float

    @property
    def coefficients(self) -> tuple[float, float, float]:
        return (self.c1, self.c2, self.c3)

    def bell_eigenvalues(self) -> np.ndarray:
        c1, c2, c3 = self.coefficients
        return np.array([
            (1 - c1 - c2 - c3) / 4,
            (1 - c1 + c2 + c3) / 4,
            (1 + c1 - c2 + c3) / 4,
            (1 + c1 + c2 - c3) / 4,
        ])

    def violations(self) -> list[str]:
        """Human-readable list of broken constraints (empty when valid)."""
        out = []
        for name, c in zip(("c1", "c2", "c3"), self.coefficients):
            if not math.isfinite(c) or abs(c) > 1:
                out.append(f"{name}={c!r} outside [-1, 1]")
        lam = self.bell_eigenvalues()
        if np.all(np.isfinite(lam)) and lam.min() < -EPS_PSD:
            out.append(
                f"positivity violated: smallest Bell-diagonal eigenvalue "
                f"{lam.min():.6g} (residual {-lam.min():.6g})"
            )
        return out

    def check(self) -> None:
        bad = self.violations()
        if bad:
            raise InvalidState("; ".join(bad))


@dataclass(frozen=True)
class UnruhParams:
    """Mode frequency and Unruh temperature (natural units).

    ``temperature`` may be ``INFINITE`` (``math.inf``), which maps to q = 1
    exactly.
    """

    omega: float = 1.0
    temperature: float = 0.0
    q: float = field(init=False, repr=False)

    def __post_init__(self):
        if not (self.omega > 0 and math.isfinite(self.omega)):
            raise DomainError(f"omega must be positive and finite, got {self.omega!r}")
        t = self.temperature
        if math.isnan(t) or t < 0:
            raise DomainError(f"temperature must be >= 0, got {t!r}")
        if t == 0:
            q = 0.0
        elif math.isinf(t):
            q = 1.0
        else:
            q = math.exp(-self.omega / t)
        object.__setattr__(self, "q", q)

    @classmethod
    def from_acceleration(cls, acceleration: float, omega: float = 1.0) -> "UnruhParams":
        return cls(omega=omega, temperature=unruh_temperature(acceleration))

    @classmethod
    def from_q(cls, q: float, omega: float = 1.0) -> "UnruhParams":
        """Inverse of the ``q = exp(-omega/T)`` map."""
        if not 0.0 <= q <= 1.0:
            raise DomainError(f"q must lie in [0, 1], got {q!r}")
        if q == 0.0:
            return cls(omega, 0.0)
        if q == 1.0:
            return cls(omega, INFINITE)
        return cls(omega, -omega / math.log(q))

    @property
    def acceleration(self) -> float:
        return 2 * math.pi * self.temperature


def unruh_temperature(acceleration: float) -> float:
    """T = a / 2 pi."""
    if acceleration < 0:
        raise DomainError("acceleration must be non-negative")
    return acceleration / (2 * math.pi)


def bell_diagonal(params: BellDiagonalParams) -> np.ndarray:
    params.check()
    rho = np.eye(4, dtype=complex)
    for c, s in zip(params.coefficients, PAULIS):
        rho = rho + c * np.kron(s, s)
    return rho / 4


def unruh_joint_state(params: BellDiagonalParams, unruh: UnruhParams) -> np.ndarray:
    """Alice (inertial) / Rindler region I state after tracing out region II.

    Bob's Minkowski vacuum is ``cos r |00> + sin r |11>`` in (I, II) modes with
    ``cos^2 r = 1/(1+q)``; his excited state stays in region I.
    """
    params.check()
    c1, c2, c3 = params.coefficients
    q = unruh.q
    cos2 = 1.0 / (1.0 + q)
    sin2 = q / (1.0 + q)
    cos_r = math.sqrt(cos2)
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = (1 + c3) / 4 * cos2
    rho[1, 1] = ((1 - c3) + (1 + c3) * sin2) / 4
    rho[2, 2] = (1 - c3) / 4 * cos2
    rho[3, 3] = ((1 + c3) + (1 - c3) * sin2) / 4
    rho[0, 3] = rho[3, 0] = (c1 - c2) / 4 * cos_r
    rho[1, 2] = rho[2, 1] = (c1 + c2) / 4 * cos_r
    report = validate(rho)
    if not report.ok:
        raise InvalidState(str(report))
    return rho


@dataclass(frozen=True)
class Violation:
    check: str
    residual: float
    bound: float

    def __str__(self):
        return f"{self.check}: residual {self.residual:.3g} exceeds {self.bound:g}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def __str__(self):
        return "ok" if self.ok else "; ".join(map(str, self.violations))


def validate(rho) -> ValidationReport:
    """Check Hermiticity, unit trace and positivity of a density matrix."""
    try:
        a = as_matrix(rho)
    except DomainError as exc:
        return ValidationReport((Violation(f"shape/finiteness ({exc})", math.inf, 0.0),))
    found = []
    herm = hermiticity_residual(a)
    if herm > 1e-12:
        found.append(Violation("hermiticity", herm, 1e-12))
    tr = abs(np.trace(a) - 1.0)
    if tr > TRACE_TOL:
        found.append(Violation("trace", float(tr), TRACE_TOL))
    lam_min = float(np.linalg.eigvalsh(0.5 * (a + a.conj().T)).min())
    if lam_min < -EPS_PSD:
        found.append(Violation("positivity", -lam_min, EPS_PSD))
    return ValidationReport(tuple(found))


def partial_trace(rho, keep: str) -> np.ndarray:
    """Reduced 2x2 state of ``"A"`` or ``"I"``."""
    r = np.asarray(rho, dtype=complex).reshape(2, 2, 2, 2)
    if keep == "A":
        return np.einsum("ijkj->ik", r)
    if keep == "I":
        return np.einsum("jijk->ik", r)
    raise DomainError(f"keep must be 'A' or 'I', got {keep!r}")


def random_bell_params(rng: np.random.Generator) -> BellDiagonalParams:
    """Uniform sample from the tetrahedron of valid ``(c1, c2, c3)``."""
    while True:
        c = rng.uniform(-1, 1, size=3)
        p = BellDiagonalParams(*map(float, c))
        if p.bell_eigenvalues().min() >= 0:
            return p


__all__ = [
    "INFINITE",
    "BellDiagonalParams",
    "UnruhParams",
    "ValidationReport",
    "Violation",
    "bell_diagonal",
    "partial_trace",
    "random_bell_params",
    "unruh_joint_state",
    "unruh_temperature",
    "validate",
]
