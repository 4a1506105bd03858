"""Dense linear algebra and entropy primitives for 2x2 and 4x4 states.

All entropies are in bits.
"""

from __future__ import annotations

import numpy as np

from .errors import ComplexSpectrum, DomainError, NoConvergence, NotHermitian

# eigenvalues in [-EPS_PSD, 0) are treated as rounding noise and clamped to 0
EPS_PSD = 1e-10
HERMITIAN_TOL = 1e-12
RECONSTRUCTION_TOL = 1e-10
IMAG_TOL = 1e-9

PAULI_I = np.eye(2, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (PAULI_X, PAULI_Y, PAULI_Z)


def as_matrix(m) -> np.ndarray:
    """Return `m` as a finite, square complex array."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise DomainError("matrix has non-finite entries")
    return a


def hermiticity_residual(m) -> float:
    a = np.asarray(m, dtype=complex)
    return float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0


def hermitian_eigenvalues(m) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, sorted in descending order.

    Parameters
    ----------
    m : array_like
        Square complex matrix, Hermitian to within 1e-12 entrywise.

    Returns
    -------
    numpy.ndarray
        Eigenvalues, largest first.

    Raises
    ------
    NotHermitian
        If ``max |m - m^H| > 1e-12``.
    NoConvergence
        If LAPACK fails or the eigendecomposition does not reconstruct `m`.
    """
    a = as_matrix(m)
    res = hermiticity_residual(a)
    if res > HERMITIAN_TOL:
        raise NotHermitian(f"max |m - m^H| = {res:.3e} exceeds {HERMITIAN_TOL:g}")
    a = 0.5 * (a + a.conj().T)
    try:
        w, v = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    recon = (v * w) @ v.conj().T
    err = float(np.max(np.abs(recon - a)))
    if not np.isfinite(err) or err > RECONSTRUCTION_TOL * max(1.0, float(np.max(np.abs(a)))):
        raise NoConvergence(f"eigendecomposition residual {err:.3e}")
    return w[::-1].copy()


def general_eigenvalues(m) -> np.ndarray:
    """Eigenvalues of a matrix whose spectrum is known to be real.

    Used for products such as rho @ rho_tilde. Returns the real parts sorted
    descending and raises ComplexSpectrum if any imaginary part exceeds 1e-9.
    """
    a = as_matrix(m)
    try:
        w = np.linalg.eigvals(a)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    imag = float(np.max(np.abs(w.imag))) if w.size else 0.0
    if imag > IMAG_TOL:
        raise ComplexSpectrum(f"max |Im(eigenvalue)| = {imag:.3e}")
    return np.sort(w.real)[::-1]


def shannon_term(x: float) -> float:
    """``-x log2 x`` with ``0 log 0 = 0``; tiny negatives are clamped to zero."""
    x = float(x)
    if x < -EPS_PSD or x > 1.0 + 1e-9 or not np.isfinite(x):
        raise DomainError(f"probability {x!r} outside [0, 1]")
    if x <= 0.0:
        return 0.0
    return -x * np.log2(x)


def von_neumann_entropy(rho) -> float:
    """Von Neumann entropy of a density matrix, in bits."""
    return float(sum(shannon_term(lam) for lam in hermitian_eigenvalues(rho)))


def binary_entropy_of_bloch(r):
    """Entropy of a qubit state with Bloch-vector length `r` (vectorised).

    Eigenvalues are ``(1 +- r)/2``. Lengths marginally above 1 from rounding
    are clipped.
    """
    r = np.clip(np.asarray(r, dtype=float), 0.0, 1.0)
    out = np.zeros_like(r)
    for lam in ((1.0 + r) / 2.0, (1.0 - r) / 2.0):
        pos = lam > 0
        out[pos] -= lam[pos] * np.log2(lam[pos])
    return out if out.ndim else float(out)
