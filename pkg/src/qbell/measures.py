"""Entanglement functionals for pure and mixed two-qubit states.

Covers the binary entropy, pure-state concurrence, the exact two-qubit
entanglement of formation (spin-flip construction), the fully entangled
fraction, and the lower bound it implies on the entanglement of formation.
"""

import numpy as np
from scipy.optimize import minimize

__all__ = [
    "MaximizerError",
    "binary_entropy",
    "concurrence_pure",
    "eof_wootters",
    "eof_lower_bound",
    "fully_entangled_fraction",
    "fef_magic_basis",
    "validate_density",
]

# antidiagonal two-qubit spin flip (sigma_y x sigma_y)
_SPIN_FLIP = np.array(
    [
        [0, 0, 0, -1],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [-1, 0, 0, 0],
    ],
    dtype=complex,
)

# orthonormal basis of maximally entangled states whose real linear
# combinations are exactly the maximally entangled states
_MAGIC = np.array(
    [
        [1, 0, 0, 1],
        [-1j, 0, 0, 1j],
        [0, 1, -1, 0],
        [0, -1j, -1j, 0],
    ],
    dtype=complex,
).T / np.sqrt(2.0)

_HERM_TOL = 1e-10
_EIG_FLOOR = -1e-12


class MaximizerError(RuntimeError):
    """Raised when the entangled-fraction maximizer fails to converge.

    Carries the best overlap value found so far in ``best_value``.
    """

    def __init__(self, message, best_value):
        super().__init__(message)
        self.best_value = best_value


def binary_entropy(x):
    """Base-2 binary entropy H(x), with H(0) = H(1) = 0 by continuity."""
    x = float(x)
    if x < 0.0 or x > 1.0:
        raise ValueError(f"probability must lie in [0, 1], got {x}")
    if x == 0.0 or x == 1.0:
        return 0.0
    return -(x * np.log2(x) + (1.0 - x) * np.log2(1.0 - x))


def concurrence_pure(coeffs):
    """Concurrence |<psi|psi~>| of a normalized two-qubit pure state.

    |psi~> is the spin-flipped conjugate state; the entropy of
    entanglement of the same state is H((1 + sqrt(1 - C^2))/2).
    """
    c = np.asarray(coeffs, dtype=complex).reshape(4)
    norm = np.linalg.norm(c)
    if abs(norm - 1.0) > 1e-10:
        raise ValueError(f"state must be normalized, |psi| = {norm}")
    return min(1.0, float(abs(np.conj(c) @ _SPIN_FLIP @ np.conj(c))))


def validate_density(rho, herm_tol=_HERM_TOL):
    """Check a 4x4 density matrix and return it with tiny negative
    eigenvalues clipped to zero."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > herm_tol:
        raise ValueError("density matrix is not Hermitian")
    if abs(np.trace(rho).real - 1.0) > herm_tol:
        raise ValueError(f"density matrix trace is {np.trace(rho).real}, not 1")
    w, v = np.linalg.eigh(rho)
    if w.min() < _EIG_FLOOR - _HERM_TOL:
        raise ValueError(f"density matrix has negative eigenvalue {w.min()}")
    w = np.clip(w, 0.0, None)
    return (v * w) @ v.conj().T


def eof_wootters(rho):
    """Exact entanglement of formation of a two-qubit density matrix, in
    ebits, via the spin-flip concurrence construction.

    The spin-flip spectrum {sqrt of eig(rho rho~)} is evaluated as the
    singular values of A^T S A with A = sqrt(rho), which is the same set
    but without the square-root noise amplification of the direct
    non-Hermitian eigensolve.
    """
    rho = validate_density(rho)
    w, v = np.linalg.eigh(rho)
    root = v * np.sqrt(np.clip(w, 0.0, None))
    lam = np.linalg.svd(root.T @ _SPIN_FLIP @ root, compute_uv=False)
    concurrence = max(0.0, lam[0] - lam[1] - lam[2] - lam[3])
    return binary_entropy(0.5 * (1.0 + np.sqrt(max(0.0, 1.0 - concurrence**2))))


def eof_lower_bound(fraction):
    """Lower bound on the entanglement of formation implied by an
    entangled fraction f: H(1/2 + sqrt(f (1-f))) for f >= 1/2, else 0."""
    f = float(fraction)
    if f < 0.0 or f > 1.0:
        raise ValueError(f"entangled fraction must lie in [0, 1], got {f}")
    if f < 0.5:
        return 0.0
    return binary_entropy(0.5 + np.sqrt(f * (1.0 - f)))


def _max_entangled(u):
    """Maximally entangled state (I x U)|Phi+> for U = exp(-i u.sigma)."""
    theta = np.linalg.norm(u)
    if theta < 1e-300:
        mat = np.eye(2, dtype=complex)
    else:
        n = u / theta
        mat = np.cos(theta) * np.eye(2) - 1j * np.sin(theta) * np.array(
            [[n[2], n[0] - 1j * n[1]], [n[0] + 1j * n[1], -n[2]]]
        )
    # (I x U)|Phi+> in the |00>,|01>,|10>,|11> ordering
    return np.array([mat[0, 0], mat[1, 0], mat[0, 1], mat[1, 1]]) / np.sqrt(2.0)


def fully_entangled_fraction(rho, starts=8, seed=7, tol=1e-12):
    """Maximum overlap of a two-qubit density matrix with any maximally
    entangled state.

    Maximally entangled states are parameterized as (I x U)|Phi+> with U
    in SU(2); the overlap is maximized by multi-start local optimization
    over the three SU(2) parameters with a fixed seed, so repeated calls
    give identical results.
    """
    rho = validate_density(rho)

    def negative_overlap(u):
        e = _max_entangled(u)
        return -float(np.real(np.conj(e) @ rho @ e))

    rng = np.random.default_rng(seed)
    x0s = [np.zeros(3)] + [rng.uniform(-np.pi / 2, np.pi / 2, 3) for _ in range(starts - 1)]
    best = -np.inf
    converged = False
    for x0 in x0s:
        res = minimize(negative_overlap, x0, method="L-BFGS-B",
                       options={"ftol": tol, "gtol": 1e-11, "maxiter": 500})
        if np.isfinite(res.fun):
            best = max(best, -res.fun)
            converged = converged or res.success
    if not converged:
        raise MaximizerError("entangled-fraction maximizer did not converge", best)
    return min(1.0, best)


def fef_magic_basis(rho):
    """Fully entangled fraction from the real part of the density matrix
    in the magic basis (largest eigenvalue).  Closed-form alternative to
    the numerical maximizer, used to cross-check it."""
    rho = validate_density(rho)
    m = _MAGIC.conj().T @ rho @ _MAGIC
    return float(np.linalg.eigvalsh(m.real.astype(float))[-1])
