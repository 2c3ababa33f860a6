"""Truncated photon-number-basis verifier.

Brute-force numerics used to cross-check every closed form in the rest
of the package: states are built explicitly in a truncated Fock basis
and reduced spectra, entropies, overlaps, beam-splitter action and
operator traces are computed numerically.  Nothing here calls the
closed-form modules.

Conventions: a pure state of m modes is an ndarray with one axis per
mode, each of length N+1 where N is the truncation; densities are
square 2-D arrays over the flattened kept modes.
"""

import math
import os
from functools import lru_cache

import numpy as np
from scipy.linalg import expm

__all__ = [
    "TruncationError",
    "adequate_truncation",
    "default_truncation",
    "coherent_vector",
    "quasi_bell_fock",
    "beam_splitter",
    "partial_trace",
    "von_neumann_entropy",
    "operator_trace_charfunc",
    "mean_photon",
]

TRUNCATION_ENV = "QBELL_TRUNCATION"


class TruncationError(ValueError):
    """Raised when a truncation cannot represent the requested state."""


def adequate_truncation(alpha):
    """Smallest truncation the adequacy rule allows for amplitude alpha:
    ceil(alpha^2 + 10 sqrt(alpha^2 + 1) + 20).

    Keeps the Poisson tail mass below 1e-12 through alpha = 3, with
    margin for beam-splitter and displacement redistribution.
    """
    a2 = float(alpha) ** 2
    return int(math.ceil(a2 + 10.0 * math.sqrt(a2 + 1.0) + 20.0))


def default_truncation(alpha):
    """Truncation to use when none is given: the adequacy rule, unless
    the QBELL_TRUNCATION environment variable overrides it."""
    env = os.environ.get(TRUNCATION_ENV)
    if env is not None:
        return int(env)
    return adequate_truncation(alpha)


def _check_truncation(alpha, truncation, allow_small):
    needed = adequate_truncation(alpha)
    if truncation < needed and not allow_small:
        raise TruncationError(
            f"truncation {truncation} is below the adequacy rule "
            f"({needed} for amplitude {alpha}); raise it or override explicitly"
        )


def coherent_vector(alpha, truncation=None, allow_small=False):
    """Normalized coherent state |alpha> (alpha real) in the number
    basis: amplitudes proportional to alpha^n / sqrt(n!)."""
    alpha = float(alpha)
    if truncation is None:
        truncation = default_truncation(alpha)
    _check_truncation(alpha, truncation, allow_small)
    n = np.arange(truncation + 1)
    log_fact = np.cumsum(np.concatenate([[0.0], np.log(np.arange(1, truncation + 1))]))
    if alpha != 0.0:
        amps = np.sign(alpha) ** n * np.exp(
            n * np.log(abs(alpha)) - 0.5 * log_fact - 0.5 * alpha**2
        )
    else:
        amps = np.zeros(truncation + 1)
        amps[0] = 1.0
    vec = amps.astype(complex)
    return vec / np.linalg.norm(vec)


_SIGN_PATTERNS = {
    # (relative sign, mode-B amplitudes flipped?) for the two product terms
    1: (+1.0, True),
    2: (-1.0, True),
    3: (+1.0, False),
    4: (-1.0, False),
}


def quasi_bell_fock(state, truncation=None):
    """Two-mode quasi-Bell state built explicitly from coherent vectors.

    Normalized numerically; the squared norm of the unnormalized
    superposition is checked against 2 (1 +/- ka kb) as an internal
    consistency guard.
    """
    alpha, beta = state.alpha, state.beta
    if truncation is None:
        truncation = default_truncation(max(abs(alpha), abs(beta)))
    sign, flip_b = _SIGN_PATTERNS[state.index]
    b_first, b_second = (-beta, beta) if flip_b else (beta, -beta)
    term1 = np.outer(coherent_vector(alpha, truncation), coherent_vector(b_first, truncation))
    term2 = np.outer(coherent_vector(-alpha, truncation), coherent_vector(b_second, truncation))
    raw = term1 + sign * term2
    norm_sq = float(np.vdot(raw, raw).real)
    kk = math.exp(-2.0 * alpha**2) * math.exp(-2.0 * beta**2)
    expected = 2.0 * (1.0 + sign * kk)
    if abs(norm_sq - expected) > 1e-10:
        raise TruncationError(
            f"unnormalized norm^2 {norm_sq} differs from {expected}; "
            "truncation too small for these amplitudes"
        )
    return raw / math.sqrt(norm_sq)


@lru_cache(maxsize=None)
def _splitter_block(theta, sector, low, high):
    """Unitary on the photon-number sector n_first = low..high of total
    photon number ``sector``, from the exponential of the two-mode
    coupling generator theta (a b+ - a+ b)."""
    size = high - low + 1
    gen = np.zeros((size, size))
    for i in range(size - 1):
        n_first = low + i + 1  # coupling between n_first-1 and n_first
        val = theta * math.sqrt(n_first * (sector - n_first + 1))
        gen[i, i + 1] = val
        gen[i + 1, i] = -val
    return expm(gen)


def beam_splitter(vec, eta, check_tail=True, tail_tol=1e-9):
    """Transmissivity-eta beam splitter acting on a two-mode vector.

    Maps |g>|0> to |sqrt(eta) g>|sqrt(1-eta) g> for coherent g.  The
    generator conserves total photon number, so the exponential is
    evaluated sector by sector; sectors carrying no amplitude are passed
    through untouched.  With ``check_tail``, amplitude accumulating on
    the truncation boundary above ``tail_tol`` raises a TruncationError.
    """
    vec = np.asarray(vec, dtype=complex)
    if vec.ndim != 2 or vec.shape[0] != vec.shape[1]:
        raise ValueError("expected a two-mode vector with equal truncations")
    if not 0.0 <= eta <= 1.0:
        raise ValueError(f"transmissivity must lie in [0, 1], got {eta}")
    size = vec.shape[0]
    theta = math.atan2(math.sqrt(1.0 - eta), math.sqrt(eta))
    out = np.array(vec)
    for sector in range(2 * size - 1):
        low = max(0, sector - size + 1)
        high = min(sector, size - 1)
        idx_first = np.arange(low, high + 1)
        idx_second = sector - idx_first
        component = vec[idx_first, idx_second]
        if np.max(np.abs(component)) <= 1e-18:
            continue
        block = _splitter_block(theta, sector, low, high)
        out[idx_first, idx_second] = block @ component
    if check_tail:
        boundary = np.sum(np.abs(out[-1, :]) ** 2) + np.sum(np.abs(out[:, -1]) ** 2)
        if boundary > tail_tol:
            raise TruncationError(
                f"beam splitter output holds {boundary:.3e} probability on the "
                "truncation boundary; increase the truncation"
            )
    return out


def partial_trace(state, keep, modes=None):
    """Reduced density matrix over the kept modes.

    With ``modes`` omitted, ``state`` is a pure-state ndarray with one
    axis per mode.  Passing ``modes`` selects the density interpretation
    instead: a square matrix over that many equal-dimension modes.
    ``keep`` is a sequence of mode indices.
    """
    keep = tuple(int(k) for k in keep)
    state = np.asarray(state, dtype=complex)
    if modes is None:
        return _partial_trace_pure(state, keep)
    if state.ndim != 2 or state.shape[0] != state.shape[1]:
        raise ValueError("density input must be a square matrix")
    dim = round(state.shape[0] ** (1.0 / modes))
    if dim**modes != state.shape[0]:
        raise ValueError("matrix size is not a power of a per-mode dimension")
    tensor = state.reshape((dim,) * (2 * modes))
    traced = [m for m in range(modes) if m not in keep]
    for m in sorted(traced, reverse=True):
        tensor = np.trace(tensor, axis1=m, axis2=m + tensor.ndim // 2)
    d_keep = dim ** len(keep)
    return tensor.reshape(d_keep, d_keep)


def _partial_trace_pure(psi, keep):
    modes = psi.ndim
    if any(k < 0 or k >= modes for k in keep):
        raise ValueError(f"keep={keep} out of range for {modes} modes")
    traced = [m for m in range(modes) if m not in keep]
    reordered = np.transpose(psi, axes=list(keep) + traced)
    d_keep = int(np.prod([psi.shape[k] for k in keep])) if keep else 1
    mat = reordered.reshape(d_keep, -1)
    return mat @ mat.conj().T


def von_neumann_entropy(rho, floor=1e-14):
    """Base-2 von Neumann entropy; eigenvalues below ``floor`` are
    treated as exactly zero."""
    lam = np.linalg.eigvalsh(np.asarray(rho, dtype=complex))
    lam = lam[lam > floor]
    return float(-np.sum(lam * np.log2(lam)))


def _displacement(zeta, size):
    """Truncated displacement operator exp(zeta a+ - zeta* a).

    Equals exp(zeta a+) exp(-zeta* a) exp(-|zeta|^2 / 2); the unitary
    form keeps intermediate entries bounded where the triangular factors
    would overflow the working precision at large truncations.
    """
    ladder = np.diag(np.sqrt(np.arange(1, size)), k=1)  # annihilation
    return expm(zeta * ladder.conj().T - np.conj(zeta) * ladder)


def operator_trace_charfunc(vec, point, check_tail=True, tail_tol=1e-9):
    """Characteristic function of a two-mode pure state by explicit
    operator trace:

        Tr[rho exp(za a+) exp(-za* a) exp(zb b+) exp(-zb* b)]
            * exp(-(|za|^2 + |zb|^2)/2)

    evaluated through the truncated displacement matrices of each mode.
    """
    vec = np.asarray(vec, dtype=complex)
    if vec.ndim != 2:
        raise ValueError("expected a two-mode vector")
    za = complex(point.zeta_a)
    zb = complex(point.zeta_b)
    moved = _displacement(za, vec.shape[0]) @ vec @ _displacement(zb, vec.shape[1]).T
    if check_tail:
        boundary = np.sum(np.abs(moved[-1, :]) ** 2) + np.sum(np.abs(moved[:, -1]) ** 2)
        if boundary > tail_tol:
            raise TruncationError(
                "displaced state spills past the truncation; increase it"
            )
    return complex(np.vdot(vec, moved))


def mean_photon(rho):
    """Tr(rho n) for a single-mode density matrix."""
    rho = np.asarray(rho)
    return float(np.real(np.sum(np.arange(rho.shape[0]) * np.diag(rho))))
