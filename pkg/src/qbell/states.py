"""Quasi-Bell states over a pair of nonorthogonal basis states.

Two normalized states |u>, |v> with real inner product <u|v> = kappa,
0 <= kappa < 1, generate four entangled two-party states

    |B1> = h1 (|u>|v> + |v>|u>)        h1 = h3 = 1/sqrt(2 (1 + kappa^2))
    |B2> = h2 (|u>|v> - |v>|u>)        h2 = h4 = 1/sqrt(2 (1 - kappa^2))
    |B3> = h3 (|u>|u> + |v>|v>)
    |B4> = h4 (|u>|u> - |v>|v>)

At kappa = 0 these are the standard Bell states.  Everything here is a
function of kappa alone; the physical dimension of the carrier space
never enters.
"""

from dataclasses import dataclass

import numpy as np

INDICES = (1, 2, 3, 4)

__all__ = [
    "INDICES",
    "QuasiBell",
    "check_kappa",
    "normalization_constant",
    "gram_matrix",
    "gram_off_diagonal",
    "reduced_spectrum",
    "entropy_of_entanglement",
    "embed_qubit",
]


def check_kappa(kappa):
    """Validate a basis-state overlap. Must be real with 0 <= kappa < 1.

    kappa = 1 (identical basis states) makes the antisymmetric-state
    normalizations diverge and is rejected outright; complex values are
    rejected rather than silently reduced to a magnitude.
    """
    if isinstance(kappa, complex) or np.iscomplexobj(kappa):
        raise ValueError("overlap must be real, got a complex value")
    kappa = float(kappa)
    if not np.isfinite(kappa):
        raise ValueError("overlap must be finite")
    if kappa < 0.0:
        raise ValueError(f"overlap must be >= 0, got {kappa}")
    if kappa >= 1.0:
        raise ValueError(f"overlap must be < 1, got {kappa}")
    return kappa


def check_index(index):
    if index not in INDICES:
        raise ValueError(f"state index must be one of {INDICES}, got {index!r}")
    return int(index)


@dataclass(frozen=True)
class QuasiBell:
    """One of the four quasi-Bell states, specified by index and overlap."""

    index: int
    kappa: float

    def __post_init__(self):
        object.__setattr__(self, "index", check_index(self.index))
        object.__setattr__(self, "kappa", check_kappa(self.kappa))


def normalization_constant(index, kappa):
    """Normalization h_i of the quasi-Bell state with the given overlap."""
    index = check_index(index)
    kappa = check_kappa(kappa)
    if index in (1, 3):
        return 1.0 / np.sqrt(2.0 * (1.0 + kappa**2))
    return 1.0 / np.sqrt(2.0 * (1.0 - kappa**2))


def gram_off_diagonal(kappa):
    """Mutual overlap D = 2 kappa / (1 + kappa^2) of states 1 and 3."""
    kappa = check_kappa(kappa)
    return 2.0 * kappa / (1.0 + kappa**2)


def gram_matrix(kappa):
    """4x4 matrix of pairwise overlaps |<B_i|B_j>|.

    All four states are mutually orthogonal except the pair (1, 3),
    whose overlap is D = 2 kappa / (1 + kappa^2).
    """
    d = gram_off_diagonal(kappa)
    g = np.eye(4)
    g[0, 2] = g[2, 0] = d
    return g


def reduced_spectrum(state):
    """Eigenvalues of either reduced density operator, sorted descending.

    Indices 2 and 4 give {1/2, 1/2} for every overlap; indices 1 and 3
    give {(1 +/- kappa)^2 / (2 (1 + kappa^2))}.
    """
    kappa = state.kappa
    if state.index in (2, 4):
        return np.array([0.5, 0.5])
    denom = 2.0 * (1.0 + kappa**2)
    lam = np.array([(1.0 + kappa) ** 2 / denom, (1.0 - kappa) ** 2 / denom])
    return np.sort(lam)[::-1]


def entropy_of_entanglement(state):
    """Entropy of entanglement in ebits.

    Exactly 1 for indices 2 and 4 regardless of overlap; indices 1 and 3
    fall below 1 as soon as kappa > 0.
    """
    lam = reduced_spectrum(state)
    return _binary_entropy(lam[0])


def _binary_entropy(x):
    # local copy so this module stays dependency-free; the public version
    # with domain checks lives in measures.py
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return -(x * np.log2(x) + (1.0 - x) * np.log2(1.0 - x))


def embed_qubit(state):
    """Coefficients of the state in the orthonormal product basis.

    The basis qubit states are |+> = (|u> + |v>)/sqrt(2 + 2 kappa) and
    |-> = (|u> - |v>)/sqrt(2 - 2 kappa); coefficients are returned in the
    order |++>, |+->, |-+>, |-->.  The global phase is fixed by making
    the first nonzero coefficient real and positive.
    """
    kappa = state.kappa
    a = np.sqrt((1.0 + kappa) / 2.0)  # <+|u> = <+|v>
    b = np.sqrt((1.0 - kappa) / 2.0)  # <-|u> = -<-|v>
    u = np.array([a, b])
    v = np.array([a, -b])
    h = normalization_constant(state.index, kappa)
    if state.index == 1:
        c = h * (np.kron(u, v) + np.kron(v, u))
    elif state.index == 2:
        c = h * (np.kron(u, v) - np.kron(v, u))
    elif state.index == 3:
        c = h * (np.kron(u, u) + np.kron(v, v))
    else:
        c = h * (np.kron(u, u) - np.kron(v, v))
    c = c.astype(complex)
    lead = c[np.flatnonzero(np.abs(c) > 1e-14)[0]]
    c *= np.conj(lead) / np.abs(lead)
    return c + 0.0  # normalize signed zeros
