"""Closed-form versus Fock-space cross-checks.

Each check builds states explicitly in the truncated number basis (via
the fock module) and compares a closed-form quantity against its
brute-force counterpart, reporting the largest deviation.  The CLI
``verify`` subcommand runs the whole battery.
"""

from dataclasses import dataclass

import numpy as np

from . import coherent, decoherence, fock, states, werner

__all__ = [
    "CheckResult",
    "run_all",
    "lossy_pair_fock",
    "oracle_family_overlap",
    "family_overlap_curve",
]


@dataclass(frozen=True)
class CheckResult:
    name: str
    deviation: float
    tolerance: float

    @property
    def passed(self):
        return self.deviation <= self.tolerance


def lossy_pair_fock(alpha, eta, truncation=None):
    """Three-mode (A, B, E) state: the antisymmetric entangled coherent
    state with mode B passed through the loss channel, built from fock
    primitives only."""
    if truncation is None:
        truncation = fock.default_truncation(alpha)
    vac = np.zeros(truncation + 1, dtype=complex)
    vac[0] = 1.0
    plus = fock.coherent_vector(alpha, truncation)
    minus = fock.coherent_vector(-alpha, truncation)
    be_of_minus = fock.beam_splitter(np.outer(minus, vac), eta)
    be_of_plus = fock.beam_splitter(np.outer(plus, vac), eta)
    psi = np.einsum("a,be->abe", plus, be_of_minus) - np.einsum(
        "a,be->abe", minus, be_of_plus
    )
    return psi / np.linalg.norm(psi)


def oracle_family_overlap(alpha, eta, beta, truncation=None):
    """<B2(beta)| rho_AB |B2(beta)> computed entirely in the number
    basis: build the tripartite state, project mode A and B onto the
    comparison state, and sum the environment weights."""
    return float(family_overlap_curve(alpha, eta, [beta], truncation)[0])


def family_overlap_curve(alpha, eta, betas, truncation=None):
    """Oracle family overlaps at several comparison amplitudes, reusing
    one tripartite state per (alpha, eta)."""
    betas = np.atleast_1d(np.asarray(betas, dtype=float))
    if truncation is None:
        truncation = fock.default_truncation(max(alpha, betas.max()))
    psi = lossy_pair_fock(alpha, eta, truncation)
    values = np.empty(betas.shape)
    for i, beta in enumerate(betas):
        probe = fock.quasi_bell_fock(coherent.CoherentQuasiBell(2, beta), truncation)
        weights = np.einsum("ab,abe->e", probe.conj(), psi)
        values[i] = np.sum(np.abs(weights) ** 2)
    return values


def _alpha_grid(alpha_max):
    return [a for a in (0.1, 0.5, 1.0, 2.0, 3.0) if a <= alpha_max + 1e-12]


def check_coherent_overlap(alpha_max, truncation):
    dev = 0.0
    for alpha in _alpha_grid(alpha_max):
        vec_p = fock.coherent_vector(alpha, truncation)
        vec_m = fock.coherent_vector(-alpha, truncation)
        numeric = np.vdot(vec_p, vec_m).real
        dev = max(dev, abs(numeric - coherent.overlap_of_amplitude(alpha)))
    return CheckResult("coherent_overlap", dev, 1e-12)


def check_gram_matrix(alpha_max, truncation):
    dev = 0.0
    for alpha in _alpha_grid(alpha_max):
        kappa = coherent.overlap_of_amplitude(alpha)
        closed = states.gram_matrix(kappa)
        vecs = [
            fock.quasi_bell_fock(coherent.CoherentQuasiBell(i, alpha), truncation)
            for i in (1, 2, 3, 4)
        ]
        numeric = np.array(
            [[abs(np.vdot(vi, vj)) for vj in vecs] for vi in vecs]
        )
        dev = max(dev, float(np.max(np.abs(numeric - closed))))
    return CheckResult("gram_matrix", dev, 1e-10)


def check_reduced_spectra(alpha_max, truncation):
    dev = 0.0
    for alpha in _alpha_grid(alpha_max):
        for index in (1, 2, 3, 4):
            state = coherent.CoherentQuasiBell(index, alpha)
            closed = coherent.coherent_spectrum(state)
            vec = fock.quasi_bell_fock(state, truncation)
            rho = fock.partial_trace(vec, keep=(0,))
            lam = np.sort(np.linalg.eigvalsh(rho))[::-1][:2]
            dev = max(dev, float(np.max(np.abs(lam - closed))))
    return CheckResult("reduced_spectra", dev, 1e-9)


def check_unit_entropy(alpha_max, truncation):
    dev = 0.0
    for alpha in _alpha_grid(alpha_max):
        for index in (2, 4):
            vec = fock.quasi_bell_fock(
                coherent.CoherentQuasiBell(index, alpha), truncation
            )
            entropy = fock.von_neumann_entropy(fock.partial_trace(vec, keep=(0,)))
            dev = max(dev, abs(entropy - 1.0))
    return CheckResult("unit_entropy", dev, 1e-9)


def check_mean_photons(alpha_max, truncation):
    dev = 0.0
    for alpha in _alpha_grid(alpha_max):
        for index in (1, 2):
            state = coherent.CoherentQuasiBell(index, alpha)
            closed = coherent.mean_photon_numbers(state)[0]
            vec = fock.quasi_bell_fock(state, truncation)
            numeric = fock.mean_photon(fock.partial_trace(vec, keep=(0,)))
            dev = max(dev, abs(numeric - closed))
    return CheckResult("mean_photons", dev, 1e-9)


def check_asymmetric_spectra(alpha_max, truncation):
    dev = 0.0
    pairs = [(a, b) for a in (0.3, 1.0, 2.0) for b in (0.5, 1.0, 1.5)]
    for alpha, beta in pairs:
        if max(alpha, beta) > alpha_max + 1e-12:
            continue
        closed = coherent.asymmetric_spectrum(alpha, beta, 2)
        vec = fock.quasi_bell_fock(
            coherent.CoherentQuasiBell(2, alpha, beta), truncation
        )
        rho = fock.partial_trace(vec, keep=(0,))
        lam = np.sort(np.linalg.eigvalsh(rho))[::-1][:2]
        dev = max(dev, float(np.max(np.abs(lam - closed))))
    return CheckResult("asymmetric_spectra", dev, 1e-10)


def check_char_function(alpha_max, truncation, n_points=20, seed=11):
    rng = np.random.default_rng(seed)
    dev = 0.0
    for alpha in (0.5, 1.0):
        if alpha > alpha_max + 1e-12:
            continue
        for index in (1, 2, 3, 4):
            state = coherent.CoherentQuasiBell(index, alpha)
            vec = fock.quasi_bell_fock(state, truncation)
            for _ in range(n_points):
                za, zb = (rng.uniform(-1.5, 1.5, 2) + 1j * rng.uniform(-1.5, 1.5, 2))
                point = coherent.CharFuncPoint(za, zb)
                closed = coherent.characteristic_function(state, point)
                numeric = fock.operator_trace_charfunc(vec, point)
                dev = max(dev, abs(closed - numeric))
    return CheckResult("char_function", dev, 1e-8)


def check_beam_splitter_rule(alpha_max, truncation):
    dev = 0.0
    for alpha in _alpha_grid(alpha_max):
        for eta in (0.0, 0.25, 0.5, 0.75, 1.0):
            size = (truncation or fock.default_truncation(alpha)) + 1
            vac = np.zeros(size, dtype=complex)
            vac[0] = 1.0
            sent = fock.beam_splitter(
                np.outer(fock.coherent_vector(alpha, size - 1), vac), eta
            )
            target = np.outer(
                fock.coherent_vector(np.sqrt(eta) * alpha, size - 1),
                fock.coherent_vector(np.sqrt(1.0 - eta) * alpha, size - 1),
            )
            fidelity = abs(np.vdot(target, sent)) ** 2
            dev = max(dev, 1.0 - fidelity)
    return CheckResult("beam_splitter_rule", dev, 1e-9)


def check_beam_splitter_unitary(seed=3):
    rng = np.random.default_rng(seed)
    vec = rng.standard_normal((21, 21)) + 1j * rng.standard_normal((21, 21))
    vec /= np.linalg.norm(vec)
    dev = 0.0
    for eta in (0.2, 0.5, 0.8):
        out = fock.beam_splitter(vec, eta, check_tail=False)
        dev = max(dev, abs(np.linalg.norm(out) - 1.0))
    return CheckResult("beam_splitter_unitary", dev, 1e-12)


def _orthonormal_pair(alpha, truncation):
    """Fock vectors of the orthonormal basis built from span{|a>, |-a>}."""
    plus = fock.coherent_vector(alpha, truncation) + fock.coherent_vector(
        -alpha, truncation
    )
    minus = fock.coherent_vector(alpha, truncation) - fock.coherent_vector(
        -alpha, truncation
    )
    return plus / np.linalg.norm(plus), minus / np.linalg.norm(minus)


def check_loss_density(alpha_max, truncation, etas=(0.3, 0.7)):
    alpha = min(1.0, alpha_max)
    n = truncation or fock.default_truncation(alpha)
    dev = 0.0
    for eta in etas:
        psi = lossy_pair_fock(alpha, eta, n)
        rho_fock = fock.partial_trace(psi, keep=(0, 1))
        plus_a, minus_a = _orthonormal_pair(alpha, n)
        plus_b, minus_b = _orthonormal_pair(np.sqrt(eta) * alpha, n)
        basis = np.stack(
            [
                np.kron(plus_a, plus_b),
                np.kron(plus_a, minus_b),
                np.kron(minus_a, plus_b),
                np.kron(minus_a, minus_b),
            ],
            axis=1,
        )
        projected = basis.conj().T @ rho_fock @ basis
        closed = decoherence.apply_loss(alpha, decoherence.LossChannel(eta)).matrix
        dev = max(dev, float(np.max(np.abs(projected - closed))))
    return CheckResult("loss_density", dev, 1e-9)


def check_loss_purity(alpha_max, truncation):
    alpha = min(1.0, alpha_max)
    eta = 0.5
    n = truncation or fock.default_truncation(alpha)
    psi = lossy_pair_fock(alpha, eta, n)
    rho_fock = fock.partial_trace(psi, keep=(0, 1))
    numeric = float(np.real(np.trace(rho_fock @ rho_fock)))
    closed_rho = decoherence.apply_loss(alpha, decoherence.LossChannel(eta)).matrix
    closed = float(np.real(np.trace(closed_rho @ closed_rho)))
    return CheckResult("loss_purity", abs(numeric - closed), 1e-9)


def check_family_overlap(alpha_max, truncation):
    dev = 0.0
    for alpha in (0.5, 1.0, 2.0):
        if alpha > alpha_max + 1e-12:
            continue
        for eta in (0.1, 0.5, 0.9):
            state = decoherence.apply_loss(alpha, decoherence.LossChannel(eta))
            betas = np.linspace(0.25 * alpha, 1.75 * alpha, 7)
            closed = np.array(
                [decoherence.fraction_over_family(state, b) for b in betas]
            )
            numeric = family_overlap_curve(alpha, eta, betas, truncation)
            dev = max(dev, float(np.max(np.abs(closed - numeric))))
    return CheckResult("family_overlap", dev, 1e-9)


def check_optimal_beta(alpha_max):
    # the overlap peak flattens like exp(-(2/3) c^2 (b - b*)^2) with
    # c = alpha (1 + sqrt(eta)), so the position comparison starts at
    # alpha = 0.3, below which b* is not conditioned past rounding; the
    # achieved-overlap comparison runs at every amplitude regardless,
    # inside optimal_beta itself
    dev = 0.0
    for alpha in np.linspace(0.3, max(0.3, min(3.0, alpha_max)), 10):
        for eta in np.linspace(0.1, 0.9, 9):
            channel = decoherence.LossChannel(eta)
            state = decoherence.apply_loss(alpha, channel)
            beta_star, _ = decoherence.optimal_beta(alpha, channel)
            beta_num, _ = decoherence.search_optimal_beta(state)
            dev = max(dev, abs(beta_num - beta_star) / beta_star)
    return CheckResult("optimal_beta", dev, 1e-6)


def check_werner_spectrum():
    dev = 0.0
    for fid in np.linspace(0.0, 1.0, 6):
        for kappa in np.linspace(0.0, 0.9, 6):
            spec = werner.QuasiWerner(fid, kappa)
            closed = werner.quasi_werner_spectrum(spec)
            numeric = np.sort(np.linalg.eigvalsh(werner.build_quasi_werner(spec)))[::-1]
            dev = max(dev, float(np.max(np.abs(closed - numeric))))
    return CheckResult("werner_spectrum", dev, 1e-10)


def run_all(alpha_max=3.0, truncation=None, tolerance=None):
    """Run every cross-check.  ``truncation`` overrides the adequacy rule
    (too-small values raise); ``tolerance`` replaces each check's own
    tolerance, which is how the numerical floor can be probed."""
    results = [
        check_coherent_overlap(alpha_max, truncation),
        check_gram_matrix(alpha_max, truncation),
        check_reduced_spectra(alpha_max, truncation),
        check_unit_entropy(alpha_max, truncation),
        check_mean_photons(alpha_max, truncation),
        check_asymmetric_spectra(alpha_max, truncation),
        check_char_function(alpha_max, truncation),
        check_beam_splitter_rule(alpha_max, truncation),
        check_beam_splitter_unitary(),
        check_loss_density(alpha_max, truncation),
        check_loss_purity(alpha_max, truncation),
        check_family_overlap(alpha_max, truncation),
        check_optimal_beta(alpha_max),
        check_werner_spectrum(),
    ]
    if tolerance is not None:
        results = [
            CheckResult(r.name, r.deviation, float(tolerance)) for r in results
        ]
    return results
