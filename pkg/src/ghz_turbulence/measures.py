"""Entanglement and mixedness diagnostics for two- and three-qubit states."""
from dataclasses import asdict, dataclass

import numpy as np

from . import qmat
from .states import NORM_TOL, DensityMatrix, PureState, to_density

SPIN_FLIP = qmat.kron(qmat.SIGMA_Y, qmat.SIGMA_Y)
PAIRS = {"ab": (0, 1), "ac": (0, 2), "bc": (1, 2)}
TIE_TOL = 1e-12
RANK_CUTOFF = 1e-14


@dataclass(frozen=True)
class MeasureReport:
    purity: float
    linear_entropy: float
    linear_entropy_generalized: float
    tangle_ab: float
    tangle_ac: float
    tangle_bc: float
    three_tangle: float
    residual_tangle: float
    monogamy_gap: float

    def as_dict(self):
        return asdict(self)


def _unit_trace(rho):
    """Matrix of ``rho`` scaled to unit trace (a no-op for normalized states)."""
    m = rho.matrix
    if rho.normalized:
        return m
    tr = np.trace(m)
    if abs(tr) < 1e-300:
        raise ValueError("cannot normalize a state with zero trace")
    return m / tr


def purity(rho):
    m = _unit_trace(rho)
    value = np.sum(m * m.T)  # Tr(m @ m) without forming the product
    if abs(value.imag) >= 1e-10:
        raise ValueError(f"Tr rho^2 has imaginary part {value.imag:.3e}")
    return float(value.real)


def linear_entropy(rho):
    """(4/3)(1 - Tr rho^2), with the 4/3 prefactor kept for every qubit count."""
    return 4.0 / 3.0 * (1.0 - purity(rho))


def linear_entropy_generalized(rho):
    """d/(d-1) (1 - Tr rho^2); 0 for pure states, 1 for the maximally mixed state."""
    d = rho.dim
    return d / (d - 1) * (1.0 - purity(rho))


def _require_qubits(obj, n):
    if obj.n_qubits != n:
        raise ValueError(f"expected a {n}-qubit state, got {obj.n_qubits} qubits")


def spin_flip(rho_matrix):
    return SPIN_FLIP @ rho_matrix.conj() @ SPIN_FLIP


def concurrence(rho):
    """Wootters concurrence of a normalized two-qubit density matrix.

    The lambdas (square roots of the spectrum of rho @ spin_flip(rho)) are
    the singular values of sqrt(rho) @ YY @ conj(sqrt(rho)), since that
    matrix times its adjoint is sqrt(rho) @ spin_flip(rho) @ sqrt(rho).
    Eigenvalues of rho at rounding level are treated as exact zeros.
    """
    _require_qubits(rho, 2)
    m = _unit_trace(rho)
    values, vecs = qmat.hermitian_eigh(m)
    if values[0] < -NORM_TOL:
        raise ValueError(f"state is not positive semidefinite (eigenvalue {values[0]:.3e})")
    values = np.where(values > RANK_CUTOFF * max(1.0, values[-1]), values, 0.0)
    root = (vecs * np.sqrt(values)) @ vecs.conj().T
    lam = qmat.singular_values(root @ SPIN_FLIP @ root.conj())
    return float(max(lam[0] - lam[1] - lam[2] - lam[3], 0.0))


def tangle(rho):
    return concurrence(rho) ** 2


def hyperdeterminant_terms(psi):
    """The d1, d2, d3 polynomials in the amplitudes a_ijk (complex)."""
    _require_qubits(psi, 3)
    a = psi.amplitudes.reshape(2, 2, 2)
    a000, a001, a010, a011 = a[0, 0, 0], a[0, 0, 1], a[0, 1, 0], a[0, 1, 1]
    a100, a101, a110, a111 = a[1, 0, 0], a[1, 0, 1], a[1, 1, 0], a[1, 1, 1]
    d1 = a000**2 * a111**2 + a001**2 * a110**2 + a010**2 * a101**2 + a100**2 * a011**2
    d2 = (a000 * a111 * a011 * a100 + a000 * a111 * a101 * a010
          + a000 * a111 * a110 * a001 + a011 * a100 * a101 * a010
          + a011 * a100 * a110 * a001 + a101 * a010 * a110 * a001)
    d3 = a000 * a110 * a101 * a011 + a111 * a001 * a010 * a100
    return complex(d1), complex(d2), complex(d3)


def three_tangle(psi):
    """4 |d1 - 2 d2 + 4 d3| for a normalized three-qubit pure state."""
    if abs(psi.norm - 1.0) > NORM_TOL:
        raise ValueError(f"state is not unit norm (|psi| = {psi.norm:.12g})")
    d1, d2, d3 = hyperdeterminant_terms(psi)
    return float(4.0 * abs(d1 - 2 * d2 + 4 * d3))


def _det2(m):
    return (m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]).real


def one_vs_rest_tangle(rho_matrix, n_qubits, pivot):
    """4 det of the pivot qubit's reduced state."""
    reduced = qmat.partial_trace(rho_matrix, n_qubits, [pivot])
    return float(4.0 * _det2(reduced))


def residual_tangle(psi, pivot=0):
    _require_qubits(psi, 3)
    return one_vs_rest_tangle(to_density(psi).matrix, 3, pivot)


def pairwise_tangles(rho_matrix):
    """Tangles of the three two-qubit reductions of a normalized 3-qubit matrix."""
    out = {}
    for name, keep in PAIRS.items():
        reduced = qmat.partial_trace(rho_matrix, 3, keep)
        out[name] = tangle(DensityMatrix(2, reduced))
    return out


def monogamy_report(psi):
    _require_qubits(psi, 3)
    rho = to_density(psi)
    pairs = pairwise_tangles(rho.matrix)
    tau3 = three_tangle(psi)
    residual = residual_tangle(psi, 0)
    return MeasureReport(
        purity=purity(rho),
        linear_entropy=linear_entropy(rho),
        linear_entropy_generalized=linear_entropy_generalized(rho),
        tangle_ab=pairs["ab"],
        tangle_ac=pairs["ac"],
        tangle_bc=pairs["bc"],
        three_tangle=tau3,
        residual_tangle=residual,
        monogamy_gap=residual - (pairs["ab"] + pairs["ac"] + tau3),
    )


def dominant_eigenvector(rho_matrix):
    """Unit eigenvector of the largest eigenvalue; near-ties go to the lowest solver index."""
    values, vecs = qmat.hermitian_eigh(rho_matrix)
    top = int(np.flatnonzero(values >= values[-1] - TIE_TOL)[0])
    return vecs[:, top]


def mixed_three_tangle_estimate(rho):
    """Three-tangle of the dominant eigenvector of a three-qubit density matrix."""
    _require_qubits(rho, 3)
    vec = dominant_eigenvector(_unit_trace(rho))
    return three_tangle(PureState(3, vec / np.linalg.norm(vec)))


def physical_part(rho):
    """Closest-looking valid state for a possibly non-Hermitian operator.

    Takes the Hermitian part of the unit-trace matrix, drops negative
    eigenvalues and renormalizes. Normalized inputs come back unchanged.
    """
    if rho.normalized:
        return rho
    m = _unit_trace(rho)
    h = (m + m.conj().T) / 2
    values, vecs = qmat.hermitian_eigh(h)
    values = np.clip(values, 0.0, None)
    if values.sum() <= 0:
        raise ValueError("operator has no positive part")
    fixed = (vecs * values) @ vecs.conj().T
    fixed = (fixed + fixed.conj().T) / 2
    return DensityMatrix(rho.n_qubits, fixed / np.trace(fixed).real)


def state_report(rho):
    """Full report for a (possibly mixed) three-qubit state.

    Purity and entropies use ``rho`` as given. The tangle fields need a
    positive semidefinite operator and are taken from ``physical_part(rho)``;
    the three-tangle field is the dominant-eigenvector estimate and the
    residual tangle uses qubit A as the pivot.
    """
    _require_qubits(rho, 3)
    phys = physical_part(rho)
    pairs = pairwise_tangles(phys.matrix)
    tau3 = mixed_three_tangle_estimate(phys)
    residual = one_vs_rest_tangle(phys.matrix, 3, 0)
    return MeasureReport(
        purity=purity(rho),
        linear_entropy=linear_entropy(rho),
        linear_entropy_generalized=linear_entropy_generalized(rho),
        tangle_ab=pairs["ab"],
        tangle_ac=pairs["ac"],
        tangle_bc=pairs["bc"],
        three_tangle=tau3,
        residual_tangle=residual,
        monogamy_gap=residual - (pairs["ab"] + pairs["ac"] + tau3),
    )
