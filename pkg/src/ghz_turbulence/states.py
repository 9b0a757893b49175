"""Pure and mixed qubit states: basis kets, Bell, GHZ, W and Werner mixtures."""
from dataclasses import dataclass

import numpy as np

from . import qmat

NORM_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class PureState:
    """Amplitude vector of an ``n_qubits`` register, qubit 0 most significant.

    For three qubits ``amplitudes[4*i + 2*j + k]`` is the coefficient of
    ``|ijk>``.
    """

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if self.n_qubits < 1 or amps.size != 2 ** self.n_qubits:
            raise ValueError(f"{self.n_qubits} qubits need {2 ** self.n_qubits} amplitudes, got {amps.size}")
        if not np.all(np.isfinite(amps)):
            raise ValueError("amplitudes contain NaN or Inf")
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"state is not unit norm (|psi| = {norm:.12g})")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def norm(self):
        return float(np.linalg.norm(self.amplitudes))

    def coefficient(self, *bits):
        """Amplitude of the basis ket labelled by ``bits`` (left to right)."""
        if len(bits) != self.n_qubits:
            raise ValueError(f"need {self.n_qubits} bits, got {len(bits)}")
        index = 0
        for b in bits:
            index = 2 * index + int(b)
        return self.amplitudes[index]

    @classmethod
    def from_unnormalized(cls, n_qubits, amplitudes):
        amps = np.asarray(amplitudes, dtype=complex).reshape(-1)
        norm = np.linalg.norm(amps)
        if norm == 0:
            raise ValueError("cannot normalize the zero vector")
        return cls(n_qubits, amps / norm)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A ``2**n x 2**n`` operator.

    ``normalized=True`` promises a Hermitian, unit-trace, positive
    semidefinite matrix and is checked on construction. ``normalized=False``
    is used for the non-Hermitian output of the literal turbulence mode, where
    only finiteness is enforced.
    """

    n_qubits: int
    matrix: np.ndarray
    normalized: bool = True

    def __post_init__(self):
        m = qmat.as_matrix(self.matrix).copy()
        dim = 2 ** self.n_qubits
        if m.shape != (dim, dim):
            raise ValueError(f"{self.n_qubits} qubits need a {dim}x{dim} matrix, got {m.shape}")
        if self.normalized:
            herm = qmat.hermiticity_error(m)
            if herm > NORM_TOL:
                raise ValueError(f"density matrix is not Hermitian (deviation {herm:.3e})")
            tr = np.trace(m)
            if abs(tr - 1.0) > NORM_TOL:
                raise ValueError(f"density matrix trace is {tr:.12g}, expected 1")
            low = qmat.hermitian_eigenvalues(m)[0]
            if low < -NORM_TOL:
                raise ValueError(f"density matrix has negative eigenvalue {low:.3e}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self):
        return 2 ** self.n_qubits


def basis_state(bits):
    """Computational basis ket, e.g. ``basis_state("010")``."""
    bits = [int(b) for b in bits]
    if not bits or any(b not in (0, 1) for b in bits):
        raise ValueError(f"bits must be a non-empty 0/1 sequence, got {bits}")
    amps = np.zeros(2 ** len(bits), dtype=complex)
    amps[int("".join(map(str, bits)), 2)] = 1.0
    return PureState(len(bits), amps)


def bell_state():
    """Phi+ = (|00> + |11>)/sqrt(2)."""
    amps = np.zeros(4, dtype=complex)
    amps[0] = amps[3] = 1 / np.sqrt(2)
    return PureState(2, amps)


def ghz_state():
    amps = np.zeros(8, dtype=complex)
    amps[0] = amps[7] = 1 / np.sqrt(2)
    return PureState(3, amps)


def w_state():
    amps = np.zeros(8, dtype=complex)
    amps[[1, 2, 4]] = 1 / np.sqrt(3)
    return PureState(3, amps)


def three_qubit_state(coefficients):
    """Build ``sum a_ijk |ijk>`` from a mapping ``{(i, j, k): a_ijk}`` or a 2x2x2 array.

    The coefficients are normalized; missing keys are zero.
    """
    if isinstance(coefficients, dict):
        amps = np.zeros(8, dtype=complex)
        for (i, j, k), value in coefficients.items():
            amps[4 * i + 2 * j + k] = value
    else:
        amps = np.asarray(coefficients, dtype=complex).reshape(8)
    return PureState.from_unnormalized(3, amps)


def random_pure_state(n_qubits, rng):
    """Haar-random pure state from a normalized complex Gaussian vector."""
    dim = 2 ** n_qubits
    z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return PureState.from_unnormalized(n_qubits, z)


def to_density(psi):
    if abs(psi.norm - 1.0) > NORM_TOL:
        raise ValueError(f"state is not unit norm (|psi| = {psi.norm:.12g})")
    amps = psi.amplitudes
    return DensityMatrix(psi.n_qubits, np.outer(amps, amps.conj()))


def maximally_entangled_state(n_qubits):
    if n_qubits == 2:
        return bell_state()
    if n_qubits == 3:
        return ghz_state()
    raise ValueError(f"Werner states are supported for 2 or 3 qubits, got {n_qubits}")


def werner_state(p, n_qubits):
    """p |phi><phi| + (1 - p)/2**n * I, with phi = Bell (n=2) or GHZ (n=3)."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"Werner weight p must lie in [0, 1], got {p}")
    phi = maximally_entangled_state(n_qubits)
    dim = 2 ** n_qubits
    rho = p * np.outer(phi.amplitudes, phi.amplitudes.conj()) + (1 - p) / dim * np.eye(dim)
    return DensityMatrix(n_qubits, rho)
