"""Hyperbolic polarization-turbulence filter acting on the arms of a 3-photon state.

The 2x2 filter ``A(theta) = [[cosh, sinh], [sinh, cosh]]`` is not unitary, so
every application is followed by a trace renormalization. Three ways of
applying it to a density matrix are offered:

``literal``
    ``rho @ K`` (right multiplication only). The result is generally not
    Hermitian and is returned with ``normalized=False``.
``conjugate``
    ``K rho K^dagger``, a local filter. Pure states stay pure.
``stochastic``
    Every turbulent arm independently sees ``A(+theta)`` or ``A(-theta)``
    with equal weight, i.e. an equal mixture over all ``2**k`` sign patterns
    of the ``k`` turbulent arms. This is the only mode that mixes the state.
    Because the map is a product of single-arm maps, applying arms one after
    another gives the same state as applying them together.
"""
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import product

import numpy as np

from . import qmat
from .states import DensityMatrix

N_ARMS = 3
ZERO_TRACE = 1e-300


class Mode(str, Enum):
    LITERAL = "literal"
    CONJUGATE = "conjugate"
    STOCHASTIC = "stochastic"


def _check_theta(theta):
    if not 0.0 <= theta <= np.pi:
        raise ValueError(f"turbulence strength theta must lie in [0, pi], got {theta}")


def turbulence_operator(theta):
    _check_theta(theta)
    return _hyperbolic(theta)


def _hyperbolic(theta):
    # no range check: the stochastic mode needs negative angles
    c, s = np.cosh(theta), np.sinh(theta)
    return np.array([[c, s], [s, c]], dtype=complex)


def parse_arms(arms):
    """Normalize ``"12"``, ``[1, 2]`` or ``{2, 1}`` to ``frozenset({1, 2})``."""
    if isinstance(arms, str):
        arms = [int(ch) for ch in arms.strip()]
    out = frozenset(int(a) for a in arms)
    bad = sorted(a for a in out if not 1 <= a <= N_ARMS)
    if bad:
        raise ValueError(f"arms must be drawn from {{1, 2, 3}}, got {bad}")
    return out


def arms_label(arms):
    return "".join(str(a) for a in sorted(parse_arms(arms)))


@dataclass(frozen=True)
class TurbulenceChannel:
    theta: float
    arms: frozenset = frozenset({1})
    mode: Mode = Mode.STOCHASTIC

    def __post_init__(self):
        _check_theta(self.theta)
        object.__setattr__(self, "arms", parse_arms(self.arms))
        object.__setattr__(self, "mode", Mode(self.mode))


def _signed_filter(theta, signs):
    factors = [qmat.identity(2) if s == 0 else _hyperbolic(s * theta) for s in signs]
    out = qmat.kron_all(factors)
    out.setflags(write=False)
    return out


@lru_cache(maxsize=4096)
def _filter(theta, arms):
    return _signed_filter(theta, [1 if i in arms else 0 for i in range(1, N_ARMS + 1)])


@lru_cache(maxsize=4096)
def _stochastic_branches(theta, arms):
    choices = [(1, -1) if i in arms else (0,) for i in range(1, N_ARMS + 1)]
    return tuple(_signed_filter(theta, signs) for signs in product(*choices))


def arm_operator(channel):
    """K = M1 x M2 x M3 with Mi = A(theta) on turbulent arms and I elsewhere."""
    return _filter(channel.theta, channel.arms).copy()


def _renormalize(m):
    tr = np.trace(m)
    if abs(tr) < ZERO_TRACE:
        raise ValueError("turbulence output has vanishing trace")
    return m / tr


def apply_turbulence(rho, channel):
    """Send a normalized three-qubit state through ``channel``."""
    if rho.n_qubits != N_ARMS:
        raise ValueError(f"turbulence acts on 3-qubit states, got {rho.n_qubits} qubits")
    if not rho.normalized:
        raise ValueError("apply_turbulence needs a normalized input state")
    m = rho.matrix
    if channel.mode is Mode.LITERAL:
        k = _filter(channel.theta, channel.arms)
        return DensityMatrix(N_ARMS, _renormalize(m @ k), normalized=False)
    if channel.mode is Mode.CONJUGATE:
        k = _filter(channel.theta, channel.arms)
        out = k @ m @ k.conj().T
    else:
        out = sum(k @ m @ k.conj().T for k in _stochastic_branches(channel.theta, channel.arms))
    out = _renormalize(out)
    out = (out + out.conj().T) / 2
    return DensityMatrix(N_ARMS, out)
