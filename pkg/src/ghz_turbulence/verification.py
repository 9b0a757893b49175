"""Built-in invariant suite behind ``ghz-turbulence verify``.

Each check reports the worst deviation it measured and the tolerance it was
held to. The random checks draw from a fixed seed so reruns are identical.
"""
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import measures as M
from . import qmat
from .states import DensityMatrix, PureState, ghz_state, random_pure_state, to_density, w_state, werner_state
from .turbulence import Mode, TurbulenceChannel, apply_turbulence

SEED = 20190417
ALL_ARM_SETS = [frozenset(c) for r in (1, 2, 3) for c in combinations((1, 2, 3), r)]


@dataclass(frozen=True)
class CheckResult:
    name: str
    worst: float
    tolerance: float

    @property
    def passed(self):
        return bool(np.isfinite(self.worst)) and self.worst < self.tolerance

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name:<34s} worst={self.worst:.3e}  tol={self.tolerance:.0e}"


def _p_grid():
    return np.linspace(0.0, 1.0, 101)


def wootters_closed_form():
    worst = max(abs(M.concurrence(werner_state(p, 2)) - max(0.0, (3 * p - 1) / 2)) for p in _p_grid())
    return CheckResult("wootters_closed_form", worst, 1e-10)


def werner_purity_closed_form():
    worst = 0.0
    for n in (2, 3):
        d = 2 ** n
        for p in _p_grid():
            expected = p * p + 2 * p * (1 - p) / d + (1 - p) ** 2 / d
            worst = max(worst, abs(M.purity(werner_state(p, n)) - expected))
    return CheckResult("werner_purity_closed_form", worst, 1e-12)


def werner_spectrum():
    worst = 0.0
    for n in (2, 3):
        d = 2 ** n
        for p in _p_grid():
            values = qmat.hermitian_eigenvalues(werner_state(p, n).matrix)
            expected = np.full(d, (1 - p) / d)
            expected[-1] += p
            worst = max(worst, float(np.max(np.abs(values - expected))))
    return CheckResult("werner_spectrum", worst, 1e-10)


def three_tangle_anchors():
    worst = max(abs(M.three_tangle(ghz_state()) - 1.0), abs(M.three_tangle(w_state())))
    return CheckResult("three_tangle_anchors", worst, 1e-12)


def ckw_monogamy(n_states=1000, seed=SEED):
    rng = np.random.default_rng(seed)
    worst = max(abs(M.monogamy_report(random_pure_state(3, rng)).monogamy_gap) for _ in range(n_states))
    return CheckResult(f"ckw_monogamy_{n_states}_random", worst, 1e-8)


def three_tangle_phase_invariance(n_states=100, seed=SEED + 1):
    rng = np.random.default_rng(seed)
    bits = np.array([[(i >> (2 - q)) & 1 for q in range(3)] for i in range(8)])
    worst = 0.0
    for _ in range(n_states):
        psi = random_pure_state(3, rng)
        qubit = rng.integers(3)
        phase = np.exp(1j * rng.uniform(0, 2 * np.pi))
        amps = np.where(bits[:, qubit] == 1, phase, 1.0) * psi.amplitudes
        worst = max(worst, abs(M.three_tangle(PureState(3, amps)) - M.three_tangle(psi)))
    return CheckResult("three_tangle_phase_invariance", worst, 1e-10)


def concurrence_swap_symmetry(n_states=100, seed=SEED + 2):
    rng = np.random.default_rng(seed)
    swap = np.eye(4)[[0, 2, 1, 3]]
    worst = 0.0
    for _ in range(n_states):
        # mixed two-qubit state: reduction of a random three-qubit pure state
        rho = DensityMatrix(2, qmat.partial_trace(to_density(random_pure_state(3, rng)).matrix, 3, [0, 1]))
        swapped = DensityMatrix(2, swap @ rho.matrix @ swap)
        worst = max(worst, abs(M.concurrence(rho) - M.concurrence(swapped)))
    return CheckResult("concurrence_swap_symmetry", worst, 1e-10)


def channel_identity():
    rho = to_density(ghz_state())
    worst = 0.0
    for mode in Mode:
        for arms in ALL_ARM_SETS:
            out = apply_turbulence(rho, TurbulenceChannel(0.0, arms, mode))
            worst = max(worst, float(np.max(np.abs(out.matrix - rho.matrix))))
    return CheckResult("channel_identity_theta0", worst, 1e-12)


def conjugate_purity(n_states=100, seed=SEED + 3):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_states):
        rho = to_density(random_pure_state(3, rng))
        channel = TurbulenceChannel(rng.uniform(0, np.pi / 2), ALL_ARM_SETS[rng.integers(7)], Mode.CONJUGATE)
        worst = max(worst, abs(M.purity(apply_turbulence(rho, channel)) - 1.0))
    return CheckResult("conjugate_purity_preservation", worst, 1e-10)


def stochastic_valid_state():
    rho = to_density(ghz_state())
    worst = 0.0
    for theta in np.linspace(0, np.pi, 21):
        for arms in ALL_ARM_SETS:
            out = apply_turbulence(rho, TurbulenceChannel(theta, arms, Mode.STOCHASTIC)).matrix
            values = qmat.hermitian_eigenvalues(out)
            worst = max(worst, qmat.hermiticity_error(out), abs(np.trace(out) - 1), max(0.0, -values[0]))
    return CheckResult("stochastic_valid_state", worst, 1e-10)


def _stochastic_entropies(thetas, arm_sets):
    rho = to_density(ghz_state())
    return np.array([[M.linear_entropy(apply_turbulence(rho, TurbulenceChannel(t, a, Mode.STOCHASTIC)))
                      for t in thetas] for a in arm_sets])


def stochastic_monotone():
    entropies = _stochastic_entropies(np.linspace(0, np.pi / 2, 50), ["1", "12", "123"])
    worst_drop = max(0.0, float(-np.min(np.diff(entropies, axis=1))))
    worst_order = max(0.0, float(-np.min(np.diff(entropies, axis=0))))
    return [CheckResult("stochastic_entropy_monotone", worst_drop, 1e-10),
            CheckResult("stochastic_arm_count_ordering", worst_order, 1e-10)]


def arm_symmetry():
    rho = to_density(ghz_state())
    worst = 0.0
    for count in (1, 2):
        same = [a for a in ALL_ARM_SETS if len(a) == count]
        for theta in np.linspace(0.1, 1.5, 10):
            reports = [np.array(list(M.state_report(apply_turbulence(rho, TurbulenceChannel(theta, a))).as_dict().values()))
                       for a in same]
            for r in reports[1:]:
                worst = max(worst, float(np.max(np.abs(r - reports[0]))))
    return CheckResult("arm_permutation_symmetry", worst, 1e-10)


def sequential_simultaneous():
    rho = to_density(ghz_state())
    worst = 0.0
    for mode in (Mode.CONJUGATE, Mode.STOCHASTIC):
        for theta in np.linspace(0.1, 1.5, 8):
            step = apply_turbulence(apply_turbulence(rho, TurbulenceChannel(theta, {1}, mode)),
                                    TurbulenceChannel(theta, {2}, mode))
            once = apply_turbulence(rho, TurbulenceChannel(theta, {1, 2}, mode))
            worst = max(worst, float(np.max(np.abs(step.matrix - once.matrix))))
    return CheckResult("sequential_equals_simultaneous", worst, 1e-10)


def run_checks():
    results = [
        wootters_closed_form(),
        werner_purity_closed_form(),
        werner_spectrum(),
        three_tangle_anchors(),
        ckw_monogamy(),
        three_tangle_phase_invariance(),
        concurrence_swap_symmetry(),
        channel_identity(),
        conjugate_purity(),
        stochastic_valid_state(),
        *stochastic_monotone(),
        arm_symmetry(),
        sequential_simultaneous(),
    ]
    return results


def verify(stream=None):
    """Run every check, print one line each, return True when all pass."""
    results = run_checks()
    for r in results:
        print(r.line(), file=stream)
    failed = [r.name for r in results if not r.passed]
    if failed:
        print(f"{len(failed)} check(s) failed: {', '.join(failed)}", file=stream)
    else:
        print(f"all {len(results)} checks passed", file=stream)
    return not failed
