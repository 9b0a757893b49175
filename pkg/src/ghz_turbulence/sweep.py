"""Turbulence-strength sweeps over arm configurations, Werner reference curves, CSV output."""
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, fields

import numpy as np

from . import __version__
from .measures import (
    linear_entropy,
    linear_entropy_generalized,
    mixed_three_tangle_estimate,
    pairwise_tangles,
    state_report,
    tangle,
)
from .states import ghz_state, to_density, werner_state
from .turbulence import Mode, TurbulenceChannel, apply_turbulence, arms_label, parse_arms

ENTROPY_VARIANTS = ("four-thirds", "generalized")
TANGLE_ESTIMATORS = ("dominant", "pairwise")
_TANGLE_ALIASES = {"dominant_eigenvector": "dominant"}


class ConfigError(ValueError):
    """Invalid sweep or curve configuration."""


@dataclass(frozen=True)
class SweepConfig:
    theta_min: float = 0.0
    theta_max: float = math.pi / 2
    steps: int = 200
    arm_sets: tuple = ("1", "12", "123")
    mode: str = "stochastic"
    entropy_variant: str = "four-thirds"
    tangle_estimator: str = "dominant"
    output_path: str = None

    def __post_init__(self):
        try:
            theta_min, theta_max = float(self.theta_min), float(self.theta_max)
            steps = int(self.steps)
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"bad numeric setting: {exc}") from None
        if not (math.isfinite(theta_min) and math.isfinite(theta_max)):
            raise ConfigError("theta bounds must be finite")
        if not 0.0 <= theta_min <= theta_max <= math.pi:
            raise ConfigError(f"need 0 <= theta_min <= theta_max <= pi, got [{theta_min}, {theta_max}]")
        if steps < 1 or steps != self.steps:
            raise ConfigError(f"steps must be a positive integer, got {self.steps!r}")
        arm_sets = self.arm_sets
        if isinstance(arm_sets, str):
            arm_sets = [a for a in arm_sets.split(",") if a.strip()]
        if not arm_sets:
            raise ConfigError("arm_sets must name at least one arm set")
        try:
            labels = tuple(dict.fromkeys(arms_label(a) for a in arm_sets))
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        try:
            mode = Mode(self.mode).value
        except ValueError:
            raise ConfigError(f"unknown mode {self.mode!r}; use one of {[m.value for m in Mode]}") from None
        if self.entropy_variant not in ENTROPY_VARIANTS:
            raise ConfigError(f"entropy_variant must be one of {ENTROPY_VARIANTS}, got {self.entropy_variant!r}")
        estimator = _TANGLE_ALIASES.get(self.tangle_estimator, self.tangle_estimator)
        if estimator not in TANGLE_ESTIMATORS:
            raise ConfigError(f"tangle_estimator must be one of {TANGLE_ESTIMATORS}, got {self.tangle_estimator!r}")
        for name, value in [("theta_min", theta_min), ("theta_max", theta_max), ("steps", steps),
                            ("arm_sets", labels), ("mode", mode), ("tangle_estimator", estimator)]:
            object.__setattr__(self, name, value)

    def thetas(self):
        if self.steps == 1:
            return np.array([self.theta_min])
        return np.linspace(self.theta_min, self.theta_max, self.steps)

    def to_json(self):
        d = asdict(self)
        d["arm_sets"] = list(self.arm_sets)
        return json.dumps(d, sort_keys=True)

    @classmethod
    def from_mapping(cls, data):
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(f"unknown config keys: {unknown}")
        return cls(**data)


def load_config(path, **overrides):
    """Read a JSON config file and apply non-None ``overrides`` on top of it."""
    data = {}
    if path is not None:
        try:
            with open(path) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from None
        if not isinstance(data, dict):
            raise ConfigError("config file must hold a JSON object")
    data.update({k: v for k, v in overrides.items() if v is not None})
    return SweepConfig.from_mapping(data)


@dataclass(frozen=True)
class SweepRecord:
    theta: float
    arms: str
    mode: str
    purity: float
    linear_entropy: float
    linear_entropy_generalized: float
    tangle_ab: float
    tangle_ac: float
    tangle_bc: float
    three_tangle_estimate: float
    residual_tangle: float
    monogamy_gap: float
    entropy: float
    tangle: float


SWEEP_COLUMNS = tuple(f.name for f in fields(SweepRecord))


def _selected(config, report):
    entropy = report.linear_entropy if config.entropy_variant == "four-thirds" else report.linear_entropy_generalized
    if config.tangle_estimator == "dominant":
        tau = report.three_tangle
    else:
        tau = (report.tangle_ab + report.tangle_ac + report.tangle_bc) / 3
    return entropy, tau


def sweep_point(theta, arms, config):
    channel = TurbulenceChannel(float(theta), parse_arms(arms), config.mode)
    rho = apply_turbulence(to_density(ghz_state()), channel)
    report = state_report(rho)
    entropy, tau = _selected(config, report)
    return SweepRecord(
        theta=float(theta),
        arms=arms_label(arms),
        mode=config.mode,
        purity=report.purity,
        linear_entropy=report.linear_entropy,
        linear_entropy_generalized=report.linear_entropy_generalized,
        tangle_ab=report.tangle_ab,
        tangle_ac=report.tangle_ac,
        tangle_bc=report.tangle_bc,
        three_tangle_estimate=report.three_tangle,
        residual_tangle=report.residual_tangle,
        monogamy_gap=report.monogamy_gap,
        entropy=entropy,
        tangle=tau,
    )


def run_sweep(config, workers=1):
    """Evaluate every (arm set, theta) pair on the GHZ state.

    Records come back sorted by arm label, then theta, whatever ``workers`` is.
    """
    tasks = [(theta, arms) for arms in config.arm_sets for theta in config.thetas()]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(lambda t: sweep_point(t[0], t[1], config), tasks))
    else:
        records = [sweep_point(theta, arms, config) for theta, arms in tasks]
    return sorted(records, key=lambda r: (r.arms, r.theta))


def werner_curve(n_qubits, steps, entropy_variant="four-thirds", tangle_estimator="dominant"):
    """Rows ``(p, entropy, tangle)`` for p on an inclusive grid over [0, 1].

    Two qubits: tangle is the squared concurrence. Three qubits: the selected
    mixed-state estimator (dominant eigenvector three-tangle, or the mean of
    the pairwise tangles).
    """
    if n_qubits not in (2, 3):
        raise ConfigError(f"Werner curves are defined for 2 or 3 qubits, got {n_qubits}")
    if int(steps) != steps or steps < 2:
        raise ConfigError(f"steps must be an integer >= 2, got {steps}")
    if entropy_variant not in ENTROPY_VARIANTS:
        raise ConfigError(f"entropy_variant must be one of {ENTROPY_VARIANTS}, got {entropy_variant!r}")
    tangle_estimator = _TANGLE_ALIASES.get(tangle_estimator, tangle_estimator)
    if tangle_estimator not in TANGLE_ESTIMATORS:
        raise ConfigError(f"tangle_estimator must be one of {TANGLE_ESTIMATORS}, got {tangle_estimator!r}")
    entropy_fn = linear_entropy if entropy_variant == "four-thirds" else linear_entropy_generalized
    rows = []
    for p in np.linspace(0.0, 1.0, int(steps)):
        rho = werner_state(float(p), n_qubits)
        if n_qubits == 2:
            tau = tangle(rho)
        elif tangle_estimator == "dominant":
            tau = mixed_three_tangle_estimate(rho)
        else:
            tau = sum(pairwise_tangles(rho.matrix).values()) / 3
        rows.append((float(p), entropy_fn(rho), tau))
    return rows


def format_number(x):
    """17 significant digits; negative zero printed as 0."""
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"refusing to write non-finite value {x}")
    return format(x + 0.0, ".17g")


def _manifest(kind, settings):
    return f"# ghz_turbulence {__version__} {kind} {settings}\n"


def sweep_csv(records, config):
    lines = [_manifest("sweep", config.to_json()), ",".join(SWEEP_COLUMNS) + "\n"]
    for r in records:
        row = []
        for name in SWEEP_COLUMNS:
            value = getattr(r, name)
            row.append(value if isinstance(value, str) else format_number(value))
        lines.append(",".join(row) + "\n")
    return "".join(lines)


def werner_csv(rows, n_qubits, steps, entropy_variant="four-thirds", tangle_estimator="dominant"):
    settings = json.dumps({"n_qubits": n_qubits, "steps": steps, "entropy_variant": entropy_variant,
                           "tangle_estimator": tangle_estimator}, sort_keys=True)
    lines = [_manifest("werner-curve", settings), "p,linear_entropy,tangle\n"]
    lines += [",".join(format_number(v) for v in row) + "\n" for row in rows]
    return "".join(lines)


def write_text(text, path):
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", newline="\n") as fh:
        fh.write(text)
