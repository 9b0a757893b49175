"""Entanglement loss of a three-photon GHZ state under hyperbolic polarization turbulence."""
__version__ = "0.1.0"

from .measures import (  # noqa: E402
    MeasureReport,
    concurrence,
    linear_entropy,
    linear_entropy_generalized,
    mixed_three_tangle_estimate,
    monogamy_report,
    purity,
    residual_tangle,
    state_report,
    tangle,
    three_tangle,
)
from .states import (  # noqa: E402
    DensityMatrix,
    PureState,
    basis_state,
    bell_state,
    ghz_state,
    to_density,
    w_state,
    werner_state,
)
from .sweep import SweepConfig, SweepRecord, run_sweep, werner_curve  # noqa: E402
from .turbulence import Mode, TurbulenceChannel, apply_turbulence, arm_operator, turbulence_operator  # noqa: E402
