"""Command-line entry point: ``ghz-turbulence {sweep,werner-curve,verify}``.

Exit codes: 0 success, 1 verification failure, 2 configuration error.
"""
import argparse
import sys

from .sweep import (
    ENTROPY_VARIANTS,
    TANGLE_ESTIMATORS,
    ConfigError,
    load_config,
    run_sweep,
    sweep_csv,
    werner_csv,
    werner_curve,
    write_text,
)
from .turbulence import Mode
from .verification import verify

EXIT_OK, EXIT_FAILED, EXIT_CONFIG = 0, 1, 2


def build_parser():
    parser = argparse.ArgumentParser(prog="ghz-turbulence", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sw = sub.add_parser("sweep", help="sweep turbulence strength on the GHZ state, write CSV")
    sw.add_argument("--theta-min", type=float)
    sw.add_argument("--theta-max", type=float)
    sw.add_argument("--steps", type=int)
    sw.add_argument("--arms", help="comma list of arm sets, e.g. 1,12,123")
    sw.add_argument("--mode", choices=[m.value for m in Mode])
    sw.add_argument("--entropy", choices=ENTROPY_VARIANTS)
    sw.add_argument("--tangle", choices=TANGLE_ESTIMATORS)
    sw.add_argument("--config", help="JSON file with SweepConfig fields; flags override it")
    sw.add_argument("--workers", type=int, default=1)
    sw.add_argument("--out", help="output CSV path (default: stdout)")

    wc = sub.add_parser("werner-curve", help="write the analytic Werner reference curve")
    wc.add_argument("--qubits", type=int, choices=(2, 3), default=3)
    wc.add_argument("--steps", type=int, default=101)
    wc.add_argument("--entropy", choices=ENTROPY_VARIANTS, default="four-thirds")
    wc.add_argument("--tangle", choices=TANGLE_ESTIMATORS, default="dominant")
    wc.add_argument("--out")

    sub.add_parser("verify", help="run the built-in invariant suite")
    return parser


def _sweep(args):
    config = load_config(
        args.config,
        theta_min=args.theta_min,
        theta_max=args.theta_max,
        steps=args.steps,
        arm_sets=args.arms,
        mode=args.mode,
        entropy_variant=args.entropy,
        tangle_estimator=args.tangle,
        output_path=args.out,
    )
    if args.workers < 1:
        raise ConfigError("--workers must be at least 1")
    records = run_sweep(config, workers=args.workers)
    write_text(sweep_csv(records, config), config.output_path)


def _werner(args):
    rows = werner_curve(args.qubits, args.steps, args.entropy, args.tangle)
    write_text(werner_csv(rows, args.qubits, args.steps, args.entropy, args.tangle), args.out)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "sweep":
            _sweep(args)
        elif args.command == "werner-curve":
            _werner(args)
        else:
            return EXIT_OK if verify(sys.stdout) else EXIT_FAILED
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"cannot write output: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
