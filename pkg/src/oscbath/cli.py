"""Command-line interface: temperature sweeps, J-function probes, and
zero-point values.

Subcommands:

* ``sweep``     -- tabulate F, S, U, C over a temperature grid, CSV or JSON
* ``jfun``      -- evaluate the Stieltjes J-function by a chosen route
* ``zeropoint`` -- zero-point energy of a bath (or its divergence notice)

Exit codes: 0 success, 2 invalid configuration, 3 numerical failure,
4 divergent quantity requested.  Output for a fixed configuration is
byte-identical between runs.
"""

from __future__ import annotations

import argparse
import sys

from . import baths, stieltjes, thermo
from .quadrature import IntegrandEvaluationError, QuadratureConvergenceError

__all__ = ["main", "run_sweep"]

# CODATA values; k is exact in the SI, hbar follows from the exact h.
HBAR_SI = 1.054571817e-34     # J s
K_BOLTZMANN_SI = 1.380649e-23  # J / K

_METHOD_ORDER = ("exact_j", "exact_quadrature", "low_T_series", "high_T_series")

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NUMERICAL = 3
EXIT_DIVERGENT = 4


class _ConfigError(ValueError):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oscbath",
        description="Thermodynamics of a damped quantum oscillator in "
                    "Ohmic, single-relaxation-time, and blackbody heat baths")
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="tabulate F, S, U, C over a "
                                         "temperature grid")
    sweep.add_argument("--config", help="key=value file; command-line flags "
                                        "take precedence")
    sweep.add_argument("--model", choices=("ohmic", "srt", "qed"))
    sweep.add_argument("--gamma", type=float, help="friction, units of omega0")
    sweep.add_argument("--tau", type=float,
                       help="relaxation time times omega0 (srt)")
    sweep.add_argument("--omega-prime", type=float,
                       help="cutoff Omega'/omega0 (qed)")
    sweep.add_argument("--theta-min", type=float)
    sweep.add_argument("--theta-max", type=float)
    sweep.add_argument("--points", type=int)
    sweep.add_argument("--log", action="store_true", default=None,
                       help="log-spaced temperature grid")
    sweep.add_argument("--method", help="comma list from "
                                        f"{{{','.join(_METHOD_ORDER)}}}")
    sweep.add_argument("--format", choices=("csv", "json"))
    sweep.add_argument("--units", choices=("reduced", "si"))
    sweep.add_argument("--omega0-hz", type=float,
                       help="omega0 in rad/s, required for SI units")

    jfun = sub.add_parser("jfun", help="evaluate the Stieltjes J-function")
    jfun.add_argument("re", type=float)
    jfun.add_argument("im", type=float)
    jfun.add_argument("--method", default="auto",
                      choices=("auto", "quadrature", "loggamma", "lanczos",
                               "series", "asymptotic"))
    jfun.add_argument("--terms", type=int, default=None,
                      help="series/asymptotic term count")

    zp = sub.add_parser("zeropoint", help="zero-point energy of a bath")
    zp.add_argument("--model", required=True, choices=("ohmic", "srt", "qed"))
    zp.add_argument("--gamma", type=float, required=True)
    zp.add_argument("--tau", type=float)
    zp.add_argument("--omega-prime", type=float)
    return parser


# ---------------------------------------------------------------- sweep ----

_SWEEP_DEFAULTS = {
    "model": None, "gamma": None, "tau": None, "omega_prime": None,
    "theta_min": 0.1, "theta_max": 10.0, "points": 20, "log": False,
    "method": "exact_j", "format": "csv", "units": "reduced",
    "omega0_hz": None,
}
_CONFIG_TYPES = {
    "gamma": float, "tau": float, "omega_prime": float,
    "theta_min": float, "theta_max": float, "omega0_hz": float,
    "points": int,
}


def _read_config(path: str) -> dict:
    values = {}
    try:
        with open(path, encoding="utf-8") as handle:
            for lineno, raw in enumerate(handle, 1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise _ConfigError(
                        f"{path}:{lineno}: expected key=value, got {line!r}")
                key, _, value = line.partition("=")
                key = key.strip().replace("-", "_")
                value = value.strip()
                if key not in _SWEEP_DEFAULTS:
                    raise _ConfigError(f"{path}:{lineno}: unknown key {key!r}")
                if key == "log":
                    values[key] = value.lower() in ("1", "true", "yes", "on")
                elif key in _CONFIG_TYPES:
                    values[key] = _CONFIG_TYPES[key](value)
                else:
                    values[key] = value
    except OSError as exc:
        raise _ConfigError(f"cannot read config file: {exc}") from exc
    return values


def _merge_sweep_options(args) -> dict:
    config = _read_config(args.config) if args.config else {}
    merged = {}
    for key, fallback in _SWEEP_DEFAULTS.items():
        flag_value = getattr(args, key)
        if flag_value is not None:
            merged[key] = flag_value
        elif key in config:
            merged[key] = config[key]
        else:
            merged[key] = fallback
    return merged


def _bath_from_options(opt) -> tuple[baths.CanonicalBath, str]:
    model = opt["model"]
    if model is None:
        raise _ConfigError("--model is required (ohmic|srt|qed)")
    if opt["gamma"] is None:
        raise _ConfigError("--gamma is required")
    try:
        if model == "ohmic":
            spec = baths.OhmicSpec(gamma=opt["gamma"])
        elif model == "srt":
            if opt["tau"] is None:
                raise _ConfigError("--tau is required for the srt model")
            spec = baths.SingleRelaxationSpec(gamma=opt["gamma"], tau=opt["tau"])
        else:
            if opt["omega_prime"] is None:
                raise _ConfigError("--omega-prime is required for the qed model")
            spec = baths.QEDSpec(gamma=opt["gamma"],
                                 omega_prime=opt["omega_prime"])
        return baths.canonicalize(spec), model
    except ValueError as exc:
        raise _ConfigError(str(exc)) from exc


def _theta_grid(opt) -> list[float]:
    lo, hi, count = opt["theta_min"], opt["theta_max"], opt["points"]
    if not lo > 0.0:
        raise _ConfigError(f"theta-min must be > 0 (got {lo!r})")
    if count < 1:
        raise _ConfigError(f"points must be >= 1 (got {count!r})")
    if count == 1:
        return [lo]
    if hi < lo:
        raise _ConfigError("theta-max must be >= theta-min")
    if opt["log"]:
        ratio = (hi / lo) ** (1.0 / (count - 1))
        return [lo * ratio ** i for i in range(count)]
    step = (hi - lo) / (count - 1)
    return [lo + step * i for i in range(count)]


def _methods(opt) -> list[str]:
    requested = {name.strip() for name in opt["method"].split(",") if name.strip()}
    unknown = requested.difference(_METHOD_ORDER)
    if unknown:
        raise _ConfigError(f"unknown method(s): {', '.join(sorted(unknown))}")
    if not requested:
        raise _ConfigError("no methods requested")
    return [name for name in _METHOD_ORDER if name in requested]


def _evaluate(bath, model, theta, method) -> thermo.ThermoPoint:
    if method in ("exact_j", "exact_quadrature"):
        return thermo.thermo_point(bath, theta, method)
    regime = "low_T" if method == "low_T_series" else "high_T"
    return thermo.series_point(bath, theta, regime, model)


def run_sweep(opt) -> str:
    """Compute a sweep from merged options and render it; returns the full
    output text (deterministic for a fixed configuration)."""
    bath, model = _bath_from_options(opt)
    grid = _theta_grid(opt)
    methods = _methods(opt)
    si = opt["units"] == "si"
    if si:
        if not opt["omega0_hz"] or opt["omega0_hz"] <= 0.0:
            raise _ConfigError("SI units need --omega0-hz > 0")
        energy = HBAR_SI * opt["omega0_hz"]        # hbar omega0 in J
        kelvin_per_theta = energy / K_BOLTZMANN_SI

    rows = []
    for theta in grid:
        for method in methods:
            point = _evaluate(bath, model, theta, method)
            row = {"theta": theta, "F": point.F, "S": point.S,
                   "U": point.U, "C": point.C,
                   "method": method, "model": model}
            if si:
                row["T_kelvin"] = theta * kelvin_per_theta
                row["F"] *= energy
                row["U"] *= energy
                row["S"] *= K_BOLTZMANN_SI
                row["C"] *= K_BOLTZMANN_SI
            rows.append(row)

    columns = ["theta", "T_kelvin", "F", "S", "U", "C", "method", "model"] \
        if si else ["theta", "F", "S", "U", "C", "method", "model"]
    if opt["format"] == "csv":
        return _render_csv(rows, columns)
    return _render_json(rows, columns, opt, model)


def _render_csv(rows, columns) -> str:
    lines = [",".join(columns)]
    for row in rows:
        cells = []
        for name in columns:
            value = row[name]
            cells.append(value if isinstance(value, str) else f"{value:.11e}")
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _json_scalar(value) -> str:
    if isinstance(value, str):
        return f'"{value}"'
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if value is None:
        return "null"
    return f"{value:.16e}"     # 17 significant digits: exact float round trip


def _render_json(rows, columns, opt, model) -> str:
    config_keys = ("model", "gamma", "tau", "omega_prime", "theta_min",
                   "theta_max", "points", "log", "method", "units",
                   "omega0_hz")
    config_items = ", ".join(f'"{key}": {_json_scalar(opt[key])}'
                             for key in config_keys)
    row_texts = []
    for row in rows:
        items = ", ".join(f'"{name}": {_json_scalar(row[name])}'
                          for name in columns)
        row_texts.append("    {" + items + "}")
    body = ",\n".join(row_texts)
    return ("{\n  \"config\": {" + config_items + "},\n"
            "  \"rows\": [\n" + body + "\n  ]\n}\n")


def _cmd_sweep(args) -> int:
    output = run_sweep(_merge_sweep_options(args))
    sys.stdout.write(output)
    return EXIT_OK


# ----------------------------------------------------------------- jfun ----

def _cmd_jfun(args) -> int:
    z = complex(args.re, args.im)
    bound = None
    if args.method == "auto":
        value, name = stieltjes.j_auto_named(z)
    elif args.method == "quadrature":
        value, name = stieltjes.j_quadrature(z), "quadrature"
    elif args.method == "loggamma":
        value, name = stieltjes.j_loggamma(z), "loggamma"
    elif args.method == "lanczos":
        value, name = stieltjes.j_lanczos(z), "lanczos"
    elif args.method == "series":
        value = stieltjes.j_series_small(z, args.terms or 60)
        name = "series"
    else:
        value, bound = stieltjes.j_asymptotic(z, args.terms or 11)
        name = "asymptotic"
    print(f"J({args.re:g}{args.im:+g}j) = {value.real:.14e} {value.imag:+.14e}j")
    print(f"method: {name}")
    if bound is not None:
        print(f"truncation bound: {bound:.6e}")
    return EXIT_OK


# ------------------------------------------------------------ zeropoint ----

def _cmd_zeropoint(args) -> int:
    if args.model == "ohmic":
        if args.tau is None:
            raise _ConfigError("--tau is required for the ohmic zero point "
                               "(log-divergent limit)")
        value = thermo.zero_point_ohmic_asymptotic(1.0, args.gamma, args.tau)
        print(f"zero_point_asymptotic = {value:.14e}  "
              f"(tau = {args.tau:g}; diverges like -log tau as tau -> 0)")
        return EXIT_OK
    if args.model == "srt":
        if args.tau is None:
            raise _ConfigError("--tau is required for the srt model")
        bath = baths.canonicalize(
            baths.SingleRelaxationSpec(gamma=args.gamma, tau=args.tau))
        value = thermo.zero_point(bath)
        print(f"zero_point = {value:.14e}")
        return EXIT_OK
    if args.omega_prime is None:
        raise _ConfigError("--omega-prime is required for the qed model")
    bath = baths.canonicalize(
        baths.QEDSpec(gamma=args.gamma, omega_prime=args.omega_prime))
    thermo.zero_point(bath)          # raises DivergenceError
    raise AssertionError("unreachable: QED zero point must diverge")


# ----------------------------------------------------------------- main ----

def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {"sweep": _cmd_sweep, "jfun": _cmd_jfun,
                "zeropoint": _cmd_zeropoint}
    try:
        return handlers[args.command](args)
    except thermo.DivergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIVERGENT
    except (QuadratureConvergenceError, IntegrandEvaluationError,
            ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (_ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
