"""Command-line front end: ``qubitgauge {evolve,phase,gauge-check,invariant,sweep}``.

Exit codes: 0 all checks pass, 1 a residual failed its tolerance,
2 usage or configuration error, 3 degenerate spectrum or singular coupling.

Settings resolve as command-line flag > ``--config`` file > built-in default.
The config file is flat ``key = value`` lines using the option names below
with dashes replaced by underscores; list values are space separated.
"""
from __future__ import annotations

import argparse
import configparser
import csv
import io
import json
import math
import sys
from datetime import datetime, timezone
from typing import Any, Callable

import numpy as np

from . import __version__
from .core import (
    Selector,
    TwoLevelParams,
    evolve,
    hamiltonian_elements,
    initial_vector,
    basis_states,
    reconstruct_H,
    rk4_propagate,
    trajectory,
)
from .errors import DegenerateSpectrum, InfiniteCoupling, QubitGaugeError
from .free_energy import (
    aa_invariant,
    aa_invariant_numeric,
    entropy_action_integral,
    free_energy_operator,
    entropy_term,
    thermo_decomposition,
    variance_link,
)
from .gauge import (
    commutator_norm,
    covariance_residual,
    doublet_motion_residual,
    field_strength,
    filtered_evolution_residual,
    gauge_field,
    gauge_transform_doublet,
    tilde_overlap_invariance,
    transformation_law_residual,
)
from .phase import (
    dynamical_phase,
    dynamical_phase_numeric,
    geometric_phase,
    geometric_phase_numeric,
    pancharatnam_trajectory_phase,
    total_phase,
    wrap_angle,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SINGULAR = 0, 1, 2, 3

# Documented tolerances for pass/fail reporting.
TOL = {
    "phase_residual": 1e-9,
    "geometric_numeric": 1e-6,
    "pancharatnam": 1e-4,
    "complementarity_numeric": 2e-6,
    "tilde_overlap_invariance": 1e-12,
    "filtered_evolution_fd": 1e-7,
    "filtered_evolution_analytic": 1e-12,
    "doublet_motion_fd": 1e-7,
    "doublet_motion_analytic": 1e-12,
    "gauge_consistency": 1e-12,
    "gauge_law": 1e-10,
    "covariance_literal": 1e-6,
    "covariance": 1e-6,
    "commutator": 1e-15,
    "doublet_unitarity": 1e-12,
    "field_strength": 1e-14,
    "s_n_numeric": 1e-8,
    "operator": 1e-12,
    "evolve_oracle": 1e-8,
}

COMMON_DEFAULTS: dict[str, Any] = {
    "omega1": 1.0,
    "omega2": 2.0,
    "theta": math.pi / 6,
    "gamma1": 0.0,
    "gamma2": 0.0,
    "degrees": False,
    "format": "json",
}

COMMAND_DEFAULTS: dict[str, dict[str, Any]] = {
    "evolve": {"t_max": None, "points": 100, "state": "phi", "oracle": False, "dt": 1e-4},
    "phase": {"n": 1, "steps": 100_000, "samples": 10_000},
    "gauge-check": {
        "t": [0.3, 0.9, 1.7],
        "gauge": ["zero", "linear", "sin"],
        "slope": 0.7,
        "f0": 0.0,
        "n": 2,
        "dt": 1e-6,
    },
    "invariant": {"n": 1, "steps": 10_000, "points": 100},
    "sweep": {
        "param": "theta",
        "start": 0.0,
        "stop": math.pi / 2,
        "count": 9,
        "quantity": ["beta_phi", "beta_psi", "total_phase", "dynamical_phase", "s_n"],
        "n": 1,
        "steps": 100_000,
    },
}

SWEEP_QUANTITIES = ("beta_phi", "beta_psi", "total_phase", "dynamical_phase", "s_n")
GAUGE_CHOICES = ("zero", "linear", "sin")


class ConfigError(QubitGaugeError):
    pass


# ---------------------------------------------------------------------------
# configuration
# ---------------------------------------------------------------------------

def read_config_file(path: str) -> dict[str, str]:
    parser = configparser.ConfigParser(interpolation=None, comment_prefixes=("#", ";"))
    try:
        with open(path, encoding="utf-8") as fh:
            parser.read_string("[run]\n" + fh.read())
    except (OSError, configparser.Error) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return dict(parser["run"])


def _coerce(key: str, raw: Any, default: Any) -> Any:
    if not isinstance(raw, str):
        return raw
    text = raw.strip()
    try:
        if isinstance(default, bool):
            lowered = text.lower()
            if lowered not in ("true", "false", "1", "0", "yes", "no"):
                raise ValueError(text)
            return lowered in ("true", "1", "yes")
        if isinstance(default, list):
            items = text.replace(",", " ").split()
            if default and isinstance(default[0], float):
                return [float(x) for x in items]
            return items
        if isinstance(default, int):
            return int(text)
        if isinstance(default, float) or default is None:
            return float(text)
    except ValueError as exc:
        raise ConfigError(f"bad value for {key}: {raw!r}") from exc
    return text


def resolve_config(command: str, args: argparse.Namespace) -> dict[str, Any]:
    defaults = {**COMMON_DEFAULTS, **COMMAND_DEFAULTS[command]}
    from_file = read_config_file(args.config) if args.config else {}
    unknown = set(from_file) - set(defaults)
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")
    cfg: dict[str, Any] = {}
    supplied: set[str] = set()
    for key, default in defaults.items():
        cli_value = getattr(args, key, None)
        if cli_value is not None:
            cfg[key] = cli_value
            supplied.add(key)
        elif key in from_file:
            cfg[key] = _coerce(key, from_file[key], default)
            supplied.add(key)
        else:
            cfg[key] = default
    if cfg.pop("degrees"):
        # built-in defaults are already radians; only user values are converted
        angles = ["theta", "gamma1", "gamma2"]
        if command == "sweep" and cfg["param"] == "theta":
            angles += ["start", "stop"]
        for key in angles:
            if key in supplied:
                cfg[key] = math.radians(cfg[key])
    return cfg


def format_config(cfg: dict[str, Any]) -> str:
    lines = []
    for key, value in cfg.items():
        if key == "format" or value is None:
            continue
        if isinstance(value, list):
            text = " ".join(repr(v) if isinstance(v, float) else str(v) for v in value)
        elif isinstance(value, float):
            text = repr(value)
        else:
            text = str(value).lower() if isinstance(value, bool) else str(value)
        lines.append(f"{key} = {text}")
    return "\n".join(lines) + "\n"


def params_from(cfg: dict[str, Any]) -> TwoLevelParams:
    try:
        return TwoLevelParams(cfg["omega1"], cfg["omega2"], cfg["theta"], cfg["gamma1"], cfg["gamma2"])
    except QubitGaugeError as exc:
        raise ConfigError(str(exc)) from exc


# ---------------------------------------------------------------------------
# commands: each returns (rows, exit_code)
# ---------------------------------------------------------------------------

Rows = list[dict[str, Any]]


def _status(value: float, tol: float) -> str:
    return "pass" if value < tol else "fail"


def cmd_evolve(cfg: dict[str, Any]) -> tuple[Rows, int]:
    p = params_from(cfg)
    if cfg["points"] < 2:
        raise ConfigError("points must be >= 2")
    t_max = cfg["t_max"] if cfg["t_max"] is not None else abs(p.period)
    selector = Selector.parse(cfg["state"])
    times = np.linspace(0.0, t_max, cfg["points"])
    states = trajectory(p, selector, times)
    v0 = initial_vector(p, selector)
    rows: Rows = []
    worst = 0.0
    y = v0.copy()
    t_prev = 0.0
    for t, s in zip(times, states):
        row = {
            "t": float(t),
            "amp0_re": s[0].real, "amp0_im": s[0].imag,
            "amp1_re": s[1].real, "amp1_im": s[1].imag,
            "norm": float(np.linalg.norm(s)),
        }
        ov = complex(np.vdot(v0, s))
        row["overlap_re"], row["overlap_im"] = ov.real, ov.imag
        if cfg["oracle"]:
            try:
                y = rk4_propagate(p, y, float(t) - t_prev, cfg["dt"])
            except QubitGaugeError as exc:
                raise ConfigError(str(exc)) from exc
            t_prev = float(t)
            dev = float(np.max(np.abs(y - s)))
            worst = max(worst, dev)
            row.update({
                "rk4_amp0_re": y[0].real, "rk4_amp0_im": y[0].imag,
                "rk4_amp1_re": y[1].real, "rk4_amp1_im": y[1].imag,
                "rk4_norm": float(np.linalg.norm(y)),
                "deviation": dev,
            })
        rows.append(row)
    code = EXIT_FAIL if cfg["oracle"] and worst >= TOL["evolve_oracle"] else EXIT_OK
    return rows, code


def cmd_phase(cfg: dict[str, Any]) -> tuple[Rows, int]:
    p = params_from(cfg)
    n = cfg["n"]
    rows: Rows = []
    ok = True
    geo_sum = num_sum = 0.0
    for sel in (Selector.PHI, Selector.PSI):
        total = total_phase(p, sel, n)
        dyn = dynamical_phase(p, sel, n)
        geo = geometric_phase(p, sel, n)
        geo_num = geometric_phase_numeric(p, sel, n, steps=cfg["steps"])
        panch = pancharatnam_trajectory_phase(p, sel, n, samples=cfg["samples"])
        residual = abs(total - dyn - geo)
        num_err = abs(geo_num - geo)
        panch_err = float(abs(wrap_angle(panch - geo)))
        ok &= residual < TOL["phase_residual"]
        ok &= num_err < TOL["geometric_numeric"]
        ok &= panch_err < TOL["pancharatnam"]
        geo_sum += geo
        num_sum += geo_num
        rows.append({
            "selector": sel.value, "n": n,
            "total": total, "dynamical": dyn, "geometric": geo, "residual": residual,
            "dynamical_numeric": dynamical_phase_numeric(p, sel, n),
            "geometric_numeric": geo_num, "numeric_error": num_err,
            "pancharatnam": panch, "pancharatnam_error_mod_2pi": panch_err,
        })
    comp_err = abs(num_sum - 2 * math.pi * n)
    ok &= comp_err < TOL["complementarity_numeric"]
    rows.append({
        "selector": "phi+psi", "n": n, "geometric": geo_sum,
        "geometric_numeric": num_sum, "numeric_error": comp_err,
    })
    return rows, EXIT_OK if ok else EXIT_FAIL


def _gauge_choice(name: str, slope: float) -> tuple[Callable[[float], float], Callable[[float], float]]:
    if name == "zero":
        return (lambda t: 0.0), (lambda t: 0.0)
    if name == "linear":
        return (lambda t: slope * t), (lambda t: slope)
    if name == "sin":
        return math.sin, math.cos
    raise ConfigError(f"unknown gauge function {name!r}; choose from {GAUGE_CHOICES}")


def gauge_suite(cfg: dict[str, Any]) -> Rows:
    """Run every gauge-structure residual; g-dependent ones skip at singular theta."""
    p = params_from(cfg)
    rows: Rows = []

    def add(check: str, t: float | None, gauge: str | None, fn: Callable[[], float], tol: float | None):
        row = {"check": check, "t": t, "gauge": gauge, "value": None, "tolerance": tol}
        try:
            value = fn()
        except InfiniteCoupling:
            row["status"] = "skipped: infinite coupling"
        else:
            row["value"] = value
            row["status"] = "info" if tol is None else _status(value, tol)
        rows.append(row)

    choices = [(name, *_gauge_choice(name, cfg["slope"])) for name in cfg["gauge"]]
    T = p.period
    for t in cfg["t"]:
        tau = float(t) % abs(T)
        add("tilde_overlap_invariance", t, None,
            lambda: abs(np.subtract(*tilde_overlap_invariance(p, cfg["f0"], cfg["n"], tau))),
            TOL["tilde_overlap_invariance"])
        add("filtered_evolution_fd", t, None,
            lambda: filtered_evolution_residual(p, cfg["f0"], t, dt=cfg["dt"]),
            TOL["filtered_evolution_fd"])
        add("filtered_evolution_analytic", t, None,
            lambda: filtered_evolution_residual(p, cfg["f0"], t, analytic=True),
            TOL["filtered_evolution_analytic"])
        add("doublet_motion_fd", t, None,
            lambda: doublet_motion_residual(p, t, dt=cfg["dt"]), TOL["doublet_motion_fd"])
        add("doublet_motion_analytic", t, None,
            lambda: doublet_motion_residual(p, t, analytic=True), TOL["doublet_motion_analytic"])
        for name, lam, dlam in choices:
            add("gauge_law", t, name,
                lambda: transformation_law_residual(p, lam, dlam, t), TOL["gauge_law"])
            add("covariance", t, name,
                lambda: covariance_residual(p, lam, dlam, t, dt=cfg["dt"], form="covariant"),
                TOL["covariance"])
            add("covariance_literal", t, name,
                lambda: covariance_residual(p, lam, dlam, t, dt=cfg["dt"], form="literal"),
                TOL["covariance_literal"])
            add("commutator", t, name, lambda: commutator_norm(p, lam(t)), TOL["commutator"])

            def unitarity() -> float:
                z = gauge_transform_doublet(p, lam(t), basis_states(p)).as_array()
                return float(np.max(np.abs(z.conj() @ z.T - np.eye(2))))

            add("doublet_unitarity", t, name, unitarity, TOL["doublet_unitarity"])

    def consistency() -> float:
        f = gauge_field(p)
        return abs(f.g * f.a0 - hamiltonian_elements(p).omega_phipsi)

    add("gauge_consistency", None, None, consistency, TOL["gauge_consistency"])
    grid = np.linspace(0.0, abs(T), 100)
    add("field_strength", None, None, lambda: field_strength(p, grid), TOL["field_strength"])
    for name, lam, dlam in choices:
        def transformed() -> float:
            gauge_field(p)  # the transformed component is only defined for finite g
            return field_strength(p, grid, dlam)

        # only a constant lambda' leaves the transformed component time-constant
        tol = None if name == "sin" else TOL["field_strength"]
        add("field_strength_transformed", None, name, transformed, tol)
    return rows


def cmd_gauge_check(cfg: dict[str, Any]) -> tuple[Rows, int]:
    rows = gauge_suite(cfg)
    statuses = [r["status"] for r in rows]
    if "fail" in statuses:
        return rows, EXIT_FAIL
    if any(s.startswith("skipped") for s in statuses):
        return rows, EXIT_SINGULAR
    return rows, EXIT_OK


def cmd_invariant(cfg: dict[str, Any]) -> tuple[Rows, int]:
    p = params_from(cfg)
    n = cfg["n"]
    s_n = aa_invariant(p, n).s_n
    e = hamiltonian_elements(p)
    grid = np.linspace(0.0, abs(p.period), cfg["points"])
    H = p.hamiltonian
    closure = eig_phi = eig_psi = rebuild = variance = 0.0
    for t in grid:
        F, TS = free_energy_operator(p, t), entropy_term(p, t)
        closure = max(closure, float(np.max(np.abs(F + TS - H))))
        rebuild = max(rebuild, float(np.max(np.abs(reconstruct_H(p, t) - H))))
        phi, psi = evolve(p, "phi", t).vector, evolve(p, "psi", t).vector
        eig_phi = max(eig_phi, float(np.linalg.norm(F @ phi - e.omega_phiphi * phi)))
        eig_psi = max(eig_psi, float(np.linalg.norm(F @ psi - e.omega_psipsi * psi)))
        spread, w = variance_link(p, t)
        variance = max(variance, abs(spread - abs(w)))
    action = entropy_action_integral(p, n, cfg["steps"])
    direct = aa_invariant_numeric(p, n, cfg["steps"])
    thermo = thermo_decomposition(p, 0.0)

    def row(quantity, value, reference, tol):
        err = None if reference is None else abs(value - reference)
        status = "info" if tol is None else _status(err if err is not None else value, tol)
        return {"quantity": quantity, "value": value, "reference": reference,
                "abs_error": err, "tolerance": tol, "status": status}

    rows = [
        row("s_n", s_n, 2 * e.omega_phipsi * n * p.period, TOL["s_n_numeric"]),
        row("entropy_action_integral", action, s_n, TOL["s_n_numeric"]),
        row("aa_integral_numeric", direct, s_n, TOL["s_n_numeric"]),
        row("decomposition_closure", closure, None, TOL["operator"]),
        row("reconstruct_H", rebuild, None, TOL["operator"]),
        row("eigen_relation_phi", eig_phi, None, TOL["operator"]),
        row("eigen_relation_psi", eig_psi, None, TOL["operator"]),
        row("energy_variance", variance, None, TOL["operator"]),
        row("omega_phipsi", e.omega_phipsi, None, None),
        row("temperature", thermo.temperature, None, None),
        row("entropy_coeff", thermo.entropy_coeff, None, None),
    ]
    failed = any(r["status"] == "fail" for r in rows)
    return rows, EXIT_FAIL if failed else EXIT_OK


def _sweep_values(cfg: dict[str, Any]) -> list[float]:
    if cfg["param"] not in ("theta", "omega1", "omega2", "n"):
        raise ConfigError(f"cannot sweep {cfg['param']!r}")
    if cfg["count"] < 2 or cfg["start"] == cfg["stop"]:
        raise ConfigError("sweep needs count >= 2 and start != stop")
    values = np.linspace(cfg["start"], cfg["stop"], cfg["count"])
    if cfg["param"] == "n":
        if np.any(values != np.round(values)) or values.min() < 1:
            raise ConfigError("n sweep must produce integers >= 1")
        return [int(v) for v in values]
    return [float(v) for v in values]


def cmd_sweep(cfg: dict[str, Any]) -> tuple[Rows, int]:
    bad = [q for q in cfg["quantity"] if q not in SWEEP_QUANTITIES]
    if bad:
        raise ConfigError(f"unknown quantities {bad}; choose from {SWEEP_QUANTITIES}")
    values = _sweep_values(cfg)
    rows: Rows = []
    for value in values:
        local = dict(cfg)
        local[cfg["param"]] = value
        p = params_from(local)
        n = local["n"]
        for q in cfg["quantity"]:
            if q in ("beta_phi", "beta_psi"):
                sel = q.split("_")[1]
                closed = geometric_phase(p, sel, n)
                numeric = geometric_phase_numeric(p, sel, n, steps=cfg["steps"])
            elif q == "total_phase":
                closed = -2 * math.pi * n * p.omega1 / p.omega_minus
                numeric = total_phase(p, "phi", n)
            elif q == "dynamical_phase":
                closed = dynamical_phase(p, "phi", n)
                numeric = dynamical_phase_numeric(p, "phi", n)
            else:
                closed = aa_invariant(p, n).s_n
                numeric = entropy_action_integral(p, n)
            rows.append({
                "swept_value": value, "quantity": q, "closed_form": closed,
                "numeric": numeric, "abs_error": abs(closed - numeric),
            })
    return rows, EXIT_OK


COMMANDS: dict[str, Callable[[dict[str, Any]], tuple[Rows, int]]] = {
    "evolve": cmd_evolve,
    "phase": cmd_phase,
    "gauge-check": cmd_gauge_check,
    "invariant": cmd_invariant,
    "sweep": cmd_sweep,
}


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------

def _plain(value: Any) -> Any:
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    return value


def render(command: str, cfg: dict[str, Any], rows: Rows, fmt: str, reproducible: bool) -> str:
    meta: dict[str, Any] = {"command": command, "version": __version__, "config": cfg}
    if not reproducible:
        meta["generated_at"] = datetime.now(timezone.utc).isoformat()
    rows = [{k: _plain(v) for k, v in r.items()} for r in rows]
    if fmt == "json":
        return json.dumps({"meta": meta, "data": rows}, indent=2, allow_nan=False) + "\n"
    columns: list[str] = []
    for r in rows:
        columns.extend(k for k in r if k not in columns)
    buf = io.StringIO()
    buf.write(f"# {json.dumps(meta)}\n")
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow({
            k: "" if r.get(k) is None else (repr(r[k]) if isinstance(r[k], float) else r[k])
            for k in columns
        })
    return buf.getvalue()


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, argument_default=None)
    g = common.add_argument_group("physical parameters")
    g.add_argument("--omega1", type=float)
    g.add_argument("--omega2", type=float)
    g.add_argument("--theta", type=float, help="mixing angle (radians unless --degrees)")
    g.add_argument("--gamma1", type=float)
    g.add_argument("--gamma2", type=float)
    g.add_argument("--degrees", action="store_const", const=True,
                   help="read theta, gamma1, gamma2 (and theta sweep bounds) in degrees")
    o = common.add_argument_group("output")
    o.add_argument("--format", choices=("json", "csv"))
    o.add_argument("--output", metavar="PATH", help="write here instead of stdout")
    o.add_argument("--reproducible", action="store_true",
                   help="omit the timestamp so identical runs give identical bytes")
    o.add_argument("--config", metavar="PATH", help="flat key = value settings file")
    o.add_argument("--save-config", metavar="PATH", help="write the effective settings here")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qubitgauge", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    common = [_common_parser()]

    ev = sub.add_parser("evolve", parents=common, help="tabulate a trajectory",
                        argument_default=None)
    ev.add_argument("--t-max", dest="t_max", type=float, help="end time (default |T|)")
    ev.add_argument("--points", type=int)
    ev.add_argument("--state", choices=("phi", "psi"))
    ev.add_argument("--oracle", action="store_const", const=True,
                    help="add RK4 columns and per-row deviation")
    ev.add_argument("--dt", type=float, help="RK4 step")

    ph = sub.add_parser("phase", parents=common, help="phase decomposition and oracles",
                        argument_default=None)
    ph.add_argument("--n", type=int, help="number of cycles")
    ph.add_argument("--steps", type=int)
    ph.add_argument("--samples", type=int, help="Pancharatnam sample count")

    ga = sub.add_parser("gauge-check", parents=common, help="gauge-structure residual suite",
                        argument_default=None)
    ga.add_argument("--t", type=float, nargs="+", help="evaluation times")
    ga.add_argument("--gauge", nargs="+", choices=GAUGE_CHOICES,
                    help="lambda(t): zero, linear (slope*t) or sin")
    ga.add_argument("--slope", type=float)
    ga.add_argument("--f0", type=float)
    ga.add_argument("--n", type=int)
    ga.add_argument("--dt", type=float, help="central-difference half step")

    inv = sub.add_parser("invariant", parents=common, help="AA invariant and free-energy checks",
                         argument_default=None)
    inv.add_argument("--n", type=int)
    inv.add_argument("--steps", type=int)
    inv.add_argument("--points", type=int, help="t grid for operator identities")

    sw = sub.add_parser("sweep", parents=common, help="closed form vs numeric over a range",
                        argument_default=None)
    sw.add_argument("--param", choices=("theta", "omega1", "omega2", "n"))
    sw.add_argument("--start", type=float)
    sw.add_argument("--stop", type=float)
    sw.add_argument("--count", type=int)
    sw.add_argument("--quantity", nargs="+", choices=SWEEP_QUANTITIES)
    sw.add_argument("--n", type=int)
    sw.add_argument("--steps", type=int)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = resolve_config(args.command, args)
        rows, code = COMMANDS[args.command](cfg)
    except DegenerateSpectrum as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except InfiniteCoupling as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except (QubitGaugeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    fmt = cfg.pop("format")
    text = render(args.command, cfg, rows, fmt, args.reproducible)
    if args.save_config:
        with open(args.save_config, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(format_config(cfg))
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
