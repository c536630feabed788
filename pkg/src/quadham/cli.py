"""Command-line interface.

Subcommands: analyze, spectrum, scan, verify, wavefunction.  Configuration
comes from a JSON file (--config); output is a deterministic JSON envelope
(or a CSV table with --format csv) on stdout or --out.  Exit codes: 0 on
success, 2 for configuration/usage problems, 3 for runtime failures.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

import numpy as np

from . import models, serialize
from .errors import ConfigError, QuadhamError
from .fock import FockTruncation, compare_with_lattice, oracle_spectrum
from .phase_space import PhaseSpaceBasis, QuadraticForm, adjoint_representation
from .spectral import (
    Classification,
    classify_spectrum,
    eigen_decompose,
    spectrum_lattice,
)
from .wavefunctions import (
    apply_quadratic_form,
    build_eigenfunction,
    is_scalar_multiple_exact,
)
from . import tolerances as tol


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", required=True,
                        help="path to a JSON configuration file")
    common.add_argument("--format", choices=("json", "csv"), default="json",
                        help="output format (default json)")
    common.add_argument("--out", default=None,
                        help="write output to this file instead of stdout")
    common.add_argument("--seed", type=int, default=None,
                        help="override the seed of a random-pd configuration")

    p = argparse.ArgumentParser(
        prog="quadham",
        description="Analyse quadratic forms in position/momentum operators.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("analyze", parents=[common],
                   help="classify a form and report its frequency pairs")

    ps = sub.add_parser("spectrum", parents=[common],
                        help="enumerate the predicted energy lattice")
    ps.add_argument("--max-quanta", type=int, default=4,
                    help="largest total quantum number enumerated (default 4)")

    pc = sub.add_parser("scan", parents=[common],
                        help="sweep the coupling and locate phase boundaries")
    pc.add_argument("--from", dest="b_from", type=float, required=True,
                    help="first coupling value")
    pc.add_argument("--to", dest="b_to", type=float, required=True,
                    help="last coupling value")
    pc.add_argument("--steps", type=int, default=11,
                    help="number of samples, endpoints included (default 11)")

    pv = sub.add_parser("verify", parents=[common],
                        help="cross-check the lattice against a truncated "
                             "number-basis matrix")
    pv.add_argument("--n-max", type=int, default=8,
                    help="per-mode occupancy cutoff (default 8)")
    pv.add_argument("--max-quanta", type=int, default=None,
                    help="lattice depth (default: same as --n-max)")
    pv.add_argument("--max-levels", type=int, default=10,
                    help="compare at most this many levels (default 10)")

    pw = sub.add_parser("wavefunction", parents=[common],
                        help="exact eigenfunction of the symmetric model")
    pw.add_argument("m", type=int, help="quanta of the co-rotating ladder")
    pw.add_argument("n", type=int, help="quanta of the counter-rotating ladder")
    return p


# ---- configuration ----------------------------------------------------------

_PRESET_KEYS = {
    "oscillator-b": {"b"},
    "physical": {"m1", "m2", "k1", "k2", "omega"},
    "sb": {"B"},
    "random-pd": {"K", "seed"},
}
_PRESET_OPTIONAL = {
    "oscillator-b": {"mu", "k"},
    "physical": {"hbar"},
    "sb": set(),
    "random-pd": {"spread"},
}


def _load_config(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            cfg = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path} is not valid JSON: {exc}") from exc
    if not isinstance(cfg, dict):
        raise ConfigError("config must be a JSON object")
    return cfg


def _require_number(cfg: dict, key: str) -> float:
    v = cfg.get(key)
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ConfigError(f"config key {key!r} must be a number")
    if not math.isfinite(float(v)):
        raise ConfigError(f"config key {key!r} must be finite")
    return float(v)


def _check_keys(cfg: dict, preset: str) -> None:
    required = _PRESET_KEYS[preset]
    optional = _PRESET_OPTIONAL[preset] | {"preset", "tol_scale"}
    missing = required - set(cfg)
    if missing:
        raise ConfigError(
            f"preset {preset!r} needs key(s): {', '.join(sorted(missing))}"
        )
    unknown = set(cfg) - required - optional
    if unknown:
        raise ConfigError(
            f"unknown key(s) for preset {preset!r}: {', '.join(sorted(unknown))}"
        )


def _build_form(cfg: dict, seed_override: int | None):
    """Returns (form, effective config, model-or-None)."""
    has_preset = "preset" in cfg
    has_explicit = "gamma" in cfg or "offset" in cfg
    if has_preset and has_explicit:
        raise ConfigError("config must use either a preset or an explicit "
                          "gamma, not both")
    if has_preset:
        preset = cfg["preset"]
        if preset not in _PRESET_KEYS:
            raise ConfigError(
                f"unknown preset {preset!r}; expected one of "
                f"{', '.join(sorted(_PRESET_KEYS))}"
            )
        _check_keys(cfg, preset)
        try:
            if preset == "oscillator-b":
                d = models.DimensionlessModel(
                    mu=_require_number(cfg, "mu") if "mu" in cfg else 1.0,
                    k=_require_number(cfg, "k") if "k" in cfg else 1.0,
                    b=_require_number(cfg, "b"),
                )
                return models.build_model(d), dict(cfg), d
            if preset == "physical":
                phys = models.PhysicalParameters(
                    m1=_require_number(cfg, "m1"),
                    m2=_require_number(cfg, "m2"),
                    k1=_require_number(cfg, "k1"),
                    k2=_require_number(cfg, "k2"),
                    omega=_require_number(cfg, "omega"),
                    hbar=_require_number(cfg, "hbar") if "hbar" in cfg else 1.0,
                )
                d = models.reduce_to_dimensionless(phys)
                return models.build_model(d), dict(cfg), d
            if preset == "sb":
                return models.sb_operator(_require_number(cfg, "B")), dict(cfg), None
            # random-pd
            k_modes = cfg["K"]
            if isinstance(k_modes, bool) or not isinstance(k_modes, int):
                raise ConfigError("config key 'K' must be an integer")
            seed = cfg["seed"] if seed_override is None else seed_override
            if isinstance(seed, bool) or not isinstance(seed, int):
                raise ConfigError("config key 'seed' must be an integer")
            spread = cfg.get("spread", [0.6, 1.8])
            if (not isinstance(spread, (list, tuple)) or len(spread) != 2
                    or any(isinstance(s, bool) or not isinstance(s, (int, float))
                           for s in spread)):
                raise ConfigError("config key 'spread' must be [lo, hi]")
            form = models.random_positive_definite_form(
                k_modes, seed, (float(spread[0]), float(spread[1]))
            )
            eff = dict(cfg)
            eff["seed"] = seed
            return form, eff, None
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc

    if "gamma" not in cfg:
        raise ConfigError("config needs either 'preset' or an explicit 'gamma'")
    allowed = {"K", "gamma", "offset", "tol_scale"}
    unknown = set(cfg) - allowed
    if unknown:
        raise ConfigError(
            f"unknown key(s) in explicit config: {', '.join(sorted(unknown))}"
        )
    if "K" not in cfg:
        raise ConfigError("explicit config needs the mode count 'K'")
    k_modes = cfg["K"]
    if isinstance(k_modes, bool) or not isinstance(k_modes, int) or k_modes < 1:
        raise ConfigError("config key 'K' must be a positive integer")
    try:
        g = np.asarray(cfg["gamma"], dtype=float)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"'gamma' must be a numeric matrix: {exc}") from exc
    d = 2 * k_modes
    if g.shape != (d, d):
        raise ConfigError(f"'gamma' must be {d}x{d} for K={k_modes}, "
                          f"got shape {g.shape}")
    if not np.all(np.isfinite(g)):
        raise ConfigError("'gamma' contains non-finite entries")
    dev = float(np.max(np.abs(g - g.T))) if g.size else 0.0
    if dev > tol.machine_zero_tol(float(np.max(np.abs(g))) if g.size else 0.0):
        raise ConfigError(f"'gamma' is not symmetric (deviation {dev:.3e})")
    g = (g + g.T) / 2.0
    offset = 0.0
    if "offset" in cfg:
        offset = _require_number(cfg, "offset")
    form = QuadraticForm(PhaseSpaceBasis(k_modes), g, offset)
    return form, dict(cfg), None


# ---- payload builders -------------------------------------------------------

def _complex_list(values) -> list:
    return [complex(v) for v in values]


def _pair_payload(p) -> dict:
    return {
        "lambda_plus": p.lambda_plus,
        "raising_frequency": p.raising_frequency,
        "norm_constant": p.norm_constant,
        "raising": _complex_list(p.raising.coeffs),
        "lowering": _complex_list(p.lowering.coeffs),
    }


def _cmd_analyze(form, model):
    report = classify_spectrum(form)
    e = eigen_decompose(adjoint_representation(form))
    evals = sorted((complex(v) for v in e.eigenvalues),
                   key=lambda z: (z.real, z.imag))
    gmin = float(np.linalg.eigvalsh(form.gamma)[0])
    results = {
        "K": form.basis.K,
        "classification": report.classification.value,
        "adjoint_eigenvalues": evals,
        "frequency_pairs": [_pair_payload(p) for p in report.pairs],
        "ground_energy": report.ground_energy,
        "vacuum_energy": report.vacuum_energy,
        "lattice_generators": list(report.lattice_generators),
        "multiplicity_note": report.multiplicity_note,
        "gamma_min_eigenvalue": gmin,
        "offset": form.offset,
    }
    if model is not None:
        results["model"] = {
            "mu": model.mu, "k": model.k, "b": model.b,
            "energy_scale": model.energy_scale,
        }
    header = ["re", "im"]
    rows = [(z.real, z.imag) for z in evals]
    return results, (header, rows)


def _cmd_spectrum(form, model, max_quanta: int):
    if max_quanta < 0:
        raise ConfigError("--max-quanta must be non-negative")
    report = classify_spectrum(form)
    levels = spectrum_lattice(report, max_quanta)
    results = {
        "classification": report.classification.value,
        "max_quanta": max_quanta,
        "ground_energy": report.ground_energy,
        "vacuum_energy": report.vacuum_energy,
        "lattice_generators": list(report.lattice_generators),
        "levels": [
            {
                "energy": lv.energy,
                "degeneracy": lv.degeneracy,
                "infinite": lv.infinite,
                "states": [list(s) for s in lv.states],
            }
            for lv in levels
        ],
    }
    width = len(levels[0].states[0]) if levels else 0
    header = [f"n{j + 1}" for j in range(width)] + \
        ["energy", "degeneracy", "infinite"]
    rows = []
    for lv in levels:
        for state in lv.states:
            rows.append(tuple(state) + (lv.energy, lv.degeneracy, lv.infinite))
    return results, (header, rows)


def _cmd_scan(form, model, cfg, b_from, b_to, steps):
    if model is None:
        raise ConfigError(
            "scan sweeps the coupling of an oscillator model; use the "
            "'oscillator-b' or 'physical' preset"
        )
    if steps < 1:
        raise ConfigError("--steps must be at least 1")
    result = models.phase_scan(b_from, b_to, steps, mu=model.mu, k=model.k)
    results = {
        "mu": model.mu,
        "k": model.k,
        "from": b_from,
        "to": b_to,
        "steps": steps,
        "samples": [
            {
                "b": s.b,
                "classification": s.classification.value,
                "margin": s.margin,
                "ground_energy": s.ground_energy,
                "generators": list(s.generators),
            }
            for s in result.samples
        ],
        "transitions": [
            {"b_star": t.b_star, "bracket_lo": t.bracket_lo,
             "bracket_hi": t.bracket_hi}
            for t in result.transitions
        ],
    }
    header = ["b", "classification", "margin", "ground_energy"]
    rows = [(s.b, s.classification.value, s.margin, s.ground_energy)
            for s in result.samples]
    return results, (header, rows)


def _cmd_verify(form, model, n_max, max_quanta, max_levels):
    if n_max < 0:
        raise ConfigError("--n-max must be non-negative")
    if max_quanta is None:
        max_quanta = n_max
    if max_quanta < 0:
        raise ConfigError("--max-quanta must be non-negative")
    if max_levels is not None and max_levels < 1:
        raise ConfigError("--max-levels must be at least 1")
    report = classify_spectrum(form)
    trunc = FockTruncation(n_max=n_max, K=form.basis.K)
    if report.classification in (
        Classification.NON_REAL_FREQUENCIES,
        Classification.DEFECTIVE_EXCEPTIONAL,
    ):
        comparison = {
            "mode": "none",
            "status": "NOT_APPLICABLE",
            "n_compared": 0,
            "max_abs_diff": 0.0,
            "degeneracies_agree": None,
            "notes": (
                f"classification {report.classification.value} predicts no "
                "energy lattice to compare against"
            ),
            "rows": [],
        }
        shell_upto = 0
    else:
        levels = spectrum_lattice(report, max_quanta)
        oracle = oracle_spectrum(form, trunc)
        comp = compare_with_lattice(oracle, levels, max_levels=max_levels,
                                    classification=report.classification)
        comparison = {
            "mode": comp.mode,
            "status": comp.status,
            "n_compared": comp.n_compared,
            "max_abs_diff": comp.max_abs_diff,
            "degeneracies_agree": comp.degeneracies_agree,
            "notes": comp.notes,
            "rows": [
                {
                    "expected_energy": r.expected_energy,
                    "observed_energy": r.observed_energy,
                    "abs_diff": r.abs_diff,
                    "expected_degeneracy": r.expected_degeneracy,
                    "observed_degeneracy": r.observed_degeneracy,
                }
                for r in comp.rows
            ],
        }
        shell_upto = oracle.shell_exact_upto
    results = {
        "classification": report.classification.value,
        "n_max": n_max,
        "max_quanta": max_quanta,
        "dim": trunc.dim,
        "shell_exact_upto": shell_upto,
        "comparison": comparison,
    }
    header = ["expected_energy", "observed_energy", "abs_diff",
              "expected_degeneracy", "observed_degeneracy"]
    rows = [
        (r["expected_energy"], r["observed_energy"], r["abs_diff"],
         r["expected_degeneracy"], r["observed_degeneracy"])
        for r in comparison["rows"]
    ]
    return results, (header, rows)


def _cmd_wavefunction(cfg, model, m, n):
    if m < 0 or n < 0:
        raise ConfigError("quantum numbers m and n must be non-negative")
    if cfg.get("preset") == "oscillator-b":
        if model is None or not model.is_symmetric:
            raise ConfigError(
                "exact eigenfunctions need the symmetric model (mu = 1, k = 1)"
            )
        b = model.b
    elif cfg.get("preset") == "sb":
        B = float(cfg["B"])
        if abs(B) != 2.0:
            raise ConfigError(
                "exact eigenfunctions for the 'sb' preset need |B| = 2, where "
                "the form coincides with the symmetric model"
            )
        b = B
    else:
        raise ConfigError(
            "the wavefunction command supports the 'oscillator-b' preset with "
            "mu = k = 1, or the 'sb' preset with |B| = 2"
        )

    raise_m, raise_n = models.symmetric_raising_pair()
    psi = build_eigenfunction(raise_m.form, raise_n.form, m, n)
    d = models.DimensionlessModel(mu=1.0, k=1.0, b=b)
    h = models.build_model(d)
    amount = is_scalar_multiple_exact(apply_quadratic_form(h, psi), psi)
    bf = Fraction(b)
    energy_exact = 2 + (2 + bf) * m + (2 - bf) * n
    if amount is None or not amount.equals_rational(energy_exact):
        raise QuadhamError("exact eigen-relation check failed")
    lz = is_scalar_multiple_exact(
        apply_quadratic_form(models.angular_momentum_form(), psi), psi
    )
    if lz is None or not lz.equals_rational(m - n):
        raise QuadhamError("exact rotation-generator check failed")

    results = {
        "m": m,
        "n": n,
        "b": b,
        "energy": float(energy_exact),
        "angular_momentum": m - n,
        "state": psi.render(),
        "eigen_check": "exact",
    }
    header = ["m", "n", "b", "energy", "angular_momentum", "state"]
    rows = [(m, n, b, float(energy_exact), m - n, psi.render())]
    return results, (header, rows)


# ---- entry point ------------------------------------------------------------

def _dispatch(args) -> tuple[dict, dict, tuple]:
    cfg = _load_config(args.config)
    scale = cfg.get("tol_scale", 1.0)
    if isinstance(scale, bool) or not isinstance(scale, (int, float)) \
            or not math.isfinite(float(scale)) or float(scale) <= 0:
        raise ConfigError("config key 'tol_scale' must be a positive number")
    tol.set_config_scale(float(scale))

    form, eff_cfg, model = _build_form(cfg, args.seed)
    if args.command == "analyze":
        results, table = _cmd_analyze(form, model)
    elif args.command == "spectrum":
        results, table = _cmd_spectrum(form, model, args.max_quanta)
    elif args.command == "scan":
        results, table = _cmd_scan(form, model, eff_cfg,
                                   args.b_from, args.b_to, args.steps)
    elif args.command == "verify":
        results, table = _cmd_verify(form, model, args.n_max,
                                     args.max_quanta, args.max_levels)
    elif args.command == "wavefunction":
        results, table = _cmd_wavefunction(eff_cfg, model, args.m, args.n)
    else:  # pragma: no cover - argparse enforces the choices
        raise ConfigError(f"unknown command {args.command!r}")
    return eff_cfg, results, table


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return int(code) if isinstance(code, int) else (0 if code is None else 2)

    try:
        try:
            eff_cfg, results, (header, rows) = _dispatch(args)
            if args.format == "json":
                text = serialize.dumps_json(serialize.envelope(eff_cfg, results))
            else:
                text = serialize.dumps_csv(header, rows)
            if args.out:
                with open(args.out, "w", encoding="utf-8") as fh:
                    fh.write(text)
            else:
                sys.stdout.write(text)
            return 0
        finally:
            tol.set_config_scale(1.0)
    except ConfigError as exc:
        print(f"quadham: config error: {exc}", file=sys.stderr)
        return 2
    except QuadhamError as exc:
        print(f"quadham: error: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # noqa: BLE001 - the contract is "no tracebacks"
        print(f"quadham: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
