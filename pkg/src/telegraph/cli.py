"""Command-line front end.

Subcommands ``profile``, ``field``, ``verify`` and ``preset`` write CSV or
report lines. Configuration comes from a flat ``key = value`` file
(``--config``) overridden by repeated ``--set key=value``.

Exit codes: 0 ok, 1 audit failure, 2 configuration error, 3 evaluation
error.
"""
from __future__ import annotations

import argparse
import dataclasses
import io
import math
import os
import sys
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import TelegraphError
from .families import (
    EXCLUDED,
    Family,
    ModelParams,
    field_grid,
    legendre_regular_degenerate,
    project,
    sample_profile,
)
from .families.profile import PROJECTIONS, validate
from .verify import SUITES, Status, ToleranceProfile, run_suite

__all__ = ["RunConfig", "ConfigError", "parse_config", "build_config", "main", "PRESETS"]

EXIT_OK, EXIT_AUDIT, EXIT_CONFIG, EXIT_EVAL = 0, 1, 2, 3

_PARAM_KEYS = ("epsilon", "a", "alpha", "beta", "D", "q", "c1", "c2")
_RANGE_KEYS = ("eta_range", "x_range", "t_range")
_TOL_PREFIX = "tol."


class ConfigError(ValueError):
    """Malformed or inconsistent run configuration."""


@dataclass
class RunConfig:
    family: Family = Family.Compact1D
    epsilon: float = 1.0
    a: float = 4.0
    alpha: Optional[float] = None
    beta: int = 1
    D: float = 0.0
    q: float = 0.0
    c1: float = 1.0
    c2: float = 0.0
    eta_range: Tuple[float, float, int] = (-2.0, 2.0, 401)
    x_range: Tuple[float, float, int] = (-4.0, 4.0, 161)
    t_range: Tuple[float, float, int] = (1.0, 4.0, 61)
    y: float = 0.0
    projection: str = "real-part"
    suite: str = "all"
    tolerances: Dict[str, float] = field(default_factory=dict)

    def params(self) -> ModelParams:
        return ModelParams(epsilon=self.epsilon, a=self.a, alpha=self.alpha, beta=self.beta,
                           D=self.D, q=self.q, c1=self.c1, c2=self.c2)

    def tolerance_profile(self) -> ToleranceProfile:
        return ToleranceProfile(**self.tolerances)


def _parse_range(key, text):
    parts = [p for p in text.replace("(", "").replace(")", "").split(",")]
    if len(parts) != 3:
        raise ConfigError(f"{key} needs 'min,max,count', got {text!r}")
    try:
        lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise ConfigError(f"{key}: {exc}") from None
    if not (math.isfinite(lo) and math.isfinite(hi) and hi > lo):
        raise ConfigError(f"{key} must satisfy min < max")
    if n < 2:
        raise ConfigError(f"{key} count must be at least 2")
    return lo, hi, n


def _apply(cfg: RunConfig, key: str, value: str) -> None:
    key, value = key.strip(), value.strip()
    tol_names = {f.name for f in dataclasses.fields(ToleranceProfile)}
    try:
        if key == "family":
            cfg.family = Family.parse(value)
        elif key in ("alpha",):
            cfg.alpha = None if value.lower() in ("", "none") else float(value)
        elif key == "beta":
            cfg.beta = int(value)
        elif key in _PARAM_KEYS:
            setattr(cfg, key, float(value))
        elif key == "y":
            cfg.y = float(value)
        elif key in _RANGE_KEYS:
            setattr(cfg, key, _parse_range(key, value))
        elif key == "projection":
            if value not in PROJECTIONS:
                raise ConfigError(f"projection must be one of {', '.join(PROJECTIONS)}")
            cfg.projection = value
        elif key == "suite":
            if value != "all" and value not in SUITES:
                raise ConfigError(f"unknown suite {value!r}")
            cfg.suite = value
        elif key.startswith(_TOL_PREFIX):
            name = key[len(_TOL_PREFIX):]
            name = name if name.endswith("_tol") else name + "_tol"
            if name not in tol_names:
                raise ConfigError(f"unknown tolerance {key!r}")
            cfg.tolerances[name] = float(value)
        else:
            raise ConfigError(f"unknown key {key!r}")
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(f"{key}: {exc}") from None


def parse_config(text: str, cfg: Optional[RunConfig] = None) -> RunConfig:
    """Read ``key = value`` lines; ``#`` starts a comment."""
    cfg = cfg if cfg is not None else RunConfig()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key = value")
        k, v = line.split("=", 1)
        _apply(cfg, k, v)
    return cfg


def build_config(config_path=None, family=None, sets: Sequence[str] = (),
                 projection=None, base: Optional[RunConfig] = None) -> RunConfig:
    cfg = base if base is not None else RunConfig()
    if config_path:
        try:
            with open(config_path, encoding="utf-8") as fh:
                parse_config(fh.read(), cfg)
        except OSError as exc:
            raise ConfigError(f"cannot read config: {exc}") from None
    if family:
        _apply(cfg, "family", family)
    for item in sets:
        if "=" not in item:
            raise ConfigError(f"--set expects key=value, got {item!r}")
        _apply(cfg, *item.split("=", 1))
    if projection:
        _apply(cfg, "projection", projection)
    return cfg


# ------------------------------------------------------------------ output


def _num(v: float) -> str:
    return "%.17g" % v


def _split(values, mode):
    v = project(values, mode)
    if np.iscomplexobj(v):
        return v.real, v.imag
    return v, np.zeros_like(v)


def _header(cfg: RunConfig, degenerate: bool, extra: str = "") -> str:
    p = cfg.params()
    alpha = "none" if p.alpha is None else _num(p.alpha)
    return (f"# family={cfg.family.value} epsilon={_num(p.epsilon)} a={_num(p.a)} alpha={alpha} "
            f"beta={p.beta} D={_num(p.D)} q={_num(p.q)} c1={_num(p.c1)} c2={_num(p.c2)} "
            f"projection={cfg.projection} degenerate={'true' if degenerate else 'false'}{extra}\n")


def _rows(prefix_cols, re, im, mask):
    out = []
    for pre, r, i, m in zip(prefix_cols, re, im, mask):
        vals = ("", "") if m == EXCLUDED else (_num(r), _num(i))
        out.append(",".join(list(pre) + list(vals) + [str(int(m))]))
    return out


def profile_csv(cfg: RunConfig, curve: Optional[str] = None):
    p = cfg.params()
    eta = np.linspace(*cfg.eta_range)
    prof = sample_profile(cfg.family, p, eta)
    re, im = _split(prof.value, cfg.projection)
    cols = [(_num(e),) for e in eta]
    head = "eta,value_re,value_im,mask"
    if curve is not None:
        cols = [(curve,) + c for c in cols]
        head = "curve," + head
    return "\n".join(_rows(cols, re, im, prof.mask)) + "\n", head, prof.degenerate


def field_csv(cfg: RunConfig):
    p = cfg.params()
    x = np.linspace(*cfg.x_range)
    t = np.linspace(*cfg.t_range)
    fld = field_grid(cfg.family, p, x, t, y=cfg.y)
    re, im = _split(fld.values.ravel(), cfg.projection)
    tt, xx = np.meshgrid(t, x, indexing="ij")
    cols = [(_num(xi), _num(ti)) for xi, ti in zip(xx.ravel(), tt.ravel())]
    degenerate = cfg.family is Family.LegendreRegular and legendre_regular_degenerate(p)
    return "\n".join(_rows(cols, re, im, fld.mask.ravel())) + "\n", "x,t,value_re,value_im,mask", degenerate


def cmd_profile(cfg: RunConfig) -> str:
    body, head, deg = profile_csv(cfg)
    return _header(cfg, deg) + head + "\n" + body


def cmd_field(cfg: RunConfig) -> str:
    if cfg.t_range[0] < 1.0:
        raise ConfigError("t_range must start at t >= 1")
    body, head, deg = field_csv(cfg)
    return _header(cfg, deg) + head + "\n" + body


def cmd_verify(cfg: RunConfig) -> Tuple[str, int]:
    reports = run_suite(cfg.suite, cfg.tolerance_profile())
    lines = [r.to_line() for r in reports]
    failed = any(r.status is Status.FAIL for r in reports)
    return "\n".join(lines) + "\n", EXIT_AUDIT if failed else EXIT_OK


# ----------------------------------------------------------------- presets

# Each preset: (kind, family, fixed settings, curves as (label, settings)).
PRESETS = {
    "fig1": ("profile", "Hyper1D", {"c1": 1, "c2": 0, "eta_range": (-3.0, 3.0, 601)},
             [(f"k={k}", {"a": 2 * k}) for k in (0, 1, 2, 3)]),
    "fig2": ("profile", "Hyper1D", {"c1": 1, "c2": 0, "eta_range": (-3.0, 3.0, 601)},
             [(f"k={k}", {"a": 2 * k}) for k in (-1, -2, -3, -4)]),
    "fig3": ("profile", "Hyper1D", {"c1": 1, "c2": 0, "eta_range": (-3.0, 3.0, 601)},
             [(f"k={n}/2", {"a": n}) for n in (1, 3, 5, 7)]),
    "fig4": ("profile", "Hyper1D", {"c1": 1, "c2": 0, "eta_range": (-3.0, 3.0, 601)},
             [(f"k=-{n}/2", {"a": -n}) for n in (1, 3, 5, 7)]),
    "fig5": ("field", "Hyper1D", {"c1": 1, "c2": 0, "a": 4, "x_range": (-4.0, 4.0, 161),
                                  "t_range": (1.0, 4.0, 61)}, [("k=2", {})]),
    "fig6": ("profile", "LegendreRegular", {"eta_range": (-3.0, 3.0, 601)},
             [("k=3/2", {"a": 3}), ("k=-3/2", {"a": -3})]),
    "fig7": ("profile", "LegendreRegular", {"eta_range": (-3.0, 3.0, 601)},
             [("a/4eps+1=-1", {"a": -8}), ("a/4eps+1=-1/2", {"a": -6})]),
    "fig8": ("field", "LegendreRegular", {"a": -2, "x_range": (-4.0, 4.0, 161),
                                          "t_range": (1.0, 4.0, 61)}, [("a=-2", {})]),
    "fig9": ("profile", "LegendreIrregular", {"c1": 0, "c2": 1, "eta_range": (-3.0, 3.0, 601)},
             [(f"a={a}", {"a": a}) for a in (1, 2, 3, 4)]),
    "fig10": ("field", "LegendreIrregular", {"c1": 0, "c2": 1, "a": 4, "x_range": (-4.0, 4.0, 161),
                                             "t_range": (1.0, 4.0, 61)}, [("a=4", {})]),
}


def _settings(cfg: RunConfig, settings: dict) -> RunConfig:
    cfg = dataclasses.replace(cfg, tolerances=dict(cfg.tolerances))
    for k, v in settings.items():
        if k in _RANGE_KEYS:
            setattr(cfg, k, tuple(v))
        else:
            _apply(cfg, k, str(v))
    return cfg


def cmd_preset(name: str, base: RunConfig) -> str:
    if name not in PRESETS:
        raise ConfigError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}")
    kind, family, fixed, curves = PRESETS[name]
    out = io.StringIO()
    out.write(f"# preset={name}\n")
    for label, settings in curves:
        cfg = _settings(base, dict(fixed, family=family, **settings))
        try:
            validate(cfg.family, cfg.params())
        except TelegraphError as exc:
            raise ConfigError(f"preset {name}, {label}: {exc}") from None
        if kind == "profile":
            body, head, deg = profile_csv(cfg, curve=label)
        else:
            body, head, deg = field_csv(cfg)
            head = "curve," + head
            body = "".join(f"{label},{row}\n" for row in body.splitlines())
        out.write(_header(cfg, deg, f" curve={label}"))
        out.write(head + "\n" + body)
    return out.getvalue()


# -------------------------------------------------------------------- main


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH", help="key = value configuration file")
    common.add_argument("--family", metavar="NAME")
    common.add_argument("--set", metavar="KEY=VALUE", action="append", default=[], dest="sets")
    common.add_argument("--out", metavar="PATH", help="output file (default stdout)")
    common.add_argument("--projection", choices=PROJECTIONS)
    ap = argparse.ArgumentParser(prog="telegraph", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("profile", parents=[common], help="similarity profile f(eta) as CSV")
    sub.add_parser("field", parents=[common], help="space-time field T(x, t) as CSV")
    v = sub.add_parser("verify", parents=[common], help="run audit suites")
    v.add_argument("suite", nargs="?", default=None, help="specfun, ode, scaling, conservation, oracle or all")
    pr = sub.add_parser("preset", parents=[common], help="plot-ready figure data")
    pr.add_argument("name", choices=sorted(PRESETS, key=lambda s: int(s[3:])))
    return ap


def _write(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        try:
            sys.stdout.write(text)
            sys.stdout.flush()
        except BrokenPipeError:
            # reader closed early (e.g. piped into head); silence the flush at exit
            devnull = os.open(os.devnull, os.O_WRONLY)
            os.dup2(devnull, sys.stdout.fileno())


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_OK
    try:
        cfg = build_config(args.config, args.family, args.sets, args.projection)
        if args.command == "verify" and args.suite:
            _apply(cfg, "suite", args.suite)
        if args.command in ("profile", "field"):
            validate(cfg.family, cfg.params())
        else:
            cfg.params()
    except (ConfigError, TelegraphError) as exc:
        print(f"telegraph: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    code = EXIT_OK
    try:
        if args.command == "profile":
            text = cmd_profile(cfg)
        elif args.command == "field":
            text = cmd_field(cfg)
        elif args.command == "verify":
            text, code = cmd_verify(cfg)
        else:
            text = cmd_preset(args.name, cfg)
    except ConfigError as exc:
        print(f"telegraph: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (TelegraphError, ArithmeticError, ValueError) as exc:
        print(f"telegraph: evaluation error: {exc}", file=sys.stderr)
        return EXIT_EVAL
    _write(text, args.out)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
