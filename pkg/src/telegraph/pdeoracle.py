"""Finite-difference oracle for eps T_tt + (a/t) T_t = T_xx.

Analytic self-similar data are evolved with an explicit leapfrog scheme
(damping term centered in time) and compared with the analytic field at
the final time. The closed forms enter only through the initial data,
an optional boundary condition and the final comparison.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import (
    BlowupError,
    CFLError,
    ParameterError,
    PreconditionError,
    SmoothnessError,
)
from .families import Family, ModelParams, field_value, profile_value, resolve_alpha

__all__ = [
    "GridSpec",
    "EvolutionResult",
    "default_grid",
    "initial_data",
    "evolve",
    "run_oracle",
    "convergence_order",
    "mass_drift",
    "dump_result",
    "oracle_reports",
]

ERROR_FLOOR = 1e-10
BLOWUP_FACTOR = 1e6
EXCLUDE_CELLS = 5


@dataclass(frozen=True)
class GridSpec:
    """Uniform grid on [x_min, x_max] with ``nx`` nodes, evolved from t0 to t1."""

    x_min: float
    x_max: float
    nx: int
    t0: float = 1.0
    t1: float = 2.0
    cfl: float = 0.5

    def __post_init__(self):
        if self.nx < 64:
            raise ParameterError("nx must be at least 64")
        if not self.x_max > self.x_min:
            raise ParameterError("x_max must exceed x_min")
        if self.t0 < 1.0:
            raise ParameterError("t0 must be at least 1")
        if not self.t1 > self.t0:
            raise ParameterError("t1 must exceed t0")
        if not 0 < self.cfl < 1:
            raise CFLError("cfl must lie in (0, 1)")

    @property
    def x(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.nx)

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / (self.nx - 1)

    def time_step(self, epsilon: float):
        """(dt, steps) with dt <= cfl sqrt(eps) dx landing exactly on t1."""
        dt_max = self.cfl * math.sqrt(epsilon) * self.dx
        steps = int(math.ceil((self.t1 - self.t0) / dt_max - 1e-12))
        return (self.t1 - self.t0) / steps, steps

    def refined(self, factor: int = 2) -> "GridSpec":
        return GridSpec(self.x_min, self.x_max, (self.nx - 1) * factor + 1,
                        self.t0, self.t1, self.cfl)


@dataclass
class EvolutionResult:
    """Outcome of one evolution.

    ``mass_times``/``mass_history`` hold the trapezoid-rule integral of T
    after every step.
    """

    x: np.ndarray
    final_values: np.ndarray
    steps: int
    dt: float
    t1: float
    alpha: float = float("nan")
    rel_l2_error: float = float("nan")
    rel_max_error: float = float("nan")
    analytic: Optional[np.ndarray] = None
    window: Optional[np.ndarray] = None
    mass_times: np.ndarray = field(default_factory=lambda: np.zeros(0))
    mass_history: np.ndarray = field(default_factory=lambda: np.zeros(0))
    grid: Optional[GridSpec] = None


def default_grid(params: ModelParams, nx: int = 2048, t0: float = 1.0, t1: float = 2.0,
                 cfl: float = 0.5, margin: float = 0.1) -> GridSpec:
    """Symmetric grid reaching ``margin`` (relative) beyond the light cone at t1."""
    edge = t1 / math.sqrt(params.epsilon) * (1.0 + margin)
    return GridSpec(-edge, edge, nx, t0, t1, cfl)


def _compact_edge_exponent(params):
    return params.k - 1.0


def initial_data(family, params: ModelParams, grid: GridSpec):
    """Analytic T and dT/dt at t0.

    dT/dt = -alpha t^(-alpha-1) f(eta) - t^(-alpha-2) x f'(eta). The
    compact profile uses its exact derivative; other families a
    4th-order difference in eta.

    Raises
    ------
    SmoothnessError
        For the compact family when the edge exponent k - 1 is below 2
        (the data would not be C^1 with a bounded second derivative).
    """
    family = Family.parse(family)
    alpha = resolve_alpha(family, params)
    t0 = grid.t0
    x = grid.x
    eta = x / t0
    if family is Family.Compact1D:
        p = _compact_edge_exponent(params)
        if p < 2:
            raise SmoothnessError(f"edge exponent k - 1 = {p:g} < 2")
        w = 1.0 - params.epsilon * eta ** 2
        inside = w > 0
        f = np.where(inside, np.abs(w) ** p, 0.0)
        df = np.where(inside, -2.0 * params.epsilon * eta * p * np.abs(w) ** (p - 1), 0.0)
    else:
        f = np.array([profile_value(family, e, params) for e in eta])
        h = 1e-4
        df = np.array([(profile_value(family, e - 2 * h, params)
                        - 8 * profile_value(family, e - h, params)
                        + 8 * profile_value(family, e + h, params)
                        - profile_value(family, e + 2 * h, params)) / (12 * h) for e in eta])
        scale = max(np.max(np.abs(f)), 1e-300)
        if np.max(np.abs(f.imag)) > 1e-12 * scale or np.max(np.abs(df.imag)) > 1e-8 * scale:
            raise PreconditionError("the oracle evolves real data; this profile is complex here")
        f, df = f.real, df.real
    T0 = t0 ** -alpha * f
    Tdot0 = -alpha * t0 ** (-alpha - 1) * f - t0 ** (-alpha - 2) * x * df
    return T0, Tdot0


def evolve(T0, Tdot0, params: ModelParams, grid: GridSpec,
           boundary: Optional[Callable[[float], tuple]] = None,
           dt: Optional[float] = None) -> EvolutionResult:
    """Leapfrog integration from t0 to t1.

    The update is

        T^{n+1} (eps/dt^2 + a/(2 t_n dt)) = D2 T^n + eps (2 T^n - T^{n-1}) / dt^2
                                             + a/(2 t_n dt) T^{n-1},

    seeded by T^1 = T^0 + dt Tdot0 + dt^2/(2 eps) (D2 T^0 - a/t0 Tdot0).
    Edge nodes are held at zero, or at ``boundary(t)`` = (left, right).

    Raises
    ------
    CFLError
        If ``dt`` exceeds sqrt(eps) dx.
    BlowupError
        If max |T| grows beyond 1e6 times its initial value.
    """
    eps, a = params.epsilon, params.a
    T0 = np.asarray(T0, dtype=float)
    Tdot0 = np.asarray(Tdot0, dtype=float)
    if T0.shape != (grid.nx,) or Tdot0.shape != (grid.nx,):
        raise ParameterError("initial data must have one value per grid node")
    dx = grid.dx
    if dt is None:
        dt, steps = grid.time_step(eps)
    if dt > math.sqrt(eps) * dx * (1 + 1e-12):
        raise CFLError(f"dt = {dt:g} exceeds the stability bound sqrt(eps) dx = {math.sqrt(eps) * dx:g}")
    steps = int(round((grid.t1 - grid.t0) / dt))
    if abs(steps * dt - (grid.t1 - grid.t0)) > 1e-9 * dt:
        raise ParameterError("dt must divide t1 - t0")
    x = grid.x
    inv_dx2 = 1.0 / (dx * dx)

    def lap(u):
        out = np.zeros_like(u)
        out[1:-1] = (u[2:] - 2.0 * u[1:-1] + u[:-2]) * inv_dx2
        return out

    def set_edges(u, t):
        if boundary is None:
            u[0] = u[-1] = 0.0
        else:
            u[0], u[-1] = boundary(t)

    limit = BLOWUP_FACTOR * max(np.max(np.abs(T0)), np.max(np.abs(Tdot0)) * dt, 1e-300)
    t0 = grid.t0
    prev = T0.copy()
    cur = T0 + dt * Tdot0 + dt * dt / (2 * eps) * (lap(T0) - a / t0 * Tdot0)
    set_edges(cur, t0 + dt)
    times = [t0, t0 + dt]
    masses = [_trap(prev, x), _trap(cur, x)]
    for n in range(1, steps):
        tn = t0 + n * dt
        damp = a / (2.0 * tn * dt)
        nxt = (lap(cur) + eps * (2.0 * cur - prev) / (dt * dt) + damp * prev) / (eps / (dt * dt) + damp)
        set_edges(nxt, t0 + (n + 1) * dt)
        prev, cur = cur, nxt
        times.append(t0 + (n + 1) * dt)
        masses.append(_trap(cur, x))
        if not np.all(np.isfinite(cur)) or np.max(np.abs(cur)) > limit:
            raise BlowupError(f"solution blew up at t = {tn + dt:g}")
    return EvolutionResult(x=x, final_values=cur, steps=steps, dt=dt, t1=grid.t1,
                           mass_times=np.array(times), mass_history=np.array(masses), grid=grid)


def _trap(u, x):
    return float(np.sum((u[1:] + u[:-1]) * np.diff(x)) * 0.5)


def _analytic(family, params, x, t):
    vals = np.array([field_value(family, params, xi, t) for xi in x])
    return vals.real


def comparison_window(x, t, params, cells: int = EXCLUDE_CELLS):
    """Nodes farther than ``cells`` grid cells from the rays |x| = t/sqrt(eps)."""
    dx = x[1] - x[0]
    ray = t / math.sqrt(params.epsilon)
    return np.abs(np.abs(x) - ray) > cells * dx


def run_oracle(family, params: ModelParams, grid: Optional[GridSpec] = None,
               analytic_boundary: bool = False) -> EvolutionResult:
    """Evolve analytic data and measure the error against the analytic field at t1.

    ``analytic_boundary`` holds the edge nodes at the analytic field, for
    patches that do not contain the whole support.
    """
    family = Family.parse(family)
    if grid is None:
        grid = default_grid(params)
    alpha = resolve_alpha(family, params)
    T0, Td0 = initial_data(family, params, grid)
    bnd = None
    if analytic_boundary:
        x0, x1 = grid.x_min, grid.x_max

        def bnd(t):
            return (field_value(family, params, x0, t).real,
                    field_value(family, params, x1, t).real)
    res = evolve(T0, Td0, params, grid, boundary=bnd)
    res.alpha = alpha
    exact = _analytic(family, params, res.x, grid.t1)
    win = comparison_window(res.x, grid.t1, params)
    err = res.final_values[win] - exact[win]
    ref = exact[win]
    nref = np.linalg.norm(ref)
    res.analytic = exact
    res.window = win
    res.rel_l2_error = float(np.linalg.norm(err) / nref) if nref > 0 else float(np.linalg.norm(err))
    mref = np.max(np.abs(ref)) if ref.size else 0.0
    res.rel_max_error = float(np.max(np.abs(err)) / mref) if mref > 0 else float(np.max(np.abs(err), initial=0.0))
    return res


def convergence_order(family, params: ModelParams, grid_seq: Sequence[GridSpec],
                      analytic_boundary: bool = False) -> float:
    """Least-squares slope of log(rel L2 error) against log(dx).

    Returns NaN when any error is at or below ``ERROR_FLOOR`` (no
    discretization error to fit, e.g. a field the scheme reproduces
    exactly up to rounding).
    """
    if len(grid_seq) < 3:
        raise ParameterError("need at least three grids")
    dxs, errs = [], []
    for g in grid_seq:
        r = run_oracle(family, params, g, analytic_boundary)
        dxs.append(g.dx)
        errs.append(r.rel_l2_error)
    errs = np.array(errs)
    if np.any(~np.isfinite(errs)) or np.any(errs <= ERROR_FLOOR):
        return float("nan")
    slope, _ = np.polyfit(np.log(dxs), np.log(errs), 1)
    return float(slope)


def mass_drift(evolution: EvolutionResult) -> float:
    """Relative change of the trapezoid-rule heat mass from t0 to t1.

    Raises
    ------
    PreconditionError
        Unless the evolved family has alpha = 1.
    """
    if evolution.alpha != 1:
        raise PreconditionError("the heat mass is invariant only for alpha = 1")
    m = evolution.mass_history
    if m.size == 0 or m[0] == 0:
        return 0.0 if (m.size == 0 or np.all(m == 0)) else float("inf")
    return float(abs(m[-1] - m[0]) / abs(m[0]))


def dump_result(res: EvolutionResult) -> str:
    """Header with the grid, then rows x, T_numeric, T_analytic, abs_err."""
    g = res.grid
    head = (f"# x_min={g.x_min:.17g} x_max={g.x_max:.17g} nx={g.nx} t0={g.t0:.17g} "
            f"t1={g.t1:.17g} cfl={g.cfl:.17g} steps={res.steps}\n")
    rows = ["x,T_numeric,T_analytic,abs_err"]
    ana = res.analytic if res.analytic is not None else np.full_like(res.x, np.nan)
    for xi, tn, ta in zip(res.x, res.final_values, ana):
        rows.append(f"{xi:.17g},{tn:.17g},{ta:.17g},{abs(tn - ta):.17g}")
    return head + "\n".join(rows) + "\n"


def oracle_reports(nx_chain=(512, 1024, 2048)):
    """Reports for the reference compact evolution (eps = 1, a = 6, t 1 -> 2).

    A second convergence line at a = 10, whose profile is smooth across
    the support edge, separates scheme order from data regularity.
    """
    from .verify import ResidualReport, Status, _params_label, _status
    p = ModelParams(epsilon=1.0, a=6.0)
    label = _params_label(p)
    res = run_oracle(Family.Compact1D, p, default_grid(p, nx=nx_chain[-1]))
    out = [
        ResidualReport("Compact1D", "oracle_rel_l2", res.rel_l2_error, 1e-3,
                       _status(res.rel_l2_error, 1e-3), label, res.x.size,
                       res.rel_max_error, res.rel_l2_error, 0.0, f"nx={nx_chain[-1]}"),
    ]
    drift = mass_drift(res)
    out.append(ResidualReport("Compact1D", "oracle_mass_drift", drift, 1e-4,
                              _status(drift, 1e-4), label, res.x.size, detail=f"nx={nx_chain[-1]}"))
    for q in (p, p.replace(a=10.0)):
        order = convergence_order(Family.Compact1D, q, [default_grid(q, nx=n) for n in nx_chain])
        ok = 1.8 <= order <= 2.2
        out.append(ResidualReport("Compact1D", "oracle_convergence_order", order, 2.2,
                                  Status.PASS if ok else Status.FAIL, _params_label(q),
                                  len(nx_chain), detail="target [1.8, 2.2], nx=" + "/".join(map(str, nx_chain))))
    return out
