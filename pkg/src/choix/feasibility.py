"""Linear-programming feasibility tests behind the choice calculus.

The central predicate is :func:`is_feasible`: given a finite set of
options G and a target v, decide whether some strictly positive
combination of G lies componentwise below v.  Everything else (cone
membership, the dominance pre-orders on options and on generator sets)
reduces to it.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linprog

from .core import (
    DEFAULT_TOLERANCE,
    InputError,
    Options,
    ToleranceConfig,
    Vec,
    is_positive,
    leq,
    zero,
)


class SolverError(RuntimeError):
    """The LP backend failed to reach a conclusive status."""


@dataclass(frozen=True)
class LpOutcome:
    """Result of one LP feasibility call, with the raw variable vector
    when the problem was feasible."""

    feasible: bool
    witness: tuple[float, ...] | None = None


def _solve_highs(a_ub: np.ndarray, b_ub: np.ndarray, bounds: list, tol: float) -> LpOutcome:
    """Default backend: scipy HiGHS on a zero-objective feasibility LP."""
    options = {"presolve": True}
    if tol > 0.0:
        options["primal_feasibility_tolerance"] = max(tol, 1e-10)
        options["dual_feasibility_tolerance"] = max(tol, 1e-10)
    res = linprog(
        c=np.zeros(a_ub.shape[1]),
        A_ub=a_ub,
        b_ub=b_ub,
        bounds=bounds,
        method="highs",
        options=options,
    )
    if res.status == 0:
        return LpOutcome(feasible=True, witness=tuple(float(x) for x in res.x))
    if res.status == 2:
        return LpOutcome(feasible=False)
    raise SolverError(f"LP backend returned status {res.status}: {res.message}")


def _solve_simplex(a_ub: np.ndarray, b_ub: np.ndarray, bounds: list, tol: float) -> LpOutcome:
    """Default backend: a dense phase-1 simplex for these tiny systems.

    The generic LP interface of scipy costs around a millisecond per
    call, which dominates generator simplification; this direct method
    is over an order of magnitude faster at the problem sizes we see
    (a handful of rows).  Bland's rule prevents cycling; if the
    iteration cap is ever hit, the call is handed to scipy instead.
    """
    eps = max(tol, 1e-10)
    n_rows, n_cols = a_ub.shape
    # Shift variables so every lower bound becomes zero; all our bounds
    # are [lo, inf).
    shift = np.array([lo for lo, _hi in bounds])
    b = b_ub - a_ub @ shift
    # Slack variables turn A x <= b into equalities; rows with negative
    # right-hand side are negated and receive artificial variables.
    a_eq = np.hstack([a_ub, np.eye(n_rows)])
    neg = b < 0
    a_eq[neg] = -a_eq[neg]
    b = np.where(neg, -b, b)
    art_rows = np.flatnonzero(neg)
    total = n_cols + n_rows + len(art_rows)
    tableau = np.zeros((n_rows, total + 1))
    tableau[:, : n_cols + n_rows] = a_eq
    tableau[:, total] = b
    basis = n_cols + np.arange(n_rows)
    for k, row in enumerate(art_rows):
        col = n_cols + n_rows + k
        tableau[row, col] = 1.0
        basis[row] = col
    # Phase-1 objective row: minimise the sum of artificial variables,
    # expressed in the current basis.
    obj = np.zeros(total + 1)
    obj[n_cols + n_rows : total] = 1.0
    for row in art_rows:
        obj -= tableau[row]
    for _ in range(50 * (total + 1)):
        # Bland's rule: smallest-index entering column.
        entering = -1
        for j in range(total):
            if obj[j] < -eps:
                entering = j
                break
        if entering < 0:
            break
        col = tableau[:, entering]
        leaving, best = -1, np.inf
        for i in range(n_rows):
            if col[i] > eps:
                ratio = tableau[i, total] / col[i]
                if ratio < best - eps or (
                    abs(ratio - best) <= eps and leaving >= 0 and basis[i] < basis[leaving]
                ):
                    best, leaving = ratio, i
        if leaving < 0:
            # The phase-1 objective is bounded below by zero, so an
            # unbounded direction signals numerical trouble; defer.
            return _solve_highs(a_ub, b_ub, bounds, tol)
        tableau[leaving] /= tableau[leaving, entering]
        for i in range(n_rows):
            if i != leaving:
                f = tableau[i, entering]
                if f != 0.0:
                    tableau[i] -= f * tableau[leaving]
        f = obj[entering]
        if f != 0.0:
            obj -= f * tableau[leaving]
        basis[leaving] = entering
    else:
        return _solve_highs(a_ub, b_ub, bounds, tol)
    residual = -obj[total]
    if residual > eps * max(1.0, float(np.abs(b).max())):
        return LpOutcome(feasible=False)
    x = np.zeros(total)
    x[basis] = tableau[:, total]
    witness = tuple(float(v) for v in x[:n_cols] + shift)
    return LpOutcome(feasible=True, witness=witness)


_backend = _solve_simplex


def set_lp_backend(solver) -> None:
    """Swap the LP backend.  The solver receives (A_ub, b_ub, bounds, tol)
    for a feasibility problem ``A_ub x <= b_ub`` and returns an LpOutcome."""
    global _backend
    _backend = solver
    _feasible_cached.cache_clear()


def _single_feasible(g: Vec, v: Vec) -> bool:
    """Exact test for |G| = 1: some positive multiple of g lies below v.

    The admissible multipliers form an interval, so no LP is needed.
    """
    lo, hi = 0.0, float("inf")
    for gi, vi in zip(g, v):
        if gi > 0.0:
            hi = min(hi, vi / gi)
        elif gi < 0.0:
            lo = max(lo, vi / gi)
        elif vi < 0.0:
            return False
    return hi > 0.0 and lo <= hi


def solve_feasibility(G: Options, v: Vec, cfg: ToleranceConfig = DEFAULT_TOLERANCE) -> LpOutcome:
    """Run the LP for ``is_feasible`` and return the outcome with witness.

    The strictly positive combination is encoded as non-negative weights
    that sum to at least one, together with a scaling variable for v that
    is at least one; this removes the strict inequality without changing
    solvability.
    """
    dim = len(v)
    m = len(G)
    if m == 0:
        return LpOutcome(feasible=False)
    for g in G:
        if len(g) != dim:
            raise InputError(f"dimension mismatch: {len(g)} vs {dim}")
    # Coordinate rows: sum_k mu_k g_k(x) - mu_{m+1} v(x) <= 0.
    a_ub = np.empty((dim + 1, m + 1))
    for i in range(dim):
        a_ub[i, :m] = [g[i] for g in G]
        a_ub[i, m] = -v[i]
    # Normalisation row: -(mu_1 + ... + mu_m) <= -1.
    a_ub[dim, :m] = -1.0
    a_ub[dim, m] = 0.0
    b_ub = np.zeros(dim + 1)
    b_ub[dim] = -1.0
    bounds = [(0.0, None)] * m + [(1.0, None)]
    return _backend(a_ub, b_ub, bounds, cfg.lp_tol)


@functools.lru_cache(maxsize=1 << 18)
def _feasible_cached(G: Options, v: Vec, tau: float, lp_tol: float) -> bool:
    cfg = ToleranceConfig(tau=tau, lp_tol=lp_tol)
    # Cheap sufficient condition: a single generator already below v.
    for g in G:
        if leq(g, v, cfg):
            return True
    if len(G) == 1:
        return _single_feasible(G[0], v)
    return solve_feasibility(G, v, cfg).feasible


def is_feasible(G: Options, v: Vec, cfg: ToleranceConfig = DEFAULT_TOLERANCE) -> bool:
    """Whether some strictly positive combination of G lies below v.

    Empty G yields False: an empty combination cannot be strictly
    positive.  Solver breakdowns raise :class:`SolverError`, they are
    never reported as infeasibility.
    """
    dim = len(v)
    for g in G:
        if len(g) != dim:
            raise InputError(f"dimension mismatch: {len(g)} vs {dim}")
    if not G:
        return False
    return _feasible_cached(tuple(G), tuple(v), cfg.tau, cfg.lp_tol)


def in_natural_extension(G: Options, v: Vec, cfg: ToleranceConfig = DEFAULT_TOLERANCE) -> bool:
    """Membership of v in the cone spanned by G and the strictly positive
    options: either v itself is strictly positive, or it dominates a
    strictly positive combination of G."""
    return is_positive(v, cfg) or is_feasible(G, v, cfg)


def option_ord(u: Vec, v: Vec, cfg: ToleranceConfig = DEFAULT_TOLERANCE) -> bool:
    """Dominance between single options: u is redundant next to v when v
    belongs to the cone generated by u alone."""
    return in_natural_extension((u,), v, cfg)


def g_ord(G1: Options, G2: Options, cfg: ToleranceConfig = DEFAULT_TOLERANCE) -> bool:
    """Dominance between generator sets: every option of G2 already lies
    in the cone generated by G1, so G2's cone contains G1's conclusions
    and G1 is the redundant one."""
    return all(in_natural_extension(G1, g, cfg) for g in G2)


def clear_caches() -> None:
    _feasible_cached.cache_clear()


def _zero_vec(dim: int) -> Vec:
    return zero(dim)
