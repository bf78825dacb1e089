"""Benchmark harness: generator growth, contamination sweeps and timing.

Three experiments over synthetic assessments drawn from the stock model
families.  Each returns a list of row dicts and can be serialised to CSV
with a fixed column schema.  Cells whose computation exceeds the
per-cell wall-clock budget carry the sentinel string ``"timeout"``.
"""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass

import numpy as np

from . import feasibility
from .choice import Method, clear_full_cache, full_generator, natural_extension
from .core import Assessment, DEFAULT_TOLERANCE, InputError, ToleranceConfig
from .generators import (
    BuildTimeout,
    assessment_to_conjunctive,
    assessment_to_conjunctive_naive,
    conjunctive_to_disjunctive_simplified,
    disjunctive_size,
    extend_disjunctive,
)
from .models import (
    ESet,
    build_assessment,
    epsilon_contamination,
    make_model,
    random_option_set,
    random_pmf,
)

TIMEOUT = "timeout"

SIZE_COLUMNS = ["l", "g_naive", "g_conj", "g_full"]
EPSILON_COLUMNS = ["epsilon", "h_naive", "h_simpl", "g_naive", "g_conj", "g_full"]
TIMING_COLUMNS = [
    "l",
    "t_build_naive",
    "t_build_conj",
    "t_build_full",
    "t_choose_naive",
    "t_choose_conj",
    "t_choose_full",
    "breakeven_n",
]


@dataclass(frozen=True)
class ExperimentConfig:
    """Knobs shared by the experiments; defaults are desk scale."""

    seed: int = 42
    dim: int = 4
    length: int = 10
    reps: int = 3
    set_size: tuple[int, int] = (2, 8)
    model: str = "max"
    extremes_per_lowerexp: int = 4
    queries: int = 3
    cell_budget_s: float = 60.0
    epsilon_start: float = 0.03
    epsilon_stop: float = 0.99
    epsilon_step: float = 0.03

    @classmethod
    def from_doc(cls, doc: dict) -> "ExperimentConfig":
        if not isinstance(doc, dict):
            raise InputError("experiment config must be a JSON object")
        known = {
            "seed": "seed",
            "dim": "dim",
            "L": "length",
            "reps": "reps",
            "set_size": "set_size",
            "model": "model",
            "extremes_per_lowerexp": "extremes_per_lowerexp",
            "queries": "queries",
            "cell_budget_s": "cell_budget_s",
            "epsilon_start": "epsilon_start",
            "epsilon_stop": "epsilon_stop",
            "epsilon_step": "epsilon_step",
        }
        kwargs = {}
        for key, value in doc.items():
            if key not in known:
                raise InputError(f"unknown experiment config key {key!r}")
            kwargs[known[key]] = tuple(value) if key == "set_size" else value
        try:
            return cls(**kwargs)
        except TypeError as exc:
            raise InputError(f"bad experiment config: {exc}") from exc


def _mean(values: list) -> object:
    """Average a list of per-rep cell values; any timeout poisons the cell."""
    if any(v == TIMEOUT for v in values):
        return TIMEOUT
    return float(np.mean([float(v) for v in values]))


def _conj_pair_sets(a: Assessment, pair_index: int, cfg: ToleranceConfig) -> tuple:
    """Simplified difference sets contributed by a single pair."""
    single = Assessment(dimension=a.dimension, pairs=(a.pairs[pair_index],))
    return assessment_to_conjunctive(single, cfg).sets


def run_size_experiment(
    cfg: ExperimentConfig, tol: ToleranceConfig = DEFAULT_TOLERANCE
) -> list[dict]:
    """Generator sizes as the assessment grows one pair at a time.

    Columns: the unsimplified selection count, the count after per-set
    simplification, and the size of the fully simplified materialised
    generator.
    """
    per_rep: list[dict[int, dict]] = []
    for rep in range(cfg.reps):
        rng = np.random.default_rng(cfg.seed + rep)
        model = make_model(cfg.model, cfg.dim, rng, cfg.extremes_per_lowerexp)
        option_sets = tuple(
            random_option_set(rng, cfg.dim, cfg.set_size) for _ in range(cfg.length)
        )
        a = build_assessment(model, option_sets, tol)
        rows: dict[int, dict] = {}
        g_naive, g_conj = 1, 1
        full_sets: list | object = [()]
        for i in range(cfg.length):
            naive_sets = assessment_to_conjunctive_naive(
                Assessment(dimension=a.dimension, pairs=(a.pairs[i],))
            ).sets
            conj_sets = _conj_pair_sets(a, i, tol)
            for hs in naive_sets:
                g_naive *= len(hs)
            for hs in conj_sets:
                g_conj *= len(hs)
            if full_sets != TIMEOUT:
                deadline = time.monotonic() + cfg.cell_budget_s
                try:
                    for hs in conj_sets:
                        full_sets = extend_disjunctive(
                            full_sets, hs, a.dimension, tol, deadline
                        )
                except BuildTimeout:
                    full_sets = TIMEOUT
            g_full = TIMEOUT if full_sets == TIMEOUT else len(full_sets)
            rows[i + 1] = {"g_naive": g_naive, "g_conj": g_conj, "g_full": g_full}
        per_rep.append(rows)
    out = []
    for l in range(1, cfg.length + 1):
        out.append(
            {
                "l": l,
                "g_naive": _mean([r[l]["g_naive"] for r in per_rep]),
                "g_conj": _mean([r[l]["g_conj"] for r in per_rep]),
                "g_full": _mean([r[l]["g_full"] for r in per_rep]),
            }
        )
    return out


def _epsilon_grid(cfg: ExperimentConfig) -> list[float]:
    grid = []
    eps = cfg.epsilon_start
    while eps <= cfg.epsilon_stop + 1e-12:
        grid.append(round(eps, 10))
        eps += cfg.epsilon_step
    return grid


def run_epsilon_experiment(
    cfg: ExperimentConfig, tol: ToleranceConfig = DEFAULT_TOLERANCE
) -> list[dict]:
    """Generator sizes under a contamination sweep of a single random pmf.

    For each contamination rate the same option sets are re-assessed by
    the contaminated model; columns record difference-set counts before
    and after simplification and the three selection-generator sizes.
    """
    grid = _epsilon_grid(cfg)
    per_rep: list[dict[float, dict]] = []
    for rep in range(cfg.reps):
        rng = np.random.default_rng(cfg.seed + rep)
        p = random_pmf(cfg.dim, rng)
        option_sets = tuple(
            random_option_set(rng, cfg.dim, cfg.set_size) for _ in range(cfg.length)
        )
        rows: dict[float, dict] = {}
        for eps in grid:
            model = ESet(members=(epsilon_contamination(p, eps),))
            a = build_assessment(model, option_sets, tol)
            naive = assessment_to_conjunctive_naive(a)
            conj = assessment_to_conjunctive(a, tol)
            deadline = time.monotonic() + cfg.cell_budget_s
            try:
                full = conjunctive_to_disjunctive_simplified(
                    conj, a.dimension, tol, deadline
                )
                g_full: object = len(full.sets)
            except BuildTimeout:
                g_full = TIMEOUT
            rows[eps] = {
                "h_naive": len(naive.sets),
                "h_simpl": len(conj.sets),
                "g_naive": disjunctive_size(naive),
                "g_conj": disjunctive_size(conj),
                "g_full": g_full,
            }
        per_rep.append(rows)
    out = []
    for eps in grid:
        row: dict = {"epsilon": eps}
        for col in ("h_naive", "h_simpl", "g_naive", "g_conj", "g_full"):
            row[col] = _mean([r[eps][col] for r in per_rep])
        out.append(row)
    return out


def _timed(fn, budget_s: float):
    """Run fn once under a wall-clock budget; returns (seconds, value) or
    (sentinel, None).  The feasibility cache is cleared first so repeated
    cells stay comparable."""
    feasibility.clear_caches()
    deadline = time.monotonic() + budget_s
    start = time.perf_counter()
    try:
        value = fn(deadline)
    except BuildTimeout:
        return TIMEOUT, None
    return time.perf_counter() - start, value


def run_timing_experiment(
    cfg: ExperimentConfig, tol: ToleranceConfig = DEFAULT_TOLERANCE
) -> list[dict]:
    """Build and query times per method as the assessment grows, plus the
    break-even number of queries after which the materialised generator
    pays for its build time."""
    per_rep: list[dict[int, dict]] = []
    for rep in range(cfg.reps):
        rng = np.random.default_rng(cfg.seed + rep)
        model = make_model(cfg.model, cfg.dim, rng, cfg.extremes_per_lowerexp)
        option_sets = tuple(
            random_option_set(rng, cfg.dim, cfg.set_size) for _ in range(cfg.length)
        )
        queries = tuple(
            random_option_set(rng, cfg.dim, cfg.set_size) for _ in range(cfg.queries)
        )
        a = build_assessment(model, option_sets, tol)
        rows: dict[int, dict] = {}
        for l in range(1, cfg.length + 1):
            prefix = Assessment(dimension=a.dimension, pairs=a.pairs[:l])
            t_build_naive, _ = _timed(
                lambda _d: assessment_to_conjunctive_naive(prefix), cfg.cell_budget_s
            )
            t_build_conj, _ = _timed(
                lambda _d: assessment_to_conjunctive(prefix, tol), cfg.cell_budget_s
            )
            clear_full_cache()
            t_build_full, _ = _timed(
                lambda d: full_generator(prefix, tol, d), cfg.cell_budget_s
            )
            row = {
                "t_build_naive": t_build_naive,
                "t_build_conj": t_build_conj,
                "t_build_full": t_build_full,
            }
            for method, col in (
                (Method.NAIVE, "t_choose_naive"),
                (Method.CONJUNCTIVE, "t_choose_conj"),
                (Method.FULL, "t_choose_full"),
            ):
                times = []
                for query in queries:
                    t, _ = _timed(
                        lambda d, q=query, m=method: natural_extension(
                            q, prefix, m, tol, deadline=d
                        ),
                        cfg.cell_budget_s,
                    )
                    times.append(t)
                row[col] = _mean(times)
            rows[l] = row
        per_rep.append(rows)
    out = []
    for l in range(1, cfg.length + 1):
        row: dict = {"l": l}
        for col in TIMING_COLUMNS[1:-1]:
            row[col] = _mean([r[l][col] for r in per_rep])
        row["breakeven_n"] = _breakeven(row)
        out.append(row)
    return out


def _breakeven(row: dict) -> object:
    """Number of queries after which the extra build cost of the full
    generator is repaid by its cheaper queries; blank when never."""
    vals = (
        row["t_build_full"],
        row["t_build_conj"],
        row["t_choose_conj"],
        row["t_choose_full"],
    )
    if any(v == TIMEOUT for v in vals):
        return ""
    extra_build = vals[0] - vals[1]
    saved_per_query = vals[2] - vals[3]
    if saved_per_query <= 0.0 or extra_build <= 0.0:
        return ""
    return extra_build / saved_per_query


def write_csv(rows: list[dict], columns: list[str], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=columns, extrasaction="ignore")
        writer.writeheader()
        writer.writerows(rows)
