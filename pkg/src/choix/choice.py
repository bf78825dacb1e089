"""Top-level choice API: consistency of an assessment and evaluation of
the induced choice function on arbitrary finite option sets.

Three interchangeable evaluation methods are offered.  They differ only
in how much generator simplification is done up front and must agree on
every decision:

* ``naive``: unsimplified difference sets, selections streamed lazily;
* ``conjunctive``: per-set simplification, selections streamed lazily;
* ``full``: per-set simplification plus a materialised, fully
  simplified selection generator, cached per assessment.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .core import (
    DEFAULT_TOLERANCE,
    Assessment,
    InputError,
    Options,
    ToleranceConfig,
    Vec,
    as_options,
    is_positive,
    translate_set,
    zero,
)
from .feasibility import is_feasible
from .generators import (
    BuildTimeout,
    ConjGenerator,
    DisjGenerator,
    assessment_to_conjunctive,
    assessment_to_conjunctive_naive,
    conjunctive_to_disjunctive_simplified,
    disjunctive_stream,
)


def _guarded(stream: Iterator[Options], deadline: float | None) -> Iterator[Options]:
    for G in stream:
        if deadline is not None and time.monotonic() > deadline:
            raise BuildTimeout("selection stream exceeded its time budget")
        yield G


class Method(enum.Enum):
    NAIVE = "naive"
    CONJUNCTIVE = "conj"
    FULL = "full"

    @classmethod
    def parse(cls, name: str) -> "Method":
        for method in cls:
            if method.value == name:
                return method
        raise InputError(f"unknown method {name!r}; expected naive, conj or full")


@dataclass(frozen=True)
class ChoiceResult:
    """Partition of a query set into chosen and rejected options, with
    the consistency verdict for the underlying assessment.  Inconsistent
    assessments reject everything."""

    chosen: Options
    rejected: Options
    consistent: bool


_FULL_CACHE_LIMIT = 64
_full_cache: dict[tuple, DisjGenerator] = {}


def _fingerprint(a: Assessment, cfg: ToleranceConfig) -> tuple:
    return (a.dimension, a.pairs, cfg.tau, cfg.lp_tol)


def full_generator(
    a: Assessment,
    cfg: ToleranceConfig = DEFAULT_TOLERANCE,
    deadline: float | None = None,
) -> DisjGenerator:
    """Materialised simplified selection generator for an assessment,
    cached on the assessment contents and tolerances."""
    key = _fingerprint(a, cfg)
    cached = _full_cache.get(key)
    if cached is not None:
        return cached
    h = assessment_to_conjunctive(a, cfg)
    g = conjunctive_to_disjunctive_simplified(h, a.dimension, cfg, deadline)
    if len(_full_cache) >= _FULL_CACHE_LIMIT:
        _full_cache.pop(next(iter(_full_cache)))
    _full_cache[key] = g
    return g


def clear_full_cache() -> None:
    _full_cache.clear()


def _selections(
    a: Assessment,
    method: Method,
    cfg: ToleranceConfig,
    deadline: float | None = None,
) -> Callable[[], Iterator[Options]]:
    """A restartable stream of candidate selections for the assessment."""
    if method is Method.NAIVE:
        h = assessment_to_conjunctive_naive(a)
        return lambda: _guarded(disjunctive_stream(h), deadline)
    if method is Method.CONJUNCTIVE:
        h = assessment_to_conjunctive(a, cfg)
        return lambda: _guarded(disjunctive_stream(h), deadline)
    g = full_generator(a, cfg, deadline)
    return lambda: iter(g.sets)


def is_consistent_generator(
    gs: Iterable[Options],
    dim: int,
    cfg: ToleranceConfig = DEFAULT_TOLERANCE,
) -> bool:
    """An assessment is consistent when some selection has a consistent
    cone, i.e. zero is not feasible for it.  An empty stream is
    inconsistent."""
    origin = zero(dim)
    return any(not is_feasible(G, origin, cfg) for G in gs)


def is_chosen(
    A: Options,
    u: Vec,
    gs: Iterable[Options],
    cfg: ToleranceConfig = DEFAULT_TOLERANCE,
) -> bool:
    """Whether u survives in A: some selection fails the feasibility test
    for every translated alternative.  A strictly positive alternative
    rejects u outright."""
    diffs = translate_set(A, u)
    if any(is_positive(v, cfg) for v in diffs):
        return False
    for G in gs:
        if not any(is_feasible(G, v, cfg) for v in diffs):
            return True
    return False


def check_consistency(
    a: Assessment,
    method: Method = Method.FULL,
    cfg: ToleranceConfig = DEFAULT_TOLERANCE,
    deadline: float | None = None,
) -> bool:
    """Whether the assessment admits any coherent extension."""
    if method is Method.CONJUNCTIVE and assessment_to_conjunctive(a, cfg).inconsistent:
        return False
    stream = _selections(a, method, cfg, deadline)
    return is_consistent_generator(stream(), a.dimension, cfg)


def natural_extension(
    A: Options,
    a: Assessment,
    method: Method = Method.FULL,
    cfg: ToleranceConfig = DEFAULT_TOLERANCE,
    deadline: float | None = None,
) -> ChoiceResult:
    """Evaluate the least committal coherent extension of the assessment
    on the query set A.

    Duplicated options in A receive identical verdicts; input order is
    preserved in both parts of the result.
    """
    A = as_options(A)
    if not A:
        raise InputError("the query set must be non-empty")
    if len(A[0]) != a.dimension:
        raise InputError(
            f"query options of dimension {len(A[0])} against an assessment "
            f"of dimension {a.dimension}"
        )
    stream = _selections(a, method, cfg, deadline)
    if not is_consistent_generator(stream(), a.dimension, cfg):
        return ChoiceResult(chosen=(), rejected=A, consistent=False)
    verdicts: dict[Vec, bool] = {}
    for u in A:
        if u not in verdicts:
            verdicts[u] = is_chosen(A, u, stream(), cfg)
    chosen = tuple(u for u in A if verdicts[u])
    rejected = tuple(u for u in A if not verdicts[u])
    return ChoiceResult(chosen=chosen, rejected=rejected, consistent=True)
