"""Generator pipeline: from assessments to conjunctive and disjunctive
generator sets, with the simplification passes that keep them small.

A conjunctive generator is a list of option sets H, one per rejected
option of each assessment pair, holding the differences chosen - rejected.
A disjunctive generator collects selections that pick one option from
every H; choice questions are answered by a feasibility test against
some selection.
"""

from __future__ import annotations

import itertools
import logging
import math
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence, TypeVar

from .core import (
    DEFAULT_TOLERANCE,
    Assessment,
    Options,
    ToleranceConfig,
    Vec,
    is_positive,
    leq,
    sub,
    zero,
)
from .feasibility import g_ord, is_feasible, option_ord

logger = logging.getLogger(__name__)

T = TypeVar("T")


class BuildTimeout(RuntimeError):
    """A generator build exceeded its wall-clock deadline."""


@dataclass(frozen=True)
class ConjGenerator:
    """Conjunctive generator: a tuple of difference sets.

    ``inconsistent`` marks the degenerate single-empty-set generator that
    signals an assessment refuted outright during simplification.
    """

    sets: tuple[Options, ...]
    inconsistent: bool = False


@dataclass(frozen=True)
class DisjGenerator:
    """Materialised disjunctive generator: a tuple of selection sets."""

    sets: tuple[Options, ...]


def assessment_to_conjunctive_naive(a: Assessment) -> ConjGenerator:
    """Unsimplified conjunctive generator: one difference set per
    (pair, rejected option), containing chosen - rejected for every
    chosen option, in input order."""
    sets: list[Options] = []
    for pair in a.pairs:
        for w in pair.rejected:
            sets.append(tuple(sub(v, w) for v in pair.chosen))
    return ConjGenerator(sets=tuple(sets))


def assessment_to_conjunctive(
    a: Assessment, cfg: ToleranceConfig = DEFAULT_TOLERANCE
) -> ConjGenerator:
    """Simplified conjunctive generator.

    Within each difference set, non-positive entries are discarded (they
    can never witness the rejection) and strictly positive entries make
    the whole set redundant (the rejection already follows from the
    background ordering).  An emptied set refutes the assessment on the
    spot: the result is the single-empty-set generator with the
    inconsistency flag raised.  Surviving sets are reduced to their
    maximal options under single-option dominance.
    """
    origin = zero(a.dimension)
    sets: list[Options] = []
    for pair in a.pairs:
        for w in pair.rejected:
            diffs = tuple(sub(v, w) for v in pair.chosen)
            if any(is_positive(h, cfg) for h in diffs):
                continue
            kept = tuple(h for h in diffs if not leq(h, origin, cfg))
            if not kept:
                logger.warning(
                    "assessment pair rejects %s although no difference can "
                    "witness it; the assessment is inconsistent",
                    w,
                )
                return ConjGenerator(sets=((),), inconsistent=True)
            sets.append(tuple(max_elements(kept, lambda s, t: option_ord(s, t, cfg))))
    return ConjGenerator(sets=tuple(sets))


def disjunctive_stream(h: ConjGenerator) -> Iterator[Options]:
    """Lazily enumerate all selections of one option per difference set,
    in lexicographic order of the per-set indices.

    An empty conjunctive generator yields the single empty selection; a
    generator containing an empty set yields nothing.
    """
    for combo in itertools.product(*h.sets):
        yield tuple(combo)


def disjunctive_size(h: ConjGenerator) -> int:
    """Exact number of selections, as an arbitrary-precision integer."""
    return math.prod(len(hs) for hs in h.sets)


def max_elements(items: Sequence[T], dominated: Callable[[T, T], bool]) -> list[T]:
    """Maximal elements of ``items`` under the pre-order induced by
    ``dominated(s, t)`` (true when s is redundant next to t).

    Keeps the first-encountered representative of each equivalence class
    and spends at most n(n-1) comparisons.
    """
    kept: list[T] = []
    for s in items:
        if any(dominated(s, t) for t in kept):
            continue
        kept = [t for t in kept if not dominated(t, s)]
        kept.append(s)
    return kept


def min_cone_subset(
    G: Options, cfg: ToleranceConfig = DEFAULT_TOLERANCE
) -> Options:
    """Smallest subset of G spanning the same cone.

    Scans in index order and greedily drops any option that is strictly
    positive or already reachable from the remaining options; a dropped
    option never becomes necessary again, so one pass suffices.  Assumes
    the zero-feasibility test on G fails (the cone is consistent).
    """
    kept = list(G)
    i = 0
    while i < len(kept):
        u = kept[i]
        rest = tuple(kept[:i] + kept[i + 1 :])
        if is_positive(u, cfg) or is_feasible(rest, u, cfg):
            del kept[i]
        else:
            i += 1
    return tuple(kept)


def _check_deadline(deadline: float | None) -> None:
    if deadline is not None and time.monotonic() > deadline:
        raise BuildTimeout("generator build exceeded its time budget")


def simplify_disjunctive(
    g: DisjGenerator,
    cfg: ToleranceConfig = DEFAULT_TOLERANCE,
    deadline: float | None = None,
) -> DisjGenerator:
    """Simplify a materialised disjunctive generator: drop selections
    whose cone is inconsistent, minimise each survivor, and keep only the
    maximal selections under cone inclusion."""
    survivors: list[Options] = []
    for G in g.sets:
        _check_deadline(deadline)
        dim = len(G[0]) if G else 1
        if G and is_feasible(G, zero(dim), cfg):
            continue
        survivors.append(min_cone_subset(G, cfg))
    kept = max_elements(survivors, lambda s, t: g_ord(s, t, cfg))
    return DisjGenerator(sets=tuple(kept))


def extend_disjunctive(
    sets: Sequence[Options],
    H: Options,
    dim: int,
    cfg: ToleranceConfig = DEFAULT_TOLERANCE,
    deadline: float | None = None,
) -> list[Options]:
    """One step of the incremental simplified product: cross the current
    selections with one difference set, pruning as we go."""
    origin = zero(dim)
    candidates: list[Options] = []
    for G in sets:
        for h in H:
            _check_deadline(deadline)
            cand = G + (h,)
            if is_feasible(cand, origin, cfg):
                continue
            candidates.append(min_cone_subset(cand, cfg))
    _check_deadline(deadline)
    return max_elements(candidates, lambda s, t: g_ord(s, t, cfg))


def conjunctive_to_disjunctive_simplified(
    h: ConjGenerator,
    dim: int,
    cfg: ToleranceConfig = DEFAULT_TOLERANCE,
    deadline: float | None = None,
) -> DisjGenerator:
    """Materialise the simplified disjunctive generator by folding
    :func:`extend_disjunctive` over the difference sets.

    Never expands the full selection product: pruning happens after each
    difference set.  An inconsistent input collapses to the empty
    disjunctive generator.
    """
    sets: list[Options] = [()]
    for H in h.sets:
        sets = extend_disjunctive(sets, H, dim, cfg, deadline)
        if not sets:
            break
    return DisjGenerator(sets=tuple(sets))
