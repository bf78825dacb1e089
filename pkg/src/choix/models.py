"""Probabilistic choice models used to synthesise assessments.

A model is a finite family of credal sets; each credal set is given by
its finitely many extreme probability mass functions and induces a lower
expectation.  An option u is chosen from A by the family when some
member's lower expectation finds no alternative with strictly positive
expected gain over u, and u is undominated in the componentwise order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    DEFAULT_TOLERANCE,
    Assessment,
    AssessmentPair,
    InputError,
    Options,
    ToleranceConfig,
    Vec,
    strictly_less,
    sub,
)


@dataclass(frozen=True)
class Pmf:
    """A probability mass function on the coordinate set."""

    probs: tuple[float, ...]

    def __post_init__(self) -> None:
        if not self.probs:
            raise InputError("a pmf needs at least one outcome")
        if any(p < 0.0 for p in self.probs):
            raise InputError(f"negative probability in {self.probs}")
        total = sum(self.probs)
        if abs(total - 1.0) > 1e-9:
            raise InputError(f"pmf sums to {total}, not 1")

    @property
    def dimension(self) -> int:
        return len(self.probs)


@dataclass(frozen=True)
class CredalSet:
    """A credal set given by its extreme pmfs; induces a lower expectation."""

    extremes: tuple[Pmf, ...]

    def __post_init__(self) -> None:
        if not self.extremes:
            raise InputError("a credal set needs at least one extreme pmf")
        dims = {p.dimension for p in self.extremes}
        if len(dims) > 1:
            raise InputError(f"mixed pmf dimensions: {sorted(dims)}")

    @property
    def dimension(self) -> int:
        return self.extremes[0].dimension


@dataclass(frozen=True)
class ESet:
    """A finite family of credal sets acting as one choice model."""

    members: tuple[CredalSet, ...]

    def __post_init__(self) -> None:
        if not self.members:
            raise InputError("a model needs at least one credal set")
        dims = {c.dimension for c in self.members}
        if len(dims) > 1:
            raise InputError(f"mixed credal set dimensions: {sorted(dims)}")

    @property
    def dimension(self) -> int:
        return self.members[0].dimension


def expectation(p: Pmf, u: Vec) -> float:
    if len(u) != p.dimension:
        raise InputError(f"dimension mismatch: {len(u)} vs {p.dimension}")
    return float(sum(pi * ui for pi, ui in zip(p.probs, u)))


def lower_expectation(c: CredalSet, u: Vec) -> float:
    """Lower expectation of a credal set: the minimum over its extremes."""
    return min(expectation(p, u) for p in c.extremes)


def choose_by_eset(
    es: ESet, A: Options, cfg: ToleranceConfig = DEFAULT_TOLERANCE
) -> Options:
    """Options of A chosen by the model, in input order.

    u is chosen when some credal set sees no alternative v with strictly
    positive lower expected gain v - u, and u is not componentwise
    dominated within A.  Ties at exactly zero gain are kept.
    """
    chosen: list[Vec] = []
    for u in A:
        if any(strictly_less(u, v, cfg) for v in A):
            continue
        for c in es.members:
            if all(lower_expectation(c, sub(v, u)) <= 0.0 for v in A):
                chosen.append(u)
                break
    return tuple(chosen)


def epsilon_contamination(p: Pmf, eps: float) -> CredalSet:
    """Contaminate a pmf: mix it with every degenerate pmf at rate eps.

    The resulting credal set has one extreme per outcome; duplicate
    extremes are merged, so eps = 0 gives back {p}.
    """
    if not 0.0 <= eps <= 1.0:
        raise InputError(f"contamination rate must lie in [0, 1], got {eps}")
    dim = p.dimension
    extremes: list[Pmf] = []
    seen: set[tuple[float, ...]] = set()
    for x in range(dim):
        probs = tuple(
            (1.0 - eps) * pi + (eps if i == x else 0.0) for i, pi in enumerate(p.probs)
        )
        if probs not in seen:
            seen.add(probs)
            extremes.append(Pmf(probs=probs))
    return CredalSet(extremes=tuple(extremes))


def random_pmf(dim: int, rng: np.random.Generator) -> Pmf:
    """A pmf drawn uniformly from the probability simplex."""
    if dim < 1:
        raise InputError("dimension must be at least 1")
    raw = rng.dirichlet(np.ones(dim))
    raw = raw / raw.sum()
    return Pmf(probs=tuple(float(x) for x in raw))


def random_option_set(
    rng: np.random.Generator,
    dim: int = 4,
    size_range: tuple[int, int] = (2, 8),
) -> Options:
    """An option set with uniformly drawn size and coordinates in [0, 1]."""
    lo, hi = size_range
    if lo < 1 or hi < lo:
        raise InputError(f"bad size range {size_range}")
    count = int(rng.integers(lo, hi + 1))
    return tuple(tuple(float(x) for x in rng.uniform(0.0, 1.0, dim)) for _ in range(count))


def build_assessment(
    es: ESet,
    option_sets: tuple[Options, ...],
    cfg: ToleranceConfig = DEFAULT_TOLERANCE,
) -> Assessment:
    """Record the model's choices on the given option sets as an
    assessment: each set contributes the pair (chosen, remainder)."""
    pairs: list[AssessmentPair] = []
    for A in option_sets:
        chosen = choose_by_eset(es, A, cfg)
        chosen_values = set(chosen)
        rejected = tuple(v for v in A if v not in chosen_values)
        pairs.append(AssessmentPair(chosen=chosen, rejected=rejected))
    return Assessment(dimension=es.dimension, pairs=tuple(pairs))


def make_model(
    kind: str,
    dim: int,
    rng: np.random.Generator,
    extremes_per_lowerexp: int = 4,
) -> ESet:
    """Construct one of the four stock model families.

    ``lin``: one credal set with a single pmf.  ``max``: one credal set
    with several extremes.  ``adm``: several single-pmf credal sets.
    ``imp``: several multi-extreme credal sets.
    """
    def lower(n_extremes: int) -> CredalSet:
        return CredalSet(extremes=tuple(random_pmf(dim, rng) for _ in range(n_extremes)))

    if kind == "lin":
        return ESet(members=(lower(1),))
    if kind == "max":
        return ESet(members=(lower(extremes_per_lowerexp),))
    if kind == "adm":
        return ESet(members=tuple(lower(1) for _ in range(3)))
    if kind == "imp":
        return ESet(members=tuple(lower(extremes_per_lowerexp) for _ in range(3)))
    raise InputError(f"unknown model kind {kind!r}; expected lin, max, adm or imp")
