"""Domain types: option vectors, option sets, assessments, tolerances.

Options are real-valued vectors over a fixed finite coordinate set,
represented as tuples of floats.  Option sets are tuples of options;
they preserve input order and may contain duplicates.  An assessment is
a finite list of pairs (chosen, rejected) recording that every option in
``rejected`` was turned down when the options ``chosen + rejected`` were
on the table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

Vec = tuple[float, ...]
Options = tuple[Vec, ...]


class InputError(ValueError):
    """Raised for malformed user-supplied data (vectors, JSON, configs)."""


@dataclass(frozen=True)
class ToleranceConfig:
    """Numeric slack used throughout.

    ``tau`` is the slack for componentwise vector comparisons (exact by
    default) and ``lp_tol`` is the feasibility slack handed to the LP
    backend.
    """

    tau: float = 0.0
    lp_tol: float = 1e-9

    def __post_init__(self) -> None:
        if self.tau < 0.0 or self.lp_tol < 0.0:
            raise InputError("tolerances must be non-negative")


DEFAULT_TOLERANCE = ToleranceConfig()


def as_vec(values) -> Vec:
    """Coerce a sequence of numbers to an option vector, validating entries."""
    try:
        vec = tuple(float(x) for x in values)
    except (TypeError, ValueError) as exc:
        raise InputError(f"not a numeric vector: {values!r}") from exc
    if not vec:
        raise InputError("option vectors must have at least one coordinate")
    if any(not math.isfinite(x) for x in vec):
        raise InputError(f"non-finite coordinate in vector {vec}")
    return vec


def as_options(rows) -> Options:
    """Coerce a sequence of rows to an option set with a common dimension."""
    opts = tuple(as_vec(row) for row in rows)
    dims = {len(o) for o in opts}
    if len(dims) > 1:
        raise InputError(f"mixed dimensions in option set: {sorted(dims)}")
    return opts


def zero(dim: int) -> Vec:
    return (0.0,) * dim


def leq(u: Vec, v: Vec, cfg: ToleranceConfig = DEFAULT_TOLERANCE) -> bool:
    """Componentwise order: u is below v everywhere, up to ``cfg.tau``."""
    if len(u) != len(v):
        raise InputError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return all(ui <= vi + cfg.tau for ui, vi in zip(u, v))


def strictly_less(u: Vec, v: Vec, cfg: ToleranceConfig = DEFAULT_TOLERANCE) -> bool:
    """Strict version of the componentwise order: below everywhere and
    strictly below (beyond ``cfg.tau``) in at least one coordinate."""
    return leq(u, v, cfg) and any(vi - ui > cfg.tau for ui, vi in zip(u, v))


def is_positive(v: Vec, cfg: ToleranceConfig = DEFAULT_TOLERANCE) -> bool:
    """Whether v strictly dominates the zero option."""
    return strictly_less(zero(len(v)), v, cfg)


def sub(u: Vec, v: Vec) -> Vec:
    if len(u) != len(v):
        raise InputError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return tuple(ui - vi for ui, vi in zip(u, v))


def translate_set(options: Options, shift: Vec) -> Options:
    """Subtract ``shift`` from every option in the set, preserving order."""
    return tuple(sub(o, shift) for o in options)


def affine(option: Vec, scale: float, shift: Vec) -> Vec:
    if len(option) != len(shift):
        raise InputError(f"dimension mismatch: {len(option)} vs {len(shift)}")
    return tuple(scale * x + s for x, s in zip(option, shift))


@dataclass(frozen=True)
class AssessmentPair:
    """One elicited statement: every option in ``rejected`` was turned
    down from the set ``chosen + rejected``."""

    chosen: Options
    rejected: Options

    def __post_init__(self) -> None:
        object.__setattr__(self, "chosen", as_options(self.chosen))
        object.__setattr__(self, "rejected", as_options(self.rejected))
        if not self.chosen:
            raise InputError("the chosen part of a pair must be non-empty")
        if self.rejected and len(self.rejected[0]) != len(self.chosen[0]):
            raise InputError("chosen and rejected options differ in dimension")
        overlap = set(self.chosen) & set(self.rejected)
        if overlap:
            raise InputError(f"chosen and rejected overlap: {sorted(overlap)}")

    @property
    def dimension(self) -> int:
        return len(self.chosen[0])


@dataclass(frozen=True)
class Assessment:
    """A finite collection of (chosen, rejected) pairs of a common dimension."""

    dimension: int
    pairs: tuple[AssessmentPair, ...] = ()

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise InputError("dimension must be at least 1")
        object.__setattr__(self, "pairs", tuple(self.pairs))
        for pair in self.pairs:
            if pair.dimension != self.dimension:
                raise InputError(
                    f"pair of dimension {pair.dimension} in an assessment "
                    f"of dimension {self.dimension}"
                )


def rescale_assessment(a: Assessment, scale: float, shift: Vec) -> Assessment:
    """Apply the positive affine map ``x -> scale * x + shift`` to every
    option of every pair.  Such maps leave all choice conclusions intact."""
    if scale <= 0.0:
        raise InputError("scale must be strictly positive")
    pairs = tuple(
        AssessmentPair(
            chosen=tuple(affine(o, scale, shift) for o in p.chosen),
            rejected=tuple(affine(o, scale, shift) for o in p.rejected),
        )
        for p in a.pairs
    )
    return Assessment(dimension=a.dimension, pairs=pairs)
