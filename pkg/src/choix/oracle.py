"""Exact-rational oracle for the LP feasibility predicate.

Decides, by Fourier-Motzkin elimination over ``fractions.Fraction``,
whether some strictly positive combination of a small generator set G
lies componentwise below a target v.  It shares no code with the
floating-point LP route in :mod:`choix.feasibility`; its purpose is to
cross-check that route in the test suite, so the admissible problem
sizes are deliberately tiny.
"""

from __future__ import annotations

from fractions import Fraction

from .core import InputError, Options, Vec

MAX_GENERATORS = 6
MAX_DIMENSION = 4

# One inequality sum_j coeffs[j] * lam_j <= rhs, strict when the flag is set.
Row = tuple[tuple[Fraction, ...], Fraction, bool]


def _to_fraction(x: float) -> Fraction:
    return Fraction(*float(x).as_integer_ratio())


def _normalise(coeffs: tuple[Fraction, ...], rhs: Fraction) -> Row:
    """Scale a row by a positive factor so its largest coefficient
    magnitude is one; makes parallel rows comparable."""
    scale = max(abs(c) for c in coeffs)
    return tuple(c / scale for c in coeffs), rhs / scale


def _eliminate(rows: list[Row], var: int) -> list[Row] | None:
    """Eliminate one variable, returning the reduced system or None when
    a contradictory constant row appears.

    Rows are normalised and deduplicated after each step; without this
    the row count grows out of hand beyond a handful of variables.
    """
    pos: list[Row] = []
    neg: list[Row] = []
    rest: list[Row] = []
    for coeffs, rhs, strict in rows:
        c = coeffs[var]
        if c > 0:
            pos.append((coeffs, rhs, strict))
        elif c < 0:
            neg.append((coeffs, rhs, strict))
        else:
            rest.append((coeffs, rhs, strict))
    out = list(rest)
    for pc, pr, ps in pos:
        for nc, nr, ns in neg:
            # Scale so the variable cancels: pc[var] > 0 > nc[var].
            a, b = pc[var], -nc[var]
            coeffs = tuple(b * x + a * y for x, y in zip(pc, nc))
            rhs = b * pr + a * nr
            out.append((coeffs, rhs, ps or ns))
    # Among parallel rows keep only the tightest; equal rows with and
    # without strictness reduce to the strict one.
    tightest: dict[tuple[Fraction, ...], tuple[Fraction, bool]] = {}
    for coeffs, rhs, strict in out:
        if all(c == 0 for c in coeffs):
            if rhs < 0 or (strict and rhs == 0):
                return None
            continue
        ncoeffs, nrhs = _normalise(coeffs, rhs)
        prev = tightest.get(ncoeffs)
        if prev is None or nrhs < prev[0]:
            tightest[ncoeffs] = (nrhs, strict)
        elif nrhs == prev[0]:
            tightest[ncoeffs] = (nrhs, prev[1] or strict)
    return [(coeffs, rhs, strict) for coeffs, (rhs, strict) in tightest.items()]


def fm_oracle(G: Options, v: Vec) -> bool:
    """Exact decision of the feasibility predicate for tiny instances.

    Raises :class:`InputError` when the instance exceeds the supported
    size; never approximates.
    """
    dim = len(v)
    m = len(G)
    if m > MAX_GENERATORS:
        raise InputError(f"oracle supports at most {MAX_GENERATORS} generators, got {m}")
    if dim > MAX_DIMENSION:
        raise InputError(f"oracle supports dimension at most {MAX_DIMENSION}, got {dim}")
    for g in G:
        if len(g) != dim:
            raise InputError(f"dimension mismatch: {len(g)} vs {dim}")
    if m == 0:
        return False

    gq = [tuple(_to_fraction(x) for x in g) for g in G]
    vq = tuple(_to_fraction(x) for x in v)

    rows: list[Row] = []
    for i in range(dim):
        rows.append((tuple(g[i] for g in gq), vq[i], False))
    for j in range(m):
        unit = tuple(Fraction(-1 if k == j else 0) for k in range(m))
        rows.append((unit, Fraction(0), False))
    rows.append((tuple(Fraction(-1) for _ in range(m)), Fraction(0), True))

    # Eliminate in minimum-fill order: the variable whose positive and
    # negative row counts produce the fewest combined rows goes first.
    remaining = set(range(m))
    while remaining:
        def fill(var: int) -> int:
            p = sum(1 for coeffs, _r, _s in rows if coeffs[var] > 0)
            n = sum(1 for coeffs, _r, _s in rows if coeffs[var] < 0)
            return p * n - p - n

        var = min(remaining, key=fill)
        remaining.discard(var)
        reduced = _eliminate(rows, var)
        if reduced is None:
            return False
        rows = reduced
    return True
