"""Brute-force reference implementations over explicit integer ranges.

Everything here works on literal membership tables over a wide interval
[lower, upper], with no windowing tricks: the colon is a double loop over
the definition, enumeration filters all 2^F subsets, and the canonical
ideal reflects the gap set point by point. Slow on purpose; used to
cross-check the optimized paths and to adjudicate worked examples.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import contains
from .errors import EnumerationLimitExceeded, WindowTooNarrow
from .ideals import ideal_contains


@dataclass(frozen=True)
class ExplicitSet:
    lower: int
    upper: int
    table: tuple  # booleans over [lower, upper]

    def member(self, z):
        """Membership with the tail convention: above `upper` is a member."""
        if z > self.upper:
            return True
        if z < self.lower:
            return False
        return self.table[z - self.lower]

    def elements(self):
        return [self.lower + i for i, b in enumerate(self.table) if b]


def default_bounds(S):
    """Wide enough that both operands' tails and the result's are explicit."""
    F = S.frobenius
    return -2 * (F + 2), 3 * (F + 2)


def _require_wide(S, lower, upper):
    if upper - lower < 4 * (S.frobenius + 2):
        raise WindowTooNarrow(
            "range [%d, %d] too narrow for F = %d" % (lower, upper, S.frobenius)
        )


def explicit_from_ideal(I, lower=None, upper=None):
    S = I.ambient
    if lower is None or upper is None:
        lower, upper = default_bounds(S)
        lower = min(lower, I.min_element - (S.frobenius + 2))
        upper = max(upper, I.min_element + 2 * (S.frobenius + 2))
    table = tuple(ideal_contains(I, z) for z in range(lower, upper + 1))
    return ExplicitSet(lower, upper, table)


def explicit_from_semigroup(S, lower=None, upper=None):
    if lower is None or upper is None:
        lower, upper = default_bounds(S)
    table = tuple(contains(S, z) for z in range(lower, upper + 1))
    return ExplicitSet(lower, upper, table)


def agrees_with_ideal(E, I):
    """True iff the explicit set matches the canonical ideal on its range."""
    return all(
        E.table[z - E.lower] == ideal_contains(I, z)
        for z in range(E.lower, E.upper + 1)
    )


def oracle_colon(H, K, S):
    """Literal transcription of { z : z + K is contained in H }."""
    _require_wide(S, H.lower, H.upper)
    _require_wide(S, K.lower, K.upper)
    lower = min(H.lower, K.lower)
    upper = max(H.upper, K.upper)
    k_elems = [z for z in range(K.lower, K.upper + 1) if K.member(z)]
    table = tuple(
        all(H.member(z + k) for k in k_elems)
        for z in range(lower, upper + 1)
    )
    return ExplicitSet(lower, upper, table)


def oracle_canonical(S, lower=None, upper=None):
    """Reflect every non-member z of S through F(S), point by point."""
    if lower is None or upper is None:
        lower, upper = default_bounds(S)
    F = S.frobenius
    table = tuple(not contains(S, F - z) for z in range(lower, upper + 1))
    return ExplicitSet(lower, upper, table)


def oracle_enumerate(S):
    """Filter all subsets of [1, F] (offset 0 forced) by literal stability."""
    F = S.frobenius
    if F > 20:
        raise EnumerationLimitExceeded(
            "F(S) = %d exceeds the oracle's 2^F filter limit" % F
        )
    lower, upper = default_bounds(S)
    members = [s for s in range(1, F + 1) if contains(S, s)]
    out = []
    if F < 0:
        table = tuple(z >= 0 for z in range(lower, upper + 1))
        return [ExplicitSet(lower, upper, table)]
    for mask in range(2 ** F):
        window = [True] + [bool(mask >> (o - 1) & 1) for o in range(1, F + 1)]
        stable = all(
            window[o + s]
            for o in range(F + 1)
            if window[o]
            for s in members
            if o + s <= F
        )
        if not stable:
            continue
        table = tuple(
            0 <= z <= F and window[z] or z > F
            for z in range(lower, upper + 1)
        )
        out.append(ExplicitSet(lower, upper, table))
    out.sort(key=lambda E: E.table)
    return out
