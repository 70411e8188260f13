"""Relative ideals of a numerical semigroup in canonical finite form.

A relative ideal I of S is an up-stable subset of the integers (I + S is
contained in I) with a minimum element. It is stored as that minimum plus a
boolean offset window of length F(S) + 1; every integer past the window is
in I automatically, so set equality is equality of (min, window) pairs and
"modulo translation" is equality of windows alone.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import NumericalSemigroup, contains
from .errors import AmbientMismatch, EmptyInput


@dataclass(frozen=True)
class RelativeIdeal:
    ambient: NumericalSemigroup
    min_element: int
    window: tuple  # booleans over offsets [0, F]; offset 0 always set

    def contains(self, z):
        return ideal_contains(self, z)

    def __contains__(self, z):
        return ideal_contains(self, z)

    def __repr__(self):
        return "RelativeIdeal(%s over %r)" % (format_ideal(self), self.ambient)


@dataclass(frozen=True)
class IdealGenerators:
    generators: tuple  # sorted integers g with I = union of g + S, minimal


def _check_ambient(I, J):
    if I.ambient != J.ambient:
        raise AmbientMismatch(
            "ideals live over different semigroups: %r vs %r"
            % (I.ambient, J.ambient)
        )


def ideal_from_generators(S, G):
    """The union of g + S over g in G, in canonical form."""
    if not G:
        raise EmptyInput("ideal generator list is empty")
    m = min(G)
    F = S.frobenius
    window = tuple(
        any(contains(S, m + o - g) for g in G) for o in range(F + 1)
    )
    return RelativeIdeal(S, m, window)


def semigroup_as_ideal(S):
    """S itself viewed as the principal relative ideal 0 + S."""
    return RelativeIdeal(S, 0, S.membership_window)


def ideal_contains(I, z):
    if z < I.min_element:
        return False
    o = z - I.min_element
    if o > I.ambient.frobenius:
        return True
    return I.window[o]


def translate(I, t):
    return RelativeIdeal(I.ambient, I.min_element + t, I.window)


def normalize(I):
    """I shifted so its minimum is 0; the representative modulo translation."""
    return RelativeIdeal(I.ambient, 0, I.window)


def equals(I, J):
    _check_ambient(I, J)
    return I.min_element == J.min_element and I.window == J.window


def isomorphic(I, J):
    """True iff J is a translate of I, i.e. the normalizations coincide."""
    _check_ambient(I, J)
    return I.window == J.window


def colon(H, K):
    """The residuation H - K = { z : z + K is contained in H }.

    Candidates z run over [min(H)-min(K), min(H)+F-min(K)]; everything past
    that range is in the result (z + min(K) lands in H's tail), and nothing
    below it can be (z + min(K) falls below min(H)). For each candidate it
    suffices to test z + k for k in K's finite window, since larger k land
    in H's tail as well.
    """
    _check_ambient(H, K)
    S = H.ambient
    F = S.frobenius
    if F < 0:  # ambient is all of N: closed formula (m + N) - (n + N)
        return RelativeIdeal(S, H.min_element - K.min_element, ())

    lo = H.min_element - K.min_element
    tail = lo + F + 1
    k_elems = [K.min_element + o for o, b in enumerate(K.window) if b]
    hits = set()
    for z in range(lo, tail):
        if all(ideal_contains(H, z + k) for k in k_elems):
            hits.add(z)

    m = min(hits) if hits else tail
    window = tuple(
        (m + o) in hits or (m + o) >= tail for o in range(F + 1)
    )
    return RelativeIdeal(S, m, window)


def minimal_ideal_generators(I):
    """The unique minimal G with I equal to the union of g + S, g in G.

    Computed as I minus (I + M(S)) with M(S) the positive members; every
    minimal generator lies inside the window.
    """
    S = I.ambient
    offs = [o for o, b in enumerate(I.window) if b]
    gens = [
        I.min_element + o
        for o in offs
        if not any(o2 < o and contains(S, o - o2) for o2 in offs)
    ]
    if not gens:  # zero-length window over N
        gens = [I.min_element]
    return IdealGenerators(tuple(gens))


def format_ideal(I, raw=False):
    """Paper-style "(g1,...,gk)+S" notation; raw lists elements instead."""
    if raw:
        F = I.ambient.frobenius
        elems = [I.min_element + o for o, b in enumerate(I.window) if b]
        if not elems:
            elems = [I.min_element]
        return "{%s,...}" % ",".join(map(str, elems + [I.min_element + F + 1]))
    gens = minimal_ideal_generators(I).generators
    return "(%s)+S" % ",".join(map(str, gens))


def ideal_to_json(I):
    return {
        "min": I.min_element,
        "generators": list(minimal_ideal_generators(I).generators),
        "window_offsets": [o for o, b in enumerate(I.window) if b],
    }
