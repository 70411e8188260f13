"""Duality operators and liaison-class classification.

Two linking families are supported: translates of S itself ("principal")
and translates of the canonical ideal K(S) ("canonical"). Each is governed
by a duality operator (S - . and K(S) - . respectively); an ideal admits a
direct link in a family exactly when it is reflexive for that family's
double dual, and its liaison class modulo translation then has at most two
elements.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import contains
from .errors import LengthMismatch
from .ideals import (
    RelativeIdeal,
    colon,
    equals,
    isomorphic,
    ideal_to_json,
    normalize,
    semigroup_as_ideal,
)

PRINCIPAL = "principal"
CANONICAL = "canonical"


@dataclass(frozen=True)
class LiaisonClassResult:
    theory: str  # PRINCIPAL or CANONICAL
    reflexive: bool
    representatives: tuple  # 1 or 2 normalized RelativeIdeals
    linking_ideal: object  # RelativeIdeal or None when no link exists
    collapsed: bool  # partner normalizes to the same window
    note: str = ""


def canonical_ideal(S):
    """K(S): the non-members of S reflected through F(S); normalized.

    Offset o is in K(S) iff F(S) - o is not in S. For S = N this is N.
    """
    F = S.frobenius
    window = tuple(not contains(S, F - o) for o in range(F + 1))
    return RelativeIdeal(S, 0, window)


def shifted_canonical(S, a):
    K = canonical_ideal(S)
    return RelativeIdeal(S, K.min_element + a, K.window)


def s_dual(I):
    """S - I, the dual of I against the principal ideal S."""
    return colon(semigroup_as_ideal(I.ambient), I)


def s_biclosure(I):
    """(S - (S - I)): extensive, idempotent; equals I iff I is S-reflexive."""
    return s_dual(s_dual(I))


def is_s_reflexive(I):
    return equals(I, s_biclosure(I))


def k_dual(I):
    """K(S) - I, the dual of I against the canonical ideal."""
    return colon(canonical_ideal(I.ambient), I)


def k_closure(I):
    """K(S) - (K(S) - I): extensive, idempotent; equals I iff K(S)-reflexive."""
    return k_dual(k_dual(I))


def is_k_reflexive(I):
    return equals(I, k_closure(I))


def is_directly_linked(I, J, L):
    """True iff J = L - I and I = L - J."""
    return equals(colon(L, I), J) and equals(colon(L, J), I)


def _classify(I, theory, dual, reflexive):
    S = I.ambient
    if S.frobenius < 0:
        # Over N every relative ideal is a translate of N: a single
        # universal class for either theory.
        rep = normalize(I)
        return LiaisonClassResult(
            theory, True, (rep,), semigroup_as_ideal(S), True,
            note="ambient is the whole of N; all ideals form one class",
        )
    rep = normalize(I)
    if not reflexive(rep):
        return LiaisonClassResult(theory, False, (rep,), None, False)
    partner = normalize(dual(rep))
    link = semigroup_as_ideal(S) if theory == PRINCIPAL else canonical_ideal(S)
    if isomorphic(rep, partner):
        return LiaisonClassResult(theory, True, (rep,), link, True)
    return LiaisonClassResult(theory, True, (rep, partner), link, False)


def principal_liaison_class(I):
    """Classify I in the principal theory (links a + S)."""
    return _classify(I, PRINCIPAL, s_dual, is_s_reflexive)


def canonical_liaison_class(I):
    """Classify I in the canonical theory (links a + K(S)).

    The partner is the normalization of K(S) - I, the ideal a direct link
    by a translate of K(S) actually produces.
    """
    return _classify(I, CANONICAL, k_dual, is_k_reflexive)


def verify_chain(ideals, links, require_even=False):
    """Check that consecutive ideals are directly linked by the given links."""
    if len(ideals) != len(links) + 1:
        raise LengthMismatch(
            "need exactly one more ideal than links: %d ideals, %d links"
            % (len(ideals), len(links))
        )
    if require_even and len(links) % 2 != 0:
        return False
    return all(
        is_directly_linked(ideals[k], ideals[k + 1], links[k])
        for k in range(len(links))
    )


def liaison_to_json(result):
    return {
        "theory": result.theory,
        "reflexive": result.reflexive,
        "collapsed": result.collapsed,
        "representatives": [ideal_to_json(r) for r in result.representatives],
        "linking_ideal": (
            ideal_to_json(result.linking_ideal)
            if result.linking_ideal is not None
            else None
        ),
    }
