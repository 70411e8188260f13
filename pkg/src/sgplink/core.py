"""Numerical semigroups: construction, membership, Apery sets, symmetry.

A numerical semigroup S is an additively closed subset of the nonnegative
integers containing 0 with finite complement. Everything here is finite
and exact: membership is stored as a boolean window over [0, F] where F is
the Frobenius number (largest integer not in S, -1 when S is all of N), and
every integer above F is a member by definition.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd

from .errors import EmptyInput, GcdNotOne, NotAMember


@dataclass(frozen=True)
class NumericalSemigroup:
    minimal_generators: tuple
    frobenius: int
    gaps: tuple
    multiplicity: int
    membership_window: tuple  # booleans over [0, frobenius]

    def contains(self, z):
        return contains(self, z)

    def __contains__(self, z):
        return contains(self, z)

    def __repr__(self):
        return "NumericalSemigroup<%s>" % ",".join(map(str, self.minimal_generators))


def semigroup_from_generators(gens):
    """Build the smallest numerical semigroup containing the given generators.

    Duplicates are dropped and the generator list is minimalized: the
    resulting object records the unique minimal generating set, not the
    input. Raises GcdNotOne when the generated submonoid would have an
    infinite complement.
    """
    gens = sorted(set(gens))
    if not gens:
        raise EmptyInput("generator list is empty")
    if gens[0] < 1:
        raise ValueError("generators must be positive integers, got %r" % (gens,))
    if reduce(gcd, gens) != 1:
        raise GcdNotOne("gcd of generators %r is not 1" % (gens,))

    mult = gens[0]
    if mult == 1:
        return NumericalSemigroup((1,), -1, (), 1, ())

    # Sieve membership upward; once `mult` consecutive members appear,
    # everything beyond is a member.
    bound = max(gens) * 2
    while True:
        memb = [False] * (bound + 1)
        memb[0] = True
        for i in range(1, bound + 1):
            memb[i] = any(i >= g and memb[i - g] for g in gens)
        if all(memb[bound - mult + 1:]):
            break
        bound *= 2

    frob = max(i for i in range(bound + 1) if not memb[i])
    window = tuple(memb[: frob + 1])
    gap_list = tuple(i for i in range(frob + 1) if not memb[i])

    sgp = NumericalSemigroup((), frob, gap_list, mult, window)
    min_gens = tuple(_minimal_generators(sgp))
    return NumericalSemigroup(min_gens, frob, gap_list, mult, window)


def _minimal_generators(S):
    """Positive members not expressible as a sum of two positive members.

    All minimal generators are at most F(S) + multiplicity.
    """
    out = []
    for z in range(1, S.frobenius + S.multiplicity + 1):
        if not contains(S, z):
            continue
        decomposable = any(
            contains(S, a) and contains(S, z - a) for a in range(1, z)
        )
        if not decomposable:
            out.append(z)
    return out


def contains(S, z):
    """Membership test: true iff z is in S."""
    if z < 0:
        return False
    if z > S.frobenius:
        return True
    return S.membership_window[z]


def apery_set(S, n):
    """For each residue r mod n, the least member of S congruent to r.

    Returned as a list indexed by residue; entry at residue 0 is 0.
    """
    if n <= 0 or not contains(S, n):
        raise NotAMember("%d is not a positive member of %r" % (n, S))
    out = []
    for r in range(n):
        z = r
        while not contains(S, z):
            z += n
        out.append(z)
    return out


def is_symmetric(S):
    """True iff for every integer z exactly one of z, F(S)-z lies in S.

    Checked two ways (the pairing itself and the set equality with the
    gap reflection); the two must agree.
    """
    F = S.frobenius
    by_pairing = all(
        contains(S, z) != contains(S, F - z) for z in range(F + 1)
    )
    # Reflection of the non-members through F gives S exactly in the
    # symmetric case.
    reflection = tuple(not contains(S, F - o) for o in range(F + 1))
    by_reflection = reflection == S.membership_window
    assert by_pairing == by_reflection
    return by_pairing


def semigroup_to_json(S):
    return {
        "generators": list(S.minimal_generators),
        "frobenius": S.frobenius,
        "gaps": list(S.gaps),
        "multiplicity": S.multiplicity,
        "symmetric": is_symmetric(S),
    }
