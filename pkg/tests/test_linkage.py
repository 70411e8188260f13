import pytest

from sgplink import (
    canonical_ideal,
    canonical_liaison_class,
    colon,
    enumerate_normalized_ideals,
    equals,
    format_ideal,
    ideal_from_generators,
    is_directly_linked,
    is_k_reflexive,
    is_s_reflexive,
    is_symmetric,
    isomorphic,
    k_closure,
    k_dual,
    liaison_to_json,
    minimal_ideal_generators,
    normalize,
    principal_liaison_class,
    s_biclosure,
    s_dual,
    semigroup_as_ideal,
    semigroup_from_generators,
    shifted_canonical,
    translate,
    verify_chain,
)
from sgplink.errors import LengthMismatch


def gens_of(I):
    return minimal_ideal_generators(I).generators


def test_s_dual_568(s568):
    S = semigroup_as_ideal(s568)
    K = canonical_ideal(s568)
    assert gens_of(s_dual(K)) == (6, 8, 10)
    d = s_dual(translate(S, 5))
    assert gens_of(d) == (-5,)
    assert equals(s_dual(S), S)


def test_s_biclosure_568(s568):
    S = semigroup_as_ideal(s568)
    K = canonical_ideal(s568)
    assert gens_of(s_biclosure(K)) == (0, 2, 4)
    assert not equals(s_biclosure(K), K)
    assert equals(s_biclosure(S), S)
    I = translate(S, 5)
    assert equals(s_biclosure(I), I)


def test_s_reflexivity_568(s568):
    S = semigroup_as_ideal(s568)
    assert not is_s_reflexive(canonical_ideal(s568))
    assert is_s_reflexive(translate(S, 5))
    assert is_s_reflexive(S)


def test_canonical_ideal(s568, naturals):
    assert gens_of(canonical_ideal(s568)) == (0, 2)
    T = semigroup_from_generators([2, 3])
    assert equals(canonical_ideal(T), semigroup_as_ideal(T))
    KN = canonical_ideal(naturals)
    assert KN.min_element == 0 and KN.window == ()


def test_shifted_canonical(s568, naturals):
    K = canonical_ideal(s568)
    assert equals(shifted_canonical(s568, 0), K)
    K3 = shifted_canonical(s568, 3)
    assert K3.min_element == 3 and K3.window == K.window
    assert shifted_canonical(naturals, -2).min_element == -2


def test_k_dual_and_closure_568(s568):
    S = semigroup_as_ideal(s568)
    K = canonical_ideal(s568)
    assert equals(k_dual(S), K)
    assert equals(k_dual(K), S)
    assert equals(k_closure(K), K)
    assert equals(k_closure(S), S)
    J = ideal_from_generators(s568, [0, 2, 4])
    assert isomorphic(k_dual(J), J)  # self-partner modulo translation
    I = ideal_from_generators(s568, [0, 1, 3])
    C = k_closure(I)
    for o, b in enumerate(I.window):
        if b:
            assert C.contains(I.min_element + o)
    assert equals(C, I)  # K-reflexive, per exhaustive census


def test_direct_links_568(s568):
    S = semigroup_as_ideal(s568)
    K = canonical_ideal(s568)
    assert is_directly_linked(S, K, K)
    assert not is_directly_linked(K, ideal_from_generators(s568, [0, 2, 4]), S)
    # reflexive ideal: direct link with any translate of S
    I = ideal_from_generators(s568, [0, 1, 3])
    assert is_s_reflexive(I)
    for a in (-2, 0, 3):
        L = translate(S, a)
        assert is_directly_linked(I, colon(L, I), L)


def test_principal_class_568(s568):
    K = canonical_ideal(s568)
    res = principal_liaison_class(K)
    assert res.theory == "principal"
    assert not res.reflexive
    assert res.collapsed is False
    assert len(res.representatives) == 1
    assert equals(res.representatives[0], K)
    assert res.linking_ideal is None

    I5 = translate(semigroup_as_ideal(s568), 5)
    res = principal_liaison_class(I5)
    assert res.reflexive and res.collapsed
    assert len(res.representatives) == 1
    assert gens_of(res.representatives[0]) == (0,)

    J = ideal_from_generators(s568, [0, 2, 4])
    res = principal_liaison_class(J)
    assert res.reflexive and res.collapsed  # dual normalizes back to J
    assert equals(res.representatives[0], J)


def test_canonical_class_568(s568):
    K = canonical_ideal(s568)
    S = semigroup_as_ideal(s568)
    res = canonical_liaison_class(K)
    assert res.reflexive and not res.collapsed
    windows = sorted(r.window for r in res.representatives)
    assert windows == sorted([K.window, S.window])
    res2 = canonical_liaison_class(S)
    windows2 = sorted(r.window for r in res2.representatives)
    assert windows2 == windows

    T = semigroup_from_generators([2, 3])
    res3 = canonical_liaison_class(semigroup_as_ideal(T))
    assert res3.collapsed and len(res3.representatives) == 1


def test_naturals_classes(naturals):
    I = ideal_from_generators(naturals, [4])
    for fn in (principal_liaison_class, canonical_liaison_class):
        res = fn(I)
        assert res.reflexive and res.collapsed
        assert len(res.representatives) == 1
        assert res.note


def test_verify_chain(s568):
    S = semigroup_as_ideal(s568)
    K = canonical_ideal(s568)
    assert verify_chain([S, K], [K])
    assert not verify_chain([S, K], [K], require_even=True)
    assert verify_chain([S, K, S], [K, K], require_even=True)
    I = ideal_from_generators(s568, [0, 1, 3])
    J = s_dual(I)
    assert verify_chain([I, J, I], [S, S], require_even=True)
    with pytest.raises(LengthMismatch):
        verify_chain([S, K], [K, K])


def test_liaison_json(s568):
    js = liaison_to_json(canonical_liaison_class(canonical_ideal(s568)))
    assert js["theory"] == "canonical"
    assert js["reflexive"] is True
    assert js["collapsed"] is False
    assert len(js["representatives"]) == 2
    assert js["linking_ideal"]["generators"] == [0, 2]


def test_duality_properties_corpus(corpus):
    for S in corpus:
        ideals = enumerate_normalized_ideals(S)
        for I in ideals:
            bi = s_biclosure(I)
            kc = k_closure(I)
            # extensivity
            for o, b in enumerate(I.window):
                if b:
                    assert bi.contains(I.min_element + o)
                    assert kc.contains(I.min_element + o)
            # idempotence
            assert equals(s_biclosure(bi), bi)
            assert equals(k_closure(kc), kc)
            # triple dual collapses
            assert equals(s_dual(bi), s_dual(I))
            assert equals(k_dual(kc), k_dual(I))


def test_link_criterion_corpus(corpus):
    for S in corpus:
        Sid = semigroup_as_ideal(S)
        K = canonical_ideal(S)
        for I in enumerate_normalized_ideals(S):
            for a in range(-5, 6):
                L = translate(Sid, a)
                assert is_directly_linked(I, colon(L, I), L) == is_s_reflexive(I)
                Lk = translate(K, a)
                assert is_directly_linked(I, colon(Lk, I), Lk) == is_k_reflexive(I)


def test_translation_equivariance(s568):
    # Translating both ideals by t shifts the linking ideal by 2t, since
    # (L+t)-(I+t) = L-I drops the shift from J.
    S = semigroup_as_ideal(s568)
    K = canonical_ideal(s568)
    I013 = ideal_from_generators(s568, [0, 1, 3])
    J = s_dual(I013)
    for t in range(-10, 11):
        assert is_directly_linked(
            translate(S, t), translate(K, t), translate(K, 2 * t)
        )
        assert is_directly_linked(
            translate(I013, t), translate(J, t), translate(S, 2 * t)
        )


def test_symmetry_triad(corpus):
    for S in corpus:
        K = canonical_ideal(S)
        families_match = K.window == S.membership_window
        assert is_symmetric(S) == equals(K, semigroup_as_ideal(S)) == families_match
