import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from fockcan.weights import (
    DomainError, Kind, LambdaWeight, LOperatorUnresolved, NoDominantConjugate,
    ParseError, Signature, UnsupportedSignature, Weight, WeightError, WeightWindow,
    WindowExceeded, apply_sigma, atypicality, classical_bruhat_leq, default_pairing,
    dominant_conjugate, downset, eps_weight, is_minimal, l_operator, l_theta,
    natural_bijection, natural_bijection_inverse, neg_w0, parse_weight,
    positive_pairs, rho_shift, rho_unshift, super_bruhat_leq, truncate_weight,
)
from oracles import brute_downset
from strategies import dominant_weights

S = Signature.parse
S21 = S("2,1|1")
S111 = S("1,1|1")
S112 = S("1,1|2")
C111 = S("1,1+1")


def w(sig, text):
    return parse_weight(sig, text)


# parsing and formatting

def test_signature_roundtrip():
    assert str(S21) == "2,1|1"
    assert S("2,1+6").kind is Kind.CLASSICAL
    assert Signature.parse("2,1|6", "classical") == S("2,1+6")
    assert Signature.from_json(S21.to_json()) == S21


def test_weight_text_forms():
    assert w(S21, "5,3|2|2").values == (5, 3, 2, 2)
    assert w(S111, "0,-1|-1") == w(S111, "0|-1|-1")
    assert str(w(S112, "0|3|2,3")) == "0|3|2,3"
    with pytest.raises(ParseError):
        w(S21, "3,5|2|2")
    with pytest.raises(ParseError):
        w(S21, "5,3|2")


def test_index_access():
    f = w(S21, "5,3|2|7")
    assert [f[i] for i in S21.indices()] == [5, 3, 2, 7]
    assert f.blocks() == ((5, 3), (2,), (7,))


def test_plusplus_predicate():
    assert w(S112, "0|1|1,2").is_plusplus()
    assert not w(S112, "0|1|1,3").is_plusplus()
    assert Weight(S("1+2"), (0, 0, -1)).is_plusplus()
    assert not Weight(S("1+2"), (0, 0, -2)).is_plusplus()


# rho-shift

def test_rho_shift_examples():
    assert rho_shift(LambdaWeight(S111, (0, 0, 0))).values == (2, 1, 1)
    assert rho_shift(LambdaWeight(C111, (0, 0, 0))).values == (2, 1, 0)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([S21, S111, S112, C111, S("1,2+3")]), st.data())
def test_rho_shift_roundtrip(sig, data):
    coeffs = data.draw(st.lists(st.integers(-6, 6), min_size=sig.size, max_size=sig.size))
    lam = LambdaWeight(sig, tuple(coeffs))
    assert rho_unshift(rho_shift(lam)) == lam


# epsilon weights and atypicality

def test_eps_weight_examples():
    assert eps_weight(w(S111, "2,1|1")).as_dict() == {2: 1}
    assert eps_weight(w(C111, "2|1|0")).as_dict() == {2: 1, 1: 1, 0: 1}
    assert eps_weight(w(S111, "0,0|0")).as_dict() == {0: 1}
    assert str(eps_weight(w(C111, "2|1|0"))) == "e2+e1+e0"


def test_atypicality_examples():
    assert atypicality(w(S111, "0,0|0")) == 1
    assert atypicality(w(S21, "5,3|1|2")) == 0
    assert atypicality(w(S112, "0|3|2,3")) == 1
    with pytest.raises(DomainError):
        atypicality(w(C111, "2|1|0"))


# dominant conjugates

def test_dominant_conjugate_examples():
    assert dominant_conjugate(S21, (3, 5, 2, 2)).values == (5, 3, 2, 2)
    with pytest.raises(NoDominantConjugate):
        dominant_conjugate(S21, (2, 2, 0, 1))
    assert dominant_conjugate(S112, (0, 1, 2, 1)).values == (0, 1, 1, 2)
    assert dominant_conjugate(C111, (0, 1, 2)).values == (0, 1, 2)
    assert dominant_conjugate(S("1+2"), (0, 1, 2)).values == (0, 2, 1)


# orderings

def test_super_bruhat_examples():
    assert super_bruhat_leq(w(S111, "0,-1|-1"), w(S111, "0,0|0"))
    assert super_bruhat_leq(w(S111, "0,1|1"), w(S111, "1,0|1"))
    assert not super_bruhat_leq(w(S111, "1,0|1"), w(S111, "0,1|1"))
    assert not super_bruhat_leq(w(S111, "2,1|1"), w(S111, "0,0|0"))


def test_classical_bruhat_examples():
    f = w(C111, "2|1|0")
    assert classical_bruhat_leq(f, f)
    assert classical_bruhat_leq(w(C111, "2|0|1"), f)
    assert not classical_bruhat_leq(f, w(C111, "2|0|1"))
    assert not classical_bruhat_leq(w(C111, "3|1|0"), f)


def test_window_overflow():
    f = w(S111, "0,0|0")
    with pytest.raises(WindowExceeded):
        super_bruhat_leq(w(S111, "0,-5|-5"), f, WeightWindow(-2, 0))
    with pytest.raises(WindowExceeded):
        downset(f, WeightWindow(-30, 0, max_size=5))


ORDER_SIGS = [S("1|1"), S("2|1"), S111, S21, S("1,2|1"), S112, S("1,1,1|1"), S("2|2"), S("1|2")]


def _random_dominant(rng, sig, lo=-2, hi=3):
    while True:
        vals = [rng.randint(lo, hi) for _ in range(sig.size)]
        try:
            return dominant_conjugate(sig, vals)
        except NoDominantConjugate:
            pass


@pytest.mark.parametrize("sig", ORDER_SIGS, ids=str)
def test_downset_matches_raw_function_search(sig):
    rng = random.Random(str(sig))
    for _ in range(25):
        f = _random_dominant(rng, sig)
        lo = min(f.values) - 2
        assert downset(f, WeightWindow(lo, max(f.values))) == brute_downset(f, lo)


@pytest.mark.parametrize("sig", ORDER_SIGS[:6], ids=str)
def test_leq_matches_raw_function_search_on_box(sig):
    rng = random.Random("box" + str(sig))
    for _ in range(6):
        f = _random_dominant(rng, sig, -1, 2)
        lo = min(f.values) - 2
        below = set(brute_downset(f, lo))
        for vals in itertools.product(range(lo, max(f.values) + 1), repeat=sig.size):
            g = Weight(sig, vals)
            if g.is_dominant():
                assert super_bruhat_leq(g, f) == (g in below), (g, f)


@pytest.mark.parametrize("sig", [S("1,1+1"), S("2,1+1"), S("1,1+2")], ids=str)
def test_classical_leq_matches_raw_function_search(sig):
    rng = random.Random(str(sig))
    for _ in range(15):
        f = _random_dominant(rng, sig)
        below = set(brute_downset(f, min(f.values)))
        for vals in set(itertools.permutations(f.values)):
            g = Weight(sig, vals)
            if g.is_dominant():
                assert classical_bruhat_leq(g, f) == (g in below)


def _box(sig, lo, hi):
    for vals in itertools.product(range(lo, hi + 1), repeat=sig.size):
        g = Weight(sig, vals)
        if g.is_dominant():
            yield g


@pytest.mark.parametrize("sig", [S111, S("2|1"), S("1|2")], ids=str)
def test_orders_are_partial_orders_on_a_window(sig):
    ws = list(_box(sig, -1, 1))
    leq = {(g, f): super_bruhat_leq(g, f) for g in ws for f in ws}
    for f in ws:
        assert leq[f, f]
    for g in ws:
        for f in ws:
            if g != f and leq[g, f]:
                assert not leq[f, g]
                assert eps_weight(g) == eps_weight(f)
                assert atypicality(g) == atypicality(f)
                for h in ws:
                    if leq[f, h]:
                        assert leq[g, h]


def test_is_minimal_examples():
    assert is_minimal(w(S112, "0|0|1,2"))
    assert not is_minimal(w(S111, "0,0|0"))
    assert is_minimal(w(S("1,1+0"), "1|2|"))
    assert not is_minimal(w(S("1,1+0"), "2|1|"))


def test_neg_w0():
    assert neg_w0(w(S21, "5,3|2|2")).values == (-3, -5, -2, -2)
    assert neg_w0(w(S111, "0,0|0")) == w(S111, "0,0|0")


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(ORDER_SIGS).flatmap(lambda sig: dominant_weights(sig, -5, 5)))
def test_neg_w0_is_an_involution(f):
    assert neg_w0(neg_w0(f)) == f


# truncation and the natural bijection

def test_truncate_weight_examples():
    s13 = S("1,1|3")
    assert truncate_weight(w(s13, "2,1|1,2,3"), 3, 1) == w(S111, "2,1|1")
    assert truncate_weight(w(s13, "2,1|1,2,5"), 3, 1) is None
    assert truncate_weight(Weight(S("1,1+2"), (2, 1, 0, -1)), 2, 1) == Weight(C111, (2, 1, 0))


def test_natural_bijection_examples():
    one = Weight(S("1+1"), (0, 1))
    assert natural_bijection(one, 3).values == (0, 0, 2, 3)
    vacuum = Weight(S("1+2"), (0, 0, -1))
    assert natural_bijection(vacuum, 3).values == (0, 1, 2, 3)
    with pytest.raises(WindowExceeded):
        natural_bijection(Weight(S("1+1"), (0, 3)), 2)


def _classical_window(blocks, N, lo, hi, parts):
    sig = Signature(blocks, N, Kind.CLASSICAL)
    out = []
    for vals in itertools.product(range(lo, hi + 1), repeat=sum(blocks)):
        for lam in parts:
            pos = tuple(x + 1 - j for j, x in enumerate(lam, 1))
            f = Weight(sig, vals + pos)
            if f.is_dominant():
                out.append(f)
    return out


PARTITIONS3 = [(0, 0, 0), (1, 0, 0), (2, 0, 0), (1, 1, 0), (2, 1, 0), (1, 1, 1), (3, 0, 0)]


def test_natural_bijection_roundtrip_and_order():
    ws = _classical_window((1, 1), 3, -2, 2, PARTITIONS3)
    images = {f: natural_bijection(f, 4) for f in ws}
    assert len(set(images.values())) == len(ws)
    for f, g in images.items():
        assert natural_bijection_inverse(g, 3) == f
    for f in ws:
        for g in ws:
            if eps_weight(f) != eps_weight(g):
                continue
            assert classical_bruhat_leq(g, f) == super_bruhat_leq(images[g], images[f])


# L-operators and positive pairs

def test_l_operator_examples():
    assert l_operator(w(S112, "0|3|2,3"), -1, 2) == w(S112, "0|1|1,2")
    assert l_operator(w(S21, "5,3|2|2"), -1, 1) == w(S21, "5,3|1|1")
    with pytest.raises(WeightError):
        l_operator(w(S21, "5,3|1|2"), -1, 1)
    with pytest.raises(LOperatorUnresolved):
        l_operator(w(S21, "5,3|2|2"), -1, 1, bound=0)


def test_l_theta_examples():
    f = w(S21, "5,3|2|2")
    assert l_theta(f, [0]) == f
    assert l_theta(f, [1]) == w(S21, "5,3|1|1")
    assert l_theta(w(S112, "0|3|2,3"), [1]) == w(S112, "0|1|1,2")
    with pytest.raises(WeightError):
        l_theta(f, [1, 0])


def test_l_operator_respects_earlier_pairs():
    # lowering the pair at j=2 by 1 would collide with the image of the
    # pair at j=1 once that is lowered, so the shift must skip past it
    f = w(S("1,1|2"), "3|2|2,3")
    assert default_pairing(f) == [(-2, 2), (-1, 1)]
    assert l_operator(f, -1, 1) == w(S("1,1|2"), "3|1|1,3")
    # a=1 repeats a w-value, a=2 fails on the lowered earlier pair
    assert l_operator(f, -2, 2) == w(S("1,1|2"), "0|2|0,2")


def test_default_pairing_uses_largest_j_first():
    f = w(S("1,1|2"), "0|3|0,3")
    assert default_pairing(f) == [(-1, 2), (-2, 1)]


def test_positive_pairs_examples():
    assert positive_pairs(w(S21, "5,3|2|2")) == [(-2, -1)]
    assert positive_pairs(w(S112, "0|3|2,3")) == []
    assert positive_pairs(w(S21, "5,3|1|2")) == [(-2, -1)]
    with pytest.raises(UnsupportedSignature):
        positive_pairs(w(S("1,1,1|1"), "0|1|2|3"))


def test_apply_sigma_examples():
    f = w(S21, "5,3|2|2")
    assert apply_sigma(f, []) == f
    assert apply_sigma(f, [(-2, -1)]) == w(S21, "5,2|3|2")
    assert apply_sigma(w(S21, "5,3|1|2"), [(-2, -1)]) == w(S21, "5,1|3|2")


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([S21, S("1,2|1"), S("2,2|0"), S("2,2|1")]).flatmap(
    lambda sig: dominant_weights(sig, -3, 4)))
def test_positive_pairs_are_disjoint_and_lower(f):
    pairs = positive_pairs(f)
    assert len({i for i, _ in pairs}) == len(pairs)
    assert len({j for _, j in pairs}) == len(pairs)
    for p in pairs:
        g = apply_sigma(f, [p])
        assert g != f and super_bruhat_leq(g, f)
