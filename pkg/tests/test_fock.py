import itertools

import pytest
from hypothesis import given, settings, strategies as st

from fockcan.fock import (
    STRAIGHTEN, FockVector, OperatorWord, ShapeError, Step, apply_step, apply_word,
    k_weight, normalize, truncate_vector,
)
from fockcan.golden.raw_tensor import raw_tensor_action
from fockcan.laurent import ONE, Q, QINV, LaurentPoly, q_power, quantum_factorial
from fockcan.weights import DomainError, Signature, dominant_conjugate, eps_weight, parse_weight

S = Signature.parse


def K(sig, text, c=ONE):
    return FockVector.monomial(parse_weight(sig, text), c)


# straightening

def test_normalize_examples():
    sig = S("2,1|2")
    assert normalize(sig, [[3, 1], [0], [1, 4]]) == K(sig, "3,1|0|1,4")
    assert normalize(sig, [[1, 3], [0], [1, 4]]) == K(sig, "3,1|0|1,4", -QINV)
    assert normalize(sig, [[3, 1], [0], [4, 1]]) == K(sig, "3,1|0|1,4", -QINV)
    assert normalize(sig, [[1, 3], [0], [4, 1]]) == K(sig, "3,1|0|1,4", q_power(-2))
    assert normalize(sig, [[2, 2], [0], [1, 4]]).is_zero()
    with pytest.raises(ShapeError):
        normalize(sig, [[3], [0], [1, 4]])
    with pytest.raises(ShapeError):
        normalize(sig, [[3, 1], [1, 4]])


def test_straightening_constant():
    assert STRAIGHTEN == -QINV


def test_classical_last_factor_is_decreasing():
    sig = S("1+2")
    assert normalize(sig, [[0], [-1, 1]]) == K(sig, "0|1,-1", -QINV)


# the basic action

def test_single_F_on_two_factors():
    sig = S("1,1|0")
    v = K(sig, "0|0|")
    assert apply_step("F", 0, 1, v) == K(sig, "1|0|") + K(sig, "0|1|", Q)


def test_divided_square_on_two_factors():
    sig = S("1,1|0")
    assert apply_step("F", 0, 2, K(sig, "0|0|")) == K(sig, "1|1|")


def test_no_occurrence_gives_zero():
    sig = S("2,1|2")
    v = K(sig, "5,3|2|0,4")
    assert apply_step("F", 7, 1, v).is_zero()
    assert apply_step("E", 10, 1, v).is_zero()


def test_w_factor_moves():
    sig = S("1|1")
    # F_a w_{a+1} = w_a, E_a w_a = w_{a+1}
    assert apply_step("F", 0, 1, K(sig, "5|1")) == K(sig, "5|0")
    assert apply_step("E", 0, 1, K(sig, "5|0")) == K(sig, "5|1")
    assert apply_step("F", 0, 1, K(sig, "0|1")) == K(sig, "1|1") + K(sig, "0|0", q_power(1))


def test_operator_word_parsing_and_composition():
    w = OperatorWord.parse("F0^(2) F1^2, E3")
    assert w.steps == (Step("F", 0, 2), Step("F", 1, 2), Step("E", 3, 1))
    assert str(w) == "F0^(2) F1^(2) E3"
    sig = S("1,1|0")
    v = K(sig, "0|0|")
    assert apply_word(OperatorWord(), v) == v
    assert apply_word(OperatorWord.parse("F0"), v) == apply_step("F", 0, 1, v)
    with pytest.raises(ValueError):
        OperatorWord.parse("G1")


def test_procedure_word_leading_term():
    sig = S("1,1|2")
    out = apply_word(OperatorWord.parse("F0^(2) F1^(2)"), K(sig, "0|0|1,2"))
    assert out.coeff(parse_weight(sig, "2|2|1,2")) == ONE
    top = max(out.support(), key=lambda f: (f.values[0], f.values[1]))
    assert top == parse_weight(sig, "2|2|1,2")


def test_json_roundtrip():
    sig = S("2,1|1")
    v = K(sig, "5,3|2|2") + K(sig, "5,3|1|1", Q)
    data = v.to_json()
    assert data["terms"][0] == {"weight": [[5, 3], [1], [1]], "coeff": {"1": 1}}
    assert FockVector.from_json(data) == v


# equivariance of straightening against the raw tensor action

SIGS = [S("2|0"), S("3|0"), S("1|2"), S("1|3"), S("2,1|2"), S("1,2|1"), S("2+2"), S("1,1+3")]


def _raw_words(sig, values):
    out = []
    for a, b in sig.block_ranges():
        out.append(list(values[a:b]))
    return out


@pytest.mark.parametrize("sig", SIGS, ids=str)
@pytest.mark.parametrize("kind", ["E", "F"])
def test_action_on_raw_words_commutes_with_straightening(sig, kind):
    vals = range(-1, 3)
    for flat in itertools.product(vals, repeat=sig.size):
        words = _raw_words(sig, flat)
        lhs_in = normalize(sig, words)
        for a in (-1, 0, 1):
            lhs = apply_step(kind, a, 1, lhs_in)
            rhs = FockVector.zero(sig)
            for new, exp in raw_tensor_action(sig, words, kind, a):
                rhs = rhs + normalize(sig, new).scale(q_power(exp))
            assert lhs == rhs, (words, a)


# operator identities on random vectors

def vectors(sig, lo=-2, hi=2):
    def build(entries):
        out = FockVector.zero(sig)
        for vals, c in entries:
            try:
                f = dominant_conjugate(sig, vals)
            except Exception:
                continue
            out = out + FockVector.monomial(f, c)
        return out

    entry = st.tuples(
        st.lists(st.integers(lo, hi), min_size=sig.size, max_size=sig.size),
        st.dictionaries(st.integers(-2, 2), st.integers(-3, 3), max_size=2).map(LaurentPoly),
    )
    return st.lists(entry, min_size=1, max_size=4).map(build)


def _bracket_rhs(v, a):
    # (K_{a,a+1} - K_{a+1,a}) / (q - q^-1) acts on K_f by [k], k the K-weight
    out = FockVector.zero(v.sig)
    for f, c in v.items():
        k = k_weight(f, a)
        num = q_power(k) - q_power(-k)
        out = out + FockVector.monomial(f, c * num.divide_exact(Q - QINV))
    return out


ID_SIGS = [S("2,1|2"), S("1,1|1"), S("2+2"), S("1,2|2")]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(ID_SIGS).flatmap(vectors), st.integers(-2, 2), st.integers(-2, 2))
def test_commutator_relation(v, a, b):
    lhs = apply_step("E", a, 1, apply_step("F", b, 1, v)) - apply_step("F", b, 1, apply_step("E", a, 1, v))
    if a == b:
        assert lhs == _bracket_rhs(v, a)
    else:
        assert lhs.is_zero()


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(ID_SIGS).flatmap(vectors), st.integers(-2, 2), st.sampled_from("EF"))
def test_serre_relations(v, a, kind):
    def x(b, r, u):
        return apply_step(kind, b, r, u)

    for b in (a - 1, a + 1):
        # X_a^2 X_b - [2] X_a X_b X_a + X_b X_a^2 = 0 with divided powers
        lhs = x(a, 2, x(b, 1, v)) - x(a, 1, x(b, 1, x(a, 1, v))) + x(b, 1, x(a, 2, v))
        assert lhs.is_zero()
    far = a + 3
    assert x(a, 1, x(far, 1, v)) == x(far, 1, x(a, 1, v))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(ID_SIGS).flatmap(lambda s: vectors(s, -1, 1)), st.integers(-1, 1),
       st.sampled_from("EF"), st.integers(1, 4))
def test_divided_powers(v, a, kind, r):
    plain = v
    for _ in range(r):
        plain = apply_step(kind, a, 1, plain)
    div = apply_step(kind, a, r, v)
    assert plain == div.scale(quantum_factorial(r))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(ID_SIGS).flatmap(vectors), st.integers(-2, 2), st.sampled_from("EF"),
       st.integers(1, 3))
def test_weight_shift_of_support(v, a, kind, r):
    out = apply_step(kind, a, r, v)
    shifts = set()
    for f, _ in out.items():
        shifts.add(tuple(sorted(eps_weight(f).as_dict().items())))
    expected = set()
    for f, _ in v.items():
        d = dict(eps_weight(f).as_dict())
        sign = 1 if kind == "F" else -1
        d[a] = d.get(a, 0) - sign * r
        d[a + 1] = d.get(a + 1, 0) + sign * r
        expected.add(tuple(sorted((k, c) for k, c in d.items() if c)))
    assert shifts <= expected


# truncation

def test_truncate_vector_examples():
    sig = S("1,1|3")
    v = K(sig, "2|1|1,2,3", Q) + K(sig, "2|1|0,2,3")
    assert truncate_vector(v, 1) == K(S("1,1|1"), "2|1|1", Q) + K(S("1,1|1"), "2|1|0")
    assert truncate_vector(K(sig, "2|1|0,1,2") + K(sig, "2|1|0,1,3"), 1).is_zero()
    with pytest.raises(DomainError):
        truncate_vector(K(sig, "2|1|1,2,5"), 1)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([S("1,1|3"), S("2|3")]).flatmap(lambda s: vectors(s, -1, 2)),
       st.integers(-2, 0), st.sampled_from("EF"))
def test_truncation_commutes_with_low_steps(v, a, kind):
    v = FockVector(v.sig, {f: c for f, c in v.items() if f.is_plusplus()})
    lhs = truncate_vector(apply_step(kind, a, 1, v), 1)
    rhs = apply_step(kind, a, 1, truncate_vector(v, 1))
    assert lhs == rhs
