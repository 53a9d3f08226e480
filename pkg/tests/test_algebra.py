"""Core skew-polynomial arithmetic and morphism machinery."""

import json

import pytest
from hypothesis import given, settings, strategies as st

from glq.laurent import QLaurent
from glq.algebra import (
    AlgebraSignature,
    Morphism,
    Polynomial,
    SignatureError,
    apply_morphism,
    check_morphism,
    make_algebra,
    normal_mul,
    q_commutation_exponent,
)


def test_laurent_ring_ops():
    a = QLaurent({0: 1, 2: 3})
    b = QLaurent({-1: 2})
    assert (a + b) - b == a
    assert a * QLaurent({0: 1}) == a
    assert (a * b).min_exp() == -1
    assert QLaurent({}).is_zero()
    assert a.shift(2) == QLaurent({2: 1, 4: 3})


def test_laurent_shift_between():
    a = QLaurent({3: 5})
    b = QLaurent({-1: 5})
    assert a.shift_between(b) == 4
    assert QLaurent({0: 1, 1: 1}).shift_between(QLaurent({0: 1, 2: 1})) is None


def test_laurent_json_roundtrip():
    a = QLaurent({-2: 7, 5: -1})
    assert QLaurent.from_json(a.to_json()) == a


def test_laurent_numeric_eval():
    a = QLaurent({2: 1})
    assert abs(a(2.0) - 4.0) < 1e-12


def _sig(n, rng_entries):
    C = [[0] * n for _ in range(n)]
    idx = 0
    for i in range(n):
        for j in range(i + 1, n):
            C[i][j] = rng_entries[idx % len(rng_entries)]
            C[j][i] = -C[i][j]
            idx += 1
    return make_algebra([f"x{k}" for k in range(n)], C)


def test_signature_rejects_non_antisymmetric():
    with pytest.raises(SignatureError):
        make_algebra(["x", "y"], [[0, 1], [1, 0]])


def test_generator_commutation_matches_signature():
    sig = make_algebra(["x", "y"], [[0, 1], [-1, 0]])
    x = Polynomial.generator(sig, "x")
    y = Polynomial.generator(sig, "y")
    # x y = q^2 y x
    assert x * y == (y * x).q_shift(2)
    assert q_commutation_exponent(x, y) == 1


def test_normal_mul_merges_exponents():
    sig = make_algebra(["x", "y"], [[0, 1], [-1, 0]])
    x = Polynomial.generator(sig, "x")
    y = Polynomial.generator(sig, "y")
    p = (y * x) * (y * x)
    (mono, coef), = p.terms.items()
    assert mono == (2, 2)


@st.composite
def _poly_triples(draw):
    n = draw(st.integers(min_value=2, max_value=12))
    entries = draw(
        st.lists(st.integers(min_value=-2, max_value=2), min_size=3, max_size=8)
    )
    sig = _sig(n, entries or [1])
    polys = []
    for _ in range(3):
        terms = draw(
            st.lists(
                st.tuples(
                    st.lists(
                        st.integers(min_value=-2, max_value=3),
                        min_size=n, max_size=n,
                    ),
                    st.integers(min_value=-3, max_value=3),
                    st.integers(min_value=-2, max_value=2),
                ),
                min_size=1, max_size=4,
            )
        )
        p = Polynomial.zero(sig)
        for exps, coef, qpow in terms:
            if coef:
                p = p + Polynomial.monomial(sig, tuple(exps), QLaurent({qpow: coef}))
        polys.append(p)
    return sig, polys


@settings(max_examples=1000, deadline=None)
@given(_poly_triples())
def test_multiplication_associative(data):
    _, (p, r, s) = data
    assert (p * r) * s == p * (r * s)


@settings(max_examples=300, deadline=None)
@given(_poly_triples())
def test_multiplication_distributive(data):
    _, (p, r, s) = data
    assert p * (r + s) == p * r + p * s
    assert (r + s) * p == r * p + s * p


@settings(max_examples=300, deadline=None)
@given(_poly_triples())
def test_pairing_antisymmetric_bilinear(data):
    sig, _ = data
    n = len(sig.names)
    e = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    for i in range(min(n, 4)):
        for j in range(min(n, 4)):
            assert sig.pairing(e[i], e[j]) == -sig.pairing(e[j], e[i])
    if n >= 3:
        a, b, c = e[0], e[1], e[2]
        ab = tuple(x + y for x, y in zip(a, b))
        assert sig.pairing(ab, c) == sig.pairing(a, c) + sig.pairing(b, c)


def test_q_commutation_exponent_none_for_non_monomial_ratio():
    sig = make_algebra(["x", "y", "z"], [[0, 1, 0], [-1, 0, 0], [0, 0, 0]])
    x = Polynomial.generator(sig, "x")
    y = Polynomial.generator(sig, "y")
    z = Polynomial.generator(sig, "z")
    assert q_commutation_exponent(x, y) == 1
    assert q_commutation_exponent(x, z) == 0
    assert q_commutation_exponent(x + y, x) is None


def test_q_commutation_exponent_rejects_zero():
    sig = make_algebra(["x"], [[0]])
    x = Polynomial.generator(sig, "x")
    with pytest.raises(ValueError):
        q_commutation_exponent(x, Polynomial.zero(sig))


def test_morphism_check_and_apply():
    src = make_algebra(["x", "y"], [[0, 1], [-1, 0]])
    tgt = make_algebra(["u", "v"], [[0, 1], [-1, 0]])
    f = Morphism(src, tgt, [(0, (1, 0)), (0, (0, 1))])
    assert f.check()["pass"]
    x = Polynomial.generator(src, "x")
    y = Polynomial.generator(src, "y")
    p = x * y + y
    assert apply_morphism(p * p, f) == apply_morphism(p, f) * apply_morphism(p, f)


def test_morphism_check_reports_violation():
    src = make_algebra(["x", "y"], [[0, 1], [-1, 0]])
    tgt = make_algebra(["u", "v"], [[0, 0], [0, 0]])
    f = Morphism(src, tgt, [(0, (1, 0)), (0, (0, 1))])
    rep = f.check()
    assert not rep["pass"]
    assert rep["violations"][0]["expected"] == 1
    assert rep["violations"][0]["observed"] == 0


@settings(max_examples=200, deadline=None)
@given(_poly_triples())
def test_apply_morphism_is_multiplicative(data):
    sig, (p, r, _) = data
    n = len(sig.names)
    # identity-like morphism with shuffled q-prefactors stays multiplicative
    images = [
        (i % 3, tuple(1 if j == i else 0 for j in range(n)))
        for i in range(n)
    ]
    f = Morphism(sig, sig, images)
    assert apply_morphism(p * r, f) == apply_morphism(p, f) * apply_morphism(r, f)


def test_direct_sum_disjoint_copies():
    sig = make_algebra(["x", "y"], [[0, 1], [-1, 0]])
    big = sig.direct_sum(sig, rename=lambda s: s + "'")
    assert big.names == ("x", "y", "x'", "y'")
    i, j = big.index("x"), big.index("y'")
    assert big.C[i][j] == 0


def test_polynomial_json_roundtrip():
    sig = make_algebra(["x", "y"], [[0, 1], [-1, 0]])
    x = Polynomial.generator(sig, "x")
    y = Polynomial.generator(sig, "y")
    p = x * y * y + x.q_shift(-2)
    blob = json.dumps(p.to_json())
    assert Polynomial.from_json(sig, json.loads(blob)) == p
