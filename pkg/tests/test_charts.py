"""Chart construction, minor relations, determinants, coproduct."""

import itertools

import pytest

from glq.algebra import Polynomial, q_commutation_exponent
from glq.charts import (
    build_full,
    build_upper,
    coproduct_stability_check,
    entry_closed_form,
    folded_chart,
    full_chart,
    quantum_determinant,
    upper_chart,
    verify_glq2_relations,
    verify_row_order_independence,
)


def test_upper_chart_generator_order():
    chart = upper_chart(3)
    assert chart.sig.names == ("a11", "v1", "a21", "a22", "v2")


def test_upper_chart_arrows():
    # [PAPER] diagonal, same-row and row-above arrow rules
    chart = upper_chart(4)
    sig = chart.sig
    C = lambda g, h: sig.C[sig.index(g)][sig.index(h)]
    assert C("a21", "v2") == 1 and C("a22", "v2") == 1
    assert C("a21", "v1") == 0
    assert C("a22", "a21") == 1 and C("a21", "a22") == -1
    assert C("a21", "a11") == 1          # row above, n <= n'
    assert C("a22", "a11") == 0          # row above, n > n'
    assert C("a32", "a21") == 0 and C("a32", "a22") == 1
    assert C("a31", "a22") == 1
    assert C("a31", "v3") == 1 and C("a31", "v2") == 0


def test_full_chart_lower_half_arrows():
    # [DERIVED] the b arrows are reversed; forced by the minor relations
    chart = full_chart(3)
    sig = chart.sig
    C = lambda g, h: sig.C[sig.index(g)][sig.index(h)]
    assert C("b21", "b11") == -1
    assert C("b22", "b21") == -1
    assert C("b11", "u1") == -1
    assert C("b21", "u2") == -1 and C("b21", "u1") == 0
    assert C("b11", "a11") == 0 and C("b11", "v1") == 0
    assert C("u1", "v1") == 0


def test_chart_generator_counts():
    for N in (2, 3, 5):
        assert len(upper_chart(N).sig.names) == (N - 1) + N * (N - 1) // 2
        assert len(full_chart(N).sig.names) == 2 * (N - 1) + N * (N - 1)
        assert len(folded_chart(N).sig.names) == N * N


def test_build_upper_small_entries():
    chart, Z = build_upper(2)
    assert Z[1, 1] == chart.v(0)  # the unit
    assert Z[1, 2] == chart.a(1, 1)
    assert Z[2, 2] == chart.v(1)
    assert Z[2, 1].is_zero()


@pytest.mark.parametrize("N", [2, 3, 4])
def test_upper_minor_relations(N):
    _, Z = build_upper(N)
    assert verify_glq2_relations(Z)["pass"]


@pytest.mark.parametrize("N", [2, 3, 4])
def test_entry_closed_form_matches(N):
    chart, Z = build_upper(N)
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            assert entry_closed_form(chart, i, j) == Z[i, j]


@pytest.mark.parametrize("N", [2, 3, 4])
def test_full_minor_relations(N):
    _, Z = build_full(N)
    assert verify_glq2_relations(Z)["pass"]


def test_full_build_n2_entries():
    chart, Z = build_full(2)
    assert Z[1, 1] == chart.u(1)
    assert Z[1, 2] == chart.u(1) * chart.a(1, 1)
    assert Z[2, 1] == chart.b(1, 1) * chart.u(1)


def test_quantum_determinant_n2():
    # [PAPER] det_q of the N=2 decomposition is the diagonal product u1 v1
    chart, Z = build_full(2)
    det = quantum_determinant(Z, [1, 2], [1, 2])
    assert det == chart.u(1) * chart.T(2)


def test_quantum_determinant_rejects_bad_index_sets():
    _, Z = build_full(2)
    with pytest.raises(ValueError):
        quantum_determinant(Z, [1, 1], [1, 2])
    with pytest.raises(ValueError):
        quantum_determinant(Z, [1], [1, 2])


@pytest.mark.parametrize("N", [2, 3])
def test_row_order_independence(N):
    _, Z = build_full(N)
    rows = list(range(1, N + 1))
    assert verify_row_order_independence(Z, rows, rows)["pass"]


def test_determinant_quasi_commutes_with_entries():
    chart, Z = build_full(2)
    det = quantum_determinant(Z, [1, 2], [1, 2])
    for i in range(1, 3):
        for j in range(1, 3):
            assert q_commutation_exponent(det, Z[i, j]) is not None


@pytest.mark.parametrize("N", [2, 3])
def test_coproduct_stability(N):
    assert coproduct_stability_check(N)["pass"]


def test_single_entry_perturbations_all_detected():
    # flipping any single commutation arrow of the N=3 upper chart breaks
    # at least one minor relation of the built matrix
    chart, _ = build_upper(3)
    names = chart.sig.names
    n = len(names)
    base = [list(r) for r in chart.sig.C]
    cases = 0
    for i in range(n):
        for j in range(i + 1, n):
            for delta in (1, -1):
                C = [list(r) for r in base]
                C[i][j] += delta
                C[j][i] -= delta
                pert = upper_chart(3)
                pert.sig.C = tuple(tuple(r) for r in C)
                from glq.charts import _upper_factors, _diag, _elementary

                Z = _elementary(pert.sig, 3, {})
                Z = Z * _diag(pert.sig, 3, [pert.v(k - 1) for k in (1, 2, 3)])
                for F in _upper_factors(pert):
                    Z = Z * F
                assert not verify_glq2_relations(Z)["pass"], (names[i], names[j], delta)
                cases += 1
    assert cases == 20


def test_folded_chart_diagonal_arrows():
    chart = folded_chart(3)
    sig = chart.sig
    C = lambda g, h: sig.C[sig.index(g)][sig.index(h)]
    assert C("a11", "T2") == 1 and C("a11", "T1") == 0
    assert C("b11", "T1") == -1 and C("b11", "T2") == 0
    assert C("T1", "T2") == 0
    assert C("a21", "b21") == 0
