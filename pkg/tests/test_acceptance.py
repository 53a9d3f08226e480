"""Acceptance suite: one check per headline claim, one verdict line each.

Run with `pytest -s tests/test_acceptance.py` to see the verdict lines.
"""

import itertools
import time

import numpy as np
import pytest

from glq.charts import (
    _diag,
    _elementary,
    _upper_factors,
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
from glq.cluster import (
    cluster_monomial,
    initial_minor,
    p_exponent,
    verify_cluster_commutation,
)
from glq.classical import (
    PositiveParam,
    haar_density_check,
    initial_minors_classical,
    lusztig_matrix,
    params_from_minors,
)
from glq.numeric import (
    braid_phi_report,
    build_rep,
    reduced_words,
    word_chart,
)
from glq.tori import (
    DEFAULT_CONVENTION,
    check_convention_sweep,
    commutation_rank,
    full_embedding,
    published_table,
    reduced_embedding,
    symplectic_reduce,
    upper_embedding,
)


def _verdict(num, ok, text):
    print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {num}: {text}")
    assert ok, f"criterion {num}: {text}"


def test_criterion_01_upper_chart_relations():
    t0 = time.time()
    ok = True
    for N in range(2, 6):
        _, Z = build_upper(N)
        ok = ok and verify_glq2_relations(Z)["pass"]
    elapsed = time.time() - t0
    _verdict(1, ok and elapsed < 60.0,
             f"upper chart minor relations exact for N=2..5 in {elapsed:.1f}s")


def test_criterion_02_commutation_matrix_rigidity():
    # every single-arrow perturbation of the N=3 upper chart breaks at
    # least one minor relation; the 5-generator chart has 10 independent
    # off-diagonal arrows, hence 20 signed perturbations (the headline
    # count 27 would need 27/2 arrows, which no 5-generator chart has)
    chart, _ = build_upper(3)
    base = [list(r) for r in chart.sig.C]
    n = len(base)
    detected = 0
    cases = 0
    for i in range(n):
        for j in range(i + 1, n):
            for delta in (1, -1):
                C = [list(r) for r in base]
                C[i][j] += delta
                C[j][i] -= delta
                pert = upper_chart(3)
                pert.sig.C = tuple(tuple(r) for r in C)
                Z = _elementary(pert.sig, 3, {})
                Z = Z * _diag(pert.sig, 3, [pert.v(k - 1) for k in (1, 2, 3)])
                for F in _upper_factors(pert):
                    Z = Z * F
                cases += 1
                if not verify_glq2_relations(Z)["pass"]:
                    detected += 1
    _verdict(2, cases == 20 and detected == cases,
             f"all {detected}/{cases} single-arrow perturbations detected at N=3")


def test_criterion_03_cluster_monomials_equal_initial_minors():
    ok = True
    for N in range(2, 6):
        chart, Z = build_upper(N)
        for i in range(1, N + 1):
            for j in range(i, N + 1):
                if i < j:
                    ref = initial_minor(chart, Z, i, j)
                else:
                    ref = quantum_determinant(Z, range(1, i + 1),
                                              range(1, i + 1))
                ok = ok and cluster_monomial(chart, i, j) == ref
    _verdict(3, ok, "cluster monomials equal initial quantum minors, N=2..5")


def test_criterion_04_commutation_exponents_match_lattice_count():
    ok = True
    for N in range(2, 6):
        ok = ok and verify_cluster_commutation(N)["pass"]
    box = range(1, 7)
    for i, j, k, l in itertools.product(box, repeat=4):
        ok = ok and p_exponent(i, j, k, l) == -p_exponent(k, l, i, j)
        if j >= 2 and l >= 2:
            ok = ok and p_exponent(i, j, k, l) == p_exponent(i, j - 1, k, l - 1)
    _verdict(4, ok,
             "symbolic exponents equal the signed lattice count; antisymmetry "
             "and index recursion hold on the 1..6 box")


def test_criterion_05_full_chart_and_determinant():
    ok = True
    for N in range(2, 5):
        _, Z = build_full(N)
        ok = ok and verify_glq2_relations(Z)["pass"]
    for N in range(2, 4):
        ok = ok and coproduct_stability_check(N)["pass"]
    for N in range(2, 5):
        _, Z = build_full(N)
        rows = list(range(1, N + 1))
        ok = ok and verify_row_order_independence(Z, rows, rows)["pass"]
    chart, Z = build_full(2)
    ok = ok and quantum_determinant(Z, [1, 2], [1, 2]) == chart.u(1) * chart.T(2)
    _verdict(5, ok, "full chart relations N=2..4, doubled copies N=2..3, "
                    "row-order independence N<=4, det_q = u1 v1 at N=2")


def test_criterion_06_minimal_torus_counts():
    ok = True
    for N in range(2, 9):
        _, tori, _ = commutation_rank(upper_chart(N).sig)
        ok = ok and tori == N * N // 4
        red = symplectic_reduce(upper_chart(N).sig.C)
        ok = ok and red.verify()
    for N in range(2, 7):
        _, tori, _ = commutation_rank(full_chart(N).sig)
        ok = ok and tori == N * N // 2
        red = symplectic_reduce(full_chart(N).sig.C)
        ok = ok and red.verify()
    _verdict(6, ok, "minimal torus counts floor(N^2/4) upper N=2..8 and "
                    "floor(N^2/2) full N=2..6, with verified certificates")


def test_criterion_07_torus_embeddings_and_published_table():
    ok = True
    for N in range(2, 7):
        for builder in (upper_embedding, full_embedding, reduced_embedding):
            ok = ok and builder(N, convention=DEFAULT_CONVENTION).check()["pass"]
    for builder in (upper_embedding, full_embedding, reduced_embedding):
        sw = check_convention_sweep(lambda conv, b=builder: b(4, convention=conv))
        ok = ok and sw["passing"] == [list(DEFAULT_CONVENTION)]
    # published N=6 images verbatim through row 4; the two row-5 entries
    # (a52,a53) and (a53,a55) deviate under every convention and are
    # recorded as misprints in the golden files
    ok = ok and published_table(max_row=4).check()["pass"]
    v5 = published_table(max_row=5).check()["violations"]
    ok = ok and sorted(tuple(v["pair"]) for v in v5) == [
        ("a52", "a53"), ("a53", "a55")
    ]
    _verdict(7, ok, "three embedding families pass N<=6 under the single "
                    "frozen convention; published images match verbatim "
                    "through row 4 (two pinned row-5 misprints)")


def test_criterion_08_braid_involution_numerics():
    ok = True
    worst = 0.0
    for d in (5, 7, 11):
        rep = braid_phi_report(d, samples=100, seed=0)
        ok = ok and rep["pass"]
        worst = max(worst, max(rep["residuals"].values()))
    _verdict(8, ok and worst <= 1e-9,
             f"braid-move identities on 100 instances per d in {{5,7,11}}, "
             f"worst residual {worst:.1e}")


def test_criterion_09_reduced_word_charts():
    ok = True
    worst_dev = 0.0
    worst_res = 0.0
    words = reduced_words(3) + reduced_words(4)[:8]
    for w in words:
        rep = word_chart(w, d=5)
        ok = ok and rep["pass"]
        worst_dev = max(worst_dev, rep["max_rounding_deviation"])
        worst_res = max(worst_res, rep["max_commutation_residual"],
                        rep["minor_residual"])
    ok = ok and worst_dev < 1e-6 and worst_res <= 1e-9
    _verdict(9, ok, f"charts for both N=3 words and 8 of 16 N=4 words; "
                    f"rounding deviation {worst_dev:.1e}, "
                    f"minor residual {worst_res:.1e}")


def test_criterion_10_classical_layer():
    ok = True
    worst = 0.0
    for N in range(2, 6):
        rng = np.random.default_rng(N)
        p = PositiveParam.random(N, rng)
        x = initial_minors_classical(lusztig_matrix(p))
        p2 = params_from_minors(x, N)
        err = max(abs(p.vector() - p2.vector()) / p.vector())
        worst = max(worst, err)
    ok = ok and worst < 1e-10
    rng = np.random.default_rng(99)
    pos = True
    for _ in range(1000):
        N = int(rng.integers(2, 7))
        x = initial_minors_classical(lusztig_matrix(PositiveParam.random(N, rng)))
        pos = pos and all(v > 0 for v in x.values())
    ok = ok and pos
    spreads = []
    for N in (2, 3):
        rep = haar_density_check(N, samples=50, seed=0)
        spreads += [rep["cross_ratio_spread"], rep["corrected_ratio_spread"]]
        ok = ok and rep["cross_constant"] and rep["corrected_constant"]
    ok = ok and max(spreads) < 1e-5
    _verdict(10, ok, f"round-trip {worst:.1e} for N<=5; 1000 positive samples "
                     f"N<=6; invariant-density spread {max(spreads):.1e} for "
                     f"N=2,3 in both coordinate systems")


def _num_rel(d, ref):
    nd = np.linalg.norm(d)
    nr = np.linalg.norm(ref)
    return nd / nr if nr else nd


def _numeric_entries(rep, Z):
    N = Z.N
    return [[rep.evaluate(Z[i, j]) for j in range(1, N + 1)]
            for i in range(1, N + 1)]


def _numeric_minor_residuals(E, q):
    N = len(E)
    worst = 0.0
    for i, ip in itertools.combinations(range(N), 2):
        for j, jp in itertools.combinations(range(N), 2):
            a, b, c, d = E[i][j], E[i][jp], E[ip][j], E[ip][jp]
            checks = [
                (a @ b, b @ a),
                (c @ d, d @ c),
                (a @ c, q ** 2 * (c @ a)),
                (b @ d, q ** 2 * (d @ b)),
                (b @ c, q ** 2 * (c @ b)),
                (a @ d - b @ c, d @ a - c @ b),
            ]
            for lhs, rhs in checks:
                worst = max(worst, _num_rel(lhs - rhs, lhs))
    return worst


def test_criterion_11_cross_backend_consistency():
    d = 7
    q = np.exp(1j * np.pi / d)
    worst = 0.0

    # upper chart N=3: minor relations and the closed entry form, with
    # the factorized product recomputed by genuine matrix multiplication
    chart, Z = build_upper(3)
    rep = build_rep(chart.sig, d)
    E = _numeric_entries(rep, Z)
    worst = max(worst, _numeric_minor_residuals(E, q))
    dim = rep.dim
    num = [[np.eye(dim, dtype=complex) if r == c else
            np.zeros((dim, dim), complex) for c in range(3)] for r in range(3)]
    for r in range(1, 3):
        num[r][r] = rep.matrix(f"v{r}")
    for F in _upper_factors(chart):
        Fe = [[rep.evaluate(F[i, j]) for j in range(1, 4)] for i in range(1, 4)]
        num = [[sum(num[r][k] @ Fe[k][c] for k in range(3))
                for c in range(3)] for r in range(3)]
    for i in range(3):
        for j in range(3):
            closed = rep.evaluate(entry_closed_form(chart, i + 1, j + 1))
            worst = max(worst, _num_rel(num[i][j] - closed, closed))

    # cluster monomials against determinants expanded by matrix products
    for i in range(1, 3):
        for j in range(i + 1, 4):
            det = np.zeros((dim, dim), dtype=complex)
            rows = list(range(1, i + 1))
            cols = list(range(j - i + 1, j + 1))
            for perm in itertools.permutations(range(len(cols))):
                sign = (-1) ** sum(
                    perm[x] > perm[y]
                    for x, y in itertools.combinations(range(len(cols)), 2)
                )
                term = np.eye(dim, dtype=complex)
                for t, r in enumerate(rows):
                    term = term @ E[r - 1][cols[perm[t]] - 1]
                det += sign * term
            ref = rep.evaluate(cluster_monomial(chart, i, j))
            worst = max(worst, _num_rel(det - ref, ref))

    # full chart N=2: minor relations and det_q = u1 v1
    fchart, fZ = build_full(2)
    frep = build_rep(fchart.sig, d)
    FE = _numeric_entries(frep, fZ)
    worst = max(worst, _numeric_minor_residuals(FE, q))
    det = FE[0][0] @ FE[1][1] - FE[0][1] @ FE[1][0]
    ref = frep.evaluate(fchart.u(1) * fchart.T(2))
    worst = max(worst, _num_rel(det - ref, ref))

    _verdict(11, worst <= 1e-9,
             f"symbolic identities hold under the d=7 numeric backend, "
             f"worst residual {worst:.1e}")
