"""Embeddings of the Lusztig charts into quantum-torus algebras.

Contains the explicit embedding families (the closed-form one for the
upper chart, its doubled version for the full chart, the folded variant
on N^2-2 pairs, and the published N=6 table), plus the integer
symplectic reduction that computes the minimal number of torus pairs and
produces a minimal embedding.

Convention note: the printed embeddings fix neither the orientation of
the Weyl pairs (uv = q^2 vu vs. vu = q^2 uv) nor whether diagonal chart
generators map to a torus generator or its inverse.  The relation
checker arbitrates: all four candidate conventions are swept and the
passing one is frozen (see DEFAULT_CONVENTION and the golden files).
"""

from __future__ import annotations

import re

from .algebra import AlgebraSignature, Morphism
from .charts import folded_chart, full_chart, upper_chart


# (pair orientation o with C(u,v) = o, invert diagonal images) -- the
# single uniform convention under which every embedding family passes.
DEFAULT_CONVENTION = (-1, True)

CONVENTION_CANDIDATES = tuple(
    (o, inv) for o in (1, -1) for inv in (False, True)
)


class ToriSignature:
    """Weyl pairs (u_label, v_label) with C(u,v) = orient, plus central gens."""

    __slots__ = ("pairs", "central", "orient", "sig")

    def __init__(self, pairs, central=(), orient=1):
        if orient not in (1, -1):
            raise ValueError("orientation must be +1 or -1")
        self.pairs = tuple(pairs)
        self.central = tuple(central)
        self.orient = orient
        names = []
        for lab in self.pairs:
            names.append(f"u{lab}")
            names.append(f"v{lab}")
        names.extend(f"z{lab}" for lab in self.central)
        n = len(names)
        C = [[0] * n for _ in range(n)]
        for k in range(len(self.pairs)):
            C[2 * k][2 * k + 1] = orient
            C[2 * k + 1][2 * k] = -orient
        self.sig = AlgebraSignature(names, C)

    @property
    def n_pairs(self):
        return len(self.pairs)

    def exponents(self, factors) -> tuple:
        """Exponent vector from {generator name: exponent}."""
        e = [0] * self.sig.ngens
        for name, k in factors.items():
            e[self.sig.index(name)] += k
        return tuple(e)


def balanced_monomial(sig, exps):
    """(q-power, exponents) of the Weyl-balanced monomial q^s x^e.

    s makes the monomial formally self-adjoint under the product-reversing
    star with q* = q^{-1} -- the exact-layer analogue of the positivity
    prefactors of the published table.
    """
    exps = tuple(exps)
    return sig.reorder_exponent(exps, exps), exps


def _balanced_images(tori, factor_maps):
    return [balanced_monomial(tori.sig, tori.exponents(f)) for f in factor_maps]


def upper_embedding(N, convention=DEFAULT_CONVENTION) -> Morphism:
    """Closed-form embedding of the upper chart into (N^2+N-4)/2 pairs.

    v_m goes to the lone pair m; a_mn collects v-letters from rows m-1
    and m and the u-letters of pairs m and (m,n), with the last pair
    (N-1,N-1) omitted.
    """
    if N < 2:
        raise ValueError("embedding needs N >= 2")
    orient, invert = convention
    chart = upper_chart(N)
    pair_labels = [f"{m}" for m in range(1, N)] + [
        f"{m}{n}" for m in range(1, N) for n in range(1, m + 1)
        if (m, n) != (N - 1, N - 1)
    ]
    tori = ToriSignature(pair_labels, orient=orient)
    factor_maps = []
    for g in chart.gens:
        if g[0] == "v":
            factor_maps.append({f"v{g[1]}": -1 if invert else 1})
        else:
            _, m, n = g
            f = {f"u{m}": 1}
            for k in range(n, m):
                f[f"v{m - 1}{k}"] = f.get(f"v{m - 1}{k}", 0) + 1
            for l in range(1, n):
                f[f"v{m}{l}"] = f.get(f"v{m}{l}", 0) + 1
            if (m, n) != (N - 1, N - 1):
                f[f"u{m}{n}"] = 1
            factor_maps.append(f)
    return Morphism(chart.sig, tori.sig, _balanced_images(tori, factor_maps))


def full_embedding(N, convention=DEFAULT_CONVENTION) -> Morphism:
    """Doubled embedding of the full chart into N^2+N-4 pairs.

    The lower half {b_mn, u_m} uses a disjoint primed copy with the roles
    of the pair letters exchanged (u_m lands on the primed u, b_mn starts
    with the primed v).
    """
    if N < 2:
        raise ValueError("embedding needs N >= 2")
    orient, invert = convention
    chart = full_chart(N)
    half = [f"{m}" for m in range(1, N)] + [
        f"{m}{n}" for m in range(1, N) for n in range(1, m + 1)
        if (m, n) != (N - 1, N - 1)
    ]
    tori = ToriSignature([lab + "'" for lab in half] + half, orient=orient)
    factor_maps = []
    for g in chart.gens:
        kind = g[0]
        if kind == "v":
            factor_maps.append({f"v{g[1]}": -1 if invert else 1})
        elif kind == "u":
            factor_maps.append({f"u{g[1]}'": -1 if invert else 1})
        else:
            _, m, n = g
            f = {}
            # the b half carries the reversed arrows, so its images swap
            # the roles of the off-diagonal pair letters (u' <-> v')
            if kind == "a":
                f[f"u{m}"] = 1
                lead, tail = "v", "u"
                prime = ""
            else:
                f[f"v{m}'"] = 1
                lead, tail = "u", "v"
                prime = "'"
            for k in range(n, m):
                key = f"{lead}{m - 1}{k}{prime}"
                f[key] = f.get(key, 0) + 1
            for l in range(1, n):
                key = f"{lead}{m}{l}{prime}"
                f[key] = f.get(key, 0) + 1
            if (m, n) != (N - 1, N - 1):
                f[f"{tail}{m}{n}{prime}"] = 1
            factor_maps.append(f)
    return Morphism(chart.sig, tori.sig, _balanced_images(tori, factor_maps))


def reduced_embedding(N, convention=DEFAULT_CONVENTION) -> Morphism:
    """Folded-chart embedding into N^2-2 pairs (inverses permitted).

    The diagonal entries T_k = u_k v_{k-1} collapse onto single pairs
    (U_k, V_k) via V_k = u'_k v_{k-1}, U_k = u_{k-1} = (v'_k)^{-1}; the
    unipotent images keep their off-diagonal pair content.
    """
    if N < 2:
        raise ValueError("embedding needs N >= 2")
    orient, invert = convention
    chart = folded_chart(N)
    off = [
        f"{m}{n}" for m in range(1, N) for n in range(1, m + 1)
        if (m, n) != (N - 1, N - 1)
    ]
    tori = ToriSignature(
        [f"D{k}" for k in range(1, N + 1)] + [lab + "'" for lab in off] + off,
        orient=orient,
    )
    factor_maps = []
    for g in chart.gens:
        kind = g[0]
        if kind == "T":
            factor_maps.append({f"vD{g[1]}": -1 if invert else 1})
            continue
        _, m, n = g
        # the b half swaps the off-diagonal pair letters, mirroring its
        # reversed arrows (see full_embedding)
        if kind == "a":
            f = {f"uD{m + 1}": 1}
            lead, tail, prime = "v", "u", ""
        else:
            f = {f"uD{m}": -1}
            lead, tail, prime = "u", "v", "'"
        for k in range(n, m):
            key = f"{lead}{m - 1}{k}{prime}"
            f[key] = f.get(key, 0) + 1
        for l in range(1, n):
            key = f"{lead}{m}{l}{prime}"
            f[key] = f.get(key, 0) + 1
        if (m, n) != (N - 1, N - 1):
            f[f"{tail}{m}{n}{prime}"] = 1
        factor_maps.append(f)
    return Morphism(chart.sig, tori.sig, _balanced_images(tori, factor_maps))


# The published N=6 table, transcribed verbatim: generator of the upper
# chart (diagonal generators written u_m there) -> word in U_i, V_i with
# an optional q prefactor.
PUBLISHED_TABLE = (
    ("a11", "U1"),
    ("u1", "V1"),
    ("a21", "V1 U2"),
    ("a22", "q V2 U2 U3"),
    ("u2", "V2"),
    ("a31", "V2 U3 U4"),
    ("a32", "V3 U4 U5"),
    ("a33", "q V4 U4 U5"),
    ("u3", "V4"),
    ("a41", "V4 U5 U6 V7 V8"),
    ("a42", "q V5 U5 U6 V7"),
    ("a43", "U3 V5 U6"),
    ("a44", "q V6 U6"),
    ("u4", "V6"),
    ("a51", "V6 U9"),
    ("a52", "q V6 U8 V9 U9"),
    ("a53", "V6 U7 V7 V9 U9"),
    ("a54", "U5 V6 V7 U8 V8 V9 U9"),
    ("a55", "q V8 V9 U9"),
    ("u5", "V9"),
)

_TOKEN = re.compile(r"^(q|[UV][1-9])$")


def _parse_table_row(word):
    qpow = 0
    factors = {}
    for tok in word.split():
        if not _TOKEN.match(tok):
            raise ValueError(f"bad table token {tok!r}")
        if tok == "q":
            qpow += 1
        else:
            name = ("u" if tok[0] == "U" else "v") + tok[1:]
            factors[name] = factors.get(name, 0) + 1
    return qpow, factors


def published_table(max_row=5, convention=DEFAULT_CONVENTION) -> Morphism:
    """The published table as a morphism from the upper chart of N = max_row+1.

    The printed q prefactors and letters are kept verbatim; the frozen
    convention only fixes the pair orientation and inverts the diagonal
    images, which carry no prefactors.
    """
    if not 1 <= max_row <= 5:
        raise ValueError("the published table covers rows 1..5")
    orient, invert = convention
    N = max_row + 1
    chart = upper_chart(N)
    n_pairs = {1: 1, 2: 3, 3: 5, 4: 8, 5: 9}[max_row]
    tori = ToriSignature([str(k) for k in range(1, n_pairs + 1)], orient=orient)
    by_name = {}
    for name, word in PUBLISHED_TABLE:
        qpow, factors = _parse_table_row(word)
        by_name[name] = (qpow, factors)
    images = []
    for g in chart.gens:
        if g[0] == "v":
            qpow, factors = by_name[f"u{g[1]}"]  # table writes the diagonal as u_m
            if invert:
                factors = {k: -e for k, e in factors.items()}
                qpow = -qpow
        else:
            qpow, factors = by_name[f"a{g[1]}{g[2]}"]
        exps = tori.exponents(factors)
        # normal-order the printed word: letters commute across pairs and
        # each word lists u-letters and v-letters of a pair at most once,
        # so only the within-pair swap matters.
        qpow += 2 * _printed_reorder(tori, factors)
        images.append((qpow, exps))
    return Morphism(chart.sig, tori.sig, images)


def _printed_reorder(tori, factors):
    """q-exponent halves picked up normal-ordering a printed word.

    Printed words list letters left to right; within a pair, a v-letter
    printed before the u-letter must commute past it when sorting into
    the (u, v) signature order.
    """
    k = 0
    # printed order survives as the dict insertion order; count the
    # v-before-u inversions within each pair (C[v][u] = -orient each)
    order = list(factors)
    for idx, name in enumerate(order):
        if name[0] != "v":
            continue
        lab = name[1:]
        if f"u{lab}" in order[idx + 1:]:
            k -= tori.orient * factors[name] * factors[f"u{lab}"]
    return k


def check_convention_sweep(builder, candidates=CONVENTION_CANDIDATES) -> dict:
    """Run a morphism builder under each convention, report pass/violations."""
    results = []
    for cand in candidates:
        f = builder(cand)
        rep = f.check()
        results.append(
            {
                "orientation": cand[0],
                "invert_diagonal": cand[1],
                "pass": rep["pass"],
                "violations": rep["violations"],
            }
        )
    passing = [
        [r["orientation"], r["invert_diagonal"]] for r in results if r["pass"]
    ]
    return {"candidates": results, "passing": passing}


class SymplecticReduction:
    """Certificate S C S^T = blocks [[0,d],[-d,0]] + zero block."""

    __slots__ = ("C", "S", "S_inv", "divisors", "kernel_basis")

    def __init__(self, C, S, S_inv, divisors):
        self.C = C
        self.S = S
        self.S_inv = S_inv
        self.divisors = tuple(divisors)
        r = 2 * len(self.divisors)
        self.kernel_basis = tuple(tuple(row) for row in S[r:])

    @property
    def rank(self):
        return 2 * len(self.divisors)

    @property
    def kernel_dim(self):
        return len(self.C) - self.rank

    def block_form(self):
        n = len(self.C)
        B = [[0] * n for _ in range(n)]
        for k, d in enumerate(self.divisors):
            B[2 * k][2 * k + 1] = d
            B[2 * k + 1][2 * k] = -d
        return B

    def verify(self) -> bool:
        n = len(self.C)
        prod = _mat_mul(_mat_mul(self.S, self.C), _transpose(self.S))
        if prod != self.block_form():
            return False
        ident = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        return _mat_mul(self.S, self.S_inv) == ident

    def to_json(self):
        return {
            "S": [list(r) for r in self.S],
            "S_inv": [list(r) for r in self.S_inv],
            "divisors": list(self.divisors),
            "kernel_basis": [list(r) for r in self.kernel_basis],
            "rank": self.rank,
        }


def _mat_mul(A, B):
    n, m, p = len(A), len(B), len(B[0])
    return [
        [sum(A[i][k] * B[k][j] for k in range(m)) for j in range(p)]
        for i in range(n)
    ]


def _transpose(A):
    return [list(col) for col in zip(*A)]


def symplectic_reduce(C) -> SymplecticReduction:
    """Bring an antisymmetric integer matrix to canonical skew form.

    Paired row/column operations (tracked in S and its inverse) produce
    S C S^T = diag of blocks [[0,d_k],[-d_k,0]] followed by zeros, with
    d_1 | d_2 | ... enforced by Euclidean pivoting.
    """
    n = len(C)
    for i in range(n):
        if C[i][i] != 0 or any(C[i][j] != -C[j][i] for j in range(n)):
            raise ValueError("matrix is not antisymmetric")
    M = [list(row) for row in C]
    S = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    Sinv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_op(i, j, c):
        # row_i += c*row_j symmetrically; S <- E S, Sinv <- Sinv E^{-1}
        for t in range(n):
            M[i][t] += c * M[j][t]
        for t in range(n):
            M[t][i] += c * M[t][j]
        for t in range(n):
            S[i][t] += c * S[j][t]
        for t in range(n):
            Sinv[t][j] -= c * Sinv[t][i]

    def swap(i, j):
        if i == j:
            return
        M[i], M[j] = M[j], M[i]
        for row in M:
            row[i], row[j] = row[j], row[i]
        S[i], S[j] = S[j], S[i]
        for row in Sinv:
            row[i], row[j] = row[j], row[i]

    def negate(i):
        for t in range(n):
            M[i][t] = -M[i][t]
        for t in range(n):
            M[t][i] = -M[t][i]
        for t in range(n):
            S[i][t] = -S[i][t]
        for t in range(n):
            Sinv[t][i] = -Sinv[t][i]

    divisors = []
    t = 0
    while True:
        # globally smallest nonzero entry of the remaining submatrix
        best = None
        for i in range(t, n):
            for j in range(t, n):
                if M[i][j] != 0 and (best is None or abs(M[i][j]) < abs(M[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        if i != t:
            swap(t, i)
            if j == t:
                j = i
        swap(t + 1, j)
        if M[t][t + 1] < 0:
            negate(t + 1)
        while True:
            d = M[t][t + 1]
            moved = False
            # clear the rest of column t+1 and of row t
            for i in range(t + 2, n):
                if M[i][t + 1] != 0:
                    row_op(i, t, -(M[i][t + 1] // d))
                    if M[i][t + 1] != 0:  # smaller remainder becomes pivot
                        swap(t, i)
                        if M[t][t + 1] < 0:
                            negate(t + 1)
                        moved = True
                        break
            if moved:
                continue
            for j in range(t + 2, n):
                if M[t][j] != 0:
                    row_op(j, t + 1, -(M[t][j] // d))
                    if M[t][j] != 0:
                        swap(t + 1, j)
                        if M[t][t + 1] < 0:
                            negate(t + 1)
                        moved = True
                        break
            if moved:
                continue
            # divisibility chain: fold a non-divisible row into row t
            offender = None
            for i in range(t + 2, n):
                for j in range(t + 2, n):
                    if M[i][j] % d != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_op(t, offender, 1)
        divisors.append(M[t][t + 1])
        t += 2
    return SymplecticReduction(
        [list(row) for row in C], S, Sinv, divisors
    )


def commutation_rank(sig: AlgebraSignature):
    """(rank of C, rank/2 = minimal torus count, kernel dimension)."""
    red = symplectic_reduce(sig.C)
    return red.rank, red.rank // 2, red.kernel_dim


def minimal_embedding(sig: AlgebraSignature) -> Morphism:
    """Monomial embedding into exactly rank/2 pairs plus central generators.

    Generator i maps to the Weyl-balanced monomial with exponent row i of
    S^{-1}; requires every elementary divisor to be 1 (unit blocks).
    """
    red = symplectic_reduce(sig.C)
    bad = [d for d in red.divisors if d != 1]
    if bad:
        raise ValueError(
            f"elementary divisor {bad[0]} > 1: a unit-block torus embedding "
            "would need fractional powers"
        )
    r = len(red.divisors)
    tori = ToriSignature(
        [str(k) for k in range(1, r + 1)],
        central=[str(k) for k in range(1, red.kernel_dim + 1)],
    )
    images = []
    for i in range(sig.ngens):
        exps = tuple(red.S_inv[i])
        images.append(balanced_monomial(tori.sig, exps))
    return Morphism(sig, tori.sig, images)


def monomial_minimality_search(N, budget=2_000_000) -> dict:
    """Search for a minimal upper-chart embedding with all exponents in {0,1}.

    Depth-first assignment of multiplicity-free words over rank/2 pairs,
    pruned by the pairwise commutation constraints.  Evidence for the
    multiplicity-free conjecture, not a proof; budget counts search nodes.
    """
    chart = upper_chart(N)
    sig = chart.sig
    red = symplectic_reduce(sig.C)
    r = red.rank // 2
    tori = ToriSignature([str(k) for k in range(1, r + 1)])
    n = sig.ngens
    options = []
    for mask in range(1, 4 ** r):
        e = []
        m = mask
        for _ in range(r):
            e.extend(((m & 1), (m >> 1) & 1))
            m >>= 2
        options.append(tuple(e))
    nodes = 0
    assignment = [None] * n

    def pairing(e1, e2):
        return tori.sig.pairing(e1, e2)

    def dfs(i):
        nonlocal nodes
        if i == n:
            return True
        for e in options:
            nodes += 1
            if nodes > budget:
                return None
            if all(pairing(e, assignment[j]) == sig.C[i][j] for j in range(i)):
                assignment[i] = e
                out = dfs(i + 1)
                if out:
                    return out
                if out is None:
                    return None
                assignment[i] = None
        return False

    found = dfs(0)
    result = {
        "N": N,
        "pairs": r,
        "nodes": nodes,
        "budget": budget,
        "found": bool(found),
        "budget_exhausted": found is None,
    }
    if found:
        images = [balanced_monomial(tori.sig, e) for e in assignment]
        f = Morphism(sig, tori.sig, images)
        result["images"] = f.to_json()["images"]
        result["check_pass"] = f.check()["pass"]
    return result
