"""Finite-dimensional numeric backend at roots of unity.

Every exact identity in this package is a consequence of pure
q-commutation relations, so it must hold in any representation.  Here
q^2 is realized as a primitive d-th root of unity on clock/shift pairs,
which gives honest finite-dimensional models for: evaluating symbolic
polynomials, the rational braid involution phi (which involves inverses
of sums and so lives outside the exact layer), and charts attached to
arbitrary reduced words of the longest permutation.
"""

from __future__ import annotations

from collections import namedtuple

import numpy as np

from .algebra import AlgebraSignature
from .tori import symplectic_reduce


def clock_shift(d):
    """The standard pair U = diag(1, w, ..., w^(d-1)), V cyclic shift.

    w = e^{2 pi i / d} = q^2, so U V = q^2 V U.
    """
    omega = np.exp(2j * np.pi / d)
    U = np.diag(omega ** np.arange(d))
    V = np.roll(np.eye(d), 1, axis=0)
    return U, V


class ClockShiftRep:
    """Numeric model of a signature: one matrix per generator."""

    __slots__ = ("sig", "d", "q", "matrices", "scalars", "reduction")

    def __init__(self, sig, d, matrices, scalars, reduction):
        self.sig = sig
        self.d = d
        self.q = np.exp(1j * np.pi / d)
        self.matrices = matrices
        self.scalars = tuple(scalars)
        self.reduction = reduction

    @property
    def dim(self):
        return self.matrices[self.sig.names[0]].shape[0] if self.sig.names else 1

    def matrix(self, name):
        return self.matrices[name]

    def evaluate(self, poly):
        """Numeric value of an exact polynomial over this signature."""
        dim = self.dim
        out = np.zeros((dim, dim), dtype=complex)
        for mono, sc in poly.terms.items():
            term = complex(sc(self.q)) * np.eye(dim, dtype=complex)
            for name, e in zip(self.sig.names, mono):
                if e:
                    term = term @ _matrix_power(self.matrices[name], e)
            out += term
        return out

    def max_relation_residual(self):
        """Worst relative residual of X_i X_j = q^2C_ij X_j X_i."""
        worst = 0.0
        names = self.sig.names
        for i in range(len(names)):
            for j in range(i + 1, len(names)):
                X, Y = self.matrices[names[i]], self.matrices[names[j]]
                lhs = X @ Y
                rhs = self.q ** (2 * self.sig.C[i][j]) * (Y @ X)
                worst = max(worst, _rel(lhs - rhs, lhs))
        return worst


def _matrix_power(M, e):
    if e >= 0:
        return np.linalg.matrix_power(M, e)
    return np.linalg.matrix_power(np.linalg.inv(M), -e)


def _rel(diff, ref):
    nref = np.linalg.norm(ref)
    ndiff = np.linalg.norm(diff)
    return ndiff / nref if nref > 0 else ndiff


def build_rep(sig: AlgebraSignature, d, scalars=None) -> ClockShiftRep:
    """Represent a signature on clock/shift pairs of dimension d.

    The symplectic reduction routes generator i onto the exponent vector
    row i of S^{-1}; a block with divisor d_k uses (U^{d_k}, V).  Kernel
    directions become positive scalars (one per kernel basis vector).
    """
    red = symplectic_reduce(sig.C)
    r = len(red.divisors)
    kd = red.kernel_dim
    if scalars is None:
        scalars = [1.0] * kd
    scalars = [float(s) for s in scalars]
    if len(scalars) != kd:
        raise ValueError(f"need {kd} kernel scalars, got {len(scalars)}")
    if any(s <= 0 for s in scalars):
        raise ValueError("kernel scalars must be positive")
    U, V = clock_shift(d)
    q = np.exp(1j * np.pi / d)
    matrices = {}
    for i, name in enumerate(sig.names):
        beta = red.S_inv[i]
        X = np.ones((1, 1), dtype=complex)
        phase = 0
        for k in range(r):
            p, qq = beta[2 * k], beta[2 * k + 1]
            local = _matrix_power(U, red.divisors[k] * p) @ _matrix_power(V, qq)
            X = np.kron(X, local)
            phase -= red.divisors[k] * p * qq  # Weyl-balanced prefactor
        lam = 1.0
        for t in range(kd):
            lam *= scalars[t] ** beta[2 * r + t]
        matrices[name] = lam * q**phase * X
    return ClockShiftRep(sig, d, matrices, scalars, red)


Measured = namedtuple("Measured", "k residual deviation")


def measure_commutation(X, Y, q) -> Measured:
    """Find k with X Y ~ q^{2k} Y X and report residual and rounding slack."""
    lhs = X @ Y
    rhs = Y @ X
    z = np.trace(np.linalg.solve(rhs, lhs)) / lhs.shape[0]
    step = np.angle(q**2)
    k_float = np.angle(z) / step
    k = int(round(k_float))
    residual = _rel(lhs - q ** (2 * k) * rhs, lhs)
    return Measured(k, residual, abs(k_float - k))


def braid_phi(A, B, C):
    """The Lusztig 3-move on q-commuting triples.

    a' = (a+c)^{-1} c b, b' = a+c, c' = (a+c)^{-1} a b; an involution on
    triples satisfying ca = q^2 ac, ab = q^2 ba, bc = cb.
    """
    S = np.linalg.inv(A + C)
    return S @ C @ B, A + C, S @ A @ B


def _x_factor(N, i, entry, dim):
    """Block matrix I + entry * E_{i,i+1} over operator entries."""
    blocks = [
        [np.eye(dim, dtype=complex) if r == c else np.zeros((dim, dim), complex)
         for c in range(N)]
        for r in range(N)
    ]
    blocks[i - 1][i] = entry
    return blocks


def _block_mul(A, B, dim):
    N = len(A)
    zero = np.zeros((dim, dim), complex)
    out = []
    for i in range(N):
        row = []
        for j in range(N):
            acc = None
            for k in range(N):
                x, y = A[i][k], B[k][j]
                if not x.any() or not y.any():
                    continue
                acc = x @ y if acc is None else acc + x @ y
            row.append(zero if acc is None else acc)
        out.append(row)
    return out


def _apply_x_factor(blocks, i, entry):
    """Right-multiply a block matrix in place by I + entry * E_{i,i+1}."""
    for r in range(len(blocks)):
        if blocks[r][i - 1].any():
            blocks[r][i] = blocks[r][i] + blocks[r][i - 1] @ entry
    return blocks


def _braid_triple_rep(d, rng):
    """Random numeric triple with ca = q^2 ac, ab = q^2 ba, bc = cb."""
    sig = AlgebraSignature(("a", "b", "c"), [[0, 1, -1], [-1, 0, 0], [1, 0, 0]])
    rep = build_rep(sig, d, scalars=[float(np.exp(rng.uniform(-1, 1)))])
    lam = np.exp(rng.uniform(-1, 1, size=3))
    return (
        lam[0] * rep.matrix("a"),
        lam[1] * rep.matrix("b"),
        lam[2] * rep.matrix("c"),
        rep.q,
    )


def braid_phi_report(d, samples=100, seed=0) -> dict:
    """The four braid-involution postconditions on random instances."""
    rng = np.random.default_rng(seed)
    q = np.exp(1j * np.pi / d)
    worst = {"two_forms": 0.0, "primed_diagram": 0.0, "involution": 0.0,
             "matrix_identity": 0.0}
    for _ in range(samples):
        A, B, C, q = _braid_triple_rep(d, rng)
        Ap, Bp, Cp = braid_phi(A, B, C)
        # (i) the two printed expressions for a' (and c') agree
        S = np.linalg.inv(A + C)
        r1 = max(_rel(Ap - B @ C @ S, Ap), _rel(Cp - B @ A @ S, Cp))
        # (ii) primed diagram: b'c' = q^2 c'b', c'a' = q^2 a'c'
        r2 = max(
            _rel(Bp @ Cp - q**2 * Cp @ Bp, Bp @ Cp),
            _rel(Cp @ Ap - q**2 * Ap @ Cp, Cp @ Ap),
        )
        # (iii) involution
        A2, B2, C2 = braid_phi(Ap, Bp, Cp)
        r3 = max(_rel(A2 - A, A), _rel(B2 - B, B), _rel(C2 - C, C))
        # (iv) x_2(a) x_1(b) x_2(c) = x_1(a') x_2(b') x_1(c')
        dim = A.shape[0]
        lhs = _block_mul(
            _block_mul(_x_factor(3, 2, A, dim), _x_factor(3, 1, B, dim), dim),
            _x_factor(3, 2, C, dim),
            dim,
        )
        rhs = _block_mul(
            _block_mul(_x_factor(3, 1, Ap, dim), _x_factor(3, 2, Bp, dim), dim),
            _x_factor(3, 1, Cp, dim),
            dim,
        )
        scale = max(np.linalg.norm(b) for row in lhs for b in row)
        r4 = max(
            np.linalg.norm(lb - rb) / scale for lrow, rrow in zip(lhs, rhs)
            for lb, rb in zip(lrow, rrow)
        )
        for key, val in zip(worst, (r1, r2, r3, r4)):
            worst[key] = max(worst[key], val)
    return {
        "d": d,
        "samples": samples,
        "seed": seed,
        "residuals": worst,
        "pass": max(worst.values()) <= 1e-9,
    }


# ---------------------------------------------------------------------------
# reduced words of the longest permutation


class ReducedWord:
    """A reduced expression of w_0 in S_N as a letter sequence."""

    __slots__ = ("N", "letters")

    def __init__(self, N, letters):
        letters = tuple(int(x) for x in letters)
        if any(not 1 <= x <= N - 1 for x in letters):
            raise ValueError("letters must lie in 1..N-1")
        if len(letters) != N * (N - 1) // 2:
            raise ValueError(
                f"w_0 in S_{N} needs {N * (N - 1) // 2} letters, got {len(letters)}"
            )
        perm = list(range(N))
        for s in letters:
            perm[s - 1], perm[s] = perm[s], perm[s - 1]
        inv = sum(
            1 for i in range(N) for j in range(i + 1, N) if perm[i] > perm[j]
        )
        if inv != len(letters):
            raise ValueError("word is not reduced")
        self.N = N
        self.letters = letters

    def __eq__(self, other):
        return (
            isinstance(other, ReducedWord)
            and self.N == other.N
            and self.letters == other.letters
        )

    def __hash__(self):
        return hash((self.N, self.letters))

    def __repr__(self):
        return f"ReducedWord({self.N}, {''.join(map(str, self.letters))})"


def canonical_word(N) -> ReducedWord:
    """w_0 = (s_{N-1} ... s_1)(s_{N-1} ... s_2) ... (s_{N-1})."""
    letters = []
    for n in range(1, N):
        letters.extend(range(N - 1, n - 1, -1))
    return ReducedWord(N, letters)


def _moves(word: ReducedWord):
    """All (new letters, move record) one commutation/braid move away."""
    L = list(word.letters)
    for p in range(len(L) - 1):
        if abs(L[p] - L[p + 1]) >= 2:
            out = L[:]
            out[p], out[p + 1] = out[p + 1], out[p]
            yield tuple(out), ("2", p)
    for p in range(len(L) - 2):
        if L[p] == L[p + 2] and abs(L[p] - L[p + 1]) == 1:
            out = L[:]
            out[p], out[p + 1], out[p + 2] = L[p + 1], L[p], L[p + 1]
            yield tuple(out), ("3", p)


def reduced_words(N):
    """All reduced words of w_0 via BFS over 2- and 3-moves."""
    start = canonical_word(N)
    seen = {start.letters}
    queue = [start.letters]
    while queue:
        cur = queue.pop()
        for nxt, _ in _moves(ReducedWord(N, cur)):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return [ReducedWord(N, w) for w in sorted(seen)]


def move_path(source: ReducedWord, target: ReducedWord):
    """Shortest move sequence from source to target (BFS)."""
    if source.N != target.N:
        raise ValueError("words live in different symmetric groups")
    if source.letters == target.letters:
        return []
    frontier = {source.letters: []}
    seen = {source.letters}
    while frontier:
        nxt_frontier = {}
        for cur, path in frontier.items():
            for nxt, move in _moves(ReducedWord(source.N, cur)):
                if nxt in seen:
                    continue
                full = path + [move]
                if nxt == target.letters:
                    return full
                seen.add(nxt)
                nxt_frontier[nxt] = full
        frontier = nxt_frontier
    raise ValueError("target word not reachable (not a reduced word of w_0)")


def _canonical_positions(N):
    """Generator name a_{m,n} for each position of the canonical word."""
    names = []
    for n in range(1, N):
        for m in range(N - 1, n - 1, -1):
            names.append((m, n))
    return names


def word_chart(word: ReducedWord, d, scalars=None, tol=1e-9) -> dict:
    """Numeric chart for an arbitrary reduced word of w_0.

    Transports the canonical-word generators to the target word by
    2-moves (position swaps) and 3-moves (braid_phi on consecutive
    triples), measures the resulting pairwise commutation exponents, and
    verifies both the local triple diagram and the assembled T+U+ minor
    relations.
    """
    from .charts import upper_chart  # local import to avoid cycles

    N = word.N
    chart = upper_chart(N)
    rep = build_rep(chart.sig, d, scalars)
    q = rep.q
    # generic positive scales keep the commutation relations (and every
    # polynomial identity that follows from them) while making the sums
    # A + C inside the 3-move generically invertible
    scale_rng = np.random.default_rng(7)
    gens = [
        rep.matrix(f"a{m}{n}") * float(np.exp(scale_rng.uniform(-1.0, 1.0)))
        for m, n in _canonical_positions(N)
    ]
    letters = list(canonical_word(N).letters)
    for move, p in move_path(canonical_word(N), word):
        if move == "2":
            gens[p], gens[p + 1] = gens[p + 1], gens[p]
            letters[p], letters[p + 1] = letters[p + 1], letters[p]
        else:
            gens[p], gens[p + 1], gens[p + 2] = braid_phi(
                gens[p], gens[p + 1], gens[p + 2]
            )
            letters[p], letters[p + 1], letters[p + 2] = (
                letters[p + 1], letters[p], letters[p + 1]
            )
    assert tuple(letters) == word.letters

    M = len(gens)
    vs = [rep.matrix(f"v{m}") for m in range(1, N)]
    labeled = gens + vs
    Cmat = [[0] * len(labeled) for _ in range(len(labeled))]
    max_dev = 0.0
    max_res = 0.0
    for i in range(len(labeled)):
        for j in range(i + 1, len(labeled)):
            meas = measure_commutation(labeled[i], labeled[j], q)
            Cmat[i][j] = meas.k
            Cmat[j][i] = -meas.k
            max_dev = max(max_dev, meas.deviation)
            max_res = max(max_res, meas.residual)

    # local property: consecutive occurrences (a_{i,*}, a_{j,*}, a_{i,*})
    # must satisfy one of the two mirrored triple diagrams -- both carry
    # the arrow a_{i,k} -> a_{i,m}, and the middle letter attaches by a
    # single arrow to one of the outer generators and commutes with the
    # other (the braid move phi exchanges the two variants)
    triples_ok = True
    triples = []
    for p1 in range(M):
        i = letters[p1]
        p3 = next((p for p in range(p1 + 1, M) if letters[p] == i), None)
        if p3 is None:
            continue
        for p2 in range(p1 + 1, p3):
            if abs(letters[p2] - i) != 1:
                continue
            outer = Cmat[p3][p1] == 1
            middle = (Cmat[p1][p2], Cmat[p2][p3]) in ((1, 0), (0, 1))
            ok = outer and middle
            triples_ok = triples_ok and ok
            triples.append(
                {"positions": [p1, p2, p3], "letters": [i, letters[p2], i],
                 "pass": ok}
            )

    # diagonal arrows: generator at letter L pairs exactly with v_L
    v_ok = all(
        Cmat[p][M + m - 1] == (1 if letters[p] == m else 0)
        for p in range(M)
        for m in range(1, N)
    )

    # assemble T+U+ and check the GL_q(2) minor relations numerically
    dim = rep.dim
    blocks = [
        [np.eye(dim, dtype=complex) if r == c else np.zeros((dim, dim), complex)
         for c in range(N)]
        for r in range(N)
    ]
    for r in range(1, N):
        blocks[r][r] = vs[r - 1]
    for p in range(M):
        blocks = _apply_x_factor(blocks, letters[p], gens[p])
    minor_res = _numeric_minor_residual(blocks, q, N, dim)

    ok = (
        max_dev < 1e-6
        and max_res <= tol
        and triples_ok
        and v_ok
        and minor_res <= tol
    )
    return {
        "word": list(word.letters),
        "d": d,
        "measured_C": Cmat,
        "max_rounding_deviation": max_dev,
        "max_commutation_residual": max_res,
        "triples": triples,
        "triples_pass": triples_ok,
        "diagonal_pairing_pass": v_ok,
        "minor_residual": minor_res,
        "pass": ok,
    }


def _numeric_minor_residual(blocks, q, N, dim):
    """Max relative residual of the six minor relations on a block matrix."""
    import itertools

    worst = 0.0
    q2 = q**2
    zero = np.zeros_like(blocks[0][0])
    nz = [[bool(blk.any()) for blk in row] for row in blocks]

    def mul(x, xn, y, yn):
        return x @ y if (xn and yn) else zero

    for i, ip in itertools.combinations(range(N), 2):
        for j, jp in itertools.combinations(range(N), 2):
            a, b = blocks[i][j], blocks[i][jp]
            c, e = blocks[ip][j], blocks[ip][jp]
            an, bn = nz[i][j], nz[i][jp]
            cn, en = nz[ip][j], nz[ip][jp]
            pairs = (
                (mul(a, an, b, bn), mul(b, bn, a, an)),
                (mul(c, cn, e, en), mul(e, en, c, cn)),
                (mul(a, an, c, cn), q2 * mul(c, cn, a, an)),
                (mul(b, bn, e, en), q2 * mul(e, en, b, bn)),
                (mul(b, bn, c, cn), q2 * mul(c, cn, b, bn)),
                (mul(a, an, e, en) - mul(b, bn, c, cn),
                 mul(e, en, a, an) - mul(c, cn, b, bn)),
            )
            for lhs, rhs in pairs:
                scale = max(np.linalg.norm(lhs), np.linalg.norm(rhs))
                if scale == 0.0:
                    continue
                worst = max(worst, np.linalg.norm(lhs - rhs) / scale)
    return worst
