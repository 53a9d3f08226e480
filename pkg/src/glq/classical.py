"""Classical (commutative) triangular factorization and minor coordinates.

Floating-point counterpart of the symbolic charts: totally positive
matrices built from lower/diagonal/upper factors, recovery of the factor
parameters from initial minors, ratio coordinates, and a numeric
comparison of candidate invariant densities.
"""

import itertools

import numpy as np


def _triangle_keys(N):
    """Index pairs (m, n) with 1 <= n <= m <= N-1, in row-major order."""
    return [(m, n) for m in range(1, N) for n in range(1, m + 1)]


class PositiveParam:
    """Strictly positive factorization data (a, b, u) for an N x N matrix.

    ``a[(m, n)]`` and ``b[(m, n)]`` range over 1 <= n <= m <= N-1 and feed
    the upper and lower unipotent factors; ``u`` holds the N diagonal
    entries.
    """

    def __init__(self, N, a, b, u):
        keys = set(_triangle_keys(N))
        if set(a) != keys or set(b) != keys:
            raise ValueError("parameter index sets must match the triangle")
        u = [float(x) for x in u]
        if len(u) != N:
            raise ValueError("need N diagonal entries")
        vals = list(a.values()) + list(b.values()) + u
        if any(not (x > 0.0) for x in vals):
            raise ValueError("all parameters must be strictly positive")
        self.N = N
        self.a = {k: float(v) for k, v in a.items()}
        self.b = {k: float(v) for k, v in b.items()}
        self.u = u

    @classmethod
    def ones(cls, N):
        keys = _triangle_keys(N)
        return cls(N, dict.fromkeys(keys, 1.0), dict.fromkeys(keys, 1.0),
                   [1.0] * N)

    @classmethod
    def random(cls, N, rng):
        """Log-uniform parameters in [1/e, e]."""
        keys = _triangle_keys(N)
        draw = lambda: float(np.exp(rng.uniform(-1.0, 1.0)))
        return cls(
            N,
            {k: draw() for k in keys},
            {k: draw() for k in keys},
            [draw() for _ in range(N)],
        )

    def vector(self):
        """Flatten to (a..., b..., u...) in canonical key order."""
        keys = _triangle_keys(self.N)
        return np.array(
            [self.a[k] for k in keys] + [self.b[k] for k in keys] + self.u
        )

    @classmethod
    def from_vector(cls, N, vec):
        keys = _triangle_keys(N)
        t = len(keys)
        vec = [float(x) for x in vec]
        if len(vec) != 2 * t + N:
            raise ValueError("wrong parameter count")
        return cls(N, dict(zip(keys, vec[:t])), dict(zip(keys, vec[t:2 * t])),
                   vec[2 * t:])


def lusztig_matrix(params):
    """Numeric matrix G_1 ... G_{N-1} diag(u) F_1 ... F_{N-1}."""
    N = params.N
    g = np.eye(N)
    for t in range(1, N):
        G = np.eye(N)
        for m in range(N - t, N):
            G[m, m - 1] = params.b[(m, t - N + 1 + m)]
        g = g @ G
    g = g @ np.diag(params.u)
    for n in range(1, N):
        F = np.eye(N)
        for m in range(n, N):
            F[m - 1, m] = params.a[(m, n)]
        g = g @ F
    return g


def _minor(g, rows, cols):
    sub = g[np.ix_([r - 1 for r in rows], [c - 1 for c in cols])]
    return float(np.linalg.det(sub))


def initial_minors_classical(g):
    """All initial-minor coordinates x[(i, j)] of a square matrix.

    For i <= j this is the solid minor on rows 1..i and columns
    j-i+1..j; for i > j it is the transposed counterpart (rows
    i-j+1..i, columns 1..j).  Boundary values x[(0, j)] = x[(i, 0)] = 1.
    """
    N = g.shape[0]
    x = {}
    for i in range(N + 1):
        x[(i, 0)] = 1.0
        x[(0, i)] = 1.0
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            if i <= j:
                x[(i, j)] = _minor(g, range(1, i + 1), range(j - i + 1, j + 1))
            else:
                x[(i, j)] = _minor(g, range(i - j + 1, i + 1), range(1, j + 1))
    return x


def params_from_minors(x, N):
    """Invert the factorization: recover (a, b, u) from initial minors.

    a_{m,n} = x_{m-n+1,m+1} x_{m-n,m-1} / (x_{m-n,m} x_{m-n+1,m}),
    b_{m,n} mirrors it through the transpose, and u_k is the ratio of
    consecutive principal minors.
    """
    a = {}
    b = {}
    for m, n in _triangle_keys(N):
        r = m - n
        a[(m, n)] = (x[(r + 1, m + 1)] * x[(r, m - 1)]) / (
            x[(r, m)] * x[(r + 1, m)]
        )
        # transposing reverses the lower bidiagonal factors, which mirrors
        # the second index: b_{m,n}(g) sits where a_{m,m-n+1} sits for g^T
        s = n - 1
        b[(m, n)] = (x[(m + 1, s + 1)] * x[(m - 1, s)]) / (
            x[(m, s)] * x[(m, s + 1)]
        )
    u = [x[(k, k)] / x[(k - 1, k - 1)] for k in range(1, N + 1)]
    return PositiveParam(N, a, b, u)


def x_coordinates(g):
    """Ratio coordinates X_ij built from the initial minors."""
    N = g.shape[0]
    x = initial_minors_classical(g)
    X = {}
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            if i == j:
                X[(i, j)] = x[(i, i)] / x[(i - 1, i - 1)]
            elif i < j:
                X[(i, j)] = x[(i, j)] / x[(i, i)]
            else:
                X[(i, j)] = x[(i, j)] / x[(j, j)]
    return X


def _x_vector(g):
    N = g.shape[0]
    X = x_coordinates(g)
    return np.array(
        [X[(i, j)] for i in range(1, N + 1) for j in range(1, N + 1)]
    )


def _jacobian(func, vec, h=1e-6):
    """Central-difference Jacobian of func: R^n -> R^m at vec."""
    base = func(vec)
    J = np.empty((len(base), len(vec)))
    for i in range(len(vec)):
        step = h * max(1.0, abs(vec[i]))
        up = np.array(vec, dtype=float)
        dn = np.array(vec, dtype=float)
        up[i] += step
        dn[i] -= step
        J[:, i] = (func(up) - func(dn)) / (2.0 * step)
    return J


def _spread(vals):
    vals = np.asarray(vals, dtype=float)
    mid = float(np.median(vals))
    return float(np.max(np.abs(vals - mid)) / abs(mid))


def haar_density_check(N, samples=50, seed=0, h=1e-6):
    """Compare candidate invariant densities against the group Haar measure.

    Three comparisons, each reported as a per-sample ratio and its
    relative spread (a spread near zero means the two measures agree up
    to a constant):

    * ``literal``: the parameter-space density du/u * prod (a b)^{N-1-row}
      against |det g|^{-N} times Lebesgue measure on the matrix entries.
      These differ by a non-constant diagonal factor, so the spread is
      expected to be large.
    * ``cross``: the parameter-space density against the ratio-coordinate
      density prod X_ij^{-1} (i,j <= N-1) * X_NN^{-1} with Lebesgue
      measure in the last row/column ratios.  These agree.
    * ``corrected``: the parameter-space density multiplied by the
      modular factor prod_{i<j} u_i/u_j against |det g|^{-N} d(entries).
      These agree.
    """
    rng = np.random.default_rng(seed)
    lit, cross, corr = [], [], []
    for _ in range(samples):
        p = PositiveParam.random(N, rng)
        theta = p.vector()
        g = lusztig_matrix(p)

        # density of the claimed parameter-space measure w.r.t. d(theta)
        f_param = 1.0
        for k in range(N):
            f_param /= p.u[k]
        for (m, n), val in p.a.items():
            f_param *= val ** (N - 1 - m)
        for (m, n), val in p.b.items():
            f_param *= val ** (N - 1 - m)

        # Haar density w.r.t. d(theta): |det g|^{-N} |det d(entries)/d(theta)|
        J_g = _jacobian(
            lambda v: lusztig_matrix(PositiveParam.from_vector(N, v)).ravel(),
            theta, h=h)
        f_haar = abs(np.linalg.det(g)) ** (-N) * abs(np.linalg.det(J_g))

        # ratio-coordinate density w.r.t. d(theta)
        X = x_coordinates(g)
        f_x = 1.0
        for i in range(1, N):
            for j in range(1, N):
                f_x /= X[(i, j)]
        f_x /= X[(N, N)]
        J_x = _jacobian(
            lambda v: _x_vector(lusztig_matrix(PositiveParam.from_vector(N, v))),
            theta, h=h)
        f_x *= abs(np.linalg.det(J_x))

        modular = 1.0
        for i, j in itertools.combinations(range(N), 2):
            modular *= p.u[i] / p.u[j]

        lit.append(f_param / f_haar)
        cross.append(f_param / f_x)
        corr.append(f_param * modular / f_haar)

    return {
        "N": N,
        "samples": samples,
        "literal_ratio_spread": _spread(lit),
        "cross_ratio_spread": _spread(cross),
        "corrected_ratio_spread": _spread(corr),
        "literal_constant": _spread(lit) < 1e-4,
        "cross_constant": _spread(cross) < 1e-4,
        "corrected_constant": _spread(corr) < 1e-4,
    }
