"""Exact arithmetic in quantum-torus-type algebras.

An algebra here is a free Laurent algebra on finitely many generators
x_1 < x_2 < ... < x_n modulo the relations

    x_i x_j = q^(2 C[i][j]) x_j x_i,

with C an antisymmetric integer matrix.  Every element has a unique
normal form: a Z[q,q^-1]-linear combination of ordered monomials
x_1^e1 ... x_n^en with integer (possibly negative) exponents.  All types
are immutable values and all operations are pure.
"""

from __future__ import annotations

import json

from .laurent import QLaurent


class SignatureError(ValueError):
    pass


class AlgebraSignature:
    """Ordered generator names plus the antisymmetric commutation matrix."""

    __slots__ = ("names", "C", "_index")

    def __init__(self, names, C):
        names = tuple(names)
        C = tuple(tuple(int(v) for v in row) for row in C)
        n = len(names)
        if len(C) != n or any(len(row) != n for row in C):
            raise SignatureError(
                f"commutation matrix must be {n}x{n}, got {len(C)} rows"
            )
        for i in range(n):
            if C[i][i] != 0:
                raise SignatureError(f"C[{i}][{i}] must be 0")
            for j in range(i + 1, n):
                if C[i][j] != -C[j][i]:
                    raise SignatureError(
                        f"C not antisymmetric at ({i},{j}): {C[i][j]} vs {C[j][i]}"
                    )
        if len(set(names)) != n:
            raise SignatureError("generator names must be distinct")
        self.names = names
        self.C = C
        self._index = {name: i for i, name in enumerate(names)}

    @property
    def ngens(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self._index[name]

    def pairing(self, alpha, beta) -> int:
        """Bilinear commutation form: x^a x^b = q^(2k) x^b x^a with k = <a,b>."""
        k = 0
        C = self.C
        for i, ai in enumerate(alpha):
            if not ai:
                continue
            row = C[i]
            for j, bj in enumerate(beta):
                if bj:
                    k += ai * bj * row[j]
        return k

    def reorder_exponent(self, alpha, beta) -> int:
        """q-exponent picked up merging x^a * x^b into normal order x^(a+b).

        Moving each x_j^(b_j) leftwards past x_i^(a_i) for i > j gives
        sum_{i>j} a_i b_j C[i][j].
        """
        k = 0
        C = self.C
        for i, ai in enumerate(alpha):
            if not ai:
                continue
            row = C[i]
            for j in range(i):
                bj = beta[j]
                if bj:
                    k += ai * bj * row[j]
        return k

    def direct_sum(self, other: "AlgebraSignature", rename=None) -> "AlgebraSignature":
        """Two mutually commuting copies side by side."""
        other_names = other.names if rename is None else tuple(rename(n) for n in other.names)
        n, m = self.ngens, other.ngens
        C = [[0] * (n + m) for _ in range(n + m)]
        for i in range(n):
            for j in range(n):
                C[i][j] = self.C[i][j]
        for i in range(m):
            for j in range(m):
                C[n + i][n + j] = other.C[i][j]
        return AlgebraSignature(self.names + other_names, C)

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraSignature)
            and self.names == other.names
            and self.C == other.C
        )

    def __hash__(self):
        return hash((self.names, self.C))

    def to_json(self) -> dict:
        return {"names": list(self.names), "C": [list(r) for r in self.C]}

    @staticmethod
    def from_json(data: dict) -> "AlgebraSignature":
        return AlgebraSignature(data["names"], data["C"])

    def __repr__(self):
        return f"AlgebraSignature({list(self.names)!r})"


def make_algebra(names, C) -> AlgebraSignature:
    """Validate and build a signature; rejects non-antisymmetric C."""
    return AlgebraSignature(names, C)


class Polynomial:
    """Normal-form element: finite map ordered-monomial -> QLaurent scalar."""

    __slots__ = ("sig", "terms")

    def __init__(self, sig: AlgebraSignature, terms=None):
        self.sig = sig
        clean = {}
        if terms:
            for mono, scalar in terms.items():
                if not isinstance(scalar, QLaurent):
                    scalar = QLaurent.from_int(scalar)
                if scalar.is_zero():
                    continue
                mono = tuple(int(e) for e in mono)
                if len(mono) != sig.ngens:
                    raise SignatureError("monomial length does not match signature")
                clean[mono] = scalar
        self.terms = clean

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(sig) -> "Polynomial":
        return Polynomial(sig)

    @staticmethod
    def one(sig) -> "Polynomial":
        return Polynomial(sig, {(0,) * sig.ngens: QLaurent.one()})

    @staticmethod
    def scalar(sig, s) -> "Polynomial":
        if not isinstance(s, QLaurent):
            s = QLaurent.from_int(s)
        return Polynomial(sig, {(0,) * sig.ngens: s})

    @staticmethod
    def generator(sig, name, power: int = 1) -> "Polynomial":
        exps = [0] * sig.ngens
        exps[sig.index(name)] = power
        return Polynomial(sig, {tuple(exps): QLaurent.one()})

    @staticmethod
    def monomial(sig, exps, scalar=None) -> "Polynomial":
        if scalar is None:
            scalar = QLaurent.one()
        return Polynomial(sig, {tuple(exps): scalar})

    # -- ring operations ----------------------------------------------

    def _check_sig(self, other):
        if self.sig != other.sig:
            raise SignatureError("polynomials live over different signatures")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_sig(other)
        out = dict(self.terms)
        for mono, sc in other.terms.items():
            s = out.get(mono)
            s = sc if s is None else s + sc
            if s.is_zero():
                out.pop(mono, None)
            else:
                out[mono] = s
        return Polynomial(self.sig, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.sig, {m: -s for m, s in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check_sig(other)
        sig = self.sig
        out = {}
        for m1, s1 in self.terms.items():
            for m2, s2 in other.terms.items():
                k = sig.reorder_exponent(m1, m2)
                mono = tuple(a + b for a, b in zip(m1, m2))
                sc = (s1 * s2).shift(2 * k)
                prev = out.get(mono)
                sc = sc if prev is None else prev + sc
                if sc.is_zero():
                    out.pop(mono, None)
                else:
                    out[mono] = sc
        return Polynomial(sig, out)

    def scale(self, s) -> "Polynomial":
        if not isinstance(s, QLaurent):
            s = QLaurent.from_int(s)
        return Polynomial(self.sig, {m: sc * s for m, sc in self.terms.items()})

    def q_shift(self, k: int) -> "Polynomial":
        return Polynomial(self.sig, {m: sc.shift(k) for m, sc in self.terms.items()})

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.sig == other.sig
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.sig, frozenset(self.terms.items())))

    # -- IO --------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "terms": [
                [list(m), self.terms[m].to_json()] for m in sorted(self.terms)
            ]
        }

    @staticmethod
    def from_json(sig, data) -> "Polynomial":
        return Polynomial(
            sig, {tuple(m): QLaurent.from_json(sc) for m, sc in data["terms"]}
        )

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms):
            sc = self.terms[mono]
            factors = []
            for name, e in zip(self.sig.names, mono):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors) if factors else "1"
            parts.append(f"({sc!r})*{body}")
        return " + ".join(parts)


def normal_mul(p: Polynomial, r: Polynomial) -> Polynomial:
    """Product in normal form (alias for the * operator)."""
    return p * r


def q_commutation_exponent(p: Polynomial, r: Polynomial):
    """Return k with p*r == q^(2k) * r*p exactly, or None.

    None means the pair does not q-commute uniformly.
    """
    if p.is_zero() or r.is_zero():
        raise ValueError("q_commutation_exponent requires nonzero polynomials")
    pr = p * r
    rp = r * p
    if set(pr.terms) != set(rp.terms):
        return None
    k = None
    for mono, sc in pr.terms.items():
        shift = sc.shift_between(rp.terms[mono])
        if shift is None or shift % 2 != 0:
            return None
        if k is None:
            k = shift // 2
        elif k != shift // 2:
            return None
    return 0 if k is None else k


class Morphism:
    """Monomial algebra map: each source generator goes to q^k * x^alpha.

    The coefficient of every image is a pure power of q with unit
    coefficient; `check` verifies relation preservation pair by pair.
    """

    __slots__ = ("source", "target", "images")

    def __init__(self, source: AlgebraSignature, target: AlgebraSignature, images):
        # images: list of (q_power:int, exponent tuple over target)
        if len(images) != source.ngens:
            raise SignatureError("one image required per source generator")
        norm = []
        for qpow, exps in images:
            exps = tuple(int(e) for e in exps)
            if len(exps) != target.ngens:
                raise SignatureError("image exponent length does not match target")
            norm.append((int(qpow), exps))
        self.source = source
        self.target = target
        self.images = tuple(norm)

    def image_poly(self, i: int) -> Polynomial:
        qpow, exps = self.images[i]
        return Polynomial.monomial(self.target, exps, QLaurent.q_power(qpow))

    def check(self) -> dict:
        """Verify all pairwise commutation relations of the source.

        Violations are report content, not exceptions.
        """
        violations = []
        n = self.source.ngens
        for i in range(n):
            for j in range(i + 1, n):
                expected = self.source.C[i][j]
                observed = self.target.pairing(self.images[i][1], self.images[j][1])
                if observed != expected:
                    violations.append(
                        {
                            "pair": [self.source.names[i], self.source.names[j]],
                            "expected": expected,
                            "observed": observed,
                        }
                    )
        return {
            "pass": not violations,
            "checked_pairs": n * (n - 1) // 2,
            "violations": violations,
        }

    def apply(self, p: Polynomial) -> Polynomial:
        """Ring-homomorphic image of a polynomial over the source."""
        if p.sig != self.source:
            raise SignatureError("polynomial is not over the morphism source")
        tgt = self.target
        out = Polynomial.zero(tgt)
        for mono, sc in p.terms.items():
            qpow = 0
            exps = [0] * tgt.ngens
            for i, e in enumerate(mono):
                if not e:
                    continue
                g_qpow, g_exps = self.images[i]
                # (q^a x^alpha)^e = q^(ae) q^(2 * e(e-1)/2 * <alpha,alpha>_<) x^(e alpha)
                kappa = tgt.reorder_exponent(g_exps, g_exps)
                step_q = g_qpow * e + kappa * e * (e - 1)
                # merge into the running normal-form monomial
                scaled = tuple(v * e for v in g_exps)
                qpow += step_q + 2 * tgt.reorder_exponent(tuple(exps), scaled)
                for t, v in enumerate(scaled):
                    exps[t] += v
            out = out + Polynomial.monomial(tgt, exps, sc.shift(qpow))
        return out

    def to_json(self) -> dict:
        return {
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "images": [
                {"generator": name, "q_power": qpow, "exponents": list(exps)}
                for name, (qpow, exps) in zip(self.source.names, self.images)
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "Morphism":
        src = AlgebraSignature.from_json(data["source"])
        tgt = AlgebraSignature.from_json(data["target"])
        images = [(im["q_power"], tuple(im["exponents"])) for im in data["images"]]
        return Morphism(src, tgt, images)


def check_morphism(f: Morphism) -> dict:
    return f.check()


def apply_morphism(p: Polynomial, f: Morphism) -> Polynomial:
    return f.apply(p)


def dumps_canonical(obj) -> str:
    """Byte-stable JSON used by the CLI and golden files."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
