"""Integer Laurent polynomials in the deformation parameter q.

These are the scalars of the whole exact layer: every coefficient that
appears in a normal-form skew polynomial is an element of Z[q, q^-1],
stored sparsely as {exponent: coefficient} with no zero coefficients.
Instances are treated as immutable values.
"""

from __future__ import annotations


class QLaurent:
    """An element of Z[q, q^-1]."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        self.coeffs = {e: c for e, c in coeffs.items() if c != 0}

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "QLaurent":
        return QLaurent({})

    @staticmethod
    def one() -> "QLaurent":
        return QLaurent({0: 1})

    @staticmethod
    def from_int(n: int) -> "QLaurent":
        return QLaurent({0: n})

    @staticmethod
    def q_power(k: int, coeff: int = 1) -> "QLaurent":
        """The monomial coeff * q^k."""
        return QLaurent({k: coeff})

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "QLaurent") -> "QLaurent":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return QLaurent(out)

    def __neg__(self) -> "QLaurent":
        return QLaurent({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "QLaurent") -> "QLaurent":
        return self + (-other)

    def __mul__(self, other: "QLaurent") -> "QLaurent":
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return QLaurent(out)

    def shift(self, k: int) -> "QLaurent":
        """Multiply by q^k."""
        if k == 0:
            return self
        return QLaurent({e + k: c for e, c in self.coeffs.items()})

    # -- predicates and structure ---------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == {0: 1}

    def as_q_power(self):
        """Return k if self == q^k (unit coefficient +1), else None."""
        if len(self.coeffs) != 1:
            return None
        (e, c), = self.coeffs.items()
        return e if c == 1 else None

    def min_exp(self) -> int:
        return min(self.coeffs)

    def shift_between(self, other: "QLaurent"):
        """Return k such that self == q^k * other, or None."""
        if self.is_zero() and other.is_zero():
            return 0
        if self.is_zero() or other.is_zero():
            return None
        if len(self.coeffs) != len(other.coeffs):
            return None
        k = self.min_exp() - other.min_exp()
        return k if self == other.shift(k) else None

    def __eq__(self, other) -> bool:
        return isinstance(other, QLaurent) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    # -- evaluation and IO ----------------------------------------------

    def __call__(self, q: complex) -> complex:
        return sum(c * q ** e for e, c in self.coeffs.items())

    def to_json(self) -> dict:
        return {str(e): c for e, c in sorted(self.coeffs.items())}

    @staticmethod
    def from_json(data: dict) -> "QLaurent":
        return QLaurent({int(e): int(c) for e, c in data.items()})

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in sorted(self.coeffs.items()):
            if e == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(f"q^{e}" if e != 1 else "q")
            elif c == -1:
                parts.append(f"-q^{e}" if e != 1 else "-q")
            else:
                parts.append(f"{c}*q^{e}" if e != 1 else f"{c}*q")
        return " + ".join(parts).replace("+ -", "- ")
