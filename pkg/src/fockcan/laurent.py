"""Sparse Laurent polynomials in q with integer coefficients."""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping


class DivisionError(ArithmeticError):
    """Raised when a division in Z[q, q^-1] does not come out exact."""


class LaurentPoly:
    """An element of Z[q, q^-1], stored as {exponent: nonzero coefficient}.

    Instances are immutable and hashable; equality is structural because
    zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean: dict[int, int] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[int(e)] = int(c)
        self._terms = clean
        self._hash: int | None = None

    # construction helpers

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "LaurentPoly":
        # trusted path: caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls._raw({0: c}) if c else ZERO

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "LaurentPoly":
        return cls._raw({e: c}) if c else ZERO

    @classmethod
    def coerce(cls, x: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    # inspection

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._terms.items()))

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return min(self._terms)

    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        """True for +-q^k, the units of Z[q, q^-1]."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def at_one(self) -> int:
        return sum(self._terms.values())

    def evaluate(self, x):
        """Substitute a number (int, Fraction, ...) for q."""
        total = 0
        for e, c in self._terms.items():
            total += c * (x ** e)
        return total

    def substitute_neg_inverse(self) -> "LaurentPoly":
        """Return p(-q^-1)."""
        return LaurentPoly._raw({-e: (c if e % 2 == 0 else -c) for e, c in self._terms.items()})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        if not k:
            return self
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    # ring structure

    def __add__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return ZERO
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if not self.is_unit():
                raise DivisionError("only units have negative powers")
            (e, c), = self._terms.items()
            return LaurentPoly._raw({e * k: 1 if k % 2 == 0 else c})
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divide_exact(self, divisor: "LaurentPoly | int") -> "LaurentPoly":
        """Exact division in Z[q, q^-1]; raises DivisionError otherwise."""
        d = LaurentPoly.coerce(divisor)
        if not d:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._terms:
            return ZERO
        rem = dict(self._terms)
        d_top = d.max_degree()
        d_lead = d._terms[d_top]
        d_low = d.min_degree()
        quot: dict[int, int] = {}
        low = self.min_degree()
        # long division from the top degree down
        while rem:
            top = max(rem)
            if top - d_top + d_low < low:
                raise DivisionError(f"{self} is not divisible by {d}")
            c = rem[top]
            if c % d_lead:
                raise DivisionError(f"{self} is not divisible by {d}")
            qc = c // d_lead
            shift = top - d_top
            quot[shift] = qc
            for e, dc in d._terms.items():
                k = e + shift
                v = rem.get(k, 0) - qc * dc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly(quot)

    # involution and splitting

    def bar(self) -> "LaurentPoly":
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()})

    def is_bar_symmetric(self) -> bool:
        return all(self._terms.get(-e, 0) == c for e, c in self._terms.items())

    def positive_part(self) -> "LaurentPoly":
        """Terms with exponent > 0."""
        return LaurentPoly._raw({e: c for e, c in self._terms.items() if e > 0})

    def negative_part(self) -> "LaurentPoly":
        """Terms with exponent < 0."""
        return LaurentPoly._raw({e: c for e, c in self._terms.items() if e < 0})

    def in_qZq(self) -> bool:
        return all(e > 0 for e in self._terms)

    def in_qinvZqinv(self) -> bool:
        return all(e < 0 for e in self._terms)

    def nonneg_coefficients(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    # comparison / hashing

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def sort_key(self) -> tuple:
        return tuple(sorted(self._terms.items()))

    # serialization

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in sorted(self._terms.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in data.items()})

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_json()})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            if e == 0:
                mono = ""
            elif e == 1:
                mono = "q"
            else:
                mono = f"q^{e}"
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{mag}{mono}"
            else:
                body = str(mag)
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _maybe(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    return NotImplemented


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
Q = LaurentPoly._raw({1: 1})
QINV = LaurentPoly._raw({-1: 1})


def q_power(k: int) -> LaurentPoly:
    return LaurentPoly._raw({k: 1})


def bar(p: LaurentPoly) -> LaurentPoly:
    return p.bar()


def quantum_int(k: int) -> LaurentPoly:
    """[k] = q^(k-1) + q^(k-3) + ... + q^(1-k); [0] = 0."""
    if k < 0:
        raise ValueError("quantum_int expects k >= 0")
    return LaurentPoly._raw({k - 1 - 2 * i: 1 for i in range(k)})


def quantum_factorial(k: int) -> LaurentPoly:
    if k < 0:
        raise ValueError("quantum_factorial expects k >= 0")
    out = ONE
    for i in range(2, k + 1):
        out = out * quantum_int(i)
    return out


def poly_sum(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    acc: dict[int, int] = {}
    for p in polys:
        for e, c in p._terms.items():
            acc[e] = acc.get(e, 0) + c
    return LaurentPoly(acc)
