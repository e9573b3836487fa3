"""Vectors in tensor products of q-wedge spaces and the action of the
Chevalley generators and their divided powers.

A monomial K_f is v_{f-block 1} (x) ... (x) v_{f-block s} (x) w_{f[1,n]}; for
the classical kind the last factor is one more V-wedge.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

from .laurent import ONE, ZERO, LaurentPoly, q_power
from .weights import (
    DomainError, Signature, Weight, WeightError, truncate_weight,
)

# Out-of-order adjacent pairs straighten as
#   v_a ^ v_b = STRAIGHTEN * v_b ^ v_a   (a < b, V-wedges are decreasing)
#   w_b ^ w_a = STRAIGHTEN * w_a ^ w_b   (a < b, W-wedges are increasing)
# This is the only constant for which the kernel of the wedge projection
# is stable under the generators with the coproduct used below.
STRAIGHTEN = -q_power(-1)


class ShapeError(WeightError):
    pass


class FockVector:
    """Finite Z[q,q^-1]-combination of monomials K_f of one signature."""

    __slots__ = ("sig", "_terms")

    def __init__(self, sig: Signature, terms: Mapping[Weight, LaurentPoly] | None = None):
        self.sig = sig
        self._terms: dict[tuple[int, ...], LaurentPoly] = {}
        if terms:
            for wt, c in terms.items():
                if wt.sig != sig:
                    raise WeightError(f"{wt} does not have signature {sig}")
                if not wt.is_dominant():
                    raise WeightError(f"{wt} is not dominant")
                c = LaurentPoly.coerce(c)
                if c:
                    self._terms[wt.values] = self._terms.get(wt.values, ZERO) + c
            self._terms = {k: v for k, v in self._terms.items() if v}

    @classmethod
    def _from_raw(cls, sig: Signature, terms: dict[tuple[int, ...], LaurentPoly]) -> "FockVector":
        obj = cls.__new__(cls)
        obj.sig = sig
        obj._terms = {k: v for k, v in terms.items() if v}
        return obj

    @classmethod
    def monomial(cls, f: Weight, coeff: LaurentPoly | int = ONE) -> "FockVector":
        return cls(f.sig, {f: LaurentPoly.coerce(coeff)})

    @classmethod
    def zero(cls, sig: Signature) -> "FockVector":
        return cls._from_raw(sig, {})

    def items(self) -> list[tuple[Weight, LaurentPoly]]:
        return [(Weight(self.sig, k), self._terms[k]) for k in sorted(self._terms)]

    def support(self) -> list[Weight]:
        return [Weight(self.sig, k) for k in sorted(self._terms)]

    def coeff(self, f: Weight) -> LaurentPoly:
        return self._terms.get(f.values, ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Weight, LaurentPoly]]:
        return iter(self.items())

    def _check(self, other: "FockVector") -> None:
        if other.sig != self.sig:
            raise WeightError("vectors have different signatures")

    def __add__(self, other: "FockVector") -> "FockVector":
        self._check(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, ZERO) + c
        return FockVector._from_raw(self.sig, out)

    def __neg__(self) -> "FockVector":
        return FockVector._from_raw(self.sig, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + (-other)

    def scale(self, c: LaurentPoly | int) -> "FockVector":
        c = LaurentPoly.coerce(c)
        return FockVector._from_raw(self.sig, {k: v * c for k, v in self._terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.sig == other.sig and self._terms == other._terms

    def __hash__(self):
        return hash((self.sig, frozenset(self._terms.items())))

    def map_coefficients(self, fn) -> "FockVector":
        return FockVector._from_raw(self.sig, {k: fn(v) for k, v in self._terms.items()})

    def to_json(self) -> dict:
        return {
            "sig": self.sig.to_json(),
            "terms": [{"weight": wt.to_json(), "coeff": c.to_json()} for wt, c in self.items()],
        }

    @classmethod
    def from_json(cls, data) -> "FockVector":
        sig = Signature.from_json(data["sig"])
        terms = {}
        for t in data["terms"]:
            wt = Weight.from_blocks(sig, t["weight"])
            terms[wt] = LaurentPoly.from_json(t["coeff"])
        return cls(sig, terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for wt, c in self.items():
            cs = str(c)
            if cs == "1":
                parts.append(f"K({wt})")
            else:
                parts.append(f"({cs})K({wt})")
        return " + ".join(parts)

    __repr__ = __str__


# straightening


def _factor_is_increasing(sig: Signature, k: int) -> bool:
    return k == sig.s and sig.is_super


def normalize(sig: Signature, factor_words: Sequence[Sequence[int]]) -> FockVector:
    """Straighten arbitrary wedge words into a multiple of one monomial."""
    if len(factor_words) != sig.s + 1:
        raise ShapeError(f"expected {sig.s + 1} factors, got {len(factor_words)}")
    flat: list[int] = []
    inversions = 0
    for k, ((a, b), word) in enumerate(zip(sig.block_ranges(), factor_words)):
        word = list(word)
        if len(word) != b - a:
            raise ShapeError(f"factor {k} needs {b - a} entries, got {len(word)}")
        if len(set(word)) != len(word):
            return FockVector.zero(sig)
        inc = _factor_is_increasing(sig, k)
        for x, y in combinations(word, 2):
            if (x > y) if inc else (x < y):
                inversions += 1
        flat.extend(sorted(word, reverse=not inc))
    coeff = STRAIGHTEN ** inversions if inversions else ONE
    return FockVector._from_raw(sig, {tuple(flat): coeff})


# the action


@dataclass(frozen=True)
class Step:
    kind: str  # "E" or "F"
    a: int
    r: int = 1

    def __post_init__(self):
        if self.kind not in ("E", "F"):
            raise ValueError(f"step kind must be E or F, not {self.kind!r}")
        if self.r < 1:
            raise ValueError("divided power must be >= 1")

    def __str__(self) -> str:
        return f"{self.kind}{self.a}" + (f"^({self.r})" if self.r > 1 else "")


@dataclass(frozen=True)
class OperatorWord:
    """Steps applied left to right: the first step acts first."""

    steps: tuple[Step, ...] = ()

    _TOKEN = re.compile(r"([EF])(-?\d+)(?:\^\(?(\d+)\)?)?")

    @classmethod
    def parse(cls, text: str) -> "OperatorWord":
        steps = []
        for tok in re.split(r"[\s,]+", text.strip()):
            if not tok:
                continue
            mt = cls._TOKEN.fullmatch(tok)
            if not mt:
                raise ValueError(f"cannot parse operator {tok!r}")
            steps.append(Step(mt.group(1), int(mt.group(2)), int(mt.group(3) or 1)))
        return cls(tuple(steps))

    def then(self, other: "OperatorWord") -> "OperatorWord":
        return OperatorWord(self.steps + other.steps)

    def __str__(self) -> str:
        return " ".join(str(s) for s in self.steps)


def _factor_move(block: tuple[int, ...], src: int, dst: int) -> tuple[int, ...] | None:
    # replace src by dst if possible; src and dst are adjacent integers, so the
    # block order is preserved and no straightening is needed
    if src not in block or dst in block:
        return None
    return tuple(dst if x == src else x for x in block)


def _k_exponent(block: tuple[int, ...], a: int, is_w: bool) -> int:
    """Exponent of K_{a,a+1} on a wedge factor."""
    e = (a in block) - ((a + 1) in block)
    return -e if is_w else e


Layout = tuple[tuple[tuple[int, int], ...], tuple[bool, ...]]


def layout_of(sig: Signature) -> Layout:
    """Flat position ranges of the factors and whether each is a W-wedge."""
    ranges = tuple(sig.block_ranges())
    return ranges, tuple(_factor_is_increasing(sig, k) for k in range(len(ranges)))


def _act_monomial(layout: Layout, values: tuple[int, ...], kind: str, a: int, r: int,
                  out: dict[tuple[int, ...], LaurentPoly], coeff: LaurentPoly) -> None:
    ranges, incs = layout
    nf = len(ranges)
    blocks = [values[x:y] for x, y in ranges]
    moved: list[tuple[int, ...] | None] = []
    for blk, is_w in zip(blocks, incs):
        # F on V and E on W send a -> a+1; the other two send a+1 -> a
        up = (kind == "F") != is_w
        moved.append(_factor_move(blk, a, a + 1) if up else _factor_move(blk, a + 1, a))
    movable = [k for k in range(nf) if moved[k] is not None]
    if len(movable) < r:
        return
    for chosen in combinations(movable, r):
        exp = r * (r - 1) // 2
        new_blocks = []
        for k in range(nf):
            blk = moved[k] if k in chosen else blocks[k]
            if kind == "F":
                # K_{a,a+1}^{moves to the right}, applied after the move
                cnt = sum(1 for c in chosen if c > k)
            else:
                # K_{a+1,a}^{moves to the left}
                cnt = -sum(1 for c in chosen if c < k)
            if cnt:
                exp += cnt * _k_exponent(blk, a, incs[k])
            new_blocks.append(blk)
        key = tuple(x for blk in new_blocks for x in blk)
        term = coeff.shift(exp)
        prev = out.get(key)
        if prev is None:
            out[key] = term
        else:
            total = prev + term
            if total:
                out[key] = total
            else:
                del out[key]


def act_terms(layout: Layout, terms: Mapping[tuple[int, ...], LaurentPoly], kind: str, a: int,
              r: int) -> dict[tuple[int, ...], LaurentPoly]:
    """apply_step on a raw {values: coefficient} map."""
    if r == 0:
        return dict(terms)
    out: dict[tuple[int, ...], LaurentPoly] = {}
    for values, c in terms.items():
        _act_monomial(layout, values, kind, a, r, out, c)
    return out


def apply_step(kind: str, a: int, r: int, v: FockVector) -> FockVector:
    """Act by E_a^{(r)} or F_a^{(r)} through the iterated coproduct."""
    if kind not in ("E", "F"):
        raise ValueError(f"step kind must be E or F, not {kind!r}")
    if r < 0:
        raise ValueError("divided power must be >= 0")
    if r == 0:
        return v
    return FockVector._from_raw(v.sig, act_terms(layout_of(v.sig), v._terms, kind, a, r))


def apply_word(word: OperatorWord | Iterable[Step], v: FockVector) -> FockVector:
    steps = word.steps if isinstance(word, OperatorWord) else tuple(word)
    for st in steps:
        v = apply_step(st.kind, st.a, st.r, v)
        if v.is_zero():
            break
    return v


def k_weight(f: Weight, a: int) -> int:
    """Exponent of K_{a,a+1} on K_f."""
    total = 0
    for k, blk in enumerate(f.blocks()):
        total += _k_exponent(blk, a, _factor_is_increasing(f.sig, k))
    return total


def truncate_vector(v: FockVector, n_to: int) -> FockVector:
    """Apply truncate_weight termwise, dropping non-conforming terms."""
    out = {}
    for wt, c in v.items():
        if not wt.is_plusplus():
            raise DomainError(f"{wt} is outside the ++ region")
        t = truncate_weight(wt, v.sig.n, n_to)
        if t is not None:
            out[t] = c
    return FockVector(v.sig.with_n(n_to), out)
