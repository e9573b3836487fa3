"""Weight functions on I(m|n), their orderings, and the combinatorial
operators (rho-shift, natural bijection, L-operators, positive pairs)."""

from __future__ import annotations

import os
from collections import Counter, deque
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class WeightError(ValueError):
    """Base class for domain errors raised by weight operations."""


class NoDominantConjugate(WeightError):
    pass


class WindowExceeded(WeightError):
    pass


class LOperatorUnresolved(WeightError):
    pass


class UnsupportedSignature(WeightError):
    pass


class DomainError(WeightError):
    pass


class ParseError(WeightError):
    pass


def max_window_size() -> int:
    return int(os.environ.get("FOCKCAN_MAX_WINDOW", "20000"))


class Kind(str, Enum):
    SUPER = "super"
    CLASSICAL = "classical"


@dataclass(frozen=True)
class Signature:
    """Block shape (m_1,...,m_s | n) of a Fock space.

    Indices run over -m..-1 (the V-blocks, left to right) and 1..n.  For
    the super kind the n-part is a wedge of W; for the classical kind it is
    one more wedge of V.
    """

    m_blocks: tuple[int, ...]
    n: int
    kind: Kind = Kind.SUPER

    def __post_init__(self):
        object.__setattr__(self, "m_blocks", tuple(int(x) for x in self.m_blocks))
        object.__setattr__(self, "kind", Kind(self.kind))
        if not self.m_blocks or any(b < 1 for b in self.m_blocks):
            raise WeightError(f"bad block sizes {self.m_blocks}")
        if self.n < 0:
            raise WeightError("n must be nonnegative")

    @classmethod
    def parse(cls, text: str, kind: Kind | str = Kind.SUPER) -> "Signature":
        """Parse "2,1|1" (super) or "2,1+6" (classical shorthand)."""
        text = text.strip()
        if "+" in text and "|" not in text:
            left, right = text.split("+", 1)
            kind = Kind.CLASSICAL
        elif "|" in text:
            left, right = text.split("|", 1)
        else:
            raise ParseError(f"cannot parse signature {text!r}")
        try:
            blocks = tuple(int(x) for x in left.split(",") if x.strip())
            n = int(right) if right.strip() else 0
        except ValueError as exc:
            raise ParseError(f"cannot parse signature {text!r}") from exc
        return cls(blocks, n, Kind(kind))

    @property
    def s(self) -> int:
        return len(self.m_blocks)

    @property
    def m(self) -> int:
        return sum(self.m_blocks)

    @property
    def size(self) -> int:
        return self.m + self.n

    @property
    def is_super(self) -> bool:
        return self.kind is Kind.SUPER

    def indices(self) -> list[int]:
        return list(range(-self.m, 0)) + list(range(1, self.n + 1))

    def pos(self, i: int) -> int:
        """Flat position of index i."""
        if i < 0:
            if i < -self.m:
                raise IndexError(i)
            return i + self.m
        if i == 0 or i > self.n:
            raise IndexError(i)
        return self.m + i - 1

    def index(self, p: int) -> int:
        return p - self.m if p < self.m else p - self.m + 1

    def block_ranges(self) -> list[tuple[int, int]]:
        """Flat position ranges [start, stop) of every factor, the n-part last."""
        out = []
        start = 0
        for b in self.m_blocks:
            out.append((start, start + b))
            start += b
        out.append((start, start + self.n))
        return out

    @lru_cache(maxsize=None)
    def block_id(self) -> tuple[int, ...]:
        ids = []
        for k, (a, b) in enumerate(self.block_ranges()):
            ids.extend([k] * (b - a))
        return tuple(ids)

    def with_n(self, n: int) -> "Signature":
        return Signature(self.m_blocks, n, self.kind)

    def __str__(self) -> str:
        body = ",".join(str(b) for b in self.m_blocks)
        if self.kind is Kind.CLASSICAL:
            return f"{body}+{self.n}"
        return f"{body}|{self.n}"

    def to_json(self) -> dict:
        return {"m": list(self.m_blocks), "n": self.n, "kind": self.kind.value}

    @classmethod
    def from_json(cls, data) -> "Signature":
        return cls(tuple(data["m"]), int(data["n"]), Kind(data.get("kind", "super")))


@dataclass(frozen=True)
class Weight:
    """A function f: I(m|n) -> Z, stored flat in index order -m..-1, 1..n.

    Weights built through ``Weight(...)`` are checked to be dominant; use
    ``Weight.raw`` for arbitrary functions.
    """

    sig: Signature
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if len(self.values) != self.sig.size:
            raise WeightError(f"expected {self.sig.size} values, got {len(self.values)}")

    @classmethod
    def raw(cls, sig: Signature, values: Iterable[int]) -> "Weight":
        return cls(sig, tuple(values))

    @classmethod
    def dominant(cls, sig: Signature, values: Iterable[int]) -> "Weight":
        w = cls(sig, tuple(values))
        if not w.is_dominant():
            raise WeightError(f"{w} is not dominant")
        return w

    @classmethod
    def from_blocks(cls, sig: Signature, blocks: Sequence[Sequence[int]]) -> "Weight":
        flat: list[int] = []
        for b in blocks:
            flat.extend(b)
        return cls(sig, tuple(flat))

    def __getitem__(self, i: int) -> int:
        return self.values[self.sig.pos(i)]

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.values[a:b] for a, b in self.sig.block_ranges())

    @property
    def neg(self) -> tuple[int, ...]:
        return self.values[: self.sig.m]

    @property
    def pos_part(self) -> tuple[int, ...]:
        return self.values[self.sig.m:]

    def is_dominant(self) -> bool:
        return _is_dominant(self.sig, self.values)

    def is_plusplus(self) -> bool:
        """The "++" predicate: f(n) <= n (super) or f(n) >= 1-n (classical)."""
        if self.sig.n == 0:
            return True
        last = self.values[-1]
        if self.sig.is_super:
            return last <= self.sig.n
        return last >= 1 - self.sig.n

    def sort_key(self) -> tuple[int, ...]:
        return self.values

    def __lt__(self, other: "Weight") -> bool:
        return self.values < other.values

    def __str__(self) -> str:
        return "|".join(",".join(str(v) for v in b) for b in self.blocks())

    def to_json(self) -> list[list[int]]:
        return [list(b) for b in self.blocks()]


def parse_weight(sig: Signature, text: str, check: bool = True) -> Weight:
    """Parse "5,3|2|2".  A two-group form "0,0|0" is also accepted, in which
    case the first group is split according to the block sizes."""
    groups = text.strip().split("|")
    try:
        parsed = [[int(x) for x in g.split(",") if x.strip()] for g in groups]
    except ValueError as exc:
        raise ParseError(f"cannot parse weight {text!r}") from exc
    if len(parsed) == sig.s + 1:
        blocks = parsed
    elif len(parsed) == 2 and len(parsed[0]) == sig.m:
        flat = parsed[0]
        blocks = []
        start = 0
        for b in sig.m_blocks:
            blocks.append(flat[start:start + b])
            start += b
        blocks.append(parsed[1])
    elif len(parsed) == sig.s and sig.n == 0:
        blocks = parsed + [[]]
    else:
        raise ParseError(f"weight {text!r} does not fit signature {sig}")
    for (a, b), blk in zip(sig.block_ranges(), blocks):
        if len(blk) != b - a:
            raise ParseError(f"weight {text!r} does not fit signature {sig}")
    w = Weight.from_blocks(sig, blocks)
    if check and not w.is_dominant():
        raise ParseError(f"weight {text!r} is not dominant for {sig}")
    return w


def _is_dominant(sig: Signature, values: Sequence[int]) -> bool:
    ranges = sig.block_ranges()
    for k, (a, b) in enumerate(ranges):
        increasing = k == len(ranges) - 1 and sig.is_super
        for p in range(a, b - 1):
            if increasing:
                if not values[p] < values[p + 1]:
                    return False
            elif not values[p] > values[p + 1]:
                return False
    return True


def _conjugate(sig: Signature, values: Sequence[int]) -> tuple[int, ...] | None:
    out: list[int] = []
    ranges = sig.block_ranges()
    for k, (a, b) in enumerate(ranges):
        blk = values[a:b]
        if len(set(blk)) != len(blk):
            return None
        increasing = k == len(ranges) - 1 and sig.is_super
        out.extend(sorted(blk, reverse=not increasing))
    return tuple(out)


def dominant_conjugate(sig: Signature, values: Sequence[int] | Weight) -> Weight:
    """Sort every block into dominant order; a repeated value inside a block
    raises NoDominantConjugate."""
    if isinstance(values, Weight):
        values = values.values
    c = _conjugate(sig, values)
    if c is None:
        raise NoDominantConjugate(f"{list(values)} has a repeated value inside a block")
    return Weight(sig, c)


# epsilon weights, atypicality, rho-shift


@dataclass(frozen=True)
class EpsWeight:
    """Finitely supported integer combination of the epsilon_a."""

    coeffs: tuple[tuple[int, int], ...]

    @classmethod
    def from_counter(cls, c: Counter) -> "EpsWeight":
        return cls(tuple(sorted((a, k) for a, k in c.items() if k)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for a, k in sorted(self.coeffs, reverse=True):
            mag = "" if abs(k) == 1 else str(abs(k))
            parts.append(("-" if k < 0 else "+") + f"{mag}e{a}")
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s

    def to_json(self) -> dict[str, int]:
        return {str(a): k for a, k in self.coeffs}


def eps_weight(f: Weight) -> EpsWeight:
    c: Counter = Counter()
    m = f.sig.m
    for p, v in enumerate(f.values):
        if f.sig.is_super and p >= m:
            c[v] -= 1
        else:
            c[v] += 1
    return EpsWeight.from_counter(c)


def atypicality(f: Weight) -> int:
    if not f.sig.is_super:
        raise DomainError("atypicality is only defined for super weights")
    total = sum(abs(k) for _, k in eps_weight(f).coeffs)
    return (f.sig.size - total) // 2


@dataclass(frozen=True)
class LambdaWeight:
    """Coefficients lambda_i of an integral weight, in index order."""

    sig: Signature
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(v) for v in self.coeffs))
        if len(self.coeffs) != self.sig.size:
            raise WeightError("wrong number of coefficients")

    def __getitem__(self, i: int) -> int:
        return self.coeffs[self.sig.pos(i)]


def rho_shift(lam: LambdaWeight) -> Weight:
    sig = lam.sig
    out = []
    for i in sig.indices():
        li = lam[i]
        if sig.is_super:
            out.append(li - i if i < 0 else i - li)
        else:
            out.append(li - i if i < 0 else li + 1 - i)
    return Weight.raw(sig, out)


def rho_unshift(f: Weight) -> LambdaWeight:
    sig = f.sig
    out = []
    for i in sig.indices():
        fi = f[i]
        if sig.is_super:
            out.append(fi + i if i < 0 else i - fi)
        else:
            out.append(fi + i if i < 0 else fi - 1 + i)
    return LambdaWeight(sig, tuple(out))


# orderings


@dataclass(frozen=True)
class WeightWindow:
    """Value bounds lo <= f(i) <= hi imposed on every index, plus a cap on the
    number of weights a closure may visit."""

    lo: int
    hi: int
    max_size: int = field(default_factory=max_window_size)

    @classmethod
    def around(cls, weights: Iterable[Weight], radius: int = 8) -> "WeightWindow":
        vals = [v for w in weights for v in w.values]
        if not vals:
            return cls(-radius, radius)
        return cls(min(vals) - radius, max(vals) + radius)

    @classmethod
    def spanning(cls, *weights: Weight) -> "WeightWindow":
        return cls.around(weights, 0)

    def contains(self, f: Weight) -> bool:
        return all(self.lo <= v <= self.hi for v in f.values)


def _super_moves(f: Weight, lo: int) -> Iterator[tuple[int, ...]]:
    sig = f.sig
    vals = f.values
    m = sig.m
    bid = sig.block_id()
    # lower a matched pair (i<0<j) by a; the intermediate functions need not
    # be dominant, so every a with a dominant endpoint is a descendant
    for p in range(m):
        v = vals[p]
        for r in range(m, sig.size):
            if vals[r] != v:
                continue
            for a in range(1, v - lo + 1):
                new = list(vals)
                new[p] = v - a
                new[r] = v - a
                c = _conjugate(sig, new)
                if c is not None:
                    yield c
    # swap values across V-blocks, larger value moving right
    for p in range(m):
        for r in range(p + 1, m):
            if bid[p] != bid[r] and vals[p] > vals[r]:
                new = list(vals)
                new[p], new[r] = new[r], new[p]
                c = _conjugate(sig, new)
                if c is not None:
                    yield c


def _classical_moves(f: Weight) -> Iterator[tuple[int, ...]]:
    sig = f.sig
    vals = f.values
    bid = sig.block_id()
    for p in range(sig.size):
        for r in range(p + 1, sig.size):
            if bid[p] != bid[r] and vals[p] > vals[r]:
                new = list(vals)
                new[p], new[r] = new[r], new[p]
                c = _conjugate(sig, new)
                if c is not None:
                    yield c


def down_moves(f: Weight, lo: int | None = None) -> list[Weight]:
    """Dominant weights one move below f (values kept >= lo)."""
    if f.sig.is_super:
        if lo is None:
            lo = min(f.values) - 1
        return [Weight(f.sig, c) for c in sorted(set(_super_moves(f, lo)))]
    return [Weight(f.sig, c) for c in sorted(set(_classical_moves(f)))]


def _sorted_desc(xs: Sequence[int]) -> list[int]:
    return sorted(xs, reverse=True)


def _can_reach(h: tuple[int, ...], g_neg: list[int], g_pos: list[int], m: int) -> bool:
    # every move lowers the sorted negative part and sorted positive part
    # entrywise (or permutes), so these are necessary conditions
    hn = _sorted_desc(h[:m])
    hp = _sorted_desc(h[m:])
    return all(x >= y for x, y in zip(hn, g_neg)) and all(x >= y for x, y in zip(hp, g_pos))


def downset(f: Weight, window: WeightWindow) -> list[Weight]:
    """All dominant g with g below or equal to f whose values lie in the window."""
    if not window.contains(f):
        raise WindowExceeded(f"{f} lies outside the window [{window.lo}, {window.hi}]")
    seen = {f.values}
    queue = deque([f])
    while queue:
        h = queue.popleft()
        for g in down_moves(h, window.lo):
            if g.values in seen or not window.contains(g):
                continue
            seen.add(g.values)
            if len(seen) > window.max_size:
                raise WindowExceeded(f"closure below {f} exceeds {window.max_size} weights")
            queue.append(g)
    return sorted(Weight(f.sig, v) for v in seen)


def _leq(g: Weight, f: Weight, window: WeightWindow | None) -> bool:
    if g.sig != f.sig:
        raise WeightError("weights have different signatures")
    if g == f:
        return True
    if eps_weight(g) != eps_weight(f):
        return False
    if window is None:
        window = WeightWindow.spanning(g, f)
    for w in (g, f):
        if not window.contains(w):
            raise WindowExceeded(f"{w} lies outside the window [{window.lo}, {window.hi}]")
    m = f.sig.m if f.sig.is_super else f.sig.size
    g_neg = _sorted_desc(g.values[:m])
    g_pos = _sorted_desc(g.values[m:])
    if not _can_reach(f.values, g_neg, g_pos, m):
        return False
    seen = {f.values}
    queue = deque([f])
    while queue:
        h = queue.popleft()
        for nxt in down_moves(h, window.lo):
            v = nxt.values
            if v == g.values:
                return True
            if v in seen or not window.contains(nxt):
                continue
            if not _can_reach(v, g_neg, g_pos, m):
                continue
            seen.add(v)
            if len(seen) > window.max_size:
                raise WindowExceeded(f"descent from {f} exceeds {window.max_size} weights")
            queue.append(nxt)
    return False


def super_bruhat_leq(g: Weight, f: Weight, window: WeightWindow | None = None) -> bool:
    """True iff g is below or equal to f in the super Bruhat ordering.

    Intervals of the ordering stay inside the value range spanned by g and f,
    so the default window (exactly that range) gives the exact answer.
    """
    if not f.sig.is_super:
        raise DomainError("super_bruhat_leq needs super weights")
    return _leq(g, f, window)


def classical_bruhat_leq(g: Weight, f: Weight) -> bool:
    if f.sig.is_super:
        raise DomainError("classical_bruhat_leq needs classical weights")
    return _leq(g, f, None)


def bruhat_leq(g: Weight, f: Weight, window: WeightWindow | None = None) -> bool:
    return _leq(g, f, window)


def is_minimal(f: Weight) -> bool:
    if f.sig.is_super:
        if atypicality(f):
            return False
        return not down_moves(f)
    return not down_moves(f)


def neg_w0(f: Weight) -> Weight:
    return dominant_conjugate(f.sig, [-v for v in f.values])


# truncation and the natural bijection


def truncate_weight(f: Weight, n_from: int, n_to: int) -> Weight | None:
    """Restrict f from I(m|n_from) to I(m|n_to) if the discarded tail is the
    vacuum tail, else return None."""
    sig = f.sig
    if n_from != sig.n:
        raise WeightError(f"{f} lives on n={sig.n}, not {n_from}")
    if n_to > sig.n:
        raise WeightError("truncation must not enlarge n")
    for j in range(n_to + 1, sig.n + 1):
        expected = j if sig.is_super else 1 - j
        if f[j] != expected:
            return None
    return Weight(sig.with_n(n_to), f.values[: sig.m + n_to])


def extend_weight(f: Weight, n_to: int) -> Weight:
    """Append the vacuum tail up to n_to."""
    sig = f.sig
    tail = [j if sig.is_super else 1 - j for j in range(sig.n + 1, n_to + 1)]
    return Weight(sig.with_n(n_to), f.values + tuple(tail))


def conjugate_partition(parts: Sequence[int]) -> tuple[int, ...]:
    parts = [p for p in parts if p > 0]
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > k) for k in range(parts[0]))


def natural_bijection(f: Weight, window_n: int) -> Weight:
    """Classical weight with vacuum tail -> super weight on I(m|window_n):
    the positive part becomes the sorted complement of the positive values."""
    sig = f.sig
    if sig.is_super:
        raise DomainError("natural_bijection expects a classical weight")
    lam = [f[j] - 1 + j for j in range(1, sig.n + 1)]
    if any(x < 0 for x in lam) or any(lam[k] < lam[k + 1] for k in range(len(lam) - 1)):
        raise DomainError(f"{f} does not carry a partition tail")
    conj = conjugate_partition(lam)
    if len(conj) > window_n:
        raise WindowExceeded(f"{f} needs n >= {len(conj)}")
    pos = [j - (conj[j - 1] if j <= len(conj) else 0) for j in range(1, window_n + 1)]
    return Weight(Signature(sig.m_blocks, window_n, Kind.SUPER), f.neg + tuple(pos))


def natural_bijection_inverse(g: Weight, window_N: int) -> Weight:
    sig = g.sig
    if not sig.is_super:
        raise DomainError("natural_bijection_inverse expects a super weight")
    mu = [j - g[j] for j in range(1, sig.n + 1)]
    if any(x < 0 for x in mu):
        raise DomainError(f"{g} is not in the ++ region")
    conj = conjugate_partition(mu)
    if len(conj) > window_N:
        raise WindowExceeded(f"{g} needs N >= {len(conj)}")
    pos = [(conj[j - 1] if j <= len(conj) else 0) + 1 - j for j in range(1, window_N + 1)]
    return Weight(Signature(sig.m_blocks, window_N, Kind.CLASSICAL), g.neg + tuple(pos))


# L-operators and positive pairs


def matched_pairs(f: Weight) -> list[tuple[int, int]]:
    """All (i, j), i<0<j, with f(i) = f(j)."""
    sig = f.sig
    out = []
    for i in range(-sig.m, 0):
        for j in range(1, sig.n + 1):
            if f[i] == f[j]:
                out.append((i, j))
    return out


def default_pairing(f: Weight) -> list[tuple[int, int]]:
    """Pairs (i_1, j_1), ..., (i_k, j_k) with j_1 > ... > j_k, each j paired
    with the leftmost unused negative index carrying the same value."""
    sig = f.sig
    used: set[int] = set()
    out = []
    for j in range(sig.n, 0, -1):
        for i in range(-sig.m, 0):
            if i not in used and f[i] == f[j]:
                used.add(i)
                out.append((i, j))
                break
    return out


def _shift_pair(sig: Signature, vals: tuple[int, ...], i: int, j: int, a: int) -> tuple[int, ...]:
    new = list(vals)
    new[sig.pos(i)] -= a
    new[sig.pos(j)] -= a
    return tuple(new)


def _l_amount(sig: Signature, vals: tuple[int, ...], i: int, j: int, bound: int) -> int:
    return _l_amount_cached(sig, vals, i, j, bound)


@lru_cache(maxsize=100000)
def _l_amount_cached(sig: Signature, vals: tuple[int, ...], i: int, j: int, bound: int) -> int:
    if vals[sig.pos(i)] != vals[sig.pos(j)]:
        raise WeightError(f"L-operator needs f({i}) = f({j})")
    earlier = []
    for k in range(-sig.m, 0):
        for l in range(1, j):
            if vals[sig.pos(k)] == vals[sig.pos(l)] and k != i:
                earlier.append((k, l))
    lowered = [_shift_pair(sig, vals, k, l, _l_amount_cached(sig, vals, k, l, bound)) for k, l in earlier]
    for a in range(1, bound + 1):
        if _conjugate(sig, _shift_pair(sig, vals, i, j, a)) is None:
            continue
        if all(_conjugate(sig, _shift_pair(sig, h, i, j, a)) is not None for h in lowered):
            return a
    raise LOperatorUnresolved(f"no valid shift for L_{{{i},{j}}} within {bound}")


def _default_bound(vals: Sequence[int], sig: Signature) -> int:
    return max(vals) - min(vals) + sig.size + 2


def l_shift(f: Weight, i: int, j: int, bound: int | None = None) -> int:
    """The smallest valid a in L_{i,j}(f) = f - a(d_i - d_j)."""
    if not f.sig.is_super:
        raise DomainError("L-operators are defined for super weights")
    if not (i < 0 < j):
        raise WeightError("L-operator needs i < 0 < j")
    if bound is None:
        bound = _default_bound(f.values, f.sig)
    return _l_amount(f.sig, f.values, i, j, bound)


def l_operator(f: Weight, i: int, j: int, bound: int | None = None) -> Weight:
    a = l_shift(f, i, j, bound)
    return dominant_conjugate(f.sig, _shift_pair(f.sig, f.values, i, j, a))


def l_theta(f: Weight, theta: Sequence[int], pairing: Sequence[tuple[int, int]] | None = None,
            bound: int | None = None) -> Weight:
    """Composite L-operator; theta_t copies of L_{i_t, j_t}, applied in the
    order t = 1, 2, ... (largest j first)."""
    if not f.sig.is_super:
        raise DomainError("L-operators are defined for super weights")
    if pairing is None:
        pairing = default_pairing(f)
    if len(theta) != len(pairing):
        raise WeightError(f"theta has length {len(theta)}, expected {len(pairing)}")
    sig = f.sig
    vals = f.values
    if bound is None:
        bound = _default_bound(vals, sig)
    for (i, j), t in zip(pairing, theta):
        for _ in range(t):
            a = _l_amount(sig, vals, i, j, bound)
            vals = _shift_pair(sig, vals, i, j, a)
    return dominant_conjugate(sig, vals)


def _require_two_blocks(f: Weight) -> None:
    if f.sig.s != 2:
        raise UnsupportedSignature(f"positive pairs need two V-blocks, got {f.sig}")


def admissible_pairs(f: Weight) -> list[tuple[int, int]]:
    _require_two_blocks(f)
    sig = f.sig
    m2 = sig.m_blocks[1]
    out = []
    for i in range(-sig.m, -m2):
        for j in range(-m2, 0):
            if f[i] > f[j]:
                new = list(f.values)
                pi, pj = sig.pos(i), sig.pos(j)
                new[pi], new[pj] = new[pj], new[pi]
                if _conjugate(sig, new) is not None:
                    out.append((i, j))
    return out


def positive_pairs(f: Weight) -> list[tuple[int, int]]:
    """Positive pairs, collected by increasing distance f(i) - f(j) and kept
    only when disjoint from all pairs of smaller distance."""
    adm = admissible_pairs(f)
    chosen: list[tuple[int, int]] = []
    for d in sorted({f[i] - f[j] for i, j in adm}):
        used_i = {i for i, _ in chosen}
        used_j = {j for _, j in chosen}
        stratum = [(i, j) for i, j in adm if f[i] - f[j] == d and i not in used_i and j not in used_j]
        chosen.extend(stratum)
    return sorted(chosen)


def apply_sigma(f: Weight, sigma: Iterable[tuple[int, int]]) -> Weight:
    sig = f.sig
    new = list(f.values)
    for i, j in sigma:
        pi, pj = sig.pos(i), sig.pos(j)
        new[pi], new[pj] = new[pj], new[pi]
    return dominant_conjugate(sig, new)


def condition_r_witness(f: Weight) -> tuple[int, int, int] | None:
    """Return (i, j, k) violating Condition (R), or None when it holds."""
    sig = f.sig
    for i, j in matched_pairs(f):
        a = f[i]
        for k in sig.indices():
            if k in (i, j):
                continue
            if f[k] in (a - 1, a):
                return (i, j, k)
    return None


def subsets(items: Sequence) -> Iterator[tuple]:
    for r in range(len(items) + 1):
        yield from combinations(items, r)
