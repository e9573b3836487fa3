"""Bar involution, canonical and dual canonical bases, the explicit
procedures for the (1,1|n) and (m,1|1) cases, and polynomial tables.

The generic engine works inside a finite value box [lo, hi]: the span of
monomials whose values all lie in the box is a module for the generators
E_a, F_a with lo <= a < hi, and the in-box coefficients of the bar
involution agree with the ones of the full Fock space.  Bar-invariant
vectors are produced factor by factor: the first factor starts at the
highest weight wedge of the box (values lo, lo+1, ...), which the bar map
leaves alone, and is raised to its target by single F-steps; the remaining
factors are built recursively.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable

from .fock import FockVector, OperatorWord, Step, act_terms, apply_word, layout_of
from .laurent import ONE, ZERO, LaurentPoly, q_power
from .weights import (
    DomainError, NoDominantConjugate, Signature, UnsupportedSignature, Weight, WeightError,
    WeightWindow, WindowExceeded, bruhat_leq, condition_r_witness, default_pairing, downset,
    dominant_conjugate, eps_weight, is_minimal, max_window_size, natural_bijection,
    natural_bijection_inverse, neg_w0, positive_pairs, subsets,
)

Terms = dict[tuple[int, ...], LaurentPoly]


class CanonError(WeightError):
    pass


class ObstructionFound(CanonError):
    pass


class ConditionRViolated(CanonError):
    def __init__(self, f: Weight, witness: tuple[int, int, int]):
        i, j, k = witness
        super().__init__(f"{f} violates Condition (R): f({i}) = f({j}) = {f[i]} but f({k}) = {f[k]}")
        self.witness = witness


class WordSynthesisFailed(CanonError):
    pass


def _sub_scaled(target: Terms, vec: Terms, s: LaurentPoly) -> None:
    for g, c in vec.items():
        new = target.get(g, ZERO) - s * c
        if new:
            target[g] = new
        else:
            target.pop(g, None)


def _positive_correction(p: LaurentPoly) -> LaurentPoly:
    """Bar-symmetric s with p - s in qZ[q]."""
    neg = p.negative_part()
    return neg + LaurentPoly.const(p.coeff(0)) + neg.bar()


def _negative_correction(p: LaurentPoly) -> LaurentPoly:
    """Bar-symmetric s with p - s in q^-1 Z[q^-1]."""
    pos = p.positive_part()
    return pos + LaurentPoly.const(p.coeff(0)) + pos.bar()


class CanonEngine:
    """Canonical-basis computations for one signature in the box of values
    >= lo.  All results are exact on that box and memoized."""

    def __init__(self, sig: Signature, lo: int, max_weights: int | None = None):
        self.sig = sig
        self.lo = lo
        self.max_weights = max_weights if max_weights is not None else max_window_size()
        ranges, incs = layout_of(sig)
        self._ranges = ranges
        self._incs = incs
        # layouts of the suffix tensor products, factor t onwards
        self._suffix_layouts = []
        for t in range(len(ranges)):
            base = ranges[t][0]
            self._suffix_layouts.append(
                (tuple((a - base, b - base) for a, b in ranges[t:]), incs[t:]))
        self._inv: dict[tuple[int, tuple[int, ...]], Terms] = {}
        self._canon: dict[tuple[int, ...], Terms] = {}
        self._dual: dict[tuple[int, ...], Terms] = {}
        self._bar: dict[tuple[int, ...], Terms] = {}
        self.words: dict[tuple[int, ...], list[OperatorWord]] = {}

    # bookkeeping

    def key(self, values: tuple[int, ...]) -> tuple:
        """Order in which invariant vectors are unitriangular: per-factor
        value sums, first factor most significant."""
        return tuple(sum(values[a:b]) for a, b in self._ranges) + (values,)

    def memo_size(self) -> int:
        return len(self._inv) + len(self._canon) + len(self._dual) + len(self._bar)

    def _touch(self, store: dict) -> None:
        if len(store) > self.max_weights:
            raise WindowExceeded(f"engine visited more than {self.max_weights} weights")

    def _check_in_box(self, values: tuple[int, ...]) -> None:
        if min(values, default=self.lo) < self.lo:
            raise WordSynthesisFailed(
                f"{Weight(self.sig, values)} has values below the box floor {self.lo}")

    # bar-invariant vectors

    def _suffix_invariant(self, t: int, values: tuple[int, ...]) -> Terms:
        memo_key = (t, values)
        hit = self._inv.get(memo_key)
        if hit is not None:
            return hit
        ranges, incs = self._suffix_layouts[t]
        if len(ranges) == 1:
            out = {values: ONE}
            self._inv[memo_key] = out
            return out
        size = ranges[0][1]
        block, rest = values[:size], values[size:]
        base = self._suffix_invariant(t + 1, rest)
        start = tuple(range(self.lo + size - 1, self.lo - 1, -1))
        vec: Terms = {start + g: c for g, c in base.items()}
        layout = (ranges, incs)
        steps = []
        for pos in range(size):
            for x in range(start[pos], block[pos]):
                vec = act_terms(layout, vec, "F", x, 1)
                steps.append(Step("F", x, 1))
        if vec.get(values) != ONE:
            raise WordSynthesisFailed(f"path to {values} lost its leading term")
        self._inv[memo_key] = vec
        self._touch(self._inv)
        if t == 0:
            self.words[values] = [OperatorWord(tuple(steps))]
        return vec

    def invariant(self, values: tuple[int, ...]) -> Terms:
        self._check_in_box(values)
        return self._suffix_invariant(0, values)

    # canonical and dual canonical bases

    def _corrected(self, values: tuple[int, ...], store: dict, correction, accept, recurse) -> Terms:
        hit = store.get(values)
        if hit is not None:
            return hit
        vec = dict(self.invariant(values))
        while True:
            bad = [g for g, c in vec.items() if g != values and not accept(c)]
            if not bad:
                break
            g = max(bad, key=self.key)
            s = correction(vec[g])
            _sub_scaled(vec, recurse(g), s)
        if vec.get(values) != ONE:
            raise ObstructionFound(f"leading coefficient of {values} changed during correction")
        store[values] = vec
        self._touch(store)
        return vec

    def canonical(self, values: tuple[int, ...]) -> Terms:
        return self._corrected(values, self._canon, _positive_correction,
                               LaurentPoly.in_qZq, self.canonical)

    def dual(self, values: tuple[int, ...]) -> Terms:
        return self._corrected(values, self._dual, _negative_correction,
                               LaurentPoly.in_qinvZqinv, self.dual)

    def bar_of_monomial(self, values: tuple[int, ...]) -> Terms:
        """psi(K_f) expanded in monomials."""
        hit = self._bar.get(values)
        if hit is not None:
            return hit
        inv = self.invariant(values)
        out = dict(inv)
        for g, c in sorted(inv.items(), key=lambda kv: self.key(kv[0]), reverse=True):
            if g == values:
                continue
            _sub_scaled(out, self.bar_of_monomial(g), c.bar())
        self._bar[values] = out
        self._touch(self._bar)
        return out

    def bar_vector(self, v: FockVector) -> FockVector:
        out: Terms = {}
        for f, c in v.items():
            _sub_scaled(out, self.bar_of_monomial(f.values), -c.bar())
        return FockVector._from_raw(self.sig, out)


def _ensure_recursion() -> None:
    if sys.getrecursionlimit() < 20000:
        sys.setrecursionlimit(20000)


_ensure_recursion()


# box selection


@dataclass(frozen=True)
class CanonWindow:
    """A block-restricted window: all dominant g below f0 whose values lie
    in [lo, hi]."""

    f0: Weight
    lo: int
    hi: int
    members: tuple[Weight, ...] = field(default=(), compare=False)

    @classmethod
    def below(cls, f0: Weight, depth: int | None = None, lo: int | None = None) -> "CanonWindow":
        if lo is None:
            if depth is None:
                depth = default_depth(f0.sig)
            lo = min(f0.values) - depth
        hi = max(f0.values)
        ranges = f0.sig.block_ranges()
        members = tuple(sorted(
            downset(f0, WeightWindow(lo, hi)),
            key=lambda g: tuple(sum(g.values[a:b]) for a, b in ranges) + (g.values,),
            reverse=True))
        return cls(f0, lo, hi, members)

    @property
    def sig(self) -> Signature:
        return self.f0.sig

    @property
    def block(self):
        return eps_weight(self.f0)

    def __contains__(self, g: Weight) -> bool:
        return g in set(self.members)

    def index(self) -> dict[Weight, int]:
        return {g: k for k, g in enumerate(self.members)}


def default_depth(sig: Signature) -> int:
    return sig.size + 2


_ENGINES: dict[tuple[Signature, int], CanonEngine] = {}


def engine_for(sig: Signature, lo: int) -> CanonEngine:
    key = (sig, lo)
    eng = _ENGINES.get(key)
    if eng is not None and eng.memo_size() > eng.max_weights:
        # memos accumulated over many unrelated calls; start over so that the
        # size limit applies to a single computation
        eng = None
    if eng is None:
        if len(_ENGINES) > 64:
            _ENGINES.clear()
        eng = CanonEngine(sig, lo)
        _ENGINES[key] = eng
    return eng


def _to_vector(sig: Signature, terms: Terms) -> FockVector:
    return FockVector._from_raw(sig, dict(terms))


def _stable(f: Weight, compute, depth: int | None, max_depth: int) -> FockVector:
    """Run compute(engine) on boxes of growing depth until the support sits
    clear of the box floor (a gap wider than the signature size)."""
    sig = f.sig
    gap = sig.size
    d = depth if depth is not None else default_depth(sig)
    while True:
        lo = min(f.values) - d
        terms = compute(engine_for(sig, lo))
        low = min((min(g) for g in terms), default=lo + d)
        if low - lo > gap or depth is not None:
            return _to_vector(sig, terms)
        d += gap + 1
        if d > max_depth:
            raise WindowExceeded(f"support below {f} did not settle within depth {max_depth}")


def invariant_vector(f: Weight, window: CanonWindow | None = None) -> FockVector:
    if is_minimal(f):
        return FockVector.monomial(f)
    lo = window.lo if window is not None else min(f.values) - default_depth(f.sig)
    return _to_vector(f.sig, engine_for(f.sig, lo).invariant(f.values))


def canonical(f: Weight, window: CanonWindow | None = None, max_depth: int = 40) -> FockVector:
    """U_f.  Without a window the box is deepened until the result is stable;
    with a window the result is exact on it (terms below its floor dropped)."""
    if not f.is_dominant():
        raise WeightError(f"{f} is not dominant")
    if window is not None:
        return _to_vector(f.sig, engine_for(f.sig, window.lo).canonical(f.values))
    return _stable(f, lambda eng: eng.canonical(f.values), None, max_depth)


def dual_canonical(f: Weight, window: CanonWindow | None = None) -> FockVector:
    """L_f restricted to the window box (dual canonical elements may have
    infinitely many terms; the box result is exact on the box)."""
    if not f.is_dominant():
        raise WeightError(f"{f} is not dominant")
    lo = window.lo if window is not None else min(f.values) - default_depth(f.sig)
    return _to_vector(f.sig, engine_for(f.sig, lo).dual(f.values))


# polynomial tables


@dataclass
class TriangularTable:
    """Entries (g, f) -> polynomial over an ordered list of weights.  Column
    f holds the coefficients of one vector (bar(K_f), U_f or L_f)."""

    kind: str  # "bar", "U" or "L"
    weights: tuple[Weight, ...]
    entries: dict[tuple[Weight, Weight], LaurentPoly]

    def entry(self, g: Weight, f: Weight) -> LaurentPoly:
        return self.entries.get((g, f), ZERO)

    def column(self, f: Weight) -> dict[Weight, LaurentPoly]:
        return {g: c for (g, h), c in self.entries.items() if h == f}

    def at_one(self) -> dict[tuple[Weight, Weight], int]:
        return {k: c.at_one() for k, c in self.entries.items() if c.at_one()}

    def times(self, other: "TriangularTable", kind: str = "product") -> "TriangularTable":
        # accumulate exponent -> coefficient dicts and build polynomials once
        acc: dict[tuple[Weight, Weight], dict[int, int]] = {}
        by_row: dict[Weight, list[tuple[Weight, list[tuple[int, int]]]]] = {}
        for (g, f), c in other.entries.items():
            by_row.setdefault(g, []).append((f, list(c.terms.items())))
        for (g, h), c in self.entries.items():
            left = list(c.terms.items())
            for f, right in by_row.get(h, ()):
                slot = acc.setdefault((g, f), {})
                for e1, c1 in left:
                    for e2, c2 in right:
                        slot[e1 + e2] = slot.get(e1 + e2, 0) + c1 * c2
        out = {k: LaurentPoly(v) for k, v in acc.items()}
        return TriangularTable(kind, self.weights, {k: v for k, v in out.items() if v})

    def bar(self) -> "TriangularTable":
        return TriangularTable(self.kind, self.weights, {k: v.bar() for k, v in self.entries.items()})

    def is_identity(self) -> bool:
        return all((c == ONE) if g == f else False for (g, f), c in self.entries.items()) and all(
            self.entries.get((f, f)) == ONE for f in self.weights)

    def to_json(self) -> dict:
        index = {f: k for k, f in enumerate(self.weights)}
        rows = sorted(((index[g], index[f], c) for (g, f), c in self.entries.items()),
                      key=lambda t: (t[1], t[0]))
        return {
            "kind": self.kind,
            "sig": self.weights[0].sig.to_json() if self.weights else None,
            "weights": [f.to_json() for f in self.weights],
            "entries": [[gi, fi, c.to_json()] for gi, fi, c in rows],
        }


def _table(kind: str, window: CanonWindow, column) -> TriangularTable:
    members = set(window.members)
    entries = {}
    for f in window.members:
        for g, c in column(f.values).items():
            wg = Weight(window.sig, g)
            if wg not in members:
                raise WindowExceeded(f"{wg} appears in column {f} but is outside the window")
            entries[(wg, f)] = c
    return TriangularTable(kind, window.members, entries)


def bar_matrix(window: CanonWindow) -> TriangularTable:
    """R with R(g, f) the coefficient of K_g in bar(K_f)."""
    eng = engine_for(window.sig, window.lo)
    return _table("bar", window, eng.bar_of_monomial)


def bkl_table(window: CanonWindow) -> tuple[TriangularTable, TriangularTable]:
    """The u- and l-tables of the window (columns U_f and L_f)."""
    eng = engine_for(window.sig, window.lo)
    return _table("U", window, eng.canonical), _table("L", window, eng.dual)


def _solve_from_bar(f: Weight, window: CanonWindow, keep_positive: bool) -> FockVector:
    eng = engine_for(window.sig, window.lo)
    R = bar_matrix(window)
    below = [g for g in window.members if g != f and bruhat_leq(g, f)]
    below.sort(key=lambda g: eng.key(g.values), reverse=True)
    coeffs: dict[Weight, LaurentPoly] = {f: ONE}
    for g in below:
        # c_g - bar(c_g) = sum over h above g of R(g, h) bar(c_h)
        r = ZERO
        for h, c in coeffs.items():
            r = r + R.entry(g, h) * c.bar()
        if r.coeff(0) or r + r.bar():
            raise ObstructionFound(f"bar relation at {g} is not antisymmetric: {r}")
        c = r.positive_part() if keep_positive else r.negative_part()
        if c:
            coeffs[g] = c
    return FockVector(window.sig, coeffs)


def canonical_via_kl(f: Weight, window: CanonWindow) -> FockVector:
    """U_f solved from the bar matrix alone, processing the window downward."""
    return _solve_from_bar(f, window, True)


def dual_via_kl(f: Weight, window: CanonWindow) -> FockVector:
    return _solve_from_bar(f, window, False)


# the closed formula in the regular case


def _regular_terms(f: Weight) -> Iterable[tuple[int, tuple[int, ...]]]:
    sig = f.sig
    pairs = default_pairing(f)
    sigma_plus = positive_pairs(f)
    for theta in product((0, 1), repeat=len(pairs)):
        vals = list(f.values)
        for (i, j), t in zip(pairs, theta):
            # under Condition (R) every L-shift is by one
            vals[sig.pos(i)] -= t
            vals[sig.pos(j)] -= t
        for sigma in subsets(sigma_plus):
            new = list(vals)
            for i, j in sigma:
                pi, pj = sig.pos(i), sig.pos(j)
                new[pi], new[pj] = new[pj], new[pi]
            yield sum(theta) + len(sigma), tuple(new)


def canonical_regular(f: Weight) -> FockVector:
    """U_f from the closed product formula for two V-blocks under
    Condition (R)."""
    if f.sig.s != 2 or not f.sig.is_super:
        raise UnsupportedSignature(f"the closed formula needs two V-blocks and a W-block, got {f.sig}")
    if not f.is_dominant():
        raise WeightError(f"{f} is not dominant")
    witness = condition_r_witness(f)
    if witness is not None:
        raise ConditionRViolated(f, witness)
    out: Terms = {}
    for power, vals in _regular_terms(f):
        try:
            g = dominant_conjugate(f.sig, vals)
        except NoDominantConjugate:
            raise ObstructionFound(f"closed formula produced a repeated value from {f}") from None
        if g.values in out:
            raise ObstructionFound(f"closed formula produced {g} twice")
        out[g.values] = q_power(power)
    return _to_vector(f.sig, out)


# the reduction procedures


class AlreadyBase:
    """Returned by the procedures for weights with no matched pair."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ALREADY_BASE"


ALREADY_BASE = AlreadyBase()


@dataclass(frozen=True)
class Reduction:
    """U_f = X U_h with X a single divided power."""

    step: Step
    h: Weight


def _lowered(f: Weight, *changes: tuple[int, int]) -> Weight:
    vals = list(f.values)
    for i, delta in changes:
        vals[f.sig.pos(i)] += delta
    return Weight(f.sig, tuple(vals))


def procedure_11n(f: Weight) -> Reduction | AlreadyBase:
    sig = f.sig
    if not (sig.is_super and sig.m_blocks == (1, 1)):
        raise UnsupportedSignature(f"procedure needs signature (1,1|n), got {sig}")
    pos = [f[j] for j in range(1, sig.n + 1)]
    a2, a1 = f[-2], f[-1]
    has13 = a2 in pos
    has23 = a1 in pos
    if not (has13 or has23):
        return ALREADY_BASE
    if has13:
        if a2 == a1:
            return Reduction(Step("F", a2 - 1, 2), _lowered(f, (-2, -1), (-1, -1)))
        return Reduction(Step("F", a2 - 1), _lowered(f, (-2, -1)))
    if a2 != a1 - 1:
        return Reduction(Step("F", a1 - 1), _lowered(f, (-1, -1)))
    if (a2 - 1) not in pos:
        return Reduction(Step("F", a2 - 1), _lowered(f, (-2, -1)))
    # f(-2) = f(-1) - 1 is not a positive value, f(-1) - 2 is; lower the
    # positive value matching f(-1) and raise it back with E
    j = pos.index(a1) + 1
    return Reduction(Step("E", a1 - 1), _lowered(f, (j, -1)))


def procedure_m11(f: Weight) -> Reduction | AlreadyBase:
    sig = f.sig
    if not (sig.is_super and sig.s == 2 and sig.m_blocks[1] == 1 and sig.n == 1):
        raise UnsupportedSignature(f"procedure needs signature (m,1|1), got {sig}")
    b = f[1]
    first = range(-sig.m, -1)
    i = next((k for k in first if f[k] == b), None)
    if i is None:
        if f[-1] != b:
            return ALREADY_BASE
        i = next((k for k in first if f[k] == f[-1] - 1), None)
        if i is None:
            return Reduction(Step("F", f[-1] - 1), _lowered(f, (-1, -1)))
    # walk down the run of consecutive values inside the first block
    while i + 1 < -1 and f[i + 1] == f[i] - 1:
        i += 1
    if f[i] == f[-1]:
        return Reduction(Step("F", f[i] - 1, 2), _lowered(f, (i, -1), (-1, -1)))
    return Reduction(Step("F", f[i] - 1), _lowered(f, (i, -1)))


def procedure(f: Weight) -> Reduction | AlreadyBase:
    sig = f.sig
    if sig.is_super and sig.m_blocks == (1, 1):
        return procedure_11n(f)
    if sig.is_super and sig.s == 2 and sig.m_blocks[1] == 1 and sig.n == 1:
        return procedure_m11(f)
    raise UnsupportedSignature(f"no reduction procedure for {sig}")


def procedure_word(f: Weight) -> tuple[OperatorWord, Weight]:
    """Iterate the procedure down to a weight without matched pairs.  The
    word, applied to U of that weight, gives U_f."""
    steps: list[Step] = []
    g = f
    while True:
        red = procedure(g)
        if red is ALREADY_BASE:
            break
        if not red.h.is_dominant():
            raise ObstructionFound(f"procedure step from {g} left the dominant region: {red.h}")
        steps.append(red.step)
        g = red.h
    return OperatorWord(tuple(reversed(steps))), g


def canonical_via_procedure(f: Weight) -> FockVector:
    word, base = procedure_word(f)
    return apply_word(word, canonical_regular(base))


# comparisons across signatures


def stability_rank(f: Weight) -> int:
    """The smallest n from which extending f by the vacuum tail no longer
    changes its atypicality."""
    sig = f.sig
    top = max((v for v in f.neg if v > sig.n), default=sig.n)
    return max(top, sig.n)


def superduality_check(f: Weight, n: int, super_block=None) -> bool:
    """Compare the classical column U_f on I(m+N) with the super column of
    its natural image on I(m|n), entry by entry through the bijection.

    Classical terms whose tail is not a partition are killed by truncation
    and are not compared; every super term must come from a classical one.
    super_block, if given, is the block the caller expects f's image in; a
    mismatch returns False without computing anything."""
    if f.sig.is_super:
        raise WeightError("superduality_check expects a classical weight")
    N = f.sig.n
    fn = natural_bijection(f, n)
    if super_block is not None and eps_weight(fn) != super_block:
        return False
    classical = canonical(f)
    image: dict[Weight, LaurentPoly] = {}
    for g, c in classical.items():
        try:
            gn = natural_bijection(g, n)
        except (DomainError, WindowExceeded):
            continue
        image[gn] = c
    sup = canonical(fn)
    for h, c in sup.items():
        try:
            natural_bijection_inverse(h, N)
        except (DomainError, WindowExceeded):
            return False
        if image.get(h) != c:
            return False
    return len(image) == len(sup)


def inversion_table(window: CanonWindow) -> TriangularTable:
    """The product of the l-table with A(g, f) = u_{neg f, neg g}(q^-1).

    K_f = sum_g A(g, f) L_g, so the product is the identity on any
    downward closed window.  Negation reverses the order, which keeps the
    sum over g between x and f finite."""
    _, L = bkl_table(window)
    A: dict[tuple[Weight, Weight], LaurentPoly] = {}
    for g in window.members:
        col = canonical(neg_w0(g))
        for f in window.members:
            c = col.coeff(neg_w0(f))
            if c:
                A[(g, f)] = c.bar()
    return L.times(TriangularTable("A", window.members, A), "inversion")
