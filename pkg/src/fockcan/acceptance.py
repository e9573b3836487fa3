"""The acceptance suites, runnable from the command line or from pytest.

Each suite returns a SuiteResult; nothing here raises on a failed check.
A suite that runs out of window (WindowExceeded) is reported as skipped.
"""

from __future__ import annotations

import itertools
import random
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import fock
from .canon import (
    CanonWindow, bar_matrix, bkl_table, canonical, canonical_regular, canonical_via_procedure,
    inversion_table, stability_rank, superduality_check,
)
from .cato import gl21_block_report
from .fock import FockVector, apply_step, k_weight, normalize, truncate_vector
from .golden.formula_tables import (
    FAMILIES_11N, FAMILIES_M11, expected_vector, instances_11n, instances_m11,
)
from .golden.gl21 import encoded_json, expected_report
from .golden.raw_tensor import raw_tensor_action
from .laurent import ONE, Q, QINV, LaurentPoly, q_power, quantum_factorial
from .weights import (
    Kind, NoDominantConjugate, Signature, Weight, WindowExceeded, condition_r_witness,
    dominant_conjugate, extend_weight, parse_weight, truncate_weight,
)

PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"


@dataclass
class SuiteResult:
    number: str
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    skipped: str | None = None
    seconds: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        if self.skipped is not None:
            return SKIP
        return FAIL if self.failures else PASS

    def check(self, ok: bool, what: str) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(what)

    def line(self) -> str:
        head = f"[{self.status}] {self.number}. {self.name}: {self.checked} checks"
        if self.failures:
            head += f", {len(self.failures)} failed"
        head += f" ({self.seconds:.1f}s)"
        if self.skipped is not None:
            head += f" skipped: {self.skipped}"
        return head

    def details(self, limit: int = 3) -> list[str]:
        return self.notes + [f"  failed: {x}" for x in self.failures[:limit]]


def _run(number: str, name: str, body: Callable[[SuiteResult], None]) -> SuiteResult:
    res = SuiteResult(number, name)
    t0 = time.perf_counter()
    try:
        body(res)
    except WindowExceeded as exc:
        res.skipped = str(exc)
    res.seconds = time.perf_counter() - t0
    return res


def _vec(sig: Signature, terms: Iterable[tuple[str, int]]) -> FockVector:
    out = FockVector.zero(sig)
    for text, power in terms:
        out = out + FockVector.monomial(parse_weight(sig, text), q_power(power))
    return out


# heads of the windows checked by the bar and positivity suites: a fixed
# sample of the weights handled in suites 1-4


@dataclass
class _Windows:
    heads: list[Weight] = field(default_factory=list)

    def add(self, f: Weight) -> None:
        self.heads.append(f)


WINDOWS = _Windows()


def _golden(res: SuiteResult, families, instances, sample_every: int) -> None:
    counts = {}
    for family in families:
        bad = 0
        for k, (name, params, terms) in enumerate(instances(family)):
            f = terms[0][1]
            expected = expected_vector(terms)
            ok = canonical(f) == expected and canonical_via_procedure(f) == expected
            res.check(ok, f"{family} {params}: U_{f}")
            bad += not ok
            if k % sample_every == 0:
                WINDOWS.add(f)
            counts[family] = counts.get(family, 0) + 1
        if bad:
            res.notes.append(f"  {family}: {bad} of {counts[family]} instances differ")


def suite_1(res: SuiteResult) -> None:
    _golden(res, FAMILIES_11N, instances_11n, 1500)
    sig = Signature((1, 1), 2)
    pinned = [
        ("B5 a=3 b=0 x=1", "0|3|2,3", [("0|3|2,3", 0), ("0|1|1,2", 1)]),
        ("B1 a=2 c=5 x=0", "2|5|1,2", [("2|5|1,2", 0), ("0|5|0,1", 1)]),
        ("S a=2 x=0", "2|2|1,2", [("2|2|1,2", 0), ("2|0|0,1", 1), ("0|2|0,1", 2)]),
    ]
    for label, head, terms in pinned:
        f = parse_weight(sig, head)
        expected = _vec(sig, terms)
        res.check(canonical(f) == expected and canonical_via_procedure(f) == expected, label)


def suite_2(res: SuiteResult) -> None:
    _golden(res, FAMILIES_M11, instances_m11, 400)
    sig = Signature((2, 1), 1)
    pinned = [
        ("C6 calibration", "0,-1|2|2", [("0,-1|2|2", 0), ("0,-1|1|1", 1)]),
        ("C7 four terms", "5,3|2|2",
         [("5,3|2|2", 0), ("5,2|3|2", 1), ("5,3|1|1", 1), ("5,1|3|1", 2)]),
    ]
    for label, head, terms in pinned:
        f = parse_weight(sig, head)
        expected = _vec(sig, terms)
        res.check(canonical(f) == expected and canonical_via_procedure(f) == expected, label)


GL21_TIME_LIMIT = 10.0


def suite_3(res: SuiteResult) -> None:
    t0 = time.perf_counter()
    report = gl21_block_report(5)
    elapsed = time.perf_counter() - t0
    res.check(encoded_json(report) == encoded_json(expected_report(5)),
              "report differs from the encoded diagrams")
    res.check(elapsed < GL21_TIME_LIMIT, f"report took {elapsed:.1f}s")
    sig = Signature((1, 1), 1)
    WINDOWS.add(Weight(sig, (4, 0, 4)))


def regular_weights(count: int, seed: int = 4) -> list[Weight]:
    rng = random.Random(seed)
    sigs = [Signature((m1, m2), n) for m1 in (1, 2, 3) for m2 in (1, 2, 3) if m1 + m2 <= 4
            for n in (1, 2, 3)]
    out = []
    while len(out) < count:
        sig = rng.choice(sigs)
        try:
            f = dominant_conjugate(sig, [rng.randint(-5, 5) for _ in range(sig.size)])
        except NoDominantConjugate:
            continue
        if condition_r_witness(f) is None:
            out.append(f)
    return out


def suite_4(res: SuiteResult) -> None:
    for k, f in enumerate(regular_weights(200)):
        res.check(canonical_regular(f) == canonical(f), f"U_{f}")
        if k % 20 == 0:
            WINDOWS.add(f)


def _windows() -> list[CanonWindow]:
    heads = WINDOWS.heads or [Weight(Signature((1, 1), 1), (4, 0, 4))]
    seen = set()
    out = []
    for f in heads:
        if f not in seen:
            seen.add(f)
            out.append(CanonWindow.below(f))
    return out


def suite_5(res: SuiteResult) -> None:
    for win in _windows():
        R = bar_matrix(win)
        res.check(R.times(R.bar()).is_identity(), f"window below {win.f0}")


def suite_6(res: SuiteResult) -> None:
    for win in _windows():
        U, L = bkl_table(win)
        for (g, f), c in U.entries.items():
            if g == f:
                res.check(c == ONE, f"u diagonal at {f}")
            else:
                res.check(c.in_qZq() and all(x > 0 for x in c.terms.values()), f"u_{g},{f} = {c}")
        for (g, f), c in L.entries.items():
            if g == f:
                res.check(c == ONE, f"l diagonal at {f}")
            else:
                sub = c.substitute_neg_inverse()
                res.check(all(x > 0 and e > 0 for e, x in sub.terms.items()), f"l_{g},{f} = {c}")


def suite_7(res: SuiteResult) -> None:
    gl21 = Signature((1, 1), 1)
    heads = [Weight(gl21, (4, 0, 4))]
    rng = random.Random(11)
    sig = Signature((1, 1), 2)
    while len(heads) < 4:
        try:
            f = dominant_conjugate(sig, [rng.randint(-2, 3) for _ in range(sig.size)])
        except NoDominantConjugate:
            continue
        if f not in heads:
            heads.append(f)
    for f in heads:
        win = CanonWindow.below(f)
        res.check(inversion_table(win).is_identity(), f"window below {f}")
        res.notes.append(f"  window below {f}: {len(win.members)} weights")


def plusplus_weights(count: int, seed: int = 8) -> list[Weight]:
    """Weights of Z++ in (1,1|3), every other one with the identity tail."""
    sig = Signature((1, 1), 3)
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        neg = [rng.randint(-2, 4) for _ in range(2)]
        if len(out) % 2 == 0:
            pos = sorted(rng.sample(range(-2, 3), 2)) + [3]
        else:
            pos = sorted(rng.sample(range(-2, 4), 3))
        f = Weight.raw(sig, neg + pos)
        if f.is_dominant() and f.is_plusplus() and f not in out:
            out.append(f)
    return out


def suite_8(res: SuiteResult) -> None:
    for f in plusplus_weights(50):
        t = truncate_weight(f, 3, 2)
        got = truncate_vector(canonical(f), 2)
        if t is None:
            res.check(got.is_zero(), f"truncation of U_{f} should vanish")
        else:
            res.check(got == canonical(t), f"truncation of U_{f}")
    sig = Signature((1, 1), 1)
    for vals in itertools.product(range(-2, 4), repeat=3):
        f = Weight.raw(sig, vals)
        if not (f.is_dominant() and f.is_plusplus()):
            continue
        rank = stability_rank(f)
        counts = {n: len(canonical(extend_weight(f, n))) for n in (2, 3, 4) if n >= rank}
        res.check(len(set(counts.values())) <= 1, f"monomial counts of {f}: {counts}")


def _partitions(max_len: int, max_part: int, max_size: int) -> list[tuple[int, ...]]:
    out = [()]
    for length in range(1, max_len + 1):
        for p in itertools.combinations_with_replacement(range(max_part, 0, -1), length):
            if sum(p) <= max_size:
                out.append(p)
    return out


def duality_weights(blocks: tuple[int, ...], N: int = 6) -> list[Weight]:
    """Classical weights whose first values lie in [-1, 2] and whose tail is
    the vacuum tail shifted by a partition of size at most 3."""
    sig = Signature(blocks, N, Kind.CLASSICAL)
    out = []
    for vals in itertools.product(range(-1, 3), repeat=sum(blocks)):
        for lam in _partitions(3, 3, 3):
            lam = list(lam) + [0] * (N - len(lam))
            tail = tuple(x + 1 - j for j, x in enumerate(lam, 1))
            f = Weight.raw(sig, vals + tail)
            if f.is_dominant():
                out.append(f)
    return out


def suite_9(res: SuiteResult) -> None:
    for blocks in ((1, 1), (2, 1)):
        for f in duality_weights(blocks):
            res.check(superduality_check(f, 3), f"{f}")


def random_vectors(sig: Signature, count: int, seed: int = 10) -> list[FockVector]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        v = FockVector.zero(sig)
        for _ in range(rng.randint(1, 4)):
            try:
                f = dominant_conjugate(sig, [rng.randint(-2, 2) for _ in range(sig.size)])
            except NoDominantConjugate:
                continue
            c = LaurentPoly({rng.randint(-2, 2): rng.choice([-2, -1, 1, 2, 3])})
            v = v + FockVector.monomial(f, c)
        if not v.is_zero():
            out.append(v)
    return out


def _bracket(v: FockVector, a: int) -> FockVector:
    out = FockVector.zero(v.sig)
    for f, c in v.items():
        k = k_weight(f, a)
        out = out + FockVector.monomial(f, c * (q_power(k) - q_power(-k)).divide_exact(Q - QINV))
    return out


def suite_10(res: SuiteResult) -> None:
    sig = Signature((2, 1), 2)
    indices = range(-2, 3)
    for v in random_vectors(sig, 100):
        for a in indices:
            for b in indices:
                lhs = (apply_step("E", a, 1, apply_step("F", b, 1, v))
                       - apply_step("F", b, 1, apply_step("E", a, 1, v)))
                rhs = _bracket(v, a) if a == b else FockVector.zero(sig)
                res.check(lhs == rhs, f"[E{a}, F{b}] on {v}")
            for kind in "EF":
                def x(c, r, u):
                    return apply_step(kind, c, r, u)
                for b in (a - 1, a + 1):
                    serre = x(a, 2, x(b, 1, v)) - x(a, 1, x(b, 1, x(a, 1, v))) + x(b, 1, x(a, 2, v))
                    res.check(serre.is_zero(), f"Serre {kind}{a},{kind}{b} on {v}")
                res.check(x(a, 1, x(a + 3, 1, v)) == x(a + 3, 1, x(a, 1, v)), f"far {kind}{a}")
                plain = v
                for r in (1, 2, 3):
                    plain = x(a, 1, plain)
                    res.check(plain == x(a, r, v).scale(quantum_factorial(r)),
                              f"{kind}{a}^{r} = [{r}]! {kind}{a}^({r}) on {v}")


CALIBRATION_SIGS = ("2|0", "1|2", "2,1|2", "1,2|1", "2+2", "1,1+3")


def calibration(res: SuiteResult) -> None:
    """The generators must commute with straightening, slot by slot on
    unstraightened wedge words."""
    for text in CALIBRATION_SIGS:
        sig = Signature.parse(text)
        for flat in itertools.product(range(-1, 3), repeat=sig.size):
            words = []
            for a, b in sig.block_ranges():
                words.append(list(flat[a:b]))
            before = normalize(sig, words)
            for kind in "EF":
                for a in (-1, 0, 1):
                    lhs = apply_step(kind, a, 1, before)
                    rhs = FockVector.zero(sig)
                    for new, exp in raw_tensor_action(sig, words, kind, a):
                        rhs = rhs + normalize(sig, new).scale(q_power(exp))
                    res.check(lhs == rhs, f"{kind}{a} on {words} in {sig}")


@contextmanager
def perturbed_straightening(constant: LaurentPoly):
    """Temporarily replace the straightening constant (negative controls)."""
    saved = fock.STRAIGHTEN
    fock.STRAIGHTEN = constant
    try:
        yield
    finally:
        fock.STRAIGHTEN = saved


SUITES: dict[str, tuple[str, Callable[[SuiteResult], None]]] = {
    "0": ("straightening calibration", calibration),
    "1": ("closed formulas in E^{1,1|n}", suite_1),
    "2": ("closed formulas in E^{m,1|1}", suite_2),
    "3": ("gl(2|1) block report", suite_3),
    "4": ("regular closed formula", suite_4),
    "5": ("bar involutivity", suite_5),
    "6": ("triangularity and positivity", suite_6),
    "7": ("inversion duality", suite_7),
    "8": ("truncation and stability", suite_8),
    "9": ("super duality", suite_9),
    "10": ("operator identities", suite_10),
}


def run_suite(number: str) -> SuiteResult:
    name, body = SUITES[number]
    return _run(number, name, body)


def run_all(numbers: Iterable[str] | None = None) -> list[SuiteResult]:
    WINDOWS.heads.clear()
    chosen = list(numbers) if numbers is not None else list(SUITES)
    return [run_suite(k) for k in chosen]
