"""Closed formulas for canonical basis elements in E^{1,1|n} and E^{m,1|1},
instantiated over small parameter ranges.

Each family lists its terms by the explicitly named values; the remaining
("filler") values of the W-block, resp. the first V-block, are shared by all
terms and may be any values in the family's filler zones.  A zone is an open
interval of values; named and listed values are never filler.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Iterator

from fockcan.fock import FockVector
from fockcan.laurent import q_power
from fockcan.weights import Signature, Weight

LO, HI = -6, 6
INF = 10 ** 6


def R(lo, hi, drop=()):
    return frozenset(v for v in range(lo, hi + 1) if v not in drop)


def _fillers(zones, forbidden, count):
    pool = sorted(v for v in range(LO, HI + 1) if v not in forbidden
                  and any(lo < v < hi for lo, hi in zones))
    return combinations(pool, count)


def _values_ok(*sets):
    return all(LO <= v <= HI for s in sets for v in s)


# E^{1,1|n}: a term is (power, f(-2), f(-1), listed W-values)

Term11n = tuple[int, int, int, frozenset]


def _family_11n(name: str, params: Iterator[dict], build: Callable[..., tuple[list[Term11n], list]],
                max_n: int = 4):
    for p in params:
        terms, zones = build(**p)
        named = set(p.values())
        listed = set().union(*(t[3] for t in terms))
        if not _values_ok(named, listed):
            continue
        base = len(terms[0][3])
        for extra in range(0, max_n - base + 1):
            for fill in _fillers(zones, named | listed, extra):
                n = base + extra
                if n == 0:
                    continue
                sig = Signature((1, 1), n)
                out = []
                for power, v2, v1, wvals in terms:
                    pos = tuple(sorted(set(wvals) | set(fill)))
                    out.append((power, Weight(sig, (v2, v1) + pos)))
                yield name, dict(p, filler=fill), out


def _ordered(*names, lo=LO, hi=HI):
    """All strictly increasing assignments of the given names."""
    for vals in combinations(range(lo, hi + 1), len(names)):
        yield dict(zip(names, vals))


def _outer(lo_v, hi_v):
    return [(-INF, lo_v), (hi_v, INF)]


def a1(x, b, a):
    run = R(x + 1, a)
    return [(0, a, b, run), (1, b, a, run), (1, a, x, R(x, a, {b})), (2, b, x, R(x, a - 1)),
            (2, x, a, R(x, a, {b})), (3, x, b, R(x, a - 1))], _outer(x, a)


def a2(y, b, x, a):
    up, lo_run = R(x + 1, a), R(y + 1, b)
    up_d, lo_d = R(x, a - 1), R(y, b - 1)
    return [(0, a, b, lo_run | up), (1, x, b, lo_run | up_d), (1, a, y, lo_d | up),
            (1, b, a, lo_run | up), (2, b, x, lo_run | up_d), (2, y, a, lo_d | up),
            (2, x, y, lo_d | up_d), (3, y, x, lo_d | up_d)], _outer(y, a) + [(b, x)]


def a3(y, x, b, a):
    return [(0, b, a, R(y + 1, a, {x})), (1, x, a, R(y + 1, a, {b})), (1, b, x, R(y + 1, a - 1)),
            (1, y, b, R(y, a - 1, {x})), (2, x, b, R(y + 1, a - 1)),
            (2, y, x, R(y, a - 1, {b}))], _outer(y, a)


def a4(y, b, x, a):
    up, lo_run = R(x + 1, a), R(y + 1, b)
    return [(0, b, a, lo_run | up), (1, y, a, R(y, b - 1) | up), (1, b, x, lo_run | R(x, a - 1)),
            (2, y, x, R(y, b - 1) | R(x, a - 1))], _outer(y, a) + [(b, x)]


def b1(x, a, c):
    return [(0, a, c, R(x + 1, a)), (1, x, c, R(x, a - 1))], _outer(x, a)


def b2(b, x, a):
    run, low = R(x + 1, a), R(x, a - 1)
    return [(0, a, b, run), (1, b, a, run), (1, x, b, low), (2, b, x, low)], _outer(x, a)


def b3(x, a):
    run = R(x + 1, a)
    return [(0, a, x, run), (1, x, a, run), (2, x, x, R(x, a - 1))], _outer(x, a)


def b4(x, a, c):
    run, low = R(x + 1, a), R(x, a - 1)
    return [(0, c, a, run), (1, a, c, run), (1, c, x, low), (2, x, c, low)], _outer(x, a)


def b5(b, x, a):
    return [(0, b, a, R(x + 1, a)), (1, b, x, R(x, a - 1))], _outer(x, a)


def b6(y, x, a):
    return [(0, x, a, R(y + 1, a, {x})), (1, x, x, R(y + 1, a - 1)),
            (1, y, x, R(y, a - 1, {x}))], _outer(y, a)


def s_family(x, a):
    return [(0, a, a, R(x + 1, a)), (1, a, x, R(x, a - 1)), (2, x, a, R(x, a - 1))], _outer(x, a)


FAMILIES_11N = {
    "A1": (a1, ("x", "b", "a")),
    "A2": (a2, ("y", "b", "x", "a")),
    "A3": (a3, ("y", "x", "b", "a")),
    "A4": (a4, ("y", "b", "x", "a")),
    "B1": (b1, ("x", "a", "c")),
    "B2": (b2, ("b", "x", "a")),
    "B3": (b3, ("x", "a")),
    "B4": (b4, ("x", "a", "c")),
    "B5": (b5, ("b", "x", "a")),
    "B6": (b6, ("y", "x", "a")),
    "S": (s_family, ("x", "a")),
}


def instances_11n(name: str, max_n: int = 4):
    build, names = FAMILIES_11N[name]
    return _family_11n(name, _ordered(*names), build, max_n)


# E^{m,1|1}: a term is (power, listed first-block values, f(-1), f(1))


def _family_m11(name: str, params: Iterator[dict], build, ms=(2, 3)):
    for p in params:
        built = build(**p)
        if built is None:
            continue
        terms, zones = built
        named = set(p.values())
        listed = set().union(*(t[1] for t in terms))
        if not _values_ok(named, listed, {t[2] for t in terms}, {t[3] for t in terms}):
            continue
        base = len(terms[0][1])
        for m in ms:
            if m < base:
                continue
            for fill in _fillers(zones, named | listed, m - base):
                sig = Signature((m, 1), 1)
                out = []
                for power, vals, v1, w in terms:
                    first = tuple(sorted(set(vals) | set(fill), reverse=True))
                    out.append((power, Weight(sig, first + (v1, w))))
                yield name, dict(p, filler=fill), out


def _assign(names, cond):
    from itertools import product
    for vals in product(range(LO, HI + 1), repeat=len(names)):
        p = dict(zip(names, vals))
        if cond(**p):
            yield p


def c1(a, b, x):
    return [(0, R(x + 1, a), b, a), (1, R(x, a - 1), b, x)], _outer(x, a)


def c2(a, x):
    return [(0, R(x + 1, a), x, a), (1, R(x + 2, a) | {x}, x + 1, a), (1, R(x, a - 1), x + 1, x + 1),
            (2, R(x, a - 1), x, x)], _outer(x, a)


def c3(a):
    return [(0, {a}, a - 1, a), (1, {a - 1}, a, a), (2, {a - 1}, a - 1, a - 1)], _outer(a - 1, a)


def c4(c, a, x):
    top = R(x + 1, a - 1) | {c}
    return [(0, top, a, a), (1, R(x + 1, a), c, a), (1, top, a - 1, a - 1),
            (1, R(x, a - 2) | {c}, a - 1, x), (2, R(x, a - 1), c, x)], _outer(x, c)


def c5(a, x):
    mid = R(x + 1, a - 1)
    return [(0, mid, a, a), (1, mid, a - 1, a - 1), (1, R(x, a - 2), a - 1, x)], [(-INF, x)]


def c6(a):
    return [(0, set(), a, a), (1, set(), a - 1, a - 1)], [(-INF, a - 1)]


def c7(c, a):
    return [(0, {c}, a, a), (1, {a}, c, a), (1, {c}, a - 1, a - 1), (2, {a - 1}, c, a - 1)], \
        _outer(a - 1, c)


def c8(d, c, a, x):
    run, low = R(x + 1, a), R(x, a - 1)
    return [(0, run | {d}, c, a), (1, low | {d}, c, x), (1, run | {c}, d, a), (2, low | {c}, d, x)], \
        _outer(x, d) + [(a, c)]


def c8_without_d(c, a, x):
    return [(0, R(x + 1, a), c, a), (1, R(x, a - 1), c, x)], [(-INF, x), (a, c)]


def c9(a, x, e, b):
    run, low = R(x + 1, a), R(x, a - 1)
    return [(0, run | {e}, b, a), (1, low | {e}, b, x), (1, run | {b}, e, a), (2, low | {b}, e, x)], \
        _outer(b, a) + [(e, x)]


def c9_without_e(a, x, b):
    return [(0, R(x + 1, a), b, a), (1, R(x, a - 1), b, x)], _outer(b, a)


def t1(a, x):
    return [(0, R(x + 1, a), a, a), (1, R(x + 1, a), a - 1, a - 1), (1, R(x, a - 2) | {a}, a - 1, x),
            (2, R(x, a - 1), a, x)], _outer(x, a)


def t2(a):
    return [(0, {a}, a, a), (1, {a}, a - 1, a - 1), (2, {a - 1}, a, a - 1)], _outer(a - 1, a)


FAMILIES_M11 = {
    "C1": (c1, ("a", "b", "x"), lambda a, b, x: a > b > x),
    "C2": (c2, ("a", "x"), lambda a, x: a - 1 > x),
    "C3": (c3, ("a",), lambda a: True),
    "C4": (c4, ("c", "a", "x"), lambda c, a, x: c > a and a - 1 > x),
    "C5": (c5, ("a", "x"), lambda a, x: a - 1 > x),
    "C6": (c6, ("a",), lambda a: True),
    "C7": (c7, ("c", "a"), lambda c, a: c > a),
    "C8": (c8, ("d", "c", "a", "x"), lambda d, c, a, x: d > c > a > x),
    "C8'": (c8_without_d, ("c", "a", "x"), lambda c, a, x: c > a > x),
    "C9": (c9, ("a", "x", "e", "b"), lambda a, x, e, b: a > x > e > b),
    "C9'": (c9_without_e, ("a", "x", "b"), lambda a, x, b: a > x > b),
    "T1": (t1, ("a", "x"), lambda a, x: a - 1 > x),
    "T2": (t2, ("a",), lambda a: True),
}


def instances_m11(name: str, ms=(2, 3)):
    build, names, cond = FAMILIES_M11[name]
    return _family_m11(name, _assign(names, cond), build, ms)


def expected_vector(terms) -> FockVector:
    sig = terms[0][1].sig
    out = FockVector.zero(sig)
    for power, f in terms:
        out = out + FockVector.monomial(f, q_power(power))
    return out
