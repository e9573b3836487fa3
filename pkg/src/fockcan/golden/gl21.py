"""Hand-encoded tables for the block of (0,0|0) in gl(2|1).

Weights are written (a, b) for (a,b|c); every weight of this block has
either a = 0 or b = 0 and c = a + b.  Each flag is given by the rules read
off the diagrams, without calling any computation in fockcan, and rendered
in the same JSON layout as fockcan.cato.gl21_block_report.
"""

from __future__ import annotations

import json


def w(a, b):
    return f"{a}|{b}|{a + b}"


def heads(bound):
    out = []
    for i in range(bound - 1, 0, -1):
        out += [(i, 0), (0, i)]
    out.append((0, 0))
    for i in range(1, bound):
        out += [(0, -i), (-i, 0)]
    return out


def tilting(h):
    a, b = h
    if h == (0, 0):
        return [(0, 0), (0, -1), (-1, 0)]
    if h == (0, 1):
        return [(0, 1), (0, 0), (-1, 0)]
    if h == (1, 0):
        return [(1, 0), (0, 1), (0, 0)]
    if b == 0 and a < 0:
        return [(a, 0), (a - 1, 0)]
    if a == 0 and b < 0:
        return [(0, b), (b, 0), (0, b - 1), (b - 1, 0)]
    if a == 0:
        return [(0, b), (0, b - 1)]
    return [(a, 0), (0, a), (a - 1, 0), (0, a - 1)]


def verma(h):
    a, b = h
    if h == (0, 1):
        return [(0, 1), (0, 0)]
    if h == (1, 0):
        return [(1, 0), (0, 1), (0, 0), (0, -1)]
    # elsewhere the composition series has the shape of the tilting flag
    return tilting(h)


def projective(h):
    a, b = h
    if h == (-1, 0):
        return [(0, -1), (-1, 0), (0, 0)]
    if h == (0, -1):
        return [(0, -1), (0, 0), (1, 0)]
    if h == (0, 0):
        return [(0, 0), (0, 1), (1, 0)]
    if b == 0 and a < 0:
        return [(0, a), (a, 0), (0, a + 1), (a + 1, 0)]
    if a == 0 and b < 0:
        return [(0, b), (0, b + 1)]
    if b == 0:
        return [(a, 0), (a + 1, 0)]
    return [(0, b), (b, 0), (0, b + 1), (b + 1, 0)]


def covers(bound):
    """(upper, lower) pairs of the Hasse diagram."""
    hs = set(heads(bound))
    out = set()
    for i in range(1, bound):
        out |= {((0, -i), (-i, 0)), ((0, -i), (0, -i - 1)), ((-i, 0), (-i - 1, 0))}
        out |= {((0, i), (0, i - 1)), ((i, 0), (0, i)), ((i + 1, 0), (i, 0))}
    out |= {((0, 0), (0, -1)), ((0, 1), (0, 0)), ((1, 0), (0, 1))}
    return {e for e in out if e[0] in hs and e[1] in hs}


def projective_tilting(bound):
    """P(0,i-1) = U(i,0) for i >= 1, P(-1,0) = U(0,0), P(j-1,0) = U(0,j) for j < 0."""
    out = []
    for h in heads(bound):
        a, b = h
        if h == (0, 0):
            out.append(((-1, 0), h))
        elif b == 0 and a > 0:
            out.append(((0, a - 1), h))
        elif a == 0 and b < 0:
            out.append(((b - 1, 0), h))
    return out


def _flag(h, kind, rows):
    rows = sorted(rows, reverse=True)
    return {"head": w(*h), "kind": kind, "rows": [[w(*g), 1] for g in rows], "status": "Proven"}


def expected_report(bound=5):
    hs = heads(bound)
    rank = {h: k for k, h in enumerate(hs)}
    edges = sorted(covers(bound), key=lambda e: (rank[e[0]], rank[e[1]]))
    return {
        "poset": {"weights": [w(*h) for h in hs], "edges": [[w(*a), w(*b)] for a, b in edges]},
        "tilting": [_flag(h, "Tilting", tilting(h)) for h in hs],
        "verma": [_flag(h, "Verma", verma(h)) for h in hs],
        "projective": [_flag(h, "Projective", projective(h)) for h in hs],
        "projective_tilting": {
            "pairs": [[w(*p), w(*t)] for p, t in projective_tilting(bound)],
            "status": "Proven",
        },
    }


ENCODED_KEYS = ("poset", "tilting", "verma", "projective", "projective_tilting")


def encoded_json(report: dict) -> str:
    return json.dumps({k: report[k] for k in ENCODED_KEYS}, sort_keys=True, indent=1)
