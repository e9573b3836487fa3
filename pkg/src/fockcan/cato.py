"""Category O multiplicities read off the polynomial tables at q = 1.

Tilting modules have Verma flags given by canonical basis columns, Verma
modules have composition factors given by canonical columns of negated
weights, projective covers follow by BGG reciprocity, and irreducible
characters come from dual canonical columns.  Whether a table is an actual
statement about modules depends on which cases of the correspondence are
known, so every report carries a status.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .canon import CanonWindow, canonical, default_depth, dual_canonical
from .weights import (
    EpsWeight, LambdaWeight, Signature, Weight, atypicality, bruhat_leq, condition_r_witness,
    eps_weight, neg_w0, rho_shift, rho_unshift,
)

PROVEN = "Proven"
CONJECTURAL = "Conjectural"


@dataclass(frozen=True)
class FlagReport:
    head: Weight
    kind: str  # Tilting, Verma, Projective or Irreducible
    rows: dict[Weight, int] = field(default_factory=dict)
    status: str = PROVEN

    def multiset(self) -> Counter:
        return Counter({g: m for g, m in self.rows.items() if m})

    def to_json(self) -> dict:
        return {
            "head": str(self.head),
            "kind": self.kind,
            "rows": [[str(g), m] for g, m in sorted(self.rows.items(), key=lambda kv: kv[0].values,
                                                  reverse=True)],
            "status": self.status,
        }


def _supported_signature(sig: Signature) -> bool:
    if not sig.is_super:
        # classical parabolic tables are Kazhdan-Lusztig polynomials
        return True
    if sig.m_blocks == (1, 1):
        return True
    return sig.s == 2 and sig.m_blocks[1] == 1 and sig.n == 1


def _weight_is_covered(f: Weight) -> bool:
    if atypicality(f) == 0:
        return True
    return f.sig.s == 2 and condition_r_witness(f) is None


def flag_status(weights: Iterable[Weight]) -> str:
    """Proven when the signature is one of the fully worked out families or
    every weight involved is typical or regular."""
    weights = list(weights)
    if not weights:
        return PROVEN
    if _supported_signature(weights[0].sig):
        return PROVEN
    return PROVEN if all(_weight_is_covered(f) for f in weights) else CONJECTURAL


def _at_one(vec) -> dict[Weight, int]:
    return {g: c.at_one() for g, c in vec.items() if c.at_one()}


def tilting_flag(f: Weight, window: CanonWindow | None = None) -> FlagReport:
    rows = _at_one(canonical(f, window))
    return FlagReport(f, "Tilting", rows, flag_status([f]))


def projective_flag(f: Weight, window: CanonWindow | None = None) -> FlagReport:
    """(P(f) : K(g)) = [K(g) : L(f)] = u_{neg g, neg f}(1), so the flag is
    the negated support of the canonical element of neg f."""
    nf = neg_w0(f)
    rows = {neg_w0(h): m for h, m in _at_one(canonical(nf)).items()}
    return FlagReport(f, "Projective", rows, flag_status([nf]))


def verma_composition(f: Weight, window: CanonWindow | None = None) -> FlagReport:
    """[K(f) : L(k)] = u_{neg f, neg k}(1) for k below f in the window."""
    if window is None:
        window = CanonWindow.below(f)
    nf = neg_w0(f)
    rows = {}
    involved = []
    for k in window.members:
        if not bruhat_leq(k, f):
            continue
        nk = neg_w0(k)
        m = canonical(nk).coeff(nf).at_one()
        if m:
            rows[k] = m
            involved.append(nk)
    return FlagReport(f, "Verma", rows, flag_status(involved))


def irreducible_character(f: Weight, window: CanonWindow | None = None) -> FlagReport:
    """ch L(f) = sum_g l_{g,f}(1) ch K(g), cut at the window floor."""
    if window is None:
        window = CanonWindow.below(f)
    rows = _at_one(dual_canonical(f, window))
    return FlagReport(f, "Irreducible", rows, flag_status([f]))


# blocks


def block_of(f: Weight) -> EpsWeight:
    return eps_weight(f)


def block_members(gamma: EpsWeight, window: Iterable[Weight] | CanonWindow) -> list[Weight]:
    members = window.members if isinstance(window, CanonWindow) else window
    return [g for g in members if eps_weight(g) == gamma]


def classify_projective_tilting(heads: Iterable[Weight]) -> list[tuple[Weight, Weight]]:
    """Pairs (projective head, tilting head) with equal Verma flags.

    A projective cover P(g) has K(g) in its flag, so the only candidates
    for U(h) are the weights of its own flag."""
    out = []
    for h in heads:
        tilt = tilting_flag(h).multiset()
        for g in sorted(tilt, key=lambda x: x.values, reverse=True):
            if projective_flag(g).multiset() == tilt:
                out.append((g, h))
                break
    return out


# the lambda-level twist


def lambda_twist(lam: LambdaWeight) -> LambdaWeight:
    """-w0(lambda) - 2 rho + 2 rho_l, with w0 the longest element of the Levi
    Weyl group and rho_l the half sum of positive roots of the Levi factor.

    Only used to compare with the weight-function twist f -> neg_w0(f)."""
    sig = lam.sig
    coeffs = lam.coeffs
    idx = sig.indices()
    out = [0] * len(coeffs)
    for a, b in sig.block_ranges():
        size = b - a
        for t in range(size):
            # w0 reverses each Levi block
            i = idx[a + t]
            rho = -i if (i < 0 or sig.is_super) else 1 - i
            out[a + t] = -coeffs[b - 1 - t] - 2 * rho + (size - 1 - 2 * t)
    return LambdaWeight(sig, tuple(out))


def twist_agreement(weights: Iterable[Weight]) -> dict[str, int]:
    """Count weights where the lambda-level twist and neg_w0 agree."""
    same = differ = 0
    for f in weights:
        g = rho_shift(lambda_twist(rho_unshift(f)))
        if g.is_dominant() and g == neg_w0(f):
            same += 1
        else:
            differ += 1
    return {"agree": same, "differ": differ}


# the gl(2|1) block


GL21 = Signature((1, 1), 1)


def gl21_block_heads(bound: int) -> list[Weight]:
    """Weights of the block of (0,0|0) with all values of size < bound,
    listed from the top of the poset down."""
    out = []
    for i in range(bound - 1, 0, -1):
        out.append(Weight(GL21, (i, 0, i)))
        out.append(Weight(GL21, (0, i, i)))
    out.append(Weight(GL21, (0, 0, 0)))
    for i in range(1, bound):
        out.append(Weight(GL21, (0, -i, -i)))
        out.append(Weight(GL21, (-i, 0, -i)))
    return out


def hasse_edges(weights: list[Weight]) -> list[tuple[Weight, Weight]]:
    """Cover relations (upper, lower) of the Bruhat order restricted to the
    given weights."""
    below = {f: [g for g in weights if g != f and bruhat_leq(g, f)] for f in weights}
    edges = []
    for f in weights:
        for g in below[f]:
            if not any(g in below[h] for h in below[f] if h != g):
                edges.append((f, g))
    return edges


def gl21_block_report(bound: int = 5) -> dict:
    heads = gl21_block_heads(bound)
    tilting = [tilting_flag(h) for h in heads]
    verma = [verma_composition(h) for h in heads]
    projective = [projective_flag(h) for h in heads]
    floor = -bound - default_depth(GL21)
    irreducible = [irreducible_character(h, CanonWindow.below(h, lo=floor)) for h in heads]
    pairs = classify_projective_tilting(heads)
    return {
        "sig": str(GL21),
        "block": str(block_of(heads[0])),
        "bound": bound,
        "poset": {
            "weights": [str(h) for h in heads],
            "edges": [[str(a), str(b)] for a, b in hasse_edges(heads)],
        },
        "tilting": [r.to_json() for r in tilting],
        "verma": [r.to_json() for r in verma],
        "projective": [r.to_json() for r in projective],
        "irreducible": {"floor": floor, "rows": [r.to_json() for r in irreducible]},
        "projective_tilting": {
            "pairs": [[str(p), str(t)] for p, t in pairs],
            "status": PROVEN,
        },
    }


def report_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=1)


def poset_dot(weights: list[Weight], name: str = "block") -> str:
    """Graphviz source for the Hasse diagram, arrows pointing down."""
    lines = [f'digraph "{name}" {{', "  rankdir=TB;"]
    for f in weights:
        lines.append(f'  "{f}";')
    for a, b in hasse_edges(weights):
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
