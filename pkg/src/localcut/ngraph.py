"""Weighted neighbourhood graphs for one-round cut algorithms.

A one-round randomised algorithm on a d-regular triangle-free graph sees, at
each node, only the node's own uniform random bit and the bits of its d
neighbours.  Fixing an edge {u, v} and conditioning on the random bits, the
local view of u collapses to a pair (side, like_count): which side of the
random cut u picked, and how many of its d neighbours picked the same side.

The neighbourhood graph for degree d has one node per such pair, 2d + 2 in
total, and carries on each ordered node pair the exact probability that a
uniformly random cut produces those two views at the endpoints of an edge.
Because the edge's endpoints are adjacent and triangle-freeness makes their
remaining neighbourhoods disjoint, these probabilities are products of
binomial counts over 4^d, and they sum to exactly 1.

Everything here is exact: weights are `fractions.Fraction` values whose
denominators divide 4^d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import IO, NamedTuple

SIDES = ("a", "b")


class Neighbourhood(NamedTuple):
    """Local view (side, like_count) of one endpoint of an edge."""

    side: str
    like_count: int


def complement_side(side: str) -> str:
    if side == "a":
        return "b"
    if side == "b":
        return "a"
    raise ValueError(f"unknown side {side!r}, expected 'a' or 'b'")


def all_neighbourhoods(d: int) -> list[Neighbourhood]:
    """All 2d + 2 neighbourhoods in canonical order (a,0)..(a,d),(b,0)..(b,d)."""
    _check_degree(d)
    return [Neighbourhood(k, i) for k in SIDES for i in range(d + 1)]


def _check_degree(d: int) -> None:
    if not isinstance(d, int) or d < 2:
        raise ValueError(f"degree must be an integer >= 2, got {d!r}")


def _check_neighbourhood(d: int, n: Neighbourhood) -> None:
    if n.side not in SIDES:
        raise ValueError(f"unknown side {n.side!r}, expected 'a' or 'b'")
    if not 0 <= n.like_count <= d:
        raise ValueError(
            f"like count {n.like_count} out of range [0, {d}] for degree {d}"
        )


def _binom(n: int, k: int) -> int:
    # C(n, k) with the convention C(n, k) = 0 for k < 0 or k > n.
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def edge_weight(d: int, n1: Neighbourhood, n2: Neighbourhood) -> Fraction:
    """Exact probability that a uniform random cut shows (n1, n2) across an edge.

    For views on opposite sides the endpoints' like counts come from the d - 1
    neighbours outside the edge, giving C(d-1, i1) * C(d-1, i2) / 4^d.  On the
    same side each endpoint already likes the other, shifting both counts by
    one: C(d-1, i1 - 1) * C(d-1, i2 - 1) / 4^d.
    """
    _check_degree(d)
    _check_neighbourhood(d, n1)
    _check_neighbourhood(d, n2)
    if n1.side != n2.side:
        num = _binom(d - 1, n1.like_count) * _binom(d - 1, n2.like_count)
    else:
        num = _binom(d - 1, n1.like_count - 1) * _binom(d - 1, n2.like_count - 1)
    return Fraction(num, 4**d)


@dataclass(frozen=True)
class WeightedNgraph:
    """Dense weighted neighbourhood graph for one degree.

    `weights` stores every ordered pair of the 2d + 2 nodes, zeros included,
    so lookups never miss and self-loops need no special casing.  Treat
    instances as immutable.
    """

    degree: int
    weights: dict[tuple[Neighbourhood, Neighbourhood], Fraction] = field(repr=False)

    @property
    def nodes(self) -> list[Neighbourhood]:
        return all_neighbourhoods(self.degree)

    def weight(self, n1: Neighbourhood, n2: Neighbourhood) -> Fraction:
        _check_neighbourhood(self.degree, n1)
        _check_neighbourhood(self.degree, n2)
        return self.weights[(n1, n2)]

    def total_weight(self) -> Fraction:
        scale = 4**self.degree
        total = sum(scaled_numerator(w, scale) for w in self.weights.values())
        return Fraction(total, scale)


def scaled_numerator(w: Fraction, scale: int) -> int:
    """w * scale as an exact integer; requires w's denominator to divide scale."""
    if scale % w.denominator != 0:
        raise ValueError(f"denominator {w.denominator} does not divide {scale}")
    return w.numerator * (scale // w.denominator)


def build_ngraph(d: int) -> WeightedNgraph:
    """Construct the full (2d+2)-node weighted neighbourhood graph for degree d."""
    nodes = all_neighbourhoods(d)
    scale = 4**d
    row = [math.comb(d - 1, i) for i in range(d)]  # C(d-1, 0..d-1)

    def profile(n: Neighbourhood, same_side: bool) -> int:
        i = n.like_count - 1 if same_side else n.like_count
        return row[i] if 0 <= i < d else 0

    weights = {}
    for n1 in nodes:
        for n2 in nodes:
            same = n1.side == n2.side
            weights[(n1, n2)] = Fraction(profile(n1, same) * profile(n2, same), scale)
    return WeightedNgraph(degree=d, weights=weights)


def format_ngraph_table(g: WeightedNgraph) -> str:
    """Text serialisation: header `d=<d>`, then one line per ordered pair.

    Line format: `side1 i1 side2 i2 numerator denominator`.
    """
    lines = [f"d={g.degree}"]
    for n1 in g.nodes:
        for n2 in g.nodes:
            w = g.weights[(n1, n2)]
            lines.append(
                f"{n1.side} {n1.like_count} {n2.side} {n2.like_count}"
                f" {w.numerator} {w.denominator}"
            )
    return "\n".join(lines) + "\n"


def write_ngraph_table(fh: IO[str], g: WeightedNgraph) -> None:
    fh.write(format_ngraph_table(g))


def parse_ngraph_table(text: str) -> WeightedNgraph:
    """Inverse of `format_ngraph_table`; validates completeness of the table."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("d="):
        raise ValueError("missing 'd=<d>' header line")
    d = int(lines[0][2:])
    _check_degree(d)
    weights = {}
    for ln in lines[1:]:
        s1, i1, s2, i2, num, den = ln.split()
        pair = (Neighbourhood(s1, int(i1)), Neighbourhood(s2, int(i2)))
        weights[pair] = Fraction(int(num), int(den))
    expected = (2 * d + 2) ** 2
    if len(weights) != expected:
        raise ValueError(f"expected {expected} weight lines, got {len(weights)}")
    return WeightedNgraph(degree=d, weights=weights)
