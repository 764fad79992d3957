"""Independent brute-force oracles used to pin down derived expected values.

These deliberately avoid the library's formula paths: everything is computed
by enumerating raw random-bit patterns, so they can arbitrate whether the
closed forms and the neighbourhood-graph weights are right.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from localcut.ngraph import Neighbourhood

_SIDE = ("a", "b")


def _popcount(x: int) -> int:
    return bin(x).count("1")


def enumerate_edge_views(d: int):
    """Yield (view_u, view_v, probability) over all 2^(2d) bit patterns.

    The pattern covers one edge {u, v}: both endpoint bits plus the d - 1
    private neighbours of each endpoint (disjoint by triangle-freeness).
    Every pattern has probability 1 / 4^d.
    """
    m = d - 1
    prob = Fraction(1, 4**d)
    for p in range(1 << (2 * d)):
        b_u = p & 1
        b_v = (p >> 1) & 1
        u_priv = (p >> 2) & ((1 << m) - 1)
        v_priv = (p >> (2 + m)) & ((1 << m) - 1)
        ones_u = _popcount(u_priv)
        ones_v = _popcount(v_priv)
        like_u = (b_u == b_v) + (ones_u if b_u == 1 else m - ones_u)
        like_v = (b_u == b_v) + (ones_v if b_v == 1 else m - ones_v)
        yield (
            Neighbourhood(_SIDE[b_u], like_u),
            Neighbourhood(_SIDE[b_v], like_v),
            prob,
            (b_u, b_v, like_u, like_v),
        )


def joint_view_distribution(d: int) -> dict:
    """Exact distribution of endpoint view pairs under a uniform random cut."""
    dist: dict = {}
    for view_u, view_v, prob, _ in enumerate_edge_views(d):
        key = (view_u, view_v)
        dist[key] = dist.get(key, Fraction(0)) + prob
    return dist


def threshold_cut_probability(d: int, tau: int) -> Fraction:
    """Exact cut probability of one edge under the threshold-tau rule.

    Computed straight from the bit patterns: each endpoint flips its own bit
    when its like count reaches tau, and the edge is cut when the final
    labels differ.
    """
    cut = Fraction(0)
    for _, _, prob, (b_u, b_v, like_u, like_v) in enumerate_edge_views(d):
        out_u = b_u ^ (like_u >= tau)
        out_v = b_v ^ (like_v >= tau)
        if out_u != out_v:
            cut += prob
    return cut


def expected_cut_weight_exhaustive(adjacency, rule) -> Fraction:
    """Exact expected cut weight of a one-round rule on a whole small graph.

    `adjacency` is a list of neighbour lists; `rule(bits, v)` maps the full
    bit vector to node v's final label bit.  Averages the cut fraction over
    all 2^n bit vectors.
    """
    n = len(adjacency)
    edges = [(u, v) for u in range(n) for v in adjacency[u] if u < v]
    total = Fraction(0)
    for bits in product((0, 1), repeat=n):
        out = [rule(bits, v) for v in range(n)]
        cut = sum(1 for u, v in edges if out[u] != out[v])
        total += Fraction(cut, len(edges))
    return total / 2**n


def threshold_rule_on_graph(adjacency, tau):
    """One-round threshold rule as a bit-vector function, for small graphs."""

    def rule(bits, v):
        like = sum(1 for w in adjacency[v] if bits[w] == bits[v])
        return bits[v] ^ (like >= tau)

    return rule


def shearer_expected_cut(adjacency, d) -> Fraction:
    """Exact expected cut weight of the three-cut rule on a small graph.

    Conditions on the base cut c1: given c1, node v's output is c1(v) when
    under half its neighbours agree, a fresh uniform bit when over half
    agree, and c1(v) with probability 3/4 at a tie (the tie-break keeps c1
    half the time and falls back to a fresh bit otherwise). Outputs are
    independent across nodes given c1, so per-edge cut probabilities
    multiply out exactly.
    """
    n = len(adjacency)
    edges = [(u, v) for u in range(n) for v in adjacency[u] if u < v]
    total = Fraction(0)
    for pattern in range(1 << n):
        bits = [(pattern >> v) & 1 for v in range(n)]
        p_one = []  # P(out_v = 1 | c1)
        for v in range(n):
            like2 = 2 * sum(1 for w in adjacency[v] if bits[w] == bits[v])
            if like2 < d:
                p_one.append(Fraction(bits[v]))
            elif like2 > d:
                p_one.append(Fraction(1, 2))
            else:
                p_one.append(Fraction(3, 4) if bits[v] else Fraction(1, 4))
        for u, v in edges:
            total += p_one[u] * (1 - p_one[v]) + (1 - p_one[u]) * p_one[v]
    return total / (len(edges) * 2**n)


def virtual_expected_edge_cuts(adjacency, d, tau) -> dict:
    """Exact per-edge cut probabilities of the virtual-neighbour rule.

    Enumerates every assignment of own bits and virtual-neighbour bits, so
    it is only usable when n + sum(d - deg(v)) stays small.
    """
    n = len(adjacency)
    edges = [(u, v) for u in range(n) for v in adjacency[u] if u < v]
    missing = [d - len(adjacency[v]) for v in range(n)]
    offsets = []
    pos = 0
    for v in range(n):
        offsets.append(pos)
        pos += missing[v]
    total_bits = n + pos
    counts = {e: 0 for e in edges}
    for pattern in range(1 << total_bits):
        bits = [(pattern >> v) & 1 for v in range(n)]
        virtual = [(pattern >> (n + i)) & 1 for i in range(pos)]
        out = []
        for v in range(n):
            like = sum(1 for w in adjacency[v] if bits[w] == bits[v])
            like += sum(
                1
                for i in range(offsets[v], offsets[v] + missing[v])
                if virtual[i] == bits[v]
            )
            out.append(bits[v] ^ (like >= tau))
        for u, v in edges:
            if out[u] != out[v]:
                counts[(u, v)] += 1
    return {e: Fraction(c, 1 << total_bits) for e, c in counts.items()}
