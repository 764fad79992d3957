"""Distributed one-round cut algorithms on explicit graphs.

Everything upstream works on the weighted neighbourhood graph; this module
runs the actual algorithms on concrete instances. It provides triangle-free
regular graph generators, the three node rules (uniform, two-thirds majority
fallback, threshold), the virtual-neighbour wrapper for irregular graphs, and
Monte Carlo measurement of cut weights and per-edge statistics.

Randomness contract: trial t of master seed s uses a counter-based generator
keyed by (s, t), so trials are reproducible and independent, and runs with
different algorithms on the same (seed, trial) share the same base cut c1.
Within a trial, bits are drawn in node-index order, one array per cut.
Like-mindedness is the equality convention throughout: a neighbour u of v
counts towards l(v) when c1(u) == c1(v).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, TextIO, Tuple, Union

import numpy as np

from .ngraph import Neighbourhood, all_neighbourhoods

logger = logging.getLogger(__name__)

NodeLabels = Dict[int, str]

# Bit value b labels node side LABEL_FOR_BIT[b]; fixed across the package.
LABEL_FOR_BIT = ("a", "b")

UINT64_MASK = (1 << 64) - 1

REJECTION_BUDGET = 1000


# ---------------------------------------------------------------------------
# Graphs


@dataclass(frozen=True)
class RegularGraph:
    """Simple graph with a declared degree bound d.

    Strict mode (`is_strict`) means every node has degree exactly d and no
    edge lies in a triangle; that is the regime in which the one-round
    algorithms carry their exact per-edge guarantee. In generalised mode
    degrees may fall below d and edges may be triangle-flagged.
    """

    node_count: int
    degree: int
    adjacency: Tuple[Tuple[int, ...], ...]
    triangle_edges: frozenset

    @property
    def edges(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(
            (u, v) for u in range(self.node_count) for v in self.adjacency[u] if u < v
        )

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    @property
    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self.adjacency), default=0)

    @property
    def is_regular(self) -> bool:
        return all(len(nbrs) == self.degree for nbrs in self.adjacency)

    @property
    def is_strict(self) -> bool:
        return self.is_regular and not self.triangle_edges


def _triangle_flags(adjacency: Sequence[Tuple[int, ...]]) -> frozenset:
    """Edges lying in at least one triangle, by sorted-adjacency intersection."""
    flagged = set()
    for u, nbrs in enumerate(adjacency):
        for v in nbrs:
            if u >= v:
                continue
            a, b = adjacency[u], adjacency[v]
            i = j = 0
            while i < len(a) and j < len(b):
                if a[i] == b[j]:
                    flagged.add((u, v))
                    break
                if a[i] < b[j]:
                    i += 1
                else:
                    j += 1
    return frozenset(flagged)


def from_edges(
    node_count: int, degree: int, edges: Iterable[Tuple[int, int]]
) -> RegularGraph:
    """Build and validate a graph from an edge list.

    Rejects self-loops, duplicate edges, out-of-range endpoints, and nodes
    whose degree would exceed the declared bound.
    """
    if node_count < 1:
        raise ValueError("node_count must be >= 1")
    if degree < 1:
        raise ValueError("degree must be >= 1")
    nbrs: List[set] = [set() for _ in range(node_count)]
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at node {u}")
        if not (0 <= u < node_count and 0 <= v < node_count):
            raise ValueError(f"edge ({u}, {v}) out of range for {node_count} nodes")
        if v in nbrs[u]:
            raise ValueError(f"duplicate edge ({u}, {v})")
        nbrs[u].add(v)
        nbrs[v].add(u)
    for u, s in enumerate(nbrs):
        if len(s) > degree:
            raise ValueError(
                f"node {u} has degree {len(s)}, above the declared bound {degree}"
            )
    adjacency = tuple(tuple(sorted(s)) for s in nbrs)
    return RegularGraph(node_count, degree, adjacency, _triangle_flags(adjacency))


def complete_bipartite(d: int) -> RegularGraph:
    """K_{d,d}: nodes 0..d-1 on one side, d..2d-1 on the other."""
    if d < 1:
        raise ValueError("d must be >= 1")
    edges = [(u, d + v) for u in range(d) for v in range(d)]
    return from_edges(2 * d, d, edges)


def cycle_graph(n: int) -> RegularGraph:
    if n < 4:
        raise ValueError("cycle needs n >= 4 to be triangle-free")
    return from_edges(n, 2, [(i, (i + 1) % n) for i in range(n)])


def hypercube_graph(k: int) -> RegularGraph:
    """k-dimensional hypercube: 2^k nodes, k-regular, bipartite."""
    if k < 1:
        raise ValueError("dimension must be >= 1")
    edges = [
        (x, x ^ (1 << b)) for x in range(1 << k) for b in range(k) if x < x ^ (1 << b)
    ]
    return from_edges(1 << k, k, edges)


def petersen_graph() -> RegularGraph:
    """The Petersen graph: 3-regular, girth 5, not bipartite."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))  # outer cycle
        edges.append((i, 5 + i))  # spokes
        edges.append((5 + i, 5 + (i + 2) % 5))  # inner pentagram
    return from_edges(10, 3, edges)


def gen_fixed(family: str, *, d: Optional[int] = None, n: Optional[int] = None) -> RegularGraph:
    """Deterministic test instances by family name.

    kdd needs d; cycle needs n; hypercube takes its dimension as d;
    petersen takes no parameters.
    """
    if family == "kdd":
        if d is None:
            raise ValueError("family kdd needs d")
        return complete_bipartite(d)
    if family == "cycle":
        if n is None:
            raise ValueError("family cycle needs n")
        return cycle_graph(n)
    if family == "hypercube":
        if d is None:
            raise ValueError("family hypercube needs d (the dimension)")
        return hypercube_graph(d)
    if family == "petersen":
        return petersen_graph()
    raise ValueError(
        f"unknown family {family!r}; expected kdd, cycle, hypercube, or petersen"
    )


def random_bipartite_regular(
    n_per_side: int, d: int, seed: int, max_attempts: int = REJECTION_BUDGET
) -> RegularGraph:
    """Union of d uniform random perfect matchings, resampled until simple.

    Bipartite, hence triangle-free; strict mode by construction. Raises after
    max_attempts rejections, which signals parameters too tight (for example
    n_per_side close to d).
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if n_per_side < d:
        raise ValueError("need n_per_side >= d for d disjoint matchings")
    rng = np.random.default_rng(seed)
    for attempt in range(1, max_attempts + 1):
        edges = set()
        for _ in range(d):
            perm = rng.permutation(n_per_side)
            edges.update((i, n_per_side + int(perm[i])) for i in range(n_per_side))
        if len(edges) == n_per_side * d:  # matchings pairwise disjoint
            logger.info(
                "bipartite generator accepted after %d attempt(s) (n_per_side=%d, d=%d)",
                attempt, n_per_side, d,
            )
            return from_edges(2 * n_per_side, d, edges)
    raise RuntimeError(
        f"rejection budget exhausted after {max_attempts} attempts "
        f"(n_per_side={n_per_side}, d={d}); parameters too tight"
    )


def random_triangle_free(
    n: int, d: int, seed: int, max_attempts: int = REJECTION_BUDGET
) -> RegularGraph:
    """Configuration model conditioned on simple and triangle-free.

    Pairs n*d stubs uniformly and rejects any sample with self-loops,
    parallel edges, or triangles, so accepted graphs are uniform over
    strict-mode instances reachable by the model. Needs n*d even.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if n <= d:
        raise ValueError("need n > d for a simple d-regular graph")
    if (n * d) % 2 != 0:
        raise ValueError(f"n*d must be even, got n={n}, d={d}")
    rng = np.random.default_rng(seed)
    stubs = np.repeat(np.arange(n), d)
    for attempt in range(1, max_attempts + 1):
        pairing = rng.permutation(stubs)
        us, vs = pairing[0::2], pairing[1::2]
        if np.any(us == vs):
            continue
        edges = {(min(int(u), int(v)), max(int(u), int(v))) for u, v in zip(us, vs)}
        if len(edges) < n * d // 2:  # parallel edges collapsed
            continue
        g = from_edges(n, d, edges)
        if g.triangle_edges:
            continue
        logger.info(
            "configuration model accepted after %d attempt(s) (n=%d, d=%d)",
            attempt, n, d,
        )
        return g
    raise RuntimeError(
        f"rejection budget exhausted after {max_attempts} attempts "
        f"(n={n}, d={d}); parameters too tight for triangle-free sampling"
    )


def write_edge_list(fh: TextIO, g: RegularGraph) -> None:
    """Plain text format: `n m d` header, then one `u v` line per edge."""
    fh.write(f"{g.node_count} {g.edge_count} {g.degree}\n")
    for u, v in g.edges:
        fh.write(f"{u} {v}\n")


def read_edge_list(fh: TextIO) -> RegularGraph:
    lines = [line.strip() for line in fh if line.strip()]
    if not lines:
        raise ValueError("empty edge list")
    header = lines[0].split()
    if len(header) != 3:
        raise ValueError(f"expected header 'n m d', got {lines[0]!r}")
    n, m, d = (int(x) for x in header)
    if len(lines) - 1 != m:
        raise ValueError(f"header declares {m} edges, found {len(lines) - 1}")
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"expected 'u v', got {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return from_edges(n, d, edges)


# ---------------------------------------------------------------------------
# Node rules, as pure functions of the drawn bits

# All rules read bits as numpy uint8 arrays indexed by node. The pure
# appliers exist so that locality is testable without touching the RNG:
# change a non-neighbour's bit and node v's output must not change.


def like_counts(nbr_matrix: np.ndarray, bits: np.ndarray) -> np.ndarray:
    """l(v) = number of neighbours agreeing with v, equality convention."""
    return (bits[nbr_matrix] == bits[:, None]).sum(axis=1)


def apply_threshold_rule(nbr_matrix: np.ndarray, c1: np.ndarray, tau: int) -> np.ndarray:
    """Keep own bit while fewer than tau neighbours agree, else flip."""
    return np.where(like_counts(nbr_matrix, c1) < tau, c1, c1 ^ 1)


def apply_shearer_rule(
    nbr_matrix: np.ndarray,
    d: int,
    c1: np.ndarray,
    c2: np.ndarray,
    c3: np.ndarray,
) -> np.ndarray:
    """Follow c1 below d/2 agreement, c2 above, c3 breaking the tie.

    A node keeps its c1 bit when under half its neighbours agree (many cut
    edges locally), falls back to the fresh cut c2 when over half agree, and
    at exactly d/2 follows c1 if its c3 bit is 0 and c2 if it is 1.
    """
    like2 = 2 * like_counts(nbr_matrix, c1)
    keep_c1 = (like2 < d) | ((like2 == d) & (c3 == 0))
    return np.where(keep_c1, c1, c2)


def apply_virtual_rule(
    padded_matrix: np.ndarray,
    c1: np.ndarray,
    virtual_bits: np.ndarray,
    tau: int,
) -> np.ndarray:
    """Threshold rule where padding columns index into the virtual bits.

    padded_matrix rows have length d; real neighbour entries index c1,
    padding entries index positions len(c1)..len(c1)+len(virtual_bits)-1 of
    the concatenated vector. Outputs cover the real nodes only.
    """
    ext = np.concatenate([c1, virtual_bits]).astype(np.uint8)
    like = (ext[padded_matrix] == c1[:, None]).sum(axis=1)
    return np.where(like < tau, c1, c1 ^ 1)


# ---------------------------------------------------------------------------
# Seeded execution


def make_trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Counter-based generator for one trial, keyed by (seed, trial)."""
    return np.random.Generator(np.random.Philox(key=[seed & UINT64_MASK, trial]))


def draw_bits(rng: np.random.Generator, count: int) -> np.ndarray:
    """Uniform bits; the unit in which the randomness budget is counted."""
    return rng.integers(0, 2, size=count, dtype=np.uint8)


def labels_from_bits(bits: np.ndarray) -> NodeLabels:
    return {v: LABEL_FOR_BIT[int(b)] for v, b in enumerate(bits)}


def cut_fraction(g: RegularGraph, labels: NodeLabels) -> Fraction:
    """Fraction of edges whose endpoints got different labels."""
    for v in range(g.node_count):
        if labels.get(v) not in LABEL_FOR_BIT:
            raise ValueError(f"node {v} is missing a valid side label")
    cut = sum(1 for u, v in g.edges if labels[u] != labels[v])
    return Fraction(cut, g.edge_count)


def _require_strict(g: RegularGraph, rule: str) -> None:
    if not g.is_regular:
        raise ValueError(
            f"{rule} needs an exactly {g.degree}-regular graph; "
            "wrap irregular graphs with run_virtual_neighbour"
        )
    if g.triangle_edges:
        raise ValueError(
            f"{rule} carries its guarantee only on triangle-free graphs; "
            f"{len(g.triangle_edges)} edge(s) lie in triangles "
            "(use run_virtual_neighbour to run regardless)"
        )


def _check_tau(tau: int, d: int) -> None:
    if not 0 <= tau <= d + 1:
        raise ValueError(f"tau must be in [0, {d + 1}], got {tau}")


def _nbr_matrix(g: RegularGraph) -> np.ndarray:
    return np.array(g.adjacency, dtype=np.intp)


def _padded_matrix(g: RegularGraph, d: int) -> Tuple[np.ndarray, int]:
    """Neighbour matrix with virtual-bit indices filling rows up to d."""
    if g.max_degree > d:
        raise ValueError(
            f"a node has degree {g.max_degree}, above the simulated degree {d}"
        )
    n = g.node_count
    rows = []
    next_virtual = n
    for v in range(n):
        missing = d - len(g.adjacency[v])
        rows.append(
            list(g.adjacency[v]) + list(range(next_virtual, next_virtual + missing))
        )
        next_virtual += missing
    return np.array(rows, dtype=np.intp), next_virtual - n


def run_threshold(g: RegularGraph, tau: int, seed: int) -> NodeLabels:
    """One trial of the threshold rule; trial index 0 of the seed's stream.

    Draws one bit per node in node-index order, so the base cut matches the
    other runners at the same (seed, trial).
    """
    _require_strict(g, "run_threshold")
    _check_tau(tau, g.degree)
    rng = make_trial_rng(seed, 0)
    c1 = draw_bits(rng, g.node_count)
    return labels_from_bits(apply_threshold_rule(_nbr_matrix(g), c1, tau))


def run_shearer(g: RegularGraph, seed: int) -> NodeLabels:
    """One trial of the three-cut rule: c1, c2, c3 drawn in that order."""
    _require_strict(g, "run_shearer")
    rng = make_trial_rng(seed, 0)
    n = g.node_count
    c1, c2, c3 = draw_bits(rng, n), draw_bits(rng, n), draw_bits(rng, n)
    return labels_from_bits(apply_shearer_rule(_nbr_matrix(g), g.degree, c1, c2, c3))


def run_virtual_neighbour(g: RegularGraph, d: int, tau: int, seed: int) -> NodeLabels:
    """Threshold rule on a graph with degrees <= d via simulated neighbours.

    Each node of degree d' draws its own bit plus d - d' virtual-neighbour
    bits and counts agreement over real and virtual neighbours together.
    Own bits come first (node order), then the virtual bits (node order).
    """
    _check_tau(tau, d)
    padded, virtual_total = _padded_matrix(g, d)
    rng = make_trial_rng(seed, 0)
    c1 = draw_bits(rng, g.node_count)
    virtual = draw_bits(rng, virtual_total)
    return labels_from_bits(apply_virtual_rule(padded, c1, virtual, tau))


# ---------------------------------------------------------------------------
# Algorithm specs and Monte Carlo measurement


@dataclass(frozen=True)
class UniformCut:
    """Each node takes its own uniform bit; baseline with mean 1/2."""


@dataclass(frozen=True)
class ThresholdCut:
    tau: int


@dataclass(frozen=True)
class ShearerCut:
    """Three-cut rule with majority fallback and random tie-break."""


@dataclass(frozen=True)
class VirtualNeighbourCut:
    degree: int
    tau: int


AlgorithmSpec = Union[UniformCut, ThresholdCut, ShearerCut, VirtualNeighbourCut]


@dataclass(frozen=True)
class TrialStats:
    """Monte Carlo estimate of the expected cut weight.

    mean is total cut edges over trials * edge_count; stderr is the sample
    standard deviation of per-trial weights (ddof=1) over sqrt(trials), and
    0.0 for a single trial. When the graph has triangle-flagged edges the
    per-class means are reported separately: the per-edge guarantee applies
    only to clean edges, so flagged edges get an empirical number and no
    assertion.
    """

    trials: int
    mean: float
    stderr: float
    seed: int
    edge_count: int
    per_edge: Optional[Dict[Tuple[int, int], int]] = None
    clean_edge_mean: Optional[float] = None
    flagged_edge_mean: Optional[float] = None
    flagged_edge_fraction: Optional[float] = None


def _trial_runner(g: RegularGraph, alg: AlgorithmSpec):
    """Per-trial closure rng -> output bit array, validated up front."""
    n = g.node_count
    if isinstance(alg, UniformCut):
        return lambda rng: draw_bits(rng, n)
    if isinstance(alg, ThresholdCut):
        _require_strict(g, "ThresholdCut")
        _check_tau(alg.tau, g.degree)
        nbr = _nbr_matrix(g)
        tau = alg.tau
        return lambda rng: apply_threshold_rule(nbr, draw_bits(rng, n), tau)
    if isinstance(alg, ShearerCut):
        _require_strict(g, "ShearerCut")
        nbr = _nbr_matrix(g)
        d = g.degree

        def shearer(rng: np.random.Generator) -> np.ndarray:
            c1 = draw_bits(rng, n)
            c2 = draw_bits(rng, n)
            c3 = draw_bits(rng, n)
            return apply_shearer_rule(nbr, d, c1, c2, c3)

        return shearer
    if isinstance(alg, VirtualNeighbourCut):
        _check_tau(alg.tau, alg.degree)
        padded, virtual_total = _padded_matrix(g, alg.degree)
        tau = alg.tau

        def virtual(rng: np.random.Generator) -> np.ndarray:
            c1 = draw_bits(rng, n)
            return apply_virtual_rule(padded, c1, draw_bits(rng, virtual_total), tau)

        return virtual
    raise ValueError(f"unknown algorithm spec {alg!r}")


def monte_carlo(
    g: RegularGraph,
    alg: AlgorithmSpec,
    trials: int,
    seed: int,
    per_edge: bool = False,
) -> TrialStats:
    """Independent trials with sub-seeds (seed, 0), (seed, 1), ...

    Identical (graph, algorithm, trials, seed) give bit-identical TrialStats.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    runner = _trial_runner(g, alg)
    edges = g.edges
    if not edges:
        raise ValueError("graph has no edges to measure")
    eu = np.array([u for u, _ in edges], dtype=np.intp)
    ev = np.array([v for _, v in edges], dtype=np.intp)
    edge_cut_counts = np.zeros(len(edges), dtype=np.int64)
    weights = np.empty(trials, dtype=np.float64)
    for t in range(trials):
        out = runner(make_trial_rng(seed, t))
        cut = out[eu] != out[ev]
        edge_cut_counts += cut
        weights[t] = cut.sum() / len(edges)
    total_cut = int(edge_cut_counts.sum())
    mean = total_cut / (trials * len(edges))
    stderr = float(np.std(weights, ddof=1) / np.sqrt(trials)) if trials > 1 else 0.0
    clean_mean = flagged_mean = flagged_fraction = None
    if g.triangle_edges:
        flagged = np.array([e in g.triangle_edges for e in edges])
        flagged_fraction = float(flagged.sum() / len(edges))
        flagged_mean = float(edge_cut_counts[flagged].sum() / (trials * flagged.sum()))
        if not flagged.all():
            clean = ~flagged
            clean_mean = float(edge_cut_counts[clean].sum() / (trials * clean.sum()))
    return TrialStats(
        trials=trials,
        mean=mean,
        stderr=stderr,
        seed=seed,
        edge_count=len(edges),
        per_edge={e: int(c) for e, c in zip(edges, edge_cut_counts)} if per_edge else None,
        clean_edge_mean=clean_mean,
        flagged_edge_mean=flagged_mean,
        flagged_edge_fraction=flagged_fraction,
    )


def empirical_joint_distribution(
    g: RegularGraph,
    edge: Tuple[int, int],
    trials: int,
    seed: int,
) -> Dict[Tuple[Neighbourhood, Neighbourhood], int]:
    """Counts of the (view of u, view of v) cells under uniform random cuts.

    Views are taken with respect to the base cut alone (no rule applied):
    side from the node's own bit, like count over its neighbours. Every
    ordered cell is present, impossible ones with count 0; each cell's count
    is binomial with the corresponding neighbourhood-graph weight as success
    probability.
    """
    _require_strict(g, "empirical_joint_distribution")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    u, v = edge
    if not (0 <= u < g.node_count) or v not in g.adjacency[u]:
        raise ValueError(f"edge ({u}, {v}) is not in the graph")
    views = all_neighbourhoods(g.degree)
    counts = {(n1, n2): 0 for n1 in views for n2 in views}
    nbr_u = np.array(g.adjacency[u], dtype=np.intp)
    nbr_v = np.array(g.adjacency[v], dtype=np.intp)
    for t in range(trials):
        c1 = draw_bits(make_trial_rng(seed, t), g.node_count)
        view_u = Neighbourhood(LABEL_FOR_BIT[c1[u]], int((c1[nbr_u] == c1[u]).sum()))
        view_v = Neighbourhood(LABEL_FOR_BIT[c1[v]], int((c1[nbr_v] == c1[v]).sum()))
        counts[(view_u, view_v)] += 1
    return counts


# ---------------------------------------------------------------------------
# TrialStats emitters


def trial_stats_jsonable(stats: TrialStats) -> dict:
    doc: dict = {
        "trials": stats.trials,
        "mean": stats.mean,
        "stderr": stats.stderr,
        "seed": stats.seed,
        "edge_count": stats.edge_count,
    }
    if stats.clean_edge_mean is not None:
        doc["clean_edge_mean"] = stats.clean_edge_mean
    if stats.flagged_edge_mean is not None:
        doc["flagged_edge_mean"] = stats.flagged_edge_mean
        doc["flagged_edge_fraction"] = stats.flagged_edge_fraction
    if stats.per_edge is not None:
        doc["per_edge"] = [
            {"u": u, "v": v, "cut_count": c, "frequency": c / stats.trials}
            for (u, v), c in stats.per_edge.items()
        ]
    return doc


def write_trial_stats_csv(fh: TextIO, stats: TrialStats) -> None:
    """Scalar row first; per-edge counts follow as a second block if present.

    The triangle-split columns are empty for strict graphs so the schema does
    not depend on the input.
    """
    def opt(x: Optional[float]) -> str:
        return "" if x is None else f"{x:.15g}"

    fh.write(
        "trials,mean,stderr,seed,edge_count,"
        "clean_edge_mean,flagged_edge_mean,flagged_edge_fraction\n"
    )
    fh.write(
        f"{stats.trials},{stats.mean:.15g},{stats.stderr:.15g},"
        f"{stats.seed},{stats.edge_count},{opt(stats.clean_edge_mean)},"
        f"{opt(stats.flagged_edge_mean)},{opt(stats.flagged_edge_fraction)}\n"
    )
    if stats.per_edge is not None:
        fh.write("u,v,cut_count,frequency\n")
        for (u, v), c in stats.per_edge.items():
            fh.write(f"{u},{v},{c},{c / stats.trials:.15g}\n")
