"""Combinatorial corner truncation and its certified match with Hanoi graphs.

Truncating a graph replaces each vertex x by one new vertex per incident edge
(the ordered pair (x, y) for each neighbor y), then joins (x, y)--(y, x) for
every old edge ("partner" edges) and (x, y)--(x, z) for every two distinct
neighbors y, z of x ("sibling" edges).  This is the 1-skeleton effect of
slicing the corners off a simplex-like polytope, kept purely combinatorial:
no coordinates, no convex hulls.

Starting from the complete graph on r+1 labeled points and truncating k-1
times yields a graph whose vertices are canonically labeled by all length-k
Hanoi states over {0..r}; verify_isomorphism certifies that labeling against
the move-level adjacency, sibling edges matching adjustments and partner
edges matching involutions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .graph import ExplicitGraph
from .hanoi import (
    DEFAULT_STATE_CAP,
    HanoiParams,
    State,
    TooLarge,
    enumerate_states,
    format_state,
    make_state,
    neighbors,
)


class EmptyGraph(ValueError):
    """Truncation needs at least one edge."""


class WrongShape(ValueError):
    """Labeled graph does not match the given Hanoi parameters."""


@dataclass(frozen=True)
class LabeledGraph:
    """A graph whose vertices carry distinct Hanoi states of uniform length."""

    graph: ExplicitGraph
    states: tuple[State, ...]
    r: int

    def __post_init__(self) -> None:
        if len(self.states) != self.graph.n:
            raise ValueError("one state per vertex required")
        if len(set(self.states)) != len(self.states):
            raise ValueError("states are not distinct")
        params = HanoiParams(self.r, self.k, proper=False)
        for s in self.states:
            make_state(s, params)

    @property
    def k(self) -> int:
        return len(self.states[0])


def base_simplex(r: int) -> LabeledGraph:
    """K_{r+1} with vertex i labeled by the length-1 state (i)."""
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    iu, iv = np.triu_indices(r + 1, k=1)
    states = tuple((i,) for i in range(r + 1))
    graph = ExplicitGraph.from_edges(
        r + 1, np.column_stack([iu, iv]), [format_state(s) for s in states]
    )
    return LabeledGraph(graph=graph, states=states, r=r)


def truncate_once(t: LabeledGraph) -> LabeledGraph:
    """One truncation step; the new label of (x, y) is x extended by y's last entry."""
    g = t.graph
    if g.m == 0:
        raise EmptyGraph("cannot truncate a graph with no edges")
    pairs: list[tuple[int, int]] = []
    pair_id: dict[tuple[int, int], int] = {}
    for u in range(g.n):
        for w in g.neighbors_of(u):
            pair_id[(u, int(w))] = len(pairs)
            pairs.append((u, int(w)))
    edges: list[tuple[int, int]] = []
    for u, w in pairs:
        if u < w:
            edges.append((pair_id[(u, w)], pair_id[(w, u)]))
    for u in range(g.n):
        nbrs = [int(w) for w in g.neighbors_of(u)]
        for y, z in combinations(nbrs, 2):
            edges.append((pair_id[(u, y)], pair_id[(u, z)]))
    states = tuple(t.states[u] + (t.states[w][-1],) for u, w in pairs)
    graph = ExplicitGraph.from_edges(
        len(pairs), np.array(edges, dtype=np.int64), [format_state(s) for s in states]
    )
    return LabeledGraph(graph=graph, states=states, r=t.r)


def iterate_truncation(r: int, k: int, cap: int = DEFAULT_STATE_CAP) -> LabeledGraph:
    """k-1 truncations of K_{r+1}: (r+1) * r^(k-1) vertices labeled by all length-k states."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    count = (r + 1) * r ** (k - 1)
    if count > cap:
        raise TooLarge(f"{count} vertices exceed the cap of {cap}")
    t = base_simplex(r)
    for _ in range(k - 1):
        t = truncate_once(t)
    return t


def verify_isomorphism(t: LabeledGraph, params: HanoiParams) -> bool:
    """Certify the canonical label map of a truncation against the Hanoi graph.

    True iff the labels are exactly the full state set, every edge joins two
    states one move apart, and both sides are r-regular (edge-injectivity plus
    equal regular degree forces edge-surjectivity).  Uses only the canonical
    labels, never isomorphism search.
    """
    if params.proper:
        raise WrongShape("truncations are labeled by the full state set, not proper states")
    if params.r != t.r or params.k != t.k:
        raise WrongShape(
            f"labels have (r, k) = ({t.r}, {t.k}), params say ({params.r}, {params.k})"
        )
    if sorted(t.states) != enumerate_states(params):
        return False
    degs = t.graph.degrees()
    if degs.size and (degs != params.r).any():
        return False
    for u in range(t.graph.n):
        moves = set(neighbors(t.states[u], params))
        if len(moves) != params.r:
            return False
        for w in t.graph.neighbors_of(u):
            if u < w and t.states[int(w)] not in moves:
                return False
    return True
