"""Shared oracle helpers: pure-dict adjacency and BFS, independent of the library's
CSR structures and of scipy, so production distance machinery is checked against
a second route everywhere it matters."""

from __future__ import annotations

from collections import deque

from dug import HanoiParams, State, enumerate_states, neighbors


def move_adjacency(params: HanoiParams) -> dict[State, list[State]]:
    """Adjacency of the state graph straight from the move rules."""
    return {s: neighbors(s, params) for s in enumerate_states(params)}


def oracle_distances(adj: dict, source) -> dict:
    """Plain dict/deque BFS; unreachable states are absent from the result."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        dv = dist[v] + 1
        for w in adj[v]:
            if w not in dist:
                dist[w] = dv
                queue.append(w)
    return dist


def oracle_all_pairs(adj: dict) -> dict:
    return {s: oracle_distances(adj, s) for s in adj}
