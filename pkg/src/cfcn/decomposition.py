"""Maximal distance-3+ sets and the A/B/C split they induce."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph


class ConsistencyError(RuntimeError):
    """A structural guarantee of the construction failed to hold."""


@dataclass(frozen=True)
class AbcPartition:
    a: tuple[int, ...]
    b: tuple[int, ...]
    c: tuple[int, ...]


def maximal_distance3_set(g: Graph) -> list[int]:
    """Greedy maximal set of vertices with pairwise distance >= 3.

    Scans ids in ascending order. A vertex is taken unless some earlier pick
    lies within two hops, which is tracked by marking each pick's radius-2 ball.
    """
    blocked = bytearray(g.n)
    chosen = []
    adj = g.adj
    for v in range(g.n):
        if blocked[v]:
            continue
        chosen.append(v)
        blocked[v] = 1
        for u in adj[v]:
            blocked[u] = 1
            for w in adj[u]:
                blocked[w] = 1
    return chosen


def partition_abc(g: Graph, a) -> AbcPartition:
    """Split V into A, B = N(A) minus A, and C = the rest, checking both observations.

    Raises ConsistencyError naming the first vertex where a B-vertex does not
    have exactly one A-neighbour, or a C-vertex has no B-neighbour.
    """
    in_a = bytearray(g.n)
    for v in a:
        in_a[v] = 1
    a_nbrs = [0] * g.n
    for v in a:
        for u in g.adj[v]:
            a_nbrs[u] += 1
    b, c = [], []
    for v in range(g.n):
        if in_a[v]:
            if a_nbrs[v]:
                raise ConsistencyError(f"A is not independent: vertex {v} has a neighbour in A")
        elif a_nbrs[v]:
            if a_nbrs[v] != 1:
                raise ConsistencyError(f"vertex {v} in B has {a_nbrs[v]} neighbours in A, expected 1")
            b.append(v)
        else:
            c.append(v)
    in_b = bytearray(g.n)
    for v in b:
        in_b[v] = 1
    for v in c:
        if not any(in_b[u] for u in g.adj[v]):
            raise ConsistencyError(f"vertex {v} in C has no neighbour in B")
    return AbcPartition(tuple(sorted(a)), tuple(b), tuple(c))
