"""Simple undirected graphs on dense integer ids, plus generators and edge-list I/O."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


class GraphFormatError(ValueError):
    """Edge-list text that cannot be turned into a simple graph."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. Vertices are ``0..n-1``; ``adj[v]`` is sorted."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def closed_neighborhood(self, v: int) -> tuple[int, ...]:
        return tuple(sorted((v, *self.adj[v])))

    def check(self) -> None:
        """Raise ``AssertionError`` unless symmetry, no loops and no duplicates hold."""
        for v, row in enumerate(self.adj):
            assert v not in row, f"self-loop at {v}"
            assert list(row) == sorted(set(row)), f"unsorted or duplicate neighbors at {v}"
            for u in row:
                assert 0 <= u < self.n, f"neighbor {u} of {v} out of range"
                assert v in self.adj[u], f"asymmetric edge {v}-{u}"


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines into a graph.

    Lines starting with ``#`` and blank lines are skipped. An optional
    ``n <count>`` header fixes the vertex count; otherwise it is one more
    than the largest id seen. Repeated edges collapse, self-loops are rejected.
    """
    n_header: int | None = None
    edges: list[tuple[int, int]] = []
    max_id = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if len(parts) != 2 or not parts[1].isdigit():
                raise GraphFormatError(f"malformed header {line!r}", lineno)
            if n_header is not None or edges:
                raise GraphFormatError("'n' header must come before any edge", lineno)
            n_header = int(parts[1])
            continue
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphFormatError(f"expected 'u v' with nonnegative integers, got {line!r}", lineno)
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise GraphFormatError(f"self-loop on vertex {u}", lineno)
        if n_header is not None and max(u, v) >= n_header:
            raise GraphFormatError(f"vertex id {max(u, v)} exceeds header n={n_header}", lineno)
        edges.append((u, v))
        max_id = max(max_id, u, v)
    n = n_header if n_header is not None else max_id + 1
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    """Inverse of :func:`parse_edge_list`.

    The ``n`` header is written only when trailing isolated vertices make it necessary.
    """
    edges = g.edges()
    lines = [f"{u} {v}" for u, v in edges]
    if g.n != 1 + max((v for _, v in edges), default=-1):
        lines.insert(0, f"n {g.n}")
    return "".join(line + "\n" for line in lines)


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def max_degree(g: Graph) -> int:
    return max((len(a) for a in g.adj), default=0)


def ball(g: Graph, v: int, radius: int) -> list[int]:
    """Sorted ids of every vertex within ``radius`` hops of ``v`` (BFS)."""
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} not in graph with n={g.n}")
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    seen = {v}
    frontier = [v]
    for _ in range(radius):
        nxt = []
        for x in frontier:
            for y in g.adj[x]:
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        if not nxt:
            break
        frontier = nxt
    return sorted(seen)


def bfs_distances(g: Graph, source: int) -> list[float]:
    dist = [float("inf")] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if dist[y] == float("inf"):
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def induced_subgraph(g: Graph, s: Sequence[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph on ``s`` relabelled ``0..|s|-1`` in increasing old-id order.

    Returns the graph and the old->new id map.
    """
    keep = sorted(set(s))
    for v in keep:
        if not 0 <= v < g.n:
            raise IndexError(f"vertex {v} not in graph with n={g.n}")
    new_id = {old: i for i, old in enumerate(keep)}
    adj = tuple(tuple(new_id[u] for u in g.adj[old] if u in new_id) for old in keep)
    return Graph(len(keep), adj), new_id


# --- generators -------------------------------------------------------------

def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    # n < 3 has no simple cycle; degrade to the path
    if n < 3:
        return path_graph(n)
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def star_graph(leaves: int) -> Graph:
    """Center 0 joined to leaves ``1..leaves``."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def grid_graph(rows: int, cols: int) -> Graph:
    def vid(r, c):
        return r * cols + c

    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((vid(r, c), vid(r, c + 1)))
            if r + 1 < rows:
                edges.append((vid(r, c), vid(r + 1, c)))
    return Graph.from_edges(rows * cols, edges)


def gnp_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p). Pairs (i, j), i < j, are drawn in row-major order."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    if n < 2:
        return Graph.from_edges(max(n, 0), ())
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    mask = rng.random(iu.shape[0]) < p
    return _from_arrays(n, iu[mask], ju[mask])


def near_regular_graph(n: int, d: int, seed: int) -> Graph:
    """Union of random matchings: max degree <= d, most vertices exactly d.

    Each round randomly pairs up the vertices still below degree ``d``; pairs
    that would repeat an edge are dropped. After ``4 * d`` rounds a few
    vertices may still fall short.
    """
    if d < 0 or (n > 0 and d >= n):
        raise ValueError(f"need 0 <= d < n, got n={n}, d={d}")
    rng = np.random.default_rng(seed)
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for _ in range(4 * d):
        open_ = [v for v in range(n) if len(nbrs[v]) < d]
        if len(open_) < 2:
            break
        perm = rng.permutation(open_).tolist()
        for i in range(0, len(perm) - 1, 2):
            u, v = perm[i], perm[i + 1]
            if v not in nbrs[u]:
                nbrs[u].add(v)
                nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def layer_trap_graph(m: int, hubs: int = 1) -> Graph:
    """Graph on which greedy layering runs for ``m`` layers and leaves the hubs behind.

    Ids ``0..m-1`` are the a-vertices, ``m..2m-1`` the b-vertices (a clique),
    and ``2m..2m+hubs-1`` hub vertices joined to every b. a_j is joined to
    b_0..b_j, so layer i picks a_i alone and removes only b_i.
    """
    edges = []
    b = lambda i: m + i  # noqa: E731
    for i in range(m):
        for j in range(i + 1, m):
            edges.append((b(i), b(j)))
        for j in range(i, m):
            edges.append((j, b(i)))
        for h in range(hubs):
            edges.append((2 * m + h, b(i)))
    return Graph.from_edges(2 * m + hubs, edges)


def _from_arrays(n: int, us, vs) -> Graph:
    rows: list[list[int]] = [[] for _ in range(n)]
    for u, v in zip(us.tolist(), vs.tolist()):
        rows[u].append(v)
        rows[v].append(u)
    return Graph(n, tuple(tuple(sorted(r)) for r in rows))


GENERATORS = {
    "path": (path_graph, (int,)),
    "cycle": (cycle_graph, (int,)),
    "complete": (complete_graph, (int,)),
    "star": (star_graph, (int,)),
    "grid": (grid_graph, (int, int)),
    "gnp": (gnp_graph, (int, float, int)),
    "regular": (near_regular_graph, (int, int, int)),
    "trap": (layer_trap_graph, (int, int)),
}


def generate(kind: str, *args) -> Graph:
    """Build a graph by generator name, e.g. ``generate("gnp", 100, 0.1, 42)``.

    Arguments may be strings (as from a command line); they are coerced.
    """
    try:
        fn, types = GENERATORS[kind]
    except KeyError:
        raise ValueError(f"unknown graph kind {kind!r}; choose from {sorted(GENERATORS)}") from None
    if kind == "trap" and len(args) == 1:
        args = (*args, 1)
    if len(args) != len(types):
        raise ValueError(f"{kind} takes {len(types)} arguments, got {len(args)}")
    try:
        vals = [t(a) for t, a in zip(types, args)]
    except (TypeError, ValueError) as exc:
        raise ValueError(f"bad arguments for {kind}: {args}") from exc
    for t, v in zip(types, vals):
        if t is int and v < 0:
            raise ValueError(f"{kind} arguments must be nonnegative, got {v}")
    return fn(*vals)
