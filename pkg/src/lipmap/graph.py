"""Undirected simple graphs and BFS-based distance utilities.

Vertices are dense 0-based integers.  Graphs are immutable once built;
`with_edge` returns a modified copy.  Distances are hop counts; vertex
pairs in different components get the sentinel ``UNREACHABLE``.
"""

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .errors import InputError, PreconditionError

UNREACHABLE = -1

# below this size the pure-Python BFS beats the scipy call overhead
_SCIPY_MIN_N = 64


class Graph:
    """An undirected simple graph on vertices ``0 .. n-1``.

    Rejects self-loops, parallel edges and out-of-range endpoints.
    Adjacency lists are kept sorted so that every traversal in the
    package is deterministic.
    """

    __slots__ = ("n", "m", "adj", "_adj_sets")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        sets = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if v in sets[u]:
                raise InputError(f"duplicate edge ({u},{v})")
            sets[u].add(v)
            sets[v].add(u)
            m += 1
        self.n = n
        self.m = m
        self.adj = tuple(tuple(sorted(s)) for s in sets)
        self._adj_sets = tuple(frozenset(s) for s in sets)

    def neighbors(self, v: int) -> tuple:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj_sets[u]

    def edges(self) -> list:
        """All edges as (u, v) pairs with u < v, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def non_edges(self) -> list:
        """All non-adjacent vertex pairs (u, v) with u < v."""
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if v not in self._adj_sets[u]
        ]

    def with_edge(self, u: int, v: int) -> "Graph":
        """A copy of this graph with the edge (u, v) added."""
        if self.has_edge(u, v):
            raise InputError(f"edge ({u},{v}) already present")
        return Graph(self.n, self.edges() + [(u, v)])

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs hop distances, ``UNREACHABLE`` (-1) between components."""

    n: int
    data: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.data.setflags(write=False)

    def __getitem__(self, uv) -> int:
        u, v = uv
        return int(self.data[u, v])

    def row(self, u: int) -> np.ndarray:
        return self.data[u]


def bfs_distances(g: Graph, source: int) -> list:
    """Hop distances from `source`; UNREACHABLE for other components."""
    if not 0 <= source < g.n:
        raise InputError(f"source {source} out of range for n={g.n}")
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        dv = dist[v]
        for w in g.adj[v]:
            if dist[w] == UNREACHABLE:
                dist[w] = dv + 1
                queue.append(w)
    return dist


def _apsp_python(g: Graph) -> np.ndarray:
    return np.array([bfs_distances(g, v) for v in range(g.n)], dtype=np.int64)


def _apsp_scipy(g: Graph) -> np.ndarray:
    from scipy.sparse import csr_matrix
    from scipy.sparse.csgraph import shortest_path

    n = g.n
    indptr = np.zeros(n + 1, dtype=np.int64)
    for v in range(n):
        indptr[v + 1] = indptr[v] + len(g.adj[v])
    indices = np.fromiter(
        (w for v in range(n) for w in g.adj[v]), dtype=np.int64, count=int(indptr[n])
    )
    mat = csr_matrix(
        (np.ones(len(indices), dtype=np.int8), indices, indptr), shape=(n, n)
    )
    d = shortest_path(mat, method="D", directed=False, unweighted=True)
    d[np.isinf(d)] = UNREACHABLE
    return d.astype(np.int64)


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex (compiled path for larger graphs)."""
    if g.n == 0:
        return DistanceMatrix(0, np.zeros((0, 0), dtype=np.int64))
    if g.n >= _SCIPY_MIN_N:
        return DistanceMatrix(g.n, _apsp_scipy(g))
    return DistanceMatrix(g.n, _apsp_python(g))


def is_connected(g: Graph) -> bool:
    if g.n < 1:
        raise PreconditionError("graph must have at least one vertex")
    return UNREACHABLE not in bfs_distances(g, 0)


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise PreconditionError("graph must be connected")


def diameter(g: Graph, dist: DistanceMatrix | None = None):
    """Return (diam, (u1, u2)) for a connected graph.

    The witness pair is the lexicographically smallest one attaining the
    diameter, so repeated runs agree byte for byte.
    """
    require_connected(g)
    if dist is None:
        dist = all_pairs_distances(g)
    data = dist.data
    if g.n == 1:
        return 0, (0, 0)
    diam = int(data.max())
    row_max = data.max(axis=1)
    u = int(np.argmax(row_max == diam))
    v = int(np.argmax(data[u] == diam))
    return diam, (u, v)


def bipartition(g: Graph):
    """Two-color the graph if possible.

    Returns ``(sides, None)`` with ``sides[v]`` in {0, 1} when bipartite,
    else ``(None, cycle)`` where `cycle` is an odd closed walk given as a
    vertex list: consecutive entries are adjacent and so are the last and
    first.  Works per component; each component's BFS root gets side 0.
    """
    side = [None] * g.n
    parent = [None] * g.n
    for start in range(g.n):
        if side[start] is not None:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if side[w] is None:
                    side[w] = 1 - side[v]
                    parent[w] = v
                    queue.append(w)
                elif side[w] == side[v]:
                    return None, _odd_cycle(parent, v, w)
    return side, None


def _odd_cycle(parent, u, v):
    # walk both endpoints of the offending edge up to their meeting point
    path_u, path_v = [u], [v]
    seen = {u: 0}
    x = u
    while parent[x] is not None:
        x = parent[x]
        seen[x] = len(path_u)
        path_u.append(x)
    x = v
    while x not in seen:
        x = parent[x]
        path_v.append(x)
    path_u = path_u[: seen[x] + 1]
    # u .. lca .. v, closed by the edge (v, u)
    return path_u + path_v[-2::-1]


def is_clique_union(g: Graph):
    """Decide whether every connected component is a complete graph.

    Equivalent to having no induced two-edge star: returns
    ``(False, (center, a, b))`` with a, b non-adjacent neighbors of
    `center` as soon as one is found (smallest such triple), else
    ``(True, None)``.
    """
    for center in range(g.n):
        nbrs = g.adj[center]
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1 :]:
                if not g.has_edge(a, b):
                    return False, (center, a, b)
    return True, None
