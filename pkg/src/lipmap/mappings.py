"""Vertex-to-integer mappings and their validity predicates.

A mapping assigns an integer to every vertex, one designated root vertex
is pinned to 0, and every edge moves by at most `m` (the step bound); the
strong variant makes every edge move by exactly `m`.  Partial mappings
are plain ``dict[int, int]``.
"""

from dataclasses import dataclass

from .errors import InputError
from .graph import Graph, bfs_distances, bipartition, require_connected


@dataclass(frozen=True)
class FullMapping:
    """A total assignment `values` with `values[root] == 0`."""

    values: tuple
    root: int

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if not self.values:
            raise InputError("mapping must cover at least one vertex")
        if not 0 <= self.root < len(self.values):
            raise InputError(f"root {self.root} out of range")
        if self.values[self.root] != 0:
            raise InputError(f"root {self.root} must map to 0")

    def __len__(self):
        return len(self.values)

    def __getitem__(self, v: int) -> int:
        return self.values[v]

    def agrees_with(self, prescribed: dict) -> bool:
        return all(self.values[v] == val for v, val in prescribed.items())


@dataclass(frozen=True)
class LipschitzParams:
    """Step bound `m` (>= 1) plus the strong-step flag."""

    m: int
    strong: bool = False

    def __post_init__(self):
        if self.m < 1:
            raise InputError(f"step bound must be >= 1, got {self.m}")


def check_prescription(g: Graph, prescribed: dict) -> None:
    """Raise InputError unless every prescribed vertex id is valid for g."""
    for v in prescribed:
        if not 0 <= v < g.n:
            raise InputError(f"prescribed vertex {v} out of range for n={g.n}")


def is_valid(g: Graph, f: FullMapping, params: LipschitzParams):
    """Check f against the edge rule of `params`.

    Returns ``(True, None)`` or ``(False, (u, v))`` with the first
    violated edge in lexicographic order.  The root-maps-to-zero rule is
    enforced by the FullMapping type itself.
    """
    require_connected(g)
    if len(f) != g.n:
        raise InputError(f"mapping covers {len(f)} vertices, graph has {g.n}")
    vals = f.values
    for u in range(g.n):
        fu = vals[u]
        for v in g.adj[u]:
            if v <= u:
                continue
            step = abs(fu - vals[v])
            if (step != params.m) if params.strong else (step > params.m):
                return False, (u, v)
    return True, None


def range_of(f: FullMapping) -> int:
    """Number of distinct values taken by f."""
    return len(set(f.values))


def span_of(f: FullMapping) -> int:
    """max(f) - min(f) + 1, the number of integers the image stretches over."""
    return max(f.values) - min(f.values) + 1


def strong_mapping_witness(g: Graph, root: int, m: int):
    """A strong m-step mapping rooted at `root`, or None.

    One exists exactly when the graph is bipartite: walking any odd cycle
    with steps of exactly ±m would have to return to its starting value
    after an odd number of sign flips.  The witness alternates 0 and m by
    distance parity from the root.
    """
    require_connected(g)
    LipschitzParams(m)
    if not 0 <= root < g.n:
        raise InputError(f"root {root} out of range for n={g.n}")
    sides, _ = bipartition(g)
    if sides is None:
        return None
    dist = bfs_distances(g, root)
    return FullMapping(tuple(m * (d % 2) for d in dist), root)


def is_widom_rowlinson(g: Graph, f: FullMapping) -> bool:
    """Unit-step validity with image inside {-1, 0, 1} (at most 3 values)."""
    ok, _ = is_valid(g, f, LipschitzParams(1))
    return ok and range_of(f) <= 3 and set(f.values) <= {-1, 0, 1}
