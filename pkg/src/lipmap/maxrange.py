"""Maximum range of step-bounded mappings via the diameter formula.

The reported maximum is m * (diam + 1), attained for m = 1 by marching
distances away from one end of a diametral pair.  For m >= 2 the same
witness construction is returned, but its number of distinct values is
diam + 1 and its span is m * diam + 1; see the enumeration oracle for
measured maxima (`range_of` and `span_of` expose both readings).
"""

from .graph import Graph, bfs_distances, bipartition, diameter, require_connected
from .mappings import FullMapping, LipschitzParams


def max_range(g: Graph, m: int) -> int:
    require_connected(g)
    LipschitzParams(m)
    diam, _ = diameter(g)
    return m * (diam + 1)


def max_range_witness(g: Graph, m: int) -> FullMapping:
    """Mapping v -> m * d(r, v) from the smaller end r of the first
    diametral pair; valid, rooted at r, and takes diam + 1 distinct values."""
    require_connected(g)
    LipschitzParams(m)
    _, (r, _) = diameter(g)
    dist = bfs_distances(g, r)
    return FullMapping(tuple(m * d for d in dist), r)


def max_range_strong(g: Graph, m: int):
    """(m * (diam + 1), witness) for bipartite graphs, else None.

    On a bipartite graph adjacent vertices sit at distances from r that
    differ by exactly one, so the distance-marching witness steps by
    exactly m on every edge and doubles as a strong witness.
    """
    require_connected(g)
    LipschitzParams(m)
    sides, _ = bipartition(g)
    if sides is None:
        return None
    diam, (r, _) = diameter(g)
    dist = bfs_distances(g, r)
    return m * (diam + 1), FullMapping(tuple(m * d for d in dist), r)
