"""Extending partial mappings to full rooted step-bounded mappings.

A partial mapping f' extends to a full mapping iff either

  (a) f' is m-reachable (|f'(u) - f'(v)| <= m * d(u, v) for all assigned
      pairs) and some assigned vertex carries 0, or
  (b) some free vertex r can take 0 so that f' + {r: 0} is m-reachable.

`extend_on_tree` runs interval propagation along tree edges;
`extend_general` works on any connected graph by intersecting distance
balls around the assigned vertices.  Both produce witnesses; failures
carry a machine-readable reason.
"""

import heapq
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import InputError, PreconditionError
from .graph import DistanceMatrix, Graph, all_pairs_distances, bipartition, \
    require_connected
from .mappings import FullMapping, LipschitzParams, check_prescription


class FailureReason(Enum):
    NOT_REACHABLE = "NOT_REACHABLE"
    NO_ROOT_CANDIDATE = "NO_ROOT_CANDIDATE"
    EMPTY_INTERVAL = "EMPTY_INTERVAL"
    PRESCRIBED_CONFLICT = "PRESCRIBED_CONFLICT"
    NOT_BIPARTITE = "NOT_BIPARTITE"


@dataclass(frozen=True)
class ExtensionResult:
    """EXTENDED carries a mapping; NOT_EXTENDABLE carries reason + detail.

    `detail` holds the vertices the reason points at: the unreachable
    pair, the vertex whose interval emptied, the conflicting prescribed
    vertex/edge, or an odd cycle for NOT_BIPARTITE.
    """

    mapping: FullMapping | None
    reason: FailureReason | None = None
    detail: tuple = ()

    @property
    def extended(self) -> bool:
        return self.mapping is not None

    def __bool__(self):
        return self.extended

    @staticmethod
    def success(mapping: FullMapping) -> "ExtensionResult":
        return ExtensionResult(mapping)

    @staticmethod
    def failure(reason: FailureReason, detail: tuple = ()) -> "ExtensionResult":
        return ExtensionResult(None, reason, tuple(detail))


@dataclass(frozen=True)
class Interval:
    """Closed integer interval; the empty interval is represented as None."""

    lo: int
    hi: int

    def intersect(self, other: "Interval"):
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        return Interval(lo, hi) if lo <= hi else None

    def widen(self, m: int) -> "Interval":
        return Interval(self.lo - m, self.hi + m)

    def __contains__(self, k: int) -> bool:
        return self.lo <= k <= self.hi

    def min_abs_value(self) -> int:
        """The element closest to zero (ties cannot arise in an interval)."""
        if self.lo > 0:
            return self.lo
        if self.hi < 0:
            return self.hi
        return 0


def is_rooted(prescribed: dict) -> bool:
    """Some assigned vertex already carries the value 0."""
    return 0 in prescribed.values()


def is_m_reachable(prescribed: dict, dist: DistanceMatrix, m: int):
    """Pairwise feasibility of the assigned values against hop distances.

    Returns ``(True, None)`` or ``(False, (u, v))`` for the first pair
    (sorted order) with |f'(u) - f'(v)| > m * d(u, v).
    """
    LipschitzParams(m)
    items = sorted(prescribed.items())
    for i, (u, fu) in enumerate(items):
        for v, fv in items[i + 1 :]:
            d = dist[u, v]
            if d < 0:
                raise PreconditionError(f"vertices {u} and {v} are disconnected")
            if abs(fu - fv) > m * d:
                return False, (u, v)
    return True, None


def is_extendable(g: Graph, prescribed: dict, m: int,
                  dist: DistanceMatrix | None = None):
    """Decide extendability; returns (bool, chosen root or None).

    Tries the assigned zero vertices first, then free root candidates in
    ascending order.
    """
    require_connected(g)
    LipschitzParams(m)
    check_prescription(g, prescribed)
    if dist is None:
        dist = all_pairs_distances(g)
    ok, _ = is_m_reachable(prescribed, dist, m)
    if not ok:
        return False, None
    if is_rooted(prescribed):
        return True, min(v for v, val in prescribed.items() if val == 0)
    root = _free_root(g, prescribed, m, dist)
    return (True, root) if root is not None else (False, None)


def _free_root(g, prescribed, m, dist):
    """Smallest free vertex r keeping `prescribed` + {r: 0} m-reachable."""
    feasible = np.ones(g.n, dtype=bool)
    for c, val in prescribed.items():
        feasible &= abs(val) <= m * dist.row(c)
        feasible[c] = False
    idx = np.flatnonzero(feasible)
    return int(idx[0]) if idx.size else None


def _min_abs(lo: int, hi: int) -> int:
    if lo > 0:
        return lo
    if hi < 0:
        return hi
    return 0


def _clamp_bound(g, prescribed, m):
    # wide enough to never cut off a feasible value: any rooted mapping
    # stays within m*(n-1) of 0, and within m*(n-1) of every prescription
    extra = max((abs(v) for v in prescribed.values()), default=0)
    return m * (g.n - 1) + extra


def extend_on_tree(g: Graph, prescribed: dict, m: int) -> ExtensionResult:
    """Interval propagation for trees.

    Phases: (i) start from singleton intervals at prescribed vertices and
    a wide finite interval elsewhere; (ii) for every prescribed vertex c,
    intersect each interval P(v) with the ball [f'(c) - m*d(c,v),
    f'(c) + m*d(c,v)], tracking d by DFS depth; (iii) pick the smallest
    vertex whose interval contains 0 as root and propagate its ball
    around 0 the same way; (iv) any empty interval is a definitive
    failure; (v) assign values outward from the root by BFS, each vertex
    taking the value closest to zero in its interval intersected with
    parent value +- m.  Step (v) never dead-ends: integer intervals have
    the Helly property, and [f(parent) - m, f(parent) + m] meets every
    ball that makes up a nonempty P(child) pairwise.
    """
    require_connected(g)
    LipschitzParams(m)
    check_prescription(g, prescribed)
    if g.m != g.n - 1:
        raise PreconditionError(f"not a tree: n={g.n}, m={g.m}")

    # fast necessary check on adjacent prescribed pairs
    for u in sorted(prescribed):
        for v in g.adj[u]:
            if v > u and v in prescribed and abs(prescribed[u] - prescribed[v]) > m:
                return ExtensionResult.failure(FailureReason.PRESCRIBED_CONFLICT, (u, v))

    bound = _clamp_bound(g, prescribed, m)
    ivs: list = [
        Interval(prescribed[v], prescribed[v]) if v in prescribed
        else Interval(-bound, bound)
        for v in range(g.n)
    ]

    def propagate(start, center):
        # intersect every P(v) with the ball of radius m*depth around `center`
        seen = [False] * g.n
        seen[start] = True
        stack = [(start, Interval(center, center))]
        while stack:
            v, ball = stack.pop()
            if ivs[v] is not None:
                ivs[v] = ivs[v].intersect(ball)
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append((w, ball.widen(m)))

    for v in sorted(prescribed):
        propagate(v, prescribed[v])

    root = next((v for v in range(g.n) if ivs[v] is not None and 0 in ivs[v]), None)
    if root is None:
        return ExtensionResult.failure(FailureReason.NO_ROOT_CANDIDATE)
    propagate(root, 0)

    empty = next((v for v in range(g.n) if ivs[v] is None), None)
    if empty is not None:
        return ExtensionResult.failure(FailureReason.EMPTY_INTERVAL, (empty,))

    values = [0] * g.n
    assigned = [False] * g.n
    assigned[root] = True
    queue = [root]
    for v in queue:
        for w in g.adj[v]:
            if assigned[w]:
                continue
            iv = ivs[w].intersect(Interval(values[v] - m, values[v] + m))
            if iv is None:  # cannot happen once all intervals are nonempty
                return ExtensionResult.failure(FailureReason.EMPTY_INTERVAL, (w,))
            values[w] = iv.min_abs_value()
            assigned[w] = True
            queue.append(w)
    return ExtensionResult.success(FullMapping(tuple(values), root))


def extend_general(g: Graph, prescribed: dict, m: int, *,
                   window: tuple | None = None,
                   dist: DistanceMatrix | None = None) -> ExtensionResult:
    """Greedy ball-intersection extension for any connected graph.

    Keeps, for every vertex, the intersection of the value intervals
    [f(c) - m*d(c, v), f(c) + m*d(c, v)] over all currently assigned c,
    updated in O(n) per assignment from the distance matrix.  Vertices
    adjacent to the assigned region are taken in ascending id order and
    receive the value closest to zero in their interval; intervals of
    integers have the Helly property, so once the start set is
    m-reachable no interval ever empties.

    `window` optionally confines all values to a closed interval [a, b]
    with a <= 0 <= b (one more interval in the Helly family).
    """
    require_connected(g)
    LipschitzParams(m)
    check_prescription(g, prescribed)
    n = g.n
    if dist is None:
        dist = all_pairs_distances(g)

    if window is not None:
        a, b = window
        if a > 0 or b < 0:
            raise InputError(f"window [{a},{b}] must contain 0")
        conflict = next((v for v in sorted(prescribed)
                         if not a <= prescribed[v] <= b), None)
        if conflict is not None:
            return ExtensionResult.failure(FailureReason.PRESCRIBED_CONFLICT,
                                           (conflict,))

    ok, pair = is_m_reachable(prescribed, dist, m)
    if not ok:
        return ExtensionResult.failure(FailureReason.NOT_REACHABLE, pair)

    if is_rooted(prescribed):
        start = dict(prescribed)
        root = min(v for v, val in prescribed.items() if val == 0)
    else:
        root = _free_root(g, prescribed, m, dist)
        if root is None:
            return ExtensionResult.failure(FailureReason.NO_ROOT_CANDIDATE)
        start = dict(prescribed)
        start[root] = 0

    bound = _clamp_bound(g, prescribed, m)
    lo = np.full(n, -bound, dtype=np.int64)
    hi = np.full(n, bound, dtype=np.int64)
    if window is not None:
        np.maximum(lo, window[0], out=lo)
        np.minimum(hi, window[1], out=hi)

    values = [0] * n
    assigned = [False] * n
    frontier: list = []

    def assign(v, k):
        values[v] = k
        assigned[v] = True
        row = dist.row(v)
        np.maximum(lo, k - m * row, out=lo)
        np.minimum(hi, k + m * row, out=hi)
        for w in g.adj[v]:
            if not assigned[w]:
                heapq.heappush(frontier, w)

    for v in sorted(start):
        assign(v, start[v])
    while frontier:
        v = heapq.heappop(frontier)
        if assigned[v]:
            continue
        if lo[v] > hi[v]:  # unreachable given an m-reachable start set
            return ExtensionResult.failure(FailureReason.EMPTY_INTERVAL, (v,))
        assign(v, _min_abs(int(lo[v]), int(hi[v])))
    return ExtensionResult.success(FullMapping(tuple(values), root))


def extend_strong(g: Graph, prescribed: dict, m: int) -> ExtensionResult:
    """Extension where every edge must step by exactly m.

    Only bipartite graphs admit strong mappings, all values are multiples
    of m, and along any u-v path the scaled values must bridge the hop
    distance with matching parity.  Those filters run first; the
    remaining instances go to the list-homomorphism solver, whose target
    bound is widened to cover every value a strong mapping can take.
    """
    from . import lhom

    require_connected(g)
    LipschitzParams(m)
    check_prescription(g, prescribed)

    sides, odd = bipartition(g)
    if sides is None:
        return ExtensionResult.failure(FailureReason.NOT_BIPARTITE, tuple(odd))

    bound = m * (g.n - 1)
    for v in sorted(prescribed):
        if prescribed[v] % m != 0 or abs(prescribed[v]) > bound:
            return ExtensionResult.failure(FailureReason.PRESCRIBED_CONFLICT, (v,))

    dist = all_pairs_distances(g)
    scaled = {v: val // m for v, val in prescribed.items()}
    items = sorted(scaled.items())
    for i, (u, su) in enumerate(items):
        for v, sv in items[i + 1 :]:
            d = dist[u, v]
            if abs(su - sv) > d or (su - sv - d) % 2 != 0:
                return ExtensionResult.failure(FailureReason.NOT_REACHABLE, (u, v))

    instance = lhom.build_instance(g, prescribed, m, strong=True,
                                   bound=max(bound, 1))
    solution = lhom.solve(instance, require_zero=True)
    if solution is not None:
        return ExtensionResult.success(solution)

    domains = lhom.propagate(instance)
    empty = next((v for v in range(g.n) if not domains[v]), None)
    if empty is not None:
        return ExtensionResult.failure(FailureReason.EMPTY_INTERVAL, (empty,))
    # all remaining causes amount to "no vertex can be pinned to 0"
    return ExtensionResult.failure(FailureReason.NO_ROOT_CANDIDATE)
