"""Exhaustive enumeration of step-bounded mappings on small graphs.

Deliberately simple backtracking, kept independent from the polynomial
algorithms so the two routes can be checked against each other.  Every
enumeration is budgeted; exceeding the budget raises rather than
silently truncating.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetExceededError, PreconditionError
from .graph import Graph, bfs_distances, require_connected
from .mappings import FullMapping, LipschitzParams, check_prescription

DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True)
class EnumerationStats:
    """Aggregates over one enumeration run (avg_range is exact)."""

    count: int
    avg_range: Fraction
    max_range_distinct: int
    max_span: int


class _Budget:
    __slots__ = ("left",)

    def __init__(self, limit):
        self.left = limit

    def spend(self):
        self.left -= 1
        if self.left < 0:
            raise BudgetExceededError("enumeration budget exceeded")


def _candidates(g: Graph, root: int, m: int, strong: bool, prescribed: dict):
    """Per-vertex value lists, ascending.

    Any rooted mapping satisfies |f(v)| <= m * d(root, v): walk a shortest
    path from the root and add up per-edge steps.  Strong mappings
    additionally keep f(v) congruent to m * d(root, v) modulo 2m, since
    every step is exactly +-m.
    """
    dist = bfs_distances(g, root)
    cand = []
    for v in range(g.n):
        reach = m * dist[v]
        if strong:
            vals = range(-reach, reach + 1, 2 * m) if reach else (0,)
        else:
            vals = range(-reach, reach + 1)
        if v in prescribed:
            pv = prescribed[v]
            vals = (pv,) if pv in vals else ()
        cand.append(list(vals))
    return cand


def _enumerate_raw(g, root, m, strong, prescribed, budget):
    """Yield value tuples in lexicographic order (vertex-id positions)."""
    n = g.n
    cand = _candidates(g, root, m, strong, prescribed)
    lower_nbrs = [[u for u in g.adj[v] if u < v] for v in range(n)]
    vals = [0] * n

    def rec(i):
        if i == n:
            budget.spend()
            yield tuple(vals)
            return
        for c in cand[i]:
            for u in lower_nbrs[i]:
                step = c - vals[u]
                if (step != m and step != -m) if strong else (step > m or step < -m):
                    break
            else:
                vals[i] = c
                yield from rec(i + 1)

    yield from rec(0)


def enumerate_mappings(g: Graph, root: int, m: int, strong: bool = False,
                       budget: int = DEFAULT_BUDGET):
    """All valid mappings rooted at `root`, lexicographic in the value tuple."""
    require_connected(g)
    LipschitzParams(m, strong)
    if not 0 <= root < g.n:
        raise PreconditionError(f"root {root} out of range for n={g.n}")
    b = _Budget(budget)
    for vals in _enumerate_raw(g, root, m, strong, {}, b):
        yield FullMapping(vals, root)


def stats(g: Graph, root: int, m: int, strong: bool = False,
          budget: int = DEFAULT_BUDGET) -> EnumerationStats:
    """Count / average range / max distinct range / max span in one sweep."""
    require_connected(g)
    LipschitzParams(m, strong)
    if not 0 <= root < g.n:
        raise PreconditionError(f"root {root} out of range for n={g.n}")
    b = _Budget(budget)
    count = 0
    range_sum = 0
    max_distinct = 0
    max_span = 0
    for vals in _enumerate_raw(g, root, m, strong, {}, b):
        count += 1
        distinct = len(set(vals))
        range_sum += distinct
        if distinct > max_distinct:
            max_distinct = distinct
        span = max(vals) - min(vals) + 1
        if span > max_span:
            max_span = span
    avg = Fraction(range_sum, count) if count else Fraction(0)
    return EnumerationStats(count, avg, max_distinct, max_span)


def brute_extendable(g: Graph, prescribed: dict, m: int, strong: bool = False,
                     budget: int = DEFAULT_BUDGET):
    """First enumerated mapping agreeing with `prescribed`, or None.

    Roots are tried in ascending order; the prescription prunes the
    search directly, which changes nothing about which mapping comes
    first among the agreeing ones.
    """
    require_connected(g)
    LipschitzParams(m, strong)
    check_prescription(g, prescribed)
    b = _Budget(budget)
    for root in range(g.n):
        if root in prescribed and prescribed[root] != 0:
            continue
        for vals in _enumerate_raw(g, root, m, strong, prescribed, b):
            return FullMapping(vals, root)
    return None


def enumerate_extensions(g: Graph, prescribed: dict, m: int, strong: bool = False,
                         budget: int = DEFAULT_BUDGET):
    """All distinct full mappings extending `prescribed`, every root tried.

    A mapping with several zero vertices is reported once, rooted at the
    smallest root under which it was first enumerated.
    """
    require_connected(g)
    LipschitzParams(m, strong)
    check_prescription(g, prescribed)
    b = _Budget(budget)
    seen = set()
    for root in range(g.n):
        if root in prescribed and prescribed[root] != 0:
            continue
        for vals in _enumerate_raw(g, root, m, strong, prescribed, b):
            if vals not in seen:
                seen.add(vals)
                yield FullMapping(vals, root)


def count_monotonicity_check(g: Graph, m: int, root: int = 0,
                             budget: int = DEFAULT_BUDGET) -> bool:
    """Adding any single edge never increases the rooted mapping count.

    Checks count(g) >= count(g + e) for every non-edge e, with the given
    fixed root.  Vacuously true on complete graphs.
    """
    require_connected(g)
    base = stats(g, root, m, budget=budget).count
    for u, v in g.non_edges():
        if stats(g.with_edge(u, v), root, m, budget=budget).count > base:
            return False
    return True
