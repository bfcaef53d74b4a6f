"""Extensions hitting a prescribed number of distinct values.

The search enumerates value windows [a, b] containing 0, forces the
endpoints to be attained by pinning them onto free vertices when no
prescription already provides them, and reuses the windowed greedy
extender.  With unit steps the image of a connected graph is a
contiguous integer interval, so hitting both window endpoints pins the
range exactly and the procedure is complete.  For larger step bounds it
is a witness search backed by the exhaustive oracle on small graphs.
"""

from dataclasses import dataclass

from .errors import BudgetExceededError, InputError
from .extend import ExtensionResult, extend_general
from .graph import Graph, all_pairs_distances, diameter, require_connected
from .mappings import FullMapping, LipschitzParams, check_prescription, range_of
from . import oracle

ORACLE_FALLBACK_MAX_N = 12


@dataclass(frozen=True)
class FixedRangeResult:
    """`mapping` is a witness when found; `decided` says whether absence
    is definitive (unit steps and oracle-backed runs) or open."""

    mapping: FullMapping | None
    decided: bool

    @property
    def found(self) -> bool:
        return self.mapping is not None

    @property
    def unknown(self) -> bool:
        return self.mapping is None and not self.decided

    def __bool__(self):
        return self.found


_ABSENT = FixedRangeResult(None, True)
_UNKNOWN = FixedRangeResult(None, False)


def _window_runs(g, prescribed, m, width, dist):
    """Yield witnesses of windowed extensions, smallest (a, pin vertices)
    first.  Pins are added only for endpoints no prescription attains."""
    prescribed_values = set(prescribed.values())
    free = [v for v in range(g.n) if v not in prescribed]
    for a in range(-(width - 1), 1):
        b = a + width - 1
        if any(not a <= val <= b for val in prescribed.values()):
            continue
        targets = [t for t in dict.fromkeys((a, b)) if t not in prescribed_values]
        if len(targets) == 0:
            pin_choices = [{}]
        elif len(targets) == 1:
            pin_choices = ({v: targets[0]} for v in free)
        else:
            pin_choices = (
                {va: targets[0], vb: targets[1]}
                for va in free for vb in free if vb != va
            )
        for pins in pin_choices:
            res = extend_general(g, {**prescribed, **pins}, m,
                                 window=(a, b), dist=dist)
            if res.extended:
                yield res.mapping


def fixed_range_extend(g: Graph, prescribed: dict, m: int, r: int, *,
                       oracle_max_n: int = ORACLE_FALLBACK_MAX_N,
                       budget: int = oracle.DEFAULT_BUDGET) -> FixedRangeResult:
    """Search for an extension taking exactly `r` distinct values.

    Unit steps: complete (found or definitively absent).  Larger steps:
    window search first; if it misses, graphs up to `oracle_max_n`
    vertices fall back to exhaustive enumeration, larger ones report
    unknown rather than guessing.
    """
    require_connected(g)
    LipschitzParams(m)
    check_prescription(g, prescribed)
    if r < 1:
        raise InputError(f"target range must be >= 1, got {r}")
    dist = all_pairs_distances(g)
    diam, _ = diameter(g, dist)
    if r > m * (diam + 1) or r > g.n:
        return _ABSENT

    if m == 1:
        for witness in _window_runs(g, prescribed, 1, r, dist):
            assert range_of(witness) == r  # contiguous image hits both pins
            return FixedRangeResult(witness, True)
        return _ABSENT

    for width in range(r, m * diam + 2):
        for witness in _window_runs(g, prescribed, m, width, dist):
            if range_of(witness) == r:
                return FixedRangeResult(witness, True)
    if g.n <= oracle_max_n:
        try:
            for f in oracle.enumerate_extensions(g, prescribed, m, budget=budget):
                if range_of(f) == r:
                    return FixedRangeResult(f, True)
            return _ABSENT
        except BudgetExceededError:
            return _UNKNOWN
    return _UNKNOWN


def max_range_extend(g: Graph, prescribed: dict, m: int, *,
                     linear_scan: bool = False,
                     oracle_max_n: int = ORACLE_FALLBACK_MAX_N,
                     budget: int = oracle.DEFAULT_BUDGET):
    """Largest achievable distinct-value count over all extensions.

    Returns (r, witness) or None when nothing extends `prescribed`.
    Unit steps use binary search: the feasible counts form a contiguous
    block, since any extension whose image sticks out past both the
    prescriptions and 0 can be flattened by one level.  `linear_scan`
    instead walks candidate counts downward (always used for m >= 2,
    where the reported maximum is the best witness found unless the
    oracle fallback applies).
    """
    require_connected(g)
    LipschitzParams(m)
    check_prescription(g, prescribed)
    dist = all_pairs_distances(g)
    base = extend_general(g, prescribed, m, dist=dist)
    if not base.extended:
        return None
    best_r, best = range_of(base.mapping), base.mapping
    diam, _ = diameter(g, dist)
    hi = min(m * (diam + 1), g.n)

    if m == 1 and not linear_scan:
        lo = best_r
        while lo < hi:
            mid = (lo + hi + 1) // 2
            res = fixed_range_extend(g, prescribed, m, mid,
                                     oracle_max_n=oracle_max_n, budget=budget)
            if res.found:
                lo, best = mid, res.mapping
            else:
                hi = mid - 1
        return lo, best

    for r in range(hi, best_r, -1):
        res = fixed_range_extend(g, prescribed, m, r,
                                 oracle_max_n=oracle_max_n, budget=budget)
        if res.found:
            return r, res.mapping
    return best_r, best
