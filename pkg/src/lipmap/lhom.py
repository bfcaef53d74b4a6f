"""List homomorphisms into integer-threshold targets.

The target graph has vertices -bound..bound; a, b are adjacent when
|a - b| <= m (loops included), or exactly |a - b| == m in the strong
variant (loopless).  Extension instances translate into list constraints:
prescribed vertices get singleton lists, free vertices the full target.

The solver runs arc-consistency propagation to a fixpoint and then
assigns values closest to zero first, re-propagating after each pin.
A chronological backtrack handles the rare instances (strong rule on
cycles) where a locally consistent pin is still globally wrong.
"""

from bisect import bisect_left
from collections import deque
from dataclasses import dataclass

from .errors import InputError
from .graph import Graph
from .mappings import FullMapping, LipschitzParams, check_prescription


@dataclass(frozen=True)
class LHomInstance:
    source: Graph
    target_bound: int
    m: int
    strong: bool
    lists: tuple  # one frozenset of admissible integers per source vertex

    def target_adjacent(self, a: int, b: int) -> bool:
        return abs(a - b) == self.m if self.strong else abs(a - b) <= self.m

    def serialize(self) -> str:
        """Header "bound m strong", then one "v list" line per vertex;
        contiguous lists print as "lo..hi", others as "{a,b,c}"."""
        lines = [f"{self.target_bound} {self.m} {int(self.strong)}"]
        for v, lst in enumerate(self.lists):
            vals = sorted(lst)
            if vals and vals[-1] - vals[0] + 1 == len(vals):
                lines.append(f"{v} {vals[0]}..{vals[-1]}")
            else:
                lines.append(f"{v} {{{','.join(map(str, vals))}}}")
        return "\n".join(lines) + "\n"


def parse_instance(text: str, source: Graph) -> LHomInstance:
    """Inverse of LHomInstance.serialize for the same source graph."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InputError("empty instance text")
    head = lines[0].split()
    if len(head) != 3:
        raise InputError(f"bad instance header: {lines[0]!r}")
    bound, m, strong = int(head[0]), int(head[1]), head[2] not in ("0", "")
    if len(lines) - 1 != source.n:
        raise InputError(f"instance has {len(lines) - 1} lists, graph has {source.n} vertices")
    lists = [None] * source.n
    for ln in lines[1:]:
        v_str, spec = ln.split(None, 1)
        v = int(v_str)
        if not 0 <= v < source.n or lists[v] is not None:
            raise InputError(f"bad or repeated vertex in instance line: {ln!r}")
        spec = spec.strip()
        if spec.startswith("{"):
            body = spec.strip("{}")
            vals = frozenset(int(x) for x in body.split(",")) if body else frozenset()
        else:
            a, b = spec.split("..")
            vals = frozenset(range(int(a), int(b) + 1))
        lists[v] = vals
    return LHomInstance(source, bound, m, strong, tuple(lists))


def build_instance(g: Graph, prescribed: dict, m: int, strong: bool = False,
                   bound: int | None = None) -> LHomInstance:
    """Lists for the extension problem: singletons at prescribed vertices,
    the full target elsewhere.  Prescribed values must fit in the target."""
    LipschitzParams(m, strong)
    check_prescription(g, prescribed)
    if bound is None:
        bound = g.n
    full = frozenset(range(-bound, bound + 1))
    for v, val in prescribed.items():
        if abs(val) > bound:
            raise InputError(
                f"prescribed value {val} at vertex {v} outside target [-{bound},{bound}]")
    lists = tuple(
        frozenset((prescribed[v],)) if v in prescribed else full
        for v in range(g.n)
    )
    return LHomInstance(g, bound, m, strong, lists)


def _supported(a, dom_sorted, dom_set, m, strong):
    if strong:
        return (a - m) in dom_set or (a + m) in dom_set
    i = bisect_left(dom_sorted, a - m)
    return i < len(dom_sorted) and dom_sorted[i] <= a + m


def propagate(instance: LHomInstance, domains=None):
    """Arc-consistency fixpoint; returns per-vertex sorted value lists
    (possibly empty).  Deterministic worklist order."""
    g = instance.source
    m, strong = instance.m, instance.strong
    doms = [sorted(d) for d in (instance.lists if domains is None else domains)]
    sets = [set(d) for d in doms]
    queue = deque((u, v) for u in range(g.n) for v in g.adj[u])
    in_queue = set(queue)
    while queue:
        arc = queue.popleft()
        in_queue.discard(arc)
        u, v = arc
        kept = [a for a in doms[u] if _supported(a, doms[v], sets[v], m, strong)]
        if len(kept) != len(doms[u]):
            doms[u] = kept
            sets[u] = set(kept)
            if not kept:
                break  # an empty domain dooms the instance; stop early
            for w in g.adj[u]:
                if w != v and (w, u) not in in_queue:
                    queue.append((w, u))
                    in_queue.add((w, u))
    return doms


def _search(instance, doms):
    doms = propagate(instance, doms)
    if any(not d for d in doms):
        return None
    v = next((u for u, d in enumerate(doms) if len(d) > 1), None)
    if v is None:
        return tuple(d[0] for d in doms)
    for c in sorted(doms[v], key=lambda k: (abs(k), k < 0)):
        pinned = list(doms)
        pinned[v] = [c]
        res = _search(instance, pinned)
        if res is not None:
            return res
    return None


def solve(instance: LHomInstance, require_zero: bool = False):
    """A list-respecting homomorphism, or None.

    With `require_zero` the result is a FullMapping rooted at the
    smallest vertex that can be pinned to 0 (candidates tried in
    ascending order); otherwise a plain value tuple.
    """
    base = propagate(instance)
    if any(not d for d in base):
        return None
    if not require_zero:
        return _search(instance, base)
    for v in range(instance.source.n):
        if 0 in instance.lists[v] and 0 in set(base[v]):
            pinned = list(base)
            pinned[v] = [0]
            res = _search(instance, pinned)
            if res is not None:
                return FullMapping(res, v)
    return None
