"""Command-line front end.

Graphs are plain text edge lists: an optional ``p <n> <m>`` header, one
``u v`` pair per line, ``#`` comments.  Partial and full mappings are
``vertex value`` lines.  Vertex ids may be sparse when no header is
given; they are renumbered internally and reported back unchanged.

Exit codes: 0 answered (negative answers included), 1 negative answer
under --status-exit, 2 bad input, 3 enumeration budget exceeded.
"""

import argparse
import json
import sys
from dataclasses import dataclass

from .errors import BudgetExceededError, InputError, LipmapError
from .extend import FailureReason, extend_general, extend_on_tree, extend_strong
from .graph import Graph
from .mappings import (FullMapping, LipschitzParams, is_valid,
                       is_widom_rowlinson, range_of)
from .maxrange import max_range, max_range_strong, max_range_witness
from .oracle import DEFAULT_BUDGET, enumerate_mappings, stats
from .range_extend import fixed_range_extend, max_range_extend
from . import lhom


@dataclass
class NamedGraph:
    """A parsed graph plus the original-id <-> internal-id translation."""

    graph: Graph
    names: tuple        # internal id -> original id
    index: dict         # original id -> internal id


def _read_lines(path: str):
    if path == "-":
        return sys.stdin.read().splitlines()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read().splitlines()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from exc


def _tokens(lines, path):
    for lineno, raw in enumerate(lines, start=1):
        text = raw.split("#", 1)[0].strip()
        if text:
            yield lineno, text.split(), f"{path}:{lineno}"


def parse_graph(lines, path="<graph>") -> NamedGraph:
    header = None
    raw_edges = []
    raw_edges_set = set()
    ids = set()
    for _, toks, where in _tokens(lines, path):
        if toks[0] == "p":
            if header is not None or raw_edges:
                raise InputError(f"{where}: header must be the first line")
            if len(toks) != 3:
                raise InputError(f"{where}: header must be 'p <n> <m>'")
            try:
                header = (int(toks[1]), int(toks[2]))
            except ValueError:
                raise InputError(f"{where}: non-integer header fields") from None
            continue
        if len(toks) != 2:
            raise InputError(f"{where}: expected 'u v'")
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise InputError(f"{where}: non-integer vertex id") from None
        if u < 0 or v < 0:
            raise InputError(f"{where}: vertex ids must be nonnegative")
        if u == v:
            raise InputError(f"{where}: self-loop at {u}")
        if header is not None and (u >= header[0] or v >= header[0]):
            raise InputError(f"{where}: vertex id beyond declared n={header[0]}")
        if (min(u, v), max(u, v)) in raw_edges_set:
            raise InputError(f"{where}: duplicate edge ({u},{v})")
        raw_edges_set.add((min(u, v), max(u, v)))
        raw_edges.append((u, v))
        ids.update((u, v))
    if header is not None:
        n, m = header
        if m != len(raw_edges):
            raise InputError(f"{path}: header declares m={m}, found {len(raw_edges)} edges")
        names = tuple(range(n))
        index = {i: i for i in range(n)}
    else:
        names = tuple(sorted(ids))
        index = {orig: i for i, orig in enumerate(names)}
    edges = [(index[u], index[v]) for u, v in raw_edges]
    return NamedGraph(Graph(len(names), edges), names, index)


def load_graph(path: str) -> NamedGraph:
    return parse_graph(_read_lines(path), path)


def load_mapping(path: str, named: NamedGraph) -> dict:
    """Mapping file against a loaded graph; returns {internal id: value}."""
    mapping = {}
    for _, toks, where in _tokens(_read_lines(path), path):
        if len(toks) != 2:
            raise InputError(f"{where}: expected 'vertex value'")
        try:
            orig, value = int(toks[0]), int(toks[1])
        except ValueError:
            raise InputError(f"{where}: non-integer field") from None
        if orig not in named.index:
            raise InputError(f"{where}: vertex {orig} not in graph")
        v = named.index[orig]
        if v in mapping:
            raise InputError(f"{where}: vertex {orig} assigned twice")
        mapping[v] = value
    return mapping


def _mapping_pairs(named: NamedGraph, values) -> list:
    return [[named.names[v], int(val)] for v, val in enumerate(values)]


def _mapping_text(named: NamedGraph, values) -> list:
    return [f"{named.names[v]} {val}" for v, val in enumerate(values)]


_REASON_TEXT = {
    FailureReason.NOT_REACHABLE: "not {m}-reachable: ({u},{v})",
    FailureReason.NO_ROOT_CANDIDATE: "no root candidate",
    FailureReason.EMPTY_INTERVAL: "empty interval at {u}",
    FailureReason.PRESCRIBED_CONFLICT: "prescribed conflict at {vs}",
    FailureReason.NOT_BIPARTITE: "not bipartite",
}


def _reason_text(named, result, m):
    detail = [named.names[v] for v in result.detail] if result.reason in (
        FailureReason.NOT_REACHABLE, FailureReason.EMPTY_INTERVAL,
        FailureReason.PRESCRIBED_CONFLICT) else list(result.detail)
    text = _REASON_TEXT[result.reason]
    subs = {"m": m, "vs": ",".join(map(str, detail))}
    if len(detail) >= 1:
        subs["u"] = detail[0]
    if len(detail) >= 2:
        subs["v"] = detail[1]
    return text.format(**subs)


class _Output:
    """Collects the human lines and the JSON result in parallel."""

    def __init__(self, args, named):
        self.json_mode = args.json
        self.lines = []
        self.doc = {
            "graph": {"n": named.graph.n, "m": named.graph.m},
            "M": args.M,
            "strong": bool(getattr(args, "strong", False)),
            "result": {},
        }
        self.negative = False

    def say(self, line):
        self.lines.append(line)

    def put(self, **kv):
        self.doc["result"].update(kv)

    def emit(self):
        if self.json_mode:
            print(json.dumps(self.doc, sort_keys=True, separators=(",", ":")))
        else:
            for line in self.lines:
                print(line)


def _emit_extension(out, named, args, result):
    if result.extended:
        out.say("EXTENDED")
        out.lines.extend(_mapping_text(named, result.mapping.values))
        out.put(extended=True,
                mapping=_mapping_pairs(named, result.mapping.values),
                root=named.names[result.mapping.root])
    else:
        reason = _reason_text(named, result, args.M)
        out.say(f"NOT_EXTENDABLE: {reason}")
        out.put(extended=False, reason=result.reason.value,
                detail=[named.names[v] for v in result.detail])
        out.negative = True


def cmd_maxrange(args, named, out):
    g = named.graph
    if args.strong:
        res = max_range_strong(g, args.M)
        if res is None:
            out.say("maxrange: NONE")
            out.put(maxrange=None, exists=False)
            out.negative = True
            return
        value, witness = res
    else:
        value, witness = max_range(g, args.M), None
        if args.witness:
            witness = max_range_witness(g, args.M)
    out.say(f"maxrange: {value}")
    out.put(maxrange=value, exists=True)
    if args.witness and witness is not None:
        out.say("witness:")
        out.lines.extend(_mapping_text(named, witness.values))
        out.put(witness=_mapping_pairs(named, witness.values),
                witness_root=named.names[witness.root])


def cmd_extend(args, named, out):
    prescribed = load_mapping(args.pins, named)
    if args.tree:
        result = extend_on_tree(named.graph, prescribed, args.M)
    elif args.strong:
        result = extend_strong(named.graph, prescribed, args.M)
    else:
        result = extend_general(named.graph, prescribed, args.M)
    _emit_extension(out, named, args, result)


def cmd_fixed_range(args, named, out):
    prescribed = load_mapping(args.pins, named)
    res = fixed_range_extend(named.graph, prescribed, args.M, args.range)
    if res.found:
        out.say("FOUND")
        out.lines.extend(_mapping_text(named, res.mapping.values))
        out.put(status="FOUND",
                mapping=_mapping_pairs(named, res.mapping.values),
                root=named.names[res.mapping.root])
    else:
        status = "ABSENT" if res.decided else "UNKNOWN"
        out.say(status)
        out.put(status=status)
        out.negative = True


def cmd_max_range_ext(args, named, out):
    prescribed = load_mapping(args.pins, named)
    res = max_range_extend(named.graph, prescribed, args.M,
                           linear_scan=args.linear_scan)
    if res is None:
        out.say("NOT_EXTENDABLE")
        out.put(extended=False)
        out.negative = True
        return
    r, witness = res
    out.say(f"maxrange-ext: {r}")
    out.lines.extend(_mapping_text(named, witness.values))
    out.put(extended=True, max_range=r,
            mapping=_mapping_pairs(named, witness.values),
            root=named.names[witness.root])


def _internal_root(args, named):
    if args.root not in named.index:
        raise InputError(f"root {args.root} not in graph")
    return named.index[args.root]


def cmd_count(args, named, out):
    st = stats(named.graph, _internal_root(args, named), args.M,
               strong=args.strong, budget=args.budget)
    out.say(f"count: {st.count}")
    out.put(count=st.count)


def cmd_avgrange(args, named, out):
    st = stats(named.graph, _internal_root(args, named), args.M,
               strong=args.strong, budget=args.budget)
    avg = st.avg_range
    out.say(f"avgrange: {avg.numerator}/{avg.denominator}")
    out.put(count=st.count,
            avg_range=f"{avg.numerator}/{avg.denominator}",
            max_range_distinct=st.max_range_distinct,
            max_span=st.max_span)


def cmd_enumerate(args, named, out):
    emitted = []
    truncated = False
    for f in enumerate_mappings(named.graph, _internal_root(args, named),
                                args.M, strong=args.strong, budget=args.budget):
        if args.limit is not None and len(emitted) >= args.limit:
            truncated = True
            break
        emitted.append(list(f.values))
    for vals in emitted:
        out.say(" ".join(str(v) for v in vals))
    out.put(count=len(emitted), mappings=emitted, truncated=truncated)


def cmd_check(args, named, out):
    g = named.graph
    mapping = load_mapping(args.mapping, named)
    missing = [named.names[v] for v in range(g.n) if v not in mapping]
    if missing:
        raise InputError(f"{args.mapping}: vertices not assigned: {missing[:5]}")
    values = tuple(mapping[v] for v in range(g.n))
    zeros = [v for v in range(g.n) if values[v] == 0]
    if not zeros:
        out.say("INVALID: no vertex mapped to 0")
        out.put(valid=False, reason="no vertex mapped to 0")
        out.negative = True
        return
    f = FullMapping(values, zeros[0])
    ok, edge = is_valid(g, f, LipschitzParams(args.M, args.strong))
    if ok:
        out.say("VALID")
        out.put(valid=True, root=named.names[zeros[0]], range=range_of(f))
    else:
        u, v = (named.names[x] for x in edge)
        out.say(f"INVALID: edge ({u},{v})")
        out.put(valid=False, violating_edge=[u, v])
        out.negative = True
    if args.wr:
        wr = is_widom_rowlinson(g, f)
        out.say(f"widom-rowlinson: {'yes' if wr else 'no'}")
        out.put(widom_rowlinson=wr)


def cmd_lhom(args, named, out):
    g = named.graph
    prescribed = load_mapping(args.pins, named)
    shift = 0
    if args.translate and prescribed:
        lo, hi = min(prescribed.values()), max(prescribed.values())
        shift = -((lo + hi) // 2)
        prescribed = {v: val + shift for v, val in prescribed.items()}
    # wide enough that every minimal extension fits the target
    spread = max((abs(v) for v in prescribed.values()), default=0)
    bound = max(1, g.n, args.M * (g.n - 1) + spread)
    instance = lhom.build_instance(g, prescribed, args.M, strong=args.strong,
                                   bound=bound)
    if args.dump_instance:
        with open(args.dump_instance, "w", encoding="utf-8") as fh:
            fh.write(instance.serialize())
        out.say(f"instance dumped to {args.dump_instance}")
        out.put(dumped=args.dump_instance)
    if args.translate:
        solution = lhom.solve(instance, require_zero=False)
        if solution is None:
            out.say("NO_HOMOMORPHISM")
            out.put(extended=False)
            out.negative = True
        else:
            values = [val - shift for val in solution]
            out.say("HOMOMORPHISM")
            out.lines.extend(_mapping_text(named, values))
            out.put(extended=True, mapping=_mapping_pairs(named, values),
                    shift=-shift)
        return
    solution = lhom.solve(instance, require_zero=True)
    if solution is None:
        out.say("NOT_EXTENDABLE")
        out.put(extended=False)
        out.negative = True
    else:
        out.say("EXTENDED")
        out.lines.extend(_mapping_text(named, solution.values))
        out.put(extended=True, mapping=_mapping_pairs(named, solution.values),
                root=named.names[solution.root])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lipmap",
        description="Step-bounded vertex mappings: maximum range, extensions, enumeration.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, pins=False, mapping=False):
        p.add_argument("-g", "--graph", required=True,
                       help="edge-list file ('-' for stdin)")
        p.add_argument("-M", type=int, required=True, help="step bound (>= 1)")
        if pins:
            p.add_argument("-p", "--pins", required=True,
                           help="partial mapping file ('vertex value' lines)")
        if mapping:
            p.add_argument("-f", "--mapping", required=True,
                           help="full mapping file ('vertex value' lines)")
        p.add_argument("--json", action="store_true", help="JSON output")
        p.add_argument("--status-exit", action="store_true",
                       help="exit 1 on a negative answer")

    p = sub.add_parser("maxrange", help="maximum range over all mappings")
    common(p)
    p.add_argument("--strong", action="store_true")
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_maxrange)

    p = sub.add_parser("extend", help="extend a partial mapping")
    common(p, pins=True)
    p.add_argument("--strong", action="store_true")
    p.add_argument("--tree", action="store_true",
                   help="use the tree-only interval algorithm")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("fixed-range", help="extension with an exact range")
    common(p, pins=True)
    p.add_argument("-r", "--range", type=int, required=True)
    p.set_defaults(func=cmd_fixed_range)

    p = sub.add_parser("max-range-ext", help="largest range over extensions")
    common(p, pins=True)
    p.add_argument("--linear-scan", action="store_true")
    p.set_defaults(func=cmd_max_range_ext)

    for name, fn in (("count", cmd_count), ("avgrange", cmd_avgrange),
                     ("enumerate", cmd_enumerate)):
        p = sub.add_parser(name, help=f"oracle {name} over all rooted mappings")
        common(p)
        p.add_argument("--strong", action="store_true")
        p.add_argument("--root", type=int, required=(name == "count"), default=0)
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        if name == "enumerate":
            p.add_argument("--limit", type=int, default=None)
        p.set_defaults(func=fn)

    p = sub.add_parser("check", help="validate a full mapping")
    common(p, mapping=True)
    p.add_argument("--strong", action="store_true")
    p.add_argument("--wr", action="store_true",
                   help="also test the three-value unit-step form")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("lhom", help="extension via list homomorphism")
    common(p, pins=True)
    p.add_argument("--strong", action="store_true")
    p.add_argument("--dump-instance", metavar="PATH")
    p.add_argument("--translate", action="store_true",
                   help="shift values into the target and drop the root rule")
    p.set_defaults(func=cmd_lhom)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        named = load_graph(args.graph)
        out = _Output(args, named)
        args.func(args, named, out)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except LipmapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out.emit()
    return 1 if (args.status_exit and out.negative) else 0


def entry():  # console-script hook
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
