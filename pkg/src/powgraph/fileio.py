"""Plain-text interchange formats and the group-spec mini-language.

Formats (whitespace-separated, 0-based indices, big integers in decimal):

* coloured graph:   `cgraph <directed|undirected> <n> <m>` then n lines
                    `v <index> <color>` and m lines `e <u> <v>`
* reduced graph:    `rgraph <k> <m>` then k lines `class <index> <color> <size>`
                    and m lines `e <u> <v>`
* motif:            `motif <k>` then k lines `c <color> <multiplicity>`
* weighted graph:   `wgraph <n> <m>` then m lines `e <u> <v> <w>`
* raw group:        `group <n> <identity_index>` then n rows of n indices
* group specs:      cyclic:12, abelianp:2^[3,1], heisenberg:3, raw:@file,
                    product:(spec,spec,...)
"""

from __future__ import annotations

from .errors import InputError
from .graphs import ColoredDigraph, ReducedGraph
from .groups import GroupSpec
from .motif import Motif
from .reductions import EmbeddingPlan, WeightedGraph


def _tokens(text: str) -> list[list[str]]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line.split())
    return out


def _ints(parts, start=0):
    try:
        return [int(x) for x in parts[start:]]
    except ValueError as exc:
        raise InputError(f"expected integers in {parts!r}") from exc


# ---------------------------------------------------------------------------
# coloured graphs


def write_colored_graph(graph: ColoredDigraph) -> str:
    kind = "directed" if graph.directed else "undirected"
    lines = [f"cgraph {kind} {graph.n} {graph.edge_count()}"]
    lines += [f"v {v} {int(graph.colors[v])}" for v in range(graph.n)]
    lines += [f"e {u} {v}" for u, v in graph.edge_list()]
    return "\n".join(lines) + "\n"


def read_colored_graph(text: str) -> ColoredDigraph:
    rows = _tokens(text)
    if not rows or rows[0][0] != "cgraph" or len(rows[0]) != 4:
        raise InputError("expected a `cgraph <directed|undirected> <n> <m>` header")
    kind = rows[0][1]
    if kind not in ("directed", "undirected"):
        raise InputError(f"bad graph kind {kind!r}")
    n, m = _ints(rows[0], 2)
    colors = [None] * n
    edges = []
    for parts in rows[1:]:
        if parts[0] == "v":
            idx, color = _ints(parts, 1)
            if not 0 <= idx < n:
                raise InputError(f"vertex {idx} out of range")
            colors[idx] = color
        elif parts[0] == "e":
            u, v = _ints(parts, 1)
            edges.append((u, v))
        else:
            raise InputError(f"unexpected line {' '.join(parts)!r}")
    if any(c is None for c in colors):
        raise InputError("every vertex needs a `v <index> <color>` line")
    if len(edges) != m:
        raise InputError(f"header declares {m} edges, found {len(edges)}")
    return ColoredDigraph.from_edges(n, kind == "directed", edges, colors)


# ---------------------------------------------------------------------------
# reduced graphs


def write_reduced_graph(rg: ReducedGraph) -> str:
    lines = [f"rgraph {rg.k} {len(rg.edges)}"]
    lines += [f"class {c} {rg.colors[c]} {rg.sizes[c]}" for c in range(rg.k)]
    lines += [f"e {a} {b}" for a, b in sorted(rg.edges)]
    return "\n".join(lines) + "\n"


def read_reduced_graph(text: str) -> ReducedGraph:
    rows = _tokens(text)
    if not rows or rows[0][0] != "rgraph" or len(rows[0]) != 3:
        raise InputError("expected an `rgraph <k> <m>` header")
    k, m = _ints(rows[0], 1)
    colors = [None] * k
    sizes = [None] * k
    edges = []
    for parts in rows[1:]:
        if parts[0] == "class":
            idx, color, size = _ints(parts, 1)
            if not 0 <= idx < k:
                raise InputError(f"class {idx} out of range")
            colors[idx], sizes[idx] = color, size
        elif parts[0] == "e":
            a, b = _ints(parts, 1)
            edges.append((a, b))
        else:
            raise InputError(f"unexpected line {' '.join(parts)!r}")
    if any(c is None for c in colors):
        raise InputError("every class needs a `class <index> <color> <size>` line")
    if len(edges) != m:
        raise InputError(f"header declares {m} edges, found {len(edges)}")
    return ReducedGraph(colors, sizes, edges)


# ---------------------------------------------------------------------------
# motifs and weighted graphs


def write_motif(motif: Motif) -> str:
    lines = [f"motif {len(motif.items)}"]
    lines += [f"c {color} {mult}" for color, mult in motif.items]
    return "\n".join(lines) + "\n"


def read_motif(text: str) -> Motif:
    rows = _tokens(text)
    if not rows or rows[0][0] != "motif" or len(rows[0]) != 2:
        raise InputError("expected a `motif <k>` header")
    (k,) = _ints(rows[0], 1)
    counts = {}
    for parts in rows[1:]:
        if parts[0] != "c":
            raise InputError(f"unexpected line {' '.join(parts)!r}")
        color, mult = _ints(parts, 1)
        if color in counts:
            raise InputError(f"duplicate colour {color}")
        counts[color] = mult
    if len(counts) != k:
        raise InputError(f"header declares {k} colours, found {len(counts)}")
    return Motif.of(counts)


def write_weighted_graph(wg: WeightedGraph) -> str:
    lines = [f"wgraph {wg.n} {len(wg.weights)}"]
    lines += [f"e {u} {v} {w}" for u, v, w in wg.weights]
    return "\n".join(lines) + "\n"


def read_weighted_graph(text: str) -> WeightedGraph:
    rows = _tokens(text)
    if not rows or rows[0][0] != "wgraph" or len(rows[0]) != 3:
        raise InputError("expected a `wgraph <n> <m>` header")
    n, m = _ints(rows[0], 1)
    edges = []
    for parts in rows[1:]:
        if parts[0] != "e":
            raise InputError(f"unexpected line {' '.join(parts)!r}")
        u, v, w = _ints(parts, 1)
        edges.append((u, v, w))
    if len(edges) != m:
        raise InputError(f"header declares {m} edges, found {len(edges)}")
    return WeightedGraph.of(n, edges)


# ---------------------------------------------------------------------------
# raw groups and the spec mini-language


def write_raw_group(table, identity: int) -> str:
    n = len(table)
    lines = [f"group {n} {identity}"]
    lines += [" ".join(str(int(x)) for x in row) for row in table]
    return "\n".join(lines) + "\n"


def read_raw_group(text: str) -> tuple[list[list[int]], int]:
    rows = _tokens(text)
    if not rows or rows[0][0] != "group" or len(rows[0]) != 3:
        raise InputError("expected a `group <n> <identity_index>` header")
    n, identity = _ints(rows[0], 1)
    table = [_ints(parts) for parts in rows[1:]]
    if len(table) != n or any(len(r) != n for r in table):
        raise InputError(f"expected {n} rows of {n} entries")
    return table, identity


def parse_group_spec(text: str, read_file=None) -> GroupSpec:
    """Parse the CLI mini-language into a GroupSpec.

    read_file resolves `raw:@path` references; defaults to open().read.
    """
    text = text.strip()
    if read_file is None:
        read_file = lambda path: open(path).read()
    if text.startswith("cyclic:"):
        return GroupSpec(kind="cyclic", n=_positive(text[7:], "cyclic order"))
    if text.startswith("heisenberg:"):
        return GroupSpec(kind="heisenberg", p=_positive(text[11:], "heisenberg prime"))
    if text.startswith("abelianp:"):
        body = text[9:]
        if "^" not in body:
            raise InputError(f"abelianp spec needs p^[parts]: {text!r}")
        p_str, part_str = body.split("^", 1)
        if not (part_str.startswith("[") and part_str.endswith("]")):
            raise InputError(f"abelianp partition must be bracketed: {text!r}")
        parts = tuple(_positive(x, "partition entry") for x in part_str[1:-1].split(","))
        return GroupSpec(kind="abelianp", p=_positive(p_str, "prime"), partition=parts)
    if text.startswith("product:"):
        body = text[8:]
        if not (body.startswith("(") and body.endswith(")")):
            raise InputError(f"product spec needs parentheses: {text!r}")
        factors = tuple(
            parse_group_spec(piece, read_file) for piece in _split_commas(body[1:-1])
        )
        if not factors:
            raise InputError("product of zero groups")
        return GroupSpec(kind="product", factors=factors)
    if text.startswith("raw:@"):
        table, identity = read_raw_group(read_file(text[5:]))
        return GroupSpec(kind="raw", table=table, identity=identity)
    raise InputError(f"cannot parse group spec {text!r}")


def _positive(text: str, what: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise InputError(f"bad {what}: {text!r}") from exc
    if value < 1:
        raise InputError(f"{what} must be positive, got {value}")
    return value


def _split_commas(body: str) -> list[str]:
    pieces, depth, start = [], 0, 0
    for i, ch in enumerate(body):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "," and depth == 0:
            pieces.append(body[start:i])
            start = i + 1
    tail = body[start:]
    if tail.strip():
        pieces.append(tail)
    return [p.strip() for p in pieces]


# ---------------------------------------------------------------------------
# manifests


def write_plan_manifest(plan: EmbeddingPlan) -> str:
    lines = [f"b {plan.b}", f"N {plan.modulus}"]
    for lit in plan.gadget.formula.literals():
        subset = ",".join(str(t) for t in plan.f_p[lit])
        lines.append(f"fp {lit} {subset}")
    for v in range(plan.n_vertices):
        lines.append(f"map {v} {plan.element_map[v]} {plan.order_map[v]}")
    return "\n".join(lines) + "\n"


def write_recognition_manifest(verdict: bool, witness_spec: str, mapping: dict | None) -> str:
    lines = [f"verdict {'yes' if verdict else 'no'}"]
    if verdict:
        lines.append(f"group {witness_spec}")
        for witness_class, input_class in sorted(
            (mapping or {}).items(), key=lambda kv: kv[1]
        ):
            lines.append(f"iso {input_class} {witness_class}")
    return "\n".join(lines) + "\n"
