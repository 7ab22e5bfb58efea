"""Reading and writing graphs, representations, colourings and DOT drawings.

Formats
-------
graph6
    Standard 6-bit ASCII encoding, one graph per line, optional ``>>graph6<<``
    header.
edge-list
    One ``u v`` pair per line with 0-based ids. A line holding a single
    integer declares the vertex count (needed for trailing isolated
    vertices). Blank lines and ``#`` comments are ignored.
interval / arc
    ``v l r`` (resp. ``v start end``) per line; numbers may be integers,
    decimals or fractions such as ``3/2``. Arc angles are fractions of a turn.
threshold
    ``v w`` per line plus one ``t <value>`` line.
chain
    ``A a_1 a_2 ...`` listing side A in nesting order, ``B b_1 ...`` listing
    side B, then ``u v`` edge lines.
coloring
    ``u v c`` per line.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .classes import ArcRepresentation, ChainSpec, IntervalRepresentation, ThresholdSpec, realize
from .coloring import EdgeColoring
from .errors import ParseError, SearchBudgetExceeded
from .graph import Graph, is_connected

GRAPH6_HEADER = b">>graph6<<"

DOT_PALETTE = (
    "red", "blue", "forestgreen", "orange", "purple",
    "brown", "deeppink", "gold", "cyan", "gray40",
)


# ------------------------------------------------------------------- graph6


def _g6_size(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return b"~" + bytes(63 + (n >> s & 63) for s in (12, 6, 0))
    return b"~~" + bytes(63 + (n >> s & 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = bytes(
        63 + sum(b << (5 - k) for k, b in enumerate(bits[i:i + 6]))
        for i in range(0, len(bits), 6)
    )
    return (_g6_size(g.n) + body).decode("ascii")


def from_graph6(data, offset: int = 0) -> Graph:
    """Decode one graph6 string (bytes or str, surrounding whitespace ignored)."""
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = data.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
        offset += len(GRAPH6_HEADER)
    if not data:
        raise ParseError("empty graph6 string", offset)
    for i, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise ParseError(f"byte {byte!r} outside the graph6 range 63..126", offset + i)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise ParseError("truncated 36-bit vertex count", offset + len(data))
        n, pos = 0, 8
        for byte in data[2:8]:
            n = (n << 6) | (byte - 63)
    else:
        if len(data) < 4:
            raise ParseError("truncated 18-bit vertex count", offset + len(data))
        n, pos = 0, 4
        for byte in data[1:4]:
            n = (n << 6) | (byte - 63)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise ParseError(f"expected {need} adjacency bytes for n={n}, got {len(body)}",
                         offset + pos + min(len(body), need))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def read_graph6_lines(data: bytes) -> list:
    graphs = []
    offset = 0
    for line in data.splitlines(keepends=True):
        if line.strip():
            graphs.append(from_graph6(line, offset))
        offset += len(line)
    return graphs


# ---------------------------------------------------------------- edge list


def _lines(data):
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    offset = 0
    for raw in data.splitlines(keepends=True):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield offset, line
        offset += len(raw.encode("utf-8"))


def _int(tok: str, offset: int) -> int:
    try:
        v = int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", offset) from None
    if v < 0:
        raise ParseError(f"negative vertex id {v}", offset)
    return v


def _num(tok: str, offset: int) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"expected a number, got {tok!r}", offset) from None


def from_edge_list(data) -> Graph:
    n = 0
    edges = []
    for offset, line in _lines(data):
        toks = line.split()
        if len(toks) == 1:
            n = max(n, _int(toks[0], offset))
            continue
        if len(toks) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", offset)
        u, v = _int(toks[0], offset), _int(toks[1], offset)
        if u == v:
            raise ParseError(f"self-loop at {u}", offset)
        edges.append((u, v))
        n = max(n, u + 1, v + 1)
    return Graph(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_graph(data, fmt: str = "auto") -> Graph:
    """Parse one graph from ``data`` in ``graph6``, ``edge-list`` or ``auto`` format."""
    if isinstance(data, str):
        data = data.encode("utf-8")
    if fmt == "auto":
        first = data.strip().split(b"\n", 1)[0].strip()
        looks_g6 = first and b" " not in first and not first.isdigit()
        fmt = "graph6" if looks_g6 else "edge-list"
    if fmt == "graph6":
        graphs = read_graph6_lines(data)
        if len(graphs) != 1:
            raise ParseError(f"expected exactly one graph, found {len(graphs)}", 0)
        return graphs[0]
    if fmt == "edge-list":
        return from_edge_list(data)
    raise ValueError(f"unknown graph format {fmt!r}")


# ---------------------------------------------------------- representations


def _vertex_records(data, width: int):
    rows = {}
    extra = []
    for offset, line in _lines(data):
        toks = line.split()
        if not toks[0].lstrip("-").isdigit():
            extra.append((offset, toks))
            continue
        if len(toks) != width:
            raise ParseError(f"expected {width} fields, got {line!r}", offset)
        v = _int(toks[0], offset)
        if v in rows:
            raise ParseError(f"vertex {v} listed twice", offset)
        rows[v] = [_num(t, offset) for t in toks[1:]]
    if sorted(rows) != list(range(len(rows))):
        raise ParseError("vertex ids must be exactly 0..n-1", 0)
    return [rows[v] for v in range(len(rows))], extra


def parse_interval(data) -> IntervalRepresentation:
    rows, extra = _vertex_records(data, 3)
    if extra:
        raise ParseError(f"unexpected record {' '.join(extra[0][1])!r}", extra[0][0])
    try:
        return IntervalRepresentation(rows)
    except ValueError as exc:
        raise ParseError(str(exc), 0) from None


def parse_arc(data) -> ArcRepresentation:
    rows, extra = _vertex_records(data, 3)
    if extra:
        raise ParseError(f"unexpected record {' '.join(extra[0][1])!r}", extra[0][0])
    try:
        return ArcRepresentation(rows)
    except ValueError as exc:
        raise ParseError(str(exc), 0) from None


def parse_threshold(data) -> ThresholdSpec:
    rows, extra = _vertex_records(data, 2)
    t = None
    for offset, toks in extra:
        if toks[0] != "t" or len(toks) != 2:
            raise ParseError(f"unexpected record {' '.join(toks)!r}", offset)
        t = _num(toks[1], offset)
    if t is None:
        raise ParseError("missing 't <value>' line", 0)
    return ThresholdSpec([r[0] for r in rows], t)


def parse_chain(data) -> ChainSpec:
    a = b = None
    edges = []
    for offset, line in _lines(data):
        toks = line.split()
        if toks[0] == "A":
            a = [_int(t, offset) for t in toks[1:]]
        elif toks[0] == "B":
            b = [_int(t, offset) for t in toks[1:]]
        elif len(toks) == 2:
            edges.append((_int(toks[0], offset), _int(toks[1], offset)))
        else:
            raise ParseError(f"unexpected record {line!r}", offset)
    if a is None or b is None:
        raise ParseError("chain file needs both 'A' and 'B' lines", 0)
    aset = set(a)
    nbrs = {v: set() for v in a}
    for u, v in edges:
        if u in aset:
            nbrs[u].add(v)
        elif v in aset:
            nbrs[v].add(u)
        else:
            raise ParseError(f"edge ({u}, {v}) does not touch side A", 0)
    spec = ChainSpec(a, b, [nbrs[v] for v in a])
    try:
        spec.validate()
    except ValueError as exc:
        raise ParseError(str(exc), 0) from None
    return spec


REPRESENTATION_PARSERS = {
    "interval": parse_interval,
    "arc": parse_arc,
    "threshold": parse_threshold,
    "chain": parse_chain,
}


def format_representation(rep) -> str:
    if isinstance(rep, IntervalRepresentation):
        return "".join(f"{v} {l} {r}\n" for v, (l, r) in enumerate(rep.intervals))
    if isinstance(rep, ArcRepresentation):
        return "".join(f"{v} {s} {e}\n" for v, (s, e) in enumerate(rep.arcs))
    if isinstance(rep, ThresholdSpec):
        body = "".join(f"{v} {w}\n" for v, w in enumerate(rep.weights))
        return body + f"t {rep.threshold}\n"
    if isinstance(rep, ChainSpec):
        lines = ["A " + " ".join(map(str, rep.a)), "B " + " ".join(map(str, rep.b))]
        lines += [f"{a} {b}" for a, nb in zip(rep.a, rep.neighbors) for b in sorted(nb)]
        return "\n".join(lines) + "\n"
    raise TypeError(f"unsupported representation {type(rep).__name__}")


def load_input(data, fmt: str = "auto"):
    """Parse ``data`` as a graph or a representation; returns ``(graph, rep or None)``."""
    if fmt in REPRESENTATION_PARSERS:
        rep = REPRESENTATION_PARSERS[fmt](data)
        return realize(rep), rep
    return parse_graph(data, fmt), None


# ----------------------------------------------------------------- colourings


def parse_coloring(g: Graph, data) -> EdgeColoring:
    mapping = {}
    for offset, line in _lines(data):
        toks = line.split()
        if len(toks) != 3:
            raise ParseError(f"expected 'u v c', got {line!r}", offset)
        u, v, c = (_int(t, offset) for t in toks)
        if not g.has_edge(u, v):
            raise ParseError(f"({u}, {v}) is not an edge of the graph", offset)
        mapping[(u, v)] = c
    try:
        return EdgeColoring.from_mapping(g, mapping)
    except ValueError as exc:
        raise ParseError(str(exc), 0) from None


def format_coloring(c: EdgeColoring) -> str:
    return "".join(f"{u} {v} {col}\n" for (u, v), col in zip(c.graph.edges, c.colors))


# ----------------------------------------------------------------------- DOT


def emit_dot(g: Graph, c: EdgeColoring = None, highlights=None, name: str = "G") -> str:
    """Graphviz DOT text; colour ids map onto ``DOT_PALETTE``, highlights are filled."""
    highlights = set(highlights or ())
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in range(g.n):
        if v in highlights:
            lines.append(f'  {v} [style=filled, fillcolor="lightgray"];')
        else:
            lines.append(f"  {v};")
    for i, (u, v) in enumerate(g.edges):
        if c is None:
            lines.append(f"  {u} -- {v};")
        else:
            col = c.colors[i]
            pen = DOT_PALETTE[(col - 1) % len(DOT_PALETTE)]
            lines.append(f'  {u} -- {v} [color="{pen}", label="{col}", penwidth=2];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------------ corpora


def enumerate_connected_graphs(n: int):
    """Every labelled connected simple graph on ``n`` vertices, once each."""
    if n > 6:
        raise SearchBudgetExceeded(
            f"built-in enumeration stops at n=6; supply a graph6 corpus file for n={n}"
        )
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        g = Graph(n, [p for k, p in enumerate(pairs) if bits >> k & 1])
        if is_connected(g):
            yield g
