"""Finite directed multigraphs: representation, file format and connectivity."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from pathlib import Path as FsPath
from typing import Iterable

RESERVED_CHARS = frozenset("[]|#")


class GraphError(ValueError):
    pass


class GraphParseError(GraphError):
    def __init__(self, lineno: int, reason: str):
        super().__init__(f"line {lineno}: {reason}")
        self.lineno = lineno
        self.reason = reason


@dataclass(frozen=True, order=True)
class Edge:
    id: str
    source: str
    range: str


class Graph:
    """Immutable directed multigraph.

    Loops and parallel edges are allowed. Vertices and edges are kept sorted by
    identifier so that every derived enumeration is deterministic.
    """

    __slots__ = ("vertices", "edges", "_edge_by_id", "_out", "_in")

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable[Edge | tuple[str, str, str]] = ()):
        verts = list(vertices)
        edge_list = [e if isinstance(e, Edge) else Edge(*e) for e in edges]

        vset = set(verts)
        if len(vset) != len(verts):
            raise GraphError("duplicate vertex identifier")
        for v in verts:
            _check_identifier(v)
        by_id: dict[str, Edge] = {}
        for e in edge_list:
            _check_identifier(e.id)
            if e.id in by_id:
                raise GraphError(f"duplicate edge identifier {e.id!r}")
            if e.id in vset:
                raise GraphError(f"edge identifier {e.id!r} is also a vertex")
            for end in (e.source, e.range):
                if end not in vset:
                    raise GraphError(f"edge {e.id!r} uses undeclared vertex {end!r}")
            by_id[e.id] = e

        self.vertices: tuple[str, ...] = tuple(sorted(verts))
        self.edges: tuple[Edge, ...] = tuple(sorted(edge_list))
        self._edge_by_id = by_id
        out: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        inc: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e.source].append(e)
            inc[e.range].append(e)
        self._out = {v: tuple(es) for v, es in out.items()}
        self._in = {v: tuple(es) for v, es in inc.items()}

    def __setattr__(self, name, value):
        if hasattr(self, "_in"):
            raise AttributeError("Graph is immutable")
        object.__setattr__(self, name, value)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"Graph(vertices={list(self.vertices)!r}, edges={[(e.id, e.source, e.range) for e in self.edges]!r})"

    def __len__(self):
        return len(self.vertices)

    def has_vertex(self, v: str) -> bool:
        return v in self._out

    def has_edge(self, e: str) -> bool:
        return e in self._edge_by_id

    def edge(self, e: str) -> Edge:
        try:
            return self._edge_by_id[e]
        except KeyError:
            raise GraphError(f"unknown edge {e!r}") from None

    def out_edges(self, v: str) -> tuple[Edge, ...]:
        return self._out[v]

    def in_edges(self, v: str) -> tuple[Edge, ...]:
        return self._in[v]

    def successors(self, v: str) -> list[str]:
        return sorted({e.range for e in self._out[v]})

    def predecessors(self, v: str) -> list[str]:
        return sorted({e.source for e in self._in[v]})

    def subgraph(self, vertices: Iterable[str]) -> Graph:
        """Induced subgraph on `vertices`."""
        keep = set(vertices)
        return Graph(keep, [e for e in self.edges if e.source in keep and e.range in keep])

    def rename(self, mapping: dict[str, str]) -> Graph:
        """Copy with identifiers passed through `mapping` (missing keys unchanged)."""
        m = lambda s: mapping.get(s, s)
        return Graph([m(v) for v in self.vertices], [Edge(m(e.id), m(e.source), m(e.range)) for e in self.edges])

    def to_text(self) -> str:
        lines = [f"vertex {v}" for v in self.vertices]
        lines += [f"edge {e.id} {e.source} {e.range}" for e in self.edges]
        return "\n".join(lines) + ("\n" if lines else "")


def _check_identifier(s) -> None:
    if not isinstance(s, str) or not s:
        raise GraphError(f"identifier must be a nonempty string, got {s!r}")
    if any(c.isspace() for c in s):
        raise GraphError(f"identifier {s!r} contains whitespace")


def parse_graph(text: str) -> Graph:
    """Parse the line-oriented graph format.

    ``vertex <id>`` and ``edge <id> <source> <range>`` lines; ``#`` starts a
    comment. Errors carry the offending line number.
    """
    vertices: list[str] = []
    vertex_line: dict[str, int] = {}
    edges: list[tuple[int, Edge]] = []
    seen: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind, args = parts[0], parts[1:]
        if kind == "vertex":
            if len(args) != 1:
                raise GraphParseError(lineno, "expected 'vertex <id>'")
        elif kind == "edge":
            if len(args) != 3:
                raise GraphParseError(lineno, "expected 'edge <id> <source> <range>'")
        else:
            raise GraphParseError(lineno, f"unknown directive {kind!r}")
        ident = args[0]
        bad = _reserved_problem(ident)
        if bad:
            raise GraphParseError(lineno, bad)
        if ident in seen:
            raise GraphParseError(lineno, f"identifier {ident!r} already declared on line {seen[ident]}")
        seen[ident] = lineno
        if kind == "vertex":
            vertices.append(ident)
            vertex_line[ident] = lineno
        else:
            edges.append((lineno, Edge(*args)))

    for lineno, e in edges:
        for end in (e.source, e.range):
            if end not in vertex_line:
                raise GraphParseError(lineno, f"edge {e.id!r} refers to undeclared vertex {end!r}")
    return Graph(vertices, [e for _, e in edges])


def _reserved_problem(ident: str) -> str | None:
    if ident == "0":
        return "identifier '0' is reserved for the zero element"
    if RESERVED_CHARS & set(ident):
        return f"identifier {ident!r} contains one of the reserved characters [ ] | #"
    if ident.endswith("^-1"):
        return f"identifier {ident!r} must not end in '^-1'"
    return None


def load_graph(path: str | FsPath) -> Graph:
    return parse_graph(FsPath(path).read_text(encoding="utf-8"))


def _reachable(start: str, step) -> set[str]:
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in step(v):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def reachable_from(g: Graph, v: str) -> set[str]:
    return _reachable(v, g.successors)


def reaching(g: Graph, v: str) -> set[str]:
    return _reachable(v, g.predecessors)


def is_strongly_connected(g: Graph) -> bool:
    if not g.vertices:
        return True
    root = g.vertices[0]
    everything = set(g.vertices)
    return reachable_from(g, root) == everything and reaching(g, root) == everything


def weakly_connected_components(g: Graph) -> list[Graph]:
    """Maximal pieces connected when edge direction is ignored.

    Ordered by least vertex identifier.
    """
    undirected = lambda v: sorted(set(g.successors(v)) | set(g.predecessors(v)))
    done: set[str] = set()
    parts = []
    for v in g.vertices:
        if v in done:
            continue
        comp = _reachable(v, undirected)
        done |= comp
        parts.append(g.subgraph(comp))
    return parts


def has_cycle(g: Graph) -> bool:
    # Kahn's algorithm; a loop counts toward its vertex's in-degree.
    indeg = {v: len(g.in_edges(v)) for v in g.vertices}
    queue = deque(v for v, d in indeg.items() if d == 0)
    removed = 0
    while queue:
        v = queue.popleft()
        removed += 1
        for e in g.out_edges(v):
            indeg[e.range] -= 1
            if indeg[e.range] == 0:
                queue.append(e.range)
    return removed < len(g.vertices)


def gis_is_infinite(g: Graph) -> bool:
    """Whether the graph inverse semigroup over `g` has infinitely many elements.

    For a finite graph this happens exactly when some cycle exists: powers of a
    cycle are pairwise distinct paths, while an acyclic finite graph has only
    finitely many paths.
    """
    return has_cycle(g)


def on_cycle(g: Graph, v: str) -> bool:
    """True iff some cycle passes through `v`."""
    return any(v in reachable_from(g, e.range) for e in g.out_edges(v))
