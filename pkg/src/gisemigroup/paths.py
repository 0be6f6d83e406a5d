"""Paths in a directed multigraph: composition, prefixes and bounded enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, GraphError


class PathError(ValueError):
    pass


@dataclass(frozen=True)
class Path:
    """A vertex (length 0) or a composable nonempty edge sequence.

    `source` and `range` are stored alongside the edges so that a path can be
    manipulated without its graph; build through `trivial` or `Graph`-aware
    `path_of` to keep the composability invariant.
    """

    source: str
    range: str
    edges: tuple[str, ...] = ()

    @classmethod
    def trivial(cls, v: str) -> Path:
        return cls(v, v, ())

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def is_trivial(self) -> bool:
        return not self.edges

    def sort_key(self) -> tuple:
        # trivial paths first, ordered by vertex, then (length, edge ids)
        if not self.edges:
            return (0, (self.source,))
        return (len(self.edges), self.edges)

    def __str__(self) -> str:
        return format_path(self)


def path_of(g: Graph, edges: Sequence[str] | str) -> Path:
    """Path in `g` from an edge sequence, or the trivial path at a vertex id."""
    if isinstance(edges, str):
        if not g.has_vertex(edges):
            raise PathError(f"unknown vertex {edges!r}")
        return Path.trivial(edges)
    edges = tuple(edges)
    if not edges:
        raise PathError("an empty edge sequence has no vertex; use Path.trivial")
    try:
        es = [g.edge(e) for e in edges]
    except GraphError as exc:
        raise PathError(str(exc)) from None
    for a, b in zip(es, es[1:]):
        if a.range != b.source:
            raise PathError(f"edges {a.id!r} and {b.id!r} do not compose: {a.range!r} != {b.source!r}")
    return Path(es[0].source, es[-1].range, edges)


def validate_path(g: Graph, p: Path) -> None:
    """Raise PathError unless `p` is a path of `g`."""
    if p.is_trivial:
        if p.source != p.range or not g.has_vertex(p.source):
            raise PathError(f"{p!r} is not a vertex of the graph")
        return
    if path_of(g, p.edges) != p:
        raise PathError(f"{p!r} has inconsistent endpoints")


def concat(a: Path, b: Path) -> Path | None:
    """`ab`, or None when r(a) != s(b)."""
    if a.range != b.source:
        return None
    return Path(a.source, b.range, a.edges + b.edges)


def strip_prefix(p: Path, x: Path) -> Path | None:
    """The unique z with x = pz, or None when p is not a prefix of x."""
    if p.source != x.source:
        return None
    n = len(p.edges)
    if n > len(x.edges) or x.edges[:n] != p.edges:
        return None
    rest = x.edges[n:]
    if not rest:
        return Path.trivial(x.range)
    # range of p is the source of the remainder
    return Path(p.range, x.range, rest)


def strip_suffix(q: Path, x: Path) -> Path | None:
    """The unique z with x = zq, or None when q is not a suffix of x."""
    if q.range != x.range:
        return None
    n = len(q.edges)
    if n > len(x.edges) or (n and x.edges[-n:] != q.edges):
        return None
    rest = x.edges[: len(x.edges) - n]
    if not rest:
        return Path.trivial(x.source)
    return Path(x.source, q.source, rest)


def is_prefix(p: Path, x: Path) -> bool:
    return strip_prefix(p, x) is not None


def is_suffix(q: Path, x: Path) -> bool:
    return strip_suffix(q, x) is not None


def prefixes(g: Graph, x: Path) -> list[Path]:
    """All prefixes of x, shortest first; the trivial path at s(x) comes first."""
    out = [Path.trivial(x.source)]
    for i in range(1, len(x.edges) + 1):
        out.append(Path(x.source, g.edge(x.edges[i - 1]).range, x.edges[:i]))
    return out


def suffixes(g: Graph, x: Path) -> list[Path]:
    """All suffixes of x, shortest first; the trivial path at r(x) comes first."""
    out = [Path.trivial(x.range)]
    n = len(x.edges)
    for i in range(n - 1, -1, -1):
        out.append(Path(g.edge(x.edges[i]).source, x.range, x.edges[i:]))
    return out


def enumerate_paths(g: Graph, max_len: int) -> list[Path]:
    """All paths of length <= max_len, ordered by (length, edge ids)."""
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    level = [Path.trivial(v) for v in g.vertices]
    out = list(level)
    for _ in range(max_len):
        nxt = [Path(p.source, e.range, p.edges + (e.id,)) for p in level for e in g.out_edges(p.range)]
        if not nxt:
            break
        nxt.sort(key=Path.sort_key)
        out.extend(nxt)
        level = nxt
    return out


def _check_vertex(g: Graph, e: str) -> None:
    if not g.has_vertex(e):
        raise PathError(f"unknown vertex {e!r}")


def paths_from(g: Graph, v: str, max_len: int, avoid: str | None = None) -> Iterable[Path]:
    """Nonempty paths starting at v of length <= max_len.

    With `avoid`, no proper nonempty prefix may range at that vertex; the path
    itself still may.
    """
    stack = [Path.trivial(v)]
    while stack:
        p = stack.pop()
        if p.edges:
            yield p
            if avoid is not None and p.range == avoid:
                continue
        if len(p.edges) < max_len:
            for e in reversed(g.out_edges(p.range)):
                stack.append(Path(v, e.range, p.edges + (e.id,)))


def cycles_at(g: Graph, e: str, max_len: int) -> list[Path]:
    """Paths u with s(u) = r(u) = e and |u| <= max_len, trivial path included."""
    _check_vertex(g, e)
    found = [p for p in paths_from(g, e, max_len) if p.range == e]
    found.sort(key=Path.sort_key)
    return [Path.trivial(e)] + found


def first_return_cycles_at(g: Graph, e: str, max_len: int) -> list[Path]:
    """Cycles at e that visit e only at their two ends, plus the trivial path at e.

    The order (length, then edge ids) fixes generator indices for the
    polycyclic model.
    """
    _check_vertex(g, e)
    found = [p for p in paths_from(g, e, max_len, avoid=e) if p.range == e]
    found.sort(key=Path.sort_key)
    return [Path.trivial(e)] + found


def format_path(p: Path) -> str:
    if p.is_trivial:
        return p.source
    return "[" + " ".join(p.edges) + "]"


def parse_path(g: Graph, text: str) -> Path:
    """Path literal: a vertex id, or edge ids inside brackets such as ``[x y]``."""
    s = text.strip()
    if s.startswith("["):
        if not s.endswith("]"):
            raise PathError(f"unterminated path literal {text!r}")
        ids = s[1:-1].split()
        if not ids:
            raise PathError("empty bracket path; write the vertex id for a trivial path")
        return path_of(g, ids)
    if not s or any(c.isspace() for c in s):
        raise PathError(f"malformed path literal {text!r}")
    if g.has_edge(s):
        raise PathError(f"{s!r} is an edge; write [{s}] for the path")
    return path_of(g, s)
