"""Elements of a graph inverse semigroup in normal form ``uv^-1``.

Every nonzero element is a pair of paths with a common range. The product
cancels the inner pair by prefix comparison, so normal forms are closed under
multiplication and no rewriting is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .graph import Graph
from .paths import (
    Path,
    PathError,
    concat,
    enumerate_paths,
    format_path,
    parse_path,
    path_of,
    prefixes,
    strip_prefix,
    strip_suffix,
    validate_path,
)


class ElementError(ValueError):
    pass


class _ZeroType:
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Zero"

    def __str__(self):
        return "0"

    def __reduce__(self):
        return (_ZeroType, ())

    def __mul__(self, other):
        return mul(self, other)

    def __invert__(self):
        return self


Zero = _ZeroType()


@dataclass(frozen=True)
class NonZero:
    u: Path
    v: Path

    def __post_init__(self):
        if self.u.range != self.v.range:
            raise ElementError(f"r(u) = {self.u.range!r} differs from r(v) = {self.v.range!r}")

    def __mul__(self, other):
        return mul(self, other)

    def __invert__(self):
        return NonZero(self.v, self.u)

    def __str__(self):
        return format_element(self)

    @property
    def vertex(self) -> str:
        """Common range of both paths; identifies the D-class."""
        return self.u.range


Element = Union[_ZeroType, NonZero]


def vertex_element(v: str) -> NonZero:
    p = Path.trivial(v)
    return NonZero(p, p)


def path_element(p: Path) -> NonZero:
    """The path p itself, i.e. ``p r(p)^-1``."""
    return NonZero(p, Path.trivial(p.range))


def edge_element(g: Graph, e: str) -> NonZero:
    return path_element(path_of(g, [e]))


def edge_inverse(g: Graph, e: str) -> NonZero:
    return ~edge_element(g, e)


def mul(a: Element, b: Element) -> Element:
    if a is Zero or b is Zero:
        return Zero
    u1, v1, u2, v2 = a.u, a.v, b.u, b.v
    w = strip_prefix(v1, u2)
    if w is not None:
        result = NonZero(concat(u1, w), v2)
        if __debug__ and u2 == v1:
            w2 = strip_prefix(u2, v1)
            assert NonZero(u1, concat(v2, w2)) == result
        return result
    w = strip_prefix(u2, v1)
    if w is not None:
        return NonZero(u1, concat(v2, w))
    return Zero


def inv(a: Element) -> Element:
    if a is Zero:
        return Zero
    return NonZero(a.v, a.u)


def is_idempotent(a: Element) -> bool:
    return a is Zero or a.u == a.v


def green_L(a: Element, b: Element) -> bool:
    if a is Zero or b is Zero:
        return a is b
    return a.v == b.v


def green_R(a: Element, b: Element) -> bool:
    if a is Zero or b is Zero:
        return a is b
    return a.u == b.u


def green_D(a: Element, b: Element) -> bool:
    if a is Zero or b is Zero:
        return a is b
    return a.u.range == b.u.range


def green_H(a: Element, b: Element) -> bool:
    return green_L(a, b) and green_R(a, b)


def _require_nonzero(a: Element, b: Element) -> None:
    if a is Zero or b is Zero:
        raise ElementError("division is only defined for nonzero arguments")


def solve_left(g: Graph, a: Element, b: Element) -> list[NonZero]:
    """Every x with ``x * a == b``, in canonical order.

    Write a = cd^-1, b = pq^-1 and x = uv^-1. Either v is a prefix of c with
    c = vw, forcing d = q and u w = p; or c is a prefix of v with v = cw,
    forcing u = p and q = dw. Both branches are finite scans over prefixes of c
    and suffixes of p, so the solution set is finite.
    """
    _require_nonzero(a, b)
    c, d, p, q = a.u, a.v, b.u, b.v
    found: set[NonZero] = set()
    if d == q:
        for v in prefixes(g, c):
            w = strip_prefix(v, c)
            u = strip_suffix(w, p)
            if u is not None and u.range == v.range:
                found.add(NonZero(u, v))
    w = strip_prefix(d, q)
    if w is not None:
        v = concat(c, w)
        if v is not None and v.range == p.range:
            found.add(NonZero(p, v))
    out = [x for x in found if mul(x, a) == b]
    assert len(out) == len(found), "solver produced a candidate that fails verification"
    return sorted(out, key=element_sort_key)


def solve_right(g: Graph, a: Element, b: Element) -> list[NonZero]:
    """Every x with ``a * x == b``; the mirror image of `solve_left` under inversion."""
    _require_nonzero(a, b)
    out = [inv(x) for x in solve_left(g, inv(a), inv(b))]
    assert all(mul(a, x) == b for x in out)
    return sorted(out, key=element_sort_key)


def element_sort_key(a: Element) -> tuple:
    if a is Zero:
        return (0,)
    return (1, a.u.sort_key(), a.v.sort_key())


def enumerate_elements(g: Graph, window: int) -> list[Element]:
    """Zero followed by every uv^-1 with |u|, |v| <= window, in path order."""
    paths = enumerate_paths(g, window)
    by_range: dict[str, list[Path]] = {}
    for p in paths:
        by_range.setdefault(p.range, []).append(p)
    out: list[Element] = [Zero]
    for u in paths:
        out.extend(NonZero(u, v) for v in by_range[u.range])
    return out


def format_element(a: Element) -> str:
    if a is Zero:
        return "0"
    return f"{format_path(a.u)} | {format_path(a.v)}"


def parse_element(g: Graph, text: str) -> Element:
    """Parse an element literal.

    ``0``; ``<path> | <path>``; a vertex id; an edge id ``x`` (the edge as an
    element); ``x^-1``; or a bracketed path alone, meaning that path.
    """
    s = text.strip()
    if s == "0":
        return Zero
    try:
        if "|" in s:
            left, _, right = s.partition("|")
            if "|" in right:
                raise ElementError(f"too many '|' in {text!r}")
            u, v = parse_path(g, left), parse_path(g, right)
            if u.range != v.range:
                raise ElementError(
                    f"range mismatch in {text!r}: r(u) = {u.range} but r(v) = {v.range}"
                )
            return NonZero(u, v)
        if s.endswith("^-1"):
            e = s[:-3]
            if not g.has_edge(e):
                raise ElementError(f"unknown edge {e!r} in {text!r}")
            return edge_inverse(g, e)
        if g.has_edge(s):
            return edge_element(g, s)
        if s.startswith("["):
            return path_element(parse_path(g, s))
        if s and not any(c.isspace() for c in s) and not g.has_vertex(s):
            raise ElementError(f"unknown vertex or edge {s!r}")
        return vertex_element(parse_path(g, s).source)
    except PathError as exc:
        raise ElementError(str(exc)) from None


def validate_element(g: Graph, a: Element) -> None:
    if a is Zero:
        return
    validate_path(g, a.u)
    validate_path(g, a.v)
