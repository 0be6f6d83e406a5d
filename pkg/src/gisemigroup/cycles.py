"""The local monoid of cycles at a vertex and its polycyclic model.

Cycles at a vertex e factor uniquely into first-return cycles (cycles meeting e
only at their ends). Indexing the first-return cycles u_0, u_1, ... turns every
element uv^-1 with u, v cycles at e into a pair of words over those indices,
which is a normal form in the polycyclic monoid on that many generators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .elements import Element, NonZero, Zero, inv, mul
from .graph import Graph, has_cycle, reachable_from, reaching
from .paths import Path, concat, cycles_at, first_return_cycles_at


class CycleError(ValueError):
    pass


class _PolyZero:
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "PolyZero"

    def __str__(self):
        return "0"

    def __reduce__(self):
        return (_PolyZero, ())


PolyZero = _PolyZero()


@dataclass(frozen=True)
class Poly:
    """``p_left . (p_right)^-1`` with words of generator indices."""

    left: tuple[int, ...] = ()
    right: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "left", tuple(self.left))
        object.__setattr__(self, "right", tuple(self.right))

    def __str__(self):
        return format_poly(self)


PolyElement = Union[_PolyZero, Poly]
PolyOne = Poly()


def _check_indices(a: PolyElement, lam: int) -> None:
    if a is PolyZero:
        return
    for i in a.left + a.right:
        if not 0 <= i < lam:
            raise CycleError(f"generator index {i} out of range for rank {lam}")


def _strip_word(prefix: tuple[int, ...], word: tuple[int, ...]) -> tuple[int, ...] | None:
    n = len(prefix)
    if word[:n] == prefix:
        return word[n:]
    return None


def poly_mul(a: PolyElement, b: PolyElement, lam: int) -> PolyElement:
    _check_indices(a, lam)
    _check_indices(b, lam)
    if a is PolyZero or b is PolyZero:
        return PolyZero
    s, t = a.left, a.right
    u, v = b.left, b.right
    w = _strip_word(t, u)
    if w is not None:
        return Poly(s + w, v)
    w = _strip_word(u, t)
    if w is not None:
        return Poly(s, v + w)
    return PolyZero


def poly_inv(a: PolyElement) -> PolyElement:
    if a is PolyZero:
        return PolyZero
    return Poly(a.right, a.left)


def format_poly(a: PolyElement) -> str:
    if a is PolyZero:
        return "0"
    if not a.left and not a.right:
        return "1"
    parts = [" ".join(f"p{i}" for i in a.left)] if a.left else []
    if a.right:
        parts.append("(" + " ".join(f"p{i}" for i in a.right) + ")^-1")
    return " . ".join(parts)


def _is_cycle_at(u: Path, e: str) -> bool:
    return u.source == e and u.range == e


def factor_cycle(g: Graph, e: str, u: Path) -> list[Path]:
    """Split a cycle at e into first-return cycles by cutting at each return to e."""
    if not g.has_vertex(e):
        raise CycleError(f"unknown vertex {e!r}")
    if not _is_cycle_at(u, e):
        raise CycleError(f"{u} is not a cycle at {e}")
    factors = []
    start = 0
    for i, eid in enumerate(u.edges):
        if g.edge(eid).range == e:
            factors.append(Path(e, e, u.edges[start : i + 1]))
            start = i + 1
    if start != len(u.edges):
        raise CycleError(f"{u} does not end at {e}")
    for f in factors:
        # each piece meets e only at its ends by construction
        assert all(g.edge(x).range != e for x in f.edges[:-1])
    return factors


@dataclass(frozen=True)
class CycleMonoidType:
    """Isomorphism type of the monoid generated by the cycles at a vertex.

    `rank` is the number of first-return cycles other than the vertex itself;
    None means infinitely many, in which case `generators` lists only those up to
    the window and `truncated` is set.
    """

    kind: str  # "trivial" | "bicyclic" | "polycyclic"
    rank: int | None
    generators: tuple[Path, ...] = ()
    truncated: bool = False

    def __str__(self):
        if self.kind == "trivial":
            return "Trivial"
        if self.kind == "bicyclic":
            return "Bicyclic"
        return f"Polycyclic({'inf' if self.rank is None else self.rank})"


def _returns_to(g: Graph, e: str) -> bool:
    return any(e in reachable_from(g, x.range) for x in g.out_edges(e))


def cycle_monoid_type(g: Graph, e: str, window: int) -> CycleMonoidType:
    if not g.has_vertex(e):
        raise CycleError(f"unknown vertex {e!r}")
    if not _returns_to(g, e):
        return CycleMonoidType("trivial", 0)

    # Vertices lying on some cycle through e. First-return cycles are
    # e -> (path avoiding e) -> e inside this set, so there are finitely many
    # exactly when the set minus e carries no cycle.
    core = reachable_from(g, e) & reaching(g, e)
    inner = g.subgraph(core - {e})
    if has_cycle(inner):
        gens = tuple(first_return_cycles_at(g, e, window)[1:])
        return CycleMonoidType("polycyclic", None, gens, truncated=True)

    # an e-avoiding simple walk inside `core` has at most |core| - 1 vertices
    gens = tuple(first_return_cycles_at(g, e, len(core))[1:])
    kind = "bicyclic" if len(gens) == 1 else "polycyclic"
    return CycleMonoidType(kind, len(gens), gens)


class GeneratorIndex:
    """Maps first-return cycles at e to their index in canonical order.

    The order is by (length, edge ids), so the index of a cycle depends only on
    strictly smaller cycles and stays stable as the table grows.
    """

    def __init__(self, g: Graph, e: str):
        if not g.has_vertex(e):
            raise CycleError(f"unknown vertex {e!r}")
        self.g = g
        self.e = e
        self._depth = -1
        self._gens: list[Path] = []
        self._index: dict[Path, int] = {}

    def _grow(self, depth: int) -> None:
        if depth <= self._depth:
            return
        self._gens = first_return_cycles_at(self.g, self.e, depth)[1:]
        self._index = {p: i for i, p in enumerate(self._gens)}
        self._depth = depth

    def index(self, u: Path) -> int:
        self._grow(len(u))
        try:
            return self._index[u]
        except KeyError:
            raise CycleError(f"{u} is not a first-return cycle at {self.e}") from None

    def generator(self, i: int, max_len: int) -> Path:
        self._grow(max_len)
        return self._gens[i]

    def word(self, u: Path) -> tuple[int, ...]:
        return tuple(self.index(f) for f in factor_cycle(self.g, self.e, u))


def in_local_monoid(e: str, a: Element) -> bool:
    return a is Zero or (_is_cycle_at(a.u, e) and _is_cycle_at(a.v, e))


def iso_to_polycyclic(g: Graph, e: str, a: Element, index: GeneratorIndex | None = None) -> PolyElement:
    if not in_local_monoid(e, a):
        raise CycleError(f"{a} does not lie in the local monoid at {e}")
    if a is Zero:
        return PolyZero
    index = index or GeneratorIndex(g, e)
    return Poly(index.word(a.u), index.word(a.v))


def from_polycyclic(g: Graph, e: str, a: PolyElement, index: GeneratorIndex, max_len: int) -> Element:
    """Inverse of `iso_to_polycyclic` for words over generators of length <= max_len."""
    if a is PolyZero:
        return Zero

    def path(word):
        p = Path.trivial(e)
        for i in word:
            p = concat(p, index.generator(i, max_len))
        return p

    return NonZero(path(a.left), path(a.right))


@dataclass
class IsoReport:
    vertex: str
    window: int
    monoid_type: CycleMonoidType
    elements: int = 0
    pairs_checked: int = 0
    pairs_skipped: int = 0
    hom_failures: int = 0
    inverse_failures: int = 0
    injectivity_failures: int = 0
    counterexamples: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.hom_failures or self.inverse_failures or self.injectivity_failures)

    def as_dict(self) -> dict:
        return {
            "vertex": self.vertex,
            "window": self.window,
            "type": str(self.monoid_type),
            "elements": self.elements,
            "pairs_checked": self.pairs_checked,
            "pairs_skipped": self.pairs_skipped,
            "hom_failures": self.hom_failures,
            "inverse_failures": self.inverse_failures,
            "injectivity_failures": self.injectivity_failures,
            "counterexamples": list(self.counterexamples),
        }


def _fits(a: Element, window: int) -> bool:
    return a is Zero or (len(a.u) <= window and len(a.v) <= window)


def verify_iso_window(g: Graph, e: str, window: int, max_counterexamples: int = 10) -> IsoReport:
    """Check that the cycle-word map is an injective homomorphism on a window.

    Elements are 0 and uv^-1 with u, v cycles at e of length <= window. Products
    leaving the window are skipped and counted.
    """
    mtype = cycle_monoid_type(g, e, window)
    report = IsoReport(e, window, mtype)
    cyc = cycles_at(g, e, window)
    elems: list[Element] = [Zero] + [NonZero(u, v) for u in cyc for v in cyc]
    report.elements = len(elems)
    index = GeneratorIndex(g, e)
    lam = max(1, len(first_return_cycles_at(g, e, window)) - 1)
    image = {a: iso_to_polycyclic(g, e, a, index) for a in elems}

    def note(msg):
        if len(report.counterexamples) < max_counterexamples:
            report.counterexamples.append(msg)

    seen: dict = {}
    for a, fa in image.items():
        if fa in seen:
            report.injectivity_failures += 1
            note(f"f({a}) = f({seen[fa]}) = {fa}")
        seen[fa] = a
        if iso_to_polycyclic(g, e, inv(a), index) != poly_inv(fa):
            report.inverse_failures += 1
            note(f"f(inv({a})) != inv(f({a}))")

    for a in elems:
        fa = image[a]
        for b in elems:
            ab = mul(a, b)
            if not _fits(ab, window):
                report.pairs_skipped += 1
                continue
            report.pairs_checked += 1
            if image[ab] != poly_mul(fa, image[b], lam):
                report.hom_failures += 1
                note(f"f({a} * {b}) = {image[ab]} but f({a}) f({b}) = {poly_mul(fa, image[b], lam)}")
    return report
