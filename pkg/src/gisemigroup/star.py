"""Witness search for the length-increasing multiplier condition, and the
compact-or-discrete classifier built on decidable graph properties."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .elements import NonZero, format_element, mul, path_element
from .graph import Graph, gis_is_infinite, is_strongly_connected, weakly_connected_components
from .paths import Path, concat, enumerate_paths, format_path, strip_prefix, validate_path

DEFAULT_K = 5
DEFAULT_MU_WINDOW = 6
DEFAULT_PROBE_LEN = 4


@dataclass(frozen=True)
class StarWitness:
    """A multiplier mu = ab^-1 with |a| > |b| and the paths it lengthens.

    For x in `subset`, b is a prefix of x, so mu * x is the path a(x minus b),
    listed in `images` in the same order.
    """

    mu: NonZero
    subset: tuple[Path, ...]
    images: tuple[Path, ...]

    def check(self) -> bool:
        """Recompute every image with the semigroup product."""
        for x, y in zip(self.subset, self.images, strict=True):
            prod = mul(self.mu, path_element(x))
            if not (isinstance(prod, NonZero) and prod.v.is_trivial and prod.u == y and len(y) > len(x)):
                return False
        return True

    def as_dict(self) -> dict:
        return {
            "mu": format_element(self.mu),
            "subset": [format_path(x) for x in self.subset],
            "images": [format_path(y) for y in self.images],
        }


def _multiplier_candidates(g: Graph, mu_window: int):
    # Multipliers that cancel a nontrivial prefix come first, then plain paths
    # (trivial b); within each group by a, then b, in path order.
    paths = enumerate_paths(g, mu_window)
    plain = []
    for a in paths:
        if a.is_trivial:
            continue
        for b in paths:
            if len(b) >= len(a):
                break
            if b.range != a.range:
                continue
            if b.is_trivial:
                plain.append((a, b))
            else:
                yield a, b
    yield from plain


def star_witness_search(g: Graph, A: Sequence[Path], k: int, mu_window: int) -> StarWitness | None:
    """First multiplier (canonical order) lengthening at least k members of A.

    None is evidence only: it says nothing beyond this A and this window.
    """
    if not A:
        raise ValueError("A must be nonempty")
    if k < 1:
        raise ValueError("k must be at least 1")
    for x in A:
        validate_path(g, x)
    by_prefix: dict[Path, list[tuple[Path, Path]]] = {}
    for a, b in _multiplier_candidates(g, mu_window):
        if b not in by_prefix:
            by_prefix[b] = [(x, r) for x in A if (r := strip_prefix(b, x)) is not None]
        hits = by_prefix[b]
        if len(hits) < k:
            continue
        mu = NonZero(a, b)
        return StarWitness(mu, tuple(x for x, _ in hits), tuple(concat(a, r) for _, r in hits))
    return None


@dataclass(frozen=True)
class StarCriterion:
    """Outcome of the sufficient criterion; `vacuous` marks a finite semigroup."""

    holds: bool
    vacuous: bool = False

    def __bool__(self):
        return self.holds


def star_sufficient(g: Graph) -> StarCriterion:
    if not gis_is_infinite(g):
        return StarCriterion(True, vacuous=True)
    return StarCriterion(is_strongly_connected(g))


class Outcome(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNKNOWN = "unknown"


REASON_TEXT = {
    "FINITE": "the semigroup is finite, so every Hausdorff topology on it is discrete and compact",
    "PROP1_DECOMPOSITION": (
        "the graph splits into two disjoint parts with infinite semigroups; such a union "
        "carries a locally compact topology that is neither compact nor discrete"
    ),
    "MAIN_THEOREM": (
        "the only component with an infinite semigroup is strongly connected on finitely many "
        "vertices, so every locally compact shift-continuous topology is compact or discrete"
    ),
    "GENERALIZATION_REMARK": (
        "the remaining components have a finite semigroup, which does not affect the dichotomy"
    ),
    "OPEN_QUESTION": (
        "one infinite component that is not strongly connected; no known result decides this case"
    ),
}


@dataclass
class Verdict:
    outcome: Outcome
    reasons: list[str]
    evidence: dict = field(default_factory=dict)

    @property
    def codes(self) -> tuple[str, ...]:
        return tuple(self.reasons)

    def headline(self) -> str:
        return f"{self.outcome.value.upper()} ({', '.join(self.reasons)})"

    def as_dict(self) -> dict:
        return {
            "outcome": self.outcome.value,
            "reasons": [{"code": c, "text": REASON_TEXT[c]} for c in self.reasons],
            "evidence": self.evidence,
        }


def _component_summary(c: Graph) -> dict:
    return {
        "vertices": list(c.vertices),
        "edges": [e.id for e in c.edges],
        "strongly_connected": is_strongly_connected(c),
        "infinite_gis": gis_is_infinite(c),
    }


def star_probe(g: Graph, max_len: int = DEFAULT_PROBE_LEN, k: int = DEFAULT_K, mu_window: int = DEFAULT_MU_WINDOW) -> dict:
    A = enumerate_paths(g, max_len)
    probe = {"max_len": max_len, "k": k, "mu_window": mu_window, "paths": len(A), "witness": None}
    if A:
        w = star_witness_search(g, A, k, mu_window)
        if w is not None:
            probe["witness"] = {"mu": format_element(w.mu), "subset_size": len(w.subset)}
    return probe


def classify_dichotomy(
    g: Graph, *, probe_len: int = DEFAULT_PROBE_LEN, k: int = DEFAULT_K, mu_window: int = DEFAULT_MU_WINDOW
) -> Verdict:
    comps = weakly_connected_components(g)
    summaries = [_component_summary(c) for c in comps]
    infinite = [i for i, s in enumerate(summaries) if s["infinite_gis"]]
    crit = star_sufficient(g)
    evidence = {
        "components": summaries,
        "strongly_connected": [s["strongly_connected"] for s in summaries],
        "infinite_gis": [s["infinite_gis"] for s in summaries],
        "star_sufficient": crit.holds,
        "star_vacuous": crit.vacuous,
        "decomposable": len(infinite) >= 2,
        "star_probe": star_probe(g, probe_len, k, mu_window),
    }

    if not infinite:
        return Verdict(Outcome.HOLDS, ["FINITE"], evidence)
    if len(infinite) >= 2:
        evidence["witness_components"] = infinite[:2]
        return Verdict(Outcome.FAILS, ["PROP1_DECOMPOSITION"], evidence)
    (only,) = infinite
    if summaries[only]["strongly_connected"]:
        evidence["certificate_component"] = only
        reasons = ["MAIN_THEOREM"]
        if len(comps) > 1:
            reasons.append("GENERALIZATION_REMARK")
        return Verdict(Outcome.HOLDS, reasons, evidence)
    return Verdict(Outcome.UNKNOWN, ["OPEN_QUESTION"], evidence)
