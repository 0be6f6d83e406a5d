import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import CORPUS_NAMES, oracle_paths
from gisemigroup.graph import Graph
from gisemigroup.paths import (
    Path,
    PathError,
    concat,
    cycles_at,
    enumerate_paths,
    first_return_cycles_at,
    format_path,
    is_prefix,
    parse_path,
    path_of,
    prefixes,
    strip_prefix,
    strip_suffix,
    suffixes,
)

LOOP = Graph(["a"], [("p", "a", "a")])
XYZ = Graph(["v0", "v1"], [("x", "v0", "v1"), ("y", "v1", "v0"), ("z", "v1", "v0")])
EDGE = Graph(["v0", "v1"], [("x", "v0", "v1")])
TWO = Graph(["v0", "v1"], [("x", "v0", "v1"), ("y", "v1", "v0")])


def P(g, *ids):
    if len(ids) == 1 and g.has_vertex(ids[0]):
        return Path.trivial(ids[0])
    return path_of(g, ids)


class TestConcat:
    def test_trivial_is_left_identity(self):
        assert concat(Path.trivial("v0"), P(TWO, "x")) == P(TWO, "x")

    def test_trivial_is_right_identity(self):
        assert concat(P(TWO, "x"), Path.trivial("v1")) == P(TWO, "x")

    def test_composable(self):
        xy = concat(P(TWO, "x"), P(TWO, "y"))
        assert xy == P(TWO, "x", "y")
        assert len(xy) == 2 and xy.source == "v0" and xy.range == "v0"

    def test_not_composable(self):
        assert concat(P(TWO, "x"), P(TWO, "x")) is None

    def test_trivial_paths_differ_from_edges(self):
        assert Path.trivial("v0") != P(TWO, "x")
        assert Path.trivial("v0") == Path.trivial("v0")

    @pytest.mark.parametrize("name", CORPUS_NAMES)
    def test_associative(self, graphs, name):
        g = graphs[name]
        paths = enumerate_paths(g, 3)
        for a, b, c in itertools.product(paths, repeat=3):
            if len(a) + len(b) + len(c) > 6:
                continue
            ab, bc = concat(a, b), concat(b, c)
            if ab is not None and bc is not None:
                assert concat(ab, c) == concat(a, bc)


class TestPrefix:
    def test_strip_leading_edge(self):
        assert strip_prefix(P(TWO, "x"), P(TWO, "x", "y")) == P(TWO, "y")

    def test_self_prefix(self):
        assert strip_prefix(P(TWO, "x", "y"), P(TWO, "x", "y")) == Path.trivial("v0")

    def test_not_a_prefix(self):
        assert not is_prefix(P(TWO, "y"), P(TWO, "x", "y"))
        assert strip_prefix(P(TWO, "y"), P(TWO, "x", "y")) is None

    def test_trivial_source_is_prefix(self):
        assert strip_prefix(Path.trivial("v0"), P(TWO, "x", "y")) == P(TWO, "x", "y")
        assert strip_prefix(Path.trivial("v1"), P(TWO, "x", "y")) is None

    def test_suffix(self):
        assert strip_suffix(P(TWO, "y"), P(TWO, "x", "y")) == P(TWO, "x")
        assert strip_suffix(Path.trivial("v0"), P(TWO, "x", "y")) == P(TWO, "x", "y")
        assert strip_suffix(P(TWO, "x"), P(TWO, "x", "y")) is None

    @pytest.mark.parametrize("name", CORPUS_NAMES)
    def test_remainders_reconstruct(self, graphs, name):
        g = graphs[name]
        paths = enumerate_paths(g, 3)
        for p, x in itertools.product(paths, repeat=2):
            z = strip_prefix(p, x)
            if z is not None:
                assert concat(p, z) == x
            z = strip_suffix(p, x)
            if z is not None:
                assert concat(z, p) == x

    def test_prefixes_and_suffixes_lists(self):
        x = P(XYZ, "x", "y", "x")
        assert prefixes(XYZ, x) == [Path.trivial("v0"), P(XYZ, "x"), P(XYZ, "x", "y"), x]
        assert suffixes(XYZ, x) == [Path.trivial("v1"), P(XYZ, "x"), P(XYZ, "y", "x"), x]


class TestEnumeration:
    def test_loop_to_two(self):
        assert enumerate_paths(LOOP, 2) == [Path.trivial("a"), P(LOOP, "p"), P(LOOP, "p", "p")]

    def test_single_edge_stops(self):
        assert enumerate_paths(EDGE, 3) == [Path.trivial("v0"), Path.trivial("v1"), P(EDGE, "x")]

    def test_length_zero(self):
        assert enumerate_paths(XYZ, 0) == [Path.trivial("v0"), Path.trivial("v1")]

    @pytest.mark.parametrize("name", CORPUS_NAMES)
    @pytest.mark.parametrize("n", [0, 1, 3, 5])
    def test_matches_product_oracle(self, graphs, name, n):
        got = enumerate_paths(graphs[name], n)
        assert len(got) == len(set(got))
        assert set(got) == oracle_paths(graphs[name], n)
        assert got == sorted(got, key=Path.sort_key)

    @pytest.mark.parametrize("name", CORPUS_NAMES)
    def test_closed_under_prefixes(self, graphs, name):
        g = graphs[name]
        got = set(enumerate_paths(g, 4))
        for p in got:
            assert set(prefixes(g, p)) <= got


class TestCycleLists:
    def test_loop_powers(self):
        assert cycles_at(LOOP, "a", 3) == [Path.trivial("a")] + [P(LOOP, *["p"] * i) for i in (1, 2, 3)]

    def test_xyz_cycles(self):
        assert cycles_at(XYZ, "v0", 2) == [Path.trivial("v0"), P(XYZ, "x", "y"), P(XYZ, "x", "z")]

    def test_acyclic(self):
        assert cycles_at(EDGE, "v1", 5) == [Path.trivial("v1")]
        assert first_return_cycles_at(EDGE, "v0", 5) == [Path.trivial("v0")]

    def test_first_return_xyz(self):
        got = first_return_cycles_at(XYZ, "v0", 4)
        assert got == [Path.trivial("v0"), P(XYZ, "x", "y"), P(XYZ, "x", "z")]

    def test_first_return_loop(self):
        assert first_return_cycles_at(LOOP, "a", 3) == [Path.trivial("a"), P(LOOP, "p")]

    def test_unknown_vertex(self):
        with pytest.raises(PathError):
            cycles_at(LOOP, "zz", 2)
        with pytest.raises(PathError):
            first_return_cycles_at(LOOP, "zz", 2)

    @pytest.mark.parametrize("name", CORPUS_NAMES)
    def test_filters_of_enumeration(self, graphs, name):
        g = graphs[name]
        paths = enumerate_paths(g, 5)
        for v in g.vertices:
            cyc = [p for p in paths if p.source == v and p.range == v]
            assert cycles_at(g, v, 5) == cyc
            first = [p for p in cyc if all(q.range != v for q in prefixes(g, p)[1:-1])]
            assert first_return_cycles_at(g, v, 5) == first
            assert set(first) <= set(cyc)


class TestLiterals:
    def test_round_trip(self):
        for p in enumerate_paths(XYZ, 3):
            assert parse_path(XYZ, format_path(p)) == p

    def test_format(self):
        assert format_path(P(XYZ, "x", "y")) == "[x y]"
        assert format_path(Path.trivial("v0")) == "v0"

    @pytest.mark.parametrize("text", ["[x x]", "[q]", "w", "[]", "[x", "x", "v0 v1"])
    def test_rejects(self, text):
        with pytest.raises(PathError):
            parse_path(XYZ, text)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.sampled_from(["x", "y", "z"]), min_size=1, max_size=6))
def test_path_of_accepts_exactly_alternating_words(ids):
    ok = all((a == "x") != (b == "x") for a, b in zip(ids, ids[1:]))
    if ok:
        assert path_of(XYZ, ids).edges == tuple(ids)
    else:
        with pytest.raises(PathError):
            path_of(XYZ, ids)
