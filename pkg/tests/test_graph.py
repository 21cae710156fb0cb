import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import PATTERN_EDGES, e1, gnp, naive_induced
from thcover import (
    Graph,
    ParseError,
    VertexOrdering,
    find_induced,
    pair_lex_compare,
    parse_graph,
    parse_ordering,
    serialize_graph,
    serialize_ordering,
)


class TestParse:
    def test_header_and_edges(self, seven):
        assert seven.n == 7
        assert seven.m == 13
        assert seven.edges[0] == (0, 3)
        assert seven.has_edge(3, 0) and not seven.has_edge(0, 1)

    def test_comments_and_whitespace_ignored(self):
        g = parse_graph("# c\n3 2\n\n1 2\n# mid\n2 3\n")
        assert g.edges == ((0, 1), (1, 2))

    def test_single_vertex_no_edges(self):
        g = parse_graph("1 0")
        assert (g.n, g.m) == (1, 0)

    def test_edges_normalized_sorted(self):
        g = parse_graph("3 2\n3 2\n2 1\n")
        assert g.edges == ((0, 1), (1, 2))

    @pytest.mark.parametrize(
        "text, fragment",
        [
            ("", "missing header"),
            ("x y", "line 1"),
            ("2 1\n1 3", "line 2: vertex out of range"),
            ("2 1\n1 1", "line 2: self-loop"),
            ("2 2\n1 2\n1 2", "line 3: duplicate edge 1 2 (first at line 2)"),
            ("3 2\n1 2", "expected 2 edge lines, found 1"),
            ("2 1\n1 2\n3 4", "expected 1 edge lines, found 2"),
        ],
    )
    def test_rejections_carry_line_numbers(self, text, fragment):
        with pytest.raises(ParseError) as exc:
            parse_graph(text)
        assert fragment in str(exc.value)

    def test_roundtrip_identity(self, seven):
        assert parse_graph(serialize_graph(seven)) == seven

    @given(st.integers(0, 9), st.randoms(use_true_random=False))
    @settings(max_examples=50, deadline=None)
    def test_roundtrip_random(self, n, rng):
        g = gnp(n, 0.4, rng)
        assert parse_graph(serialize_graph(g)) == g

    def test_from_edges_validation(self):
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(0, 0)])
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(0, 1), (1, 0)])
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(0, 3)])

    def test_edge_input_order_irrelevant(self):
        lines = ["1 4", "2 3", "3 4", "1 2"]
        texts = ["4 4\n" + "\n".join(p) for p in itertools.permutations(lines)]
        graphs = {parse_graph(t) for t in texts}
        assert len(graphs) == 1


class TestGraphApi:
    def test_degree_neighbors(self, seven):
        assert seven.degree(3) == 5  # vertex 4 touches 1 2 5 6 7
        assert sorted(seven.neighbors(3)) == [0, 1, 4, 5, 6]

    def test_subgraph_keeps_vertex_count(self, seven):
        h = seven.subgraph(e1("14 45"))
        assert h.n == 7 and h.edges == ((0, 3), (3, 4))

    def test_nonadj_irreflexive(self, seven):
        assert not seven.nonadj.diagonal().any()
        assert not seven.adj.diagonal().any()
        assert seven.nonadj[0, 1] and not seven.nonadj[0, 3]


class TestPairLex:
    def test_identity_examples(self):
        o = VertexOrdering.identity(7)
        assert pair_lex_compare(o, (0, 3), (0, 4)) < 0
        assert pair_lex_compare(o, (1, 2), (0, 6)) > 0
        assert pair_lex_compare(o, (1, 2), (1, 2)) == 0

    def test_good_order_example(self, good_order):
        # ranks: v4 -> 2, v7 -> 6 versus v3 -> 7, v5 -> 3
        assert pair_lex_compare(good_order, (3, 6), (2, 4)) < 0

    @given(st.randoms(use_true_random=False))
    @settings(max_examples=50, deadline=None)
    def test_total_order(self, rng):
        n = 8
        seq = list(range(n))
        rng.shuffle(seq)
        o = VertexOrdering.from_sequence(tuple(seq))
        pairs = list(itertools.combinations(range(n), 2))
        sample = rng.sample(pairs, 8)
        for p, q in itertools.product(sample, repeat=2):
            c = pair_lex_compare(o, p, q)
            assert c == -pair_lex_compare(o, q, p)
            assert (c == 0) == (p == q)
        for p, q, r in itertools.product(sample, repeat=3):
            if pair_lex_compare(o, p, q) < 0 and pair_lex_compare(o, q, r) < 0:
                assert pair_lex_compare(o, p, r) < 0

    def test_sorted_by_pair_key_matches_compare(self, good_order):
        pairs = list(itertools.combinations(range(7), 2))
        by_key = sorted(pairs, key=good_order.pair_key)
        for a, b in zip(by_key, by_key[1:]):
            assert pair_lex_compare(good_order, a, b) < 0


class TestOrderingIo:
    def test_roundtrip(self):
        o = VertexOrdering.from_sequence((2, 0, 1))
        assert parse_ordering(serialize_ordering(o), 3) == o

    def test_sequence_and_rank(self):
        o = VertexOrdering.from_sequence((0, 3, 4, 5, 1, 6, 2))
        assert o.sequence == (0, 3, 4, 5, 1, 6, 2)
        assert o.rank(3) == 2 and o.rank(2) == 7

    @pytest.mark.parametrize(
        "text, n",
        [("1 2 2", 3), ("0 1 2", 3), ("1 2", 3), ("a b c", 3)],
    )
    def test_rejections(self, text, n):
        with pytest.raises(ParseError):
            parse_ordering(text, n)


class TestFindInduced:
    def test_path_has_no_2k2(self):
        g = Graph.from_edges(4, e1("12 23 34"))
        assert find_induced(g, "2K2") is None

    def test_c4_witness(self):
        g = Graph.from_edges(4, e1("12 23 34 14"))
        w = find_induced(g, "C4")
        assert w is not None and w.vertices == (0, 1, 2, 3)
        assert set(w.edges(g)) == set(e1("12 23 34 14"))

    def test_paraglider_witness_nonedges(self, paraglider):
        w = find_induced(paraglider, "paraglider")
        assert w is not None
        verts = w.vertices
        nonedges = {
            frozenset((verts[i], verts[j]))
            for i, j in itertools.combinations(range(5), 2)
            if not paraglider.has_edge(verts[i], verts[j])
        }
        assert nonedges == {frozenset(e) for e in e1("13 14 25")}

    def test_unknown_pattern(self, seven):
        with pytest.raises(ValueError):
            find_induced(seven, "K5")

    @pytest.mark.parametrize("pattern", sorted(PATTERN_EDGES))
    def test_agrees_with_naive_exhaustive_n5(self, pattern):
        slots = list(itertools.combinations(range(5), 2))
        for mask in range(1 << len(slots)):
            g = Graph.from_edges(5, [e for k, e in enumerate(slots) if (mask >> k) & 1])
            got = find_induced(g, pattern)
            want = naive_induced(g, pattern)
            assert (got.vertices if got else None) == want

    @pytest.mark.parametrize("pattern", sorted(PATTERN_EDGES))
    def test_agrees_with_naive_random(self, pattern):
        rng = random.Random(5)
        for _ in range(40):
            g = gnp(rng.choice((6, 7)), rng.choice((0.3, 0.5, 0.7)), rng)
            got = find_induced(g, pattern)
            want = naive_induced(g, pattern)
            assert (got.vertices if got else None) == want
