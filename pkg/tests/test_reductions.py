import itertools
import random

import pytest
from helpers import fz1, g1, gnp
from thcover import Graph, PreconditionError, cover2, verify_cover
from thcover.oracle import GenSpec, brute_chain_cover2, generate
from thcover.recognition import is_chain, is_paraglider_free, is_threshold
from thcover.reductions import (
    bipartition,
    chain_cover2,
    cover2_paraglider_free,
    cover2_split,
    hat_graph,
    verify_chain_cover,
)


class TestBipartition:
    def test_path(self):
        assert bipartition(g1(5, "12 23 34 45")) == ([0, 2, 4], [1, 3])

    def test_disconnected_components_color_independently(self):
        assert bipartition(g1(4, "12 34")) == ([0, 2], [1, 3])

    def test_odd_cycle_is_reported(self):
        with pytest.raises(PreconditionError) as err:
            bipartition(g1(3, "12 23 13"))
        cycle = err.value.witness
        assert len(cycle) % 2 == 1 and len(set(cycle)) == len(cycle)

    def test_matches_graph_structure(self):
        rng = random.Random(51)
        for _ in range(40):
            a = rng.randrange(1, 5)
            b = rng.randrange(1, 5)
            edges = [
                (u, a + v)
                for u in range(a)
                for v in range(b)
                if rng.random() < 0.6
            ]
            g = Graph.from_edges(a + b, edges)
            left, right = bipartition(g)
            sides = {v: 0 for v in left} | {v: 1 for v in right}
            assert all(sides[u] != sides[v] for u, v in g.edges)


class TestHatGraph:
    def test_completes_chosen_side(self):
        k22 = Graph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
        hat = hat_graph(k22, ([0, 1], [2, 3]), "A")
        assert hat.graph.m == 5
        assert hat.fill_edges == frozenset({(0, 1)})
        assert hat.clique == (0, 1) and hat.independent == (2, 3)

    def test_fill_edges_complete_a_clique(self):
        g = g1(4, "12 34")
        hat = hat_graph(g, ([0, 2], [1, 3]), "A")
        assert hat.graph.m == 3
        assert set(hat.graph.edges) == set(g.edges) | hat.fill_edges
        assert hat.fill_edges == frozenset({(0, 2)})
        clique = set(hat.clique)
        assert all(u in clique and v in clique for u, v in hat.fill_edges)

    def test_rejects_bad_side_and_partition(self):
        g = g1(4, "12 34")
        with pytest.raises(ValueError):
            hat_graph(g, ([0, 2], [1, 3]), "C")
        with pytest.raises(PreconditionError):
            hat_graph(g, ([0], [1, 3]), "A")
        with pytest.raises(PreconditionError):
            hat_graph(g, ([0, 1], [2, 3]), "A")

    def test_chain_iff_filled_graph_threshold(self):
        # the reduction's core identity, checked on every bipartite graph
        # with parts {0, 1} x {2, 3, 4}
        slots = [(u, v) for u in (0, 1) for v in (2, 3, 4)]
        part = ([0, 1], [2, 3, 4])
        for bits in range(1 << len(slots)):
            g = Graph.from_edges(5, [e for k, e in enumerate(slots) if (bits >> k) & 1])
            chain_ok, _ = is_chain(g, part)
            for side in ("A", "B"):
                hat_ok, _ = is_threshold(hat_graph(g, part, side).graph)
                assert chain_ok == hat_ok


class TestChainCover2:
    def test_single_chain_graph_shares_everything(self):
        star = g1(4, "12 13 14")
        res = chain_cover2(star)
        assert res.found
        assert res.c1 == res.c2 == frozenset(star.edges)
        assert res.partition == ((0,), (1, 2, 3))
        assert verify_chain_cover(star, res)

    def test_path_splits_into_two_chains(self):
        p5 = g1(5, "12 23 34 45")
        res = chain_cover2(p5)
        assert res.c1 == frozenset({(0, 1), (1, 2), (2, 3)})
        assert res.c2 == frozenset({(1, 2), (2, 3), (3, 4)})
        assert res.clique_side == "B"  # smaller part gets completed
        assert verify_chain_cover(p5, res)

    def test_side_override(self):
        p5 = g1(5, "12 23 34 45")
        res = chain_cover2(p5, side="A")
        assert res.found and res.clique_side == "A"
        assert verify_chain_cover(p5, res)

    def test_three_disjoint_edges_are_certified(self):
        g = g1(6, "12 34 56")
        res = chain_cover2(g)
        assert not res.found and res.c1 is None
        assert len(res.certificate) == 3
        assert res.certificate.edges == ((2, 3), (0, 1), (4, 5))
        assert not brute_chain_cover2(g, ([0, 2, 4], [1, 3, 5]))

    def test_rejects_odd_cycles(self, c5):
        with pytest.raises(PreconditionError):
            chain_cover2(c5)

    def test_matches_brute_force_exhaustively(self):
        slots = [(u, v) for u in (0, 1) for v in (2, 3, 4)]
        for bits in range(1 << len(slots)):
            g = Graph.from_edges(5, [e for k, e in enumerate(slots) if (bits >> k) & 1])
            res = chain_cover2(g)
            part = (list(res.partition[0]), list(res.partition[1]))
            assert res.found == brute_chain_cover2(g, part)
            if res.found:
                assert verify_chain_cover(g, res)

    def test_matches_brute_force_random(self):
        rng = random.Random(52)
        for _ in range(40):
            a = rng.randrange(2, 5)
            b = rng.randrange(2, 5)
            edges = [
                (u, a + v) for u in range(a) for v in range(b) if rng.random() < 0.5
            ]
            g = Graph.from_edges(a + b, edges)
            res = chain_cover2(g)
            part = (list(res.partition[0]), list(res.partition[1]))
            assert res.found == brute_chain_cover2(g, part)
            if res.found:
                assert verify_chain_cover(g, res)


class TestCover2Split:
    def test_rejects_non_split_input(self):
        with pytest.raises(PreconditionError):
            cover2_split(g1(4, "12 23 34 14"))

    def test_matches_general_pipeline(self):
        count = 0
        for g in generate(GenSpec("random-split", 8, p=0.5, seed=53, samples=60)):
            res = cover2_split(g, verify=True)
            assert res.found == cover2(g).found
            if res.found:
                assert res.log.verify.ok
                count += 1
        assert count > 30

    def test_any_ordering_works(self):
        for g in generate(GenSpec("random-split", 7, p=0.5, seed=54, samples=20)):
            for seed in (0, 1, 2):
                res = cover2_split(g, order_seed=seed, verify=True)
                if res.found:
                    assert res.log.verify.ok

    def test_no_cover_split_graph_is_certified(self):
        g = Graph.from_edges(6, [(0, 1), (0, 2), (0, 5), (1, 2), (1, 4), (2, 3)])
        res = cover2_split(g)
        assert not res.found
        assert len(res.certificate) == 3
        assert not cover2(g).found


class TestCover2ParagliderFree:
    def test_rejects_paraglider(self, paraglider):
        with pytest.raises(PreconditionError) as err:
            cover2_paraglider_free(paraglider)
        assert err.value.witness.pattern == "paraglider"
        assert set(err.value.witness.vertices) == {0, 1, 2, 3, 4}

    def test_rejects_embedded_paraglider(self, seven):
        with pytest.raises(PreconditionError):
            cover2_paraglider_free(seven)

    def test_square_is_covered_without_recoloring(self):
        res = cover2_paraglider_free(g1(4, "12 23 34 14"), verify=True)
        assert res.found and res.log.verify.ok
        assert res.log.phases == ("lexbfs", "two-color", "assemble")

    def test_recoloring_never_needed(self):
        from thcover.cover import pentagon_recolor_sets

        rng = random.Random(55)
        found = 0
        for _ in range(120):
            g = gnp(rng.randrange(4, 8), rng.choice((0.3, 0.5)), rng)
            if not is_paraglider_free(g)[0]:
                continue
            res = cover2_paraglider_free(g, verify=True)
            if not res.found:
                continue
            found += 1
            assert res.log.verify.ok
            assert pentagon_recolor_sets(res.partition) == (frozenset(), frozenset())
        assert found > 40
