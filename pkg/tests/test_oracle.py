import itertools

import pytest

from nonrepcolor.decide import (
    exists_repetitive_nonboring_walk,
    exists_repetitive_stroll,
)
from nonrepcolor.model import Coloring, classify_walk, cycle_graph, path_graph
from nonrepcolor.oracle import brute_force_check, brute_force_check_many


class TestPublishedColorings:
    def test_eight_cycle_stroll_free(self):
        g = cycle_graph(8)
        v = brute_force_check(g, Coloring.from_digits("12132123"), "stroll", T=8)
        assert not v.found and not v.aborted

    def test_six_cycle_stroll_free(self):
        g = cycle_graph(6)
        v = brute_force_check(g, Coloring.from_digits("212313"), "stroll", T=6)
        assert not v.found and not v.aborted

    def test_doubled_vertex_pair(self):
        g = path_graph(2)
        v = brute_force_check(g, Coloring((1, 1), 1), "stroll", T=1)
        assert v.found and len(v.witness) == 2


def test_witnesses_revalidate():
    g = cycle_graph(5)
    for cols in itertools.product((1, 2, 3), repeat=5):
        c = Coloring(cols, 3)
        verdicts = brute_force_check_many(g, c, ("path", "stroll", "walk"), T=4)
        for prop, v in verdicts.items():
            if v.witness is None:
                continue
            wc = classify_walk(g, c, v.witness)
            assert wc.repetitive is True
            assert len(v.witness) <= 2 * v.bound
            if prop == "path":
                assert wc.simple_path
            elif prop == "stroll":
                assert wc.stroll
            else:
                assert not wc.boring


@pytest.mark.parametrize("digits", ["12312", "12321", "11231", "12132"])
def test_monotone_in_bound(digits):
    g = path_graph(5)
    c = Coloring.from_digits(digits)
    for prop in ("stroll", "walk"):
        found = [brute_force_check(g, c, prop, T=T).found for T in (1, 2, 4, 8)]
        # once a witness appears it stays for every larger bound
        assert found == sorted(found)


def test_walk_cap_aborts_with_partial_result():
    g = cycle_graph(6)
    c = Coloring.from_digits("123423")  # no witness exists at all
    v = brute_force_check(g, c, "walk", T=10, max_walks=50)
    # the walk that trips the cap is still counted
    assert v.aborted and not v.found and v.walks_examined <= 51


@pytest.mark.parametrize("make_graph", [path_graph, cycle_graph])
def test_small_graph_agreement_with_decider(make_graph):
    """P4/C4, all 3-colorings: bounded oracle agrees with the product decider."""
    g = make_graph(4)
    for cols in itertools.product((1, 2, 3), repeat=4):
        c = Coloring(cols, 3)
        verdicts = brute_force_check_many(g, c, ("stroll", "walk"), T=8)
        for prop, decider in (("stroll", exists_repetitive_stroll),
                              ("walk", exists_repetitive_nonboring_walk)):
            w = decider(g, c)
            dec_found = w is not None and len(w.walk) <= 16
            assert dec_found == verdicts[prop].found, (cols, prop)
