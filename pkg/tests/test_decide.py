import itertools

import pytest

from nonrepcolor.construct import figure1_fixture, table1_coloring
from nonrepcolor.decide import (
    exists_repetitive_nonboring_walk,
    exists_repetitive_path,
    exists_repetitive_stroll,
    is_walk_nonrepetitive_cycle_fast,
)
from nonrepcolor.model import (
    Coloring,
    Graph,
    InvalidArgumentError,
    classify_walk,
    cycle_graph,
    is_repetitive,
    path_graph,
)

P21_WORD = "121312321323123213121"


class TestStrollDecider:
    def test_p21_word_is_stroll_nonrepetitive(self):
        g = path_graph(21)
        assert exists_repetitive_stroll(g, Coloring.from_digits(P21_WORD)) is None

    def test_seven_path_witness(self):
        g = path_graph(7)
        c = Coloring.from_digits("1232123")
        w = exists_repetitive_stroll(g, c)
        assert w is not None
        assert c.sequence_of(w.walk.vertices) == (1, 2, 3, 2, 1, 2, 3, 2)

    def test_improper_edge_is_shortest_witness(self):
        g = path_graph(2)
        w = exists_repetitive_stroll(g, Coloring((1, 1), 1))
        assert w is not None and w.walk.vertices == (0, 1)

    def test_deterministic(self):
        g = path_graph(7)
        c = Coloring.from_digits("1232123")
        a = exists_repetitive_stroll(g, c)
        b = exists_repetitive_stroll(g, c)
        assert a.walk == b.walk


class TestWalkDecider:
    def test_eight_cycle_table_row(self):
        g = cycle_graph(8)
        c = Coloring.from_digits("12341243")
        assert exists_repetitive_nonboring_walk(g, c) is None

    def test_star_with_twin_leaves(self):
        # center 0 with leaves 1, 2 colored alike: 1,0,2,0 is a witness
        g = Graph.from_edges(3, [(0, 1), (0, 2)])
        c = Coloring((2, 1, 1), 2)
        w = exists_repetitive_nonboring_walk(g, c)
        assert w is not None
        assert not w.walk_class.boring and w.walk_class.repetitive is True

    def test_figure1_graph_fails(self):
        g, c = figure1_fixture()
        w = exists_repetitive_nonboring_walk(g, c)
        assert w is not None
        assert not w.walk_class.boring


class TestPathDecider:
    def test_nine_cycle_three_coloring_fails(self):
        g = cycle_graph(9)
        c = Coloring.from_digits("123132123")
        w = exists_repetitive_path(g, c)
        assert w is not None and w.walk_class.simple_path
        seq = c.sequence_of(w.walk.vertices)
        assert is_repetitive(seq)

    def test_four_path(self):
        g = path_graph(4)
        assert exists_repetitive_path(g, Coloring.from_digits("1213")) is None

    def test_improper_edge(self):
        g = path_graph(2)
        w = exists_repetitive_path(g, Coloring((1, 1), 1))
        assert w is not None and w.walk.vertices == (0, 1)


class TestCycleFastCheck:
    def test_six_cycle_true(self):
        assert is_walk_nonrepetitive_cycle_fast(
            cycle_graph(6), Coloring.from_digits("123423"))

    def test_four_cycle_distance2_failure(self):
        assert not is_walk_nonrepetitive_cycle_fast(
            cycle_graph(4), Coloring.from_digits("1212"))

    def test_five_cycle_rainbow(self):
        assert is_walk_nonrepetitive_cycle_fast(
            cycle_graph(5), Coloring.from_digits("12345"))

    def test_rejects_non_cycle(self):
        with pytest.raises(InvalidArgumentError):
            is_walk_nonrepetitive_cycle_fast(
                path_graph(4), Coloring.from_digits("1213"))


def _witness_checks(g, c, witness, prop):
    wc = classify_walk(g, c, witness.walk)
    assert wc.repetitive is True
    if prop == "path":
        assert wc.simple_path
    elif prop == "stroll":
        assert wc.stroll
    else:
        assert not wc.boring


@pytest.mark.parametrize("n", [4, 5, 6])
def test_witness_soundness_exhaustive(n):
    """Every returned witness re-validates against the plain classifiers."""
    g = cycle_graph(n)
    deciders = {
        "path": exists_repetitive_path,
        "stroll": exists_repetitive_stroll,
        "walk": exists_repetitive_nonboring_walk,
    }
    for cols in itertools.product((1, 2, 3), repeat=n):
        c = Coloring(cols, 3)
        for prop, decider in deciders.items():
            w = decider(g, c)
            if w is not None:
                assert w.violated == prop
                _witness_checks(g, c, w, prop)


def test_hierarchy_on_table_rows():
    """Walk certificates also pass the stroll and path deciders."""
    for n in range(4, 22):
        _, c = table1_coloring(n)
        g = cycle_graph(n)
        assert exists_repetitive_stroll(g, c) is None
        assert exists_repetitive_path(g, c) is None
