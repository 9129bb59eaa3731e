import itertools
import json
from pathlib import Path

import pytest

from nonrepcolor.decide import exists_repetitive_stroll
from nonrepcolor.model import (
    Coloring,
    InvalidArgumentError,
    classify_walk,
    cycle_graph,
    path_graph,
)
from nonrepcolor.saseq import (
    FORBIDDEN_WORDS,
    LONGEST_H_FREE_WORD,
    InconsistentWordError,
    decode_sa,
    encode_sa,
    enumerate_h_free,
    h_witness_stroll,
    is_h_free,
)

P21_WORD = "121312321323123213121"
GOLDEN_COUNTS = Path(__file__).parent / "data" / "h_free_counts.json"


class TestEncode:
    def test_four_path(self):
        c = Coloring.from_digits("1213")
        assert encode_sa(path_graph(4), c) == "SA"

    def test_p21_word(self):
        c = Coloring.from_digits(P21_WORD)
        assert encode_sa(path_graph(21), c) == LONGEST_H_FREE_WORD

    def test_twelve_cycle_interior(self):
        c = Coloring.from_digits("123121321231")
        word = encode_sa(cycle_graph(12), c)
        assert word[1:11] == "AAASAAASAA"

    def test_rejects_improper(self):
        with pytest.raises(InvalidArgumentError):
            encode_sa(path_graph(3), Coloring.from_digits("112"))

    def test_rejects_four_colors(self):
        with pytest.raises(InvalidArgumentError):
            encode_sa(path_graph(4), Coloring.from_digits("1234"))


class TestDecode:
    def test_all_asymmetrical_is_periodic(self):
        assert decode_sa("A" * 7, "path").colors == (1, 2, 3, 1, 2, 3, 1, 2, 3)

    def test_twelve_cycle_closure_fails(self):
        # interior AAASAAASAA forces colors 123121321231 and an improper wrap
        c = decode_sa("AAASAAASAA", "path")
        assert c.colors == tuple(int(d) for d in "123121321231")
        with pytest.raises(InconsistentWordError):
            decode_sa("A" + "AAASAAASAA" + "A", "cycle")

    def test_consistent_cycle_word(self):
        c = Coloring.from_digits("123123")
        word = encode_sa(cycle_graph(6), c)
        assert decode_sa(word, "cycle").colors == c.colors

    def test_round_trip_short_words(self):
        for length in range(1, 11):
            for tup in itertools.product("AS", repeat=length):
                word = "".join(tup)
                if "SS" in word:
                    continue
                c = decode_sa(word, "path")
                assert encode_sa(path_graph(length + 2), c) == word


class TestForbiddenFactors:
    def test_longest_word_is_free(self):
        assert is_h_free(LONGEST_H_FREE_WORD) is None

    def test_double_s_found(self):
        assert is_h_free("ASASSA") == (3, "SS")

    def test_factor_equal_to_word(self):
        assert is_h_free("AASAASAA") == (0, "AASAASAA")

    def test_cyclic_wraparound(self):
        # SA...AS wraps into SS
        word = "SAAAS"
        assert is_h_free(word) is None
        assert is_h_free(word, cyclic=True) == (4, "SS")


class TestEnumeration:
    def test_maximum_length_nineteen(self):
        words, max_len = enumerate_h_free(25)
        assert max_len == 19
        assert [w for w in words if len(w) == 19] == [LONGEST_H_FREE_WORD]

    def test_no_word_of_length_twenty(self):
        words, max_len = enumerate_h_free(20)
        assert max_len == 19 and all(len(w) <= 19 for w in words)

    def test_golden_counts(self):
        words, _ = enumerate_h_free(25)
        counts = {}
        for w in words:
            counts[len(w)] = counts.get(len(w), 0) + 1
        golden = {int(k): v for k, v in
                  json.loads(GOLDEN_COUNTS.read_text()).items()}
        assert counts == golden

    def test_counts_against_independent_filter(self):
        words, _ = enumerate_h_free(25)
        mine = {w for w in words if len(w) <= 10}
        slow = set()
        for length in range(1, 11):
            for tup in itertools.product("AS", repeat=length):
                w = "".join(tup)
                if not any(h in w for h in FORBIDDEN_WORDS):
                    slow.add(w)
        assert mine == slow


EXPECTED_SEQUENCES = {
    "SS": "1212",
    "AAAA": "123123",
    "ASASA": "12321232",
    "AASAASAA": "212313212313",
    "AAASAAASAAA": "3212312132123121",
}


@pytest.mark.parametrize("h", FORBIDDEN_WORDS)
def test_witness_strolls(h):
    n, walk, seq = h_witness_stroll(h)
    assert n == len(h) + 2
    assert "".join(map(str, seq)) == EXPECTED_SEQUENCES[h]
    g = path_graph(n)
    c = decode_sa(h, "path")
    wc = classify_walk(g, c, walk)
    assert wc.stroll and wc.repetitive is True
    # the general decider also rejects the decoded coloring
    assert exists_repetitive_stroll(g, c) is not None


def test_witness_needs_forbidden_word():
    with pytest.raises(InvalidArgumentError):
        h_witness_stroll("ASA")


def test_free_words_decode_to_stroll_nonrepetitive_paths():
    """Converse at small scale: factor-free words give valid colorings."""
    words, _ = enumerate_h_free(17)
    for word in words:
        g = path_graph(len(word) + 2)
        c = decode_sa(word, "path")
        assert exists_repetitive_stroll(g, c) is None, word
