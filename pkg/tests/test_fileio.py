import pytest

from zonotopal.errors import ParseError, RankDeficient
from zonotopal.exact import Mat, Rat, row_space_equal
from zonotopal.fileio import load_space, parse_automorphisms, parse_cycles, parse_graph, parse_matrix
from zonotopal.fixtures import K3, data_path, data_text


def test_matrix_with_comments_and_fractions():
    a = parse_matrix("# header\nx y z  # labels\n1 1/2 0\n0 -3/4 1\n")
    assert a.labels == ("x", "y", "z")
    assert row_space_equal(a.basis, Mat.from_rows([[1, Rat(1, 2), 0], [0, Rat(-3, 4), 1]]))


def test_matrix_errors():
    with pytest.raises(ParseError):
        parse_matrix("")
    with pytest.raises(ParseError):
        parse_matrix("a b\n1 2 3\n")
    with pytest.raises(ParseError):
        parse_matrix("a b\n1 1/0\n")
    with pytest.raises(RankDeficient):
        parse_matrix("a b\n1 1\n2 2\n")


def test_graph_parsing():
    assert parse_graph(data_text("k3.graph"))[0] == ("A", "B", "1")
    with pytest.raises(ParseError):
        parse_graph("A B\n")
    with pytest.raises(ParseError):
        parse_graph("A B x\nB C x\n")
    assert load_space(data_path("k3.graph")) == K3()
    assert load_space(data_path("k4.graph"), "graphical").r == 3


def test_cycles_and_automorphisms():
    assert parse_cycles("(a b c)(d e)") == {"a": "b", "b": "c", "c": "a", "d": "e", "e": "d"}
    assert parse_cycles("()") == {}
    with pytest.raises(ParseError):
        parse_cycles("(a b) c")
    with pytest.raises(ParseError):
        parse_cycles("(a b)(a c)")
    gens = parse_automorphisms("perm: (1 2); scalars: 1=-1, 2=1/2  # c\n\nperm: (1 2 3)\n")
    assert gens == [({"1": "2", "2": "1"}, {"1": -1, "2": Rat(1, 2)}),
                    ({"1": "2", "2": "3", "3": "1"}, {})]
    with pytest.raises(ParseError):
        parse_automorphisms("rotate: (1 2)")
    with pytest.raises(ParseError):
        parse_automorphisms("scalars: 1=zero")
