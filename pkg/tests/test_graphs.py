import pytest

from ul2.graphs import (
    cycle_graph,
    delete_pendant,
    format_graph_text,
    girth_and_cycle,
    graph_from_edges,
    is_connected,
    is_unicyclic,
    parse_graph_text,
    path_graph,
    separate_edge,
    star_graph,
)
from ul2.canon import are_isomorphic
from ul2.unicyclic import cycle_with_pendant, star_composition


def test_triangle():
    g = graph_from_edges(3, [(0, 1), (1, 2), (2, 0)])
    assert g.n == 3 and g.m == 3
    assert g.degrees() == (2, 2, 2)
    assert g.neighbors[0] == (1, 2)


def test_c4():
    g = graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.degrees() == (2, 2, 2, 2)
    assert g.has_edge(3, 0) and not g.has_edge(0, 2)


def test_rejects_self_loop():
    with pytest.raises(ValueError, match="self-loop"):
        graph_from_edges(2, [(0, 0)])


def test_rejects_out_of_range():
    with pytest.raises(ValueError, match="outside"):
        graph_from_edges(2, [(0, 2)])


def test_rejects_duplicate_edge():
    with pytest.raises(ValueError, match="duplicate"):
        graph_from_edges(3, [(0, 1), (1, 0)])


def test_connectivity():
    assert is_connected(cycle_graph(5))
    assert not is_connected(graph_from_edges(4, [(0, 1), (2, 3)]))
    assert is_unicyclic(cycle_graph(3))
    assert not is_unicyclic(path_graph(4))


def test_delete_pendant_from_tadpole():
    g = cycle_with_pendant(4)
    pendant = next(v for v in range(g.n) if g.degree(v) == 1)
    got = delete_pendant(g, pendant)
    assert are_isomorphic(got, cycle_graph(4))
    assert got.n == g.n - 1 and got.m == g.m - 1
    assert is_connected(got)


def test_delete_pendant_from_star():
    got = delete_pendant(star_graph(4), 3)
    assert are_isomorphic(got, path_graph(3))


def test_delete_pendant_rejects_cycle_vertex():
    with pytest.raises(ValueError, match="degree"):
        delete_pendant(cycle_graph(4), 0)


def test_separate_middle_edge_of_path():
    # a-b-c-d with b-c contracted becomes a claw on the merged vertex
    got = separate_edge(path_graph(4), 1, 2)
    assert got.n == 4
    assert are_isomorphic(got, star_graph(4))


def test_separate_single_edge():
    got = separate_edge(path_graph(2), 0, 1)
    assert are_isomorphic(got, path_graph(2))


def test_separate_pendant_edge_is_identity_like():
    g = graph_from_edges(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
    got = separate_edge(g, 0, 3)
    assert are_isomorphic(got, g)


def test_separate_rejects_non_edge():
    with pytest.raises(ValueError, match="not an edge"):
        separate_edge(cycle_graph(4), 0, 2)


def test_separate_non_cut_edge_merges_duplicates():
    got = separate_edge(cycle_graph(3), 0, 1)
    assert got.n == 3
    assert are_isomorphic(got, path_graph(3))


def test_girth_of_cycle():
    assert girth_and_cycle(cycle_graph(5)) == (5, [0, 1, 2, 3, 4])


def test_girth_of_star_composition():
    girth, cyc = girth_and_cycle(star_composition(4, [2, 2, 2, 17]))
    assert girth == 4
    assert sorted(cyc) == [0, 1, 2, 3]
    assert cyc[0] == 0 and cyc[1] == min(cyc[1], cyc[-1])


def test_girth_rejects_tree():
    with pytest.raises(ValueError, match="not unicyclic"):
        girth_and_cycle(path_graph(4))


def test_text_round_trip():
    g = star_composition(3, [2, 1, 4])
    assert parse_graph_text(format_graph_text(g)) == g
    assert format_graph_text(g).endswith("\n")


def test_text_parse_errors():
    with pytest.raises(ValueError, match="header"):
        parse_graph_text("just one token\n1 2\n")
    with pytest.raises(ValueError, match="edge lines"):
        parse_graph_text("3 2\n0 1\n")
