import io

import pytest
from hypothesis import given
from hypothesis import strategies as st

from friendstats import fixtures
from friendstats.errors import EdgeListParseError, GraphValidationError
from friendstats.graph import Graph, degrees, parse_edge_list, to_edge_list, validate

from .conftest import all_graphs


class TestParse:
    def test_star_like_example(self):
        g = parse_edge_list("0 1\n0 2\n0 3\n1 4\n")
        assert g.n == 5
        assert degrees(g) == (3, 2, 1, 1, 1)

    def test_empty(self):
        g = parse_edge_list("")
        assert g.n == 0
        assert g.edge_count == 0

    def test_duplicates_and_orientations_collapse(self):
        g = parse_edge_list("0 1\n1 0\n0 1\n")
        assert g.n == 2
        assert g.edges == {(0, 1)}

    def test_comments_crlf_and_whitespace(self):
        g = parse_edge_list("# a comment\r\n0\t1\r\n\r\n  2    1  \r\n")
        assert g.sorted_edges() == [(0, 1), (1, 2)]

    def test_header_admits_isolated_nodes(self):
        g = parse_edge_list("# n=6\n0 1\n")
        assert g.n == 6
        assert degrees(g) == (1, 1, 0, 0, 0, 0)

    def test_header_too_small(self):
        with pytest.raises(EdgeListParseError):
            parse_edge_list("# n=2\n0 5\n")

    def test_stream_input(self):
        assert parse_edge_list(io.StringIO("0 1\n")).edge_count == 1

    @pytest.mark.parametrize(
        "text, line",
        [
            ("0 1\n0 x\n", 2),
            ("0 1 2\n", 1),
            ("0\n", 1),
            ("0 1\n\n# c\n1.5 2\n", 4),
            ("-1 2\n", 1),
        ],
    )
    def test_malformed_line_reports_number(self, text, line):
        with pytest.raises(EdgeListParseError) as exc:
            parse_edge_list(text)
        assert exc.value.line == line
        assert f"line {line}" in str(exc.value)

    def test_self_loop_is_validation_error(self):
        with pytest.raises(GraphValidationError) as exc:
            parse_edge_list("0 1\n3 3\n")
        assert exc.value.line == 2


class TestDegrees:
    def test_table1(self, network1):
        assert degrees(network1) == (3, 2, 1, 1, 1)

    def test_table3(self, network3):
        assert degrees(network3) == (4, 3, 3, 3, 1)

    def test_complete(self):
        assert degrees(Graph.complete(4)) == (3, 3, 3, 3)

    def test_handshake_on_all_small_graphs(self):
        for g in all_graphs(5):
            assert sum(degrees(g)) == 2 * g.edge_count


class TestValidate:
    def test_fixture_valid(self, network1):
        assert validate(network1) == []

    def test_empty_valid(self):
        assert validate(Graph(0)) == []

    def test_self_loop_reported(self):
        g = Graph(3, [(0, 1), (2, 2)], strict=False)
        (v,) = validate(g)
        assert v.kind == "self_loop"
        assert v.nodes == (2,)

    def test_out_of_range_reported(self):
        g = Graph(2, [(0, 4)], strict=False)
        assert [v.kind for v in validate(g)] == ["out_of_range"]

    def test_strict_construction_rejects(self):
        with pytest.raises(GraphValidationError):
            Graph(3, [(1, 1)])


def test_graph_is_immutable(network1):
    with pytest.raises(AttributeError):
        network1.n = 7
    trimmed = network1.without_edges([(1, 0)])
    assert trimmed.edge_count == network1.edge_count - 1
    assert network1.has_edge(0, 1)


@pytest.mark.parametrize("name", sorted(fixtures.NETWORK_EDGES))
def test_fixture_matches_published_columns(name):
    f_col, ff_col = fixtures.TABLE_COLUMNS[name]
    g = fixtures.network(name)
    deg = degrees(g)
    assert deg == f_col
    assert tuple(sum(deg[j] for j in g.neighbors(i)) for i in range(5)) == ff_col


@pytest.mark.parametrize("name", sorted(fixtures.NETWORK_EDGES))
def test_fixture_is_the_unique_reconstruction(name):
    # Oracle: enumerate all 5-node edge sets, keep the ones reproducing the table.
    f_col, ff_col = fixtures.TABLE_COLUMNS[name]
    matches = []
    for g in all_graphs(5):
        deg = degrees(g)
        if deg == f_col and tuple(sum(deg[j] for j in g.neighbors(i)) for i in range(5)) == ff_col:
            matches.append(g.edges)
    assert matches == [frozenset(fixtures.NETWORK_EDGES[name])]


edge_lists = st.integers(min_value=1, max_value=12).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1]),
            max_size=40,
        ),
    )
)


@given(edge_lists)
def test_canonical_roundtrip(data):
    n, edges = data
    g = Graph(n, edges)
    text = to_edge_list(g)
    again = parse_edge_list(text)
    assert again == g
    assert to_edge_list(again) == text
    assert sum(degrees(again)) == 2 * again.edge_count
