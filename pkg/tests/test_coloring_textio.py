"""Tests for proper colourings and the `hg` text format."""

import pytest

from hyperturan.errors import ParseError, UniformityMismatchError
from hyperturan.hypergraph.builders import complete, complete_bipartite, cycle, resolve_builtin
from hyperturan.hypergraph.coloring import (
    chromatic_number,
    clique_number,
    find_coloring,
    is_color_critical,
)
from hyperturan.hypergraph.isomorphism import canonical_form
from hyperturan.hypergraph.textio import (
    format_hypergraph,
    parse_hypergraph,
    read_hypergraph,
    write_hypergraph,
)


def test_chromatic_numbers():
    assert chromatic_number(complete(4, 2)) == 4
    assert chromatic_number(cycle(5)) == 3
    assert chromatic_number(cycle(6)) == 2
    assert clique_number(cycle(5)) == 2


def test_find_coloring_is_proper():
    colors = find_coloring(cycle(7), 3)
    assert colors is not None
    assert all(colors[u] != colors[v] for u, v in cycle(7).edges)
    assert find_coloring(cycle(7), 2) is None


def test_color_critical_graphs():
    assert is_color_critical(complete(3, 2), 3)
    assert is_color_critical(cycle(5), 3)
    # K_{2,3} has chi 2 and removing an edge leaves chi 2
    assert not is_color_critical(complete_bipartite(2, 3), 2)


def test_coloring_requires_2_graphs():
    with pytest.raises(UniformityMismatchError):
        chromatic_number(complete(4, 3))


def test_format_hypergraph():
    assert format_hypergraph(complete(3, 2)) == "hg 3 2 3\n0 1\n0 2\n1 2\n"


def test_parse_skips_comments_and_blanks():
    text = "# triangle\nhg 3 2 3\n\n0 1\n1 2  \n# last\n0 2\n"
    assert parse_hypergraph(text) == complete(3, 2)


@pytest.mark.parametrize(
    "text,line",
    [
        ("", 1),
        ("graph 3 2 1\n0 1\n", 1),
        ("hg 3 2 2\n0 1\n", 2),
        ("hg 3 2 2\n0 1\n1 x\n", 3),
        ("hg 3 2 2\n0 1\n0 5\n", 3),
        ("hg 3 2 2\n0 1\n1 0\n", 3),
        ("hg 4 3 1\n0 1\n", 2),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as info:
        parse_hypergraph(text)
    assert info.value.line == line


@pytest.mark.parametrize(
    "builtin",
    ["K_4", "C_5", "edge:r=4", "turan:n=7,l=3,r=3", "chromatic:n=6,k=2,r=3"],
)
def test_file_round_trip_preserves_canonical_form(tmp_path, builtin):
    h = resolve_builtin(builtin)
    path = write_hypergraph(h, tmp_path / "g.hg")
    assert canonical_form(read_hypergraph(path)) == canonical_form(h)


def test_parse_large_edge_list():
    pairs = [(u, v) for u in range(120) for v in range(u + 1, 120)]
    text = f"hg 120 2 {len(pairs)}\n" + "".join(f"{u} {v}\n" for u, v in pairs)
    assert parse_hypergraph(text).e == len(pairs)


def test_non_utf8_file_is_a_parse_error(tmp_path):
    path = tmp_path / "g.hg"
    path.write_bytes(b"hg 3 2 1\n0 \xff\n")
    with pytest.raises(ParseError, match="not UTF-8"):
        read_hypergraph(path)
