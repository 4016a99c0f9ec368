import json

import pytest
from hypothesis import given

from lapsimplex.errors import InputError
from lapsimplex.io import (
    NAMED_DIGRAPHS,
    NAMED_GRAPHS,
    load_digraph,
    load_graph,
    named_note,
    parse_digraph,
    parse_graph,
    serialize_digraph,
    serialize_graph,
)

from .strategies import digraphs


@given(digraphs(n_min=1, n_max=6))
def test_digraph_round_trip(D):
    assert parse_digraph(serialize_digraph(D)) == D


def test_graph_round_trip():
    for name in NAMED_GRAPHS:
        G = load_graph(f"paper:{name}")
        assert parse_graph(serialize_graph(G)) == G


def test_multiplicity_defaults_to_one():
    D = parse_digraph('{"n": 2, "edges": [[1, 2], [2, 1, 3]]}')
    assert D.mult == ((0, 1), (3, 0))


@pytest.mark.parametrize(
    "text, fragment",
    [
        ('{"n": 2, "edges": [[1, 2]', "line 1"),
        ('[1, 2]', "JSON object"),
        ('{"n": 0, "edges": []}', "field 'n'"),
        ('{"n": 2}', "field 'edges'"),
        ('{"n": 2, "edges": [[1, 3]]}', "edges[0]: vertex 3 out of range"),
        ('{"n": 2, "edges": [[1, 2], [2, 2]]}', "edges[1]: loop"),
        ('{"n": 2, "edges": [[1, 2, 0]]}', "multiplicity"),
        ('{"n": 2, "edges": [[1, "2"]]}', "not an integer"),
        ('{"n": 2, "edges": [[1]]}', "expected [tail, head]"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(InputError) as exc:
        parse_digraph(text)
    assert fragment in str(exc.value)


def test_named_inputs_load():
    for name in NAMED_DIGRAPHS:
        assert load_digraph(f"paper:{name}").n >= 3
    assert load_graph("paper:G2").n == 6
    assert len(load_graph("paper:G2").edges) == 8
    with pytest.raises(InputError):
        load_digraph("paper:nope")


def test_file_source(tmp_path):
    p = tmp_path / "d.json"
    p.write_text(json.dumps({"n": 3, "edges": [[1, 2], [2, 3], [3, 1]]}))
    assert load_digraph(str(p)).edge_count == 3
    with pytest.raises(InputError):
        load_digraph(str(tmp_path / "missing.json"))


def test_named_note():
    assert "not strongly connected" in named_note("paper:D2prime-printed")
    assert named_note("paper:example1") is None
    assert named_note("some/file.json") is None
