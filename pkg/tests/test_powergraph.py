"""Brute-force power graphs, their exports, and agreement with the formulas."""

import io
from itertools import combinations
from math import comb

import numpy as np
import pytest

from pgx.constructors import build_group, parse_group_spec
from pgx.errors import InputError, InvariantError, ResourceError
from pgx.groups import GroupTable
from pgx.powergraph import (
    DirectedPowerGraph,
    UndirectedPowerGraph,
    build_directed,
    build_undirected,
    degree_sequence,
    export,
    oracle_counts,
)
from pgx.spectrum import (
    directed_arcs,
    mutual_edges,
    order_spectrum,
    totient,
    undirected_edges,
)

K2 = np.array([[0, 1], [1, 0]])


def test_directed_graph_of_c3():
    g = build_directed(build_group(parse_group_spec("C3")))
    assert g.size == 3 and g.name == "C3"
    assert g.arcs.tolist() == [[1, 0], [1, 2], [2, 0], [2, 1]]
    assert g.mutual_pairs.tolist() == [[1, 2]]
    assert g.num_arcs == 4 and g.num_mutual == 1
    assert g.out_degrees() == [0, 2, 2]


def test_quaternion_mutual_pairs_are_the_antipodal_generators():
    q8 = build_group(parse_group_spec("Q8"))
    g = build_directed(q8)
    assert g.num_arcs == 19
    # <i> = <-i>, <j> = <-j>, <k> = <-k>
    assert g.mutual_pairs.tolist() == [[1, 3], [4, 6], [5, 7]]
    by_label = {lab: idx for idx, lab in enumerate(g.labels)}
    for a, b in g.mutual_pairs.tolist():
        assert q8.cyclic_subgroup(a) == q8.cyclic_subgroup(b)
    assert by_label["-1"] not in set(g.mutual_pairs.flatten().tolist())


def test_undirected_graph_of_elementary_abelian():
    g = build_undirected(build_group(parse_group_spec("C2xC2xC2")))
    assert g.num_edges == 7
    assert all(a == 0 for a, b in g.edges.tolist())
    assert degree_sequence(g) == [7, 1, 1, 1, 1, 1, 1, 1]


def test_degree_sequences_match_worked_examples():
    directed = build_directed(build_group(parse_group_spec("C4")))
    assert degree_sequence(directed) == [3, 3, 1, 0]
    undirected = build_undirected(build_group(parse_group_spec("C6")))
    assert undirected.num_edges == 13
    assert degree_sequence(undirected) == [5, 5, 5, 4, 4, 3]
    assert sum(degree_sequence(undirected)) == 2 * undirected.num_edges


def test_out_degree_is_element_order_minus_one():
    g = build_group(parse_group_spec("D8"))
    graph = build_directed(g)
    assert graph.out_degrees() == [o - 1 for o in g.element_orders()]


def test_degree_sequence_rejects_non_graphs():
    with pytest.raises(InputError):
        degree_sequence([3, 1, 2])


GRAPH_SPECS = ["C1", "C2", "C12", "D8", "Q16", "SD16", "M(4,2)",
               "C9xC3", "He3", "Q8xC2"]


@pytest.mark.parametrize("text", GRAPH_SPECS)
def test_graphs_agree_with_spectrum_formulas(text):
    g = build_group(parse_group_spec(text))
    spectrum = order_spectrum(g)
    directed = build_directed(g)
    undirected = build_undirected(g)
    assert directed.num_arcs == directed_arcs(spectrum)
    assert directed.num_mutual == mutual_edges(spectrum)
    assert undirected.num_edges == undirected_edges(spectrum)
    assert oracle_counts(g) == (directed.num_arcs, directed.num_mutual,
                                undirected.num_edges)


@pytest.mark.parametrize("text", GRAPH_SPECS)
def test_graph_structure_invariants(text):
    g = build_group(parse_group_spec(text))
    directed = build_directed(g)
    undirected = build_undirected(g)
    arc_set = {tuple(a) for a in directed.arcs.tolist()}
    for x, y in arc_set:
        assert x != y and y in g.cyclic_subgroup(x)
    # pair lists are sorted and carry a < b
    assert directed.arcs.tolist() == sorted(directed.arcs.tolist())
    for pairs in (directed.mutual_pairs, undirected.edges):
        rows = pairs.tolist()
        assert rows == sorted(rows)
        assert all(a < b for a, b in rows)
    # undirected edge set is the symmetrized arc set
    sym = {(min(a, b), max(a, b)) for a, b in arc_set}
    assert {tuple(e) for e in undirected.edges.tolist()} == sym
    # mutual pairs are exactly the two-way arcs
    mutual = {(a, b) for a, b in sym if (a, b) in arc_set and (b, a) in arc_set}
    assert {tuple(m) for m in directed.mutual_pairs.tolist()} == mutual


@pytest.mark.parametrize("text", ["C12", "D8", "Q8", "C9xC3", "M(4,2)"])
def test_mutual_pairs_partition_by_cyclic_subgroup(text):
    g = build_group(parse_group_spec(text))
    graph = build_directed(g)
    subgroups = {g.cyclic_subgroup(a) for a in range(g.size)}
    expected = sum(comb(totient(len(z)), 2) for z in subgroups)
    assert graph.num_mutual == expected
    for a, b in combinations(range(g.size), 2):
        mutual = g.cyclic_subgroup(a) == g.cyclic_subgroup(b)
        listed = [a, b] in graph.mutual_pairs.tolist()
        assert mutual == listed


def test_brute_force_cap_is_enforced():
    g = build_group(parse_group_spec("C100"))
    for builder in (build_directed, build_undirected, oracle_counts):
        with pytest.raises(ResourceError) as err:
            builder(g, cap=50)
        assert "exceeds the brute-force cap 50" in str(err.value)
        assert "spectrum formulas" in str(err.value)


def test_closure_scan_rejects_non_group_tables():
    t = np.array([[0, 1, 2], [1, 1, 0], [2, 0, 1]])   # row 1 never reaches 0
    with pytest.raises(InvariantError):
        build_directed(GroupTable(3, 0, table=t))


# ---------------------------------------------------------------------------
# Exports
# ---------------------------------------------------------------------------

def test_dot_export_directed_c3():
    sink = io.StringIO()
    export(build_directed(build_group(parse_group_spec("C3"))), "dot", sink)
    assert sink.getvalue() == (
        'digraph "C3" {\n'
        '  "0";\n'
        '  "1";\n'
        '  "2";\n'
        '  "1" -> "0";\n'
        '  "1" -> "2";\n'
        '  "2" -> "0";\n'
        '  "2" -> "1";\n'
        '}\n'
    )


def test_dot_export_undirected_uses_labels():
    sink = io.StringIO()
    export(build_undirected(build_group(parse_group_spec("Q8"))), "dot", sink)
    text = sink.getvalue()
    assert text.startswith('graph "Q8" {\n')
    assert '  "i" -- "-i";\n' in text
    assert "->" not in text
    lines = text.splitlines()
    assert len(lines) == 2 + 8 + 16     # braces + vertices + edges


def test_dot_export_quotes_special_characters():
    g = GroupTable(2, 0, table=K2, name='K"2', labels=["e", 'a\\"b'])
    sink = io.StringIO()
    export(build_undirected(g), "dot", sink)
    text = sink.getvalue()
    assert text.startswith('graph "K\\"2" {\n')
    assert '"a\\\\\\"b"' in text


def test_dot_export_without_labels_uses_indices():
    g = GroupTable(2, 0, table=K2, name="K2")
    sink = io.StringIO()
    export(build_undirected(g), "dot", sink)
    assert '  "0" -- "1";\n' in sink.getvalue()


def test_edge_csv_exports():
    sink = io.StringIO()
    export(build_undirected(build_group(parse_group_spec("C2"))), "edge-csv", sink)
    assert sink.getvalue() == "a,b\n0,1\n"
    sink = io.StringIO()
    export(build_directed(build_group(parse_group_spec("Q8"))), "edge-csv", sink)
    lines = sink.getvalue().splitlines()
    assert lines[0] == "src,dst"
    assert len(lines) == 1 + 19
    assert all(len(line.split(",")) == 2 for line in lines[1:])


def test_exports_of_trivial_group_are_valid_but_empty():
    trivial = build_group(parse_group_spec("C1"))
    sink = io.StringIO()
    export(build_directed(trivial), "edge-csv", sink)
    assert sink.getvalue() == "src,dst\n"
    sink = io.StringIO()
    export(build_undirected(trivial), "dot", sink)
    assert sink.getvalue() == 'graph "C1" {\n  "0";\n}\n'


def test_export_rejects_unknown_format_and_type():
    graph = build_directed(build_group(parse_group_spec("C2")))
    with pytest.raises(InputError) as err:
        export(graph, "gml", io.StringIO())
    assert "unknown graph export format" in str(err.value)
    with pytest.raises(InputError):
        export("not a graph", "dot", io.StringIO())
