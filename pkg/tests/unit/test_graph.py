"""Unit tests for LabeledGraph."""

import networkx as nx
import pytest

from src.chem.molecules import benzene, cyclopropane, fluoroethenimine
from src.grammar.graph import LabeledGraph


@pytest.mark.unit
class TestLabeledGraph:
    def test_bond_sums_count_multiplicity(self):
        g = fluoroethenimine()
        assert g.bond_sums() == [1, 3, 4, 2]
        assert g.bond_sum(2) == 4

    def test_adjacency_is_sorted(self):
        g = cyclopropane()
        assert g.adjacency()[0] == [(1, 1), (2, 1)]
        assert g.adjacency()[2] == [(0, 1), (1, 1)]

    def test_edge_between(self):
        g = fluoroethenimine()
        assert g.edge_between(2, 1).order == 2
        assert g.edge_between(0, 3) is None

    def test_degree_violations(self):
        g = LabeledGraph()
        g.add_vertex(0, "F", 1)
        g.add_vertex(0, "F", 1)
        g.add_vertex(0, "F", 1)
        g.add_edge(0, 1, 1)
        g.add_edge(1, 2, 1)
        problems = g.degree_violations()
        assert len(problems) == 1
        assert "vertex 1" in problems[0]

    def test_connectivity(self):
        g = LabeledGraph()
        assert g.is_connected()
        g.add_vertex(0, "C", 4)
        g.add_vertex(0, "C", 4)
        assert not g.is_connected()
        g.add_edge(0, 1, 1)
        assert g.is_connected()

    def test_to_networkx_keeps_labels_and_orders(self):
        graph = benzene().to_networkx()
        assert graph.number_of_nodes() == 6
        assert nx.get_node_attributes(graph, "label") == {i: "C" for i in range(6)}
        assert sorted(nx.get_edge_attributes(graph, "order").values()) == [1, 1, 1, 2, 2, 2]

    def test_permuted_is_isomorphic(self):
        g = fluoroethenimine()
        p = g.permuted([3, 1, 0, 2])
        assert p.vertices[3].label == "F"
        assert p.edge_between(1, 0).order == 2
        assert nx.is_isomorphic(
            g.to_networkx(),
            p.to_networkx(),
            node_match=lambda a, b: a["label"] == b["label"],
            edge_match=lambda a, b: a["order"] == b["order"],
        )

    def test_copy_is_independent(self):
        g = cyclopropane()
        c = g.copy()
        c.edges[0].order = 2
        assert g.edges[0].order == 1
