"""Labeled multigraph shared by the decoder, the encoder and the SMILES layer."""

from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx


@dataclass(slots=True)
class Vertex:
    type_id: int
    label: str
    max_degree: int
    aromatic: bool = False


@dataclass(slots=True)
class Edge:
    u: int
    v: int
    order: int
    aromatic: bool = False

    def other(self, vertex: int) -> int:
        return self.v if vertex == self.u else self.u

    def key(self) -> Tuple[int, int]:
        return (self.u, self.v) if self.u <= self.v else (self.v, self.u)


@dataclass
class LabeledGraph:
    """Vertices with type and degree capacity joined by multi-order edges.

    Vertex indices follow creation order, so ``derivation_order`` is the
    order in which a decoder (or parser) produced them.
    """

    vertices: List[Vertex] = field(default_factory=list)
    edges: List[Edge] = field(default_factory=list)
    derivation_order: List[int] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.vertices)

    def add_vertex(self, type_id: int, label: str, max_degree: int, aromatic: bool = False) -> int:
        index = len(self.vertices)
        self.vertices.append(Vertex(type_id, label, max_degree, aromatic))
        self.derivation_order.append(index)
        return index

    def add_edge(self, u: int, v: int, order: int, aromatic: bool = False) -> Edge:
        edge = Edge(u, v, order, aromatic)
        self.edges.append(edge)
        return edge

    def labels(self) -> List[str]:
        return [vertex.label for vertex in self.vertices]

    def bond_sums(self) -> List[int]:
        sums = [0] * len(self.vertices)
        for edge in self.edges:
            sums[edge.u] += edge.order
            sums[edge.v] += edge.order
        return sums

    def bond_sum(self, vertex: int) -> int:
        return sum(edge.order for edge in self.edges if vertex in (edge.u, edge.v))

    def adjacency(self) -> List[List[Tuple[int, int]]]:
        """Per vertex, (neighbor, order) pairs sorted by neighbor index."""
        adjacent: List[List[Tuple[int, int]]] = [[] for _ in self.vertices]
        for edge in self.edges:
            adjacent[edge.u].append((edge.v, edge.order))
            adjacent[edge.v].append((edge.u, edge.order))
        for entries in adjacent:
            entries.sort()
        return adjacent

    def edge_between(self, u: int, v: int) -> Optional[Edge]:
        for edge in self.edges:
            if (edge.u == u and edge.v == v) or (edge.u == v and edge.v == u):
                return edge
        return None

    def degree_violations(self) -> List[str]:
        """Self-loops, duplicate pairs and vertices above their capacity."""
        problems = []
        seen = set()
        for edge in self.edges:
            if edge.u == edge.v:
                problems.append(f"self-loop at vertex {edge.u}")
            elif edge.key() in seen:
                problems.append(f"duplicate edge {edge.key()}")
            seen.add(edge.key())
            if edge.order < 1:
                problems.append(f"edge {edge.key()} has order {edge.order}")
        for index, used in enumerate(self.bond_sums()):
            if used > self.vertices[index].max_degree:
                problems.append(
                    f"vertex {index} ({self.vertices[index].label}) uses {used} of "
                    f"{self.vertices[index].max_degree}"
                )
        return problems

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        return nx.is_connected(self.to_networkx())

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        for index, vertex in enumerate(self.vertices):
            graph.add_node(
                index, label=vertex.label, type_id=vertex.type_id, aromatic=vertex.aromatic
            )
        for edge in self.edges:
            graph.add_edge(edge.u, edge.v, order=edge.order, aromatic=edge.aromatic)
        return graph

    def copy(self) -> "LabeledGraph":
        return LabeledGraph(
            vertices=[Vertex(v.type_id, v.label, v.max_degree, v.aromatic) for v in self.vertices],
            edges=[Edge(e.u, e.v, e.order, e.aromatic) for e in self.edges],
            derivation_order=list(self.derivation_order),
        )

    def permuted(self, permutation: Sequence[int]) -> "LabeledGraph":
        """Relabel vertices so that old vertex i becomes ``permutation[i]``."""
        inverse = {new: old for old, new in enumerate(permutation)}
        graph = LabeledGraph()
        for new in range(len(self.vertices)):
            old = self.vertices[inverse[new]]
            graph.add_vertex(old.type_id, old.label, old.max_degree, old.aromatic)
        for edge in self.edges:
            graph.add_edge(permutation[edge.u], permutation[edge.v], edge.order, edge.aromatic)
        return graph

    @classmethod
    def from_bonds(
        cls,
        atoms: Iterable[Tuple[int, str, int]],
        bonds: Iterable[Tuple[int, int, int]],
    ) -> "LabeledGraph":
        """Build a graph from (type_id, label, max_degree) atoms and (u, v, order) bonds."""
        graph = cls()
        for type_id, label, max_degree in atoms:
            graph.add_vertex(type_id, label, max_degree)
        for u, v, order in bonds:
            graph.add_edge(u, v, order)
        return graph
