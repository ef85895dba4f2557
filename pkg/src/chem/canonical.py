"""Canonical text form of labeled multigraphs.

Each connected component is labeled by color refinement followed by an
individualization search pruned with the automorphisms it discovers; the
lexicographically least adjacency encoding wins. Component codes are sorted
and joined with ".".
"""

from collections import Counter
from typing import List, NamedTuple, Optional, Sequence, Tuple

import networkx as nx
from networkx.utils import UnionFind

from ..grammar.graph import LabeledGraph

MAX_CANONICAL_VERTICES = 64

Encoding = Tuple[Tuple[str, ...], Tuple[Tuple[int, int, int], ...]]
Adjacency = List[List[Tuple[int, int]]]


class CanonicalizationError(ValueError):
    """Raised when a graph is too large to canonicalize exhaustively."""


def _ranks(keys: Sequence) -> List[int]:
    order = {key: rank for rank, key in enumerate(sorted(set(keys)))}
    return [order[key] for key in keys]


def _refine(colors: List[int], adjacency: Adjacency) -> List[int]:
    count = len(set(colors))
    while True:
        keys = [
            (colors[v], tuple(sorted((colors[u], order) for u, order in adjacency[v])))
            for v in range(len(colors))
        ]
        refined = _ranks(keys)
        refined_count = len(set(refined))
        if refined_count == count:
            return refined
        colors, count = refined, refined_count


def _encode(colors: List[int], labels: Sequence[str], adjacency: Adjacency) -> Encoding:
    ordered = [""] * len(colors)
    for v, position in enumerate(colors):
        ordered[position] = labels[v]
    edges = sorted(
        (min(colors[v], colors[u]), max(colors[v], colors[u]), order)
        for v in range(len(colors))
        for u, order in adjacency[v]
        if v < u
    )
    return tuple(ordered), tuple(edges)


def _individualize(colors: List[int], v: int) -> List[int]:
    return _ranks([(c, 0 if u == v else 1) for u, c in enumerate(colors)])


def _common_prefix(a: Sequence[int], b: Sequence[int]) -> int:
    depth = 0
    for x, y in zip(a, b):
        if x != y:
            break
        depth += 1
    return depth


class _Leaf(NamedTuple):
    encoding: Encoding
    colors: List[int]
    path: Tuple[int, ...]


class _Orbits:
    """Orbits of the automorphisms found so far that fix one search path."""

    def __init__(self, path: Tuple[int, ...]):
        self.path = path
        self.seen = 0
        self.sets = UnionFind()

    def absorb(self, generators: List[List[int]]) -> "_Orbits":
        for g in generators[self.seen :]:
            if all(g[u] == u for u in self.path):
                for u, image in enumerate(g):
                    if u != image:
                        self.sets.union(u, image)
        self.seen = len(generators)
        return self

    def meets(self, v: int, explored: List[int]) -> bool:
        return any(self.sets[v] == self.sets[u] for u in explored)


class _SearchTree:
    """Individualization-refinement search with automorphism pruning.

    A leaf that encodes like the first or the best leaf so far yields an
    automorphism; the search then unwinds to the common ancestor of both
    paths, and siblings in the same orbit of the path stabilizer are skipped.
    """

    def __init__(self, labels: Sequence[str], adjacency: Adjacency):
        self.labels = labels
        self.adjacency = adjacency
        self.first: Optional[_Leaf] = None
        self.best: Optional[_Leaf] = None
        self.generators: List[List[int]] = []

    def run(self) -> Encoding:
        self._visit(_refine(_ranks(self.labels), self.adjacency), ())
        return self.best.encoding

    def _visit(self, colors: List[int], path: Tuple[int, ...]) -> int:
        """Explore below one node; returns the depth the search unwinds to."""
        n = len(colors)
        if len(set(colors)) == n:
            return self._leaf(colors, path)
        counts = Counter(colors)
        target = min(color for color, size in counts.items() if size > 1)
        depth = len(path)
        explored: List[int] = []
        orbits = _Orbits(path)
        for v in (u for u in range(n) if colors[u] == target):
            if explored and orbits.absorb(self.generators).meets(v, explored):
                continue
            explored.append(v)
            unwind = self._visit(_refine(_individualize(colors, v), self.adjacency), path + (v,))
            if unwind < depth:
                return unwind
        return depth

    def _leaf(self, colors: List[int], path: Tuple[int, ...]) -> int:
        leaf = _Leaf(_encode(colors, self.labels, self.adjacency), colors, path)
        if self.first is None:
            self.first = self.best = leaf
            return len(path)
        for seen in (self.first, self.best):
            if leaf.encoding == seen.encoding:
                at = {position: v for v, position in enumerate(seen.colors)}
                self.generators.append([at[position] for position in colors])
                return _common_prefix(path, seen.path)
        if leaf.encoding < self.best.encoding:
            self.best = leaf
        return len(path)


def _least_encoding(labels: Sequence[str], adjacency: Adjacency) -> Encoding:
    return _SearchTree(labels, adjacency).run()


def _component_code(graph: LabeledGraph, members: List[int]) -> str:
    local = {v: i for i, v in enumerate(members)}
    labels = [
        graph.vertices[v].label + (":a" if graph.vertices[v].aromatic else "") for v in members
    ]
    adjacency: Adjacency = [[] for _ in members]
    for edge in graph.edges:
        if edge.u in local and edge.v in local:
            adjacency[local[edge.u]].append((local[edge.v], edge.order))
            adjacency[local[edge.v]].append((local[edge.u], edge.order))
    ordered, edges = _least_encoding(labels, adjacency)
    bonds = ",".join(f"{u}-{v}:{order}" for u, v, order in edges)
    return f"{','.join(ordered)}|{bonds}"


def canonical_form(g: LabeledGraph) -> str:
    """Order-independent string; equal strings mean isomorphic graphs."""
    if len(g) > MAX_CANONICAL_VERTICES:
        raise CanonicalizationError(
            f"graph has {len(g)} vertices, canonical form supports at most {MAX_CANONICAL_VERTICES}"
        )
    if not len(g):
        return ""
    components = nx.connected_components(g.to_networkx())
    codes = sorted(_component_code(g, sorted(members)) for members in components)
    return ".".join(codes)


def same_graph(a: LabeledGraph, b: LabeledGraph) -> bool:
    """Isomorphism test; falls back to networkx VF2 past the canonical size limit."""
    if len(a) != len(b) or len(a.edges) != len(b.edges):
        return False
    if len(a) <= MAX_CANONICAL_VERTICES:
        return canonical_form(a) == canonical_form(b)
    return nx.is_isomorphic(
        a.to_networkx(),
        b.to_networkx(),
        node_match=lambda x, y: x["label"] == y["label"] and x["aromatic"] == y["aromatic"],
        edge_match=lambda x, y: x["order"] == y["order"],
    )
