"""Symbol strings <-> molecules.

Text form is the concatenation of bracketed symbol names, e.g.
``[F][=C][=C][#N]``. Decoding is total; encoding walks the graph
depth-first and emits vertex, ring and branch symbols so that the
decoder's state accounting reproduces every bond exactly.
"""

import logging
import re
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..grammar.engine import derive_graph
from ..grammar.graph import LabeledGraph
from ..grammar.spec import GrammarSpec, SymbolKind
from .smiles import parse_smiles, write_smiles
from .valence import chem_grammar

logger = logging.getLogger(__name__)

SymbolString = List[int]
EMPTY_SMILES = ""

_TOKEN = re.compile(r"\[[^\[\]]*\]")


class TokenizeError(ValueError):
    def __init__(self, position: int, token: str, message: str = "unknown token"):
        self.position = position
        self.token = token
        self.message = message
        super().__init__(f"{message} {token!r} at position {position}")


class EncodingError(ValueError):
    """Raised for graphs outside what the grammar can express."""


class EncodingOverflow(EncodingError):
    """A branch length or ring distance needs more than one number symbol."""


def tokenize(text: str, spec: Optional[GrammarSpec] = None) -> SymbolString:
    """Split bracketed text into alphabet indices."""
    spec = spec or chem_grammar()
    text = text.strip()
    symbols: SymbolString = []
    position = 0
    while position < len(text):
        match = _TOKEN.match(text, position)
        if match is None:
            end = text.find("[", position + 1)
            fragment = text[position : end if end != -1 else len(text)]
            raise TokenizeError(position, fragment, "malformed token")
        index = spec.index_of(match.group())
        if index is None:
            raise TokenizeError(position, match.group())
        symbols.append(index)
        position = match.end()
    return symbols


def to_text(symbols: Sequence[int], spec: Optional[GrammarSpec] = None) -> str:
    spec = spec or chem_grammar()
    return "".join(spec.alphabet[index].name for index in symbols)


def _as_symbols(s: Union[str, Sequence[int]], spec: GrammarSpec) -> Sequence[int]:
    return tokenize(s, spec) if isinstance(s, str) else s


def decode(s: Union[str, Sequence[int]], spec: Optional[GrammarSpec] = None) -> LabeledGraph:
    spec = spec or chem_grammar()
    return derive_graph(spec, _as_symbols(s, spec))


def decode_to_smiles(s: Union[str, Sequence[int]], spec: Optional[GrammarSpec] = None) -> str:
    """Decode and write SMILES; an empty derivation yields ``EMPTY_SMILES``."""
    graph = decode(s, spec)
    if not len(graph):
        return EMPTY_SMILES
    return write_smiles(graph)


class _SymbolTable:
    def __init__(self, spec: GrammarSpec):
        self.spec = spec
        self.types = {type_def.label: type_id for type_id, type_def in enumerate(spec.types)}
        self.vertices: Dict[Tuple[int, int], int] = {}
        self.branches: Dict[int, int] = {}
        self.rings: Dict[int, int] = {}
        for symbol in spec.alphabet:
            if symbol.kind == SymbolKind.VERTEX:
                self.vertices.setdefault((symbol.type_id, symbol.multiplicity), symbol.index)
            elif symbol.kind == SymbolKind.BRANCH:
                self.branches.setdefault(symbol.bond_class, symbol.index)
            elif symbol.kind == SymbolKind.RING:
                self.rings.setdefault(symbol.order, symbol.index)

    def vertex(self, label: str, multiplicity: int) -> int:
        index = self.vertices.get((self.types[label], multiplicity))
        if index is None:
            raise EncodingError(f"no vertex symbol for {label} with bond order {multiplicity}")
        return index

    def root(self, label: str) -> int:
        type_id = self.types[label]
        multiplicities = sorted(m for t, m in self.vertices if t == type_id)
        if not multiplicities:
            raise EncodingError(f"no vertex symbol for {label}")
        return self.vertices[(type_id, multiplicities[0])]

    def number(self, value: int, what: str) -> int:
        index = self.spec.symbol_for_number(value)
        if index is None:
            raise EncodingOverflow(f"{what} {value} exceeds the largest single-symbol number")
        return index

    def branch(self, bond_class: int) -> int:
        if bond_class not in self.branches:
            raise EncodingError(f"no branch symbol for bond order {bond_class}")
        return self.branches[bond_class]

    def ring(self, order: int) -> int:
        if order not in self.rings:
            raise EncodingError(f"no ring symbol for bond order {order}")
        return self.rings[order]


def _dfs_tree(adjacency: List[List[Tuple[int, int]]], start: int):
    parent: Dict[int, Optional[int]] = {start: None}
    bond_in: Dict[int, int] = {start: 0}
    children: Dict[int, List[int]] = {v: [] for v in range(len(adjacency))}
    back_edges: List[Tuple[int, int, int]] = []
    seen = {start}
    walk = [(start, iter(adjacency[start]))]
    while walk:
        v, neighbors = walk[-1]
        for u, order in neighbors:
            if u not in seen:
                seen.add(u)
                parent[u] = v
                bond_in[u] = order
                children[v].append(u)
                walk.append((u, iter(adjacency[u])))
                break
            if u != parent[v] and _is_ancestor(parent, u, v):
                back_edges.append((u, v, order))
        else:
            walk.pop()
    return parent, bond_in, children, back_edges


def _is_ancestor(parent: Dict[int, Optional[int]], u: int, v: int) -> bool:
    node = parent[v]
    while node is not None:
        if node == u:
            return True
        node = parent[node]
    return False


def _encode_from(
    g: LabeledGraph, table: _SymbolTable, start: int, largest_main: bool
) -> SymbolString:
    adjacency = g.adjacency()
    parent, bond_in, children, back_edges = _dfs_tree(adjacency, start)

    size = {v: 1 for v in children}
    preorder_walk: List[int] = []
    stack = [start]
    while stack:
        v = stack.pop()
        preorder_walk.append(v)
        stack.extend(children[v])
    for v in reversed(preorder_walk):
        if parent[v] is not None:
            size[parent[v]] += size[v]
    if largest_main:
        for v in children:
            # stable: the largest subtree (latest index on ties) continues the main chain
            children[v].sort(key=lambda c: size[c])

    position: Dict[int, int] = {}
    order: List[int] = []
    stack = [start]
    while stack:
        v = stack.pop()
        position[v] = len(order)
        order.append(v)
        stack.extend(reversed(children[v]))

    rings_at: Dict[int, List[Tuple[int, int]]] = {v: [] for v in children}
    for ancestor, descendant, bond in back_edges:
        rings_at[descendant].append((ancestor, bond))

    encoded: Dict[int, SymbolString] = {}
    for v in reversed(order):
        label = g.vertices[v].label
        seq = [table.root(label) if parent[v] is None else table.vertex(label, bond_in[v])]
        for ancestor, bond in sorted(rings_at[v], key=lambda item: position[item[0]]):
            distance = position[v] - position[ancestor] - 1
            seq += [table.ring(bond), table.number(distance, "ring distance")]
        kids = children[v]
        for child in kids[:-1]:
            sub = encoded.pop(child)
            seq += [table.branch(bond_in[child]), table.number(len(sub), "branch length")]
            seq += sub
        if kids:
            seq += encoded.pop(kids[-1])
        encoded[v] = seq
    return encoded[start]


def _check_encodable(g: LabeledGraph, spec: GrammarSpec) -> None:
    labels = {type_def.label: type_def.max_degree for type_def in spec.types}
    for index, vertex in enumerate(g.vertices):
        if vertex.label not in labels:
            raise EncodingError(f"unsupported element {vertex.label!r} at vertex {index}")
    if any(edge.aromatic for edge in g.edges):
        raise EncodingError("graph has aromatic bonds; kekulize it first")
    for index, used in enumerate(g.bond_sums()):
        if used > labels[g.vertices[index].label]:
            raise EncodingError(f"vertex {index} exceeds its maximum degree")
    seen = set()
    for edge in g.edges:
        if edge.u == edge.v or edge.key() in seen:
            raise EncodingError(f"self-loop or duplicate edge {edge.key()}")
        seen.add(edge.key())
    if not g.is_connected():
        raise EncodingError("graph is disconnected")


def encode(g: LabeledGraph, spec: Optional[GrammarSpec] = None) -> SymbolString:
    """Symbol string whose decode is isomorphic to ``g``.

    Tries index-order walks from vertex 0, then with the largest subtree as
    main chain, then the same from every other start vertex.

    Raises:
        EncodingOverflow: every walk needs a number beyond one symbol.
        EncodingError: disconnected graph or unsupported element.
    """
    spec = spec or chem_grammar()
    if not len(g):
        return []
    _check_encodable(g, spec)
    table = _SymbolTable(spec)

    first_error: Optional[EncodingError] = None
    for start in range(len(g)):
        for largest_main in (False, True):
            try:
                return _encode_from(g, table, start, largest_main)
            except EncodingError as e:
                first_error = first_error or e
                logger.debug("encode from %d (largest_main=%s) failed: %s", start, largest_main, e)
    raise first_error


def encode_smiles(text: str, spec: Optional[GrammarSpec] = None) -> SymbolString:
    return encode(parse_smiles(text), spec)
