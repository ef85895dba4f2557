"""SMILES subset reader and writer.

Covers the organic-subset atoms (C, N, O, F by default, plus B, P, S, Cl,
Br and I when the valence table has them), aromatic c, n, o, the bonds
- = #, branches and ring closures (digits and %nn). Charges, brackets,
stereo marks, dots and isotopes are rejected.
"""

import logging
from dataclasses import dataclass
from enum import StrEnum
from typing import Dict, List, Optional, Set, Tuple

import networkx as nx

from ..grammar.graph import LabeledGraph
from .valence import CORE, ValenceTable, validate_molecule

logger = logging.getLogger(__name__)

ORGANIC_ATOMS = {"B", "C", "N", "O", "P", "S", "F", "Cl", "Br", "I"}
AROMATIC_ATOMS = {"c": "C", "n": "N", "o": "O"}
BOND_SYMBOLS = {"-": 1, "=": 2, "#": 3}
WRITABLE_ELEMENTS = ORGANIC_ATOMS
# valid SMILES outside the supported subset
UNSUPPORTED_CHARS = set("[]+@/\\.:*$HKLlrsbpi")
MAX_RING_ID = 99


class SmilesErrorCategory(StrEnum):
    EMPTY = "empty"
    SYNTAX = "syntax"
    UNMATCHED_PAREN = "unmatched_paren"
    UNMATCHED_RING = "unmatched_ring"
    RING_BOND_CONFLICT = "ring_bond_conflict"
    INVALID_RING_BOND = "invalid_ring_bond"
    UNSUPPORTED = "unsupported"
    VALENCE = "valence"
    KEKULIZATION = "kekulization"


class SmilesError(ValueError):
    def __init__(self, category: SmilesErrorCategory, message: str, position: Optional[int] = None):
        self.category = category
        self.position = position
        self.message = message
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{category.value}: {message}{where}")


class KekulizationError(SmilesError):
    def __init__(self, message: str, position: Optional[int] = None, atom: Optional[int] = None):
        self.atom = atom
        super().__init__(SmilesErrorCategory.KEKULIZATION, message, position)


class SmilesWriteError(ValueError):
    """Raised for graphs the writer cannot express (empty, disconnected, exotic labels)."""


class SmilesTokenKind(StrEnum):
    ATOM = "atom"
    BOND = "bond"
    BRANCH_OPEN = "branch_open"
    BRANCH_CLOSE = "branch_close"
    RING_BOND = "ring_bond"


@dataclass(slots=True)
class SmilesToken:
    kind: SmilesTokenKind
    position: int
    text: str
    element: Optional[str] = None
    aromatic: bool = False
    order: Optional[int] = None
    ring_id: Optional[int] = None


def tokenize_smiles(text: str) -> List[SmilesToken]:
    tokens: List[SmilesToken] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if text[i : i + 2] in ("Cl", "Br"):
            tokens.append(SmilesToken(SmilesTokenKind.ATOM, i, text[i : i + 2], element=text[i : i + 2]))
            i += 2
            continue
        if ch in ORGANIC_ATOMS:
            tokens.append(SmilesToken(SmilesTokenKind.ATOM, i, ch, element=ch))
        elif ch in AROMATIC_ATOMS:
            tokens.append(SmilesToken(SmilesTokenKind.ATOM, i, ch, element=AROMATIC_ATOMS[ch], aromatic=True))
        elif ch in BOND_SYMBOLS:
            tokens.append(SmilesToken(SmilesTokenKind.BOND, i, ch, order=BOND_SYMBOLS[ch]))
        elif ch == "(":
            tokens.append(SmilesToken(SmilesTokenKind.BRANCH_OPEN, i, ch))
        elif ch == ")":
            tokens.append(SmilesToken(SmilesTokenKind.BRANCH_CLOSE, i, ch))
        elif ch.isdigit() and ch.isascii():
            if ch == "0":
                raise SmilesError(SmilesErrorCategory.INVALID_RING_BOND, "ring id 0", i)
            tokens.append(SmilesToken(SmilesTokenKind.RING_BOND, i, ch, ring_id=int(ch)))
        elif ch == "%":
            digits = text[i + 1 : i + 3]
            if len(digits) != 2 or not (digits.isascii() and digits.isdigit()) or digits == "00":
                raise SmilesError(SmilesErrorCategory.INVALID_RING_BOND, "expected %nn with nn in 01..99", i)
            tokens.append(SmilesToken(SmilesTokenKind.RING_BOND, i, text[i : i + 3], ring_id=int(digits)))
            i += 3
            continue
        elif ch in UNSUPPORTED_CHARS:
            raise SmilesError(SmilesErrorCategory.UNSUPPORTED, f"unsupported character {ch!r}", i)
        else:
            raise SmilesError(SmilesErrorCategory.SYNTAX, f"unexpected character {ch!r}", i)
        i += 1
    return tokens


class _Reader:
    def __init__(self, vt: ValenceTable):
        self.vt = vt
        self.types = {element: type_id for type_id, element in enumerate(vt.valences)}
        self.graph = LabeledGraph()
        self.atom_positions: List[int] = []
        self.pairs: Set[Tuple[int, int]] = set()
        self.previous: Optional[int] = None
        self.pending: Optional[SmilesToken] = None
        self.branches: List[Tuple[int, int, int]] = []
        self.rings: Dict[int, Tuple[int, Optional[int], int]] = {}

    def fail(self, category: SmilesErrorCategory, message: str, position: int) -> None:
        raise SmilesError(category, message, position)

    def bond(self, u: int, v: int, order: Optional[int], position: int) -> None:
        key = (min(u, v), max(u, v))
        if u == v:
            self.fail(SmilesErrorCategory.INVALID_RING_BOND, "ring bond closes on its own atom", position)
        if key in self.pairs:
            self.fail(SmilesErrorCategory.INVALID_RING_BOND, "ring bond duplicates an existing bond", position)
        vertices = self.graph.vertices
        aromatic = order is None and vertices[u].aromatic and vertices[v].aromatic
        self.graph.add_edge(u, v, order or 1, aromatic=aromatic)
        self.pairs.add(key)

    def atom(self, token: SmilesToken) -> None:
        if token.element not in self.types:
            self.fail(SmilesErrorCategory.UNSUPPORTED, f"element {token.element} not in valence table", token.position)
        element = token.element
        index = self.graph.add_vertex(self.types[element], element, self.vt.valences[element], token.aromatic)
        self.atom_positions.append(token.position)
        if self.previous is not None:
            order = self.pending.order if self.pending else None
            self.bond(self.previous, index, order, token.position)
        elif self.pending is not None:
            self.fail(SmilesErrorCategory.SYNTAX, "bond without a preceding atom", self.pending.position)
        self.pending = None
        self.previous = index

    def read(self, tokens: List[SmilesToken]) -> LabeledGraph:
        for token in tokens:
            kind = token.kind
            if kind == SmilesTokenKind.ATOM:
                self.atom(token)
                continue
            if self.previous is None:
                self.fail(SmilesErrorCategory.SYNTAX, f"{token.text!r} before any atom", token.position)
            if kind == SmilesTokenKind.BOND:
                if self.pending is not None:
                    self.fail(SmilesErrorCategory.SYNTAX, "two bond symbols in a row", token.position)
                self.pending = token
            elif kind == SmilesTokenKind.BRANCH_OPEN:
                if self.pending is not None:
                    self.fail(SmilesErrorCategory.SYNTAX, "bond symbol before '('", token.position)
                self.branches.append((self.previous, len(self.graph), token.position))
            elif kind == SmilesTokenKind.BRANCH_CLOSE:
                if not self.branches:
                    self.fail(SmilesErrorCategory.UNMATCHED_PAREN, "')' without '('", token.position)
                if self.pending is not None:
                    self.fail(SmilesErrorCategory.SYNTAX, "bond symbol before ')'", token.position)
                anchor, atoms_before, _ = self.branches.pop()
                if len(self.graph) == atoms_before:
                    self.fail(SmilesErrorCategory.SYNTAX, "empty branch", token.position)
                self.previous = anchor
            else:
                self.ring_bond(token)

        if self.pending is not None:
            self.fail(SmilesErrorCategory.SYNTAX, "dangling bond symbol", self.pending.position)
        if self.branches:
            self.fail(SmilesErrorCategory.UNMATCHED_PAREN, "'(' never closed", self.branches[-1][2])
        if self.rings:
            position = min(opened[2] for opened in self.rings.values())
            self.fail(SmilesErrorCategory.UNMATCHED_RING, "ring bond never closed", position)
        return self.graph

    def ring_bond(self, token: SmilesToken) -> None:
        order = self.pending.order if self.pending else None
        self.pending = None
        opened = self.rings.pop(token.ring_id, None)
        if opened is None:
            self.rings[token.ring_id] = (self.previous, order, token.position)
            return
        partner, opened_order, _ = opened
        if order is not None and opened_order is not None and order != opened_order:
            self.fail(SmilesErrorCategory.RING_BOND_CONFLICT, f"ring {token.ring_id} has two bond orders", token.position)
        self.bond(partner, self.previous, order or opened_order, token.position)


def parse_smiles(text: str, vt: ValenceTable = CORE) -> LabeledGraph:
    """Read a SMILES string into a kekulized, valence-checked graph.

    Raises:
        SmilesError: with category and source position.
    """
    if not text:
        raise SmilesError(SmilesErrorCategory.EMPTY, "empty SMILES", 0)
    reader = _Reader(vt)
    graph = reader.read(tokenize_smiles(text))

    if any(vertex.aromatic for vertex in graph.vertices):
        try:
            graph = kekulize(graph)
        except KekulizationError as e:
            position = reader.atom_positions[e.atom] if e.atom is not None else 0
            raise KekulizationError(e.message, position, e.atom) from e

    report = validate_molecule(graph, vt)
    if not report.valid:
        violation = report.violations[0]
        position = reader.atom_positions[violation.atom] if violation.atom is not None else 0
        raise SmilesError(SmilesErrorCategory.VALENCE, violation.message, position)
    return graph


def is_valid_smiles(text: str) -> bool:
    try:
        parse_smiles(text)
    except SmilesError:
        return False
    return True


def kekulize(g: LabeledGraph) -> LabeledGraph:
    """Assign single/double orders to aromatic bonds via a perfect matching.

    An aromatic atom needs one double bond iff it has free valence left
    when each aromatic bond counts as single. Returns a new graph with all
    aromatic flags cleared.
    """
    result = g.copy()
    aromatic_atoms = [v for v, vertex in enumerate(result.vertices) if vertex.aromatic]
    if not aromatic_atoms:
        return result

    ring_graph = nx.Graph()
    ring_graph.add_nodes_from(aromatic_atoms)
    ring_graph.add_edges_from((e.u, e.v) for e in result.edges if e.aromatic)
    for atom in aromatic_atoms:
        if ring_graph.degree(atom) == 0:
            raise KekulizationError("aromatic atom outside any aromatic ring", atom=atom)
    bridge = next(nx.bridges(ring_graph), None)
    if bridge is not None:
        raise KekulizationError(f"aromatic bond {bridge[0]}-{bridge[1]} is not in a ring", atom=bridge[0])

    used = result.bond_sums()
    needs_double = {v for v in aromatic_atoms if result.vertices[v].max_degree - used[v] >= 1}
    matching_graph = ring_graph.subgraph(needs_double).copy()
    matching = nx.max_weight_matching(matching_graph, maxcardinality=True)
    if not nx.is_perfect_matching(matching_graph, matching):
        unmatched = sorted(needs_double - {v for pair in matching for v in pair})
        raise KekulizationError(
            "aromatic system has no alternating single/double assignment",
            atom=unmatched[0] if unmatched else None,
        )

    doubles = {frozenset(pair) for pair in matching}
    for edge in result.edges:
        if edge.aromatic:
            edge.order = 2 if frozenset((edge.u, edge.v)) in doubles else 1
            edge.aromatic = False
    for vertex in result.vertices:
        vertex.aromatic = False
    logger.debug("kekulized %d aromatic atoms with %d double bonds", len(aromatic_atoms), len(doubles))
    return result


def _ring_label(ring_id: int) -> str:
    return str(ring_id) if ring_id < 10 else f"%{ring_id:02d}"


def _bond_text(order: int) -> Optional[str]:
    return {1: "", 2: "=", 3: "#"}.get(order)


def write_smiles(g: LabeledGraph) -> str:
    """Kekulé SMILES by depth-first walk from vertex 0, neighbors in index order."""
    if not len(g):
        raise SmilesWriteError("cannot write an empty graph")
    if not g.is_connected():
        raise SmilesWriteError("graph is disconnected")
    for vertex in g.vertices:
        if vertex.label not in WRITABLE_ELEMENTS:
            raise SmilesWriteError(f"element {vertex.label!r} has no SMILES organic-subset form")
    for edge in g.edges:
        if _bond_text(edge.order) is None:
            raise SmilesWriteError(f"bond order {edge.order} cannot be written")

    adjacency = g.adjacency()
    order = {0: 0}
    parent: Dict[int, Optional[int]] = {0: None}
    children: Dict[int, List[int]] = {v: [] for v in range(len(g))}
    openings: Dict[int, List[Tuple[int, int]]] = {v: [] for v in range(len(g))}
    closings: Dict[int, List[int]] = {v: [] for v in range(len(g))}
    walk = [(0, iter(adjacency[0]))]
    while walk:
        v, neighbors = walk[-1]
        for u, bond in neighbors:
            if u not in order:
                order[u] = len(order)
                parent[u] = v
                children[v].append(u)
                walk.append((u, iter(adjacency[u])))
                break
            if u != parent[v] and order[u] < order[v]:
                openings[u].append((v, bond))
                closings[v].append(u)
        else:
            walk.pop()
    for v in openings:
        openings[v].sort(key=lambda item: order[item[0]])

    pieces: List[str] = []
    ring_ids: Dict[Tuple[int, int], int] = {}
    in_use: Set[int] = set()
    pending: List[Tuple[str, int]] = [("atom", 0)]
    while pending:
        kind, value = pending.pop()
        if kind == "text":
            pieces.append(")" if value else "(")
            continue
        v = value
        if parent[v] is not None:
            pieces.append(_bond_text(g.edge_between(parent[v], v).order))
        pieces.append(g.vertices[v].label)

        closed = []
        for u in sorted(closings[v], key=lambda w: order[w]):
            ring_id = ring_ids.pop((u, v))
            pieces.append(_ring_label(ring_id))
            closed.append(ring_id)
        for w, bond in openings[v]:
            ring_id = next(i for i in range(1, MAX_RING_ID + 2) if i not in in_use)
            if ring_id > MAX_RING_ID:
                raise SmilesWriteError("more than 99 simultaneously open rings")
            in_use.add(ring_id)
            ring_ids[(v, w)] = ring_id
            pieces.append(_bond_text(bond) + _ring_label(ring_id))
        in_use.difference_update(closed)

        kids = children[v]
        if kids:
            pending.append(("atom", kids[-1]))
            for child in reversed(kids[:-1]):
                pending.append(("text", 1))
                pending.append(("atom", child))
                pending.append(("text", 0))
    return "".join(pieces)
