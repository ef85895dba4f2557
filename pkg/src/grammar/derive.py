"""Build a complete grammar from a table of vertex types and maximum degrees."""

import logging
from typing import List, NamedTuple, Optional, Tuple

from pydantic import BaseModel, Field

from .spec import (
    BranchRule,
    EpsilonRule,
    GrammarSpec,
    Production,
    RingRule,
    SymbolDef,
    SymbolKind,
    TerminalRule,
    TypeDef,
    VertexRule,
)

logger = logging.getLogger(__name__)

NOP_NAME = "[nop]"
RESERVED_LABELS = {"nop", "Branch", "Ring"}
_PREFIXES = {1: "", 2: "=", 3: "#", 4: "$"}


class GrammarDerivationError(ValueError):
    """Raised when a type table cannot yield a grammar."""


class TypeSpec(BaseModel):
    types: List[TypeDef]

    @property
    def max_degree(self) -> int:
        """M, the largest degree over all types."""
        return max(t.max_degree for t in self.types)

    @classmethod
    def from_pairs(cls, pairs: List[Tuple[str, int]]) -> "TypeSpec":
        return cls(types=[TypeDef(label=label, max_degree=degree) for label, degree in pairs])


class DeriveOptions(BaseModel):
    """``cap`` bounds the edge multiplicity a vertex symbol may request (None = M)."""

    cap: Optional[int] = Field(default=None, ge=1)
    ring_orders: int = Field(default=1, ge=1)
    name: str = "custom"


class RuleCounts(NamedTuple):
    n: int
    m: int
    p: int
    r: int
    total: int


def bond_prefix(multiplicity: int) -> str:
    return _PREFIXES.get(multiplicity, f"{multiplicity}*")


def vertex_name(label: str, multiplicity: int) -> str:
    return f"[{bond_prefix(multiplicity)}{label}]"


def branch_name(bond_class: int) -> str:
    return f"[{bond_prefix(bond_class)}Branch]"


def ring_name(order: int) -> str:
    return f"[{bond_prefix(order)}Ring]"


def _check_types(ts: TypeSpec) -> None:
    if not ts.types:
        raise GrammarDerivationError("type table is empty")
    seen = set()
    for type_def in ts.types:
        label = type_def.label
        if not label or any(ch in label for ch in "[]"):
            raise GrammarDerivationError(f"invalid type label {label!r}")
        if label in RESERVED_LABELS:
            raise GrammarDerivationError(f"type label {label!r} is reserved")
        if label in seen:
            raise GrammarDerivationError(f"duplicate type label {label!r}")
        if type_def.max_degree < 1:
            raise GrammarDerivationError(f"type {label!r} needs max degree >= 1")
        seen.add(label)


def _alphabet(ts: TypeSpec, cap: int, ring_orders: int) -> List[SymbolDef]:
    symbols = [SymbolDef(name=NOP_NAME, kind=SymbolKind.NOP, index=0)]

    def add(name: str, kind: SymbolKind, **params: int) -> None:
        symbols.append(SymbolDef(name=name, kind=kind, index=len(symbols), params=params))

    for type_id, type_def in enumerate(ts.types):
        for gamma in range(1, min(type_def.max_degree, cap) + 1):
            add(vertex_name(type_def.label, gamma), SymbolKind.VERTEX, type_id=type_id, multiplicity=gamma)
    for bond_class in range(1, ts.max_degree):
        add(branch_name(bond_class), SymbolKind.BRANCH, bond_class=bond_class)
    for order in range(1, ring_orders + 1):
        add(ring_name(order), SymbolKind.RING, order=order)
    return symbols


def _cell(ts: TypeSpec, state: int, symbol: SymbolDef) -> Production:
    if symbol.kind == SymbolKind.VERTEX:
        degree = ts.types[symbol.type_id].max_degree
        if state == 0:
            return VertexRule(type_id=symbol.type_id, bond_order=0, next_state=degree)
        mu = min(state, symbol.multiplicity)
        remaining = degree - mu
        if remaining == 0:
            return TerminalRule(type_id=symbol.type_id, bond_order=mu)
        return VertexRule(type_id=symbol.type_id, bond_order=mu, next_state=remaining)

    if symbol.kind == SymbolKind.BRANCH and state >= 2:
        start = min(symbol.bond_class, state - 1)
        return BranchRule(branch_state=start, next_state=state - start)

    if symbol.kind == SymbolKind.RING and state >= 1:
        order = min(symbol.order, state)
        return RingRule(max_order=order, next_state=state - order)

    return EpsilonRule(next_state=state)


def derive_grammar(ts: TypeSpec, options: Optional[DeriveOptions] = None) -> GrammarSpec:
    """Derive states X_0..X_M, the alphabet and every rule-table cell.

    Vertex symbols enumerate multiplicities 1..min(D_i, cap); there are M-1
    branch classes and ``ring_orders`` ring symbols.
    """
    options = options or DeriveOptions()
    _check_types(ts)
    r = ts.max_degree
    cap = options.cap if options.cap is not None else r
    alphabet = _alphabet(ts, cap, options.ring_orders)
    productions = [[_cell(ts, state, symbol) for symbol in alphabet] for state in range(r + 1)]
    spec = GrammarSpec(
        name=options.name, r=r, types=list(ts.types), alphabet=alphabet, productions=productions
    )
    logger.debug("derived grammar %s: %d symbols, r=%d", spec.name, spec.size, r)
    return spec


def rule_counts(spec: GrammarSpec) -> RuleCounts:
    n = len(spec.symbols_of_kind(SymbolKind.VERTEX))
    m = len(spec.symbols_of_kind(SymbolKind.BRANCH))
    p = len(spec.symbols_of_kind(SymbolKind.RING))
    return RuleCounts(n, m, p, spec.r, (n + m + p + 1) * (spec.r + 2))
