"""Quantum-optics experiment graphs: components as vertices, photon paths as edges.

The rule table is transcribed cell by cell, including the number row
which skips the value 7.
"""

import logging
from functools import lru_cache
from typing import Dict, List

from pydantic import BaseModel, field_validator

from ..grammar.graph import LabeledGraph
from ..grammar.spec import (
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


class UnknownComponentError(ValueError):
    def __init__(self, component: str, vertex: int):
        self.component = component
        self.vertex = vertex
        super().__init__(f"unknown component {component!r} at vertex {vertex}")


class ComponentTable(BaseModel):
    """Component -> maximum number of connections."""

    degrees: Dict[str, int]

    @field_validator("degrees")
    @classmethod
    def _positive(cls, value: Dict[str, int]) -> Dict[str, int]:
        for component, degree in value.items():
            if degree < 1:
                raise ValueError(f"degree of {component} must be >= 1, got {degree}")
        return value


# Degrees follow from the table's state arithmetic: one incoming path plus
# the successor state (e.g. [BS] -> X_3 gives 4).
COMPONENTS = ComponentTable(degrees={"SPDC": 2, "BS": 4, "Holo": 2, "DP": 2, "Ref": 2, "Det": 1})

NUMBER_VALUES = [0, 1, 2, 3, 4, 5, 6, 8, 9]

# successor state of each component symbol, by state X_0..X_3; None = terminal
_SUCCESSORS = {
    "SPDC": [2, 1, 1, 1],
    "BS": [3, 3, 3, 3],
    "Holo": [1, 1, 1, 1],
    "DP": [1, 1, 1, 1],
    "Ref": [1, 1, 1, 1],
    "Det": [None, None, None, None],
}


class ExperimentReport(BaseModel):
    violations: List[str]

    @property
    def valid(self) -> bool:
        return not self.violations


def _row(state: int, components: List[str]) -> List[Production]:
    row: List[Production] = [EpsilonRule(next_state=state)]
    mu = 0 if state == 0 else 1
    for type_id, component in enumerate(components):
        successor = _SUCCESSORS[component][state]
        if successor is None:
            row.append(TerminalRule(type_id=type_id, bond_order=mu))
        else:
            row.append(VertexRule(type_id=type_id, bond_order=mu, next_state=successor))

    if state >= 2:
        row.append(BranchRule(branch_state=0, next_state=state - 1))
    else:
        row.append(EpsilonRule(next_state=state))

    if state >= 1:
        row.append(RingRule(max_order=1, next_state=state - 1))
    else:
        row.append(EpsilonRule(next_state=state))
    return row


@lru_cache(maxsize=1)
def quantum_grammar() -> GrammarSpec:
    components = list(COMPONENTS.degrees)
    alphabet = [SymbolDef(name="[nop]", kind=SymbolKind.NOP, index=0)]
    for type_id, component in enumerate(components):
        alphabet.append(
            SymbolDef(
                name=f"[{component}]",
                kind=SymbolKind.VERTEX,
                index=len(alphabet),
                params={"type_id": type_id, "multiplicity": 1},
            )
        )
    alphabet.append(SymbolDef(name="[Branch]", kind=SymbolKind.BRANCH, index=len(alphabet), params={"bond_class": 1}))
    alphabet.append(SymbolDef(name="[Ring]", kind=SymbolKind.RING, index=len(alphabet), params={"order": 1}))

    return GrammarSpec(
        name="quantum",
        r=3,
        types=[TypeDef(label=c, max_degree=d) for c, d in COMPONENTS.degrees.items()],
        alphabet=alphabet,
        productions=[_row(state, components) for state in range(4)],
        number_values=list(NUMBER_VALUES),
    )


def validate_experiment(g: LabeledGraph, table: ComponentTable = COMPONENTS) -> ExperimentReport:
    """Per-component connection bounds; raises only for unknown components."""
    for index, vertex in enumerate(g.vertices):
        if vertex.label not in table.degrees:
            raise UnknownComponentError(vertex.label, index)

    violations: List[str] = []
    seen = set()
    for edge in g.edges:
        if edge.u == edge.v:
            violations.append(f"component {edge.u} connects to itself")
        elif edge.key() in seen:
            violations.append(f"components {edge.key()} connected twice")
        seen.add(edge.key())

    for index, used in enumerate(g.bond_sums()):
        component = g.vertices[index].label
        if used > table.degrees[component]:
            violations.append(
                f"{component} at vertex {index} has {used} connections, limit {table.degrees[component]}"
            )
    return ExperimentReport(violations=violations)
