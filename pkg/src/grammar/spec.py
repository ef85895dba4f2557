"""Grammar documents: alphabet, rule table and validation.

Version: v1
Last updated: Rule-vector grammar model with versioned JSON form
"""

import logging
from dataclasses import dataclass, field
from enum import StrEnum
from typing import Annotated, Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, Field, PrivateAttr, ValidationError

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1


class GrammarFormatError(ValueError):
    """Raised when a grammar document cannot be read."""


class SymbolKind(StrEnum):
    NOP = "nop"
    VERTEX = "vertex"
    BRANCH = "branch"
    RING = "ring"


class SymbolDef(BaseModel):
    """One alphabet symbol. Its index doubles as its numeric value."""

    name: str
    kind: SymbolKind
    index: int
    params: Dict[str, int] = Field(default_factory=dict)

    @property
    def type_id(self) -> Optional[int]:
        return self.params.get("type_id")

    @property
    def multiplicity(self) -> Optional[int]:
        """Requested edge multiplicity of a vertex symbol."""
        return self.params.get("multiplicity")

    @property
    def bond_class(self) -> Optional[int]:
        """Intended bond capacity into a branch."""
        return self.params.get("bond_class")

    @property
    def order(self) -> Optional[int]:
        return self.params.get("order")


class TypeDef(BaseModel):
    label: str
    max_degree: int


class EpsilonRule(BaseModel):
    kind: Literal["epsilon"] = "epsilon"
    next_state: int


class VertexRule(BaseModel):
    kind: Literal["vertex"] = "vertex"
    type_id: int
    bond_order: int
    next_state: int


class TerminalRule(BaseModel):
    """A vertex after which no non-terminal is added."""

    kind: Literal["terminal"] = "terminal"
    type_id: int
    bond_order: int
    next_state: int = 0


class BranchRule(BaseModel):
    kind: Literal["branch"] = "branch"
    branch_state: int
    next_state: int


class RingRule(BaseModel):
    kind: Literal["ring"] = "ring"
    max_order: int
    next_state: int


Production = Annotated[
    Union[EpsilonRule, VertexRule, TerminalRule, BranchRule, RingRule],
    Field(discriminator="kind"),
]


class GrammarSpec(BaseModel):
    """The complete rule system: states X_0..X_r, alphabet and rule table.

    ``productions[j][a]`` is the rule applied when symbol ``a`` is read in
    state ``X_j``. ``number_values`` overrides the index-as-number reading
    for alphabets that carry an explicit value table.
    """

    version: int = FORMAT_VERSION
    name: str = "custom"
    r: int
    types: List[TypeDef]
    alphabet: List[SymbolDef]
    productions: List[List[Production]]
    number_values: Optional[List[int]] = None

    _by_name: Dict[str, int] = PrivateAttr(default_factory=dict)
    _by_number: Dict[int, int] = PrivateAttr(default_factory=dict)

    def model_post_init(self, context: Any, /) -> None:
        self._by_name = {symbol.name: symbol.index for symbol in self.alphabet}
        values = self.number_values or []
        by_number: Dict[int, int] = {}
        for position, symbol in enumerate(self.alphabet):
            value = values[position] if position < len(values) else position
            by_number.setdefault(value, symbol.index)
        self._by_number = by_number

    @property
    def size(self) -> int:
        return len(self.alphabet)

    def index_of(self, name: str) -> Optional[int]:
        """Alphabet index of a token name, or None when it is not a symbol."""
        return self._by_name.get(name)

    def symbol_for_number(self, value: int) -> Optional[int]:
        """Alphabet index whose numeric reading is ``value``."""
        return self._by_number.get(value)

    def rule(self, state: int, symbol: int) -> Production:
        return self.productions[state][symbol]

    def symbols_of_kind(self, kind: SymbolKind) -> List[SymbolDef]:
        return [symbol for symbol in self.alphabet if symbol.kind == kind]


def symbol_number(spec: GrammarSpec, symbol: Union[int, str, SymbolDef]) -> int:
    """Numeric value of a symbol when it is read as the argument N."""
    if isinstance(symbol, SymbolDef):
        index = symbol.index
    elif isinstance(symbol, str):
        index = spec._by_name[symbol]
    else:
        index = symbol
    if spec.number_values is not None:
        return spec.number_values[index]
    return index


@dataclass
class GrammarViolation:
    state: Optional[int]
    symbol: Optional[int]
    message: str

    def __str__(self) -> str:
        if self.state is None and self.symbol is None:
            return self.message
        return f"(X_{self.state}, {self.symbol}): {self.message}"


@dataclass
class GrammarValidation:
    violations: List[GrammarViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, message: str, state: Optional[int] = None, symbol: Optional[int] = None) -> None:
        self.violations.append(GrammarViolation(state, symbol, message))


def validate_grammar(spec: GrammarSpec) -> GrammarValidation:
    """Check every invariant of a grammar; violations name the offending cell."""
    result = GrammarValidation()

    if spec.r < 0:
        result.add(f"r must be non-negative, got {spec.r}")
        return result
    for type_id, type_def in enumerate(spec.types):
        if type_def.max_degree < 1:
            result.add(f"type {type_id} ({type_def.label}) has max degree {type_def.max_degree}")

    _check_alphabet(spec, result)

    if len(spec.productions) != spec.r + 1 or any(
        len(row) != len(spec.alphabet) for row in spec.productions
    ):
        result.add(
            f"table size mismatch: expected {spec.r + 1}x{len(spec.alphabet)}, got "
            f"{len(spec.productions)} rows of {[len(row) for row in spec.productions]}"
        )
        return result

    if spec.number_values is not None:
        if len(spec.number_values) != len(spec.alphabet):
            result.add("number table length differs from alphabet size")
        elif any(value < 0 for value in spec.number_values):
            result.add("number table contains negative values")

    for state, row in enumerate(spec.productions):
        for index, rule in enumerate(row):
            if index < len(spec.alphabet):
                _check_cell(spec, state, spec.alphabet[index], rule, result)

    logger.debug("validated grammar %s: %d violations", spec.name, len(result.violations))
    return result


def _check_alphabet(spec: GrammarSpec, result: GrammarValidation) -> None:
    names = set()
    for position, symbol in enumerate(spec.alphabet):
        if symbol.index != position:
            result.add(f"symbol {symbol.name} has index {symbol.index} at position {position}")
        if symbol.name in names:
            result.add(f"duplicate symbol name {symbol.name}")
        names.add(symbol.name)

        if symbol.kind == SymbolKind.VERTEX:
            if symbol.type_id is None or not 0 <= symbol.type_id < len(spec.types):
                result.add(f"vertex symbol {symbol.name} has unknown type", symbol=position)
            if (symbol.multiplicity or 0) < 1:
                result.add(f"vertex symbol {symbol.name} needs multiplicity >= 1", symbol=position)
        elif symbol.kind == SymbolKind.BRANCH and (symbol.bond_class or 0) < 1:
            result.add(f"branch symbol {symbol.name} needs bond class >= 1", symbol=position)
        elif symbol.kind == SymbolKind.RING and (symbol.order or 0) < 1:
            result.add(f"ring symbol {symbol.name} needs order >= 1", symbol=position)

    nops = [symbol.index for symbol in spec.alphabet if symbol.kind == SymbolKind.NOP]
    if nops != [0]:
        result.add(f"expected exactly one nop symbol at index 0, found {nops}")


def _check_cell(
    spec: GrammarSpec, state: int, symbol: SymbolDef, rule: Production, result: GrammarValidation
) -> None:
    def bad(message: str) -> None:
        result.add(message, state=state, symbol=symbol.index)

    if not 0 <= rule.next_state <= spec.r:
        bad(f"successor X_{rule.next_state} outside X_0..X_{spec.r}")
        return

    if rule.kind == "epsilon":
        if rule.next_state != state:
            bad("epsilon rule must keep the state")
        return

    if symbol.kind == SymbolKind.NOP:
        bad("nop symbol must derive epsilon")
        return

    if rule.kind in ("vertex", "terminal"):
        if symbol.kind != SymbolKind.VERTEX or rule.type_id != symbol.type_id:
            bad("vertex rule under a symbol of another kind or type")
            return
        if not 0 <= rule.type_id < len(spec.types):
            bad(f"unknown vertex type {rule.type_id}")
            return
        mu = rule.bond_order
        capacity = spec.types[rule.type_id].max_degree
        if state == 0 and mu != 0:
            bad("vertex rule in X_0 cannot bond to a predecessor")
        if state > 0 and not 1 <= mu <= min(state, symbol.multiplicity or 0):
            bad(f"bond multiplicity {mu} exceeds min(state, requested) = {min(state, symbol.multiplicity or 0)}")
        if rule.next_state > min(spec.r, capacity - mu):
            bad(f"successor X_{rule.next_state} exceeds remaining capacity {capacity - mu}")
        if rule.kind == "terminal" and rule.next_state != 0:
            bad("terminal rule must not add a non-terminal")
        if rule.kind == "vertex" and rule.next_state == 0:
            bad("vertex rule with successor X_0 must be terminal")
    elif rule.kind == "branch":
        if symbol.kind != SymbolKind.BRANCH:
            bad("branch rule under a non-branch symbol")
        if state < 2:
            bad("branch rules need state X_2 or higher")
        elif not 0 <= rule.branch_state <= state - 1:
            bad(f"branch start state X_{rule.branch_state} outside X_0..X_{state - 1}")
        elif not 1 <= rule.next_state <= state - rule.branch_state:
            bad(f"branch successor X_{rule.next_state} exceeds X_{state - rule.branch_state}")
    elif rule.kind == "ring":
        if symbol.kind != SymbolKind.RING:
            bad("ring rule under a non-ring symbol")
        if state < 1:
            bad("ring rules need state X_1 or higher")
        elif not 1 <= rule.max_order <= state:
            bad(f"ring order {rule.max_order} outside 1..{state}")
        elif rule.next_state != state - rule.max_order:
            bad(f"ring successor must be X_{state - rule.max_order}")


def describe_rule(spec: GrammarSpec, rule: Production) -> str:
    """Short text form of a rule, as printed in rule tables."""
    successor = f"X{rule.next_state}"
    if rule.kind == "epsilon":
        return f"ε {successor}"
    if rule.kind in ("vertex", "terminal"):
        bond = {0: "", 1: "", 2: "=", 3: "#", 4: "$"}.get(rule.bond_order, f"{rule.bond_order}*")
        atom = f"{bond}{spec.types[rule.type_id].label}"
        return atom if rule.kind == "terminal" else f"{atom} {successor}"
    if rule.kind == "branch":
        return f"B(N,X{rule.branch_state}) {successor}"
    ring = "R(N)" if rule.max_order == 1 else f"R{rule.max_order}(N)"
    return ring if rule.next_state == 0 else f"{ring} {successor}"


def grammar_to_json(spec: GrammarSpec) -> str:
    return spec.model_dump_json(indent=2, exclude_none=True)


def grammar_from_json(text: str) -> GrammarSpec:
    """Parse a grammar document, rejecting unknown versions."""
    try:
        spec = GrammarSpec.model_validate_json(text)
    except ValidationError as e:
        raise GrammarFormatError(f"malformed grammar document: {e}") from e
    if spec.version != FORMAT_VERSION:
        raise GrammarFormatError(
            f"unsupported grammar version {spec.version} (expected {FORMAT_VERSION})"
        )
    return spec


def format_rule_table(spec: GrammarSpec) -> str:
    """Plain-text rule table: one row per state, one column per symbol."""
    header = ["", *(symbol.name for symbol in spec.alphabet)]
    rows = [header]
    for state, row in enumerate(spec.productions):
        rows.append([f"X{state}", *(describe_rule(spec, rule) for rule in row)])
    rows.append(["N", *(str(symbol_number(spec, symbol.index)) for symbol in spec.alphabet)])
    widths = [max(len(row[col]) for row in rows) for col in range(len(header))]
    return "\n".join(
        "  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in rows
    )
