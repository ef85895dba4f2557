"""Valence tables, the chemistry grammar and molecule validation.

Hydrogens are implicit: an atom carries max valence minus used valence.
"""

import json
import logging
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, field_validator

from ..grammar.derive import DeriveOptions, TypeSpec, derive_grammar
from ..grammar.graph import LabeledGraph
from ..grammar.spec import GrammarSpec, TypeDef

logger = logging.getLogger(__name__)

CHEM_BOND_CAP = 3
CHEM_RING_ORDERS = 3


class ValenceTableError(ValueError):
    """Raised for an empty or malformed valence table."""


class UnknownElementError(ValueError):
    def __init__(self, element: str, atom: Optional[int] = None):
        self.element = element
        self.atom = atom
        where = f" at atom {atom}" if atom is not None else ""
        super().__init__(f"unknown element {element!r}{where}")


class ValenceTable(BaseModel):
    """Element symbol -> maximum valence, in declaration order."""

    valences: Dict[str, int]

    @field_validator("valences")
    @classmethod
    def _positive(cls, value: Dict[str, int]) -> Dict[str, int]:
        for element, valence in value.items():
            if not element or not element.isalpha():
                raise ValueError(f"invalid element symbol {element!r}")
            if valence < 1:
                raise ValueError(f"valence of {element} must be >= 1, got {valence}")
        return value

    def __contains__(self, element: str) -> bool:
        return element in self.valences

    def __len__(self) -> int:
        return len(self.valences)

    def max_valence(self, element: str) -> int:
        try:
            return self.valences[element]
        except KeyError:
            raise UnknownElementError(element) from None

    def to_type_spec(self) -> TypeSpec:
        return TypeSpec(
            types=[TypeDef(label=element, max_degree=valence) for element, valence in self.valences.items()]
        )

    @classmethod
    def parse(cls, text: str) -> "ValenceTable":
        """Read the ``C:4,N:3,O:2,F:1`` form."""
        valences: Dict[str, int] = {}
        for item in filter(None, (part.strip() for part in text.split(","))):
            element, sep, number = item.partition(":")
            if not sep:
                raise ValenceTableError(f"expected ELEMENT:VALENCE, got {item!r}")
            element = element.strip()
            if element in valences:
                raise ValenceTableError(f"element {element} listed twice")
            try:
                valences[element] = int(number)
            except ValueError:
                raise ValenceTableError(f"valence for {element} is not an integer: {number!r}") from None
        return cls._build(valences)

    @classmethod
    def from_json_file(cls, path: Union[str, Path]) -> "ValenceTable":
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as e:
            raise ValenceTableError(f"cannot read valence table {path}: {e}") from e
        if not isinstance(data, dict):
            raise ValenceTableError(f"{path}: expected an object of element: valence")
        return cls._build(data)

    @classmethod
    def from_grammar(cls, spec: GrammarSpec) -> "ValenceTable":
        """The table a chemistry grammar was derived from."""
        return cls._build({type_def.label: type_def.max_degree for type_def in spec.types})

    @classmethod
    def _build(cls, valences: Dict[str, int]) -> "ValenceTable":
        try:
            return cls(valences=valences)
        except ValueError as e:
            raise ValenceTableError(str(e)) from e


CORE = ValenceTable(valences={"C": 4, "N": 3, "O": 2, "F": 1})


class ValenceViolation(BaseModel):
    atom: Optional[int]
    used: int = 0
    max_valence: int = 0
    message: str


class MoleculeReport(BaseModel):
    hydrogens: List[int]
    violations: List[ValenceViolation]

    @property
    def valid(self) -> bool:
        return not self.violations


def build_chem_grammar(vt: ValenceTable) -> GrammarSpec:
    """Chemistry grammar: bond multiplicity capped at 3, ring orders 1..3."""
    if not len(vt):
        raise ValenceTableError("valence table is empty")
    return derive_grammar(
        vt.to_type_spec(),
        DeriveOptions(cap=CHEM_BOND_CAP, ring_orders=CHEM_RING_ORDERS, name="chem"),
    )


@lru_cache(maxsize=1)
def chem_grammar() -> GrammarSpec:
    """The core-table chemistry grammar, built once."""
    return build_chem_grammar(CORE)


def validate_molecule(g: LabeledGraph, vt: ValenceTable = CORE) -> MoleculeReport:
    """Check bond-order sums against the valence table; never raises on bad bonds."""
    maxima: List[int] = []
    for atom, vertex in enumerate(g.vertices):
        if vertex.label not in vt:
            raise UnknownElementError(vertex.label, atom)
        maxima.append(vt.valences[vertex.label])

    violations: List[ValenceViolation] = []
    seen = set()
    for edge in g.edges:
        if edge.u == edge.v:
            violations.append(ValenceViolation(atom=edge.u, message="self-loop"))
            continue
        key = edge.key()
        if key in seen:
            violations.append(ValenceViolation(atom=None, message=f"duplicate bond {key[0]}-{key[1]}"))
        seen.add(key)

    used = g.bond_sums()
    for atom, (total, maximum) in enumerate(zip(used, maxima)):
        if total > maximum:
            violations.append(
                ValenceViolation(
                    atom=atom,
                    used=total,
                    max_valence=maximum,
                    message=f"{g.vertices[atom].label} uses valence {total} of {maximum}",
                )
            )

    hydrogens = [max(maximum - total, 0) for total, maximum in zip(used, maxima)]
    return MoleculeReport(hydrogens=hydrogens, violations=violations)
