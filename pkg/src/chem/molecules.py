"""Reference molecules built from their connectivity (heavy atoms only, kekulé bonds)."""

from typing import Callable, Dict, List, Sequence, Tuple

from ..grammar.graph import LabeledGraph
from .valence import CORE, ValenceTable


def molecule(
    elements: Sequence[str], bonds: Sequence[Tuple[int, int, int]], vt: ValenceTable = CORE
) -> LabeledGraph:
    types = {element: type_id for type_id, element in enumerate(vt.valences)}
    return LabeledGraph.from_bonds(
        [(types[element], element, vt.valences[element]) for element in elements], bonds
    )


def methane() -> LabeledGraph:
    return molecule(["C"], [])


def ethane() -> LabeledGraph:
    return molecule(["C", "C"], [(0, 1, 1)])


def fluoroethenimine() -> LabeledGraph:
    """F-C=C=N"""
    return molecule(["F", "C", "C", "N"], [(0, 1, 1), (1, 2, 2), (2, 3, 2)])


def cyclopropane() -> LabeledGraph:
    return molecule(["C", "C", "C"], [(0, 1, 1), (1, 2, 1), (0, 2, 1)])


def benzene() -> LabeledGraph:
    return molecule(
        ["C"] * 6,
        [(0, 1, 2), (1, 2, 1), (2, 3, 2), (3, 4, 1), (4, 5, 2), (0, 5, 1)],
    )


def mdma() -> LabeledGraph:
    """3,4-Methylenedioxymethamphetamine: 11 C, 1 N, 2 O.

    Atoms 0-4 form the N-methylpropan-2-amine side chain, 5-8 and 12-13 the
    benzene ring, 9-11 the dioxole bridge.
    """
    elements = ["C", "C", "N", "C", "C", "C", "C", "C", "C", "O", "C", "O", "C", "C"]
    bonds = [
        (0, 1, 1), (1, 2, 1), (2, 3, 1), (1, 4, 1), (4, 5, 1),
        (5, 6, 2), (6, 7, 1), (7, 8, 2), (8, 12, 1), (12, 13, 2), (5, 13, 1),
        (8, 9, 1), (9, 10, 1), (10, 11, 1), (11, 12, 1),
    ]
    return molecule(elements, bonds)


REFERENCE_MOLECULES: Dict[str, Callable[[], LabeledGraph]] = {
    "methane": methane,
    "ethane": ethane,
    "fluoroethenimine": fluoroethenimine,
    "cyclopropane": cyclopropane,
    "benzene": benzene,
    "mdma": mdma,
}


def reference_names() -> List[str]:
    return sorted(REFERENCE_MOLECULES)
