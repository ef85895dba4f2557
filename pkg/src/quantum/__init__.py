"""Quantum-optics experiment grammar."""

from .components import (
    COMPONENTS,
    ComponentTable,
    ExperimentReport,
    UnknownComponentError,
    quantum_grammar,
    validate_experiment,
)

__all__ = [
    "COMPONENTS",
    "ComponentTable",
    "ExperimentReport",
    "UnknownComponentError",
    "quantum_grammar",
    "validate_experiment",
]
