"""Rule-vector grammars that derive valence-constrained graphs from symbol strings."""

from .derive import (
    DeriveOptions,
    GrammarDerivationError,
    RuleCounts,
    TypeSpec,
    derive_grammar,
    rule_counts,
)
from .engine import (
    DerivationTrace,
    SymbolRangeError,
    TraceAction,
    TraceStep,
    derive_graph,
    derive_with_trace,
    replay_trace,
)
from .graph import Edge, LabeledGraph, Vertex
from .spec import (
    GrammarFormatError,
    GrammarSpec,
    GrammarValidation,
    SymbolDef,
    SymbolKind,
    TypeDef,
    describe_rule,
    format_rule_table,
    grammar_from_json,
    grammar_to_json,
    symbol_number,
    validate_grammar,
)

__all__ = [
    "DerivationTrace",
    "DeriveOptions",
    "Edge",
    "GrammarDerivationError",
    "GrammarFormatError",
    "GrammarSpec",
    "GrammarValidation",
    "LabeledGraph",
    "RuleCounts",
    "SymbolDef",
    "SymbolKind",
    "SymbolRangeError",
    "TraceAction",
    "TraceStep",
    "TypeDef",
    "TypeSpec",
    "Vertex",
    "derive_grammar",
    "describe_rule",
    "format_rule_table",
    "derive_graph",
    "derive_with_trace",
    "grammar_from_json",
    "grammar_to_json",
    "replay_trace",
    "rule_counts",
    "symbol_number",
    "validate_grammar",
]
