"""Chemistry instantiation: valence tables, SMILES subset, symbol-string codec."""

from .canonical import CanonicalizationError, canonical_form, same_graph
from .codec import (
    EncodingError,
    EncodingOverflow,
    TokenizeError,
    decode,
    decode_to_smiles,
    encode,
    encode_smiles,
    to_text,
    tokenize,
)
from .smiles import (
    KekulizationError,
    SmilesError,
    SmilesErrorCategory,
    SmilesWriteError,
    is_valid_smiles,
    kekulize,
    parse_smiles,
    write_smiles,
)
from .valence import (
    CORE,
    MoleculeReport,
    UnknownElementError,
    ValenceTable,
    ValenceTableError,
    build_chem_grammar,
    chem_grammar,
    validate_molecule,
)

__all__ = [
    "CORE",
    "CanonicalizationError",
    "EncodingError",
    "EncodingOverflow",
    "KekulizationError",
    "MoleculeReport",
    "SmilesError",
    "SmilesErrorCategory",
    "SmilesWriteError",
    "TokenizeError",
    "UnknownElementError",
    "ValenceTable",
    "ValenceTableError",
    "build_chem_grammar",
    "canonical_form",
    "chem_grammar",
    "decode",
    "decode_to_smiles",
    "encode",
    "encode_smiles",
    "is_valid_smiles",
    "kekulize",
    "parse_smiles",
    "same_graph",
    "to_text",
    "tokenize",
    "validate_molecule",
    "write_smiles",
]
