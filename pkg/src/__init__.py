"""valence-grammar: grammar-based string representation for valence-constrained graphs."""
