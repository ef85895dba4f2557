"""Commands package for the valence-grammar CLI."""
