"""Language and complexity nodes."""
