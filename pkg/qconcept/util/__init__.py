"""A package with shared methods."""
