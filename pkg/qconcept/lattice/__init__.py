"""Finite lattices, monotone maps, Galois connections and closure operators."""
