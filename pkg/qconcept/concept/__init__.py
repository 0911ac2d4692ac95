"""Adjunctions, multi-adjoint frames and their concept lattices."""
