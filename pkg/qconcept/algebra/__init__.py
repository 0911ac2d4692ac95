"""Adjoint triples and finite quantaloids."""
