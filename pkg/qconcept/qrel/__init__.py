"""Typed sets, Q-relations, Q-categories and (co)presheaf fibres."""
