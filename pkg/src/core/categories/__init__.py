"""Morphismes des catégories Δ et Λ."""
