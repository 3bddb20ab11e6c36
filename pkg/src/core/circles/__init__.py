"""Ensembles archimédiens et cercles abstraits."""
