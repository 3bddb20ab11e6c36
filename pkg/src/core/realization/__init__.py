"""Réalisation géométrique en un point, loi de groupe du cercle et classification."""
