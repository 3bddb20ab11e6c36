"""Groupes ordonnés à gauche, n-uplets F(n) et modèle linéaire par morceaux."""
