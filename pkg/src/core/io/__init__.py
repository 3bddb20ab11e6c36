"""Lecture des charges utiles JSON et formes JSON des objets du domaine."""
