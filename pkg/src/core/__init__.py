"""Logique métier: catégories, ensembles cycliques, réalisation et cercles."""
