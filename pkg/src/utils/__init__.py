"""Utilitaires: constantes et logging."""
