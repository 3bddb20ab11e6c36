"""Interface en ligne de commande."""
