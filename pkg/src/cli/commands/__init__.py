"""Un module par groupe de verbes; chacun expose ``register(subparsers)``."""

from src.cli.commands import arc, circle, classify, cocycle, cyclicset, delta, lambda_cat, pl, realize

COMMAND_MODULES = (delta, lambda_cat, cyclicset, realize, circle, cocycle, classify, pl, arc)
