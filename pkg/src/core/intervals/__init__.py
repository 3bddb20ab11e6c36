"""Intervalles, suites monotones et structures cycliques sur les points."""
