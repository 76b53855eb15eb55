"""Computation and command-line support services."""
