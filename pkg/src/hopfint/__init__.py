"""Integrals, separability and smash products of finite Hopf algebras over commutative rings."""

__version__ = "0.1.0"
