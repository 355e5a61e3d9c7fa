"""Degeneracy loci of maps between bundles on P^r, resolved by the Gulliksen-Negard complex."""

__version__ = "0.1.0"
