"""Zonotopal algebras, Orlik-Terao algebras and Schubert-variety Betti data over Q."""
__version__ = "0.1.0"
