"""Ontology learning from text and ontology-backed semantic document search."""

__version__ = "0.1.0"
