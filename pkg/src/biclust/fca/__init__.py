"""Formal concept analysis core: contexts, Galois operators, concept mining."""

from .core import BinaryContext, FormalConcept, enumerate_concepts, kernel_name

__all__ = ["BinaryContext", "FormalConcept", "enumerate_concepts", "kernel_name"]
