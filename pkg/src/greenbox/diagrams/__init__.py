"""Partition diagrams, the ten diagram monoid families, and their algebras."""

from .diagram import (
    Factorization,
    PartitionDiagram,
    diagram_to_labels,
    diagram_to_one_line,
    diagram_to_text,
    factorize,
    identity_diagram,
    is_planar,
    labels_to_diagram,
    make_diagram,
    multiply,
    one_line_to_diagram,
    perm_diagram,
    star,
    text_to_diagram,
    through_strands,
)
from .families import (
    FAMILIES,
    DiagramFamily,
    enumerate_family,
    family,
    in_family,
)

__all__ = [
    "PartitionDiagram", "Factorization", "make_diagram", "multiply", "star",
    "is_planar", "through_strands", "factorize", "identity_diagram",
    "perm_diagram", "one_line_to_diagram", "diagram_to_one_line",
    "diagram_to_text", "text_to_diagram", "diagram_to_labels",
    "labels_to_diagram", "DiagramFamily", "FAMILIES", "family", "in_family",
    "enumerate_family",
]
