"""Exact arithmetic for dyadic rearrangements of the Basilica Julia set."""

__all__ = [
    "circle",
    "lamination",
    "diagram",
    "element",
    "membership",
    "thompson",
    "words",
    "render",
]
