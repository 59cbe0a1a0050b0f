"""Catalog modules; importing this package registers every record."""

from . import closed_forms, ogf, egf, chebyshev, fibonacci, epsilon  # noqa: F401
