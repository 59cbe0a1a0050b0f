"""Balancing and Lucas-balancing polynomials with an exact identity checker."""

__version__ = "0.1.0"
