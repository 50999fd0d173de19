"""Exact positivity certificates for binary quartic forms."""

__version__ = "0.1.0"
