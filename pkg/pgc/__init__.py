"""Finite p-group engine: pc presentations, commutator sets and classification checks"""

__version__ = "1.0.0"
FORMAT_VERSION = 1
