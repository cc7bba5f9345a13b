"""Exact triangle statistics of Kronecker product graphs"""

__version__ = "1.0.0"
