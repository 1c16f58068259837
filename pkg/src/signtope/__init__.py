"""Topological lower- and upper-bound tools for the sign-rank of partial sign matrices."""

__version__ = "0.1.0"
