"""Cospectral bipartite graphs from partitioned tensor products."""

__version__ = "0.1.0"
