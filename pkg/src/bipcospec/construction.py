"""The cospectral candidate pair built from two biadjacency matrices.

For ``v`` (m x n) and ``b`` (p x q) the pair is the bipartite graph with
biadjacency ``kron(v, b)`` and the one with biadjacency ``kron(v, b.T)``.
Their disjoint union is the direct product of the graphs of ``v`` and ``b``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import BipartiteGraph, adjacency_lists, full_adjacency
from .matrix import BlockMatrix2x2, ZMatrix, as_matrix, kron


@dataclass(frozen=True)
class ConstructedPair:
    g1: BipartiteGraph
    g2: BipartiteGraph
    v: ZMatrix
    b: ZMatrix

    @property
    def dims(self) -> tuple[int, int, int, int]:
        return (self.v.rows, self.v.cols, self.b.rows, self.b.cols)

    def vertex_labels(self) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
        """``(i, k)`` labels for the vertices of g1 and g2, in canonical order.

        In g1 a left vertex ``(i, k)`` pairs row ``i`` of v with row ``k`` of b
        and a right vertex ``(j, l)`` pairs columns.  In g2 the roles of b's
        rows and columns swap.
        """
        m, n, p, q = self.dims
        g1 = [(i, k) for i in range(m) for k in range(p)] + [(j, l) for j in range(n) for l in range(q)]
        g2 = [(i, l) for i in range(m) for l in range(q)] + [(j, k) for j in range(n) for k in range(p)]
        return g1, g2

    def product_embedding(self) -> tuple[list[int], list[int]]:
        """Where each vertex of g1 and of g2 sits in ``direct_product(G_v, G_b)``.

        Product vertex ``(x, y)`` has index ``x * (p + q) + y``.
        """
        m, n, p, q = self.dims
        w = p + q
        g1 = [i * w + k for i in range(m) for k in range(p)]
        g1 += [(m + j) * w + p + l for j in range(n) for l in range(q)]
        g2 = [i * w + p + l for i in range(m) for l in range(q)]
        g2 += [(m + j) * w + k for j in range(n) for k in range(p)]
        return g1, g2


def construct_pair(v, b) -> ConstructedPair:
    v = as_matrix(v)
    b = as_matrix(b)
    gv = BipartiteGraph.from_biadj(v)
    gb = BipartiteGraph.from_biadj(b)
    gv.require_no_isolated("v")
    gb.require_no_isolated("b")
    return ConstructedPair(
        g1=BipartiteGraph.from_biadj(kron(v, b)),
        g2=BipartiteGraph.from_biadj(kron(v, b.T)),
        v=v,
        b=b,
    )


def direct_product(g: BipartiteGraph, h: BipartiteGraph) -> ZMatrix:
    """Adjacency matrix of the direct (tensor) product on ``(m+n)(p+q)`` vertices."""
    return kron(full_adjacency(g), full_adjacency(h))


def disjoint_union(a: ZMatrix, b: ZMatrix) -> ZMatrix:
    return BlockMatrix2x2.diagonal(a, b).assemble()


def split_components(adj: ZMatrix) -> list[tuple[int, ...]]:
    """Connected components as sorted vertex tuples, ordered by their smallest vertex."""
    nbrs = adjacency_lists(adj)
    seen = [False] * adj.rows
    comps = []
    for start in range(adj.rows):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in nbrs[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def is_bipartite(adj: ZMatrix, vertices=None) -> bool:
    nbrs = adjacency_lists(adj)
    side: dict[int, int] = {}
    for start in vertices if vertices is not None else range(adj.rows):
        if start in side:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in nbrs[u]:
                if w not in side:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
    return True
