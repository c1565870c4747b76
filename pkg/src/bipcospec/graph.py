"""Bipartite graphs given by a biadjacency matrix.

Left vertices are numbered ``0..m-1`` and right vertices ``m..m+n-1`` in the
full adjacency matrix.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass

from .matrix import BlockMatrix2x2, ZMatrix, as_matrix


class IsolatedVertexError(ValueError):
    pass


@dataclass(frozen=True)
class DegreeVector:
    left: tuple[int, ...]
    right: tuple[int, ...]

    def as_diagonal(self) -> ZMatrix:
        return ZMatrix.diag(self.left + self.right)


@dataclass(frozen=True)
class BipartiteGraph:
    left: int
    right: int
    biadj: ZMatrix

    def __post_init__(self):
        if self.biadj.shape != (self.left, self.right):
            raise ValueError(
                f"biadjacency is {self.biadj.rows}x{self.biadj.cols}, expected {self.left}x{self.right}"
            )
        if not self.biadj.is_binary():
            raise ValueError("biadjacency matrix must be 0/1")

    @classmethod
    def from_biadj(cls, biadj) -> "BipartiteGraph":
        b = as_matrix(biadj)
        return cls(b.rows, b.cols, b)

    @property
    def n_vertices(self) -> int:
        return self.left + self.right

    @property
    def n_edges(self) -> int:
        return self.biadj.total()

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (row, column) pairs of the biadjacency matrix."""
        return [(i, j) for i in range(self.left) for j in range(self.right) if self.biadj[i, j]]

    def is_empty(self) -> bool:
        return self.n_edges == 0

    def isolated_vertices(self) -> list[str]:
        rows = [f"row {i}" for i, s in enumerate(self.biadj.row_sums()) if s == 0]
        cols = [f"column {j}" for j, s in enumerate(self.biadj.col_sums()) if s == 0]
        return rows + cols

    def require_no_isolated(self, name: str = "graph") -> None:
        bad = self.isolated_vertices()
        if bad:
            raise IsolatedVertexError(f"{name} has an isolated vertex: zero {', zero '.join(bad)}")

    def to_dict(self) -> dict:
        return {"left": self.left, "right": self.right, "edges": [list(e) for e in self.edges()]}

    @classmethod
    def from_dict(cls, data: dict) -> "BipartiteGraph":
        rows = [[0] * data["right"] for _ in range(data["left"])]
        for i, j in data["edges"]:
            rows[i][j] = 1
        return cls(data["left"], data["right"], ZMatrix.from_rows(rows, cols=data["right"]))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_dot(self, name: str = "G", labels: list[str] | None = None) -> str:
        """Graphviz source: left vertices drawn as boxes, right vertices as circles."""
        lines = [f"graph {name} {{"]
        for v in range(self.n_vertices):
            shape = "box" if v < self.left else "circle"
            label = labels[v] if labels else str(v)
            lines.append(f'  {v} [shape={shape}, label="{label}"];')
        for i, j in self.edges():
            lines.append(f"  {i} -- {self.left + j};")
        lines.append("}")
        return "\n".join(lines)


def full_adjacency(g: BipartiteGraph) -> ZMatrix:
    """``[[0, B], [B^T, 0]]``."""
    return BlockMatrix2x2.anti_diagonal(g.biadj, g.biadj.T).assemble()


def degrees(g: BipartiteGraph) -> DegreeVector:
    return DegreeVector(g.biadj.row_sums(), g.biadj.col_sums())


def adjacency_lists(adj: ZMatrix) -> list[list[int]]:
    return [[j for j, x in enumerate(adj.row(i)) if x] for i in range(adj.rows)]


def is_connected(g: BipartiteGraph) -> bool:
    n = g.n_vertices
    if n <= 1:
        return True
    nbrs = adjacency_lists(full_adjacency(g))
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in nbrs[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == n


def biregular_degrees(g: BipartiteGraph) -> tuple[int, int] | None:
    """``(k, l)`` when every left vertex has degree k and every right vertex degree l."""
    if g.is_empty():
        return None
    deg = degrees(g)
    if len(set(deg.left)) == 1 and len(set(deg.right)) == 1:
        return deg.left[0], deg.right[0]
    return None


def is_balanced(g: BipartiteGraph) -> bool:
    return g.left == g.right
