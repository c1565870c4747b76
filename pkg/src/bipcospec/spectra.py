"""Exact adjacency and normalized Laplacian spectra of bipartite graphs.

The normalized Laplacian ``I - D^-1/2 A D^-1/2`` has irrational entries, but
it is similar to ``I - D^-1 A``.  We therefore store the characteristic
polynomial of ``D^-1 A`` (rational) and map its roots ``x`` to Laplacian
eigenvalues ``1 - x`` only when numbers are displayed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .construction import ConstructedPair
from .graph import BipartiteGraph, IsolatedVertexError, degrees, full_adjacency
from .matrix import BlockMatrix2x2, ZMatrix, charpoly, kron, partitioned_tensor
from .poly import QPoly, real_roots


def _lift_square(q: QPoly, extra: int) -> QPoly:
    # q(x^2) * x^extra
    coeffs = [Fraction(0)] * (2 * max(q.degree, 0) + 1 + extra)
    for k, c in enumerate(q.coeffs):
        coeffs[2 * k + extra] = c
    return QPoly(tuple(coeffs))


def bipartite_charpoly(biadj: ZMatrix, row_weights=None, col_weights=None) -> QPoly:
    """Characteristic polynomial of ``[[0, R^-1 B], [C^-1 B^T, 0]]``.

    With unit weights this is the adjacency polynomial; with the degree
    vectors it is the polynomial of ``D^-1 A``.  A Schur complement reduces
    the work to a ``min(m, n)`` square Gram-type matrix ``K``::

        det(xI - M) = x^(m-n) * det(x^2 I - K),   m >= n
    """
    m, n = biadj.shape
    rw = [Fraction(1)] * m if row_weights is None else [Fraction(1, w) for w in row_weights]
    cw = [Fraction(1)] * n if col_weights is None else [Fraction(1, w) for w in col_weights]
    left = biadj.map(Fraction)
    left = ZMatrix(m, n, tuple(left[i, j] * rw[i] for i in range(m) for j in range(n)))
    right = ZMatrix(n, m, tuple(biadj[j, i] * cw[i] for i in range(n) for j in range(m)))
    # left = R^-1 B (m x n), right = C^-1 B^T (n x m)
    if m >= n:
        gram = right @ left
    else:
        gram = left @ right
    return _lift_square(charpoly(gram), abs(m - n))


@dataclass(frozen=True)
class SpectralCertificate:
    adj_charpoly: QPoly
    norm_charpoly: QPoly

    def adjacency_eigenvalues(self) -> list[float]:
        return real_roots(self.adj_charpoly)

    def transition_eigenvalues(self) -> list[float]:
        """Eigenvalues of ``D^-1 A`` (equivalently of ``D^-1/2 A D^-1/2``)."""
        return real_roots(self.norm_charpoly)

    def normalized_laplacian_eigenvalues(self) -> list[float]:
        return sorted(1.0 - x for x in self.transition_eigenvalues())

    def to_dict(self) -> dict:
        return {"adjacency": self.adj_charpoly.to_json(), "normalized": self.norm_charpoly.to_json()}


def adjacency_charpoly(g: BipartiteGraph) -> QPoly:
    return bipartite_charpoly(g.biadj)


def certify(g: BipartiteGraph) -> SpectralCertificate:
    g.require_no_isolated()
    deg = degrees(g)
    return SpectralCertificate(
        adj_charpoly=bipartite_charpoly(g.biadj),
        norm_charpoly=bipartite_charpoly(g.biadj, deg.left, deg.right),
    )


def cospectral_adjacency(p: ConstructedPair) -> bool:
    return adjacency_charpoly(p.g1) == adjacency_charpoly(p.g2)


def cospectral_normalized(p: ConstructedPair) -> bool:
    p.g1.require_no_isolated("g1")
    p.g2.require_no_isolated("g2")
    if p.g1.n_vertices != p.g2.n_vertices:
        return False
    return certify(p.g1).norm_charpoly == certify(p.g2).norm_charpoly


def _transition(g: BipartiteGraph) -> BlockMatrix2x2:
    # D^-1 A partitioned along the bipartition
    deg = degrees(g)
    b = g.biadj
    top = ZMatrix(g.left, g.right, tuple(Fraction(b[i, j], deg.left[i]) for i in range(g.left) for j in range(g.right)))
    bot = ZMatrix(g.right, g.left, tuple(Fraction(b[i, j], deg.right[j]) for j in range(g.right) for i in range(g.left)))
    return BlockMatrix2x2.anti_diagonal(top, bot)


def _squared_normalized(g: BipartiteGraph) -> BlockMatrix2x2:
    # entrywise square of D^-1/2 A D^-1/2; all entries are >= 0 so squares determine it
    deg = degrees(g)
    b = g.biadj
    top = ZMatrix(g.left, g.right, tuple(Fraction(b[i, j], deg.left[i] * deg.right[j]) for i in range(g.left) for j in range(g.right)))
    return BlockMatrix2x2.anti_diagonal(top, top.T)


def lemma_decomposition_check(g1: BipartiteGraph, g2: BipartiteGraph) -> bool:
    """Check that the normalized Laplacian of the product graph is ``2I - L1 (x) L2``.

    Here ``(x)`` is the blockwise Kronecker product with blocks split along
    the bipartitions.  The identity is verified exactly in three equivalent
    rational forms: degrees multiply blockwise, ``D^-1 A`` factors blockwise,
    and the entrywise square of ``D^-1/2 A D^-1/2`` factors blockwise (which
    pins down the irrational matrix because its entries are nonnegative).
    """
    g1.require_no_isolated("g1")
    g2.require_no_isolated("g2")
    prod = partitioned_tensor(
        BlockMatrix2x2.split(full_adjacency(g1), g1.left, g1.left),
        BlockMatrix2x2.split(full_adjacency(g2), g2.left, g2.left),
    )
    if not prod.is_anti_diagonal():
        return False
    g = BipartiteGraph.from_biadj(prod.v)
    if prod.w != prod.v.T:
        return False
    if g.isolated_vertices():
        raise IsolatedVertexError("product graph has an isolated vertex")

    d1, d2, d = degrees(g1), degrees(g2), degrees(g)
    if d.left != kron(ZMatrix(1, g1.left, d1.left), ZMatrix(1, g2.left, d2.left)).entries:
        return False
    if d.right != kron(ZMatrix(1, g1.right, d1.right), ZMatrix(1, g2.right, d2.right)).entries:
        return False

    t = _transition(g)
    if t != partitioned_tensor(_transition(g1), _transition(g2)):
        return False

    # 2I - L1 (x) L2 with L = I - D^-1 A, compared against I - D^-1 A of the product
    def laplacian(tb: BlockMatrix2x2) -> BlockMatrix2x2:
        return BlockMatrix2x2(ZMatrix.identity(tb.u.rows), -tb.v, -tb.w, ZMatrix.identity(tb.x.rows))

    lhs = laplacian(t).assemble()
    rhs = ZMatrix.identity(g.n_vertices).scale(2) - partitioned_tensor(laplacian(_transition(g1)), laplacian(_transition(g2))).assemble()
    if lhs != rhs:
        return False

    return _squared_normalized(g) == partitioned_tensor(_squared_normalized(g1), _squared_normalized(g2))


def normalized_adjacency(g: BipartiteGraph) -> np.ndarray:
    """Floating ``D^-1/2 A D^-1/2`` for numeric cross-checks."""
    a = np.array(full_adjacency(g).tolist(), dtype=float)
    d = a.sum(axis=1)
    if np.any(d == 0):
        raise IsolatedVertexError("graph has an isolated vertex")
    s = 1.0 / np.sqrt(d)
    return s[:, None] * a * s[None, :]
