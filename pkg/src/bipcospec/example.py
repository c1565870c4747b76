"""The worked example: a (1,2)-biregular v and a balanced non-PET b."""

from __future__ import annotations

from .construction import construct_pair
from .graph import full_adjacency
from .iso import BIREGULAR_DISTINCT, THEOREM_BIREGULAR, graph_isomorphic, is_pet
from .matrix import ZMatrix
from .report import PairReport, verify_pair

V_FIG = ZMatrix.from_rows([[1, 0], [1, 0], [0, 1], [0, 1]])
B_FIG = ZMatrix.from_rows([[1, 1, 0], [1, 0, 1], [1, 0, 0]])


def reproduce_example(timing: bool = False) -> tuple[PairReport, list[tuple[str, bool]]]:
    """Run the full verification on the example and list each check with its outcome."""
    report = verify_pair(V_FIG, B_FIG, timing=timing)
    pair = construct_pair(V_FIG, B_FIG)
    expected_edges = V_FIG.total() * B_FIG.total()
    search = graph_isomorphic(full_adjacency(pair.g1), full_adjacency(pair.g2), use_filters=False)
    checks = [
        ("both graphs have 18 vertices", report.vertices == (18, 18)),
        (f"both graphs have ones(v)*ones(b) = {expected_edges} edges", report.edges == (expected_edges, expected_edges)),
        ("adjacency characteristic polynomials equal", report.cospectral_adjacency),
        ("normalized Laplacian characteristic polynomials equal", report.cospectral_normalized),
        ("exhaustive search finds no isomorphism", not search.isomorphic),
        ("b is not PET", not is_pet(B_FIG)),
        ("theorem path says nonisomorphic", not report.isomorphic and report.iso_verdict.decided_by == THEOREM_BIREGULAR),
        ("eta certificate is biregular-distinct", report.eta_certificate == BIREGULAR_DISTINCT),
    ]
    return report, checks
