"""Verdict records for one (v, b) input and the randomized search for mates."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .construction import construct_pair
from .iso import IsoVerdict, decide_pair_isomorphism, property_eta_certificate
from .matrix import ZMatrix
from .poly import QPoly
from .spectra import certify

SCHEMA = 1


@dataclass(frozen=True)
class PairReport:
    v: ZMatrix
    b: ZMatrix
    vertices: tuple[int, int]
    edges: tuple[int, int]
    cospectral_adjacency: bool
    cospectral_normalized: bool
    iso_verdict: IsoVerdict
    eta_certificate: str
    adj_charpolys: tuple[QPoly, QPoly]
    norm_charpolys: tuple[QPoly, QPoly]
    timing_ms: Optional[dict] = None
    sample: Optional[int] = None

    @property
    def isomorphic(self) -> bool:
        return self.iso_verdict.isomorphic

    def to_dict(self) -> dict:
        iv = self.iso_verdict
        out = {
            "schema": SCHEMA,
            "v": self.v.tolist(),
            "b": self.b.tolist(),
            "vertices": list(self.vertices),
            "edges": list(self.edges),
            "cospectral_adjacency": self.cospectral_adjacency,
            "cospectral_normalized": self.cospectral_normalized,
            "isomorphic": iv.isomorphic,
            "decided_by": iv.decided_by,
            "respects_partite": iv.respects_partite,
            "witness": list(iv.witness) if iv.witness is not None else None,
            "eta_certificate": self.eta_certificate,
            "adj_charpolys": [p.to_json() for p in self.adj_charpolys],
            "norm_charpolys": [p.to_json() for p in self.norm_charpolys],
        }
        if self.sample is not None:
            out["sample"] = self.sample
        if self.timing_ms is not None:
            out["timing_ms"] = self.timing_ms
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "PairReport":
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {data.get('schema')!r}")
        witness = data["witness"]
        return cls(
            v=ZMatrix.from_rows(data["v"]),
            b=ZMatrix.from_rows(data["b"]),
            vertices=tuple(data["vertices"]),
            edges=tuple(data["edges"]),
            cospectral_adjacency=data["cospectral_adjacency"],
            cospectral_normalized=data["cospectral_normalized"],
            iso_verdict=IsoVerdict(
                isomorphic=data["isomorphic"],
                decided_by=data["decided_by"],
                witness=tuple(witness) if witness is not None else None,
                respects_partite=data["respects_partite"],
            ),
            eta_certificate=data["eta_certificate"],
            adj_charpolys=tuple(QPoly.from_json(c) for c in data["adj_charpolys"]),
            norm_charpolys=tuple(QPoly.from_json(c) for c in data["norm_charpolys"]),
            timing_ms=data.get("timing_ms"),
            sample=data.get("sample"),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "PairReport":
        return cls.from_dict(json.loads(text))

    def summary(self) -> str:
        iv = self.iso_verdict
        m, n = self.v.shape
        p, q = self.b.shape
        lines = [
            f"v: {m}x{n}  b: {p}x{q}",
            f"g1: {self.vertices[0]} vertices, {self.edges[0]} edges",
            f"g2: {self.vertices[1]} vertices, {self.edges[1]} edges",
            f"cospectral (adjacency):           {'yes' if self.cospectral_adjacency else 'no'}",
            f"cospectral (normalized Laplacian): {'yes' if self.cospectral_normalized else 'no'}",
            f"isomorphic: {'yes' if iv.isomorphic else 'no'}  (decided by {iv.decided_by})",
            f"property eta certificate: {self.eta_certificate}",
        ]
        if iv.respects_partite is not None:
            lines.append(f"witness respects partite sets: {'yes' if iv.respects_partite else 'no'}")
        if self.timing_ms:
            lines.append("timing (ms): " + ", ".join(f"{k}={v:.2f}" for k, v in self.timing_ms.items()))
        return "\n".join(lines)


def verify_pair(v, b, exhaustive: bool = False, timing: bool = False, sample: int | None = None) -> PairReport:
    """Construct the pair for ``(v, b)`` and compute every verdict."""
    clock = {}
    t0 = time.perf_counter()
    pair = construct_pair(v, b)
    t1 = time.perf_counter()
    c1, c2 = certify(pair.g1), certify(pair.g2)
    t2 = time.perf_counter()
    verdict = decide_pair_isomorphism(pair, exhaustive=exhaustive)
    eta = property_eta_certificate(pair.v, pair.b)
    t3 = time.perf_counter()
    if timing:
        clock = {
            "construct": round((t1 - t0) * 1e3, 3),
            "spectra": round((t2 - t1) * 1e3, 3),
            "isomorphism": round((t3 - t2) * 1e3, 3),
        }
    return PairReport(
        v=pair.v,
        b=pair.b,
        vertices=(pair.g1.n_vertices, pair.g2.n_vertices),
        edges=(pair.g1.n_edges, pair.g2.n_edges),
        cospectral_adjacency=c1.adj_charpoly == c2.adj_charpoly,
        cospectral_normalized=c1.norm_charpoly == c2.norm_charpoly,
        iso_verdict=verdict,
        eta_certificate=eta,
        adj_charpolys=(c1.adj_charpoly, c2.adj_charpoly),
        norm_charpolys=(c1.norm_charpoly, c2.norm_charpoly),
        timing_ms=clock if timing else None,
        sample=sample,
    )


@dataclass(frozen=True)
class SearchConfig:
    """Sampling plan for ``run_search``; each range is inclusive ``(lo, hi)``."""

    m: tuple[int, int] = (1, 4)
    n: tuple[int, int] = (1, 4)
    p: tuple[int, int] = (1, 4)
    q: tuple[int, int] = (1, 4)
    density: tuple[float, float] = (0.5, 0.5)
    biregular: bool = False
    symmetric_b: bool = False
    samples: int = 100
    seed: int = 0
    exhaustive: bool = False
    jobs: int = 1

    def validate(self) -> None:
        for name in ("m", "n", "p", "q"):
            lo, hi = getattr(self, name)
            if lo < 1 or hi < lo:
                raise ValueError(f"dimension range {name}={lo}-{hi} is empty or non-positive")
        lo, hi = self.density
        if not (0 < lo <= hi <= 1):
            raise ValueError(f"density range {lo}-{hi} must lie in (0, 1]")
        if self.samples < 0:
            raise ValueError("sample count must be non-negative")
        if not (0 <= self.seed < 2 ** 64):
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")


def random_binary(rng: np.random.Generator, rows: int, cols: int, density: float) -> ZMatrix:
    """Bernoulli(density) fill, resampled until no row or column is zero."""
    while True:
        a = rng.random((rows, cols)) < density
        if a.any(axis=1).all() and a.any(axis=0).all():
            return ZMatrix.from_rows(a.astype(int).tolist())


def random_symmetric_binary(rng: np.random.Generator, n: int, density: float) -> ZMatrix:
    while True:
        a = np.triu(rng.random((n, n)) < density)
        a = a | a.T
        if a.any(axis=1).all():
            return ZMatrix.from_rows(a.astype(int).tolist())


def biregular_choices(m: int, n: int) -> list[tuple[int, int]]:
    """Feasible ``(k, l)`` with ``k*m == l*n``; distinct-degree pairs when any exist."""
    pairs = [(k, k * m // n) for k in range(1, n + 1) if (k * m) % n == 0 and 1 <= k * m // n <= m]
    distinct = [kl for kl in pairs if kl[0] != kl[1]]
    return distinct or pairs


def random_biregular(rng: np.random.Generator, m: int, n: int, k: int, l: int, tries: int = 200) -> ZMatrix:
    """Configuration model with rejection of repeated edges."""
    if k * m != l * n:
        raise ValueError(f"no ({k},{l})-biregular graph on {m}+{n} vertices")
    left = np.repeat(np.arange(m), k)
    for _ in range(tries):
        right = rng.permutation(np.repeat(np.arange(n), l))
        edges = set(zip(left.tolist(), right.tolist()))
        if len(edges) == k * m:
            rows = [[0] * n for _ in range(m)]
            for i, j in edges:
                rows[i][j] = 1
            return ZMatrix.from_rows(rows)
    # circulant fallback: consecutive blocks of k columns cover each column l times
    rows = [[0] * n for _ in range(m)]
    for i in range(m):
        for t in range(k):
            rows[i][(i * k + t) % n] = 1
    return ZMatrix.from_rows(rows)


def sample_inputs(config: SearchConfig, index: int) -> tuple[ZMatrix, ZMatrix]:
    """The ``index``-th sample; depends only on ``(config, index)``."""
    rng = np.random.default_rng([config.seed, index])

    def dim(r):
        return int(rng.integers(r[0], r[1] + 1))

    m, n, p, q = dim(config.m), dim(config.n), dim(config.p), dim(config.q)
    lo, hi = config.density
    density = float(rng.uniform(lo, hi)) if hi > lo else lo
    if config.biregular:
        choices = biregular_choices(m, n)
        k, l = choices[int(rng.integers(len(choices)))]
        v = random_biregular(rng, m, n, k, l)
    else:
        v = random_binary(rng, m, n, density)
    if config.symmetric_b:
        b = random_symmetric_binary(rng, p, density)
    else:
        b = random_binary(rng, p, q, density)
    return v, b


def evaluate_sample(config: SearchConfig, index: int) -> PairReport | None:
    v, b = sample_inputs(config, index)
    report = verify_pair(v, b, exhaustive=config.exhaustive, sample=index)
    if report.cospectral_adjacency and report.cospectral_normalized and not report.isomorphic:
        return report
    return None


def _evaluate_star(args):
    return evaluate_sample(*args)


def dedup_key(report: PairReport) -> tuple:
    return tuple(sorted(json.dumps(p.to_json()) for p in report.adj_charpolys))


def run_search(config: SearchConfig) -> list[PairReport]:
    """Cospectral nonisomorphic hits in sample order, deduplicated by charpoly pair.

    Two genuinely different hits with equal spectra are merged; that is an
    accepted loss for a search tool.
    """
    config.validate()
    jobs = [(config, i) for i in range(config.samples)]
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(_evaluate_star, jobs, chunksize=16))
    else:
        results = [_evaluate_star(j) for j in jobs]
    hits, seen = [], set()
    for report in results:
        if report is None:
            continue
        key = dedup_key(report)
        if key in seen:
            continue
        seen.add(key)
        hits.append(report)
    return hits
