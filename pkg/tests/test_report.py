import json

import numpy as np
import pytest

from bipcospec.construction import construct_pair
from bipcospec.example import reproduce_example
from bipcospec.graph import BipartiteGraph, biregular_degrees, full_adjacency
from bipcospec.iso import (
    THEOREM_BIREGULAR,
    UNDECIDED,
    graph_isomorphic,
    is_pet,
    partite_respecting_iso,
)
from bipcospec.matrix import ZMatrix
from bipcospec.report import (
    PairReport,
    SearchConfig,
    biregular_choices,
    random_biregular,
    run_search,
    sample_inputs,
    verify_pair,
)
from bipcospec.spectra import cospectral_adjacency, cospectral_normalized


def test_figure_report(v_fig, b_fig):
    r = verify_pair(v_fig, b_fig)
    assert r.cospectral_adjacency and r.cospectral_normalized
    assert not r.isomorphic
    assert r.iso_verdict.decided_by == THEOREM_BIREGULAR
    assert r.eta_certificate == "biregular-distinct"
    assert r.vertices == (18, 18)
    assert r.timing_ms is None


def test_all_ones_isomorphic():
    r = verify_pair(ZMatrix.ones(2, 2), ZMatrix.ones(2, 2))
    assert r.isomorphic


def test_unbalanced_v_non_pet_b():
    b = ZMatrix.from_rows([[1, 1, 0], [1, 0, 1], [1, 0, 0]])
    r = verify_pair(ZMatrix.ones(3, 2), b)
    assert not r.isomorphic
    pair = construct_pair(ZMatrix.ones(3, 2), b)
    assert not graph_isomorphic(full_adjacency(pair.g1), full_adjacency(pair.g2), use_filters=False).isomorphic


def test_flags_match_spectra(rng):
    from .conftest import random_valid
    for _ in range(15):
        v = random_valid(rng, *rng.integers(1, 4, size=2))
        b = random_valid(rng, *rng.integers(1, 4, size=2))
        r = verify_pair(v, b)
        pair = construct_pair(v, b)
        assert r.cospectral_adjacency == cospectral_adjacency(pair)
        assert r.cospectral_normalized == cospectral_normalized(pair)
        if r.iso_verdict.decided_by.startswith("theorem"):
            assert r.eta_certificate != UNDECIDED


def test_json_round_trip(v_fig, b_fig):
    r = verify_pair(v_fig, b_fig, sample=3)
    text = r.to_json()
    assert PairReport.from_json(text) == r
    assert json.loads(text)["schema"] == 1
    iso = verify_pair(ZMatrix.from_rows([[1, 1], [1, 0]]), ZMatrix.from_rows([[1, 1], [0, 1]]))
    assert PairReport.from_json(iso.to_json()) == iso


def test_schema_checked(v_fig, b_fig):
    data = verify_pair(v_fig, b_fig).to_dict()
    data["schema"] = 99
    with pytest.raises(ValueError):
        PairReport.from_dict(data)


def test_timing_opt_in(v_fig, b_fig):
    r = verify_pair(v_fig, b_fig, timing=True)
    assert set(r.timing_ms) == {"construct", "spectra", "isomorphism"}
    assert "timing" in r.summary()


def test_reproduce_example_checks():
    report, checks = reproduce_example()
    assert all(ok for _, ok in checks), checks


class TestConfig:
    def test_defaults_valid(self):
        SearchConfig().validate()

    @pytest.mark.parametrize("kwargs", [
        {"m": (0, 2)}, {"n": (3, 2)}, {"density": (0.0, 0.5)}, {"density": (0.5, 1.2)},
        {"samples": -1}, {"seed": -1}, {"jobs": 0},
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(ValueError):
            SearchConfig(**kwargs).validate()

    def test_samples_are_pure(self):
        c = SearchConfig(seed=5)
        assert sample_inputs(c, 17) == sample_inputs(c, 17)
        assert sample_inputs(c, 17) != sample_inputs(c, 18)


def test_biregular_sampler():
    assert biregular_choices(4, 2) == [(1, 2), (2, 4)]
    assert biregular_choices(3, 3) == [(1, 1), (2, 2), (3, 3)]
    rng = np.random.default_rng(0)
    for m, n in [(4, 2), (6, 4), (3, 3)]:
        for k, l in biregular_choices(m, n):
            g = BipartiteGraph.from_biadj(random_biregular(rng, m, n, k, l))
            assert biregular_degrees(g) == (k, l)
    with pytest.raises(ValueError):
        random_biregular(rng, 3, 2, 1, 1)


def test_search_unbalanced_both_has_no_hits():
    hits = run_search(SearchConfig(m=(2, 2), n=(3, 3), p=(1, 1), q=(3, 4), samples=60, seed=1))
    assert hits == []


def test_search_symmetric_b_has_no_hits():
    assert run_search(SearchConfig(symmetric_b=True, samples=100, seed=2)) == []


def test_search_biregular_hits_have_non_pet_b():
    config = SearchConfig(m=(4, 4), n=(2, 2), p=(3, 3), q=(3, 3), biregular=True, samples=1000, seed=42)
    hits = run_search(config)
    assert hits
    for r in hits:
        assert not is_pet(r.b)
        assert r.iso_verdict.decided_by == THEOREM_BIREGULAR
        pair = construct_pair(r.v, r.b)
        assert partite_respecting_iso(pair) is None
        assert not graph_isomorphic(full_adjacency(pair.g1), full_adjacency(pair.g2), use_filters=False).isomorphic


def test_search_hits_are_verified():
    for r in run_search(SearchConfig(samples=150, seed=11)):
        assert r.cospectral_adjacency and r.cospectral_normalized and not r.isomorphic
        pair = construct_pair(r.v, r.b)
        if pair.g1.n_vertices <= 20:
            assert not graph_isomorphic(full_adjacency(pair.g1), full_adjacency(pair.g2), use_filters=False).isomorphic


def test_parallel_matches_serial():
    c = SearchConfig(samples=80, seed=3)
    serial = [r.to_json() for r in run_search(c)]
    parallel = [r.to_json() for r in run_search(SearchConfig(samples=80, seed=3, jobs=2))]
    assert serial == parallel
