import hashlib
from pathlib import Path

import numpy as np
import pytest

from friendstats import generators
from friendstats.errors import ParameterError, UndefinedStatisticError
from friendstats.generators import (
    GeneratorConfig,
    LabeledGraph,
    Role,
    degree_cap,
    generate,
    skew_report,
)
from friendstats.graph import Graph, degrees, to_edge_list, validate
from friendstats.degree_stats import Skew

GOLDEN = Path(__file__).parent / "golden"


def scalar_reference(cfg):
    """Re-derive the edge set draw by draw from the documented stream layout."""
    def rng(purpose):
        return np.random.Generator(np.random.PCG64(np.random.SeedSequence(cfg.seed, spawn_key=(purpose,))))

    n_ind = cfg.n_individuals
    activity = [1.0] * n_ind
    n_dormant = round(cfg.dormant_fraction * n_ind)
    if n_dormant:
        for i in rng(0).permutation(n_ind)[:n_dormant]:
            activity[int(i)] = cfg.dormant_activity
    edges = set()
    r = rng(1)
    for i in range(n_ind):
        for j in range(i + 1, n_ind):
            if r.random() < cfg.edge_prob * activity[i] * activity[j]:
                edges.add((i, j))
    r = rng(2)
    for t in range(cfg.n_institutions):
        for j in range(n_ind):
            if r.random() < cfg.institution_attach_prob:
                edges.add((j, n_ind + t))
    return edges


class TestConfig:
    @pytest.mark.parametrize(
        "kwargs",
        [
            {"edge_prob": 1.5},
            {"edge_prob": -0.1},
            {"institution_attach_prob": 2},
            {"dormant_fraction": 1.0},
            {"dormant_activity": 0},
            {"n_individuals": -1},
            {"seed": -1},
            {"seed": 2**64},
        ],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(ParameterError):
            GeneratorConfig(**kwargs)

    def test_from_text(self):
        cfg = GeneratorConfig.from_text("# demo\nn_individuals = 50\nedge_prob=0.2  # baseline\nseed = 9\n")
        assert cfg == GeneratorConfig(n_individuals=50, edge_prob=0.2, seed=9)

    def test_unknown_key(self):
        with pytest.raises(ParameterError, match="unknown"):
            GeneratorConfig.from_text("colour = red\n")

    def test_digest_stable_and_sensitive(self):
        a = GeneratorConfig(seed=1)
        assert a.digest() == GeneratorConfig(seed=1).digest()
        assert a.digest() != GeneratorConfig(seed=2).digest()


class TestGenerate:
    def test_complete(self):
        lg = generate(GeneratorConfig(n_individuals=5, edge_prob=1))
        assert lg.graph == Graph.complete(5)

    def test_empty(self):
        lg = generate(GeneratorConfig(n_individuals=20, edge_prob=0, n_institutions=3, institution_attach_prob=0))
        assert lg.graph.edge_count == 0
        assert lg.graph.n == 23

    def test_institution_hubs(self):
        cfg = GeneratorConfig(100, 0.05, 2, 0.9, seed=42)
        deg = degrees(generate(cfg).graph)
        assert deg[-2:] == (93, 90)
        assert np.mean(deg[:100]) == pytest.approx(6.43)
        assert min(deg[-2:]) > 10 * np.mean(deg[:100])

    def test_layout_and_labels(self):
        cfg = GeneratorConfig(50, 0.1, 3, 0.5, dormant_fraction=0.4, seed=3)
        lg = generate(cfg)
        assert lg.labels[50:] == (Role.INSTITUTION,) * 3
        assert lg.labels[:50].count(Role.DORMANT) == 20
        inst = set(range(50, 53))
        assert not any(u in inst and v in inst for u, v in lg.graph.edges)

    @pytest.mark.parametrize(
        "cfg",
        [
            GeneratorConfig(40, 0.2, 2, 0.6, seed=11),
            GeneratorConfig(30, 0.5, 0, 0.0, dormant_fraction=0.5, dormant_activity=0.3, seed=5),
            GeneratorConfig(25, 1.0, 1, 1.0, dormant_fraction=0.2, seed=2**63 + 1),
        ],
    )
    def test_matches_scalar_reference(self, cfg, monkeypatch):
        expected = scalar_reference(cfg)
        assert generate(cfg).graph.edges == expected
        monkeypatch.setattr(generators, "_ROW_BLOCK", 7)
        assert generate(cfg).graph.edges == expected

    def test_deterministic(self):
        cfg = GeneratorConfig(80, 0.1, 2, 0.7, dormant_fraction=0.3, seed=123)
        a, b = generate(cfg), generate(cfg)
        assert a == b
        assert to_edge_list(a.graph) == to_edge_list(b.graph)

    def test_institutions_share_individual_subgraph(self):
        base = generate(GeneratorConfig(60, 0.1, 0, 0.8, seed=4)).graph
        hubs = generate(GeneratorConfig(60, 0.1, 3, 0.8, seed=4)).graph
        assert {e for e in hubs.edges if e[1] < 60} == base.edges

    def test_golden_files(self, tmp_path):
        lg = generate(GeneratorConfig(100, 0.05, 2, 0.9, seed=42))
        lg.write(tmp_path / "g.txt")
        assert (tmp_path / "g.txt").read_bytes() == (GOLDEN / "g.txt").read_bytes()
        assert (tmp_path / "g.txt.labels").read_bytes() == (GOLDEN / "g.txt.labels").read_bytes()

    def test_golden_hash_capped_dormant(self, tmp_path):
        cfg = GeneratorConfig(60, 0.1, 1, 0.5, dormant_fraction=0.5, dormant_activity=0.2, seed=7)
        degree_cap(generate(cfg), 20).write(tmp_path / "h.txt")
        digest = hashlib.sha256((tmp_path / "h.txt").read_bytes()).hexdigest()
        assert digest == "8d80c9242cc854dacbad50388a57fe85fd7b3b9207b321b7406575cffa57302b"

    @pytest.mark.parametrize("seed", range(20))
    def test_integration_valid_and_identity(self, seed):
        cfg = GeneratorConfig(40 + seed, 0.1, seed % 4, 0.5, dormant_fraction=0.3, seed=seed)
        lg = generate(cfg)
        assert validate(lg.graph) == []
        if lg.graph.edges:
            assert skew_report(lg).paradox.identity_holds


class TestDegreeCap:
    def test_noop(self):
        lg = LabeledGraph.from_graph(Graph.complete(4))
        assert degree_cap(lg, 3) is lg

    def test_star(self):
        lg = degree_cap(LabeledGraph.from_graph(Graph.star(10)), 5)
        assert degrees(lg.graph)[0] == 5
        assert validate(lg.graph) == []

    def test_cap_respected(self):
        cfg = GeneratorConfig(400, 0.05, 4, 0.9, seed=1)
        lg = degree_cap(generate(cfg), 30)
        assert max(degrees(lg.graph)) <= 30
        assert validate(lg.graph) == []

    def test_platform_cap(self):
        cfg = GeneratorConfig(6000, 0.0005, 2, 0.95, seed=3)
        lg = generate(cfg)
        assert max(degrees(lg.graph)) > 5000
        assert max(degrees(degree_cap(lg, 5000).graph)) <= 5000

    def test_seeded(self):
        lg = LabeledGraph.from_graph(Graph.star(20))
        assert degree_cap(lg, 5, seed=1) == degree_cap(lg, 5, seed=1)
        assert degree_cap(lg, 5, seed=1) != degree_cap(lg, 5, seed=2)

    def test_bad_cap(self):
        with pytest.raises(ParameterError):
            degree_cap(LabeledGraph.from_graph(Graph.star(3)), 0)


class TestSkewReport:
    def test_regular(self):
        r = skew_report(LabeledGraph.from_graph(Graph.complete(6)))
        assert r.full_gap == 0
        assert r.full.skew_direction is Skew.SYMMETRIC
        assert r.paradox.gap == 0

    def test_edgeless(self):
        with pytest.raises(UndefinedStatisticError):
            skew_report(LabeledGraph.from_graph(Graph(3)))

    def test_institutions_raise_gap(self):
        diffs = []
        for seed in range(30):
            base = skew_report(generate(GeneratorConfig(300, 0.03, 0, 0.8, seed=seed))).full_gap
            hubs = skew_report(generate(GeneratorConfig(300, 0.03, 3, 0.8, seed=seed))).full_gap
            diffs.append(hubs - base)
        assert np.mean(diffs) > 0

    def test_dormancy_more_often_right_skewed(self):
        def right(q):
            hits = 0
            for seed in range(30):
                cfg = GeneratorConfig(300, 0.03, dormant_fraction=q, dormant_activity=0.2, seed=seed)
                hits += skew_report(generate(cfg)).full.skew_direction is Skew.RIGHT
            return hits

        assert right(0.6) > right(0.0)

    def test_dormancy_lowers_individual_mean(self):
        def mean_f(q):
            return np.mean(
                [
                    skew_report(generate(GeneratorConfig(300, 0.03, dormant_fraction=q, seed=s))).individuals.mean
                    for s in range(30)
                ]
            )

        assert mean_f(0.0) > mean_f(0.3) > mean_f(0.6)
