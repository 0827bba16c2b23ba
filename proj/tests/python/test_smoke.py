import math

import pytest

import pfptopo as pt


def test_generate_counts_and_determinism():
    cfg = pt.ModelConfig.pfp(200, seed=3)
    g = pt.generate(cfg)
    assert g.node_count == 200
    assert g.link_count == 30 + 3 * (200 - 10)
    assert g.seed_links == 30
    assert g.is_connected()
    assert pt.edge_list_string(g) == pt.edge_list_string(pt.generate(cfg))


def test_presets_and_validation():
    ba = pt.ModelConfig.ba(500)
    assert ba.growth == pt.GrowthKind.NEW_NODE_ONLY
    assert ba.new_node_links == 3
    assert ba.scheme == pt.PreferenceScheme.linear()
    assert (ba.seed_nodes, ba.seed_links, ba.rng_seed) == (10, 30, 1)

    pfp = pt.ModelConfig.pfp(500, seed=7)
    assert pfp.growth == pt.GrowthKind.INTERACTIVE
    assert pfp.one_host_probability == 0.4
    assert pfp.scheme == pt.PreferenceScheme.positive_feedback(0.021)
    assert pfp.rng_seed == 7
    pfp.validate()

    bad = pt.ModelConfig.pfp(500)
    bad.target_nodes = 5
    with pytest.raises(ValueError):
        bad.validate()
    bad = pt.ModelConfig.ig(500)
    bad.one_host_probability = 1.5
    with pytest.raises(ValueError):
        bad.validate()


def test_complete_graph_report():
    g = pt.Graph(4)
    for u in range(4):
        for v in range(u + 1, 4):
            g.add_edge(u, v)
    rep = pt.report(g)
    assert (rep.nodes, rep.links, rep.seed_links) == (4, 6, 6)
    assert rep.paths.ell_star == 1.0
    assert rep.degrees.gamma is None
    assert rep.mixing.alpha is None
    assert rep.triangles.kt == [3, 3, 3, 3]
    assert rep.rich.theta == pytest.approx(0.0, abs=1e-12)
    assert rep.phi_001 == 1.0


def test_preference_values():
    lin = pt.PreferenceScheme.linear()
    assert pt.preference_weight(7, lin) == 7.0
    pf = pt.PreferenceScheme.positive_feedback(0.021)
    assert pt.preference_weight(100, pf) == pytest.approx(156.1, abs=0.1)
    assert pt.preference_ratio(1, 10, pf) == pytest.approx(11.2, abs=0.1)
    ex = pt.PreferenceScheme.exponential(1.15)
    assert pt.preference_weight(1000, ex) == pytest.approx(2818.4, abs=0.1)
    with pytest.raises(ValueError):
        pt.preference_weight(0, lin)


def test_expected_link_ratio():
    assert pt.expected_link_ratio(0.4) == pytest.approx(0.875)
    assert pt.expected_link_ratio(0.0) == pytest.approx(0.5)
    assert pt.expected_link_ratio(1.0) == pytest.approx(2.0)
    with pytest.raises(ValueError):
        pt.expected_link_ratio(1.5)


def test_edge_list_roundtrip(tmp_path):
    g = pt.generate(pt.ModelConfig.ig(60, seed=4))
    path = tmp_path / "ig.edges"
    pt.write_edge_list(g, path)
    h = pt.read_edge_list(path)
    assert h.node_count == g.node_count
    assert h.edges() == g.edges()
    assert h.seed_links == h.link_count  # kinds are not serialized


def test_fit_power_law():
    pts = [(float(k), 2.5 * k**-1.7) for k in range(1, 40)]
    assert pt.fit_power_law(pts, 1.0, 100.0) == pytest.approx(-1.7, abs=1e-9)
    assert pt.fit_power_law([(1.0, 1.0)], 1.0, 100.0) is None


def test_trajectory():
    samples = pt.track_trajectory(pt.ModelConfig.pfp(50, seed=2), 10)
    assert samples[0] == (10, 6.0)
    assert samples[-1][0] == 50
    assert all(b[1] >= a[1] for a, b in zip(samples, samples[1:]))
