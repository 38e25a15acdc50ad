import pytest

import throttlekit as tk


def test_path_throttle():
    g = tk.Graph.family("path:8")
    assert g.order == 8
    assert g.edge_count == 7
    r = tk.solve(g)
    assert r["value"] == 4
    assert tk.solve(g, "psd")["value"] == 4
    assert tk.path_throttle_formula(8) == 4


def test_capture_and_radius():
    p5 = tk.Graph.family("path:5")
    assert tk.capture_time(p5, 1) == 2
    assert tk.capture_time(tk.Graph.family("cycle:4"), 1) is None
    assert tk.k_radius(p5, 1) == 2
    assert tk.psd_prop_time(p5, [2]) == 2


def test_graph6_round_trip():
    g = tk.Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.graph6() == "Cl"
    assert tk.Graph.from_graph6("Cl") == g
    assert tk.Graph.from_edge_list(g.edge_list()) == g
    with pytest.raises(ValueError):
        tk.Graph.from_graph6("C")


def test_certify_tree():
    g = tk.Graph.family("random_tree:400:seed=1")
    report = tk.certify(g)
    assert report["verdict"] == "PASS"
    assert report["achieved"] <= report["upper"]
    plan = tk.plan(g)
    covered = {v for region in plan["regions"] for v in region}
    assert covered == set(range(400))


def test_flatten_c4():
    f = tk.flatten(tk.Graph.family("cycle:4"))
    assert f["fibers"] == [[2], [1, 3], [0]]
    assert f["tree_order"] == 3


def test_bounds():
    assert tk.lower_bound(1_000_000) == 1449
    assert tk.lower_family_a(1.08766) == pytest.approx(0.19428796492626192, rel=1e-12)
    assert tk.upper_bound(100, "cactus")["upper"] == pytest.approx(176)
    assert tk.gambler_bound(4, "one_observed") == pytest.approx(42 ** 0.5)


def test_budget():
    with pytest.raises(tk.BudgetExceeded):
        tk.solve(tk.Graph.family("path:20"), state_budget=10)


def test_simulation_is_reproducible():
    g = tk.Graph.family("random_tree:30:seed=4")
    p = [1 / 30] * 30
    a = tk.simulate_camping(g, p, [0, 7], 2000, 11, jobs=1)
    b = tk.simulate_camping(g, p, [0, 7], 2000, 11, jobs=4)
    assert a == b
    assert a["mean_rounds"] == pytest.approx(15, rel=0.15)


def test_sweep_csv():
    text = tk.sweep("paths", [1, 8, 20])
    lines = text.splitlines()
    assert lines[0].startswith("# throttlekit-sweep v1 kind=paths")
    assert lines[1] == "n,robber,psd,radius,formula"
    assert lines[3].split(",")[1] == "4"
    assert text == tk.sweep("paths", [1, 8, 20])
