import json
import random
from itertools import product

import pytest

from helpers import walk_pairs_brute
from loopcond import (DiGraph, NotSymmetric, Report, SizeCap, clique, clique_F,
                      clique_Q, clique_R, cycle, evaluate, has_loop,
                      is_symmetric, report_to_json, verify_clique_claims,
                      verify_cycle_reduction, walk_gadget, walk_relation)


def test_walk_relation_length_one_is_the_graph() -> None:
    for g in (cycle(5), clique(4)):
        assert walk_relation(g, 1).edges == g.edges


def test_walk_relation_matches_brute_force_and_gadget() -> None:
    rng = random.Random(31)
    graphs = [cycle(6), clique(3), DiGraph(4, frozenset({(0, 1), (1, 2), (2, 0)}))]
    for _ in range(10):
        n = rng.randint(1, 5)
        edges = {(a, b) for a in range(n) for b in range(n) if rng.random() < 0.4}
        graphs.append(DiGraph(n, frozenset(edges)))
    for g in graphs:
        for k in (1, 2, 3, 4):
            got = walk_relation(g, k)
            assert got.edges == walk_pairs_brute(g, k)
            via_gadget = evaluate(walk_gadget(k), [g])
            assert got.edges == via_gadget.tuples


def test_walk_relation_composes_additively() -> None:
    rng = random.Random(77)
    graphs = [cycle(5), clique(3)]
    for _ in range(8):
        n = rng.randint(2, 5)
        edges = {(a, b) for a in range(n) for b in range(n) if rng.random() < 0.4}
        graphs.append(DiGraph(n, frozenset(edges)))
    for g in graphs:
        for a in (1, 2, 3, 4):
            for b in (1, 2, 3, 4):
                left = walk_relation(g, a).edges
                right = walk_relation(g, b).edges
                composed = {(x, z) for x, y in left for y2, z in right if y2 == y}
                assert walk_relation(g, a + b).edges == composed


def test_walk_relation_on_nine_cycle() -> None:
    h = walk_relation(cycle(9), 3)
    assert not has_loop(h)
    # v0, v3, v6 carry a symmetric triangle inside the 3-step walk relation
    for a, b in ((0, 3), (3, 6), (6, 0)):
        assert (a, b) in h.edges and (b, a) in h.edges


def test_clique_r_cases_on_triangle() -> None:
    r = clique_R(clique(3), 3)
    assert (0, 0, 0, 1) in r.tuples  # u=v, x=u, y!=x
    assert (0, 1, 2, 2) in r.tuples  # u!=v, x=y!=v
    empty = DiGraph(4, frozenset())
    assert clique_R(empty, 3).tuples == frozenset()


def test_clique_r_requires_symmetric_input() -> None:
    from loopcond import directed_cycle
    with pytest.raises(NotSymmetric):
        clique_R(directed_cycle(3), 3)
    with pytest.raises(ValueError):
        clique_R(clique(3), 2)


def test_clique_f_equals_clique_adjacency() -> None:
    for n in (3, 4):
        f = clique_F(clique(n), n)
        assert f.edges == clique(n).edges  # complete off-diagonal, no loops
        assert is_symmetric(f)


def test_clique_f_symmetric_on_assorted_symmetric_inputs() -> None:
    for g in (clique(4), cycle(6), clique(5)):
        assert is_symmetric(clique_F(g, 3))


def test_clique_constructions_monotone_in_g() -> None:
    base = cycle(5)
    grown = DiGraph(5, base.edges | {(0, 2), (2, 0)})
    for n in (3,):
        assert clique_R(base, n).tuples <= clique_R(grown, n).tuples
        assert clique_F(base, n).edges <= clique_F(grown, n).edges
        assert clique_Q(base, n).edges <= clique_Q(grown, n).edges


def test_clique_q_on_triangle_relates_all_distinct_pairs() -> None:
    q = clique_Q(clique(3), 3)
    assert q.n == 9
    for p, s in product(range(9), repeat=2):
        assert ((p, s) in q.edges) == (p != s)


def test_clique_q_on_empty_graph_is_empty() -> None:
    assert clique_Q(DiGraph(4, frozenset()), 3).edges == frozenset()


def test_verify_cycle_reduction_passes() -> None:
    for k in (3, 5):
        report = verify_cycle_reduction(k)
        assert isinstance(report, Report)
        assert report.all_pass
        names = [c.name for c in report.checks]
        assert names == ["square_cycle_maps_to_target_cycle",
                         "walk_power_contains_base_cycle",
                         "walk_power_loopless"]


def test_verify_cycle_reduction_preconditions() -> None:
    with pytest.raises(ValueError):
        verify_cycle_reduction(2)
    with pytest.raises(ValueError):
        verify_cycle_reduction(1)
    with pytest.raises(SizeCap):
        verify_cycle_reduction(7, size_cap=25)


def test_verify_clique_claims_passes() -> None:
    report = verify_clique_claims(3)
    assert report.all_pass
    assert len(report.checks) == 10


def test_verify_clique_claims_preconditions() -> None:
    with pytest.raises(ValueError):
        verify_clique_claims(2)
    with pytest.raises(SizeCap):
        verify_clique_claims(5)


def test_report_json_shape() -> None:
    report = verify_cycle_reduction(3)
    data = json.loads(report_to_json(report))
    assert set(data) == {"checks", "all_pass"}
    assert data["all_pass"] is True
    for check in data["checks"]:
        assert {"name", "pass"} <= set(check)
