import numpy as np
import pytest

from lambda3.families import gen_b3
from lambda3.graph import GraphError, complement, complete, cycle, path
from lambda3.linegraphs import line_graph, root_graphs
from lambda3.theorems import (CHECKERS, CheckReport, check_courant_weyl, check_cvetkovic_lambda2,
                              check_interlacing, check_min_eigenvalue, check_odd_cycle_facts,
                              check_prop8_chain, check_sign_agreement, random_roots, run_all,
                              suite_courant_weyl, suite_interlacing, suite_roots,
                              verify_observation3)


def test_report_status():
    r = CheckReport("x")
    assert r.status == "not-applicable" and r.ok
    r.applicable = 1
    assert r.status == "pass"
    r.fail("i", "rel", [1])
    assert r.status == "fail" and not r.ok
    assert r.as_dict()["failures"] == [{"instance": "i", "relation": "rel", "values": [1]}]


def test_courant_weyl_examples():
    z = np.zeros((4, 4), dtype=int)
    for i in range(1, 5):
        assert check_courant_weyl(z, z, i, i).status == "pass"
    lg = line_graph(complete(4))
    g = complement(lg)
    assert check_courant_weyl(lg, g, 2, lg.n - 1).status == "pass"
    with pytest.raises(ValueError):
        check_courant_weyl(z, z, 0, 1)
    with pytest.raises(ValueError):
        check_courant_weyl(z, np.zeros((3, 3)), 1, 1)
    with pytest.raises(ValueError):
        check_courant_weyl(np.array([[0, 1], [0, 0]]), np.zeros((2, 2)), 1, 1)


def test_courant_weyl_detects_violation():
    # a negative tolerance demands strict slack, which equality cannot meet
    z = np.zeros((3, 3), dtype=int)
    assert check_courant_weyl(z, z, 2, 2, tol=-1e-3).status == "fail"


def test_interlacing_examples():
    for v in range(5):
        assert check_interlacing(cycle(5), v).status == "pass"
    assert check_interlacing(complete(6), 0).status == "pass"
    with pytest.raises(GraphError):
        check_interlacing(cycle(5), 5)
    with pytest.raises(GraphError):
        check_interlacing(path(1), 0)


def test_bipartite_complement_chain_examples():
    root = root_graphs(gen_b3(2))[0]
    assert check_prop8_chain(root).status == "pass"
    assert check_prop8_chain(cycle(5)).status == "not-applicable"
    rep = check_prop8_chain(complete(4))  # octahedron, lambda_3 = 0 on the boundary
    assert rep.status == "pass" and rep.applicable == 1


def test_lambda2_and_min_eigenvalue():
    for h in (path(5), complete(5), cycle(7)):
        assert check_cvetkovic_lambda2(h).status == "pass"
        assert check_min_eigenvalue(h).status == "pass"


def test_observation3_and_odd_cycles():
    assert verify_observation3(8, 13).status == "pass"
    rep = check_odd_cycle_facts(13)
    assert rep.status == "pass" and rep.instances == 1 + 4 * 4 + 2


def test_sign_agreement_small():
    assert check_sign_agreement(line_graph(complete(4))).status == "pass"


def test_root_sampler_reaches_the_hypothesis_often():
    roots = random_roots(500, seed=0)
    assert all(h.num_edges() <= 12 for h in roots)
    chain = suite_roots(500, seed=0)[0]
    assert chain.status == "pass" and chain.applicable >= 50


def test_seeded_suites_are_deterministic():
    assert suite_interlacing(50, seed=9).as_dict() == suite_interlacing(50, seed=9).as_dict()
    assert suite_courant_weyl(20, seed=9).as_dict() == suite_courant_weyl(20, seed=9).as_dict()
    assert random_roots(30, seed=4) == random_roots(30, seed=4)
    assert random_roots(30, seed=4) != random_roots(30, seed=5)


def test_run_all_selection():
    reps = run_all(only=["observation3", "odd_cycles"])
    assert [r.name for r in reps] == ["observation3", "odd_cycles"]
    with pytest.raises(ValueError):
        run_all(only=["nonsense"])
    assert set(CHECKERS) >= {"bipartite_complement", "lambda2", "whitney"}
