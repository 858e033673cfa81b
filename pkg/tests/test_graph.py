import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from instances import example_one, random_curve
from supergal import assemble_report, build_cluster_picture, reduce_all
from supergal.arith import euler_phi
from supergal.errors import ConsistencyError
from supergal.graph import _permutations, perm_orbits, to_dot


def lefschetz_trace(graph):
    """Trace on H1 from fixed points: tr H0 - tr H1 = #fixed vertices - #fixed edges (orientation kept)."""
    vfix = sum(1 for k, j in enumerate(graph.frobenius_vertex_perm) if k == j)
    efix = sum(1 for k, j in enumerate(graph.frobenius_edge_perm) if k == j)
    return 1 - vfix + efix


def eigen_multiplicities_numeric(matrix, order):
    """Multiplicity of each primitive k-th root of unity among numpy eigenvalues."""
    vals = np.linalg.eigvals(np.array(matrix, dtype=float))
    out = {}
    for k in range(1, order + 1):
        if order % k:
            continue
        prim = [np.exp(2j * np.pi * j / k) for j in range(k) if np.gcd(j, k) == 1]
        hits = sum(1 for v in vals for z in prim if abs(v - z) < 1e-6)
        if hits:
            assert hits % euler_phi(k) == 0
            out[k] = hits // euler_phi(k)
    return out


def test_example_one_graph(ex1, ex1_13):
    g = ex1.graph
    assert (len(g.vertices), len(g.edges)) == (9, 15)
    assert ex1.toric_rank == 7 == ex1.rank_formula
    assert ex1_13.h1_action.eigenvalue_multiplicities == {1: 7}
    assert ex1_13.graph.frobenius_vertex_perm == list(range(9))


def test_example_one_frobenius_p7(ex1):
    h1 = ex1.h1_action
    assert h1.order == 2
    assert h1.eigenvalue_multiplicities == {1: 2, 2: 5}
    assert np.trace(np.array(h1.frobenius_matrix)) == lefschetz_trace(ex1.graph) == -3
    assert eigen_multiplicities_numeric(h1.frobenius_matrix, h1.order) == h1.eigenvalue_multiplicities


def test_two_top_clusters_graph(ex24):
    g = ex24.graph
    assert len(g.vertices) == 2 and len(g.edges) == 2
    assert ex24.toric_rank == 1


def test_cycles_are_closed(ex1):
    g = ex1.graph
    for cycle in ex1.h1_action.cycle_basis:
        boundary = {}
        for k, c in cycle.items():
            e = g.edges[k]
            boundary[e.head] = boundary.get(e.head, 0) + c
            boundary[e.tail] = boundary.get(e.tail, 0) - c
        assert all(v == 0 for v in boundary.values())


def test_inconsistent_shift_is_reported():
    pic = build_cluster_picture(example_one(7))
    rep = assemble_report(example_one(7))
    vshift = {cid: 0 for cid in rep.families}
    eshift = {e.pair: 1 for e in rep.graph.edges}
    with pytest.raises(ConsistencyError, match="root-of-unity normalization"):
        _permutations(rep.graph, vshift, eshift)
    assert len(reduce_all(pic)) == 6


def test_dot_output(ex1):
    dot = to_dot(ex1.graph, ex1.families)
    assert '"s1:0" [label="s1:0 g=1"]' in dot
    assert dot.count(" -- ") == 15
    colored = to_dot(ex1.graph, ex1.families, color_orbits=True)
    assert "fillcolor" in colored
    assert sorted(len(o) for o in perm_orbits(ex1.graph.frobenius_vertex_perm)) == [1] * 7 + [2]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32))
def test_frobenius_on_h1_against_oracles(seed):
    rep = assemble_report(random_curve(random.Random(seed)))
    h1 = rep.h1_action
    if h1.betti == 0:
        return
    m = np.array(h1.frobenius_matrix)
    assert int(round(np.trace(m))) == lefschetz_trace(rep.graph)
    assert np.array_equal(np.linalg.matrix_power(m, h1.order), np.eye(h1.betti, dtype=int))
    assert eigen_multiplicities_numeric(h1.frobenius_matrix, h1.order) == h1.eigenvalue_multiplicities
