import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubequot import (
    UNDEFINED,
    VACUOUS,
    SimpleGraph,
    bipartite_double,
    bipartite_parts,
    build_quotient,
    distance2_graph,
    halved_graphs,
    is_locally,
    is_rectagraph,
    local_params,
    triangular_graph,
)
from cubequot.errors import BadDimension, NotBipartite, NotConnected

from conftest import cube_graph


def complete_graph(n):
    return SimpleGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n):
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


# ---------------------------------------------------------------------------
# SimpleGraph basics and serialization
# ---------------------------------------------------------------------------


def test_graph_construction_rejects_loops_and_asymmetry():
    with pytest.raises(ValueError):
        SimpleGraph.from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        SimpleGraph(2, [0b10, 0b00])


def test_edge_list_is_lexicographic():
    g = SimpleGraph.from_edges(4, [(3, 1), (2, 0), (1, 0)])
    assert g.edges() == [(0, 1), (0, 2), (1, 3)]


def test_json_round_trip_and_determinism():
    g = cube_graph(3)
    text1 = g.to_json()
    text2 = SimpleGraph.from_json_dict(json.loads(text1)).to_json()
    assert text1 == text2
    data = json.loads(text1)
    assert data["n_vertices"] == 8 and len(data["edges"]) == 12


def test_dot_output_contains_edges():
    g = SimpleGraph.from_edges(2, [(0, 1)], labels=["a", "b"])
    dot = g.to_dot()
    assert "0 -- 1;" in dot and 'label="a"' in dot
    assert dot == g.to_dot()


def test_induced_subgraph_keeps_labels():
    g = SimpleGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)], labels=list("abcd"))
    h = g.induced([1, 2, 3])
    assert h.labels == ("b", "c", "d")
    assert h.edges() == [(0, 1), (1, 2)]


# ---------------------------------------------------------------------------
# Triangular graphs
# ---------------------------------------------------------------------------


def test_triangular_graph_small():
    t2 = triangular_graph(2)
    assert t2.n == 1 and t2.edge_count == 0
    t3 = triangular_graph(3)
    assert t3.n == 3 and t3.edge_count == 3  # a triangle
    t4 = triangular_graph(4)
    # complete tripartite with parts of size 2: 6 vertices, 4-regular
    assert t4.n == 6 and t4.degrees() == [4] * 6
    from cubequot import are_isomorphic

    k3_2 = SimpleGraph.from_edges(
        6, [(i, j) for i in range(6) for j in range(i + 1, 6) if i % 3 != j % 3]
    )
    assert are_isomorphic(t4, k3_2) is not None


def test_triangular_graph_valency():
    for n in (5, 6, 8):
        t = triangular_graph(n)
        assert t.n == n * (n - 1) // 2
        assert t.degrees() == [2 * (n - 2)] * t.n


def test_triangular_graph_rejects_small_n():
    with pytest.raises(BadDimension):
        triangular_graph(1)


# ---------------------------------------------------------------------------
# Distance parameters
# ---------------------------------------------------------------------------


def test_local_params_of_cube():
    for n in (3, 4, 5):
        params = local_params(cube_graph(n), n)
        assert params[0].is_regular and params[0].valency == n
        for i in range(1, n + 1):
            assert params[i].c_value == i
            assert params[i - 1].a_value == 0


def test_local_params_complete_graph():
    # K_4: neighbors of a neighbor: c_1 = 1 (the base vertex), a_1 = 2
    params = local_params(complete_graph(4), 2)
    assert params[1].c_value == 1
    assert params[1].a_value == 2
    assert params[2].c_value is VACUOUS  # diameter 1


def test_local_params_undefined_when_varying():
    # path P_4: c_2(ends) differs from c_2 of middle pairs? a_1 is 0,
    # c_1 = 1 everywhere, but vertex degrees vary so not regular
    g = SimpleGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    params = local_params(g, 2)
    assert not params[0].is_regular
    assert params[0].valency is UNDEFINED


def test_local_params_vacuous_levels():
    g = SimpleGraph.from_edges(2, [(0, 1)])
    params = local_params(g, 3)
    assert params[2].c_value is VACUOUS and params[3].a_value is VACUOUS


# ---------------------------------------------------------------------------
# Rectagraph recognition
# ---------------------------------------------------------------------------


def test_cube_is_rectagraph():
    assert is_rectagraph(cube_graph(3))
    assert is_rectagraph(cube_graph(5))


def test_triangle_is_not_rectagraph():
    assert not is_rectagraph(triangular_graph(3))


def test_disconnected_is_not_rectagraph():
    g = SimpleGraph.from_edges(4, [(0, 1), (2, 3)])
    assert not is_rectagraph(g)


def test_quaternion_quotient_is_not_rectagraph(quaternion_group):
    # at minimum distance 4, orbits collide at distance 2 and merge
    # quadrangles: c_2 takes the values {2, 4, 6, 8}, so the quotient is
    # triangle-free but not a rectagraph
    Q = build_quotient(quaternion_group)
    params = local_params(Q.graph, 2)
    assert params[1].a_value == 0
    assert params[2].c_value is UNDEFINED
    assert not is_rectagraph(Q.graph)


# ---------------------------------------------------------------------------
# Distance-2 graph, bipartite parts, halves, double
# ---------------------------------------------------------------------------


def test_distance2_of_path():
    g = SimpleGraph.from_edges(3, [(0, 1), (1, 2)])
    d2 = distance2_graph(g)
    assert d2.edges() == [(0, 2)]


def test_distance2_of_connected_bipartite_has_two_components():
    for n in (3, 4, 5):
        comps = distance2_graph(cube_graph(n)).connected_components()
        assert len(comps) == 2


def test_distance2_of_nonbipartite_is_connected():
    g = cycle_graph(5)
    assert distance2_graph(g).is_connected()


def test_bipartite_parts_of_cube():
    g = cube_graph(4)
    part0, part1 = bipartite_parts(g)
    assert 0 in part0
    assert all(bin(v).count("1") % 2 == 0 for v in part0)
    assert all(bin(v).count("1") % 2 == 1 for v in part1)


def test_bipartite_parts_odd_cycle_witness():
    with pytest.raises(NotBipartite) as err:
        bipartite_parts(cycle_graph(5))
    walk = err.value.odd_walk
    assert walk is not None and walk[0] == walk[-1] == 0
    assert (len(walk) - 1) % 2 == 1  # odd closed walk


def test_bipartite_parts_needs_connected():
    g = SimpleGraph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(NotConnected):
        bipartite_parts(g)


def test_halved_cube_q3_is_two_k4():
    from cubequot import are_isomorphic

    h0, h1 = halved_graphs(cube_graph(3))
    for h in (h0, h1):
        assert h.n == 4
        assert are_isomorphic(h, complete_graph(4)) is not None


def test_halved_cube_q4_is_cocktail_party():
    h0, h1 = halved_graphs(cube_graph(4))
    assert h0.n == 8 and h0.degrees() == [6] * 8
    assert h1.n == 8


def test_halved_graphs_first_contains_vertex_zero():
    g = cube_graph(4)
    h0, _ = halved_graphs(g)
    part0, _ = bipartite_parts(g)
    assert h0.n == len(part0)


def test_bipartite_double_of_single_edge_is_two_edges():
    g = SimpleGraph.from_edges(2, [(0, 1)])
    d = bipartite_double(g)
    assert d.n == 4 and d.edge_count == 2
    assert len(d.connected_components()) == 2


def test_bipartite_double_of_nonbipartite_is_connected_bipartite():
    g = cycle_graph(5)
    d = bipartite_double(g)
    assert d.is_connected()
    bipartite_parts(d)  # must not raise


def test_bipartite_double_always_bipartite():
    for g in (complete_graph(5), cycle_graph(6), cube_graph(3)):
        d = bipartite_double(g)
        comps = d.connected_components()
        for comp in comps:
            bipartite_parts(d.induced(comp))


# ---------------------------------------------------------------------------
# Local structure
# ---------------------------------------------------------------------------


def test_k4_is_locally_k3():
    assert is_locally(complete_graph(4), complete_graph(3))


def test_cube_is_not_locally_k3():
    assert not is_locally(cube_graph(3), complete_graph(3))


def test_halved_q4_is_locally_t4():
    h0, _ = halved_graphs(cube_graph(4))
    assert is_locally(h0, triangular_graph(4))


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**9))
def test_is_locally_invariant_under_relabeling(seed):
    rng = random.Random(seed)
    h0, _ = halved_graphs(cube_graph(4))
    perm = list(range(h0.n))
    rng.shuffle(perm)
    assert is_locally(h0.relabeled(perm), triangular_graph(4))
