import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubequot import (
    INFINITY,
    BitVector,
    CubeAutomorphism,
    CubeGroup,
    build_quotient,
    generate_group,
    min_distance,
    natural_map,
    sphere,
)
from cubequot.errors import DimensionMismatch, DimensionTooLarge
from cubequot.verify import random_subgroup, sample_subgroups

from conftest import cube_graph


def weight_vectors(n, w):
    out = []
    for comb in itertools.combinations(range(n), w):
        bits = 0
        for i in comb:
            bits |= 1 << i
        out.append(bits)
    return out


def test_trivial_quotient_is_cube():
    for n in (2, 3, 5):
        Q = build_quotient(CubeGroup.trivial(n))
        assert Q.vertex_count == 1 << n
        assert Q.graph.adj == cube_graph(n).adj
        assert list(Q.reps) == list(range(1 << n))


def test_folded_8_cube(folded8):
    Q = build_quotient(folded8)
    assert Q.vertex_count == 128
    assert Q.graph.edge_count == 512
    assert Q.graph.degrees() == [8] * 128


def test_quaternion_quotient_order(quaternion_group):
    Q = build_quotient(quaternion_group)
    assert Q.vertex_count == (1 << 8) // 8


def test_quotient_orbit_sizes_semiregular(quaternion_group):
    Q = build_quotient(quaternion_group)
    sizes = {}
    for v in range(1 << 8):
        sizes[Q.orbit_index[v]] = sizes.get(Q.orbit_index[v], 0) + 1
    assert set(sizes.values()) == {8}


def test_reps_sorted_and_minimal(quaternion_group):
    Q = build_quotient(quaternion_group)
    assert list(Q.reps) == sorted(Q.reps)
    for oid, rep in enumerate(Q.reps):
        members = [v for v in range(1 << 8) if Q.orbit_index[v] == oid]
        assert rep == min(members)


def test_quotient_labels_are_rep_bitstrings(quaternion_group):
    Q = build_quotient(quaternion_group)
    assert Q.graph.labels[Q.orbit_index[0]] == "0" * 8
    assert Q.graph.labels[0] == BitVector(8, Q.reps[0]).to_string()


def test_natural_map_constant_on_orbits(quaternion_group):
    Q = build_quotient(quaternion_group)
    rng = random.Random(0)
    for _ in range(50):
        v = rng.randrange(1 << 8)
        for k in quaternion_group:
            assert Q.orbit_index[k.act_bits(v)] == Q.orbit_index[v]
    assert natural_map(Q, BitVector.zero(8)) == Q.orbit_index[0]
    with pytest.raises(DimensionMismatch):
        natural_map(Q, BitVector.zero(5))


def test_dimension_cap():
    with pytest.raises(DimensionTooLarge):
        build_quotient(CubeGroup.trivial(21))


def test_degenerate_group_allowed():
    # semiregularity is not required; a vertex-fixing group yields orbits
    # of unequal size and a buildable quotient
    from cubequot import Permutation

    K = generate_group(
        [CubeAutomorphism(BitVector.zero(4), Permutation.from_cycles(4, [(1, 2)]))]
    )
    assert min_distance(K) == 0
    Q = build_quotient(K)
    sizes = {}
    for v in range(16):
        sizes[Q.orbit_index[v]] = sizes.get(Q.orbit_index[v], 0) + 1
    assert set(sizes.values()) == {1, 2}
    assert Q.vertex_count == 12  # 8 fixed vertices + 4 swapped pairs


def test_sphere_level_zero(quaternion_group):
    Q = build_quotient(quaternion_group)
    base = Q.orbit_index[0]
    assert sphere(Q, base, 0) == (base,)


def test_sphere_beyond_diameter_is_empty(quaternion_group):
    Q = build_quotient(quaternion_group)
    assert sphere(Q, Q.orbit_index[0], 99) == ()
    with pytest.raises(ValueError):
        sphere(Q, 0, -1)


def test_quaternion_sphere_sizes(quaternion_group):
    Q = build_quotient(quaternion_group)
    assert len(sphere(Q, Q.orbit_index[0], 2)) == 13
    assert len(sphere(Q, Q.orbit_index[1], 2)) == 14


# ---------------------------------------------------------------------------
# Distance-parameter invariants on sampled groups
# ---------------------------------------------------------------------------


def _sampled_groups(seed, per_n=5, ns=(4, 5, 6, 7)):
    groups = []
    for n in ns:
        groups.extend(sample_subgroups(n, per_n, random.Random(f"{seed}:{n}")))
    return groups


def test_sphere_containment_in_weight_classes():
    # vertices at distance l from x^K are reachable by weight-l steps
    rng = random.Random(1)
    for K in _sampled_groups(1):
        Q = build_quotient(K)
        for _ in range(3):
            x = rng.randrange(1 << K.n)
            for level in (1, 2, 3):
                ball = set(sphere(Q, Q.orbit_index[x], level))
                reach = {Q.orbit_index[x ^ e] for e in weight_vectors(K.n, level)}
                assert ball <= reach


def test_sphere_equality_when_distance_large():
    rng = random.Random(2)
    for K in _sampled_groups(2):
        d = min_distance(K)
        Q = build_quotient(K)
        max_level = 3 if d is INFINITY else min(3, int(d) // 2)
        for level in range(1, max_level + 1):
            x = rng.randrange(1 << K.n)
            ball = set(sphere(Q, Q.orbit_index[x], level))
            reach = {Q.orbit_index[x ^ e] for e in weight_vectors(K.n, level)}
            assert ball == reach


def test_orbit_collisions_respect_min_distance():
    for K in _sampled_groups(3):
        d = min_distance(K)
        if d is INFINITY:
            continue
        Q = build_quotient(K)
        orbits = {}
        for v in range(1 << K.n):
            orbits.setdefault(Q.orbit_index[v], []).append(v)
        for members in orbits.values():
            for a, b in itertools.combinations(members, 2):
                assert bin(a ^ b).count("1") >= d


def test_quotient_contains_cycle_of_length_d():
    # witness construction: project a geodesic from x to its image
    from cubequot import element_min_distance

    for K in _sampled_groups(4):
        d = min_distance(K)
        if not 3 <= d < INFINITY:
            continue
        Q = build_quotient(K)
        x = k = None
        for g in K.non_identity():
            if element_min_distance(g) == d:
                for v in range(1 << K.n):
                    if bin(v ^ g.act_bits(v)).count("1") == d:
                        x, k = v, g
                        break
                break
        walk = [x]
        cur = x
        diff = x ^ k.act_bits(x)
        for i in range(K.n):
            if (diff >> i) & 1:
                cur ^= 1 << i
                walk.append(cur)
        ids = [Q.orbit_index[v] for v in walk]
        assert ids[0] == ids[-1]
        assert len(set(ids[:-1])) == d
        assert all(Q.graph.has_edge(ids[i], ids[i + 1]) for i in range(len(ids) - 1))


def test_sphere_sizes_binomial_when_distance_large(folded8):
    # regular valency n with the cube-like parameters up to level l forces
    # sphere sizes C(n, l); the folded 8-cube has them up to level 3
    Q = build_quotient(folded8)
    import math

    for u in range(Q.vertex_count):
        masks = Q.graph.bfs_level_masks(u)
        for level in (1, 2, 3):
            assert masks[level].bit_count() == math.comb(8, level)


def test_halves_partition_and_connected(folded8):
    from cubequot import halved_graphs

    Q = build_quotient(folded8)
    h0, h1 = halved_graphs(Q.graph)
    assert h0.n + h1.n == Q.vertex_count
    assert h0.is_connected() and h1.is_connected()


def test_valency_m_example():
    # even-weight translations on the trailing coordinates: the quotient is
    # a smaller cube of valency m although the minimum distance is only 2
    from cubequot import verify_isomorphism
    from cubequot.graph_core import local_params, VACUOUS

    for m, n in ((2, 4), (3, 5), (3, 6)):
        gens = [
            CubeAutomorphism.translation_by(BitVector.from_support(n, (i, i + 1)))
            for i in range(m, n)
        ]
        K = generate_group(gens)
        assert K.order == 1 << (n - m)
        assert min_distance(K) == 2
        Q = build_quotient(K)
        assert Q.vertex_count == 1 << m
        mapping = [Q.orbit_index[x] for x in range(1 << m)]
        assert verify_isomorphism(cube_graph(m), Q.graph, mapping)
        params = local_params(Q.graph, m)
        assert params[0].valency == m
        for i in range(1, m + 1):
            assert params[i].c_value in (i, VACUOUS)
            assert params[i - 1].a_value in (0, VACUOUS)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**9))
def test_class_dist_equivalence_random(seed):
    from cubequot.verify import has_cube_local_structure

    rng = random.Random(seed)
    n = rng.choice((5, 6, 7, 8))
    K = random_subgroup(n, rng.choice((2, 4, 8)), rng)
    Q = build_quotient(K)
    d = min_distance(K)
    for level in (1, 2, 3):
        assert has_cube_local_structure(Q, level) == (d >= 2 * level + 1)
