"""Executable verification of the structural claims this package rests on.

Every registered claim binds one statement about cube quotients (a lemma,
theorem, corollary, or worked example) to a seeded, deterministic check
with recorded witnesses. Universally quantified statements are checked on
a sampling grid; reports record the grid and never claim proof. A check
that fails must carry a concrete counterexample witness.
"""

from __future__ import annotations

import itertools
import json
import math
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional, Sequence

import numpy as np

from .covering import deck_group, lift_covering, verify_covering
from .cube_symmetry import (
    INFINITY,
    BitVector,
    CubeAutomorphism,
    CubeGroup,
    Permutation,
    conjugate_group,
    element_min_distance,
    generate_group,
    intersect_even,
    is_even,
    is_semiregular,
    min_distance,
    normalizer,
)
from .errors import (
    NotBipartite,
    PreconditionViolated,
    UnknownClaim,
    UnknownExample,
    Unsupported,
)
from .graph_core import (
    UNDEFINED,
    VACUOUS,
    SimpleGraph,
    bipartite_double,
    bipartite_parts,
    distance2_graph,
    halved_graphs,
    is_locally,
    is_rectagraph,
    local_params,
    triangular_graph,
)
from .iso_aut import (
    are_isomorphic,
    automorphism_group,
    verify_isomorphism,
)
from .quotient import QuotientGraph, build_quotient, natural_covering, sphere

HOLDS = "HOLDS"
FAILS = "FAILS"
SKIPPED = "SKIPPED"


@dataclass
class ClaimReport:
    """Outcome of one claim check with structured evidence."""

    claim_id: str
    status: str
    parameters: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    runtime_ms: float = 0.0

    def to_json_dict(self, stable: bool = True) -> dict:
        out = {
            "claim_id": self.claim_id,
            "status": self.status,
            "parameters": _jsonify(self.parameters),
            "witnesses": _jsonify(self.witnesses),
        }
        if not stable:
            out["runtime_ms"] = self.runtime_ms
        return out


def _jsonify(value):
    if isinstance(value, dict):
        return {str(k): _jsonify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonify(v) for v in value]
    if value is INFINITY:
        return "inf"
    if value is UNDEFINED:
        return "UNDEFINED"
    if value is VACUOUS:
        return "VACUOUS"
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, BitVector):
        return value.to_string()
    if isinstance(value, (CubeAutomorphism, Permutation)):
        return repr(value)
    if isinstance(value, CubeGroup):
        return describe_group(value)
    return value


def describe_group(K: CubeGroup) -> str:
    gens = "; ".join(
        f"x={g.translation.to_string()} perm={g.perm.cycle_string()}"
        for g in K.generators
    )
    return f"n={K.n} order={K.order} gens=[{gens}]"


def reports_to_json(reports: Sequence[ClaimReport], stable: bool = True) -> str:
    return (
        json.dumps(
            [r.to_json_dict(stable=stable) for r in reports],
            sort_keys=True,
            indent=2,
        )
        + "\n"
    )


# ---------------------------------------------------------------------------
# Sampling helpers (all deterministic under a seed)
# ---------------------------------------------------------------------------


def _rng(seed, *scope) -> random.Random:
    return random.Random(":".join(str(part) for part in (seed,) + scope))


def random_permutation(n: int, rng: random.Random) -> Permutation:
    images = list(range(n))
    rng.shuffle(images)
    return Permutation(images)


def random_automorphism(n: int, rng: random.Random) -> CubeAutomorphism:
    return CubeAutomorphism(BitVector(n, rng.randrange(1 << n)), random_permutation(n, rng))


def random_involution(
    n: int, rng: random.Random, force_even: bool = False
) -> CubeAutomorphism:
    """A uniform-ish non-identity element of order 2."""
    while True:
        m = rng.randrange(0, n // 2 + 1)
        coords = list(range(1, n + 1))
        rng.shuffle(coords)
        cycles = [(coords[2 * i], coords[2 * i + 1]) for i in range(m)]
        fixed = coords[2 * m :]
        bits = 0
        for a, b in cycles:
            if rng.randrange(2):
                bits |= (1 << (a - 1)) | (1 << (b - 1))
        for i in fixed:
            if rng.randrange(2):
                bits |= 1 << (i - 1)
        if force_even and bits.bit_count() % 2 == 1:
            if fixed:
                bits ^= 1 << (fixed[0] - 1)
            else:
                continue
        sigma = Permutation.from_cycles(n, cycles) if cycles else Permutation.identity(n)
        g = CubeAutomorphism(BitVector(n, bits), sigma)
        if not g.is_identity():
            return g


def random_subgroup(n: int, order: int, rng: random.Random) -> CubeGroup:
    """A random subgroup of the requested order (2, 4, or 8)."""
    if order == 2:
        return generate_group([random_involution(n, rng)])
    for _ in range(500):
        if order == 4 and rng.randrange(2):
            # cyclic of order 4: (y, sigma) with sigma an involution, y not fixed
            g = random_involution(n, rng)
            if g.perm.is_identity():
                continue
            y = rng.randrange(1 << n)
            cand = CubeAutomorphism(BitVector(n, y), g.perm)
            if cand.compose(cand).is_identity():
                continue
            K = generate_group([cand], cap=order + 1)
        else:
            gens = [random_involution(n, rng) for _ in range(2 if order == 4 else 3)]
            try:
                K = generate_group(gens, cap=order + 1)
            except Exception:
                continue
        if K.order == order:
            return K
    # always-available fallback: independent translations
    dim = order.bit_length() - 1
    while True:
        vecs = [BitVector(n, rng.randrange(1, 1 << n)) for _ in range(dim)]
        K = generate_group([CubeAutomorphism.translation_by(v) for v in vecs], cap=order + 1)
        if K.order == order:
            return K


def sample_subgroups(
    n: int, count: int, rng: random.Random, orders: Sequence[int] = (2, 4, 8)
) -> list[CubeGroup]:
    return [random_subgroup(n, orders[i % len(orders)], rng) for i in range(count)]


def exhaustive_order2_subgroups(n: int) -> Iterator[CubeGroup]:
    """All subgroups of order 2, deterministically ordered."""
    identity = Permutation.identity(n)
    perms = [identity] + [
        Permutation(images)
        for images in itertools.permutations(range(n))
        if Permutation(images).compose(Permutation(images)).is_identity()
        and images != identity.images
    ]
    for sigma in perms:
        fix_free = [j for j in range(n) if sigma.images[j] == j]
        cyc_masks = [(1 << (a - 1)) | (1 << (b - 1)) for a, b in sigma.cycles()]
        units = [1 << j for j in fix_free] + cyc_masks
        for pick in range(1 << len(units)):
            bits = 0
            for i, u in enumerate(units):
                if (pick >> i) & 1:
                    bits |= u
            g = CubeAutomorphism(BitVector(n, bits), sigma)
            if g.is_identity():
                continue
            yield generate_group([g])


def brute_force_min_distance(K: CubeGroup):
    """Independent route to d_K: scans all 2^n vertices per element."""
    if K.is_trivial:
        return INFINITY
    n = K.n
    pc = _popcount_table(n)
    vs = np.arange(1 << n, dtype=np.int64)
    best = None
    for g in K.non_identity():
        moved = _perm_image_table(n, g.perm.images) ^ g.translation.bits
        d = int(pc[vs ^ moved].min())
        best = d if best is None else min(best, d)
    return best


# ---------------------------------------------------------------------------
# Vectorized element scans over the whole ambient group
# ---------------------------------------------------------------------------

_POP_CACHE: dict[int, np.ndarray] = {}


def _popcount_table(n: int) -> np.ndarray:
    if n not in _POP_CACHE:
        vs = np.arange(1 << n, dtype=np.int64)
        pc = np.zeros(1 << n, dtype=np.int64)
        for i in range(n):
            pc += (vs >> i) & 1
        _POP_CACHE[n] = pc
    return _POP_CACHE[n]


def _perm_image_table(n: int, images: Sequence[int]) -> np.ndarray:
    vs = np.arange(1 << n, dtype=np.int64)
    out = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        out |= ((vs >> i) & 1) << images[i]
    return out


def _cycle_data(images: Sequence[int]) -> tuple[int, list[int]]:
    n = len(images)
    seen = [False] * n
    fixed_mask = 0
    cycle_masks = []
    for i in range(n):
        if seen[i]:
            continue
        if images[i] == i:
            seen[i] = True
            fixed_mask |= 1 << i
            continue
        mask = 0
        j = i
        while not seen[j]:
            seen[j] = True
            mask |= 1 << j
            j = images[j]
        cycle_masks.append(mask)
    return fixed_mask, cycle_masks


def elements_with_distance_at_least(
    n: int, threshold: int
) -> list[tuple[int, tuple[int, ...], int]]:
    """Exhaustive scan of all 2^n n! elements of Aut(Q_n).

    Returns (translation bits, permutation images, distance) for every
    non-identity element whose vertex displacement distance reaches the
    threshold. Uses the per-permutation closed form, vectorized over the
    translation part.
    """
    pc = _popcount_table(n)
    ys = np.arange(1 << n, dtype=np.int64)
    identity = tuple(range(n))
    out = []
    for images in itertools.permutations(range(n)):
        fixed_mask, cycle_masks = _cycle_data(images)
        d = pc[ys & fixed_mask].copy()
        for mask in cycle_masks:
            d += pc[ys & mask] & 1
        for y in np.nonzero(d >= threshold)[0]:
            y = int(y)
            if y == 0 and images == identity:
                continue
            out.append((y, images, int(d[y])))
    return out


# ---------------------------------------------------------------------------
# Claim registry plumbing
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Claim:
    claim_id: str
    description: str
    runner: Callable[[int], ClaimReport]


CLAIMS: dict[str, Claim] = {}


def _claim(claim_id: str, description: str):
    def wrap(fn: Callable[[int], ClaimReport]) -> Callable[[int], ClaimReport]:
        CLAIMS[claim_id] = Claim(claim_id, description, fn)
        return fn

    return wrap


def run_claim(claim_id: str, seed: int = 0) -> ClaimReport:
    if claim_id not in CLAIMS:
        raise UnknownClaim(f"unknown claim id {claim_id!r}")
    start = time.perf_counter()
    report = CLAIMS[claim_id].runner(seed)
    report.runtime_ms = (time.perf_counter() - start) * 1000.0
    return report


def run_all(
    seed: int = 0, claims: Optional[Sequence[str]] = None, fail_fast: bool = True
) -> list[ClaimReport]:
    """Run claims in claim-id order; a FAILS halts the suite by default."""
    ids = sorted(CLAIMS) if claims is None else list(claims)
    reports = []
    for cid in ids:
        report = run_claim(cid, seed=seed)
        reports.append(report)
        if fail_fast and report.status == FAILS:
            break
    return reports


def _report(claim_id: str, ok: bool, parameters: dict, witnesses: dict) -> ClaimReport:
    return ClaimReport(claim_id, HOLDS if ok else FAILS, parameters, witnesses)


# ---------------------------------------------------------------------------
# Shared evaluation helpers
# ---------------------------------------------------------------------------


def cube_graph(n: int) -> SimpleGraph:
    return build_quotient(CubeGroup.trivial(n)).graph


def _weight_vectors(n: int, w: int) -> list[int]:
    out = []
    for comb in itertools.combinations(range(n), w):
        bits = 0
        for i in comb:
            bits |= 1 << i
        out.append(bits)
    return out


def has_cube_local_structure(Q: QuotientGraph, level: int) -> bool:
    """Regular of valency n with a_{i-1} = 0 and c_i = i for i <= level."""
    params = local_params(Q.graph, level)
    if not params[0].is_regular or params[0].valency != Q.n:
        return False
    for i in range(1, level + 1):
        if params[i - 1].a_value not in (0, VACUOUS):
            return False
        if params[i].c_value not in (i, VACUOUS):
            return False
    return True


def _sphere_vs_weight_classes(Q: QuotientGraph, x: int, level: int):
    """Sphere at distance `level` from x^K versus {(x+e)^K : wt(e)=level}."""
    base = Q.orbit_index[x]
    ball = set(sphere(Q, base, level))
    reach = {Q.orbit_index[x ^ e] for e in _weight_vectors(Q.n, level)}
    return ball, reach


def _default_grid(seed: int, per_n: int = 10, ns: Sequence[int] = (4, 5, 6, 7, 8)):
    """A modest sampled grid of subgroups for the distance-parameter claims."""
    groups: list[CubeGroup] = []
    for n in ns:
        rng = _rng(seed, "grid", n)
        groups.extend(sample_subgroups(n, per_n, rng))
    return groups


def class_dist_grid(seed: int) -> list[CubeGroup]:
    """Exhaustive semiregular order-2 subgroups at n=5 plus the random grid."""
    groups = [K for K in exhaustive_order2_subgroups(5) if is_semiregular(K)]
    for n in range(6, 11):
        rng = _rng(seed, "classdist", n)
        groups.extend(sample_subgroups(n, 100, rng))
    return groups


# ---------------------------------------------------------------------------
# Per-group check operations
# ---------------------------------------------------------------------------


def check_theorem_class_dist(K: CubeGroup, level: int) -> ClaimReport:
    """Local cube structure up to `level` iff d_K >= 2*level + 1."""
    Q = build_quotient(K)
    cond_local = has_cube_local_structure(Q, level)
    d = min_distance(K)
    cond_distance = d >= 2 * level + 1
    return _report(
        "thm-class-dist",
        cond_local == cond_distance,
        {"group": describe_group(K), "level": level},
        {"local_structure": cond_local, "d_K": d, "distance_bound": cond_distance},
    )


def check_main_even(K: CubeGroup) -> ClaimReport:
    """Even, d_K >= 7: both halves connected and locally triangular."""
    d = min_distance(K)
    if not (is_even(K) and d >= 7 and K.n >= 2):
        raise PreconditionViolated("check_main_even needs an even group with d_K >= 7")
    Q = build_quotient(K)
    target = triangular_graph(Q.n)
    halves = halved_graphs(Q.graph)
    ok = True
    witnesses = {}
    for idx, h in enumerate(halves):
        connected = h.is_connected()
        locally = is_locally(h, target)
        witnesses[f"half{idx}"] = {
            "vertices": h.n,
            "connected": connected,
            "locally_triangular": locally,
        }
        ok = ok and connected and locally
    return _report(
        "thm-main-even", ok, {"group": describe_group(K), "d_K": d}, witnesses
    )


def check_even_lemma(K: CubeGroup) -> ClaimReport:
    """Bipartite iff even; double and its halves for non-even groups."""
    d = min_distance(K)
    if d < 2:
        raise PreconditionViolated("check_even_lemma needs d_K >= 2")
    Q = build_quotient(K)
    witnesses: dict = {"d_K": d, "even": is_even(K)}
    ok = True
    if is_even(K):
        try:
            parts = bipartite_parts(Q.graph)
            expected0 = tuple(
                i for i, rep in enumerate(Q.reps) if bin(rep).count("1") % 2 == 0
            )
            ok = parts[0] == expected0
            witnesses["bipartite"] = True
            witnesses["parts_match_weight_parity"] = ok
        except NotBipartite as exc:
            ok = False
            witnesses["bipartite"] = False
            witnesses["odd_walk"] = exc.odd_walk
    else:
        try:
            bipartite_parts(Q.graph)
            ok = False
            witnesses["bipartite"] = True
        except NotBipartite as exc:
            witnesses["bipartite"] = False
            witnesses["odd_walk_length"] = len(exc.odd_walk) - 1
        L = intersect_even(K)
        QL = build_quotient(L)
        dbl = bipartite_double(Q.graph)
        # explicit isomorphism x^L -> (x^K, wt(x) mod 2)
        mapping = [-1] * QL.vertex_count
        consistent = True
        for v in range(1 << K.n):
            src = QL.orbit_index[v]
            dst = Q.orbit_index[v] + (bin(v).count("1") % 2) * Q.vertex_count
            if mapping[src] == -1:
                mapping[src] = dst
            elif mapping[src] != dst:
                consistent = False
        double_iso = consistent and verify_isomorphism(QL.graph, dbl, mapping)
        witnesses["double_isomorphic_to_even_part_quotient"] = double_iso
        ok = ok and double_iso
        if d >= 4:
            pi2 = distance2_graph(Q.graph)
            halves = halved_graphs(dbl)
            halves_ok = True
            for h in halves:
                m = [-1] * h.n
                # vertices of a double half carry labels "<rep>|<i>"
                for idx in range(h.n):
                    rep, _ = h.labels[idx].rsplit("|", 1)
                    m[idx] = Q.graph.labels.index(rep)
                halves_ok = halves_ok and verify_isomorphism(h, pi2, m)
            witnesses["double_halves_isomorphic_to_distance2"] = halves_ok
            ok = ok and halves_ok
    return _report("lem-even", ok, {"group": describe_group(K)}, witnesses)


def check_halved_iso(K: CubeGroup) -> ClaimReport:
    """Non-even normalizer (or odd n) forces isomorphic halves."""
    d = min_distance(K)
    if not (is_even(K) and d >= 2):
        raise PreconditionViolated("check_halved_iso needs an even group with d_K >= 2")
    Q = build_quotient(K)
    h0, h1 = halved_graphs(Q.graph)
    witness_map = are_isomorphic(h0, h1)
    actually_iso = witness_map is not None
    witnesses: dict = {"halves_isomorphic": actually_iso, "d_K": d}
    ok = True
    try:
        N = normalizer(K, "full", cap=1)
        n_non_even = not is_even(N)
        witnesses["normalizer_non_even"] = n_non_even
        if n_non_even:
            ok = actually_iso
    except Unsupported:
        witnesses["normalizer_non_even"] = "unsupported"
    if K.n % 2 == 1:
        witnesses["odd_dimension"] = True
        ok = ok and actually_iso
    return _report("prop-halved", ok, {"group": describe_group(K)}, witnesses)


# ---------------------------------------------------------------------------
# Registered claims
# ---------------------------------------------------------------------------


@_claim(
    "lem-nbd",
    "Every quotient vertex at distance l from x^K is (x+e)^K for some e of weight l.",
)
def _lem_nbd(seed: int) -> ClaimReport:
    groups = _default_grid(seed, per_n=6)
    checked = 0
    for K in groups:
        Q = build_quotient(K)
        rng = _rng(seed, "nbd", checked)
        for _ in range(3):
            x = rng.randrange(1 << K.n)
            for level in (1, 2, 3):
                ball, reach = _sphere_vs_weight_classes(Q, x, level)
                checked += 1
                if not ball <= reach:
                    return _report(
                        "lem-nbd",
                        False,
                        {"group": describe_group(K), "x": x, "level": level},
                        {"sphere": sorted(ball), "weight_classes": sorted(reach)},
                    )
    return _report("lem-nbd", True, {"groups": len(groups)}, {"checked_spheres": checked})


@_claim(
    "lem-trick",
    "Distinct vertices in one orbit are at Hamming distance at least d_K.",
)
def _lem_trick(seed: int) -> ClaimReport:
    groups = _default_grid(seed, per_n=6)
    checked = 0
    for K in groups:
        d = min_distance(K)
        if d is INFINITY:
            continue
        Q = build_quotient(K)
        orbits: dict[int, list[int]] = {}
        for v in range(1 << K.n):
            orbits.setdefault(Q.orbit_index[v], []).append(v)
        for members in orbits.values():
            for a, b in itertools.combinations(members, 2):
                checked += 1
                if bin(a ^ b).count("1") < d:
                    return _report(
                        "lem-trick",
                        False,
                        {"group": describe_group(K)},
                        {"x": a, "y": b, "distance": bin(a ^ b).count("1"), "d_K": d},
                    )
    return _report("lem-trick", True, {"groups": len(groups)}, {"checked_pairs": checked})


@_claim("lem-cycle", "If 3 <= d_K < inf the quotient has a cycle of length d_K.")
def _lem_cycle(seed: int) -> ClaimReport:
    groups = _default_grid(seed, per_n=6)
    found = 0
    for K in groups:
        d = min_distance(K)
        if not 3 <= d < INFINITY:
            continue
        Q = build_quotient(K)
        # witness: project a geodesic from x to x^k for a distance-realizing pair
        best = None
        for g in K.non_identity():
            if element_min_distance(g) == d:
                for x in range(1 << K.n):
                    y = g.act_bits(x)
                    if bin(x ^ y).count("1") == d:
                        best = (x, y)
                        break
                break
        x, y = best
        walk = [x]
        cur = x
        for i in range(K.n):
            if (x ^ y) >> i & 1:
                cur ^= 1 << i
                walk.append(cur)
        ids = [Q.orbit_index[v] for v in walk]
        distinct = len(set(ids[:-1])) == d and ids[-1] == ids[0]
        adjacent = all(
            Q.graph.has_edge(ids[i], ids[i + 1]) for i in range(len(ids) - 1)
        )
        if not (distinct and adjacent and len(ids) - 1 == d):
            return _report(
                "lem-cycle",
                False,
                {"group": describe_group(K), "d_K": d},
                {"projected_walk": ids},
            )
        found += 1
    if found == 0:
        return ClaimReport(
            "lem-cycle", SKIPPED, {"groups": len(groups)}, {"qualifying_groups": 0}
        )
    return _report("lem-cycle", True, {"groups": len(groups)}, {"cycles_verified": found})


@_claim(
    "lem-nbd2",
    "If d_K >= 2l the distance-l sphere equals the weight-l classes exactly.",
)
def _lem_nbd2(seed: int) -> ClaimReport:
    groups = _default_grid(seed, per_n=6)
    checked = 0
    for K in groups:
        d = min_distance(K)
        Q = build_quotient(K)
        rng = _rng(seed, "nbd2", checked)
        max_level = 3 if d is INFINITY else min(3, int(d) // 2)
        for level in range(1, max_level + 1):
            x = rng.randrange(1 << K.n)
            ball, reach = _sphere_vs_weight_classes(Q, x, level)
            checked += 1
            if ball != reach:
                return _report(
                    "lem-nbd2",
                    False,
                    {"group": describe_group(K), "x": x, "level": level, "d_K": d},
                    {"sphere": sorted(ball), "weight_classes": sorted(reach)},
                )
    return _report("lem-nbd2", True, {"groups": len(groups)}, {"checked_spheres": checked})


@_claim(
    "lem-covering",
    "Natural map is a covering iff the quotient is regular of valency n iff d_K >= 3.",
)
def _lem_covering(seed: int) -> ClaimReport:
    groups = class_dist_grid(seed)
    for K in groups:
        Q = build_quotient(K)
        covering = verify_covering(natural_covering(Q))
        regular = Q.graph.is_regular() and Q.graph.n > 0 and Q.graph.degree(0) == K.n
        distance = min_distance(K) >= 3
        if not (covering == regular == distance):
            return _report(
                "lem-covering",
                False,
                {"group": describe_group(K)},
                {"covering": covering, "regular_valency_n": regular, "d_K_ge_3": distance},
            )
    return _report("lem-covering", True, {"groups": len(groups)}, {"discrepancies": 0})


@_claim(
    "lem-a-c",
    "d_K >= 2l forces a_{l-1} = 0; d_K >= 2l+1 forces c_l = l.",
)
def _lem_a_c(seed: int) -> ClaimReport:
    groups = _default_grid(seed, per_n=6)
    checked = 0
    for K in groups:
        d = min_distance(K)
        Q = build_quotient(K)
        params = local_params(Q.graph, 3)
        for level in (1, 2, 3):
            if d >= 2 * level and params[level - 1].a_value not in (0, VACUOUS):
                return _report(
                    "lem-a-c",
                    False,
                    {"group": describe_group(K), "level": level, "d_K": d},
                    {"a_value": params[level - 1].a_value},
                )
            if d >= 2 * level + 1 and params[level].c_value not in (level, VACUOUS):
                return _report(
                    "lem-a-c",
                    False,
                    {"group": describe_group(K), "level": level, "d_K": d},
                    {"c_value": params[level].c_value},
                )
            checked += 1
    return _report("lem-a-c", True, {"groups": len(groups)}, {"checked_levels": checked})


@_claim(
    "lem-counting",
    "Valency-n regularity with a_{i-1}=0, c_i=i up to l gives spheres of size C(n, l).",
)
def _lem_counting(seed: int) -> ClaimReport:
    groups = _default_grid(seed, per_n=6)
    checked = 0
    for K in groups:
        d = min_distance(K)
        max_level = 3 if d is INFINITY else min(3, (int(d) - 1) // 2)
        if max_level < 1:
            continue
        Q = build_quotient(K)
        if not has_cube_local_structure(Q, max_level):
            continue
        for u in range(Q.vertex_count):
            masks = Q.graph.bfs_level_masks(u)
            for level in range(1, max_level + 1):
                size = masks[level].bit_count() if level < len(masks) else 0
                checked += 1
                if size != math.comb(K.n, level):
                    return _report(
                        "lem-counting",
                        False,
                        {"group": describe_group(K), "vertex": u, "level": level},
                        {"sphere_size": size, "expected": math.comb(K.n, level)},
                    )
    if checked == 0:
        return ClaimReport(
            "lem-counting", SKIPPED, {"groups": len(groups)}, {"qualifying_groups": 0}
        )
    return _report("lem-counting", True, {"groups": len(groups)}, {"checked_spheres": checked})


@_claim(
    "thm-class-dist",
    "Local cube structure up to level l is equivalent to d_K >= 2l+1 (grid).",
)
def _thm_class_dist(seed: int) -> ClaimReport:
    groups = class_dist_grid(seed)
    checked = 0
    for K in groups:
        Q = build_quotient(K)
        d = min_distance(K)
        params_ok = {level: has_cube_local_structure(Q, level) for level in (1, 2, 3)}
        for level in (1, 2, 3):
            checked += 1
            if params_ok[level] != (d >= 2 * level + 1):
                return _report(
                    "thm-class-dist",
                    False,
                    {"group": describe_group(K), "level": level},
                    {"local_structure": params_ok[level], "d_K": d},
                )
    return _report(
        "thm-class-dist",
        True,
        {"groups": len(groups), "levels": [1, 2, 3]},
        {"checked": checked, "discrepancies": 0},
    )


@_claim(
    "cor-main-rect",
    "Valency-n rectagraphs with a_2=0, c_3=3 are exactly the quotients with d_K >= 7.",
)
def _cor_main_rect(seed: int) -> ClaimReport:
    cases = []
    for n, bits in ((8, (1 << 8) - 1), (8, (1 << 7) - 1), (9, (1 << 9) - 1)):
        K = generate_group([CubeAutomorphism.translation_by(BitVector(n, bits))])
        cases.append(K)
    witnesses = {}
    for idx, K in enumerate(cases):
        d = min_distance(K)
        Q = build_quotient(K)
        params = local_params(Q.graph, 3)
        forward = (
            is_rectagraph(Q.graph)
            and params[0].valency == K.n
            and params[2].a_value in (0, VACUOUS)
            and params[3].c_value in (3, VACUOUS)
        )
        rng = _rng(seed, "mainrect", idx)
        perm = list(range(Q.vertex_count))
        rng.shuffle(perm)
        relabeled = Q.graph.relabeled(perm)
        cover = lift_covering(relabeled)
        deck = deck_group(cover)
        rebuilt = build_quotient(deck)
        w = are_isomorphic(rebuilt.graph, relabeled)
        backward = w is not None and verify_isomorphism(rebuilt.graph, relabeled, w)
        witnesses[describe_group(K)] = {
            "d_K": d,
            "rectagraph_params": forward,
            "lift_roundtrip_isomorphic": backward,
            "deck_order": deck.order,
        }
        if not (forward and backward and deck.order == K.order):
            return ClaimReport("cor-main-rect", FAILS, {"case": idx}, witnesses)
    return _report("cor-main-rect", True, {"cases": len(cases)}, witnesses)


@_claim(
    "prop-conjugate",
    "Conjugation induces a quotient isomorphism commuting with the natural maps.",
)
def _prop_conjugate(seed: int) -> ClaimReport:
    rng = _rng(seed, "propconj")
    checked = 0
    for n in (4, 5, 6, 7, 8):
        for _ in range(4):
            K = random_subgroup(n, rng.choice((2, 4, 8)), rng)
            g = random_automorphism(n, rng)
            L = conjugate_group(K, g)
            QK = build_quotient(K)
            QL = build_quotient(L)
            mapping = [-1] * QK.vertex_count
            consistent = True
            for v in range(1 << n):
                src = QK.orbit_index[v]
                dst = QL.orbit_index[g.act_bits(v)]
                if mapping[src] == -1:
                    mapping[src] = dst
                elif mapping[src] != dst:
                    consistent = False
            ok = consistent and verify_isomorphism(QK.graph, QL.graph, mapping)
            checked += 1
            if not ok:
                return _report(
                    "prop-conjugate",
                    False,
                    {"group": describe_group(K), "g": repr(g)},
                    {"diagram_commutes": consistent},
                )
    return _report("prop-conjugate", True, {"pairs": checked}, {"all_diagrams_commute": True})


def _conjugacy_brute(K: CubeGroup, L: CubeGroup) -> Optional[CubeAutomorphism]:
    """Search all of Aut(Q_n) for g with g^-1 K g = L (n <= 6)."""
    n = K.n
    if K.order != L.order:
        return None
    for images in itertools.permutations(range(n)):
        tau = Permutation(images)
        for y in range(1 << n):
            g = CubeAutomorphism(BitVector(n, y), tau)
            if all(k.conjugated_by(g) in L for k in K.generators):
                return g
    return None


def sample_groups_with_min_distance(
    n: int, bound: int, count: int, rng: random.Random
) -> list[CubeGroup]:
    """Seeded subgroups with d_K >= bound, drawn from the families that admit it."""
    out: list[CubeGroup] = []
    tries = 0
    while len(out) < count and tries < 20000:
        tries += 1
        kind = rng.randrange(3)
        if kind == 0:
            w = rng.randrange(bound, n + 1)
            coords = rng.sample(range(1, n + 1), w)
            K = generate_group(
                [CubeAutomorphism.translation_by(BitVector.from_support(n, coords))]
            )
        elif kind == 1:
            g = random_involution(n, rng)
            K = generate_group([g])
        else:
            # order-4 cyclic: possible from n = 8 up
            g = random_involution(n, rng)
            if g.perm.is_identity():
                continue
            y = rng.randrange(1 << n)
            cand = CubeAutomorphism(BitVector(n, y), g.perm)
            if cand.compose(cand).is_identity():
                continue
            K = generate_group([cand], cap=8)
        if min_distance(K) >= bound:
            out.append(K)
    return out


@_claim(
    "thm-conjugate-simple",
    "For d_K >= 5, quotients are isomorphic exactly when the groups are conjugate.",
)
def _thm_conjugate_simple(seed: int) -> ClaimReport:
    rng = _rng(seed, "conjsimple")
    iso_checked = 0
    # conjugate pairs must give isomorphic quotients (n = 6, 7, 8)
    for n in (6, 7, 8):
        for K in sample_groups_with_min_distance(n, 5, 6, rng):
            g = random_automorphism(n, rng)
            L = conjugate_group(K, g)
            QK, QL = build_quotient(K), build_quotient(L)
            w = are_isomorphic(QK.graph, QL.graph)
            iso_checked += 1
            if w is None or not verify_isomorphism(QK.graph, QL.graph, w):
                return _report(
                    "thm-conjugate-simple",
                    False,
                    {"group": describe_group(K), "g": repr(g)},
                    {"direction": "conjugate->isomorphic"},
                )
    # both directions at n = 6, where conjugacy is brute-force decidable
    n = 6
    pool = [
        generate_group([CubeAutomorphism.translation_by(BitVector.from_support(n, c))])
        for c in (
            (1, 2, 3, 4, 5),
            (2, 3, 4, 5, 6),
            (1, 2, 3, 4, 6),
            (1, 2, 3, 4, 5, 6),
        )
    ]
    cross = 0
    for K, L in itertools.combinations(pool, 2):
        conj = _conjugacy_brute(K, L) is not None
        w = are_isomorphic(build_quotient(K).graph, build_quotient(L).graph)
        iso = w is not None
        cross += 1
        if conj != iso:
            return _report(
                "thm-conjugate-simple",
                False,
                {"K": describe_group(K), "L": describe_group(L)},
                {"conjugate": conj, "isomorphic": iso},
            )
    # |Aut| = |N|/|K| on the folded 6-cube, both sides computed independently
    Kf = generate_group([CubeAutomorphism.translation_by(BitVector.all_ones(6))])
    graph_side = automorphism_group(build_quotient(Kf).graph).order
    group_side = normalizer(Kf, "full", cap=1).order // Kf.order
    ok = graph_side == group_side == 23040
    return _report(
        "thm-conjugate-simple",
        ok,
        {"conjugate_pairs": iso_checked, "cross_pairs": cross},
        {"folded6_aut": graph_side, "folded6_normalizer_quotient": group_side},
    )


@_claim("lem-even", "Bipartiteness matches evenness; doubles collapse to the even part.")
def _lem_even(seed: int) -> ClaimReport:
    rng = _rng(seed, "lemeven")
    cases: list[CubeGroup] = [
        generate_group([CubeAutomorphism.translation_by(BitVector.all_ones(7))]),
    ]
    while len(cases) < 8:
        K = random_subgroup(rng.choice((4, 5, 6, 7)), rng.choice((2, 4)), rng)
        if min_distance(K) >= 2:
            cases.append(K)
    for K in cases:
        report = check_even_lemma(K)
        if report.status != HOLDS:
            return report
    return _report("lem-even", True, {"groups": len(cases)}, {"all_parts_verified": True})


@_claim(
    "prop-halved",
    "A non-even normalizer (or odd n) makes the two halves isomorphic.",
)
def _prop_halved(seed: int) -> ClaimReport:
    rng = _rng(seed, "prophalved")
    cases: list[CubeGroup] = []
    while len(cases) < 10:
        K = generate_group([random_involution(rng.choice((4, 5, 6, 7, 8)), rng, force_even=True)])
        if is_even(K) and min_distance(K) >= 2:
            cases.append(K)
    verdicts = []
    for K in cases:
        report = check_halved_iso(K)
        verdicts.append(report.witnesses.get("halves_isomorphic"))
        if report.status != HOLDS:
            return report
    return _report(
        "prop-halved", True, {"groups": len(cases)}, {"halves_isomorphic": verdicts}
    )


@_claim("cor-odd-iso", "Odd n: halves of every bipartite quotient are isomorphic.")
def _cor_odd_iso(seed: int) -> ClaimReport:
    n = 7
    checked = 0
    for K in exhaustive_order2_subgroups(n):
        if not is_even(K) or min_distance(K) < 2:
            continue
        Q = build_quotient(K)
        h0, h1 = halved_graphs(Q.graph)
        w = are_isomorphic(h0, h1)
        checked += 1
        if w is None:
            return _report(
                "cor-odd-iso",
                False,
                {"group": describe_group(K)},
                {"halves_isomorphic": False},
            )
    return _report(
        "cor-odd-iso",
        True,
        {"dimension": n, "exhaustive_order2_groups": checked},
        {"all_halves_isomorphic": True},
    )


def _quaternion_group() -> CubeGroup:
    x = BitVector.from_support(8, (1, 2, 3, 4))
    y = BitVector.from_support(8, (1, 3, 6, 8))
    sigma = Permutation.from_cycles(8, [(1, 5), (2, 6), (3, 7), (4, 8)])
    tau = Permutation.from_cycles(8, [(1, 2), (3, 4), (5, 6), (7, 8)])
    return generate_group([CubeAutomorphism(x, sigma), CubeAutomorphism(y, tau)])


@_claim(
    "ex-exp-halved",
    "The order-8 quaternion-type subgroup of Aut(Q_8): d_K=4, spheres 13 and 14, halves differ.",
)
def _ex_exp_halved(seed: int) -> ClaimReport:
    K = _quaternion_group()
    d = min_distance(K)
    Q = build_quotient(K)
    order2 = sum(
        1 for g in K.non_identity() if g.compose(g).is_identity()
    )
    quaternion_type = K.order == 8 and order2 == 1 and not _is_abelian(K)
    s0 = len(sphere(Q, Q.orbit_index[0], 2))
    s1 = len(sphere(Q, Q.orbit_index[1], 2))
    bip = True
    try:
        bipartite_parts(Q.graph)
    except NotBipartite:
        bip = False
    h0, h1 = halved_graphs(Q.graph)
    halves_iso = are_isomorphic(h0, h1) is not None
    ok = (
        K.order == 8
        and quaternion_type
        and is_even(K)
        and d == 4
        and bip
        and Q.vertex_count == 32
        and (s0, s1) == (13, 14)
        and not halves_iso
    )
    return _report(
        "ex-exp-halved",
        ok,
        {"group": describe_group(K)},
        {
            "order": K.order,
            "quaternion_structure": quaternion_type,
            "even": is_even(K),
            "d_K": d,
            "bipartite": bip,
            "vertices": Q.vertex_count,
            "sphere2_of_zero": s0,
            "sphere2_of_e1": s1,
            "halves_isomorphic": halves_iso,
        },
    )


def _is_abelian(K: CubeGroup) -> bool:
    gens = K.generators
    return all(
        a.compose(b) == b.compose(a) for a, b in itertools.combinations(gens, 2)
    )


@_claim("lem-loc-tn", "d_K >= 7: every component of the distance-2 graph is locally triangular.")
def _lem_loc_tn(seed: int) -> ClaimReport:
    cases = [
        CubeGroup.trivial(5),
        generate_group([CubeAutomorphism.translation_by(BitVector.all_ones(8))]),
        generate_group(
            [CubeAutomorphism.translation_by(BitVector.from_support(8, tuple(range(1, 8))))]
        ),
    ]
    witnesses = {}
    for K in cases:
        d = min_distance(K)
        assert d >= 7
        Q = build_quotient(K)
        target = triangular_graph(K.n)
        pi2 = distance2_graph(Q.graph)
        comps = pi2.connected_components()
        all_local = all(
            is_locally(pi2.induced(comp), target) for comp in comps
        )
        witnesses[describe_group(K)] = {
            "d_K": d,
            "components": len(comps),
            "all_locally_triangular": all_local,
        }
        if not all_local:
            return ClaimReport("lem-loc-tn", FAILS, {}, witnesses)
    return _report("lem-loc-tn", True, {"cases": len(cases)}, witnesses)


@_claim("thm-main-even", "Even with d_K >= 7: halves are connected and locally triangular.")
def _thm_main_even(seed: int) -> ClaimReport:
    cases = [
        CubeGroup.trivial(5),
        generate_group([CubeAutomorphism.translation_by(BitVector.all_ones(8))]),
        generate_group(
            [
                CubeAutomorphism(
                    BitVector.all_ones(10), Permutation.from_cycles(10, [(1, 2)])
                )
            ]
        ),
    ]
    witnesses = {}
    for K in cases:
        report = check_main_even(K)
        witnesses[describe_group(K)] = report.witnesses
        if report.status != HOLDS:
            return ClaimReport("thm-main-even", FAILS, report.parameters, witnesses)
    return _report("thm-main-even", True, {"cases": len(cases)}, witnesses)


@_claim(
    "thm-main-aut",
    "Halved-quotient automorphism group is the even normalizer modulo the group.",
)
def _thm_main_aut(seed: int) -> ClaimReport:
    witnesses = {}
    # trivial group at n = 5: halved 5-cube
    h0, _ = halved_graphs(cube_graph(5))
    graph_side = automorphism_group(h0).order
    group_side = normalizer(CubeGroup.trivial(5), "even", cap=1).order
    witnesses["halved Q_5"] = {"graph_aut": graph_side, "even_normalizer_quotient": group_side}
    ok = graph_side == group_side == (1 << 4) * math.factorial(5)
    # folded 8-cube
    K = generate_group([CubeAutomorphism.translation_by(BitVector.all_ones(8))])
    h0, _ = halved_graphs(build_quotient(K).graph)
    graph_side = automorphism_group(h0).order
    group_side = normalizer(K, "even", cap=1).order // K.order
    witnesses["halved folded 8-cube"] = {
        "graph_aut": graph_side,
        "even_normalizer_quotient": group_side,
    }
    ok = ok and graph_side == group_side == (1 << 6) * math.factorial(8)
    return _report("thm-main-aut", ok, {"cases": 2}, witnesses)


@_claim(
    "ex-large",
    "Groups with d_K in {n-1, n} are exactly the order-2 heavy translation groups (n >= 4).",
)
def _ex_large(seed: int) -> ClaimReport:
    witnesses = {}
    for n in range(4, 9):
        hits = elements_with_distance_at_least(n, n - 1)
        identity_images = tuple(range(n))
        translations = []
        others = []
        for y, images, d in hits:
            (translations if images == identity_images else others).append((y, images, d))
        expected = {
            bits for w in (n - 1, n) for bits in _weight_vectors(n, w)
        }
        translations_ok = {y for y, _, _ in translations} == expected
        # every non-translation candidate has a proper power of smaller
        # displacement, so no subgroup containing it reaches d_K >= n-1
        others_die = True
        for y, images, _ in others:
            g = CubeAutomorphism(BitVector(n, y), Permutation(images))
            cyclic = generate_group([g], cap=64)
            if min_distance(cyclic) >= n - 1:
                others_die = False
        # two distinct heavy translations combine to a light one, so the
        # only groups at d_K >= n-1 are {0, x}
        pair_ok = all(
            bin(a ^ b).count("1") < n - 1
            for a, b in itertools.combinations(sorted(expected), 2)
        )
        witnesses[f"n={n}"] = {
            "elements_at_threshold": len(hits),
            "heavy_translations": len(translations),
            "borderline_non_translations": len(others),
            "translations_match_expected": translations_ok,
            "non_translations_drop_in_cyclic_closure": others_die,
            "heavy_translation_pairs_collapse": pair_ok,
        }
        if not (translations_ok and others_die and pair_ok):
            return ClaimReport("ex-large", FAILS, {"n": n}, witnesses)
    return _report("ex-large", True, {"dimensions": [4, 5, 6, 7, 8]}, witnesses)


@_claim(
    "ex-k2",
    "Order-2 groups: d_K counts the fixed coordinates where the translation is 1.",
)
def _ex_k2(seed: int) -> ClaimReport:
    checked = 0
    for n in range(4, 11):
        rng = _rng(seed, "k2", n)
        for _ in range(200):
            g = random_involution(n, rng)
            K = generate_group([g])
            formula = sum(
                1 for i in g.perm.fixed_points() if g.translation.bit(i)
            )
            closed = min_distance(K)
            brute = brute_force_min_distance(K)
            checked += 1
            if not formula == closed == brute:
                return _report(
                    "ex-k2",
                    False,
                    {"group": describe_group(K)},
                    {"formula": formula, "closed_form": closed, "brute_force": brute},
                )
    return _report(
        "ex-k2", True, {"involutions_per_n": 200, "dimensions": list(range(4, 11))},
        {"checked": checked},
    )


def _not_vt_group(n: int) -> CubeGroup:
    sigma = Permutation.from_cycles(n, [(1, 2)])
    return generate_group([CubeAutomorphism(BitVector.all_ones(n), sigma)])


@_claim(
    "ex-not-vt",
    "Heavy involutions with a transposition part give non-vertex-transitive quotients.",
)
def _ex_not_vt(seed: int) -> ClaimReport:
    n = 8
    K = _not_vt_group(n)
    d = min_distance(K)
    Q = build_quotient(K)
    aut = automorphism_group(Q.graph)
    orbits = aut.vertex_orbits()
    N = normalizer(K, "full", cap=1)
    group_side = N.order // K.order
    # group-side witness: e_1^K is not in the normalizer orbit of 0^K
    zero_id = Q.orbit_index[0]
    e1_id = Q.orbit_index[1]
    reach = {zero_id}
    frontier = [zero_id]
    while frontier:
        oid = frontier.pop()
        for g in N.generators:
            img = Q.orbit_index[g.act_bits(Q.reps[oid])]
            if img not in reach:
                reach.add(img)
                frontier.append(img)
    ok = (
        d == n - 2
        and len(orbits) > 1
        and aut.order == group_side
        and e1_id not in reach
    )
    return _report(
        "ex-not-vt",
        ok,
        {"group": describe_group(K)},
        {
            "d_K": d,
            "aut_order": aut.order,
            "normalizer_quotient_order": group_side,
            "vertex_orbit_sizes": [len(o) for o in orbits],
            "e1_in_normalizer_orbit_of_zero": e1_id in reach,
        },
    )


@_claim(
    "ex-lt-not-vt",
    "A locally triangular half (n=10, d_K=8) that is not vertex-transitive.",
)
def _ex_lt_not_vt(seed: int) -> ClaimReport:
    n = 10
    K = _not_vt_group(n)
    d = min_distance(K)
    Q = build_quotient(K)
    h0, _ = halved_graphs(Q.graph)
    aut = automorphism_group(h0)
    orbits = aut.vertex_orbits()
    group_side = normalizer(K, "even", cap=1).order // K.order
    ok = (
        is_even(K)
        and d == 8
        and len(orbits) > 1
        and aut.order == group_side
    )
    return _report(
        "ex-lt-not-vt",
        ok,
        {"group": describe_group(K)},
        {
            "d_K": d,
            "half_vertices": h0.n,
            "aut_order": aut.order,
            "even_normalizer_quotient_order": group_side,
            "vertex_orbit_sizes": [len(o) for o in orbits],
        },
    )


@_claim(
    "ex-valency-m",
    "Even-weight translations on trailing coordinates give a quotient equal to a smaller cube.",
)
def _ex_valency_m(seed: int) -> ClaimReport:
    witnesses = {}
    for m, n in ((2, 4), (3, 5), (3, 6)):
        gens = [
            CubeAutomorphism.translation_by(BitVector.from_support(n, (i, i + 1)))
            for i in range(m, n)
        ]
        K = generate_group(gens)
        d = min_distance(K)
        Q = build_quotient(K)
        # the restriction of the natural map to the low-coordinate subcube
        mapping = [Q.orbit_index[x] for x in range(1 << m)]
        qm = cube_graph(m)
        iso = len(set(mapping)) == Q.vertex_count and verify_isomorphism(
            qm, Q.graph, mapping
        )
        params_ok = has_cube_local_structure_any_valency(Q, m)
        witnesses[f"(m,n)=({m},{n})"] = {
            "group_order": K.order,
            "d_K": d,
            "restriction_is_isomorphism": iso,
            "valency_m_cube_params": params_ok,
        }
        if not (d == 2 and iso and params_ok and K.order == 1 << (n - m)):
            return ClaimReport("ex-valency-m", FAILS, {"m": m, "n": n}, witnesses)
    return _report("ex-valency-m", True, {"cases": 3}, witnesses)


def has_cube_local_structure_any_valency(Q: QuotientGraph, valency: int) -> bool:
    params = local_params(Q.graph, valency)
    if not params[0].is_regular or params[0].valency != valency:
        return False
    for i in range(1, valency + 1):
        if params[i - 1].a_value not in (0, VACUOUS):
            return False
        if params[i].c_value not in (i, VACUOUS):
            return False
    return True


@_claim(
    "small-n-halved-cubes",
    "Halved n-cubes for n <= 4 are complete or complete-multipartite with known symmetry.",
)
def _small_n_halved(seed: int) -> ClaimReport:
    expected_orders = {2: 2, 3: 24, 4: 384}
    witnesses = {}
    ok = True
    for n in (2, 3, 4):
        h0, h1 = halved_graphs(cube_graph(n))
        aut = automorphism_group(h0).order
        local = is_locally(h0, triangular_graph(n)) if n >= 2 else True
        witnesses[f"halved Q_{n}"] = {
            "vertices": h0.n,
            "aut_order": aut,
            "expected": expected_orders[n],
            "locally_triangular": local,
        }
        ok = ok and aut == expected_orders[n] and h0.n == 1 << (n - 1) and local
    return _report("small-n-halved-cubes", ok, {"dimensions": [2, 3, 4]}, witnesses)


# ---------------------------------------------------------------------------
# Named worked examples
# ---------------------------------------------------------------------------

_EXAMPLES = {
    "exp-halved": "ex-exp-halved",
    "k2": "ex-k2",
    "large": "ex-large",
    "not-vt": "ex-not-vt",
    "lt-not-vt": "ex-lt-not-vt",
    "valency-m": "ex-valency-m",
}


def run_example(name: str, seed: int = 0) -> ClaimReport:
    """Re-run one worked example by name and check all its stated values."""
    key = name.strip().lower()
    if key.startswith("ex-"):
        key = key[3:]
    if key not in _EXAMPLES:
        raise UnknownExample(
            f"unknown example {name!r}; known: {sorted(_EXAMPLES)}"
        )
    return run_claim(_EXAMPLES[key], seed=seed)
