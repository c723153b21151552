import random
from collections import deque

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import bouquet2, bridge, loop, nested2, triangle
from ribbonpd import (
    NonPrimeError,
    NotASummandError,
    NotPlaneError,
    RibbonError,
    RibbonGraph,
    biseparation_candidates_prime,
    dual_of_join_summand,
    enumerate_plane_subsets,
    find_plane_biseparation,
    genus,
    geometric_dual,
    interlacement,
    is_isomorphic,
    is_one_sum,
    is_plane,
    join,
    join_split,
    partial_dual,
    prime_factorization,
    sim_equivalent,
    toggle,
    verify_plane_biseparation,
    verify_plane_join_biseparation,
    vertex_blocks,
)
from ribbonpd.decomp import all_prime_summands, is_prime, join_summands, move_orbit
from ribbonpd.oracle import (
    brute_force_plane_subsets,
    enumerate_ribbon_graphs,
    min_genus_abstract,
    random_join,
    random_one_sum,
    random_plane_graph,
    random_ribbon_graph,
    underlying_graph,
)
from ribbonpd.ribbon import canonical_tuple, components, induced

seeds = st.integers(min_value=0, max_value=10**9)

GRAPHS4 = enumerate_ribbon_graphs(3, 4)
PLANE4 = [g for g in GRAPHS4 if is_plane(g)]


def pendant_loop_triangle():
    return RibbonGraph([["a+", "d+", "d-", "c-"], ["b+", "a-"], ["c+", "b-"]])


# -- 1-sums and joins ----------------------------------------------------------


def test_is_one_sum_examples(B2, L):
    assert is_one_sum(B2, {"a"}, {"b"}) == 0
    with pytest.raises(RibbonError):
        is_one_sum(L, {"a"}, set())
    edge_and_loop = RibbonGraph([["a+"], ["a-", "b+", "b-"]])
    assert is_one_sum(edge_and_loop, {"a"}, {"b"}) == 1
    with pytest.raises(RibbonError):
        is_one_sum(B2, {"a"}, {"a", "b"})


def test_two_shared_vertices_is_not_a_one_sum():
    digon = RibbonGraph([["a+", "b+"], ["b-", "a-"]])
    assert is_one_sum(digon, {"a"}, {"b"}) is None


def test_join_split_examples(N2, B2, L):
    assert join_split(N2, 0) == [(frozenset("a"), frozenset("b"))]
    assert join_split(B2, 0) == []
    assert join_split(L, 0) == []


def test_join_split_needs_contiguity():
    # a and c interlace, b sits between their ends: a b a c b c style
    G = RibbonGraph([["a+", "b+", "a-", "c+", "b-", "c-"]])
    assert join_split(G, 0) == []
    H = RibbonGraph([["a+", "a-", "b+", "c+", "b-", "c-"]])
    assert join_split(H, 0) == [(frozenset("a"), frozenset("bc"))]


def test_prime_factorization_examples(N2, B2):
    assert prime_factorization(N2).summands == (frozenset("a"), frozenset("b"))
    assert prime_factorization(B2).summands == (frozenset("ab"),)
    G = join(nested2(), bouquet2().relabel({"a": "c", "b": "d"}))
    assert prime_factorization(G).summands == (frozenset("a"), frozenset("b"), frozenset("cd"))
    with pytest.raises(RibbonError):
        prime_factorization(RibbonGraph([["a+", "a-"], ["b+", "b-"]]))


@given(seeds)
@settings(max_examples=60, deadline=None)
def test_prime_factorization_is_split_order_independent(seed):
    r = random.Random(seed)
    G = random_ribbon_graph(r, r.randint(1, 7), v_max=4)
    fac = prime_factorization(G)
    assert frozenset().union(*fac.summands) == frozenset(G.edges)
    assert sum(len(s) for s in fac.summands) == G.num_edges
    for K in fac.summands:
        assert is_prime(induced(G, K))
    # relabelling changes the order in which splits are found
    ren = {e: f"z{len(G.edges) - i}" for i, e in enumerate(G.edges)}
    H = G.relabel(ren)
    back = sorted(canonical_tuple(induced(H, K), "achiral") for K in prime_factorization(H).summands)
    assert back == sorted(canonical_tuple(induced(G, K), "achiral") for K in fac.summands)


# -- blocks --------------------------------------------------------------------


def test_block_examples(B2, B3, N2):
    assert vertex_blocks(B2, 0).blocks == ((0, 1), (2, 3))
    assert interlacement(B2, 0).edges == ((0, 1),)
    il = interlacement(B3, 0)
    assert len(il.blocks) == 3 and il.edges == ((0, 1), (0, 2), (1, 2))
    assert len(vertex_blocks(N2, 0).blocks) == 2 and interlacement(N2, 0).edges == ()


def path_avoiding(G, v, e1, e2):
    """Is there a walk from edge e1 to edge e2 that never passes through v?"""
    if e1 == e2:
        return True
    adj = {}
    for e in G.edges:
        for x in G.incident_vertices(e):
            adj.setdefault(x, set()).add(e)
    seen, todo = {e1}, deque([e1])
    while todo:
        e = todo.popleft()
        for x in G.incident_vertices(e):
            if x == v:
                continue
            for f in adj[x]:
                if f == e2:
                    return True
                if f not in seen:
                    seen.add(f)
                    todo.append(f)
    return False


@given(seeds)
@settings(max_examples=80, deadline=None)
def test_blocks_match_path_criterion(seed):
    r = random.Random(seed)
    G = random_ribbon_graph(r, r.randint(1, 7), v_max=5)
    for v in range(G.num_vertices):
        block_of = {}
        for i, b in enumerate(vertex_blocks(G, v).blocks):
            for d in b:
                block_of[d] = i
        darts = list(block_of)
        for d1 in darts:
            for d2 in darts:
                same = block_of[d1] == block_of[d2]
                assert same == path_avoiding(G, v, G.label_of(d1), G.label_of(d2))
        il = interlacement(G, v)
        assert all(i < j for i, j in il.edges)


# -- biseparations -----------------------------------------------------------------


def test_candidate_examples(B2, B3, L):
    assert biseparation_candidates_prime(B2) == [frozenset("a"), frozenset("b")]
    assert biseparation_candidates_prime(B3) == []
    assert biseparation_candidates_prime(L) == [frozenset("a"), frozenset()]
    assert biseparation_candidates_prime(RibbonGraph(isolated=1)) == [frozenset()]
    with pytest.raises(NonPrimeError):
        biseparation_candidates_prime(nested2())


def test_verify_examples(B2, B3):
    cert = verify_plane_biseparation(B2, {"a"})
    assert cert.length == 2
    assert [(sorted(s.summand), s.side, s.anchor) for s in cert.sequence] == [
        (["a"], "P", None), (["b"], "Q", 0)]
    assert verify_plane_biseparation(B2, ()) is None
    for mask in range(8):
        assert verify_plane_biseparation(B3, B3.subset(mask)) is None


def test_trivial_certificate(C3):
    cert = verify_plane_biseparation(C3, ())
    assert cert.sequence == () and cert.length == 1
    assert cert.to_json() == {"exists": True, "A": [], "length": 1, "sequence": []}


def test_find_examples(B2, B3, C3):
    A, cert = find_plane_biseparation(B2)
    assert A == frozenset("a") and cert.A == A
    assert find_plane_biseparation(B3) is None
    assert find_plane_biseparation(C3)[0] == frozenset()


def test_enumerate_examples(L, B2, N2):
    assert enumerate_plane_subsets(L) == [frozenset(), frozenset("a")]
    assert enumerate_plane_subsets(B2) == [frozenset("a"), frozenset("b")]
    assert enumerate_plane_subsets(N2) == [frozenset(), frozenset("a"), frozenset("b"), frozenset("ab")]


def test_disconnected_graph_combines_components():
    G = RibbonGraph([["a+", "b+", "a-", "b-"], ["c+", "d+", "c-", "d-"]], isolated=1)
    subsets = enumerate_plane_subsets(G)
    assert subsets == brute_force_plane_subsets(G)
    assert len(subsets) == 4
    A, cert = find_plane_biseparation(G)
    assert is_plane(partial_dual(G, A))
    assert cert.length == 5


def test_certificates_are_one_sum_sequences():
    for G in GRAPHS4:
        for A in enumerate_plane_subsets(G):
            cert = verify_plane_biseparation(G, A)
            anchors = [s.anchor for s in cert.sequence if s.anchor is not None]
            assert len(anchors) == len(set(anchors))
            parts = list(cert.p_components) + list(cert.q_components)
            assert sum(len(p) for p in parts) == G.num_edges


def test_complement_symmetry():
    for G in GRAPHS4:
        got = set(enumerate_plane_subsets(G))
        for A in got:
            assert frozenset(G.edges) - A in got


def test_prime_graphs_have_zero_or_two_subsets():
    for G in GRAPHS4:
        if G.num_edges and is_prime(G):
            got = enumerate_plane_subsets(G)
            assert len(got) in (0, 2)
            if got:
                assert got[0] | got[1] == frozenset(G.edges) and not got[0] & got[1]


@given(seeds)
@settings(max_examples=60, deadline=None)
def test_enumeration_matches_brute_force_up_to_seven_edges(seed):
    r = random.Random(seed)
    G = random_ribbon_graph(r, r.randint(0, 7), v_max=4, connected=r.random() < 0.7)
    assert enumerate_plane_subsets(G) == brute_force_plane_subsets(G)
    found = find_plane_biseparation(G)
    assert (found is None) == (not brute_force_plane_subsets(G))


@given(seeds)
@settings(max_examples=60, deadline=None)
def test_plane_graphs_by_construction(seed):
    r = random.Random(seed)
    G = random_plane_graph(r, r.randint(1, 7))
    subsets = enumerate_plane_subsets(G)
    assert frozenset() in subsets
    assert len(subsets) == 2 ** len(prime_factorization(G).summands)


# -- toggling and join-biseparations -----------------------------------------------


def test_toggle_examples(N2):
    assert toggle(N2, (), {"a"}) == frozenset("a")
    assert toggle(N2, {"a"}, {"a"}) == frozenset()
    assert toggle(N2, toggle(N2, {"b"}, {"a"}), {"a"}) == frozenset("b")
    with pytest.raises(NotASummandError):
        toggle(N2, (), {"a", "b"})


def test_toggle_closure():
    for G in GRAPHS4:
        got = set(enumerate_plane_subsets(G))
        for A in got:
            for K in all_prime_summands(G):
                assert toggle(G, A, K) in got


def test_join_biseparation_examples(N2, C3):
    assert verify_plane_join_biseparation(N2, {"a"})
    assert not verify_plane_join_biseparation(C3, {"a"})
    assert verify_plane_join_biseparation(C3, ())


def test_plane_case_equivalence():
    for G in PLANE4:
        for mask in range(1 << G.num_edges):
            A = G.subset(mask)
            assert verify_plane_join_biseparation(G, A) == (verify_plane_biseparation(G, A) is not None)


# -- moves and equivalence ---------------------------------------------------------


def test_dual_of_join_summand_examples(N2):
    out = dual_of_join_summand(N2, {"b"})
    assert is_plane(out) and out.num_vertices == 2
    T = pendant_loop_triangle()
    assert is_plane(dual_of_join_summand(T, {"d"}))
    assert dual_of_join_summand(dual_of_join_summand(T, {"d"}), {"d"}) == T
    with pytest.raises(NotASummandError):
        dual_of_join_summand(T, {"a"})


def test_sim_examples(C3, L):
    assert sim_equivalent(C3, geometric_dual(C3))
    assert sim_equivalent(L, bridge())
    assert not sim_equivalent(C3, nested2())
    with pytest.raises(NotPlaneError):
        sim_equivalent(bouquet2(), L)


def test_sim_equals_move_reachability():
    by_edges = {}
    for G in PLANE4:
        by_edges.setdefault(G.num_edges, []).append(G)
    for group in by_edges.values():
        for G in group:
            orbit = move_orbit(G)
            for H in group:
                assert sim_equivalent(G, H) == (canonical_tuple(H, "achiral") in orbit)


def test_sim_on_equal_edge_counts():
    path3 = RibbonGraph([["a+"], ["a-", "b+"], ["b-", "c+"], ["c-"]])
    star3 = RibbonGraph([["a+", "b+", "c+"], ["a-"], ["b-"], ["c-"]])
    nested3 = RibbonGraph([["a+", "b+", "c+", "c-", "b-", "a-"]])
    side3 = RibbonGraph([["a+", "a-", "b+", "b-", "c+", "c-"]])
    assert not sim_equivalent(triangle(), path3)
    # only A = {} keeps all four vertices, so two different trees never match
    assert not sim_equivalent(path3, star3)
    assert sim_equivalent(path3, nested3)
    assert sim_equivalent(star3, side3)
    assert not sim_equivalent(path3, side3)


# -- lemmas on sums ----------------------------------------------------------------


@given(seeds)
@settings(max_examples=80, deadline=None)
def test_one_sum_with_plane_side(seed):
    r = random.Random(seed)
    G, P, Q = random_one_sum(r, r.randint(1, 4), r.randint(1, 4))
    GQ = partial_dual(G, Q.edges)
    assert genus(GQ).total == genus(P).total
    # every vertex of P away from the 1-sum vertex is untouched
    shared = is_one_sum(G, P.edges, Q.edges)
    assert shared is not None
    for cyc in P.vertices():
        if G.vertex_of(G.dart(P.label_of(cyc[0]), cyc[0] & 1)) != shared:
            assert [P.dart_name(d) for d in cyc] in GQ.cycles()


@given(seeds, seeds)
@settings(max_examples=60, deadline=None)
def test_join_compatibility(seed, sub):
    r = random.Random(seed)
    G, P, Q, pd, qd = random_join(r, r.randint(1, 4), r.randint(1, 4))
    s = random.Random(sub)
    A = frozenset(e for e in G.edges if s.random() < 0.5)
    A1, A2 = A & set(P.edges), A & set(Q.edges)
    PA, QA = partial_dual(P, A1), partial_dual(Q, A2)
    mask1, mask2 = P.mask(A1), Q.mask(A2)
    # the corners move with the dual: the dart after the join point is twisted on A
    p2 = pd ^ 1 if mask1 >> (pd >> 1) & 1 else pd
    q2 = qd ^ 1 if mask2 >> (qd >> 1) & 1 else qd
    assert partial_dual(G, A) == join(PA, QA, p2, q2)
    assert is_isomorphic(partial_dual(G, A), join(PA, QA, p2, q2), "chiral")


def test_partial_duals_of_plane_graphs_are_planar():
    for G in enumerate_ribbon_graphs(3, 5):
        if enumerate_plane_subsets(G):
            assert min_genus_abstract(*underlying_graph(G)) == 0
