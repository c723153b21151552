"""Brute-force references and instance generators for small ribbon graphs.

Nothing here is clever: the point is to be independent of the structural
code in ``decomp`` and of the canonical codes in ``canon``.
"""

from __future__ import annotations

import itertools
import json
import random
from pathlib import Path
from typing import Iterator, Sequence

from .errors import BoundsError
from .ribbon import (
    RibbonGraph,
    canonical_tuple,
    component_graphs,
    disjoint_union,
    genus,
    is_plane,
    join,
    one_sum,
    partial_dual,
)

LETTERS = "abcdefghijklmnopqrstuvwxyz"


def edge_label(i: int) -> str:
    return LETTERS[i] if i < 26 else f"e{i}"


def _graph(cycles: list[list[int]], n_edges: int, isolated: int = 0,
           signs=None) -> RibbonGraph:
    """Build from dart cycles where edge ``i`` owns darts ``2i, 2i+1``."""
    sigma = [0] * (2 * n_edges)
    for cyc in cycles:
        for k, d in enumerate(cyc):
            sigma[d] = cyc[(k + 1) % len(cyc)]
    labels = [edge_label(i) for i in range(n_edges)]
    g = RibbonGraph._make(labels, sigma, None, isolated)
    if signs is not None:
        g = g.with_signs(dict(zip(labels, signs)))
    return g


# -- plane subsets --------------------------------------------------------


def brute_force_plane_subsets(G: RibbonGraph) -> list[frozenset]:
    """Every ``A`` with ``G^A`` plane, found by trying all ``2^|E|`` subsets."""
    if G.num_edges > 20:
        raise BoundsError("at most 20 edges")
    out = []
    for mask in range(1 << G.num_edges):
        A = G.subset(mask)
        if is_plane(partial_dual(G, A)):
            out.append(A)
    return sorted(out, key=lambda s: (len(s), G.mask(s)))


# -- exhaustive enumeration ----------------------------------------------


def _slots(cycles):
    """Insertion points: after any dart, or into an empty vertex."""
    out = []
    for vi, cyc in enumerate(cycles):
        if not cyc:
            out.append((vi, 0))
        for k in range(len(cyc)):
            out.append((vi, k + 1))
    return out


def _insert(cycles, slot, dart):
    vi, pos = slot
    new = [list(c) for c in cycles]
    new[vi].insert(pos, dart)
    return new


def _children(cycles, n_edges, v_max):
    x, y = 2 * n_edges, 2 * n_edges + 1
    for s1 in _slots(cycles):
        c1 = _insert(cycles, s1, x)
        for s2 in _slots(c1):
            yield _insert(c1, s2, y)
        if len(cycles) < v_max:
            yield c1 + [[y]]


def enumerate_ribbon_graphs(v_max: int, e_max: int, connected: bool = True,
                            v_min: int = 1, e_min: int = 0) -> list[RibbonGraph]:
    """All ribbon graphs within the bounds, one per achiral isomorphism class.

    Connected graphs are grown from a single vertex by adding either a new
    edge between two corners or a pendant edge to a new vertex; every
    connected map arises this way since deleting a non-bridge or a pendant
    edge keeps it connected.  Disconnected graphs are multisets of
    connected ones.  Output order: vertices, edges, then code.
    """
    if v_max > 4 or e_max > 5 or v_max < 1 or e_max < 0:
        raise BoundsError("exhaustive mode needs 1 <= v_max <= 4 and 0 <= e_max <= 5")
    conn = _connected_classes(v_max, e_max)
    if connected:
        pool = conn
    else:
        pool = {}
        items = sorted(conn.items())
        for r in range(1, v_max + 1):
            for combo in itertools.combinations_with_replacement(range(len(items)), r):
                parts = [items[i][1] for i in combo]
                v = sum(p.num_vertices for p in parts)
                e = sum(p.num_edges for p in parts)
                if v > v_max or e > e_max:
                    continue
                g = _union_relabelled(parts)
                pool.setdefault(canonical_tuple(g, "achiral"), g)
    out = [g for g in pool.values() if g.num_vertices >= v_min and g.num_edges >= e_min]
    out.sort(key=lambda g: (g.num_vertices, g.num_edges, canonical_tuple(g, "achiral")))
    return out


_CONNECTED_CACHE: dict = {}


def _connected_classes(v_max, e_max) -> dict:
    key = (v_max, e_max)
    if key in _CONNECTED_CACHE:
        return _CONNECTED_CACHE[key]
    level = {canonical_tuple(RibbonGraph(isolated=1), "achiral"): [[]]}
    found = {k: RibbonGraph(isolated=1) for k in level}
    for e in range(e_max):
        nxt = {}
        for cycles in level.values():
            for child in _children(cycles, e, v_max):
                g = _graph(child, e + 1)
                c = canonical_tuple(g, "achiral")
                if c not in nxt:
                    nxt[c] = child
                    found[c] = g
        level = nxt
    _CONNECTED_CACHE[key] = found
    return found


def _union_relabelled(parts: Sequence[RibbonGraph]) -> RibbonGraph:
    shifted, offset = [], 0
    for p in parts:
        shifted.append(p.relabel({lab: edge_label(offset + i) for i, lab in enumerate(p.edges)}))
        offset += p.num_edges
    return disjoint_union(*shifted)


def signed_variants(G: RibbonGraph) -> Iterator[RibbonGraph]:
    for signs in itertools.product("+-", repeat=G.num_edges):
        yield G.with_signs(dict(zip(G.edges, signs)))


# -- abstract graphs -------------------------------------------------------


def rotation_systems(n_vertices: int, edges: Sequence[tuple[int, int]]) -> Iterator[RibbonGraph]:
    """Every rotation system of an abstract multigraph (vertex ids ``0..n-1``).

    Edge ``i`` runs from ``edges[i][0]`` (dart ``2i``) to ``edges[i][1]``.
    Isolated abstract vertices become isolated vertices.
    """
    at: list[list[int]] = [[] for _ in range(n_vertices)]
    for i, (a, b) in enumerate(edges):
        at[a].append(2 * i)
        at[b].append(2 * i + 1)
    orders = []
    for darts in at:
        if len(darts) <= 2:
            orders.append([darts])
        else:
            first, rest = darts[0], darts[1:]
            orders.append([[first, *p] for p in itertools.permutations(rest)])
    isolated = sum(1 for d in at if not d)
    for choice in itertools.product(*orders):
        yield _graph([c for c in choice if c], len(edges), isolated)


def min_genus_abstract(n_vertices: int, edges: Sequence[tuple[int, int]]) -> int:
    """Least total genus over all rotation systems of the abstract graph."""
    if n_vertices > 6 or len(edges) > 10:
        raise BoundsError("at most 6 vertices and 10 edges")
    best = None
    for g in rotation_systems(n_vertices, edges):
        t = genus(g).total
        if best is None or t < best:
            best = t
            if best == 0:
                break
    return 0 if best is None else best


def underlying_graph(G: RibbonGraph) -> tuple[int, list[tuple[int, int]]]:
    return G.num_vertices, [G.incident_vertices(lab) for lab in G.edges]


def complete_graph(n: int) -> tuple[int, list]:
    return n, list(itertools.combinations(range(n), 2))


def complete_bipartite(m: int, n: int) -> tuple[int, list]:
    return m + n, [(i, m + j) for i in range(m) for j in range(n)]


# -- isomorphism by search -------------------------------------------------


def _connected_iso(G, H, reverse: bool) -> bool:
    if G.num_darts != H.num_darts:
        return False
    hs = H.rotation
    if reverse:
        inv = [0] * len(hs)
        for d, s in enumerate(hs):
            inv[s] = d
        hs = inv
    gsg, hsg = G.sign_values(), H.sign_values()
    if G.num_darts == 0:
        return True
    for target in range(H.num_darts):
        f = {0: target}
        stack = [0]
        ok = True
        while stack and ok:
            d = stack.pop()
            for gd, hd in ((G.rotation[d], hs[f[d]]), (d ^ 1, f[d] ^ 1)):
                if gd in f:
                    if f[gd] != hd:
                        ok = False
                        break
                else:
                    f[gd] = hd
                    stack.append(gd)
        if not ok or len(set(f.values())) != len(f):
            continue
        if gsg is not None and any(gsg[d >> 1] != hsg[f[d] >> 1] for d in f):
            continue
        return True
    return False


def brute_force_iso(G: RibbonGraph, H: RibbonGraph, mode: str = "achiral") -> bool:
    """Search for a dart bijection respecting rotation, edge pairing and signs.

    In ``achiral`` mode each component may also reverse its rotation.
    """
    if G.num_darts > 24 or H.num_darts > 24:
        raise BoundsError("at most 24 darts")
    if G.is_signed != H.is_signed or G.num_darts != H.num_darts:
        return False
    if G.num_vertices != H.num_vertices:
        return False
    gc = [c for c in component_graphs(G) if c.num_edges]
    hc = [c for c in component_graphs(H) if c.num_edges]
    if len(gc) != len(hc):
        return False

    def same(a, b):
        return _connected_iso(a, b, False) or (mode == "achiral" and _connected_iso(a, b, True))

    used = [False] * len(hc)

    def match(i):
        if i == len(gc):
            return True
        for j, h in enumerate(hc):
            if not used[j] and same(gc[i], h):
                used[j] = True
                if match(i + 1):
                    return True
                used[j] = False
        return False

    return match(0)


# -- random generators ------------------------------------------------------


def random_ribbon_graph(rng: random.Random, n_edges: int, v_max: int = 4,
                        connected: bool = True, signed: bool = False) -> RibbonGraph:
    """Random map grown by random corner-to-corner and pendant edges."""
    pieces = 1 if connected else rng.randint(1, 2)
    graphs = []
    counts = [n_edges] if pieces == 1 else _split_count(rng, n_edges)
    for m in counts:
        cycles: list[list[int]] = [[]]
        for e in range(m):
            cycles = _random_child(rng, cycles, e, v_max)
        graphs.append(_graph(cycles, m))
    g = _union_relabelled(graphs) if len(graphs) > 1 else graphs[0]
    if signed:
        g = g.with_signs({lab: rng.choice("+-") for lab in g.edges})
    return g


def _split_count(rng, n):
    k = rng.randint(0, n)
    return [k, n - k]


def _random_child(rng, cycles, e, v_max, plane=False):
    x, y = 2 * e, 2 * e + 1
    while True:
        s1 = rng.choice(_slots(cycles))
        c1 = _insert(cycles, s1, x)
        if len(cycles) < v_max and rng.random() < 0.35:
            return c1 + [[y]]
        c2 = _insert(c1, rng.choice(_slots(c1)), y)
        if not plane or is_plane(_graph(c2, e + 1)):
            return c2


def random_plane_graph(rng: random.Random, n_edges: int, v_max: int = 6,
                       signed: bool = False) -> RibbonGraph:
    """Random connected plane map; chords are redrawn until they keep genus 0."""
    cycles: list[list[int]] = [[]]
    for e in range(n_edges):
        cycles = _random_child(rng, cycles, e, v_max, plane=True)
    g = _graph(cycles, n_edges)
    if signed:
        g = g.with_signs({lab: rng.choice("+-") for lab in g.edges})
    return g


def _offset(G: RibbonGraph, start: int) -> RibbonGraph:
    return G.relabel({lab: edge_label(start + i) for i, lab in enumerate(G.edges)})


def random_one_sum(rng: random.Random, p_edges: int, q_edges: int, v_max: int = 3):
    """``(G, P, Q)`` with ``G`` a random 1-sum of ``P`` and plane ``Q``.

    The merged vertex interleaves the two rotations at random.
    """
    P = random_ribbon_graph(rng, p_edges, v_max)
    Q = _offset(random_plane_graph(rng, q_edges, v_max), p_edges)
    pd = rng.randrange(P.num_darts)
    qd = rng.randrange(Q.num_darts)
    np_ = len(P.vertices()[P.vertex_of(pd)])
    nq = len(Q.vertices()[Q.vertex_of(qd)])
    pattern = ["P"] * np_ + ["Q"] * nq
    rng.shuffle(pattern)
    return one_sum(P, Q, pd, qd, "".join(pattern)), P, Q


def random_join(rng: random.Random, p_edges: int, q_edges: int, v_max: int = 3):
    """``(G, P, Q, p_dart, q_dart)`` with ``G = P v Q`` at random corners."""
    P = random_ribbon_graph(rng, p_edges, v_max)
    Q = _offset(random_ribbon_graph(rng, q_edges, v_max), p_edges)
    pd = rng.randrange(P.num_darts)
    qd = rng.randrange(Q.num_darts)
    return join(P, Q, pd, qd), P, Q, pd, qd


# -- agreement suite ---------------------------------------------------------


def verify(max_edges: int = 4, v_max: int = 3, manifest: str | Path | None = None,
           seed: int = 20240611, samples: int = 0) -> dict:
    """Compare structural answers with brute force on every small instance.

    Checks, for each connected graph within the bounds: the enumerated
    plane-defining subsets equal the brute-force ones, a witness is found
    exactly when that set is non-empty, and achiral codes agree with the
    isomorphism search against a relabelled mirror.  ``samples`` extra
    random graphs with ``max_edges + 1`` edges are drawn from ``seed``.
    """
    from .decomp import enumerate_plane_subsets, find_plane_biseparation

    graphs = enumerate_ribbon_graphs(v_max, max_edges, connected=True)
    rng = random.Random(seed)
    extra = [random_ribbon_graph(rng, max_edges + 1, v_max) for _ in range(samples)]
    mismatches = []
    for g in graphs + extra:
        brute = brute_force_plane_subsets(g)
        fast = enumerate_plane_subsets(g)
        found = find_plane_biseparation(g)
        if brute != fast or (found is None) != (not brute):
            mismatches.append(g.to_json())
            continue
        if found is not None and not is_plane(partial_dual(g, found[0])):
            mismatches.append(g.to_json())
        if not brute_force_iso(g, g.mirror(), "achiral"):
            mismatches.append(g.to_json())
    report = {
        "max_edges": max_edges,
        "max_vertices": v_max,
        "seed": seed,
        "exhaustive_instances": len(graphs),
        "sampled_instances": len(extra),
        "mismatches": len(mismatches),
        "failing": mismatches[:10],
    }
    if manifest is not None:
        Path(manifest).write_text(json.dumps(report, indent=2, sort_keys=True) + "\n")
    return report
