"""1-sums, joins, prime factorisation and plane-biseparations.

Vertices are referred to by index into ``G.vertices()`` and written
``"v<i>"`` in certificates.  Edge subsets are frozensets of labels.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, NamedTuple

from .errors import NonPrimeError, NotASummandError, NotPlaneError, RibbonError
from .ribbon import (
    RibbonGraph,
    canonical_tuple,
    components,
    genus,
    geometric_dual,
    induced,
    is_plane,
    label_key,
    partial_dual,
)


class BlockPartition(NamedTuple):
    vertex: int
    blocks: tuple  # tuples of darts, ordered by least dart


class InterlacementGraph(NamedTuple):
    vertex: int
    blocks: tuple
    edges: tuple  # pairs (i, j), i < j, indexing ``blocks``


class PrimeFactorization(NamedTuple):
    summands: tuple  # frozensets of edge labels
    join_vertices: tuple  # vertex indices where a split was made, in split order


class Step(NamedTuple):
    summand: frozenset
    side: str
    anchor: int | None


class BiseparationCertificate(NamedTuple):
    A: frozenset
    p_components: tuple
    q_components: tuple
    sequence: tuple
    length: int

    def to_json(self) -> dict:
        return {
            "exists": True,
            "A": sort_labels(self.A),
            "length": self.length,
            "sequence": [
                {"summand": sort_labels(s.summand), "side": s.side,
                 "anchor": None if s.anchor is None else f"v{s.anchor}"}
                for s in self.sequence
            ],
        }


def sort_labels(labels: Iterable[str]) -> list[str]:
    return sorted(labels, key=label_key)


def subset_key(G: RibbonGraph, A) -> tuple:
    return (len(A), G.mask(A))


def _edge_vertices(G: RibbonGraph, labels) -> set[int]:
    out = set()
    for lab in labels:
        out.update(G.incident_vertices(lab))
    return out


# -- 1-sums and joins ----------------------------------------------------


def is_one_sum(G: RibbonGraph, P_edges: Iterable[str], Q_edges: Iterable[str]) -> int | None:
    """The vertex ``v`` with ``G = P (+) Q`` and ``P & Q = {v}``, or ``None``."""
    P, Q = G.edge_set(P_edges), G.edge_set(Q_edges)
    if P & Q or (P | Q) != set(G.edges):
        raise RibbonError("P and Q must partition the edge set")
    if not P or not Q:
        raise RibbonError("both summands need at least one edge")
    shared = _edge_vertices(G, P) & _edge_vertices(G, Q)
    return next(iter(shared)) if len(shared) == 1 else None


def _branches(G: RibbonGraph, v: int):
    """Map each dart at ``v`` to a block key, and each key to its edges.

    A loop at ``v`` is a block by itself; any other edge is keyed by the
    component of ``G - v`` holding its far end.
    """
    parent = list(range(G.num_vertices))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for lab in G.edges:
        a, b = G.incident_vertices(lab)
        if v not in (a, b):
            parent[find(a)] = find(b)
    key_of = {}
    for d in G.vertices()[v]:
        far = G.vertex_of(d ^ 1)
        key_of[d] = ("loop", d >> 1) if far == v else ("comp", find(far))
    edges_of: dict = {}
    for lab in G.edges:
        a, b = G.incident_vertices(lab)
        if a == v and b == v:
            key = ("loop", G.edge_index(lab))
        elif a == v or b == v:
            key = ("comp", find(b if a == v else a))
        else:
            key = ("comp", find(a))
            if not any(k == key for k in key_of.values()):
                continue  # another component of G
        edges_of.setdefault(key, set()).add(lab)
    return key_of, edges_of


def vertex_blocks(G: RibbonGraph, v: int) -> BlockPartition:
    key_of, _ = _branches(G, v)
    groups: dict = {}
    for d in G.vertices()[v]:
        groups.setdefault(key_of[d], []).append(d)
    blocks = sorted((tuple(sorted(ds)) for ds in groups.values()), key=lambda b: b[0])
    return BlockPartition(v, tuple(blocks))


def _runs(cycle, members) -> int:
    seq = [members[d] for d in cycle if d in members]
    return sum(1 for i in range(len(seq)) if seq[i] != seq[i - 1])


def interlacement(G: RibbonGraph, v: int) -> InterlacementGraph:
    """Blocks at ``v`` and the pairs met in the order ``x y x y`` around ``v``."""
    blocks = vertex_blocks(G, v).blocks
    cycle = G.vertices()[v]
    edges = []
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            members = {d: 0 for d in blocks[i]}
            members.update({d: 1 for d in blocks[j]})
            if _runs(cycle, members) >= 4:
                edges.append((i, j))
    return InterlacementGraph(v, blocks, tuple(edges))


def join_split(G: RibbonGraph, v: int) -> list[tuple[frozenset, frozenset]]:
    """Every way to write ``v``'s component as ``P v Q`` joined at ``v``.

    ``P`` is the side holding the least edge; the list is sorted.
    """
    cycle = G.vertices()[v]
    n = len(cycle)
    key_of, edges_of = _branches(G, v)
    size = {}
    for d in cycle:
        size[key_of[d]] = size.get(key_of[d], 0) + 1
    if len(size) < 2:
        return []
    allE = frozenset().union(*edges_of.values())
    found = set()
    for start in range(n):
        count: dict = {}
        for length in range(1, n):
            k = key_of[cycle[(start + length - 1) % n]]
            count[k] = count.get(k, 0) + 1
            if all(count[x] == size[x] for x in count):
                side = frozenset().union(*(edges_of[x] for x in count))
                found.add(frozenset((side, allE - side)))
    out = []
    for pair in found:
        a, b = sorted(pair, key=lambda s: min(G.edge_index(x) for x in s))
        out.append((a, b))
    out.sort(key=lambda ab: (G.mask(ab[0]), G.mask(ab[1])))
    return out


def join_vertices(G: RibbonGraph) -> list[int]:
    return [v for v in range(G.num_vertices) if join_split(G, v)]


def _connected(G: RibbonGraph) -> bool:
    return len(components(G)) <= 1


def prime_factorization(G: RibbonGraph) -> PrimeFactorization:
    """Split at joins until every summand is prime.

    Summands are sorted by least edge.  The edgeless one-vertex graph is
    its own (degenerate) prime with no edges.
    """
    if not _connected(G):
        raise RibbonError("prime_factorization needs a connected graph; factor each component")
    if G.num_edges == 0:
        return PrimeFactorization((frozenset(),), ())
    primes, where = [], []
    todo = [frozenset(G.edges)]
    while todo:
        part = todo.pop()
        H = induced(G, part)
        for hv in range(H.num_vertices):
            splits = join_split(H, hv)
            if splits:
                P, Q = splits[0]
                todo.extend([Q, P])
                d = H.vertices()[hv][0]
                where.append(G.vertex_of(G.dart(H.label_of(d), d & 1)))
                break
        else:
            primes.append(part)
    primes.sort(key=lambda s: min(G.edge_index(x) for x in s))
    return PrimeFactorization(tuple(primes), tuple(where))


def all_prime_summands(G: RibbonGraph) -> list[frozenset]:
    out = []
    for comp in components(G):
        if comp.edges:
            out.extend(prime_factorization(induced(G, comp.edges)).summands)
    return out


def is_prime(G: RibbonGraph) -> bool:
    return _connected(G) and not join_vertices(G)


# -- plane-biseparations --------------------------------------------------


def verify_plane_biseparation(G: RibbonGraph, A: Iterable[str]) -> BiseparationCertificate | None:
    """Check directly whether ``A`` defines a plane-biseparation of ``G``.

    Per component: if ``A`` misses it or covers it, the component must be
    plane.  Otherwise ``G|A`` and ``G|A^c`` must be plane and their
    components, linked through shared vertices, must form a tree; a tree
    is exactly a 1-sum sequence with every 1-sum at its own vertex.
    """
    A = G.edge_set(A)
    gen = genus(G).components
    p_all, q_all, steps = [], [], []
    length = 0
    for ci, comp in enumerate(components(G)):
        EC = frozenset(comp.edges)
        AC = A & EC
        if not AC or AC == EC:
            if gen[ci]:
                return None
            if EC:
                (p_all if AC else q_all).append(EC)
            length += 1
            continue
        P, Q = induced(G, AC), induced(G, EC - AC)
        if not (is_plane(P) and is_plane(Q)):
            return None
        pieces = []
        for side, H in (("P", P), ("Q", Q)):
            for hc in components(H):
                verts = {G.vertex_of(G.dart(lab, k)) for lab in hc.edges for k in (0, 1)}
                pieces.append((side, frozenset(hc.edges), verts))
        owner: dict = {}
        for i, (_, _, verts) in enumerate(pieces):
            for x in verts:
                owner.setdefault(x, []).append(i)
        links = {x: ids for x, ids in owner.items() if len(ids) == 2}
        if len(links) != len(pieces) - 1:
            return None
        adj: dict = {i: [] for i in range(len(pieces))}
        for x, (i, j) in sorted(links.items()):
            adj[i].append((j, x))
            adj[j].append((i, x))
        root = min(range(len(pieces)), key=lambda i: min(G.edge_index(e) for e in pieces[i][1]))
        seen = {root}
        stack = [(root, None)]
        order = []
        while stack:
            i, anchor = stack.pop()
            order.append(Step(pieces[i][1], pieces[i][0], anchor))
            for j, x in reversed(adj[i]):
                if j not in seen:
                    seen.add(j)
                    stack.append((j, x))
        if len(order) != len(pieces):
            return None
        steps.extend(order)
        length += len(order)
        p_all.extend(p[1] for p in pieces if p[0] == "P")
        q_all.extend(p[1] for p in pieces if p[0] == "Q")
    return BiseparationCertificate(A, tuple(p_all), tuple(q_all), tuple(steps), length)


def biseparation_candidates_prime(G: RibbonGraph) -> list[frozenset]:
    """The plane-defining subsets of a prime graph: none, or ``A`` and ``A^c``.

    Edges in one block at a vertex go to the same side, edges in
    interlacing blocks to opposite sides.  The least edge is seeded into
    ``A``; every solution of the constraints is then checked against the
    definition, since the constraints alone do not imply planarity.
    """
    if not _connected(G):
        raise NonPrimeError("graph is not connected")
    if G.num_edges == 0:
        return [frozenset()]
    if join_vertices(G):
        raise NonPrimeError("graph is a join")
    adj: dict[int, list] = {i: [] for i in range(G.num_edges)}

    def link(x, y, parity):
        adj[x].append((y, parity))
        adj[y].append((x, parity))

    for v in range(G.num_vertices):
        il = interlacement(G, v)
        reps = []
        for block in il.blocks:
            es = [d >> 1 for d in block]
            for e in es[1:]:
                link(es[0], e, 0)
            reps.append(es[0])
        for i, j in il.edges:
            link(reps[i], reps[j], 1)
    side = [-1] * G.num_edges
    roots = []
    for r in range(G.num_edges):
        if side[r] >= 0:
            continue
        roots.append(r)
        side[r] = 0
        stack = [r]
        while stack:
            x = stack.pop()
            for y, parity in adj[x]:
                want = side[x] ^ parity
                if side[y] < 0:
                    side[y] = want
                    stack.append(y)
                elif side[y] != want:
                    return []
    # flip each constraint class after the first; normally there is just one
    cls = _classes(adj, G.num_edges)
    found = []
    for flips in product((0, 1), repeat=len(roots) - 1):
        flip_of = dict(zip(roots, (0,) + flips))
        A = frozenset(G.edges[e] for e in range(G.num_edges) if side[e] ^ flip_of[cls[e]] == 0)
        for cand in (A, frozenset(G.edges) - A):
            if cand not in found and verify_plane_biseparation(G, cand) is not None:
                found.append(cand)
    found.sort(key=lambda s: (0 if G.edges[0] in s else 1, G.mask(s)))
    return found


def _classes(adj, n):
    cls = [-1] * n
    for r in range(n):
        if cls[r] >= 0:
            continue
        cls[r] = r
        stack = [r]
        while stack:
            x = stack.pop()
            for y, _ in adj[x]:
                if cls[y] < 0:
                    cls[y] = r
                    stack.append(y)
    return cls


def _prime_choices(G: RibbonGraph):
    """Per prime summand over all components: its list of plane-defining subsets."""
    out = []
    for comp in components(G):
        if not comp.edges:
            continue
        C = induced(G, comp.edges)
        for K in prime_factorization(C).summands:
            out.append(biseparation_candidates_prime(induced(C, K)))
    return out


def find_plane_biseparation(G: RibbonGraph):
    """A plane-defining subset with its certificate, or ``None``.

    Plane graphs get ``A = {}``.  Otherwise each prime summand contributes
    its candidate holding its least edge (or nothing if it is plane).
    """
    if is_plane(G):
        return frozenset(), verify_plane_biseparation(G, ())
    A = set()
    for comp in components(G):
        if not comp.edges:
            continue
        C = induced(G, comp.edges)
        if is_plane(C):
            continue
        for K in prime_factorization(C).summands:
            H = induced(C, K)
            if is_plane(H):
                continue
            cands = biseparation_candidates_prime(H)
            if not cands:
                return None
            A |= cands[0]
    A = frozenset(A)
    cert = verify_plane_biseparation(G, A)
    return None if cert is None else (A, cert)


def enumerate_plane_subsets(G: RibbonGraph) -> list[frozenset]:
    """All ``A`` with ``G^A`` plane, sorted by size then label order."""
    choices = _prime_choices(G)
    if any(not c for c in choices):
        return []
    out = {frozenset().union(*pick) for pick in product(*choices)}
    return sorted(out, key=lambda s: subset_key(G, s))


def toggle(G: RibbonGraph, A: Iterable[str], K: Iterable[str]) -> frozenset:
    """``A`` symmetric-difference the edges of the prime summand ``K``."""
    A, K = G.edge_set(A), G.edge_set(K)
    if K not in all_prime_summands(G):
        raise NotASummandError(f"{sort_labels(K)} is not a prime join-summand")
    return A ^ K


def verify_plane_join_biseparation(G: RibbonGraph, A: Iterable[str]) -> bool:
    """Every prime summand is plane and ``A`` is a union of prime summands."""
    A = G.edge_set(A)
    if not is_plane(G):
        return False
    primes = all_prime_summands(G)
    return all(K <= A or not (K & A) for K in primes)


def join_summands(G: RibbonGraph) -> list[frozenset]:
    """Edge sets ``K`` with ``G`` (or its component) equal to ``H v K`` at some vertex."""
    out = set()
    for v in range(G.num_vertices):
        for P, Q in join_split(G, v):
            out.update((P, Q))
    return sorted(out, key=lambda s: subset_key(G, s))


def dual_of_join_summand(G: RibbonGraph, K: Iterable[str]) -> RibbonGraph:
    """``H v K*`` for ``G = H v K``, computed as ``G^{E(K)}``."""
    K = G.edge_set(K)
    if K not in join_summands(G):
        raise NotASummandError(f"{sort_labels(K)} is not a join-summand")
    return partial_dual(G, K)


def sim_equivalent(G: RibbonGraph, H: RibbonGraph) -> bool:
    """Whether plane ``G`` and ``H`` are partial duals of one another."""
    if not (is_plane(G) and is_plane(H)):
        raise NotPlaneError("both graphs must be plane")
    if G.num_edges != H.num_edges:
        return False
    target = canonical_tuple(H, "achiral")
    return any(canonical_tuple(partial_dual(G, A), "achiral") == target
               for A in enumerate_plane_subsets(G))


def move_orbit(G: RibbonGraph, limit: int = 100000) -> set:
    """Achiral codes reachable from ``G`` by duals of join-summands and ``G*``."""
    seen = {canonical_tuple(G, "achiral")}
    todo = [G]
    while todo:
        X = todo.pop()
        nxt = [geometric_dual(X)] + [partial_dual(X, K) for K in join_summands(X)]
        for Y in nxt:
            c = canonical_tuple(Y, "achiral")
            if c not in seen:
                if len(seen) >= limit:
                    raise RibbonError("orbit limit reached")
                seen.add(c)
                todo.append(Y)
    return seen


__all__ = [
    "BlockPartition", "InterlacementGraph", "PrimeFactorization", "Step",
    "BiseparationCertificate", "is_one_sum", "vertex_blocks", "interlacement",
    "join_split", "join_vertices", "prime_factorization", "all_prime_summands",
    "is_prime", "verify_plane_biseparation", "biseparation_candidates_prime",
    "find_plane_biseparation", "enumerate_plane_subsets", "toggle",
    "verify_plane_join_biseparation", "join_summands", "dual_of_join_summand",
    "sim_equivalent", "move_orbit",
]
