"""Orientable ribbon graphs stored as rotation systems.

Every edge ``e`` (the ``i``-th label in sorted order) owns the two darts
``2*i`` and ``2*i + 1``; the edge involution is therefore ``d ^ 1`` and is
never stored.  The rotation ``sigma`` sends a dart to the next dart
counter-clockwise around its vertex.  In the JSON and text forms the two
darts of ``e`` are written ``e+`` and ``e-``.

Conventions fixed here and relied upon everywhere else:

* boundary walks of the spanning subgraph ``(V, A)`` are the orbits of
  ``d -> sigma(alpha_A(d))`` where ``alpha_A`` swaps the darts of edges in
  ``A`` only; the partial dual keeps every dart and uses those walks as its
  rotation, so ``G^{}`` is ``G`` dart for dart and ``(G^A)^B == G^(A ^ B)``;
* the geometric dual is the dual drawn on the same oriented surface
  (rotation ``sigma^-1 . alpha``).  It agrees with ``partial_dual(G, E)`` up to
  an orientation reversing homeomorphism, which is the equivalence ribbon
  graphs are taken up to.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Sequence

from . import canon
from .errors import (
    MalformedPresentationError,
    NonOrientableError,
    ParseError,
    RibbonError,
    UnknownEdgeError,
)

_TOKEN = re.compile(r"^([A-Za-z0-9_]+)([+-])$")
_LABEL = re.compile(r"^[A-Za-z0-9_]+$")


def label_key(label: str):
    """Sort key: all-digit labels numerically, then the rest lexicographically."""
    if label.isdigit():
        return (0, int(label), label)
    return (1, 0, label)


def _sign_value(s) -> int:
    if s in ("+", 1, "+1"):
        return 1
    if s in ("-", -1, "-1"):
        return -1
    raise ParseError(f"bad sign {s!r}")


def _sign_char(v: int) -> str:
    return "+" if v > 0 else "-"


class Arrow(NamedTuple):
    """A marking arrow: edge label, direction along its circle, and which end.

    ``end`` (0 or 1) names the half-edge; ``None`` lets :func:`from_arrows`
    number the two arrows of a label in order of appearance.
    """

    label: str
    forward: bool = True
    end: int | None = None


@dataclass(frozen=True)
class ArrowPresentation:
    circles: tuple
    signs: Mapping[str, str] | None = field(default=None, compare=True)

    def labels(self) -> list[str]:
        return sorted({a.label for c in self.circles for a in c}, key=label_key)


class BoundaryStep(NamedTuple):
    """One arc on a boundary walk.

    ``kind`` is ``"arc"`` when the walk crosses the attaching arc of dart
    ``dart`` (its edge is outside the subgraph) and ``"side"`` when it runs
    along the long side of an edge in the subgraph that starts at ``dart``.
    """

    dart: int
    kind: str


class Component(NamedTuple):
    vertices: tuple
    edges: tuple


class GenusReport(NamedTuple):
    components: tuple
    total: int


class RibbonGraph:
    """An orientable ribbon graph (combinatorial map) with optional edge signs.

    Build one from vertex cycles of half-edge tokens::

        >>> B2 = RibbonGraph([["a+", "b+", "a-", "b-"]])
        >>> genus(B2).total
        1

    Tokens may be ``"a+"`` strings or ``(label, end)`` pairs.  ``isolated``
    adds vertices without incident edges; empty cycles do the same.
    """

    __slots__ = ("_labels", "_index", "_sigma", "_signs", "_isolated", "_cache")

    def __init__(self, cycles: Iterable[Sequence] = (), signs: Mapping | None = None,
                 isolated: int = 0):
        cycles = [list(c) for c in cycles]
        isolated += sum(1 for c in cycles if not c)
        tokens = [_parse_token(t) for c in cycles for t in c]
        seen = set()
        for t in tokens:
            if t in seen:
                raise MalformedPresentationError(f"half-edge {t[0]}{'+-'[t[1]]} occurs twice")
            seen.add(t)
        labels = sorted({t[0] for t in tokens}, key=label_key)
        for lab in labels:
            if (lab, 0) not in seen or (lab, 1) not in seen:
                raise MalformedPresentationError(f"label {lab!r} does not occur exactly twice")
        index = {lab: i for i, lab in enumerate(labels)}
        sigma = [0] * (2 * len(labels))
        for c in cycles:
            ds = [2 * index[lab] + end for lab, end in map(_parse_token, c)]
            for k, d in enumerate(ds):
                sigma[d] = ds[(k + 1) % len(ds)]
        self._setup(tuple(labels), tuple(sigma), _normalise_signs(signs, labels), isolated)

    def _setup(self, labels, sigma, signs, isolated):
        self._labels = labels
        self._index = {lab: i for i, lab in enumerate(labels)}
        self._sigma = sigma
        self._signs = signs
        self._isolated = isolated
        self._cache = {}

    @classmethod
    def _make(cls, labels, sigma, signs=None, isolated=0) -> "RibbonGraph":
        g = cls.__new__(cls)
        g._setup(tuple(labels), tuple(sigma), None if signs is None else tuple(signs), isolated)
        return g

    # -- basic accessors -------------------------------------------------

    @property
    def edges(self) -> tuple:
        return self._labels

    @property
    def rotation(self) -> tuple:
        return self._sigma

    @property
    def num_edges(self) -> int:
        return len(self._labels)

    @property
    def num_darts(self) -> int:
        return len(self._sigma)

    @property
    def isolated(self) -> int:
        return self._isolated

    @property
    def is_signed(self) -> bool:
        return self._signs is not None

    @property
    def signs(self) -> dict | None:
        if self._signs is None:
            return None
        return {lab: _sign_char(s) for lab, s in zip(self._labels, self._signs)}

    def sign_values(self):
        return self._signs

    def edge_index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownEdgeError(f"{label!r} is not an edge") from None

    def dart(self, label: str, end: int = 0) -> int:
        return 2 * self.edge_index(label) + end

    def label_of(self, d: int) -> str:
        return self._labels[d >> 1]

    def dart_name(self, d: int) -> str:
        return self._labels[d >> 1] + "+-"[d & 1]

    def vertices(self) -> tuple:
        """Vertex cycles (each starting at its least dart) then empty isolated ones."""
        if "vertices" not in self._cache:
            self._cache["vertices"] = tuple(_cycles(self._sigma)) + ((),) * self._isolated
        return self._cache["vertices"]

    @property
    def num_vertices(self) -> int:
        return len(self.vertices())

    def vertex_of(self, d: int) -> int:
        if "vertex_of" not in self._cache:
            vo = [0] * self.num_darts
            for i, cyc in enumerate(self.vertices()):
                for x in cyc:
                    vo[x] = i
            self._cache["vertex_of"] = vo
        return self._cache["vertex_of"][d]

    def vertex_name(self, i: int) -> str:
        return f"v{i}"

    def incident_vertices(self, label: str) -> tuple:
        d = self.dart(label)
        return self.vertex_of(d), self.vertex_of(d ^ 1)

    def mask(self, labels: Iterable[str]) -> int:
        """Bitmask of an edge subset (bit ``i`` for the ``i``-th sorted label)."""
        m = 0
        for lab in labels:
            m |= 1 << self.edge_index(lab)
        return m

    def subset(self, mask: int) -> frozenset:
        return frozenset(lab for i, lab in enumerate(self._labels) if mask >> i & 1)

    def edge_set(self, labels: Iterable[str]) -> frozenset:
        """Validate ``labels`` against the edge set and freeze them."""
        out = frozenset(labels)
        for lab in out:
            self.edge_index(lab)
        return out

    def complement(self, labels: Iterable[str]) -> frozenset:
        return frozenset(self._labels) - self.edge_set(labels)

    # -- derived graphs --------------------------------------------------

    def with_signs(self, signs: Mapping | None) -> "RibbonGraph":
        return RibbonGraph._make(self._labels, self._sigma,
                                 _normalise_signs(signs, self._labels), self._isolated)

    def unsigned(self) -> "RibbonGraph":
        return RibbonGraph._make(self._labels, self._sigma, None, self._isolated)

    def mirror(self) -> "RibbonGraph":
        """The same graph with every rotation reversed."""
        return RibbonGraph._make(self._labels, canon._invert(self._sigma), self._signs,
                                 self._isolated)

    def relabel(self, mapping: Mapping[str, str]) -> "RibbonGraph":
        new = [mapping.get(lab, lab) for lab in self._labels]
        if len(set(new)) != len(new):
            raise RibbonError("relabelling is not injective")
        cycles = [[(new[d >> 1], d & 1) for d in cyc] for cyc in self.vertices()]
        signs = None
        if self._signs is not None:
            signs = {n: s for n, s in zip(new, self._signs)}
        return RibbonGraph(cycles, signs)

    def cycles(self) -> list[list[str]]:
        return [[self.dart_name(d) for d in cyc] for cyc in self.vertices()]

    # -- comparison and serialisation ------------------------------------

    def _key(self):
        return (self._labels, self._sigma, self._signs, self._isolated)

    def __eq__(self, other):
        return isinstance(other, RibbonGraph) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        parts = [repr(self.cycles())]
        if self._signs is not None:
            parts.append(f"signs={self.signs!r}")
        return f"RibbonGraph({', '.join(parts)})"

    def to_json(self) -> dict:
        out = {"circles": self.cycles()}
        if self._signs is not None:
            out["signs"] = self.signs
        return out

    @classmethod
    def from_json(cls, data) -> "RibbonGraph":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise ParseError(f"invalid JSON: {exc}") from None
        if not isinstance(data, dict) or "circles" not in data:
            raise ParseError("expected an object with a 'circles' list")
        circles = data["circles"]
        if not isinstance(circles, list) or not all(isinstance(c, list) for c in circles):
            raise ParseError("'circles' must be a list of lists")
        return cls(circles, data.get("signs"))


def _parse_token(t) -> tuple[str, int]:
    if isinstance(t, str):
        m = _TOKEN.match(t)
        if not m:
            raise ParseError(f"bad half-edge token {t!r}")
        return m.group(1), 0 if m.group(2) == "+" else 1
    lab, end = t
    if not isinstance(lab, str) or not _LABEL.match(lab) or end not in (0, 1):
        raise ParseError(f"bad half-edge {t!r}")
    return lab, end


def _normalise_signs(signs, labels):
    if signs is None:
        return None
    signs = dict(signs)
    missing = [lab for lab in labels if lab not in signs]
    if missing:
        raise ParseError(f"signs missing for {missing}")
    extra = set(signs) - set(labels)
    if extra:
        raise UnknownEdgeError(f"signs given for unknown edges {sorted(extra)}")
    return tuple(_sign_value(signs[lab]) for lab in labels)


def _cycles(perm) -> list[tuple]:
    seen = [False] * len(perm)
    out = []
    for s in range(len(perm)):
        if seen[s]:
            continue
        cyc = []
        d = s
        while not seen[d]:
            seen[d] = True
            cyc.append(d)
            d = perm[d]
        out.append(tuple(cyc))
    return out


# -- arrow presentations -----------------------------------------------


def from_arrows(ap: ArrowPresentation) -> RibbonGraph:
    """Glue edge discs onto the circles of an arrow presentation.

    Circles may be reversed as a whole and both arrows of a label may be
    reversed together; if no choice makes both arrows of every label point
    the same way around their (oriented) circles the gluing is
    non-orientable and :class:`NonOrientableError` is raised.  The first
    circle of each connected piece keeps its given direction.
    """
    circles = [tuple(Arrow(*a) if not isinstance(a, Arrow) else a for a in c)
               for c in ap.circles]
    where: dict[str, list] = {}
    for ci, c in enumerate(circles):
        for pos, a in enumerate(c):
            if not isinstance(a.label, str) or not _LABEL.match(a.label):
                raise ParseError(f"bad label {a.label!r}")
            where.setdefault(a.label, []).append((ci, pos, a))
    for lab, occ in where.items():
        if len(occ) != 2:
            raise MalformedPresentationError(
                f"label {lab!r} appears {len(occ)} times, expected 2")
        ends = [a.end for _, _, a in occ]
        if (ends[0] is None) != (ends[1] is None) or (ends[0] is not None and ends[0] == ends[1]):
            raise MalformedPresentationError(f"label {lab!r} has inconsistent ends {ends}")

    # flip[ci] * direction must agree for the two arrows of every label
    adj: dict[int, list] = {ci: [] for ci in range(len(circles))}
    for lab, ((c1, _, a1), (c2, _, a2)) in where.items():
        parity = 1 if a1.forward == a2.forward else -1
        adj[c1].append((c2, parity))
        adj[c2].append((c1, parity))
    flip = [0] * len(circles)
    for root in range(len(circles)):
        if flip[root]:
            continue
        flip[root] = 1
        stack = [root]
        while stack:
            c = stack.pop()
            for o, parity in adj[c]:
                want = flip[c] * parity
                if not flip[o]:
                    flip[o] = want
                    stack.append(o)
                elif flip[o] != want:
                    raise NonOrientableError("arrow presentation describes a non-orientable surface")

    cycles = []
    counter: dict[str, int] = {}
    ordered = [c if f > 0 else tuple(reversed(c)) for c, f in zip(circles, flip)]
    # ends are numbered in order of appearance in the given circles
    numbering = {}
    for ci, c in enumerate(circles):
        for pos, a in enumerate(c):
            if a.end is None:
                k = counter.get(a.label, 0)
                counter[a.label] = k + 1
                numbering[(ci, pos)] = k
            else:
                numbering[(ci, pos)] = a.end
    for ci, c in enumerate(ordered):
        n = len(c)
        idx = range(n) if flip[ci] > 0 else range(n - 1, -1, -1)
        cycles.append([(circles[ci][p].label, numbering[(ci, p)]) for p in idx])
    return RibbonGraph(cycles, ap.signs)


def to_arrows(G: RibbonGraph) -> ArrowPresentation:
    """One circle per vertex, arrows in rotation order, all pointing forward."""
    circles = tuple(
        tuple(Arrow(G.label_of(d), True, d & 1) for d in cyc) for cyc in G.vertices()
    )
    return ArrowPresentation(circles, G.signs)


# -- boundary walks, genus, duals ---------------------------------------


def _alpha_mask(G: RibbonGraph, mask: int) -> list[int]:
    return [d ^ 1 if mask >> (d >> 1) & 1 else d for d in range(G.num_darts)]


def boundary_walks(G: RibbonGraph, A: Iterable[str] = ()) -> list[tuple]:
    """Boundary components of the spanning ribbon subgraph ``(V(G), A)``.

    Each walk is a tuple of :class:`BoundaryStep`; walks are ordered by their
    least dart and start there.  Isolated vertices give empty walks, listed
    last.
    """
    mask = G.mask(A)
    alpha = _alpha_mask(G, mask)
    sigma = G.rotation
    step = [sigma[alpha[d]] for d in range(G.num_darts)]
    walks = []
    for cyc in _cycles(step):
        walks.append(tuple(
            BoundaryStep(d, "side" if mask >> (d >> 1) & 1 else "arc") for d in cyc))
    walks.extend(() for _ in range(G.isolated))
    return walks


def num_faces(G: RibbonGraph) -> int:
    return len(boundary_walks(G, G.edges))


def components(G: RibbonGraph) -> list[Component]:
    """Connected components as (vertex indices, sorted edge labels)."""
    if "components" in G._cache:
        return G._cache["components"]
    alpha = [d ^ 1 for d in range(G.num_darts)]
    out = []
    for comp in canon.dart_components(G.rotation, alpha):
        verts = tuple(sorted({G.vertex_of(d) for d in comp}))
        edges = tuple(sorted({G.label_of(d) for d in comp}, key=label_key))
        out.append(Component(verts, edges))
    first = G.num_vertices - G.isolated
    out.extend(Component((first + i,), ()) for i in range(G.isolated))
    G._cache["components"] = out
    return out


def component_graphs(G: RibbonGraph) -> list[RibbonGraph]:
    """Each component as a standalone graph (isolated vertices included)."""
    out = []
    for comp in components(G):
        if comp.edges:
            out.append(induced(G, comp.edges))
        else:
            out.append(RibbonGraph(isolated=1))
    return out


def genus(G: RibbonGraph) -> GenusReport:
    """Per component ``g = (2 - v + e - f) / 2`` and the total."""
    if "genus" in G._cache:
        return G._cache["genus"]
    walks = boundary_walks(G, G.edges)
    face_of = {}
    for i, w in enumerate(walks):
        for s in w:
            face_of[s.dart] = i
    per = []
    for comp in components(G):
        if not comp.edges:
            per.append(0)
            continue
        darts = [2 * G.edge_index(lab) + k for lab in comp.edges for k in (0, 1)]
        v = len(comp.vertices)
        e = len(comp.edges)
        f = len({face_of[d] for d in darts})
        twice = 2 - v + e - f
        assert twice >= 0 and twice % 2 == 0, "Euler characteristic must be even"
        per.append(twice // 2)
    rep = GenusReport(tuple(per), sum(per))
    G._cache["genus"] = rep
    return rep


def is_plane(G: RibbonGraph) -> bool:
    return genus(G).total == 0


def _flip_signs(G: RibbonGraph, mask: int):
    if G.sign_values() is None:
        return None
    return tuple(-s if mask >> i & 1 else s for i, s in enumerate(G.sign_values()))


def geometric_dual(G: RibbonGraph) -> RibbonGraph:
    """Dual on the same oriented surface; vertices are the faces of ``G``.

    Dual dart ``d`` sits in the face containing the corner that follows
    ``d`` counter-clockwise, so the dual rotation is ``sigma^-1 . alpha``.
    Every sign is switched.
    """
    inv = canon._invert(G.rotation)
    sigma = tuple(inv[d ^ 1] for d in range(G.num_darts))
    full = (1 << G.num_edges) - 1
    return RibbonGraph._make(G.edges, sigma, _flip_signs(G, full), G.isolated)


def partial_dual(G: RibbonGraph, A: Iterable[str]) -> RibbonGraph:
    """The partial dual ``G^A``.

    The boundary walks of ``(V(G), A)`` are marked with one arrow per arc
    they share with an edge (the arc keeps the name of the dart it starts
    at) and the resulting arrow presentation is glued back up.  Signs of the
    edges in ``A`` are switched.
    """
    A = G.edge_set(A)
    mask = G.mask(A)
    circles = tuple(
        tuple(Arrow(G.label_of(s.dart), True, s.dart & 1) for s in walk)
        for walk in boundary_walks(G, A)
    )
    signs = _flip_signs(G, mask)
    sign_map = None if signs is None else {lab: _sign_char(s) for lab, s in zip(G.edges, signs)}
    return from_arrows(ArrowPresentation(circles, sign_map))


def induced(G: RibbonGraph, A: Iterable[str]) -> RibbonGraph:
    """``G|_A``: the edges of ``A`` and their incident vertices."""
    A = G.edge_set(A)
    keep = G.mask(A)
    cycles = []
    for cyc in G.vertices():
        kept = [d for d in cyc if keep >> (d >> 1) & 1]
        if kept:
            cycles.append([(G.label_of(d), d & 1) for d in kept])
    signs = None
    if G.is_signed:
        signs = {lab: s for lab, s in G.signs.items() if lab in A}
    return RibbonGraph(cycles, signs)


# -- isomorphism -------------------------------------------------------


def _dart_colours(G: RibbonGraph) -> list[int]:
    if G.sign_values() is None:
        return [0] * G.num_darts
    return [G.sign_values()[d >> 1] for d in range(G.num_darts)]


def canonical_tuple(G: RibbonGraph, mode: str = "achiral"):
    if mode not in ("chiral", "achiral"):
        raise ValueError(f"mode must be 'chiral' or 'achiral', not {mode!r}")
    key = ("code", mode)
    if key not in G._cache:
        alpha = [d ^ 1 for d in range(G.num_darts)]
        G._cache[key] = canon.map_code(
            G.rotation, alpha, _dart_colours(G), mode == "achiral",
            extra=(G.isolated, G.is_signed))
    return G._cache[key]


def canonical_code(G: RibbonGraph, mode: str = "achiral") -> bytes:
    """Isomorphism-class code; labels are ignored, signs are not.

    ``chiral`` allows only orientation-preserving maps between graphs,
    ``achiral`` also allows reversing the orientation of any component.
    """
    return repr(canonical_tuple(G, mode)).encode()


def is_isomorphic(G: RibbonGraph, H: RibbonGraph, mode: str = "achiral") -> bool:
    return canonical_tuple(G, mode) == canonical_tuple(H, mode)


# -- constructions -----------------------------------------------------


def disjoint_union(*graphs: RibbonGraph) -> RibbonGraph:
    cycles = []
    signs = {}
    signed = [g.is_signed for g in graphs]
    if any(signed) and not all(signed):
        raise RibbonError("cannot mix signed and unsigned graphs")
    isolated = 0
    labels = set()
    for g in graphs:
        if labels & set(g.edges):
            raise RibbonError("edge labels must be disjoint")
        labels |= set(g.edges)
        cycles.extend([(g.label_of(d), d & 1) for d in cyc] for cyc in g.vertices() if cyc)
        isolated += g.isolated
        if g.is_signed:
            signs.update(g.signs)
    return RibbonGraph(cycles, signs if all(signed) and graphs else None, isolated)


def _resolve_dart(G: RibbonGraph, d) -> int:
    if isinstance(d, int):
        return d
    lab, end = _parse_token(d)
    return G.dart(lab, end)


def one_sum(P: RibbonGraph, Q: RibbonGraph, p_dart, q_dart, pattern: Sequence[str]) -> RibbonGraph:
    """Identify the vertex of ``p_dart`` in ``P`` with that of ``q_dart`` in ``Q``.

    The merged rotation interleaves ``P``'s cycle read from ``p_dart`` with
    ``Q``'s cycle read from ``q_dart``; ``pattern`` is a string over ``"PQ"``
    saying which side supplies the next dart.
    """
    U = disjoint_union(P, Q)
    pd = _resolve_dart(P, p_dart)
    qd = _resolve_dart(Q, q_dart)
    pc = P.vertices()[P.vertex_of(pd)]
    qc = Q.vertices()[Q.vertex_of(qd)]
    pc = pc[pc.index(pd):] + pc[:pc.index(pd)]
    qc = qc[qc.index(qd):] + qc[:qc.index(qd)]
    if sorted(pattern) != sorted("P" * len(pc) + "Q" * len(qc)):
        raise RibbonError("pattern does not match the vertex degrees")
    pi, qi = iter(pc), iter(qc)
    merged = [(P.label_of(d), d & 1) if side == "P" else (Q.label_of(d), d & 1)
              for side in pattern for d in [next(pi) if side == "P" else next(qi)]]
    skip = {U.vertex_of(U.dart(P.label_of(pd), pd & 1)),
            U.vertex_of(U.dart(Q.label_of(qd), qd & 1))}
    cycles = [merged]
    for i, cyc in enumerate(U.vertices()):
        if cyc and i not in skip:
            cycles.append([(U.label_of(d), d & 1) for d in cyc])
    return RibbonGraph(cycles, U.signs, U.isolated)


def join(P: RibbonGraph, Q: RibbonGraph, p_dart=None, q_dart=None) -> RibbonGraph:
    """``P v Q``: ``Q``'s whole cycle at ``q_dart`` is inserted just after ``p_dart``.

    Darts default to the least dart of each graph.  The merged rotation
    reads ``p_dart``, then ``Q``'s cycle starting after ``q_dart`` and
    ending at ``q_dart``, then the rest of ``P``'s cycle.
    """
    pd = 0 if p_dart is None else _resolve_dart(P, p_dart)
    qd = 0 if q_dart is None else _resolve_dart(Q, q_dart)
    qs = Q.rotation[qd]
    np_ = len(P.vertices()[P.vertex_of(pd)])
    nq = len(Q.vertices()[Q.vertex_of(qd)])
    # rotate P's cycle to start after p_dart: read P-cycle from sigma(p), end with p
    ps = P.rotation[pd]
    return one_sum(P, Q, ps, qs, "Q" * nq + "P" * np_)
