"""Link diagrams on the sphere, their Tait and state ribbon graphs.

A diagram with ``n`` crossings is a 4-valent plane map.  The four ends of
crossing ``i`` are the darts ``4i .. 4i+3`` in counter-clockwise order and
``alpha`` pairs ends joined by a strand.  ``over[i]`` is ``0`` when ends
``4i, 4i+2`` carry the over-strand and ``1`` for ``4i+1, 4i+3``.

The corner named ``x`` is the wedge between end ``x`` and the next end
counter-clockwise.  Walking a face with the face on the right visits the
corners ``x -> alpha(sigma(x))``.

Sign conventions (``convention=+1``): a crossing is positive for a
colouring when turning its over-strand a quarter turn counter-clockwise
sweeps black corners.  The A-splice joins the two swept corners into one
region, so its arcs hug the two corners that are not swept; the B-splice
hugs the swept ones.  A state graph edge is positive iff its splice is B.
``convention=-1`` negates every Tait sign and swaps the names A and B.
"""

from __future__ import annotations

import itertools
import json
import re
from typing import Mapping, NamedTuple, Sequence

from . import canon
from .errors import BoundsError, NotADiagramError, NotPlaneError, ParseError, RibbonError
from .ribbon import (
    Arrow,
    ArrowPresentation,
    RibbonGraph,
    canonical_tuple,
    components,
    from_arrows,
    is_plane,
    join,
    label_key,
    partial_dual,
)

_X = re.compile(r"X\s*[\(\[]\s*([^\)\]]*)[\)\]]")
_PD_NOISE = re.compile(r"PD\s*[\(\[]|[\s,;\)\]]")


def _check_convention(convention: int) -> int:
    if convention not in (1, -1):
        raise ValueError("convention must be +1 or -1")
    return convention


class LinkDiagram:
    """A connected link diagram on the sphere (see module docstring)."""

    __slots__ = ("_labels", "_alpha", "_over", "_strands", "_cache")

    def __init__(self, labels: Sequence[str], alpha: Sequence[int], over: Sequence[int],
                 strands: Sequence | None = None):
        n = len(labels)
        if n == 0:
            raise NotADiagramError("a diagram needs at least one crossing")
        if len(alpha) != 4 * n or len(over) != n:
            raise NotADiagramError("inconsistent crossing data")
        for x, y in enumerate(alpha):
            if not 0 <= y < 4 * n or y == x or alpha[y] != x:
                raise NotADiagramError("strand pairing must be a fixed-point-free involution")
        if any(o not in (0, 1) for o in over):
            raise NotADiagramError("over flags must be 0 or 1")
        if strands is None:
            strands = _default_strands(alpha)
        self._labels = tuple(labels)
        self._alpha = tuple(alpha)
        self._over = tuple(over)
        self._strands = tuple(strands)
        self._cache = {}
        if len(_components(self._alpha)) != 1:
            raise NotADiagramError("diagram is not connected")
        f = len(self.faces())
        if f != n + 2:
            raise NotADiagramError(f"map has {f} faces, a sphere diagram with {n} crossings needs {n + 2}")

    # -- accessors -------------------------------------------------------

    @property
    def labels(self) -> tuple:
        return self._labels

    @property
    def num_crossings(self) -> int:
        return len(self._labels)

    @property
    def alpha(self) -> tuple:
        return self._alpha

    @property
    def over(self) -> tuple:
        return self._over

    @property
    def strand_labels(self) -> tuple:
        return self._strands

    def sigma(self, x: int) -> int:
        return x - x % 4 + (x + 1) % 4

    def sigma_inv(self, x: int) -> int:
        return x - x % 4 + (x + 3) % 4

    def rotation(self) -> tuple:
        return tuple(self.sigma(x) for x in range(4 * self.num_crossings))

    def is_over_end(self, x: int) -> bool:
        return x % 2 == self._over[x // 4]

    def crossing_index(self, label: str) -> int:
        try:
            return self._labels.index(label)
        except ValueError:
            raise RibbonError(f"no crossing {label!r}") from None

    def strands(self) -> dict:
        """Strand label -> its two ends (lower end first)."""
        out: dict = {}
        for x, lab in enumerate(self._strands):
            out.setdefault(lab, []).append(x)
        return {lab: tuple(v) for lab, v in out.items()}

    def strand_ends(self, label) -> tuple:
        for lab, ends in self.strands().items():
            if str(lab) == str(label):
                return ends
        raise RibbonError(f"no strand {label!r}")

    def faces(self) -> list[tuple]:
        """Corner cycles of the faces, each walked with the face on the right."""
        if "faces" not in self._cache:
            step = [self._alpha[self.sigma(x)] for x in range(4 * self.num_crossings)]
            self._cache["faces"] = _orbits(step)
        return self._cache["faces"]

    def face_of_corner(self, x: int) -> int:
        if "face_of" not in self._cache:
            fo = {}
            for i, f in enumerate(self.faces()):
                for c in f:
                    fo[c] = i
            self._cache["face_of"] = fo
        return self._cache["face_of"][x]

    # -- codes and serialisation -----------------------------------------

    def code_tuple(self, mode: str = "chiral"):
        if mode not in ("chiral", "achiral"):
            raise ValueError(f"mode must be 'chiral' or 'achiral', not {mode!r}")
        key = ("code", mode)
        if key not in self._cache:
            colours = [1 if self.is_over_end(x) else 0 for x in range(4 * self.num_crossings)]
            self._cache[key] = canon.map_code(self.rotation(), self._alpha, colours,
                                              mode == "achiral")
        return self._cache[key]

    def to_pd(self) -> str:
        """PD text; each crossing starts at an under end."""
        parts = []
        for i in range(self.num_crossings):
            start = 4 * i + (1 - self._over[i])
            ends = [4 * i + (start - 4 * i + k) % 4 for k in range(4)]
            parts.append("X(" + ",".join(str(self._strands[x]) for x in ends) + ")")
        return " ".join(parts)

    def to_json(self) -> dict:
        return {"crossings": [
            {"label": lab,
             "ends": [self._strands[4 * i + k] for k in range(4)],
             "over": "24" if self._over[i] else "13"}
            for i, lab in enumerate(self._labels)
        ]}

    @classmethod
    def from_json(cls, data) -> "LinkDiagram":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise ParseError(f"invalid JSON: {exc}") from None
        try:
            rows = data["crossings"]
            ends = [list(r["ends"]) for r in rows]
            over = [{"13": 0, "24": 1}[r.get("over", "24")] for r in rows]
            labels = [str(r.get("label", i + 1)) for i, r in enumerate(rows)]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed diagram JSON: {exc}") from None
        if any(len(e) != 4 for e in ends):
            raise ParseError("every crossing needs four ends")
        return _build(labels, ends, over)

    def _key(self):
        return (self._labels, self._alpha, self._over, self._strands)

    def __eq__(self, other):
        return isinstance(other, LinkDiagram) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"LinkDiagram({self.to_pd()!r})"


def diagram_code(D: LinkDiagram, mode: str = "chiral") -> bytes:
    """Isomorphism code; ``chiral`` allows orientation-preserving maps of the sphere only."""
    return repr(D.code_tuple(mode)).encode()


def same_diagram(D1: LinkDiagram, D2: LinkDiagram, mode: str = "chiral") -> bool:
    return D1.code_tuple(mode) == D2.code_tuple(mode)


def _orbits(perm) -> list[tuple]:
    seen = [False] * len(perm)
    out = []
    for s in range(len(perm)):
        if seen[s]:
            continue
        cyc = []
        x = s
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = perm[x]
        out.append(tuple(cyc))
    return out


def _components(alpha) -> list:
    n = len(alpha) // 4
    sigma = [x - x % 4 + (x + 1) % 4 for x in range(4 * n)]
    return canon.dart_components(sigma, list(alpha))


def _default_strands(alpha) -> list[int]:
    out = [0] * len(alpha)
    k = 0
    for x in range(len(alpha)):
        if x < alpha[x]:
            k += 1
            out[x] = out[alpha[x]] = k
    return out


def _build(labels, ends, over) -> LinkDiagram:
    where: dict = {}
    for i, row in enumerate(ends):
        for k, lab in enumerate(row):
            where.setdefault(lab, []).append(4 * i + k)
    bad = sorted((str(k) for k, v in where.items() if len(v) != 2))
    if bad:
        raise ParseError(f"strand labels must appear exactly twice: {', '.join(bad)}")
    alpha = [0] * (4 * len(ends))
    strands = [None] * (4 * len(ends))
    for lab, (x, y) in where.items():
        alpha[x], alpha[y] = y, x
        strands[x] = strands[y] = lab
    order = sorted(range(len(labels)), key=lambda i: label_key(labels[i]))
    if order != list(range(len(labels))):
        return _build([labels[i] for i in order], [ends[i] for i in order],
                      [over[i] for i in order])
    return LinkDiagram(labels, alpha, over, strands)


def parse_pd(text: str) -> LinkDiagram:
    """Read ``X(i,j,k,l) ...`` (or KnotAtlas ``PD[X[...], ...]``).

    Ends are listed counter-clockwise from the incoming under-strand, so
    the 2nd and 4th ends are the over-strand.  Crossings are labelled
    ``"1"``, ``"2"``, ... in order.
    """
    matches = list(_X.finditer(text))
    if not matches:
        raise ParseError("no X(...) crossings found")
    rest = _X.sub(" ", text)
    if _PD_NOISE.sub("", rest):
        raise ParseError(f"unexpected text in PD code: {rest.strip()!r}")
    ends = []
    for m in matches:
        fields = [f.strip() for f in m.group(1).split(",")]
        if len(fields) != 4 or not all(f.isdigit() for f in fields):
            raise ParseError(f"bad crossing {m.group(0)!r}")
        ends.append([int(f) for f in fields])
    labels = [str(i + 1) for i in range(len(ends))]
    return _build(labels, ends, [1] * len(ends))


def read_diagram(text: str) -> LinkDiagram:
    """PD text or diagram JSON."""
    if text.lstrip().startswith("{"):
        return LinkDiagram.from_json(text)
    return parse_pd(text)


# -- colourings ------------------------------------------------------------


class Coloring(NamedTuple):
    """Face colours: ``black[i]`` for face ``i`` of ``D.faces()``."""

    faces: tuple
    black: tuple

    def colour(self, face: int) -> str:
        return "black" if self.black[face] else "white"

    def counts(self) -> tuple[int, int]:
        b = sum(self.black)
        return b, len(self.black) - b


def checkerboard(D: LinkDiagram) -> tuple[Coloring, Coloring]:
    """The two checkerboard colourings; the first makes corner 0 of crossing 1 black."""
    faces = D.faces()
    adj: dict = {i: set() for i in range(len(faces))}
    for x in range(4 * D.num_crossings):
        a, b = D.face_of_corner(D.sigma_inv(x)), D.face_of_corner(x)
        adj[a].add(b)
        adj[b].add(a)
    col = [-1] * len(faces)
    root = D.face_of_corner(0)
    col[root] = 1
    stack = [root]
    while stack:
        f = stack.pop()
        for g in adj[f]:
            if col[g] < 0:
                col[g] = 1 - col[f]
                stack.append(g)
            elif col[g] == col[f]:
                raise NotADiagramError("face adjacency is not bipartite")
    first = tuple(bool(c) for c in col)
    return Coloring(tuple(faces), first), Coloring(tuple(faces), tuple(not c for c in first))


def _coloring(D: LinkDiagram, c) -> Coloring:
    if isinstance(c, Coloring):
        return c
    if c in (0, 1):
        return checkerboard(D)[c]
    raise ValueError("colouring must be a Coloring or 0/1")


def _black_corner(D: LinkDiagram, c: Coloring, x: int) -> bool:
    return c.black[D.face_of_corner(x)]


def tait_signs(D: LinkDiagram, c=0, convention: int = 1) -> dict:
    c = _coloring(D, c)
    _check_convention(convention)
    out = {}
    for i, lab in enumerate(D.labels):
        k = D.over[i]
        swept_black = _black_corner(D, c, 4 * i + k)
        out[lab] = "+" if swept_black == (convention == 1) else "-"
    return out


def tait(D: LinkDiagram, c=0, convention: int = 1) -> RibbonGraph:
    """Signed plane Tait graph: a vertex per black face, an edge per crossing.

    The rotation at a vertex lists the black corners of its face
    counter-clockwise; at each crossing the black corner with the lower
    position is end ``+`` of the edge.
    """
    c = _coloring(D, c)
    n = D.num_crossings
    dart = {}
    for i in range(n):
        black = [4 * i + k for k in range(4) if _black_corner(D, c, 4 * i + k)]
        dart[black[0]], dart[black[1]] = 2 * i, 2 * i + 1
    sigma = [0] * (2 * n)
    for x, d in dart.items():
        sigma[d] = dart[D.sigma_inv(D.alpha[x])]
    g = RibbonGraph._make(D.labels, sigma)
    return g.with_signs(tait_signs(D, c, convention))


# -- states ----------------------------------------------------------------


def _state_map(D: LinkDiagram, state) -> dict:
    if isinstance(state, str):
        if len(state) != D.num_crossings:
            raise RibbonError("state string must have one letter per crossing")
        state = dict(zip(D.labels, state))
    out = {}
    for lab in D.labels:
        s = state.get(lab) if isinstance(state, Mapping) else None
        if s not in ("A", "B"):
            raise RibbonError(f"state must give A or B at crossing {lab!r}")
        out[lab] = s
    return out


def hugged_corners(D: LinkDiagram, i: int, letter: str, convention: int = 1) -> tuple[int, int]:
    """The two corners of crossing ``i`` whose arcs the splice keeps."""
    k = D.over[i]
    swept = letter == ("B" if convention == 1 else "A")
    first = k if swept else k + 1
    return 4 * i + first, 4 * i + (first + 2) % 4


def tait_state(D: LinkDiagram, c=0, convention: int = 1) -> dict:
    """The state whose splices hug the black corners of ``c``."""
    c = _coloring(D, c)
    out = {}
    for i, lab in enumerate(D.labels):
        for letter in "AB":
            x, _ = hugged_corners(D, i, letter, convention)
            if _black_corner(D, c, x):
                out[lab] = letter
    return out


def state_circles(D: LinkDiagram, state, convention: int = 1) -> list[list[tuple[int, int]]]:
    """State circles as lists of ``(enter, leave)`` splice arcs.

    Circles keep the black faces of the first colouring on their left.
    """
    state = _state_map(D, state)
    black = checkerboard(D)[0]
    nxt = {}
    for i, lab in enumerate(D.labels):
        for x in hugged_corners(D, i, state[lab], convention):
            if _black_corner(D, black, x):
                nxt[D.sigma(x)] = x
            else:
                nxt[x] = D.sigma(x)
    circles, seen = [], set()
    for start in sorted(nxt):
        if start in seen:
            continue
        circ = []
        x = start
        while x not in seen:
            seen.add(x)
            y = nxt[x]
            circ.append((x, y))
            x = D.alpha[y]
        circles.append(circ)
    return circles


def state_graph(D: LinkDiagram, state, convention: int = 1) -> RibbonGraph:
    """The signed ribbon graph of a state.

    Each state circle becomes a vertex; each crossing is an edge glued to
    its two splice arcs.  The arc in the corner with the lower position is
    end ``+``.  Signs: ``+`` for B, ``-`` for A.
    """
    _check_convention(convention)
    smap = _state_map(D, state)
    circles = []
    for circ in state_circles(D, smap, convention):
        arrows = []
        for enter, leave in circ:
            i = enter // 4
            lo = min(hugged_corners(D, i, smap[D.labels[i]], convention))
            corner = enter if D.sigma(enter) == leave else leave
            arrows.append(Arrow(D.labels[i], True, 0 if corner == lo else 1))
        circles.append(tuple(arrows))
    signs = {lab: "+" if s == "B" else "-" for lab, s in smap.items()}
    return from_arrows(ArrowPresentation(tuple(circles), signs))


def states(D: LinkDiagram) -> list[str]:
    """All ``2^n`` states as strings over ``AB`` in crossing order."""
    if D.num_crossings > 20:
        raise BoundsError("at most 20 crossings")
    return ["".join(p) for p in itertools.product("AB", repeat=D.num_crossings)]


def all_state_graphs(D: LinkDiagram, dedupe: bool = False, convention: int = 1) -> list[RibbonGraph]:
    """One graph per state; with ``dedupe``, one per signed isomorphism class."""
    out = [state_graph(D, s, convention) for s in states(D)]
    if not dedupe:
        return out
    seen, kept = set(), []
    for g in out:
        c = canonical_tuple(g, "achiral")
        if c not in seen:
            seen.add(c)
            kept.append(g)
    return kept


def state_difference(D: LinkDiagram, s1, s2) -> frozenset:
    a, b = _state_map(D, s1), _state_map(D, s2)
    return frozenset(lab for lab in D.labels if a[lab] != b[lab])


# -- diagrams from graphs ---------------------------------------------------


def diagram_of(G: RibbonGraph, convention: int = 1) -> LinkDiagram:
    """The diagram of a connected signed plane graph (a crossing per edge).

    For an edge with darts ``d`` (its ``+`` end) and ``d'`` the ends of
    its crossing, counter-clockwise, point into the corners
    ``(s^-1 d', d')``, ``(d, s d)``, ``(s^-1 d, d)`` and ``(d', s d')``.
    Strands follow the corners of ``G``.  A positive edge puts the
    over-strand on the 2nd and 4th ends.
    """
    _check_convention(convention)
    if not G.is_signed:
        raise RibbonError("diagram_of needs a signed graph")
    if G.num_edges == 0 or len(components(G)) != 1:
        raise RibbonError("diagram_of needs a connected graph with at least one edge")
    if not is_plane(G):
        raise NotPlaneError("diagram_of needs a plane graph")
    sig = G.rotation

    def end_after(x):  # end of x's crossing pointing into corner (x, sigma x)
        return 4 * (x >> 1) + (1 if x & 1 == 0 else 3)

    def end_before(y):  # end of y's crossing pointing into corner (sigma^-1 y, y)
        return 4 * (y >> 1) + (2 if y & 1 == 0 else 0)

    n = G.num_edges
    alpha = [0] * (4 * n)
    strands = [0] * (4 * n)
    for x in range(2 * n):
        a, b = end_after(x), end_before(sig[x])
        alpha[a], alpha[b] = b, a
        strands[a] = strands[b] = x + 1
    over = [1 if s * convention > 0 else 0 for s in G.sign_values()]
    return LinkDiagram(G.edges, alpha, over, strands)


def diagrams_of(G: RibbonGraph, convention: int = 1) -> list[LinkDiagram]:
    """Diagrams of all plane partial duals of ``G``, one per chiral code."""
    from .decomp import enumerate_plane_subsets

    if not G.is_signed:
        raise RibbonError("diagrams_of needs a signed graph")
    if G.num_edges == 0 or len(components(G)) != 1:
        raise RibbonError("diagrams_of needs a connected graph with at least one edge")
    out = {}
    for A in enumerate_plane_subsets(G):
        D = diagram_of(partial_dual(G, A), convention)
        out.setdefault(D.code_tuple("chiral"), D)
    return [out[k] for k in sorted(out)]


# -- summand flips -----------------------------------------------------------


def _sides(D: LinkDiagram, cut_ends: set) -> list[set]:
    n = D.num_crossings
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in range(4 * n):
        if x not in cut_ends:
            parent[find(x // 4)] = find(D.alpha[x] // 4)
    groups: dict = {}
    for i in range(n):
        groups.setdefault(find(i), set()).add(i)
    return sorted(groups.values(), key=min)


def valid_cuts(D: LinkDiagram) -> list[tuple]:
    """Pairs of distinct strands whose removal splits the crossings in two."""
    strands = D.strands()
    labs = sorted(strands, key=lambda s: label_key(str(s)))
    out = []
    for s1, s2 in itertools.combinations(labs, 2):
        if len(_sides(D, set(strands[s1]) | set(strands[s2]))) == 2:
            out.append((s1, s2))
    return out


def summand_flip(D: LinkDiagram, cut: tuple) -> LinkDiagram:
    """Turn over the part of ``D`` cut off by two strands.

    The side without the first crossing is reflected (each of its crossings
    has its rotation reversed) and, being turned over in space, has every
    crossing switched.  The two cut strands stay attached where they were.
    """
    s1, s2 = cut
    e1, e2 = D.strand_ends(s1), D.strand_ends(s2)
    if e1 == e2:
        return D
    sides = _sides(D, set(e1) | set(e2))
    if len(sides) != 2:
        raise RibbonError("the cut must split the diagram into exactly two sides")
    inside = sides[1]
    for a, b in (e1, e2):
        if (a // 4 in inside) == (b // 4 in inside):
            raise RibbonError("each cut strand must join the two sides")
    # position k of an inside crossing moves to (-k) mod 4
    def move(x):
        i, k = divmod(x, 4)
        return x if i not in inside else 4 * i + (-k) % 4

    n = D.num_crossings
    alpha = [0] * (4 * n)
    strands = [None] * (4 * n)
    for x in range(4 * n):
        alpha[move(x)] = move(D.alpha[x])
        strands[move(x)] = D.strand_labels[x]
    over = [1 - o if i in inside else o for i, o in enumerate(D.over)]
    return LinkDiagram(D.labels, alpha, over, strands)


def same_link_diagram_set(D1: LinkDiagram, D2: LinkDiagram, convention: int = 1) -> bool:
    """Whether ``D1`` and ``D2`` have the same set of signed ribbon graphs.

    Decided as: a Tait graph of ``D2`` is, orientation included, a plane
    partial dual of the first Tait graph of ``D1``.
    """
    from .decomp import enumerate_plane_subsets

    if D1.num_crossings != D2.num_crossings:
        return False
    T1 = tait(D1, 0, convention)
    targets = {canonical_tuple(tait(D2, c, convention), "chiral") for c in (0, 1)}
    return any(canonical_tuple(partial_dual(T1, A), "chiral") in targets
               for A in enumerate_plane_subsets(T1))


# -- constructions ------------------------------------------------------------


def renumber(D: LinkDiagram) -> LinkDiagram:
    """Crossings relabelled ``"1".."n"`` and strands ``1..2n`` in end order."""
    return LinkDiagram([str(i + 1) for i in range(D.num_crossings)], D.alpha, D.over)


def connected_sum(D1: LinkDiagram, D2: LinkDiagram, corner1: int = 0, corner2: int = 0,
                  convention: int = 1) -> LinkDiagram:
    """``D1 # D2`` through a black face of each, via the join of Tait graphs.

    ``corner1``/``corner2`` pick the Tait darts where the join is made.
    """
    T1 = tait(D1, 0, convention)
    T2 = tait(D2, 0, convention)
    n1 = T1.num_edges
    T1 = T1.relabel({lab: str(i + 1) for i, lab in enumerate(T1.edges)})
    T2 = T2.relabel({lab: str(n1 + i + 1) for i, lab in enumerate(T2.edges)})
    return renumber(diagram_of(join(T1, T2, corner1, corner2), convention))


def curl(positive: bool = True) -> LinkDiagram:
    """One-crossing diagram of the unknot."""
    return LinkDiagram(["1"], [1, 0, 3, 2], [1 if positive else 0], [1, 1, 2, 2])


TREFOIL_PD = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"


def trefoil() -> LinkDiagram:
    return parse_pd(TREFOIL_PD)


def mirror_diagram(D: LinkDiagram) -> LinkDiagram:
    """Every crossing switched."""
    return LinkDiagram(D.labels, D.alpha, [1 - o for o in D.over], D.strand_labels)


def kauffman_bracket(D: LinkDiagram) -> dict:
    """Bracket polynomial as ``{exponent of A: coefficient}`` (small diagrams).

    Uses ``<D> = sum_s A^(a-b) d^(|s|-1)`` with ``d = -A^2 - A^-2``; a
    cross-check that summand flips preserve the link, not a feature.
    """
    total: dict = {}
    for s in states(D):
        a, b = s.count("A"), s.count("B")
        loops = len(state_circles(D, s))
        poly = {a - b: 1}
        for _ in range(loops - 1):
            nxt: dict = {}
            for e, c in poly.items():
                nxt[e + 2] = nxt.get(e + 2, 0) - c
                nxt[e - 2] = nxt.get(e - 2, 0) - c
            poly = nxt
        for e, c in poly.items():
            total[e] = total.get(e, 0) + c
    return {e: c for e, c in sorted(total.items()) if c}


def random_diagram(rng, n_crossings: int, convention: int = 1) -> LinkDiagram:
    """Diagram of a random signed plane graph with ``n_crossings`` edges."""
    from .oracle import random_plane_graph

    G = random_plane_graph(rng, n_crossings, v_max=n_crossings + 1, signed=True)
    G = G.relabel({lab: str(i + 1) for i, lab in enumerate(G.edges)})
    return renumber(diagram_of(G, convention))
