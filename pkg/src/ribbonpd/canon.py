"""Canonical codes for combinatorial maps.

A map is given by two permutations on ``range(n)``: ``sigma`` (the rotation,
its cycles are vertices) and ``alpha`` (a fixed-point-free involution, its
cycles are edges), plus an integer colour per dart.  The code of a connected
map is the lexicographically least breadth-first relabelling trace over all
start darts; in achiral mode the inverse rotation is tried as well.
"""

from __future__ import annotations

from typing import Sequence

Code = tuple


def _invert(perm: Sequence[int]) -> list[int]:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return inv


def _trace(start: int, sigma, alpha, colours, darts: int, best):
    """BFS relabelling trace from ``start``; ``None`` once it exceeds ``best``."""
    num = {start: 0}
    order = [start]
    out = []
    i = 0
    pos = 0
    while i < len(order):
        d = order[i]
        i += 1
        row = []
        for nxt in (sigma[d], alpha[d]):
            k = num.get(nxt)
            if k is None:
                k = len(order)
                num[nxt] = k
                order.append(nxt)
            row.append(k)
        row.append(colours[d])
        row = tuple(row)
        if best is not None:
            b = best[pos]
            if row > b:
                return None
            if row < b:
                best = None
        out.append(row)
        pos += 1
    return tuple(out)


def dart_components(sigma: Sequence[int], alpha: Sequence[int]) -> list[list[int]]:
    """Orbits of the group generated by ``sigma`` and ``alpha``, ordered by least dart."""
    seen = [False] * len(sigma)
    comps = []
    for s in range(len(sigma)):
        if seen[s]:
            continue
        seen[s] = True
        stack = [s]
        comp = []
        while stack:
            d = stack.pop()
            comp.append(d)
            for e in (sigma[d], alpha[d]):
                if not seen[e]:
                    seen[e] = True
                    stack.append(e)
        comps.append(sorted(comp))
    return comps


def component_code(comp, sigma, alpha, colours, achiral: bool) -> Code:
    """Canonical code of the connected component with dart set ``comp``."""
    best = None
    rotations = [sigma]
    if achiral:
        rotations.append(_invert(sigma))
    for rot in rotations:
        for s in comp:
            t = _trace(s, rot, alpha, colours, len(comp), best)
            if t is not None:
                best = t
    return best


def map_code(sigma, alpha, colours=None, achiral=False, extra=()) -> Code:
    """Code of a possibly disconnected map: sorted component codes.

    ``extra`` is appended verbatim (used for isolated vertices).
    """
    if colours is None:
        colours = [0] * len(sigma)
    codes = sorted(
        component_code(c, sigma, alpha, colours, achiral)
        for c in dart_components(sigma, alpha)
    )
    return (tuple(codes), tuple(extra))
