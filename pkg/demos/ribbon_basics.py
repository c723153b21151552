"""Ribbon graphs, genus and partial duals on a few small examples.

Run: python3 demos/ribbon_basics.py
"""

from ribbonpd import RibbonGraph, genus, geometric_dual, is_isomorphic, partial_dual

# A one-vertex graph with two interlaced loops lives on the torus.
B2 = RibbonGraph([["a+", "b+", "a-", "b-"]])
print("B2 rotation:", B2.cycles(), "genus:", genus(B2).total)

# Dualising one loop pulls the vertex apart into a plane graph.
Ba = partial_dual(B2, {"a"})
print("B2^{a}:", Ba.cycles(), "genus:", genus(Ba).total)

# Dualising twice with respect to overlapping sets composes by symmetric difference.
assert partial_dual(Ba, {"a", "b"}) == partial_dual(B2, {"b"})
print("(B2^{a})^{a,b} equals B2^{b}")

# Dualising everything gives the geometric dual, up to reflection.
print("B2^E is the dual:", is_isomorphic(partial_dual(B2, B2.edges), geometric_dual(B2)))

# Signs flip exactly on the dualised edges.
S = B2.with_signs({"a": "+", "b": "+"})
print("signs after dualising a:", partial_dual(S, {"a"}).signs)
