"""Which partial duals are plane, and why: biseparations and prime joins.

Run: python3 demos/plane_biseparations.py
"""

from ribbonpd import (
    RibbonGraph,
    enumerate_plane_subsets,
    find_plane_biseparation,
    genus,
    partial_dual,
    prime_factorization,
)
from ribbonpd.oracle import brute_force_plane_subsets, complete_graph, rotation_systems

examples = {
    "two interlaced loops": RibbonGraph([["a+", "b+", "a-", "b-"]]),
    "three interlaced loops": RibbonGraph([["a+", "b+", "c+", "a-", "b-", "c-"]]),
    "two loops joined side by side": RibbonGraph([["a+", "a-", "b+", "b-"]]),
    "torus pair joined to a loop": RibbonGraph([["a+", "b+", "a-", "b-", "c+", "c-"]]),
}

for name, G in examples.items():
    primes = [sorted(s) for s in prime_factorization(G).summands]
    subsets = [sorted(A) for A in enumerate_plane_subsets(G)]
    assert enumerate_plane_subsets(G) == brute_force_plane_subsets(G)
    print(f"{name}: genus {genus(G).total}, primes {primes}, plane subsets {subsets}")

# A certificate explains how G splits into plane pieces on two sides.
G = examples["torus pair joined to a loop"]
A, cert = find_plane_biseparation(G)
print("certificate:", cert.to_json())
print("genus of G^A:", genus(partial_dual(G, A)).total)

# No embedding of K5 has a plane partial dual.
count = sum(1 for R in rotation_systems(*complete_graph(5)) if find_plane_biseparation(R))
print("K5 embeddings with a plane partial dual:", count)
