"""From a knot diagram to its ribbon graphs and back.

Run: python3 demos/link_diagrams.py
"""

from ribbonpd import (
    all_state_graphs,
    diagram_of,
    diagrams_of,
    parse_pd,
    same_link_diagram_set,
    summand_flip,
    tait,
)
from ribbonpd.linkdiag import connected_sum, curl, kauffman_bracket, same_diagram, valid_cuts

trefoil = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")
T = tait(trefoil)
print("Tait graph:", T.cycles(), T.signs)
print("diagram of the Tait graph is the trefoil:", same_diagram(diagram_of(T), trefoil))

graphs = all_state_graphs(trefoil)
print("state graphs:", len(graphs), "classes:", len(all_state_graphs(trefoil, dedupe=True)))

# Every plane state graph rebuilds a diagram; here they all give the trefoil.
print("diagrams from the ribbon graphs:", [D.to_pd() for D in diagrams_of(T)])

# A connected sum has a cut; flipping one summand keeps the ribbon graphs.
granny = connected_sum(trefoil, trefoil)
cut = valid_cuts(granny)[0]
flipped = summand_flip(granny, cut)
print("granny:", granny.to_pd())
print("flipped at", cut, ":", flipped.to_pd())
print("same diagram:", same_diagram(granny, flipped),
      "same ribbon graphs:", same_link_diagram_set(granny, flipped))
print("bracket unchanged:", kauffman_bracket(granny) == kauffman_bracket(flipped))
print("trefoil vs curl:", same_link_diagram_set(trefoil, curl()))
