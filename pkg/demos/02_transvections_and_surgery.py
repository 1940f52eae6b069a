"""Transvections, the untransvectable subgraph, and graph surgery.

A vertex v is transvectable when some other vertex w has lk(v) inside st(w);
such pairs generate extra automorphisms of the associated right-angled Artin
group and obstruct rigidity.  The untransvectable subgraph is the part the
product algebra provably remembers even when the whole graph is not rigid.
"""

from graphprod import (bits, collapse, cycle_graph, domination_classes,
                       domination_pairs, complete_bipartite, mask_of,
                       path_graph, substitute, transvection_structure,
                       untransvectable_subgraph)


def show(mask):
    return sorted(bits(mask))


print("== paths ==")
for n in (4, 5, 6):
    p = path_graph(n)
    untrans, pairs, _ = transvection_structure(p)
    print(f"path on {n} vertices: untransvectable = {show(untrans)} "
          f"(the leaves always fall away)")
sub = untransvectable_subgraph(path_graph(5))
print("untransvectable subgraph of the 5-path is a path on", sub.n, "vertices;")
print("iterating the invariant is what separates L(A_path_m) for all m.")

print()
print("== domination classes ==")
k23 = complete_bipartite(2, 3)
q = domination_classes(k23)
print("K_{2,3}: classes =", [show(m) for m in q.classes],
      "-> quotient is a single edge on", q.graph.n, "classes")
print("ordered domination pairs:", domination_pairs(k23)[:6], "...")

print()
print("== surgery ==")
c4 = cycle_graph(4)
collapsed = collapse(c4, mask_of([0, 2]))
print("collapsing a diagonal of the square gives a path on",
      collapsed.n, "vertices:", sorted(collapsed.edges()))
c5 = cycle_graph(5)
grown = substitute(c5, 2, path_graph(2))
print("substituting an edge for a vertex of C5:", grown.n, "vertices;")
back = collapse(grown, mask_of([2, 3]))
print("collapsing the image recovers C5 exactly:", back.adj == c5.adj)
