"""Links, stars, perps, girth, joins, and collapsibility on small graphs.

Walks the elementary vocabulary on a handful of named graphs and shows why
the 5-cycle is the smallest "rigid-friendly" cycle while the square is the
canonical troublemaker.
"""

from graphprod import (bits, collapsible_subgraphs, complete_bipartite,
                       cycle_graph, girth, is_clique_reduced,
                       is_strongly_reduced, join_decomposition, link,
                       mask_of, maximal_join_subgraphs, path_graph, perp,
                       petersen_graph, star, contains_square)


def show(mask):
    return sorted(bits(mask))


c5 = cycle_graph(5)
print("== the 5-cycle ==")
print("link(0) =", show(link(c5, 0)), "  star(0) =", show(star(c5, 0)))
print("perp({0,2}) =", show(perp(c5, mask_of([0, 2]))), " (the common neighbour)")
print("girth:", girth(c5), "  contains a square:", contains_square(c5))
print("maximal join subgraphs are exactly the five stars:")
for s in maximal_join_subgraphs(c5):
    print("   ", show(s))
print("collapsible sets of size >= 2:", [show(s) for s in collapsible_subgraphs(c5, 2)],
      "-> only the whole graph, so C5 is strongly reduced:", is_strongly_reduced(c5))

print()
print("== the square ==")
c4 = cycle_graph(4)
jd = join_decomposition(c4)
print("join parts:", [show(p) for p in jd.parts])
print("the two diagonals are collapsible:",
      [show(s) for s in collapsible_subgraphs(c4, 2)][:2])
print("so the square is NOT strongly reduced:", is_strongly_reduced(c4),
      "(but it is clique-reduced:", is_clique_reduced(c4), ")")
print("this is exactly why a graph product over a square can be re-split",
      "over a two-vertex segment.")

print()
print("== joins and products ==")
k23 = complete_bipartite(2, 3)
jd = join_decomposition(k23)
print("K_{2,3} splits as a join of its sides:", [show(p) for p in jd.parts])
print("a path has a cut vertex, the Petersen graph does not even have a",
      "separating star; girth(Petersen) =", girth(petersen_graph()))
print("path girth (a forest):", girth(path_graph(4)))
