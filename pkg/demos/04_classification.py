"""Certified classification verdicts and symmetry descriptors.

Each verdict names the rule that certified it, carries a witness when the
answer is positive, and lists unmet hypotheses when no rule applies.
"""

import json

from graphprod import (classify, cycle_graph, complete_bipartite,
                       factor_label, hyperfinite_label, path_graph,
                       petersen_graph, raag_label, rigidity_obstructions,
                       symmetry, uniform_labeled)

c5 = uniform_labeled(cycle_graph(5), raag_label())
c6 = uniform_labeled(cycle_graph(6), raag_label())
print("free-abelian labels on C5 vs C6:")
print("  ", json.dumps(classify(c5, c6).to_json_obj(), sort_keys=True))

print("K_{3,3} vs K_{2,5} (a known coincidence of products of free pieces):")
v = classify(uniform_labeled(complete_bipartite(3, 3), raag_label()),
             uniform_labeled(complete_bipartite(2, 5), raag_label()))
print("  ", v.kind, "via", v.theorem_tag)

print("the square against itself stays honest:")
sq = uniform_labeled(cycle_graph(4), raag_label())
v = classify(sq, sq)
print("  ", v.kind, "| first unmet hypotheses:", list(v.unmet)[:3])

print("paths of different lengths separate through the untransvectable part:")
for m, n in [(4, 4), (4, 6), (5, 7)]:
    v = classify(uniform_labeled(path_graph(m + 1), raag_label()),
                 uniform_labeled(path_graph(n + 1), raag_label()))
    print(f"   P_{m} vs P_{n}: {v.kind} (level {v.witness_level})")

print("hyperfinite labels ride the same machinery:")
v = classify(uniform_labeled(cycle_graph(5), hyperfinite_label()),
             uniform_labeled(cycle_graph(6), hyperfinite_label()))
print("  ", v.kind, "via", v.theorem_tag, "| strength:", v.conclusion_strength)

print()
print("== symmetry of a Petersen product of arbitrary II1 factors ==")
d = symmetry(uniform_labeled(petersen_graph(), factor_label("M")))
print("fundamental group trivial:", d.fundamental_group_trivial,
      "| amplification:", d.amplification_note)
print("outer part acts through the full graph symmetry group, order",
      d.acting_group.order, "| wreath form:", d.wreath_form)

print()
print("== obstructions on a path ==")
for o in rigidity_obstructions(uniform_labeled(path_graph(3), raag_label())):
    print(f"   ({o.v} -> {o.v_prime}): {o.condition}")
print("these dominated pairs admit automorphisms moving a vertex algebra",
      "off every vertex, so no classification rule applies to paths directly.")
