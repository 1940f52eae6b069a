"""The brute-force substrate: catalogs, lemma sweeps, sampling, word oracle.

Everything the fast paths claim is recomputed here by slow exhaustive means;
the demo reruns a few sweeps and shows a negative control failing on cue.
"""

from graphprod import (KNOWN_GRAPH_COUNTS, LEMMAS, WordOracle, check_lemma,
                       cycle_graph, enumerate_graphs, enumerate_words,
                       sample_er, to_graph6)

print("== isomorphism-class catalogs ==")
for n in range(1, 7):
    catalog = enumerate_graphs(n)
    print(f"  n={n}: {len(catalog.graphs)} classes"
          f" (known value {KNOWN_GRAPH_COUNTS[n]})")

print()
print("== lemma sweeps at n <= 6 ==")
for lemma in sorted(LEMMAS):
    report = check_lemma(enumerate_graphs(6), lemma)
    print(f"  {lemma}: checked {report.checked}, counterexamples "
          f"{len(report.counterexamples)}")

print()
print("negative control: drop the strongly-reduced hypothesis and the")
print("component-union lemma must break, with the square as witness:")
report = check_lemma(enumerate_graphs(4), "collapsible-is-component-union",
                     drop_hypothesis=True)
print("  counterexamples:", [to_graph6(g) for g in report.counterexamples])

print()
print("== deterministic G(n, p) sampling ==")
report = sample_er(50, 0.5, 200, seed=7)
print("  n=50, p=0.5, 200 trials: fractions =",
      {k: v / report.trials for k, v in report.counts})
print("  same seed, same report:", report == sample_er(50, 0.5, 200, seed=7))

print()
print("== the word oracle against the engine ==")
c5 = cycle_graph(5)
oracle = WordOracle(c5, 6)
engine = enumerate_words(c5, 6)
print("  ball sizes (oracle):", oracle.strata)
print("  ball sizes (engine):", list(engine.strata))
print("  Cartier-Foata and ShortLex count the same elements:",
      tuple(oracle.strata) == engine.strata)
