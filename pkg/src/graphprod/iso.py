"""Graph isomorphism, automorphism groups, and colour-respecting variants.

Backtracking with partition refinement: vertices are first coloured by an
iterated neighbourhood-signature refinement (colour ids assigned by sorting
the signatures, so ids are isomorphism-invariant), then a backtracking search
maps vertices in numeric order, pruning by colour and adjacency.  Candidates
are explored in numeric vertex order, so witnesses are deterministic and the
identity is found first on equal inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import CapExceeded
from .graphs import SimpleGraph, bits, contains_triangle, girth, mask_of


def _refine(adjs: list[tuple[int, ...]], colors: list[list[int]]) -> list[list[int]] | None:
    """Jointly refine colourings of several graphs until stable.

    Returns None early if the colour histograms ever diverge (no isomorphism
    can exist then).  Signatures are ordered globally so equal structures get
    equal ids across graphs.
    """
    while True:
        sigs = []
        for adj, cols in zip(adjs, colors):
            sigs.append([(cols[v], tuple(sorted(cols[w] for w in bits(adj[v]))))
                         for v in range(len(adj))])
        table = {s: i for i, s in enumerate(sorted(set().union(*map(set, sigs))))}
        new = [[table[s] for s in graph_sigs] for graph_sigs in sigs]
        if len(adjs) == 2 and sorted(new[0]) != sorted(new[1]):
            return None
        if new == colors:
            return colors
        colors = new


def _search(g: SimpleGraph, h: SimpleGraph, gcol: Sequence[int],
            hcol: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Yield all colour-preserving isomorphisms g -> h in deterministic order."""
    n = g.n
    by_color: dict[int, list[int]] = {}
    for w in range(n):
        by_color.setdefault(hcol[w], []).append(w)
    mapping = [-1] * n

    def rec(v: int, used: int) -> Iterator[tuple[int, ...]]:
        if v == n:
            yield tuple(mapping)
            return
        row = g.adj[v]
        for w in by_color.get(gcol[v], ()):
            if used >> w & 1:
                continue
            ok = True
            for u in range(v):
                if (row >> u & 1) != (h.adj[w] >> mapping[u] & 1):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                yield from rec(v + 1, used | 1 << w)
        mapping[v] = -1

    yield from rec(0, 0)


def invariant_screen(g: SimpleGraph, h: SimpleGraph) -> bool:
    """Cheap isomorphism-invariant filter; True means "possibly isomorphic"."""
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    if girth(g) != girth(h):
        return False
    return contains_triangle(g) == contains_triangle(h)


def _prepare_colors(g, h, g_colors, h_colors):
    init_g = list(g_colors) if g_colors is not None else [0] * g.n
    init_h = list(h_colors) if h_colors is not None else [0] * h.n
    return _refine([g.adj, h.adj], [init_g, init_h])


def isomorphism(g: SimpleGraph, h: SimpleGraph,
                g_colors: Sequence[int] | None = None,
                h_colors: Sequence[int] | None = None) -> tuple[int, ...] | None:
    """A witness permutation (g-vertex -> h-vertex), or None.

    Optional colour arrays restrict to colour-preserving maps; colour values
    must mean the same thing on both sides.
    """
    if g.n != h.n:
        return None
    if g.n == 0:
        return ()
    if g_colors is None and h_colors is None and not invariant_screen(g, h):
        return None
    refined = _prepare_colors(g, h, g_colors, h_colors)
    if refined is None:
        return None
    gcol, hcol = refined
    return next(_search(g, h, gcol, hcol), None)


def verify_isomorphism(g: SimpleGraph, h: SimpleGraph,
                       perm: Sequence[int]) -> bool:
    """Check bijectivity and two-way adjacency preservation."""
    if g.n != h.n or sorted(perm) != list(range(g.n)):
        return False
    for v in range(g.n):
        if mask_of(perm[w] for w in bits(g.adj[v])) != h.adj[perm[v]]:
            return False
    return True


@dataclass(frozen=True)
class AutGroup:
    """An automorphism group given by generators, with its exact order.

    ``generators`` close (verified) to a group of size ``order``; ``orbits``
    are the vertex orbit masks, ordered by smallest vertex.
    """

    generators: tuple[tuple[int, ...], ...]
    order: int
    orbits: tuple[int, ...]


def _compose(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return tuple(b[a[v]] for v in range(len(a)))


def _closure(gens: list[tuple[int, ...]], n: int, cap: int) -> set[tuple[int, ...]]:
    identity = tuple(range(n))
    elems = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for gen in gens:
                y = _compose(x, gen)
                if y not in elems:
                    if len(elems) >= cap:
                        raise CapExceeded("automorphism closure exceeded cap")
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return elems


def automorphism_group(g: SimpleGraph, colors: Sequence[int] | None = None,
                       cap: int = 1_000_000) -> AutGroup:
    """Exact automorphism group (optionally colour-preserving).

    Enumerates all automorphisms by backtracking; raises
    :class:`CapExceeded` past ``cap`` elements.  The generator list is a
    small subset re-verified by closure.
    """
    if g.n == 0:
        return AutGroup((), 1, ())
    if g.n > 16:
        raise CapExceeded("exact automorphism order is limited to n <= 16")
    refined = _prepare_colors(g, g, colors, colors)
    assert refined is not None
    gcol, hcol = refined
    autos = []
    for perm in _search(g, g, gcol, hcol):
        autos.append(perm)
        if len(autos) > cap:
            raise CapExceeded("automorphism count exceeded cap")
    gens: list[tuple[int, ...]] = []
    generated = {tuple(range(g.n))}
    for perm in autos:
        if perm not in generated:
            gens.append(perm)
            generated = _closure(gens, g.n, cap)
    assert len(generated) == len(autos)
    seen = 0
    orbits = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        orb = 1 << v
        frontier = [v]
        while frontier:
            w = frontier.pop()
            for gen in gens:
                x = gen[w]
                if not orb >> x & 1:
                    orb |= 1 << x
                    frontier.append(x)
        orbits.append(orb)
        seen |= orb
    return AutGroup(tuple(gens), len(autos), tuple(orbits))
