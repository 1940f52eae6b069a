"""Derived combinatorial structure on simple graphs.

Join decompositions, maximal join subgraphs, collapsible subgraphs,
link-star domination (transvections), the untransvectable subgraph, the
quotient graph on domination classes, separating stars, and graph surgery
(collapse / substitute).

The subgraph enumerators walk all ``2**n`` vertex subsets; that is the
definitionally exact semantics and is fine for the intended n <= ~20.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (SimpleGraph, bits, induced, induced_or_empty, is_clique,
                     is_connected, link, mask_of, perp, star)


@dataclass(frozen=True)
class JoinDecomposition:
    """Clique factor plus the irreducible parts of the canonical join split.

    ``clique_factor`` is the set of vertices adjacent to every other vertex;
    the remaining vertices split into ``parts``, the vertex sets of the
    connected components of the complement restricted to them.  Each part has
    at least two vertices and induces an irreducible graph; parts are sorted
    by (size, smallest vertex).
    """

    clique_factor: int
    parts: tuple[int, ...]


@dataclass(frozen=True)
class QuotientGraph:
    """Quotient of a graph by the domination equivalence ``v ~ v'``.

    ``classes[i]`` is the vertex mask of class ``i``; ``graph`` is the simple
    graph on classes (two classes adjacent iff their members are adjacent,
    which is representative-independent); ``vertex_to_class[v]`` gives the
    class index of ``v``.
    """

    classes: tuple[int, ...]
    graph: SimpleGraph
    vertex_to_class: tuple[int, ...]


def maximal_clique_factor(g: SimpleGraph) -> int:
    """Vertices whose star is the whole graph; they induce a clique."""
    full = g.full_mask
    return mask_of(v for v in range(g.n) if star(g, v) == full)


def is_join(g: SimpleGraph, s: int) -> bool:
    """True iff ``s`` (with >= 2 vertices) splits as a join of two nonempty parts.

    Equivalent test: the complement of the induced subgraph on ``s`` is
    disconnected.
    """
    if s.bit_count() < 2:
        return False
    first = s & -s
    v0 = first.bit_length() - 1
    # grow the complement-component of v0 within s
    comp = first
    frontier = first
    while frontier:
        grow = 0
        for v in bits(frontier):
            grow |= s & ~g.adj[v] & ~(1 << v)
        frontier = grow & ~comp
        comp |= frontier
    return comp != s


def join_decomposition(g: SimpleGraph) -> JoinDecomposition:
    """Canonical split: clique factor joined with irreducible parts."""
    if g.n == 0:
        raise ValueError("empty graph has no join decomposition")
    clique = maximal_clique_factor(g)
    rest = g.full_mask & ~clique
    parts = []
    left = rest
    while left:
        seed = left & -left
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= rest & ~g.adj[v] & ~(1 << v)
            frontier = grow & ~comp
            comp |= frontier
        parts.append(comp)
        left &= ~comp
    for p in parts:
        assert p.bit_count() >= 2, "non-clique-factor part of size 1"
    parts.sort(key=lambda p: (p.bit_count(), p & -p))
    return JoinDecomposition(clique, tuple(parts))


def maximal_join_subgraphs(g: SimpleGraph) -> list[int]:
    """All maximal (under inclusion) full subgraphs that split as a join.

    Exhaustive over the subset lattice; results ordered by (size, mask).
    """
    joins = [s for s in range(1, 1 << g.n) if is_join(g, s)]
    out = [s for s in joins
           if not any(t != s and t & s == s for t in joins)]
    out.sort(key=lambda s: (s.bit_count(), s))
    return out


def is_collapsible(g: SimpleGraph, s: int) -> bool:
    """True iff ``st(v)`` meets the outside of ``s`` exactly in ``perp(s)`` for all v in s."""
    if s == 0:
        return False
    outside = g.full_mask & ~s
    p = perp(g, s)
    for v in bits(s):
        if star(g, v) & outside != p:
            return False
    return True


def collapsible_subgraphs(g: SimpleGraph, min_size: int) -> list[int]:
    """All collapsible vertex sets with at least ``min_size`` vertices.

    The full vertex set always qualifies.  Ordered by (size, mask).
    """
    if min_size < 1:
        raise ValueError("min_size must be at least 1")
    out = [s for s in range(1, 1 << g.n)
           if s.bit_count() >= min_size and is_collapsible(g, s)]
    out.sort(key=lambda s: (s.bit_count(), s))
    return out


def is_strongly_reduced(g: SimpleGraph) -> bool:
    """No proper collapsible full subgraph on >= 2 vertices."""
    full = g.full_mask
    for s in range(1, 1 << g.n):
        if s != full and s.bit_count() >= 2 and is_collapsible(g, s):
            return False
    return True


def is_clique_reduced(g: SimpleGraph) -> bool:
    """No proper collapsible complete full subgraph on >= 2 vertices."""
    full = g.full_mask
    for s in range(1, 1 << g.n):
        if (s != full and s.bit_count() >= 2 and is_clique(g, s)
                and is_collapsible(g, s)):
            return False
    return True


# -- transvections ----------------------------------------------------------

def dominates(g: SimpleGraph, v: int, w: int) -> bool:
    """True iff ``lk(v)`` is contained in ``st(w)`` (written v <= w), v != w."""
    return v != w and not link(g, v) & ~star(g, w)


def domination_pairs(g: SimpleGraph) -> list[tuple[int, int]]:
    """All ordered pairs (v, w), v != w, with lk(v) a subset of st(w)."""
    return [(v, w) for v in range(g.n) for w in range(g.n)
            if dominates(g, v, w)]


def untransvectable_vertices(g: SimpleGraph) -> int:
    """Vertices v with no w != v satisfying lk(v) within st(w)."""
    out = 0
    for v in range(g.n):
        if not any(dominates(g, v, w) for w in range(g.n)):
            out |= 1 << v
    return out


def is_transvection_free(g: SimpleGraph) -> bool:
    return untransvectable_vertices(g) == g.full_mask


def domination_classes(g: SimpleGraph) -> QuotientGraph:
    """Quotient by ``v ~ v'`` (mutual domination, reflexively closed)."""
    classes: list[int] = []
    cls_of = [-1] * g.n
    for v in range(g.n):
        if cls_of[v] >= 0:
            continue
        m = 1 << v
        for w in range(v + 1, g.n):
            if cls_of[w] < 0 and dominates(g, v, w) and dominates(g, w, v):
                m |= 1 << w
        idx = len(classes)
        classes.append(m)
        for w in bits(m):
            cls_of[w] = idx
    k = len(classes)
    rows = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            reps = [(v, w) for v in bits(classes[i]) for w in bits(classes[j])]
            adj = [g.has_edge(v, w) for v, w in reps]
            # adjacency between classes never depends on the representatives
            assert all(adj) or not any(adj)
            if adj[0]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return QuotientGraph(tuple(classes), SimpleGraph(k, tuple(rows)),
                         tuple(cls_of))


def transvection_structure(g: SimpleGraph):
    """(untransvectable mask, ordered domination pairs, quotient graph)."""
    return (untransvectable_vertices(g), domination_pairs(g),
            domination_classes(g))


def untransvectable_subgraph(g: SimpleGraph) -> SimpleGraph:
    """Induced subgraph on the untransvectable vertices (may be empty)."""
    sub, _ = induced_or_empty(g, untransvectable_vertices(g))
    return sub


def internal_vertices(g: SimpleGraph) -> int:
    """Vertices whose link is not a clique."""
    return mask_of(v for v in range(g.n) if not is_clique(g, link(g, v)))


def has_separating_star(g: SimpleGraph) -> int | None:
    """Some vertex whose closed neighbourhood disconnects the rest, else None.

    An empty remainder counts as connected.  Deterministic: the smallest such
    vertex index is returned.
    """
    for v in range(g.n):
        rest = g.full_mask & ~star(g, v)
        if rest and not is_connected(g, rest):
            return v
    return None


# -- graph surgery -----------------------------------------------------------

def collapse(g: SimpleGraph, s: int) -> SimpleGraph:
    """Replace the collapsible set ``s`` by one vertex adjacent to ``perp(s)``.

    The new vertex takes the smallest index of ``s``; remaining vertices keep
    their relative order.
    """
    if not is_collapsible(g, s):
        raise ValueError("set is not collapsible")
    keep = (g.full_mask & ~s) | (s & -s)
    new_v = (s & -s).bit_length() - 1
    p = perp(g, s)
    sub, old = induced(g, keep)
    pos = {v: i for i, v in enumerate(old)}
    rows = list(sub.adj)
    i = pos[new_v]
    rows[i] = mask_of(pos[w] for w in bits(p))
    for j in range(sub.n):
        if rows[i] >> j & 1:
            rows[j] |= 1 << i
        else:
            rows[j] &= ~(1 << i)
    return SimpleGraph(sub.n, tuple(rows))


def substitute(g: SimpleGraph, v: int, h: SimpleGraph) -> SimpleGraph:
    """Replace vertex ``v`` by a copy of ``h``.

    Every vertex of the copy is adjacent to ``lk(v)`` and to its neighbours
    inside the copy.  The copy occupies indices ``v .. v+h.n-1``; later
    vertices shift up, so collapsing the copy again recovers ``g`` exactly.
    """
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range")
    if h.n < 1:
        raise ValueError("substituted graph must be nonempty")
    n = g.n - 1 + h.n

    def newpos(w: int) -> int:
        return w if w < v else w + h.n - 1

    rows = [0] * n
    for a, b in g.edges():
        if v in (a, b):
            continue
        na, nb = newpos(a), newpos(b)
        rows[na] |= 1 << nb
        rows[nb] |= 1 << na
    lk_new = mask_of(newpos(w) for w in bits(link(g, v)))
    for i in range(h.n):
        vi = v + i
        rows[vi] |= lk_new
        for w in bits(lk_new):
            rows[w] |= 1 << vi
        for j in bits(h.adj[i]):
            rows[vi] |= 1 << (v + j)
            rows[v + j] |= 1 << vi
    return SimpleGraph(n, tuple(rows))
