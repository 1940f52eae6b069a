"""Words in the right-angled Coxeter group of a simple graph.

Generators are the vertices; every generator is an involution and two
generators commute exactly when they are adjacent.  Elements are kept in a
canonical normal form: the ShortLex-least word among all reduced words of the
element (all reduced words of one element differ only by swapping adjacent
commuting letters, so they form a single commutation class).

Reduction happens in two steps.  Appending a letter ``a`` to a reduced word
either cancels (there is an occurrence of ``a`` separated from the end only by
letters commuting with ``a``; the word with that occurrence removed is again
reduced) or extends the word.  The ShortLex-least representative of the
resulting commutation class is then extracted greedily: repeatedly pull out
the smallest letter whose occurrences can be moved to the front, i.e. which
has no earlier non-commuting letter.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import CapExceeded, OracleDisagreement
from .graphs import SimpleGraph, bits, link

Letters = tuple[int, ...]


def _nonadj(g: SimpleGraph) -> tuple[int, ...]:
    # bit w set in row v  <=>  w does not commute with v (includes w == v)
    full = g.full_mask
    return tuple(full & ~row for row in g.adj)


def _reduced_append(adj: Sequence[int], word: list[int], a: int) -> None:
    """Multiply the reduced word by the generator ``a``, in place."""
    i = len(word) - 1
    while i >= 0:
        b = word[i]
        if b == a:
            del word[i]
            return
        if not adj[b] >> a & 1:
            break
        i -= 1
    word.append(a)


def _shortlex(nonadj: Sequence[int], word: Iterable[int]) -> Letters:
    """ShortLex-least word in the commutation class of a reduced word."""
    rem = list(word)
    out = []
    while rem:
        acc = 0
        best = -1
        best_i = -1
        for i, c in enumerate(rem):
            if not acc >> c & 1 and (best < 0 or c < best):
                best, best_i = c, i
            acc |= nonadj[c]
        out.append(best)
        del rem[best_i]
    return tuple(out)


def _initial_letters(nonadj: Sequence[int], word: Sequence[int]) -> int:
    """Letters that can start a reduced word of the element (as a mask)."""
    acc = 0
    out = 0
    for c in word:
        if not acc >> c & 1:
            out |= 1 << c
        acc |= nonadj[c]
    return out


@dataclass(frozen=True)
class CoxeterWord:
    """A group element, stored as its ShortLex normal form.

    Do not construct directly; use :func:`reduce_word` and friends.  Equality
    and hashing are by (graph, normal form), so words are usable as element
    ids.
    """

    graph: SimpleGraph = field(compare=False)
    letters: Letters = ()
    _graph_key: tuple = field(init=False, repr=False, default=())

    def __post_init__(self):
        object.__setattr__(self, "_graph_key", (self.graph.n, self.graph.adj))

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def is_identity(self) -> bool:
        return not self.letters


def _same_graph(a: CoxeterWord, b: CoxeterWord) -> None:
    if a._graph_key != b._graph_key:
        raise ValueError("words live over different graphs")


def reduce_word(graph: SimpleGraph, raw: Iterable[int]) -> CoxeterWord:
    """Canonical normal form of the product of the given generators.

    >>> g = SimpleGraph.from_edges(2, [(0, 1)])
    >>> reduce_word(g, [0, 1, 0]).letters
    (1,)
    """
    adj = graph.adj
    word: list[int] = []
    for a in raw:
        if not 0 <= a < graph.n:
            raise ValueError(f"letter {a} out of range")
        _reduced_append(adj, word, a)
    return CoxeterWord(graph, _shortlex(_nonadj(graph), word))


def multiply(a: CoxeterWord, b: CoxeterWord) -> CoxeterWord:
    _same_graph(a, b)
    adj = a.graph.adj
    word = list(a.letters)
    for x in b.letters:
        _reduced_append(adj, word, x)
    return CoxeterWord(a.graph, _shortlex(_nonadj(a.graph), word))


def invert(a: CoxeterWord) -> CoxeterWord:
    # generators are involutions, so the reverse word is the inverse
    return CoxeterWord(a.graph, _shortlex(_nonadj(a.graph), reversed(a.letters)))


def support(w: CoxeterWord) -> int:
    out = 0
    for c in w.letters:
        out |= 1 << c
    return out


def starts_with(w: CoxeterWord) -> int:
    """Mask of letters a with |a.w| < |w|."""
    return _initial_letters(_nonadj(w.graph), w.letters)


def ends_with(w: CoxeterWord) -> int:
    """Mask of letters a with |w.a| < |w|."""
    return _initial_letters(_nonadj(w.graph), tuple(reversed(w.letters)))


def link_of_word(w: CoxeterWord) -> int:
    """Common link of the support; the empty word maps to all vertices."""
    out = w.graph.full_mask
    for v in bits(support(w)):
        out &= link(w.graph, v)
    return out


def support_and_boundary(w: CoxeterWord) -> tuple[int, int, int, int]:
    """(support, starts_with, ends_with, common link) masks."""
    return support(w), starts_with(w), ends_with(w), link_of_word(w)


def parabolic_membership(w: CoxeterWord, s: int) -> bool:
    """True iff the element lies in the parabolic subgroup on ``s``.

    The support of an element does not depend on the chosen reduced word, so
    this is a support inclusion test (cross-validated against the brute-force
    oracle in the verification suite).
    """
    return not support(w) & ~s


@dataclass(frozen=True)
class Enumeration:
    """All elements up to a length bound, stratified by length.

    ``words`` is ordered by (length, normal form); ``strata[k]`` counts the
    elements of length exactly ``k``.
    """

    graph: SimpleGraph
    max_len: int
    words: tuple[Letters, ...]
    strata: tuple[int, ...]

    @property
    def index(self) -> dict[Letters, int]:
        return {w: i for i, w in enumerate(self.words)}


def enumerate_words(graph: SimpleGraph, max_len: int,
                    cap: int = 10_000_000) -> Enumeration:
    """BFS over the Cayley graph, deduplicated by normal form."""
    nonadj = _nonadj(graph)
    adj = graph.adj
    seen = {()}
    strata = [1]
    frontier = [()]
    words = [()]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for a in range(graph.n):
                lst = list(w)
                _reduced_append(adj, lst, a)
                if len(lst) <= len(w):
                    continue
                nf = _shortlex(nonadj, lst)
                if nf not in seen:
                    seen.add(nf)
                    nxt.append(nf)
                    if len(seen) > cap:
                        raise CapExceeded(
                            f"element count exceeded cap {cap}")
        nxt.sort()
        strata.append(len(nxt))
        words.extend(nxt)
        frontier = nxt
    return Enumeration(graph, max_len, tuple(words), tuple(strata))


@lru_cache(maxsize=256)
def _parabolic_ball(graph: SimpleGraph, s: int, max_len: int) -> tuple[Letters, ...]:
    """Normal forms of all elements of the parabolic on ``s`` with length <= max_len."""
    nonadj = _nonadj(graph)
    adj = graph.adj
    seen = {()}
    frontier = [()]
    out = [()]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for a in bits(s):
                lst = list(w)
                _reduced_append(adj, lst, a)
                if len(lst) <= len(w):
                    continue
                nf = _shortlex(nonadj, lst)
                if nf not in seen:
                    seen.add(nf)
                    nxt.append(nf)
        nxt.sort()
        out.extend(nxt)
        frontier = nxt
    return tuple(out)


def parabolic_ball(graph: SimpleGraph, s: int, max_len: int) -> tuple[Letters, ...]:
    if s & ~graph.full_mask:
        raise ValueError("vertex set has bits outside the graph")
    return _parabolic_ball(graph, s, max_len)


def _is_geodesic_prefix(x: CoxeterWord, w: CoxeterWord) -> bool:
    """True iff |x| + |x^-1 w| == |w| (x lies on a geodesic to w)."""
    return len(multiply(invert(x), w)) == len(w) - len(x)


def product_set_membership(w: CoxeterWord, factors: Sequence[int],
                           oracle=None) -> bool:
    """Does ``w`` lie in the product of the parabolic subgroups on ``factors``?

    Dynamic programming over geodesic factorizations: states after stage k are
    the elements x

      * expressible as s_1 ... s_k with s_i in the i-th parabolic and
        |x| = |s_1| + ... + |s_k|, and
      * lying on a geodesic from the identity to ``w``.

    This assumes every element of a parabolic product admits a factorization
    with additive lengths.  Pass a :class:`graphprod.verify.WordOracle` as
    ``oracle`` to cross-check by exhaustive search within the oracle radius;
    on disagreement the oracle is retried at doubled radius, and a persistent
    disagreement raises :class:`OracleDisagreement`.
    """
    if not factors:
        raise ValueError("factor list must be nonempty")
    g = w.graph
    for s in factors:
        if s & ~g.full_mask:
            raise ValueError("factor has bits outside the graph")
    target = w.letters
    states: set[Letters] = {()}
    for s in factors:
        new: set[Letters] = set()
        for x in states:
            xw = CoxeterWord(g, x)
            z = multiply(invert(xw), w)  # remaining geodesic segment
            # grow parabolic elements that stay on a geodesic towards w
            layer = {()}
            seen = {()}
            while layer:
                nxt = set()
                for t in layer:
                    y = multiply(xw, CoxeterWord(g, t))
                    if len(y) == len(x) + len(t):
                        new.add(y.letters)
                    for a in bits(s):
                        t2 = multiply(CoxeterWord(g, t), CoxeterWord(g, (a,)))
                        if len(t2) != len(t) + 1 or t2.letters in seen:
                            continue
                        if _is_geodesic_prefix(t2, z):
                            seen.add(t2.letters)
                            nxt.add(t2.letters)
                layer = nxt
        states = {x for x in new if _is_geodesic_prefix(CoxeterWord(g, x), w)}
    answer = target in states
    if oracle is not None:
        oracle_answer = oracle.product_membership(w.letters, factors)
        if oracle_answer != answer:
            deeper = oracle.deepened().product_membership(w.letters, factors)
            if deeper != answer:
                raise OracleDisagreement(
                    f"product-set membership mismatch for {w.letters}: "
                    f"engine={answer} oracle={deeper}")
    return answer


@dataclass(frozen=True)
class WordDecomposition:
    """``w = left * core * right`` with additive lengths.

    ``left`` lies in the parabolic of the left set, ``right`` in the right
    set's; ``core`` neither starts with a left-set letter nor ends with a
    right-set letter.
    """

    left: CoxeterWord
    core: CoxeterWord
    right: CoxeterWord


def split_lcr(w: CoxeterWord, left_s: int, right_s: int) -> WordDecomposition:
    """Greedy maximal stripping of left/right parabolic letters.

    Repeatedly removes the smallest-index strippable letter from the left
    (then from the right); lengths add by construction.
    """
    g = w.graph
    nonadj = _nonadj(g)
    core = list(w.letters)
    left: list[int] = []
    while True:
        avail = _initial_letters(nonadj, core) & left_s
        if not avail:
            break
        a = (avail & -avail).bit_length() - 1
        left.append(a)
        # only the first occurrence can be free of earlier non-commuting
        # letters (a blocks itself), so it is the movable one
        del core[core.index(a)]
    right_rev: list[int] = []
    while True:
        avail = _initial_letters(nonadj, tuple(reversed(core))) & right_s
        if not avail:
            break
        a = (avail & -avail).bit_length() - 1
        right_rev.append(a)
        del core[len(core) - 1 - core[::-1].index(a)]
    return WordDecomposition(
        CoxeterWord(g, _shortlex(nonadj, left)),
        CoxeterWord(g, _shortlex(nonadj, core)),
        CoxeterWord(g, _shortlex(nonadj, reversed(right_rev))))


def parabolic_intersection_check(graph: SimpleGraph, s: int, t: int,
                                 max_len: int, cap: int = 10_000_000) -> bool:
    """Verify W_s intersect W_t == W_(s&t) on all elements of length <= max_len.

    Enumerates the three parabolic balls by normal form and compares sets.
    """
    ball_s = set(parabolic_ball(graph, s, max_len))
    if len(ball_s) > cap:
        raise CapExceeded("parabolic ball exceeded cap")
    ball_t = set(parabolic_ball(graph, t, max_len))
    ball_meet = set(parabolic_ball(graph, s & t, max_len))
    small, big = (ball_s, ball_t) if len(ball_s) <= len(ball_t) else (ball_t, ball_s)
    return {x for x in small if x in big} == ball_meet
