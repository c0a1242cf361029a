"""Strong elimination orderings (SEOs).

An ordering ``v_1..v_n`` is a strong elimination ordering when, for every
``i <= j <= k`` with ``v_j, v_k`` in the forward closed neighbourhood of ``v_i``,
the forward closed neighbourhood of ``v_j`` (restricted to positions >= i) is
contained in that of ``v_k``.

All positions here are 0-based.
"""
from __future__ import annotations

import heapq
from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, InvalidInstance, validate_connected


class NotAPermutation(ValueError):
    pass


class NotStronglyChordal(ValueError):
    pass


# Exhaustive fallback is only attempted up to this many vertices.
EXHAUSTIVE_LIMIT = 10


def _check_permutation(n: int, order: Sequence[int]) -> None:
    if len(order) != n or sorted(order) != list(range(n)):
        raise NotAPermutation(f"ordering is not a permutation of 0..{n - 1}")


@dataclass(frozen=True, eq=False)
class SeoOrdering:
    """A vertex ordering with the lookup tables the solver needs.

    ``nbr_pos[p]`` lists the positions of the neighbours of ``order[p]`` in
    increasing order, so the forward part of a neighbourhood is a suffix.
    """

    order: list[int]
    pos: list[int]
    f: list[int]
    nbr_pos: list[list[int]] = field(repr=False)

    @classmethod
    def build(cls, g: Graph, order: Sequence[int]) -> "SeoOrdering":
        n = g.n
        _check_permutation(n, order)
        order = list(order)
        pos = [0] * n
        for p, v in enumerate(order):
            pos[v] = p
        adj = g.adj
        nbr_pos = []
        f = []
        for p, v in enumerate(order):
            row = sorted([pos[u] for u in adj[v]])
            nbr_pos.append(row)
            f.append(row[-1] if row and row[-1] > p else p)
        return cls(order, pos, f, nbr_pos)

    @property
    def n(self) -> int:
        return len(self.order)

    def f_of(self, p: int) -> int:
        return self.f[p]

    def forward_closed_neighborhood(self, i: int, v: int) -> list[int]:
        """``{v} ∪ {u ∈ N(v) : pos[u] >= i}`` as original vertex ids."""
        p = self.pos[v]
        row = self.nbr_pos[p]
        order = self.order
        return [v] + [order[q] for q in row[bisect_left(row, i):]]


def f_of(seo: SeoOrdering, p: int) -> int:
    return seo.f[p]


def forward_closed_neighborhood(seo: SeoOrdering, i: int, v: int) -> list[int]:
    return seo.forward_closed_neighborhood(i, v)


class ForwardView:
    """Per-position cursors into ``nbr_pos`` marking the first neighbour at a
    position >= the current iteration. Cursors only move forward."""

    __slots__ = ("nbr_pos", "cursor")

    def __init__(self, seo: SeoOrdering):
        self.nbr_pos = seo.nbr_pos
        self.cursor = [0] * seo.n

    def fwd_deg(self, p: int, i: int) -> int:
        """``|N_i[v_p]|``: neighbours at positions >= i, plus ``v_p`` itself if ``p >= i``."""
        row = self.nbr_pos[p]
        c = self.cursor[p]
        end = len(row)
        while c < end and row[c] < i:
            c += 1
        self.cursor[p] = c
        return end - c + (p >= i)


def seo_violation(g: Graph, order: Sequence[int]) -> tuple[int, int, int] | None:
    """First ``(i, j, k)`` (positions) breaking the SEO condition, or ``None``.

    Nesting is transitive, so checking consecutive members of each forward
    closed neighbourhood covers all pairs ``j <= k``.
    """
    seo = SeoOrdering.build(g, order)
    nbr_pos = seo.nbr_pos
    nbr_sets = [set(row) for row in nbr_pos]
    for i in range(seo.n):
        row = nbr_pos[i]
        members = [i] + row[bisect_left(row, i + 1):]
        for j, k in zip(members, members[1:]):
            nk = nbr_sets[k]
            rj = nbr_pos[j]
            # N_i[v_j] ⊆ N_i[v_k]: v_j itself, then forward neighbours of v_j
            if j not in nk:
                return (i, j, k)
            for q in rj[bisect_left(rj, i):]:
                if q != k and q not in nk:
                    return (i, j, k)
    return None


def verify_seo(g: Graph, order: Sequence[int]) -> bool:
    """True iff ``order`` (vertex at each position) is a strong elimination ordering."""
    return seo_violation(g, order) is None


def _chain(nb, v: int) -> list[int] | None:
    """``N[v]`` sorted into an inclusion chain of closed neighbourhoods, or ``None``
    if the closed neighbourhoods are not nested (``v`` is not simple)."""
    members = sorted([v, *nb[v]], key=lambda u: len(nb[u]))
    for x, y in zip(members, members[1:]):
        ny = nb[y]
        if x != v and y != v and x not in ny:
            return None
        for w in nb[x]:
            if w != y and w not in ny:
                return None
    return members


def is_simple_vertex(g: Graph, v: int) -> bool:
    """True iff the closed neighbourhoods of ``N[v]`` form a chain under inclusion."""
    nb = [set(a) for a in g.adj]
    return _chain(nb, v) is not None


def _nesting_groups(nb, chain: list[int]) -> list[list[int]]:
    """Split a chain (minus its head) into runs of equal closed neighbourhoods."""
    groups: list[list[int]] = []
    last = -1
    for u in chain[1:]:
        size = len(nb[u])
        if size != last:
            groups.append([])
            last = size
        groups[-1].append(u)
    return groups


def simple_elimination_order(g: Graph) -> list[int]:
    """Eliminate simple vertices one at a time, lowest id first, subject to nesting.

    A simple vertex alone is not enough for a strong elimination ordering: when
    ``v`` is eliminated, neighbours whose remaining closed neighbourhood is
    strictly smaller must come before those whose neighbourhood is larger. Those
    precedences are recorded and a simple vertex waits until its predecessors
    are gone.

    Simplicity survives vertex deletion, so after deleting ``v`` only the
    non-simple vertices within distance two of ``v`` are re-examined.
    """
    n = g.n
    nb = [set(a) for a in g.adj]
    simple = [_chain(nb, v) is not None for v in range(n)]
    heap = [v for v in range(n) if simple[v]]
    heapq.heapify(heap)
    alive = [True] * n
    preds: list[list[int]] = [[] for _ in range(n)]
    waiting: list[list[int]] = [[] for _ in range(n)]
    order = []
    while heap:
        v = heapq.heappop(heap)
        blocker = next((p for p in preds[v] if alive[p]), None)
        if blocker is not None:
            waiting[blocker].append(v)
            continue
        chain = _chain(nb, v)
        groups = _nesting_groups(nb, chain)
        for before, after in zip(groups, groups[1:]):
            for y in after:
                preds[y].extend(before)
        order.append(v)
        alive[v] = False
        preds[v] = []
        ball = set(nb[v])
        for u in nb[v]:
            ball.update(nb[u])
        for u in nb[v]:
            nb[u].discard(v)
        ball.discard(v)
        nb[v] = set()
        for u in waiting[v]:
            heapq.heappush(heap, u)
        waiting[v] = []
        for u in ball:
            if not simple[u] and _chain(nb, u) is not None:
                simple[u] = True
                heapq.heappush(heap, u)
    if len(order) != n:
        stuck = min(v for v in range(n) if alive[v])
        raise NotStronglyChordal(
            f"no eligible simple vertex among the {n - len(order)} remaining vertices "
            f"(lowest id {stuck + 1})"
        )
    return order


def exhaustive_seo(g: Graph) -> list[int] | None:
    """Search every constrained elimination sequence; ``None`` if no SEO exists.

    A sequence where each vertex is simple in what remains and respects the
    recorded nesting precedences is exactly a strong elimination ordering, so
    this search is complete. Exponential; intended for tiny graphs only.
    """
    failed: set = set()

    def search(alive: frozenset[int], preds: dict[int, frozenset[int]]) -> list[int] | None:
        if not alive:
            return []
        key = (alive, frozenset((y, p) for y, ps in preds.items() for p in ps if p in alive and y in alive))
        if key in failed:
            return None
        nb = {v: set(g.adj[v]) & alive for v in alive}
        for v in sorted(alive):
            if preds.get(v, frozenset()) & alive:
                continue
            chain = _chain(nb, v)
            if chain is None:
                continue
            nxt = dict(preds)
            groups = _nesting_groups(nb, chain)
            for before, after in zip(groups, groups[1:]):
                for y in after:
                    nxt[y] = nxt.get(y, frozenset()) | frozenset(before)
            rest = search(alive - {v}, nxt)
            if rest is not None:
                return [v, *rest]
        failed.add(key)
        return None

    return search(frozenset(range(g.n)), {})


def find_seo(g: Graph) -> SeoOrdering:
    """Compute a verified strong elimination ordering of a connected graph.

    Raises :class:`NotStronglyChordal` when none is found.
    """
    if g.n < 3:
        raise InvalidInstance("need at least 3 vertices")
    if not validate_connected(g):
        raise InvalidInstance("graph is disconnected")
    try:
        order = simple_elimination_order(g)
    except NotStronglyChordal:
        if g.n > EXHAUSTIVE_LIMIT:
            raise
        order = None
    if order is not None and verify_seo(g, order):
        return SeoOrdering.build(g, order)
    if g.n <= EXHAUSTIVE_LIMIT:
        order = exhaustive_seo(g)
        if order is not None and verify_seo(g, order):
            return SeoOrdering.build(g, order)
        raise NotStronglyChordal("no strong elimination ordering exists")
    raise NotStronglyChordal("elimination ordering failed SEO verification")
