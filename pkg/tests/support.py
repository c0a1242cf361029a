"""Independent reference implementations used only by the tests."""
from __future__ import annotations

from collections import deque
from itertools import combinations

from semitd.graph import Graph
from semitd.ordering import SeoOrdering


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(k, k + 1) for k in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, list(combinations(range(n), 2)))


def star(leaves: int) -> Graph:
    """Centre is vertex ``leaves``; leaves are ``0..leaves-1``."""
    return Graph.from_edges(leaves + 1, [(k, leaves) for k in range(leaves)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(k, (k + 1) % n) for k in range(n)])


def three_sun() -> Graph:
    a, b, c, u, v, w = range(6)
    return Graph.from_edges(6, [(a, b), (b, c), (a, c), (u, a), (u, b), (v, b), (v, c), (w, c), (w, a)])


def ids(*one_based: int) -> list[int]:
    return [v - 1 for v in one_based]


def distances(g: Graph, src: int) -> list[int]:
    dist = [-1] * g.n
    dist[src] = 0
    q = deque([src])
    while q:
        u = q.popleft()
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def all_distances(g: Graph) -> list[list[int]]:
    return [distances(g, v) for v in range(g.n)]


def definitional_seo(g: Graph, order) -> bool:
    """Literal triple loop over positions i <= j <= k."""
    n = g.n
    pos = {v: p for p, v in enumerate(order)}
    nb = [set(a) for a in g.adj]

    def fwd_closed(i, p):
        v = order[p]
        return {v} | {u for u in nb[v] if pos[u] >= i}

    for i in range(n):
        ni = fwd_closed(i, i)
        for j in range(i, n):
            if order[j] not in ni:
                continue
            for k in range(j, n):
                if order[k] in ni and not fwd_closed(i, j) <= fwd_closed(i, k):
                    return False
    return True


def semitotal_by_distance(g: Graph, d) -> bool:
    """Semitotal domination via all-pairs BFS distances."""
    d = set(d)
    dist = all_distances(g)
    dominated = all(v in d or any(u in d for u in g.adj[v]) for v in range(g.n))
    partnered = all(any(u != v and 0 < dist[v][u] <= 2 for u in d) for v in d)
    return dominated and partnered


def structural_violations(g: Graph, seo: SeoOrdering) -> list[str]:
    """Forward-neighbourhood containment facts, checked by brute force over BFS distances."""
    n = g.n
    dist = all_distances(g)
    order, pos = seo.order, seo.pos
    nb = [set(a) for a in g.adj]

    def fwd(i, v):
        return {v} | {u for u in nb[v] if pos[u] >= i}

    def fwd2(i, v):
        return {v} | {u for u in range(n) if pos[u] >= i and 0 < dist[v][u] <= 2}

    def F(v):
        return order[seo.f[pos[v]]]

    bad = []
    for i in range(n):
        vi = order[i]
        fi = F(vi)
        if fi == vi and i != n - 1:
            bad.append(f"F fixed before the end at {i}")
        if fi != vi:
            if not fwd2(i, vi) <= fwd(i, fi):
                bad.append(f"N2 not inside N[F] at {i}")
            for vk in fwd(i, vi):
                if not fwd2(i, vk) <= fwd2(i, fi):
                    bad.append(f"N2 of neighbour not inside N2[F] at {i},{vk}")
        for vj in nb[vi]:
            if pos[vj] <= i:
                continue
            if not fwd(i, vi) <= fwd(i, vj):
                bad.append(f"N[v] not inside N[u] at {i},{vj}")
            if not fwd(i, vj) <= fwd(i, fi):
                bad.append(f"N[u] not inside N[F] at {i},{vj}")
            if not fwd2(i, vi) <= fwd2(i, vj):
                bad.append(f"N2[v] not inside N2[u] at {i},{vj}")
            if not fwd2(i, vi) <= fwd2(i, F(vj)):
                bad.append(f"N2[v] not inside N2[F(u)] at {i},{vj}")
    return bad


def perfect_elimination_violations(g: Graph, seo: SeoOrdering) -> int:
    count = 0
    for i in range(g.n):
        later = [q for q in seo.nbr_pos[i] if q > i]
        for a in range(len(later)):
            for b in range(a + 1, len(later)):
                if not g.has_edge(seo.order[later[a]], seo.order[later[b]]):
                    count += 1
    return count
