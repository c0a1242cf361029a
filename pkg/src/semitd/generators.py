"""Seeded generators for strongly chordal families: trees, interval graphs, block graphs.

Randomness comes from SplitMix64 (Steele, Lea & Flood), fixed here so that
corpora are reproducible across platforms and languages:

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

all arithmetic modulo 2**64.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass

from .graph import Graph

MASK64 = (1 << 64) - 1

FAMILIES = ("tree", "interval", "block")

# Mean interval length is scale / n; m is close to scale * n for large n.
DEFAULT_INTERVAL_SCALE = 4.0
DEFAULT_MAX_CLIQUE = 4


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection (no modulo bias)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound

    def random(self) -> float:
        """Uniform float in ``[0, 1)`` with 53 random bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def shuffle(self, items: list) -> None:
        for k in range(len(items) - 1, 0, -1):
            j = self.below(k + 1)
            items[k], items[j] = items[j], items[k]


def _relabel(n: int, edges: list[tuple[int, int]], rng: SplitMix64) -> Graph:
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edges(n, [(perm[u], perm[v]) for u, v in edges])


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labelled tree on ``n`` vertices, decoded from a random Prüfer sequence."""
    if n < 3:
        raise ValueError("n must be at least 3")
    rng = SplitMix64(seed)
    seq = [rng.below(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


def random_intervals(n: int, seed: int, scale: float = DEFAULT_INTERVAL_SCALE) -> list[tuple[float, float]]:
    """``n`` random intervals on [0, 1] whose intersection graph is connected.

    Left endpoints are uniform, lengths uniform on ``[0, 2*scale/n]``. Wherever
    the union has a gap, the interval reaching furthest right is stretched to
    the next left endpoint. Interval ``k`` is vertex ``k``.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    rng = SplitMix64(seed)
    width = 2.0 * scale / n
    raw = []
    for _ in range(n):
        left = rng.random()
        raw.append([left, left + rng.random() * width])
    by_left = sorted(range(n), key=lambda k: raw[k][0])
    reach = by_left[0]
    for k in by_left[1:]:
        if raw[reach][1] < raw[k][0]:
            raw[reach][1] = raw[k][0]
        if raw[k][1] > raw[reach][1]:
            reach = k
    return [(a, b) for a, b in raw]


def interval_graph(intervals: list[tuple[float, float]]) -> Graph:
    n = len(intervals)
    by_left = sorted(range(n), key=lambda k: intervals[k][0])
    edges = []
    lefts = [intervals[k][0] for k in by_left]
    for a, u in enumerate(by_left):
        right = intervals[u][1]
        b = a + 1
        while b < n and lefts[b] <= right:
            edges.append((u, by_left[b]))
            b += 1
    return Graph.from_edges(n, edges)


def interval_seo_order(intervals: list[tuple[float, float]]) -> list[int]:
    """Vertices by increasing right endpoint; a strong elimination ordering of the interval graph."""
    return sorted(range(len(intervals)), key=lambda k: (intervals[k][1], k))


def random_interval_graph(n: int, seed: int, scale: float = DEFAULT_INTERVAL_SCALE) -> Graph:
    return interval_graph(random_intervals(n, seed, scale))


def random_block_graph(n: int, seed: int, max_clique: int = DEFAULT_MAX_CLIQUE) -> Graph:
    """Random connected block graph: cliques of size 2..max_clique glued at cut vertices."""
    if n < 3:
        raise ValueError("n must be at least 3")
    if max_clique < 2:
        raise ValueError("max_clique must be at least 2")
    rng = SplitMix64(seed)
    edges: list[tuple[int, int]] = []
    count = 1
    while count < n:
        cut = rng.below(count)
        size = min(2 + rng.below(max_clique - 1), n - count + 1)
        block = [cut, *range(count, count + size - 1)]
        count += size - 1
        edges.extend((block[a], block[b]) for a in range(size) for b in range(a + 1, size))
    return _relabel(n, edges, rng)


@dataclass(frozen=True)
class GenSpec:
    family: str
    n: int
    seed: int
    scale: float = DEFAULT_INTERVAL_SCALE
    max_clique: int = DEFAULT_MAX_CLIQUE

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.n < 3:
            raise ValueError("n must be at least 3")

    def generate(self) -> Graph:
        if self.family == "tree":
            return random_tree(self.n, self.seed)
        if self.family == "interval":
            return random_interval_graph(self.n, self.seed, self.scale)
        return random_block_graph(self.n, self.seed, self.max_clique)


def generate(family: str, n: int, seed: int, **knobs) -> Graph:
    return GenSpec(family, n, seed, **knobs).generate()
