"""Undirected simple graphs in CSR form, edge-list I/O and domination checkers.

Vertex ids are 0-based in memory and 1-based in every file format.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphFormatError(ValueError):
    """Raised when an edge-list or DIMACS file cannot be parsed."""


class MalformedHeader(GraphFormatError):
    pass


class VertexOutOfRange(GraphFormatError):
    pass


class SelfLoop(GraphFormatError):
    pass


class DuplicateEdge(GraphFormatError):
    pass


class EdgeCountMismatch(GraphFormatError):
    pass


class InvalidInstance(ValueError):
    """The graph is not a legal instance (isolated vertex, disconnected, too small)."""


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple graph; ``indices[indptr[v]:indptr[v+1]]`` is the sorted
    neighbour list of ``v``."""

    n: int
    indptr: list[int]
    indices: list[int]
    _adj: list[list[int]] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        ip, ix = self.indptr, self.indices
        object.__setattr__(self, "_adj", [ix[ip[v]:ip[v + 1]] for v in range(self.n)])

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build from 0-based edges. Raises on self-loops, duplicates and bad ids."""
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"edge ({u + 1}, {v + 1}) outside 1..{n}")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u + 1}")
            adj[u].append(v)
            adj[v].append(u)
        indptr = [0]
        indices: list[int] = []
        for v, nb in enumerate(adj):
            nb.sort()
            for a, b in zip(nb, nb[1:]):
                if a == b:
                    raise DuplicateEdge(f"duplicate edge ({v + 1}, {a + 1})")
            indices.extend(nb)
            indptr.append(len(indices))
        return cls(n, indptr, indices)

    @classmethod
    def from_adjacency(cls, adj: Sequence[Iterable[int]]) -> "Graph":
        edges = [(u, v) for u, nb in enumerate(adj) for v in nb if u < v]
        return cls.from_edges(len(adj), edges)

    @property
    def m(self) -> int:
        return len(self.indices) // 2

    def neighbors(self, v: int) -> list[int]:
        return self._adj[v]

    @property
    def adj(self) -> list[list[int]]:
        return self._adj

    def degree(self, v: int) -> int:
        return self.indptr[v + 1] - self.indptr[v]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self._adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        from bisect import bisect_left

        nb = self._adj[u]
        k = bisect_left(nb, v)
        return k < len(nb) and nb[k] == v

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, relabelled to ``0..len(vertices)-1`` in the given order."""
        index = {v: k for k, v in enumerate(vertices)}
        edges = [
            (index[u], index[w])
            for u in vertices
            for w in self._adj[u]
            if w in index and index[u] < index[w]
        ]
        return Graph.from_edges(len(vertices), edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.indptr == other.indptr and self.indices == other.indices

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# -- parsing / serialization -------------------------------------------------


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphFormatError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def parse_edge_list(text: str | bytes) -> Graph:
    """Parse the plain ``n m`` / ``u v`` format or the DIMACS ``p edge`` / ``e u v`` format.

    Lines starting with ``#`` or a lone ``c`` token are comments.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "c":
            continue
        lines.append((lineno, tokens))
    if not lines:
        raise MalformedHeader("empty input: missing header")

    lineno, head = lines[0]
    dimacs = head[0] == "p"
    if dimacs:
        if len(head) != 4 or head[1] not in ("edge", "col"):
            raise MalformedHeader(f"line {lineno}: expected 'p edge n m'")
        n, m = _ints(head[2:], lineno)
    else:
        if len(head) != 2:
            raise MalformedHeader(f"line {lineno}: expected 'n m'")
        n, m = _ints(head, lineno)
    if n < 0 or m < 0:
        raise MalformedHeader(f"line {lineno}: negative counts")

    edges = []
    for lineno, tok in lines[1:]:
        if dimacs:
            if tok[0] != "e" or len(tok) != 3:
                raise GraphFormatError(f"line {lineno}: expected 'e u v'")
            tok = tok[1:]
        elif len(tok) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v'")
        u, v = _ints(tok, lineno)
        if not (1 <= u <= n and 1 <= v <= n):
            raise VertexOutOfRange(f"line {lineno}: vertex outside 1..{n}")
        edges.append((u - 1, v - 1))
    if len(edges) != m:
        raise EdgeCountMismatch(f"header declares {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def read_graph(path: str) -> Graph:
    with open(path, "rb") as fh:
        return parse_edge_list(fh.read())


def serialize_edge_list(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def parse_vertex_line(text: str, n: int) -> list[int]:
    """Parse a line of space-separated 1-based ids into sorted 0-based ids."""
    ids = []
    for tok in text.split():
        if tok.startswith("#"):
            break
        try:
            v = int(tok)
        except ValueError:
            raise GraphFormatError(f"bad vertex id {tok!r}") from None
        if not 1 <= v <= n:
            raise VertexOutOfRange(f"vertex {v} outside 1..{n}")
        ids.append(v - 1)
    if len(set(ids)) != len(ids):
        raise GraphFormatError("repeated vertex id")
    return ids


def format_vertex_line(vertices: Iterable[int]) -> str:
    return " ".join(str(v + 1) for v in vertices)


# -- structural queries ------------------------------------------------------


def validate_connected(g: Graph) -> bool:
    """True iff a single search from vertex 0 reaches every vertex."""
    if g.n == 0:
        return True
    seen = bytearray(g.n)
    seen[0] = 1
    stack = [0]
    count = 1
    adj = g.adj
    while stack:
        for w in adj[stack.pop()]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                stack.append(w)
    return count == g.n


def within_two(g: Graph, v: int) -> set[int]:
    """All vertices other than ``v`` at distance 1 or 2 from it."""
    adj = g.adj
    out = set(adj[v])
    for u in adj[v]:
        out.update(adj[u])
    out.discard(v)
    return out


def is_dominating(g: Graph, d: Iterable[int]) -> bool:
    inside = [False] * g.n
    for v in d:
        inside[v] = True
    adj = g.adj
    return all(inside[v] or any(inside[u] for u in adj[v]) for v in range(g.n))


def _require_no_isolated(g: Graph) -> None:
    for v in range(g.n):
        if not g.adj[v]:
            raise InvalidInstance(f"vertex {v + 1} is isolated; semitotal domination undefined")


def semitotal_violation(g: Graph, d: Iterable[int]) -> str | None:
    """``None`` if ``d`` is a semitotal dominating set, else ``"domination"`` or ``"partner"``.

    Raises :class:`InvalidInstance` if ``g`` has an isolated vertex.
    """
    _require_no_isolated(g)
    members = sorted(set(d))
    if not is_dominating(g, members):
        return "domination"
    inside = set(members)
    for u in members:
        if inside.isdisjoint(within_two(g, u)):
            return "partner"
    return None


def is_semitotal_dominating(g: Graph, d: Iterable[int]) -> bool:
    return semitotal_violation(g, d) is None


def is_total_dominating(g: Graph, d: Iterable[int]) -> bool:
    _require_no_isolated(g)
    inside = [False] * g.n
    for v in d:
        inside[v] = True
    return all(any(inside[u] for u in g.adj[v]) for v in range(g.n))
