"""Exhaustive γ, γ_t and γ_t2 for small graphs (bitmask enumeration).

Subsets are enumerated by increasing cardinality, so the first feasible
subset found is a minimum witness.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from .graph import Graph, InvalidInstance, within_two

MAX_ORACLE_N = 24


class TooLarge(ValueError):
    pass


@dataclass(frozen=True)
class OracleReport:
    gamma: int
    gamma_t: int
    gamma_t2: int
    witness_gamma: list[int]
    witness_gamma_t: list[int]
    witness_gamma_t2: list[int]


class _Masks:
    def __init__(self, g: Graph):
        if g.n > MAX_ORACLE_N:
            raise TooLarge(f"oracle limited to n <= {MAX_ORACLE_N}, got {g.n}")
        self.n = g.n
        self.full = (1 << g.n) - 1
        self.open = [sum(1 << u for u in g.adj[v]) for v in range(g.n)]
        self.closed = [self.open[v] | (1 << v) for v in range(g.n)]
        self.two = [sum(1 << u for u in within_two(g, v)) for v in range(g.n)]


def _minimum(g: Graph, feasible: Callable[[_Masks, tuple[int, ...]], bool], lo: int = 1) -> tuple[int, list[int]]:
    mk = _Masks(g)
    for k in range(lo, g.n + 1):
        for combo in combinations(range(g.n), k):
            if feasible(mk, combo):
                return k, list(combo)
    raise InvalidInstance("no feasible set exists")


def _dominating(mk: _Masks, combo: tuple[int, ...]) -> bool:
    cover = 0
    closed = mk.closed
    for v in combo:
        cover |= closed[v]
    return cover == mk.full


def _total(mk: _Masks, combo: tuple[int, ...]) -> bool:
    cover = 0
    op = mk.open
    for v in combo:
        cover |= op[v]
    return cover == mk.full


def _semitotal(mk: _Masks, combo: tuple[int, ...]) -> bool:
    if not _dominating(mk, combo):
        return False
    s = 0
    for v in combo:
        s |= 1 << v
    two = mk.two
    return all(two[v] & s for v in combo)


def _no_isolated(g: Graph) -> None:
    if g.n > MAX_ORACLE_N:
        raise TooLarge(f"oracle limited to n <= {MAX_ORACLE_N}, got {g.n}")
    if any(not nb for nb in g.adj):
        raise InvalidInstance("graph has an isolated vertex")


def brute_force_gamma(g: Graph) -> tuple[int, list[int]]:
    if g.n > MAX_ORACLE_N:
        raise TooLarge(f"oracle limited to n <= {MAX_ORACLE_N}, got {g.n}")
    if g.n == 0:
        return 0, []
    return _minimum(g, _dominating)


def brute_force_gamma_t(g: Graph) -> tuple[int, list[int]]:
    _no_isolated(g)
    return _minimum(g, _total, lo=2)


def brute_force_gamma_t2(g: Graph) -> tuple[int, list[int]]:
    _no_isolated(g)
    return _minimum(g, _semitotal, lo=2)


def report(g: Graph) -> OracleReport:
    gamma, wd = brute_force_gamma(g)
    gamma_t2, wst = brute_force_gamma_t2(g)
    gamma_t, wt = brute_force_gamma_t(g)
    assert gamma <= gamma_t2 <= gamma_t, (gamma, gamma_t2, gamma_t)
    return OracleReport(gamma, gamma_t, gamma_t2, wd, wt, wst)
