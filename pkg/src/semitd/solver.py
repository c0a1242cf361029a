"""Linear-time minimum semitotal dominating set on a strongly chordal graph.

The solver sweeps a strong elimination ordering once. Everything below works
on SEO positions (0-based); results are mapped back to vertex ids at the end.

Labels per position ``p``:

* ``dom[p]``   1 once some selected vertex dominates ``v_p``.
* ``label[p]`` 0 unselected, 1 selected without a partner yet, 2 selected with one.
* ``mark[p]``  position of a partnerless selected neighbour (or ``v_p`` itself)
  that still needs a partner, ``UNMARKED`` otherwise.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, InvalidInstance, validate_connected
from .ordering import ForwardView, SeoOrdering, seo_violation

UNMARKED = -1


class TooSmall(InvalidInstance):
    pass


class DisconnectedInput(InvalidInstance):
    pass


class UnverifiedOrdering(ValueError):
    pass


class InvariantViolation(AssertionError):
    """A debug-mode check on the solver state failed."""


@dataclass
class TraceEvent:
    """What happened while processing one position.

    ``case`` is one of ``"a"`` (select F partnerless), ``"b"`` (select from B
    with partner), ``"c"`` (select the last vertex), ``"d-clear"``,
    ``"d-last"``, ``"d-pair"`` or ``"skip"``.
    """

    i: int
    case: str
    selected: list[int] = field(default_factory=list)
    paired: list[int] = field(default_factory=list)
    marked: list[int] = field(default_factory=list)
    unmarked: list[int] = field(default_factory=list)


@dataclass
class SemiTdResult:
    set: list[int]
    size: int
    trace: list[TraceEvent] | None = None


class SolverState:
    """Mutable labels for one solver run; see the module docstring."""

    def __init__(self, seo: SeoOrdering):
        n = seo.n
        self.seo = seo
        self.nbr_pos = seo.nbr_pos
        self.f = seo.f
        self.dom = [0] * n
        self.label = [0] * n
        self.mark_of = [UNMARKED] * n
        self.has_dom_nbr = [False] * n
        self.fwd = ForwardView(seo)
        self.selected: list[int] = []
        self.debug = False
        self._event: TraceEvent | None = None

    # -- primitive updates ---------------------------------------------------

    def _dominate(self, u: int) -> None:
        if not self.dom[u]:
            self.dom[u] = 1
            hd = self.has_dom_nbr
            hd[u] = True
            for w in self.nbr_pos[u]:
                hd[w] = True

    def dominate_closed(self, x: int) -> None:
        dom, hd, nbr_pos = self.dom, self.has_dom_nbr, self.nbr_pos
        for u in (x, *nbr_pos[x]):
            if not dom[u]:
                dom[u] = 1
                hd[u] = True
                for w in nbr_pos[u]:
                    hd[w] = True

    def select(self, x: int, lab: int) -> None:
        if self.label[x] == 0:
            self.selected.append(x)
            if self._event is not None:
                self._event.selected.append(x)
        self.label[x] = lab

    def pair(self, s: int) -> None:
        """Record that ``v_s`` now has a partner within distance two."""
        self.label[s] = 2
        if self._event is not None:
            self._event.paired.append(s)

    def compute_B(self, i: int) -> list[int]:
        """Positions ``k`` in ``N_i[v_i]`` with ``N_i[v_k] = N_i[F(v_i)]`` and a dominated
        closed neighbour, in increasing order.

        Every such ``v_k`` already satisfies ``N_i[v_k] ⊆ N_i[F(v_i)]`` on an SEO, so
        equal forward closed degrees mean equal sets.
        """
        fwd = self.fwd
        target = fwd.fwd_deg(self.f[i], i)
        hd = self.has_dom_nbr
        row = self.nbr_pos[i]
        c = fwd.cursor[i]
        while c < len(row) and row[c] <= i:
            c += 1
        out = []
        for k in (i, *row[c:]):
            if hd[k] and fwd.fwd_deg(k, i) == target:
                out.append(k)
        return out

    def mark(self, j: int, i: int) -> None:
        """Point every closed neighbour of ``v_j`` beyond position ``i`` at ``j``."""
        m = self.mark_of
        debug = self.debug
        touched = []
        if j > i:
            touched.append(j)
        for k in self.nbr_pos[j]:
            if k > i:
                touched.append(k)
        for k in touched:
            if debug and m[k] != UNMARKED and self.label[m[k]] == 1:
                raise InvariantViolation(
                    f"mark({j}) at i={i} overwrites live obligation of {m[k]} at {k}"
                )
            m[k] = j
        if self._event is not None:
            self._event.marked.extend(touched)

    def unmark(self, s: int) -> None:
        m = self.mark_of
        m[s] = UNMARKED
        for k in self.nbr_pos[s]:
            m[k] = UNMARKED
        if self._event is not None:
            self._event.unmarked.append(s)

    def settle_pending(self, k: int) -> None:
        """After selecting ``v_k``: every marked vertex in ``N[v_k]`` points at a
        selected vertex within distance two of ``v_k``; give it its partner."""
        m = self.mark_of
        # m is re-read per visit: an unmark inside the loop can clear later entries
        for r in (k, *self.nbr_pos[k]):
            s = m[r]
            if s != UNMARKED:
                self.pair(s)
                self.unmark(s)

    # -- debug checks --------------------------------------------------------

    def check_head(self, i: int) -> None:
        """Invariants that must hold at the start of iteration ``i``."""
        dom, m, lab = self.dom, self.mark_of, self.label
        for j in range(i):
            if not dom[j]:
                raise InvariantViolation(f"position {j} undominated at head of iteration {i}")
            if m[j] != UNMARKED:
                raise InvariantViolation(f"position {j} still marked at head of iteration {i}")
        for k in self.selected:
            if lab[k] == 1:
                if k < i and not any(q >= i and m[q] == k for q in (k, *self.nbr_pos[k])):
                    raise InvariantViolation(f"pending vertex {k} has no live mark at iteration {i}")
        pending = [k for k in self.selected if lab[k] == 1]
        seen: set[int] = set()
        for k in pending:
            closed = {k, *self.nbr_pos[k]}
            if not seen.isdisjoint(closed):
                raise InvariantViolation(f"closed neighbourhoods of pending vertices overlap at {k}")
            seen |= closed

    def has_partner(self, k: int) -> bool:
        sel = self.label
        nb = self.nbr_pos
        for u in nb[k]:
            if sel[u] and u != k:
                return True
            for w in nb[u]:
                if w != k and sel[w]:
                    return True
        return False


def _check_instance(g: Graph, seo: SeoOrdering, verify: bool) -> None:
    if g.n < 3:
        raise TooSmall(f"need at least 3 vertices, got {g.n}")
    if seo.n != g.n:
        raise ValueError("ordering and graph sizes differ")
    if not validate_connected(g):
        raise DisconnectedInput("graph is disconnected")
    if verify:
        bad = seo_violation(g, seo.order)
        if bad is not None:
            i, j, k = (p + 1 for p in bad)
            raise UnverifiedOrdering(f"not a strong elimination ordering (positions {i}, {j}, {k})")


def run(seo: SeoOrdering, *, debug: bool = False, trace: bool = False) -> tuple[SolverState, list[TraceEvent] | None]:
    """Sweep the ordering once. Returns the final state (and the trace if requested)."""
    st = SolverState(seo)
    st.debug = debug
    n = seo.n
    f = seo.f
    nbr_pos = seo.nbr_pos
    dom, lab, m = st.dom, st.label, st.mark_of
    events: list[TraceEvent] | None = [] if trace else None

    for i in range(n):
        if debug:
            st.check_head(i)
        if events is not None:
            st._event = TraceEvent(i, "skip")
            events.append(st._event)
        ev = st._event

        if not dom[i]:
            fi = f[i]
            if fi != i:
                b = st.compute_B(i)
                if not b:
                    if ev:
                        ev.case = "a"
                    st.select(fi, 1)
                    st.mark(fi, i)
                    st.dominate_closed(fi)
                else:
                    if ev:
                        ev.case = "b"
                    k = b[-1]
                    st.select(k, 2)
                    st.dominate_closed(k)
                    if debug and not st.has_partner(k):
                        raise InvariantViolation(f"case b selected {k} without a partner")
                    st.settle_pending(k)
            else:
                if ev:
                    ev.case = "c"
                if debug and i != n - 1:
                    raise InvariantViolation(f"F(v_{i}) = v_{i} before the last position")
                st.select(i, 2)
                st._dominate(i)
        elif m[i] != UNMARKED:
            s = m[i]
            t = f[s]
            if i < t:
                if ev:
                    ev.case = "d-clear"
                if debug and not any(r > i and m[r] == s for r in (s, *nbr_pos[s])):
                    raise InvariantViolation(f"no later mark for {s} at iteration {i}")
                m[i] = UNMARKED
            elif i == t and f[i] == i:
                if ev:
                    ev.case = "d-last"
                # highest position in N[v_i] other than v_s: v_i itself unless s == i
                u = i if s != i else nbr_pos[i][-1]
                st.select(u, 2)
                st.pair(s)
                st.unmark(s)
            else:
                if debug and i != t:
                    raise InvariantViolation(f"stale mark {s} at iteration {i} > F = {t}")
                if ev:
                    ev.case = "d-pair"
                x = f[i]
                st.select(x, 2)
                st.pair(s)
                st.unmark(s)
                st.dominate_closed(x)
                st.settle_pending(x)
    st._event = None

    if debug:
        if any(v == 1 for v in lab):
            raise InvariantViolation("a selected vertex ended without a partner")
        if not all(dom):
            raise InvariantViolation("undominated vertex at termination")
    return st, events


def _result(g: Graph, seo: SeoOrdering, st: SolverState, events) -> SemiTdResult:
    order = seo.order
    members = sorted(order[p] for p in st.selected if st.label[p] == 2)
    return SemiTdResult(members, len(members), events)


def solve(g: Graph, seo: SeoOrdering, *, verify: bool = False, debug: bool = False) -> SemiTdResult:
    """Minimum semitotal dominating set of ``g`` given a strong elimination ordering."""
    _check_instance(g, seo, verify)
    st, _ = run(seo, debug=debug)
    return _result(g, seo, st, None)


def solve_with_trace(g: Graph, seo: SeoOrdering, *, verify: bool = False, debug: bool = True) -> SemiTdResult:
    _check_instance(g, seo, verify)
    st, events = run(seo, debug=debug, trace=True)
    return _result(g, seo, st, events)
