"""Orientation machinery: in-degree-constrained orientations, kernel-perfect
digraphs, Alon-Tarsi counting, and the f-AT / f-KP deciders.

A kernel of a digraph is an independent set K (in the underlying graph) such
that every vertex outside K has an arc into K; a digraph is kernel-perfect
when every induced subdigraph has a kernel.  The central construction here
takes an independent set A, orients the edges touching A so that every vertex
collects enough in-arcs, and doubles every edge not touching A; the result is
kernel-perfect with out-degrees bounded by f(v) - 1, which is exactly what the
painting strategy in :mod:`kernelpaint.verify` consumes.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence, Union

from .errors import SizeLimitError
from .graphs import Graph, cut_size, _bits

__all__ = [
    "ATCount",
    "ATDecision",
    "Digraph",
    "KPDecision",
    "KernelPerfectCheck",
    "KernelPerfectResult",
    "OrientationResult",
    "alon_tarsi_diff",
    "build_kernel_perfect",
    "digraph_to_dot",
    "extend_d0_kp",
    "find_kernel",
    "is_f_AT",
    "is_f_KP",
    "is_kernel_perfect",
    "orient_with_indegrees",
]

KP_CHECK_CAP = 10
AT_ARC_CAP = 24
AT_EDGE_CAP = 14
KP_SEARCH_CAP = 5

DegreeTable = Union[Mapping[int, int], Sequence[int]]


def _table(f: DegreeTable, vertices: Iterable[int]) -> dict[int, int]:
    return {v: int(f[v]) for v in vertices}


class Digraph:
    """Directed multigraph on explicit integer vertices.

    Arcs form a multiset of ordered pairs; parallel arcs and opposite pairs
    are allowed, self-arcs are not.  Vertices need not be 0..n-1, which lets
    certificates keep the labels of the host graph.
    """

    __slots__ = ("vertex_set", "arcs", "_out", "_in")

    def __init__(self, vertices: Iterable[int], arcs: Iterable[tuple[int, int]] = ()):
        self.vertex_set = frozenset(vertices)
        arc_list = []
        out: Counter = Counter()
        inc: Counter = Counter()
        for t, h in arcs:
            if t == h:
                raise ValueError(f"self-arc at vertex {t}")
            if t not in self.vertex_set or h not in self.vertex_set:
                raise ValueError(f"arc ({t},{h}) uses an unknown vertex")
            arc_list.append((t, h))
            out[t] += 1
            inc[h] += 1
        self.arcs = tuple(sorted(arc_list))
        self._out = dict(out)
        self._in = dict(inc)

    @property
    def n(self) -> int:
        return len(self.vertex_set)

    def out_degree(self, v: int) -> int:
        return self._out.get(v, 0)

    def in_degree(self, v: int) -> int:
        return self._in.get(v, 0)

    def arc_multiset(self) -> Counter:
        return Counter(self.arcs)

    def has_arc(self, t: int, h: int) -> bool:
        return (t, h) in self.arcs

    def underlying_edges(self) -> frozenset[tuple[int, int]]:
        return frozenset((t, h) if t < h else (h, t) for t, h in self.arcs)

    def doubled_pairs(self) -> frozenset[tuple[int, int]]:
        ms = set(self.arcs)
        return frozenset(
            (t, h) for t, h in ms if t < h and (h, t) in ms
        )

    def induced(self, vertices: Iterable[int]) -> "Digraph":
        vs = frozenset(vertices)
        return Digraph(vs & self.vertex_set,
                       [(t, h) for t, h in self.arcs if t in vs and h in vs])

    def relabel(self, mapping: Mapping[int, int]) -> "Digraph":
        return Digraph(
            [mapping[v] for v in self.vertex_set],
            [(mapping[t], mapping[h]) for t, h in self.arcs],
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Digraph)
            and self.vertex_set == other.vertex_set
            and self.arcs == other.arcs
        )

    def __hash__(self) -> int:
        return hash((self.vertex_set, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={len(self.arcs)})"


def digraph_to_dot(d: Digraph, name: str = "D") -> str:
    """DOT export; doubled edges appear as two separate arcs."""
    lines = [f"digraph {name} {{"]
    incident = {v for arc in d.arcs for v in arc}
    lines += [f"  {v};" for v in sorted(d.vertex_set - incident)]
    lines += [f"  {t} -> {h};" for t, h in d.arcs]
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# In-degree constrained orientations via max flow
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OrientationResult:
    """Either an orientation meeting the in-degree demands, or a witness set X
    whose demand exceeds the edges available to it."""

    orientation: Optional[Digraph]
    violating_set: Optional[frozenset[int]]
    deficiency: int = 0

    @property
    def ok(self) -> bool:
        return self.orientation is not None


def orient_with_indegrees(g: Graph, demand: DegreeTable) -> OrientationResult:
    """Orient g so that every vertex v has in-degree >= demand(v), if possible.

    An orientation exists iff every X <= V satisfies
    ||X|| + ||X, V-X|| >= Sum_{v in X} demand(v); feasibility is decided by a
    max-flow formulation (one unit per edge, routed to one endpoint, vertex
    sinks capped at demand), not by enumeration.  On failure the violating set
    is read off the sink side of the minimum cut with maximal source side,
    which makes it inclusion-minimal and maximally deficient.
    """
    dem = _table(demand, range(g.n))
    if any(val < 0 for val in dem.values()):
        raise ValueError("demands must be nonnegative")
    return _orient_masked(g, g.full_mask(), dem)


def _orient_masked(g: Graph, mask: int, dem: Mapping[int, int]) -> OrientationResult:
    """orient_with_indegrees restricted to the induced subgraph on a vertex mask,
    keeping original labels."""
    verts = _bits(mask)
    edges = sorted(
        (u, v) for u, v in g.edges if mask >> u & 1 and mask >> v & 1
    )
    m = len(edges)
    need = sum(dem.get(v, 0) for v in verts)
    # Node ids: 0 = source, 1..m = edges, then vertices, last = sink.
    vid = {v: 1 + m + i for i, v in enumerate(verts)}
    sink = 1 + m + len(verts)
    big = m + need + 1
    cap: dict[int, dict[int, int]] = {i: {} for i in range(sink + 1)}

    def add(a: int, b: int, c: int) -> None:
        cap[a][b] = cap[a].get(b, 0) + c
        cap[b].setdefault(a, 0)

    for i, (u, v) in enumerate(edges):
        add(0, 1 + i, 1)
        add(1 + i, vid[u], big)
        add(1 + i, vid[v], big)
    for v in verts:
        if dem.get(v, 0) > 0:
            add(vid[v], sink, dem[v])

    flow = _max_flow(cap, 0, sink)
    if flow == need:
        arcs = []
        for i, (u, v) in enumerate(edges):
            if cap[1 + i][vid[u]] < big:
                head = u
            else:
                head = v  # flowed to v, or unconstrained: fixed direction
            tail = v if head == u else u
            arcs.append((tail, head))
        return OrientationResult(Digraph(verts, arcs), None)

    reach = _residual_reachable(cap, 0)
    x = frozenset(v for v in verts if vid[v] not in reach)
    deficiency = sum(dem.get(v, 0) for v in x) - (
        cut_size(g, x, x) // 2 + cut_size(g, x, set(verts) - x)
    )
    assert deficiency > 0, "min-cut side must genuinely violate the demand bound"
    return OrientationResult(None, x, deficiency)


def _max_flow(cap: dict[int, dict[int, int]], s: int, t: int) -> int:
    """Edmonds-Karp on a residual-capacity adjacency dict (mutated in place)."""
    total = 0
    while True:
        parent = {s: -1}
        queue = [s]
        while queue and t not in parent:
            nxt = []
            for x in queue:
                for y, c in cap[x].items():
                    if c > 0 and y not in parent:
                        parent[y] = x
                        nxt.append(y)
            queue = nxt
        if t not in parent:
            return total
        # bottleneck along the path
        path = [t]
        while path[-1] != s:
            path.append(parent[path[-1]])
        path.reverse()
        aug = min(cap[path[i]][path[i + 1]] for i in range(len(path) - 1))
        for i in range(len(path) - 1):
            a, b = path[i], path[i + 1]
            cap[a][b] -= aug
            cap[b][a] = cap[b].get(a, 0) + aug
        total += aug


def _residual_reachable(cap: dict[int, dict[int, int]], s: int) -> set[int]:
    seen = {s}
    queue = [s]
    while queue:
        x = queue.pop()
        for y, c in cap[x].items():
            if c > 0 and y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


# ---------------------------------------------------------------------------
# The kernel-perfect composite construction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KernelPerfectResult:
    digraph: Optional[Digraph]
    violating_set: Optional[frozenset[int]]

    @property
    def ok(self) -> bool:
        return self.digraph is not None


def build_kernel_perfect(g: Graph, a: Iterable[int], f: DegreeTable) -> KernelPerfectResult:
    """Kernel-perfect digraph over V(g) with out-degrees at most f(v) - 1.

    A must be independent and f(v) <= d(v) + 1 everywhere.  Every edge with
    both ends outside A becomes a pair of opposite arcs; edges touching A are
    oriented so that each vertex gets at least d(v) + 1 - f(v) in-arcs from
    them.  Doubling outside an independent set preserves kernel-perfection,
    and the in-arc quota forces d+(v) <= f(v) - 1.  When the quota is
    infeasible the violating vertex set is returned instead.
    """
    a_set = frozenset(a)
    ftab = _table(f, range(g.n))
    _check_kp_inputs(g, a_set, ftab, g.full_mask())
    return _build_kp_masked(g, g.full_mask(), a_set, ftab)


def _check_kp_inputs(g: Graph, a_set: frozenset, ftab: Mapping[int, int], mask: int) -> None:
    amask = _maskof(a_set)
    for v in a_set:
        if not mask >> v & 1:
            raise ValueError(f"vertex {v} of A is outside the graph")
        if g.adj[v] & amask:
            raise ValueError("A must be independent")
    for v in _bits(mask):
        if not 0 <= ftab[v] <= g.deg_in(v, mask) + 1:
            raise ValueError(
                f"f({v}) = {ftab[v]} outside [0, d+1] = [0, {g.deg_in(v, mask) + 1}]"
            )


def _maskof(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _build_kp_masked(
    g: Graph, mask: int, a_set: frozenset, ftab: Mapping[int, int]
) -> KernelPerfectResult:
    verts = _bits(mask)
    amask = _maskof(a_set) & mask
    # Bipartite part: edges meeting A.  Demands are d(v) + 1 - f(v) in the
    # induced subgraph, clamped at 0.
    bip_edges = [
        (u, v)
        for u, v in g.edges
        if mask >> u & 1 and mask >> v & 1 and (amask >> u & 1 or amask >> v & 1)
    ]
    bip = Graph(g.n, bip_edges)  # same labels, only the A-incident edges
    dem = {v: max(0, g.deg_in(v, mask) + 1 - ftab[v]) for v in verts}
    res = _orient_masked(bip, mask, dem)
    if not res.ok:
        return KernelPerfectResult(None, res.violating_set)
    arcs = list(res.orientation.arcs)
    for u, v in g.edges:
        if mask >> u & 1 and mask >> v & 1 and not (amask >> u & 1 or amask >> v & 1):
            arcs.append((u, v))
            arcs.append((v, u))
    d = Digraph(verts, arcs)
    for v in verts:
        assert d.out_degree(v) <= ftab[v] - 1, "construction must bound out-degrees"
    return KernelPerfectResult(d, None)


# ---------------------------------------------------------------------------
# Kernels
# ---------------------------------------------------------------------------


def find_kernel(d: Digraph, a: Optional[Iterable[int]] = None) -> Optional[frozenset[int]]:
    """A kernel of d, or None if none exists.

    Without A: exhaustive search over independent sets, smallest bitmask
    first (deterministic).  With A: constructive mode for digraphs of the
    composite shape (A independent, every edge outside A doubled); repeatedly
    absorb a vertex of B that has no out-arc into the current A, then discard
    its closed neighborhood.
    """
    if a is None:
        return _find_kernel_exhaustive(d)
    a_set = frozenset(a) & d.vertex_set
    _check_composite_shape(d, a_set)
    out_nbrs = {v: set() for v in d.vertex_set}
    und_nbrs = {v: set() for v in d.vertex_set}
    for t, h in d.arcs:
        out_nbrs[t].add(h)
        und_nbrs[t].add(h)
        und_nbrs[h].add(t)
    kernel: set[int] = set()
    alive = set(d.vertex_set)
    while True:
        a_alive = a_set & alive
        stubborn = None
        for v in sorted(alive - a_set):
            if not (out_nbrs[v] & a_alive):
                stubborn = v
                break
        if stubborn is None:
            return frozenset(kernel | a_alive)
        kernel.add(stubborn)
        alive -= und_nbrs[stubborn] | {stubborn}


def _check_composite_shape(d: Digraph, a_set: frozenset) -> None:
    doubled = d.doubled_pairs()
    for t, h in d.arcs:
        if t in a_set and h in a_set:
            raise ValueError("A is not independent in the digraph")
        if t not in a_set and h not in a_set:
            key = (t, h) if t < h else (h, t)
            if key not in doubled:
                raise ValueError(
                    f"edge {key} outside A is not doubled; constructive mode "
                    "requires the composite shape"
                )


def _find_kernel_exhaustive(d: Digraph) -> Optional[frozenset[int]]:
    verts = sorted(d.vertex_set)
    n = len(verts)
    idx = {v: i for i, v in enumerate(verts)}
    und = [0] * n
    outm = [0] * n
    for t, h in d.arcs:
        und[idx[t]] |= 1 << idx[h]
        und[idx[h]] |= 1 << idx[t]
        outm[idx[t]] |= 1 << idx[h]
    full = (1 << n) - 1
    for mask in range(1 << n):
        ok = True
        for i in range(n):
            if mask >> i & 1:
                if und[i] & mask:
                    ok = False
                    break
            elif not outm[i] & mask:
                ok = False
                break
        if ok:
            return frozenset(verts[i] for i in range(n) if mask >> i & 1)
    return None


@dataclass(frozen=True)
class KernelPerfectCheck:
    is_kernel_perfect: bool
    offending: Optional[frozenset[int]]  # vertex set of a kernel-free induced subdigraph

    def __bool__(self) -> bool:
        return self.is_kernel_perfect


def is_kernel_perfect(d: Digraph) -> KernelPerfectCheck:
    """Exhaustively check that every induced subdigraph has a kernel (n <= 10)."""
    if d.n > KP_CHECK_CAP:
        raise SizeLimitError(f"kernel-perfection check capped at {KP_CHECK_CAP} vertices")
    verts = sorted(d.vertex_set)
    n = len(verts)
    idx = {v: i for i, v in enumerate(verts)}
    und = [0] * n
    outmask = [0] * n
    for t, h in d.arcs:
        und[idx[t]] |= 1 << idx[h]
        und[idx[h]] |= 1 << idx[t]
        outmask[idx[t]] |= 1 << idx[h]

    def has_kernel(sub: int) -> bool:
        cand = []
        s = sub
        while s:
            low = s & -s
            cand.append(low.bit_length() - 1)
            s ^= low
        for pick in range(1 << len(cand)):
            mask = 0
            for j, i in enumerate(cand):
                if pick >> j & 1:
                    mask |= 1 << i
            ok = True
            for i in cand:
                if mask >> i & 1:
                    if und[i] & mask:
                        ok = False
                        break
                elif not outmask[i] & mask:
                    ok = False
                    break
            if ok:
                return True
        return False

    for sub in range(1, 1 << n):
        if not has_kernel(sub):
            return KernelPerfectCheck(
                False, frozenset(verts[i] for i in range(n) if sub >> i & 1)
            )
    return KernelPerfectCheck(True, None)


# ---------------------------------------------------------------------------
# Alon-Tarsi counting
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ATCount:
    diff: int
    even: int
    odd: int


def alon_tarsi_diff(d: Digraph) -> ATCount:
    """Counts of even/odd spanning Eulerian sub-multigraphs and their difference.

    A sub-multigraph (arc subset) is Eulerian when every vertex has equal in-
    and out-degree within it, and even/odd by the parity of its arc count.
    The empty subset is even, so the even count is always at least 1.
    Enumeration runs over arc subsets depth-first, pruning as soon as some
    vertex can no longer be rebalanced by the remaining arcs.
    """
    arcs = list(d.arcs)
    if len(arcs) > AT_ARC_CAP:
        raise SizeLimitError(f"Eulerian counting capped at {AT_ARC_CAP} arcs")
    verts = sorted(d.vertex_set)
    idx = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    # remaining_inc[i][v]: arc incidences at v among arcs[i:]
    rem = [[0] * n for _ in range(len(arcs) + 1)]
    for i in range(len(arcs) - 1, -1, -1):
        t, h = arcs[i]
        row = rem[i + 1][:]
        row[idx[t]] += 1
        row[idx[h]] += 1
        rem[i] = row
    balance = [0] * n
    counts = [0, 0]  # even, odd by arc-subset size parity

    def dfs(i: int, size: int) -> None:
        if i == len(arcs):
            counts[size & 1] += 1
            return
        t, h = arcs[i]
        ti, hi = idx[t], idx[h]
        # prune on any vertex whose imbalance exceeds its remaining incidences
        nxt = rem[i + 1]
        # skip arc i
        if abs(balance[ti]) <= nxt[ti] and abs(balance[hi]) <= nxt[hi]:
            dfs(i + 1, size)
        # take arc i
        balance[ti] += 1
        balance[hi] -= 1
        if abs(balance[ti]) <= nxt[ti] and abs(balance[hi]) <= nxt[hi]:
            dfs(i + 1, size + 1)
        balance[ti] -= 1
        balance[hi] += 1

    dfs(0, 0)
    even, odd = counts
    return ATCount(even - odd, even, odd)


def _is_acyclic(d: Digraph) -> bool:
    indeg = {v: 0 for v in d.vertex_set}
    outs = {v: [] for v in d.vertex_set}
    for t, h in d.arcs:
        indeg[h] += 1
        outs[t].append(h)
    queue = [v for v, k in indeg.items() if k == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for h in outs[v]:
            indeg[h] -= 1
            if indeg[h] == 0:
                queue.append(h)
    return seen == len(d.vertex_set)


# ---------------------------------------------------------------------------
# f-AT and f-KP deciders
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ATDecision:
    value: bool
    witness: Optional[Digraph]
    counts: Optional[ATCount]

    def __bool__(self) -> bool:
        return self.value


def is_f_AT(g: Graph, f: DegreeTable) -> ATDecision:
    """Does g have an orientation with d+(v) <= f(v)-1 and EE != EO?

    Enumerates orientations edge by edge (lowest-index witness wins), pruning
    branches whose out-degrees already exceed the bound.  Acyclic orientations
    short-circuit: they always have EE - EO = 1.
    """
    if g.m > AT_EDGE_CAP:
        raise SizeLimitError(f"orientation enumeration capped at {AT_EDGE_CAP} edges")
    ftab = _table(f, range(g.n))
    budget = [ftab[v] - 1 for v in range(g.n)]
    if any(b < 0 for b in budget):
        return ATDecision(False, None, None)
    edges = sorted(g.edges)
    heads = [0] * len(edges)

    def build() -> Digraph:
        arcs = []
        for i, (u, v) in enumerate(edges):
            arcs.append((u, v) if heads[i] == 1 else (v, u))
        return Digraph(range(g.n), arcs)

    out = [0] * g.n

    def dfs(i: int) -> Optional[Digraph]:
        if i == len(edges):
            d = build()
            if _is_acyclic(d):
                return d
            c = alon_tarsi_diff(d)
            return d if c.diff != 0 else None
        u, v = edges[i]
        for head, tail, mark in ((v, u, 1), (u, v, 0)):
            if out[tail] < budget[tail]:
                out[tail] += 1
                heads[i] = mark
                got = dfs(i + 1)
                out[tail] -= 1
                if got is not None:
                    return got
        return None

    witness = dfs(0)
    if witness is None:
        return ATDecision(False, None, None)
    return ATDecision(True, witness, alon_tarsi_diff(witness))


@dataclass(frozen=True)
class KPDecision:
    value: bool
    witness: Optional[Digraph]

    def __bool__(self) -> bool:
        return self.value


def is_f_KP(g: Graph, f: DegreeTable, allow_supergraph: bool = True) -> KPDecision:
    """Does g have a kernel-perfect oriented supergraph with d+(v) <= f(v)-1?

    The supergraph keeps the vertex set; every edge of g must carry at least
    one arc and may carry both; with ``allow_supergraph`` non-edges may also
    gain one or two arcs (at most one arc per direction either way).  Setting
    ``allow_supergraph=False`` restricts to strict orientations of g itself:
    single arcs on edges, nothing elsewhere.  Exhaustive, for n <= 5.
    """
    if g.n > KP_SEARCH_CAP:
        raise SizeLimitError(f"kernel-perfect search capped at n = {KP_SEARCH_CAP}")
    ftab = _table(f, range(g.n))
    budget = [ftab[v] - 1 for v in range(g.n)]
    if any(b < 0 for b in budget):
        return KPDecision(False, None)
    pairs = sorted(itertools.combinations(range(g.n), 2))
    edges_after = [0] * (len(pairs) + 1)
    for i in range(len(pairs) - 1, -1, -1):
        u, v = pairs[i]
        edges_after[i] = edges_after[i + 1] + (1 if g.has_edge(u, v) else 0)
    out = [0] * g.n
    arcs: list[tuple[int, int]] = []

    def options(u: int, v: int) -> list[tuple[tuple[int, int], ...]]:
        if g.has_edge(u, v):
            opts = [((u, v),), ((v, u),)]
            if allow_supergraph:
                opts.append(((u, v), (v, u)))
            return opts
        if allow_supergraph:
            return [(), ((u, v),), ((v, u),), ((u, v), (v, u))]
        return [()]

    def dfs(i: int) -> Optional[Digraph]:
        if i == len(pairs):
            d = Digraph(range(g.n), arcs)
            return d if is_kernel_perfect(d) else None
        # each remaining edge needs an out-arc from one of its endpoints
        slack = sum(budget[v] - out[v] for v in range(g.n))
        if slack < edges_after[i]:
            return None
        u, v = pairs[i]
        for opt in options(u, v):
            if any(out[t] >= budget[t] for t, _ in opt):
                continue
            for t, _ in opt:
                out[t] += 1
            arcs.extend(opt)
            got = dfs(i + 1)
            if opt:
                del arcs[-len(opt):]
            for t, _ in opt:
                out[t] -= 1
            if got is not None:
                return got
        return None

    witness = dfs(0)
    return KPDecision(witness is not None, witness)


def extend_d0_kp(g: Graph, h_vertices: Iterable[int], h_witness: Digraph) -> Digraph:
    """Grow a degree-bounded kernel-perfect witness by one neighborhood layer.

    Given an induced subgraph H of connected g with a kernel-perfect witness
    whose out-degrees satisfy d+(v) < d_H(v), returns a witness for
    H union S, S the outside neighbors of H: edges from H into S point into S,
    edges inside S are doubled.  Iterating reaches all of g.
    """
    h_set = frozenset(h_vertices)
    if not g.is_connected():
        raise ValueError("host graph must be connected")
    if h_set == set(range(g.n)):
        raise ValueError("witness already spans the host graph; nothing to extend")
    if h_witness.vertex_set != h_set:
        raise ValueError("witness vertex set must equal h_vertices")
    hmask = _maskof(h_set)
    for v in h_set:
        if not h_witness.out_degree(v) < g.deg_in(v, hmask):
            raise ValueError(
                f"witness out-degree at {v} must be below its degree inside H"
            )
    s = frozenset(
        u for v in h_set for u in g.neighbors(v) if u not in h_set
    )
    if not s:
        raise ValueError("H has no outside neighbors; host graph is disconnected")
    arcs = list(h_witness.arcs)
    for v in h_set:
        for u in g.neighbors(v):
            if u in s:
                arcs.append((v, u))
    for u, v in g.edges:
        if u in s and v in s:
            arcs.append((u, v))
            arcs.append((v, u))
    return Digraph(h_set | s, arcs)
