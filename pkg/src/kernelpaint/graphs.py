"""Core graph type, generators, elementary statistics and small-graph enumeration.

Vertices are dense integers ``0..n-1``.  A :class:`Graph` is immutable after
construction; every operation in this module is a pure function, so graphs can
be shared freely across threads.

Adjacency is kept both as a set of sorted edge pairs and as per-vertex integer
bitmasks; the bitmask form is what makes the exhaustive searches (cliques,
independent sets, isomorph rejection) fast enough at desk scale.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import ConstructionError, SizeLimitError, UndefinedStatisticError

__all__ = [
    "Graph",
    "BlockTree",
    "GraphStats",
    "block_decomposition",
    "canonical_key",
    "cut_size",
    "enumerate_graphs",
    "enumerate_triangle_free",
    "graph_stats",
    "make_named",
    "ore_degree",
    "to_dot",
]

ENUMERATION_CAP = 8
TRIANGLE_FREE_CAP = 9


class Graph:
    """Simple undirected graph on vertex set ``{0, ..., n-1}``.

    ``edges`` may be any iterable of pairs; self-loops are rejected and
    duplicate/reversed pairs collapse.  Treat instances as immutable.
    """

    __slots__ = ("n", "edges", "adj", "degrees", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            norm.add((u, v) if u < v else (v, u))
        adj = [0] * n
        for u, v in norm:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.edges = frozenset(norm)
        self.adj = tuple(adj)
        self.degrees = tuple(m.bit_count() for m in adj)
        self._hash = hash((n, self.edges))

    # -- basic accessors -------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- derived graphs --------------------------------------------------

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph relabeled onto 0..k-1 in sorted(vertices) order."""
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        edges = [
            (pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos
        ]
        return Graph(len(vs), edges)

    def complement(self) -> "Graph":
        edges = [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if not self.has_edge(u, v)
        ]
        return Graph(self.n, edges)

    def deg_in(self, v: int, mask: int) -> int:
        """Degree of v inside the vertex subset given as a bitmask."""
        return (self.adj[v] & mask).bit_count()

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def component_masks(self, within: Optional[int] = None) -> list[int]:
        """Bitmasks of the connected components (of the induced subset if given)."""
        todo = self.full_mask() if within is None else within
        comps = []
        while todo:
            start = todo & -todo
            comp = start
            frontier = start
            while frontier:
                nxt = 0
                v = frontier
                while v:
                    low = v & -v
                    nxt |= self.adj[low.bit_length() - 1]
                    v ^= low
                frontier = nxt & todo & ~comp
                comp |= frontier
            comps.append(comp)
            todo &= ~comp
        return comps

    def components(self) -> list[list[int]]:
        return [_bits(m) for m in self.component_masks()]

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.component_masks()) == 1

    def has_triangle(self) -> bool:
        for u, v in self.edges:
            if self.adj[u] & self.adj[v]:
                return True
        return False


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# ---------------------------------------------------------------------------
# Cut sizes and statistics
# ---------------------------------------------------------------------------


def cut_size(g: Graph, a: Iterable[int], b: Iterable[int]) -> int:
    """Number of (v, w) incidences with v in A, w in B and vw an edge.

    Counts Sum_{v in A} |N(v) & B|; edges inside A & B are counted twice, so
    cut_size(g, V, V) == 2 * g.m and cut_size is symmetric in A, B.  The full
    decomposition is ||A,B|| = ||A-B, B-A|| + 2||A&B|| + ||A&B, A^B|| (the
    last term is often dropped because the usual instantiations have A, B
    disjoint or equal, where it vanishes).
    """
    amask = _as_mask(g, a)
    bmask = _as_mask(g, b)
    total = 0
    v = amask
    while v:
        low = v & -v
        total += (g.adj[low.bit_length() - 1] & bmask).bit_count()
        v ^= low
    return total


def _as_mask(g: Graph, vertices: Iterable[int]) -> int:
    if isinstance(vertices, int):
        if vertices < 0 or vertices >> g.n:
            raise ValueError("vertex bitmask out of range")
        return vertices
    mask = 0
    for v in vertices:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
        mask |= 1 << v
    return mask


def ore_degree(g: Graph) -> int:
    """Largest endpoint degree sum over the edges of g."""
    if not g.edges:
        raise UndefinedStatisticError("Ore-degree is undefined on an edgeless graph")
    return max(g.degrees[u] + g.degrees[v] for u, v in g.edges)


@dataclass(frozen=True)
class GraphStats:
    max_degree: int
    min_degree: int
    ore_degree: Optional[int]  # None when the graph has no edges
    clique_number: int
    independence_number: int
    components: int
    triangle_free: bool


def graph_stats(g: Graph) -> GraphStats:
    """Exact elementary statistics.

    Clique and independence numbers use exhaustive branch-and-bound search,
    intended for n <= 16; cost grows exponentially beyond that.
    """
    theta = ore_degree(g) if g.edges else None
    return GraphStats(
        max_degree=max(g.degrees, default=0),
        min_degree=min(g.degrees, default=0),
        ore_degree=theta,
        clique_number=clique_number(g),
        independence_number=independence_number(g),
        components=len(g.component_masks()),
        triangle_free=not g.has_triangle(),
    )


def max_weight_independent_set(
    g: Graph, weights: Sequence[int], within: Optional[int] = None
) -> tuple[int, int]:
    """Maximum total weight of an independent set, with its witness mask.

    Exhaustive branch and bound.  Among maximum-weight sets the witness is the
    one whose sorted vertex tuple is lexicographically smallest, which keeps
    downstream expectations deterministic.  Weights must be nonnegative.
    """
    full = g.full_mask() if within is None else within
    adj = g.adj
    # Suffix weight bound in index order used by the search.
    order = _bits(full)
    best_w = -1
    best_set = 0

    def rest_weight(mask: int) -> int:
        t = 0
        while mask:
            low = mask & -mask
            t += weights[low.bit_length() - 1]
            mask ^= low
        return t

    def dfs(avail: int, cur_w: int, cur_set: int) -> None:
        nonlocal best_w, best_set
        if not avail:
            if cur_w > best_w or (
                cur_w == best_w and _lex_key(cur_set) < _lex_key(best_set)
            ):
                best_w, best_set = cur_w, cur_set
            return
        if cur_w + rest_weight(avail) < best_w:
            return
        v = (avail & -avail).bit_length() - 1
        dfs(avail & ~(adj[v] | (1 << v)), cur_w + weights[v], cur_set | (1 << v))
        dfs(avail & ~(1 << v), cur_w, cur_set)

    dfs(full, 0, 0)
    return best_w, best_set


def _lex_key(mask: int) -> tuple:
    return tuple(_bits(mask))


def independence_number(g: Graph, within: Optional[int] = None) -> int:
    w, _ = max_weight_independent_set(g, [1] * g.n, within)
    return w


def clique_number(g: Graph) -> int:
    return independence_number(g.complement())


# ---------------------------------------------------------------------------
# Named graphs
# ---------------------------------------------------------------------------


def make_named(name: str, params: Sequence[int] = ()) -> Graph:
    """Construct a graph from a named family.

    Canonical labelings: cycles and paths run 0,1,...; complete_bipartite(a,b)
    puts the a-side first; petersen has outer cycle 0-4, inner pentagram 5-9,
    spokes i--i+5; K4_minus_e omits the pair {2,3}; O_n(k) has x=0, y=1, the
    rest of K_k - xy on 2..k-1, and the K_{k-1} on k..2k-2 with its first
    floor((k-1)/2) vertices joined to x and the rest to y; moser_spindle has
    hub 0, diamonds {0,1,2,3} and {0,4,5,6} with apexes 3 and 6 joined.
    """
    p = list(params)
    try:
        if name == "complete":
            (k,) = p
            _require(k >= 1, "complete requires n >= 1")
            return Graph(k, itertools.combinations(range(k), 2))
        if name == "cycle":
            (k,) = p
            _require(k >= 3, "cycle requires n >= 3")
            return Graph(k, [(i, (i + 1) % k) for i in range(k)])
        if name == "path":
            (k,) = p
            _require(k >= 1, "path requires n >= 1")
            return Graph(k, [(i, i + 1) for i in range(k - 1)])
        if name == "complete_bipartite":
            a, b = p
            _require(a >= 1 and b >= 1, "complete_bipartite requires positive parts")
            return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])
        if name == "petersen":
            _require(not p, "petersen takes no parameters")
            edges = [(i, (i + 1) % 5) for i in range(5)]
            edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
            edges += [(i, i + 5) for i in range(5)]
            return Graph(10, edges)
        if name == "moser_spindle":
            _require(not p, "moser_spindle takes no parameters")
            edges = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]
            edges += [(0, 4), (0, 5), (4, 5), (4, 6), (5, 6)]
            edges += [(3, 6)]
            return Graph(7, edges)
        if name == "K4_minus_e":
            _require(not p, "K4_minus_e takes no parameters")
            return Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        if name == "O_n":
            (k,) = p
            _require(k >= 3, f"O_n requires n >= 3, got {k}")
            edges = [
                (u, v)
                for u, v in itertools.combinations(range(k), 2)
                if (u, v) != (0, 1)
            ]
            edges += list(itertools.combinations(range(k, 2 * k - 1), 2))
            half = (k - 1) // 2
            edges += [(0, k + i) for i in range(half)]
            edges += [(1, k + i) for i in range(half, k - 1)]
            return Graph(2 * k - 1, edges)
    except ConstructionError:
        raise
    except (TypeError, ValueError) as exc:
        raise ConstructionError(f"bad parameters {p!r} for family {name!r}: {exc}")
    raise ConstructionError(f"unknown graph family {name!r}")


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ConstructionError(msg)


# ---------------------------------------------------------------------------
# Block decomposition (biconnected components)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BlockTree:
    """Blocks (maximal 2-connected pieces, bridges, isolated vertices) of a graph.

    Every edge lies in exactly one block; two blocks share at most one vertex
    and such a shared vertex is a cutvertex.
    """

    blocks: tuple[frozenset[int], ...]
    cutvertices: frozenset[int]
    incidence: dict[int, tuple[int, ...]]  # cutvertex -> indices into blocks


def block_decomposition(g: Graph) -> BlockTree:
    """Hopcroft-Tarjan biconnected components; isolated vertices become singleton blocks."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    is_cut = [False] * n
    edge_stack: list[tuple[int, int]] = []
    blocks: list[frozenset[int]] = []
    timer = itertools.count()

    def pop_block(u: int, v: int) -> None:
        comp = set()
        while True:
            e = edge_stack.pop()
            comp.update(e)
            if e == (u, v):
                break
        blocks.append(frozenset(comp))

    for root in range(n):
        if disc[root] != -1:
            continue
        if g.degrees[root] == 0:
            disc[root] = next(timer)
            blocks.append(frozenset([root]))
            continue
        # iterative DFS: stack of (vertex, neighbor iterator)
        disc[root] = low[root] = next(timer)
        stack = [(root, iter(g.neighbors(root)))]
        root_children = 0
        while stack:
            u, it = stack[-1]
            advanced = False
            for v in it:
                if disc[v] == -1:
                    parent[v] = u
                    edge_stack.append((u, v))
                    disc[v] = low[v] = next(timer)
                    stack.append((v, iter(g.neighbors(v))))
                    if u == root:
                        root_children += 1
                    advanced = True
                    break
                if v != parent[u] and disc[v] < disc[u]:
                    edge_stack.append((u, v))
                    low[u] = min(low[u], disc[v])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[u])
                if low[u] >= disc[p]:
                    if p != root or root_children > 0:
                        pop_block(p, u)
                    if p != root:
                        is_cut[p] = True
        if root_children > 1:
            is_cut[root] = True

    cutverts = frozenset(v for v in range(n) if is_cut[v])
    blocks_sorted = tuple(sorted(blocks, key=lambda b: sorted(b)))
    incidence = {
        v: tuple(i for i, b in enumerate(blocks_sorted) if v in b) for v in cutverts
    }
    return BlockTree(blocks=blocks_sorted, cutvertices=cutverts, incidence=incidence)


# ---------------------------------------------------------------------------
# Canonical forms and enumeration
# ---------------------------------------------------------------------------


def _refine(n: int, adj: Sequence[int]) -> list[int]:
    """Stable vertex coloring: iterated (color, sorted neighbor colors) keys."""
    colors = [0] * n
    ncells = 1
    nbrs = [_bits(a) for a in adj]
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[u] for u in nbrs[v]))) for v in range(n)
        ]
        table = {k: i for i, k in enumerate(sorted(set(keys)))}
        colors = [table[k] for k in keys]
        if len(table) == ncells:
            return colors
        ncells = len(table)


def canonical_key(g_or_n, adj: Optional[Sequence[int]] = None) -> tuple:
    """Isomorphism-invariant canonical key for a graph.

    The key is the lexicographically smallest tuple of adjacency row bitmasks
    over all vertex orderings consistent with the refined color partition
    (colors ordered by their invariant refinement keys).  Branch and bound on
    the row strings keeps this fast for n <= 9.
    """
    if adj is None:
        n, adj = g_or_n.n, g_or_n.adj
    else:
        n = g_or_n
    if n == 0:
        return (0,)
    colors = _refine(n, adj)
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    cell_order = [cells[c] for c in sorted(cells)]
    cell_of_pos: list[int] = []
    for i, cell in enumerate(cell_order):
        cell_of_pos.extend([i] * len(cell))

    sentinel = 1 << (n + 1)
    best = [sentinel] * n
    placed: list[int] = []

    def row_bits(v: int) -> int:
        r = 0
        av = adj[v]
        for i, u in enumerate(placed):
            if av >> u & 1:
                r |= 1 << (n - 1 - i)
        return r

    def forced_tail(avail_cells: list[list[int]]) -> Optional[list[int]]:
        # When all unplaced vertices look alike from the placed prefix and the
        # subgraph they induce is empty or complete, any completion ties.
        rest = [v for cell in avail_cells for v in cell]
        if len(rest) <= 1:
            return rest
        rows = {row_bits(v) for v in rest}
        if len(rows) != 1:
            return None
        k = len(rest)
        inside = sum(1 for a, b in itertools.combinations(rest, 2) if adj[a] >> b & 1)
        if inside == 0 or inside == k * (k - 1) // 2:
            return rest
        return None

    def dfs(pos: int, avail_cells: list[list[int]]) -> None:
        if pos == n:
            return
        tail = forced_tail(avail_cells)
        if tail is not None:
            for v in tail:
                r = row_bits(v)
                if r > best[pos]:
                    return
                if r < best[pos]:
                    best[pos] = r
                    for j in range(pos + 1, n):
                        best[j] = sentinel
                placed.append(v)
                pos += 1
            return
        ci = cell_of_pos[pos]
        cell = avail_cells[ci]
        scored = sorted((row_bits(v), v) for v in cell)
        for r, v in scored:
            if r > best[pos]:
                break
            if r < best[pos]:
                best[pos] = r
                for j in range(pos + 1, n):
                    best[j] = sentinel
            placed.append(v)
            rest = [c if i != ci else [w for w in c if w != v] for i, c in enumerate(avail_cells)]
            dfs(pos + 1, rest)
            del placed[pos:]

    dfs(0, cell_order)
    return (n, *best)


_ALL_LEVELS: dict[int, list[Graph]] = {}
_TF_LEVELS: dict[int, list[Graph]] = {}


def _extend_level(prev: list[Graph], n: int, triangle_free: bool) -> list[Graph]:
    """All isomorphism classes on n vertices by attaching a new vertex to each
    (n-1)-class in every possible way, deduplicated by canonical key."""
    seen: set[tuple] = set()
    out: list[Graph] = []
    for parent in prev:
        base_adj = parent.adj
        for nb in range(1 << (n - 1)):
            if triangle_free and any(
                base_adj[u] & nb for u in _bits(nb)
            ):
                continue
            adj = [a | ((nb >> v & 1) << (n - 1)) for v, a in enumerate(base_adj)]
            adj.append(nb)
            key = canonical_key(n, adj)
            if key in seen:
                continue
            seen.add(key)
            new = n - 1
            edges = list(parent.edges) + [(v, new) for v in _bits(nb)]
            out.append(Graph(n, edges))
    return out


def _levels(n: int, triangle_free: bool) -> list[Graph]:
    cache = _TF_LEVELS if triangle_free else _ALL_LEVELS
    if 1 not in cache:
        cache[1] = [Graph(1)]
    k = max(cache)
    while k < n:
        cache[k + 1] = _extend_level(cache[k], k + 1, triangle_free)
        k += 1
    return cache[n]


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """One representative per isomorphism class of graphs on n vertices.

    Correctness is anchored to the known class counts (tested); performance is
    adequate up to the documented cap of n = 8.  Beyond that, read a graph6
    corpus file instead.
    """
    if n < 1:
        raise ValueError("enumerate_graphs requires n >= 1")
    if n > ENUMERATION_CAP:
        raise SizeLimitError(
            f"enumeration capped at n = {ENUMERATION_CAP}; use a graph6 corpus file"
        )
    for g in _levels(n, triangle_free=False):
        if not connected_only or g.is_connected():
            yield g


def enumerate_triangle_free(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """One representative per isomorphism class of triangle-free graphs.

    The triangle-free restriction is hereditary, so the level-by-level
    extension only ever attaches independent neighborhoods; that keeps the
    class counts small enough to reach n = 9.
    """
    if n < 1:
        raise ValueError("enumerate_triangle_free requires n >= 1")
    if n > TRIANGLE_FREE_CAP:
        raise SizeLimitError(
            f"triangle-free enumeration capped at n = {TRIANGLE_FREE_CAP}"
        )
    for g in _levels(n, triangle_free=True):
        if not connected_only or g.is_connected():
            yield g


# ---------------------------------------------------------------------------
# DOT export
# ---------------------------------------------------------------------------


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.n) if g.degrees[v] == 0]
    lines += [f"  {u} -- {v};" for u, v in sorted(g.edges)]
    lines.append("}")
    return "\n".join(lines) + "\n"
