"""Structural quantities: Gallai trees, independent cover numbers, low/high split.

A Gallai tree is a connected graph in which every block is a clique or an odd
cycle; a Gallai forest is a disjoint union of Gallai trees.  The maximum
independent cover number mic(G) is the largest number of edges incident to an
independent set.  These two notions are linked by a dichotomy: a connected
graph has mic = |G| - 1 exactly when it is a Gallai tree, and mic >= |G|
otherwise.  This module computes both sides of that dichotomy exactly, plus
the counting quantities used by the degree-bound suites.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import UndefinedStatisticError
from .graphs import (
    Graph,
    block_decomposition,
    independence_number,
    max_weight_independent_set,
    _bits,
)

__all__ = [
    "BlockKind",
    "EvenCycleResult",
    "GallaiCheck",
    "LowHighSplit",
    "MicResult",
    "beta_t",
    "find_even_cycle_one_chord",
    "gallai_count_check",
    "is_gallai_forest",
    "is_gallai_tree",
    "low_high_split",
    "mic",
    "random_gallai_forest",
    "random_gallai_tree",
    "sigma",
    "triangle_free_mic_check",
]


# ---------------------------------------------------------------------------
# Gallai tree recognition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BlockKind:
    vertices: frozenset[int]
    kind: str  # "clique" | "odd_cycle" | "other"


@dataclass(frozen=True)
class GallaiCheck:
    is_gallai: bool
    blocks: tuple[BlockKind, ...]
    offender: Optional[frozenset[int]]  # first non-conforming block

    def __bool__(self) -> bool:
        return self.is_gallai


def _classify_block(g: Graph, block: frozenset[int]) -> str:
    k = len(block)
    inside = sum(1 for u, v in g.edges if u in block and v in block)
    if inside == k * (k - 1) // 2:
        return "clique"
    if k >= 3 and k % 2 == 1 and inside == k:
        if all(g.deg_in(v, _mask(block)) == 2 for v in block):
            return "odd_cycle"
    return "other"


def _mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _gallai_check(g: Graph) -> GallaiCheck:
    kinds = []
    offender = None
    for block in block_decomposition(g).blocks:
        kind = _classify_block(g, block)
        kinds.append(BlockKind(block, kind))
        if kind == "other" and offender is None:
            offender = block
    return GallaiCheck(offender is None, tuple(kinds), offender)


def is_gallai_tree(g: Graph) -> GallaiCheck:
    """True iff g is connected and every block is a clique or odd cycle."""
    if not g.is_connected():
        raise ValueError("is_gallai_tree requires a connected graph; "
                         "use is_gallai_forest for disconnected input")
    return _gallai_check(g)


def is_gallai_forest(g: Graph) -> GallaiCheck:
    """Disconnected-friendly variant: every component must be a Gallai tree."""
    return _gallai_check(g)


# ---------------------------------------------------------------------------
# Even cycle with at most one chord (Rubin's block lemma, constructively)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EvenCycleResult:
    cycle: tuple[int, ...]
    chord: Optional[tuple[int, int]]


def find_even_cycle_one_chord(g: Graph) -> EvenCycleResult:
    """An even cycle of g with at most one chord.

    Requires g 2-connected, not complete and not an odd cycle; such a graph
    always contains one.  Construction: take a shortest cycle C.  If C is even
    it is induced and we are done.  Otherwise attach a shortest ear P to the
    odd induced C; of the two cycles P makes with the arcs of C exactly one is
    even, and shortestness kills every chord except possibly the C-edge
    between the ear's endpoints.  Shortest ears can fail only in one corner
    (every shortest ear completes a K4 over a triangle, e.g. K5 minus an
    edge); that corner falls back to a direct search in increasing length,
    which terminates because the cycle is guaranteed to exist.
    """
    _check_rubin_preconditions(g)
    if all(d == 2 for d in g.degrees):  # connected 2-regular: a single cycle
        cyc = _trace_cycle(g)
        return EvenCycleResult(tuple(cyc), None)

    cyc = _shortest_cycle(g)
    if len(cyc) % 2 == 0:
        return EvenCycleResult(tuple(cyc), None)
    ear = _shortest_ear(g, cyc)
    if ear is not None:
        res = _combine_ear(g, cyc, ear)
        if res is not None:
            return res
    return _search_even_cycle(g)


def _check_rubin_preconditions(g: Graph) -> None:
    n = g.n
    if n < 3 or not g.is_connected():
        raise ValueError("graph must be 2-connected on at least 3 vertices")
    bt = block_decomposition(g)
    if len(bt.blocks) != 1:
        raise ValueError("graph must be 2-connected")
    if g.m == n * (n - 1) // 2:
        raise ValueError("graph must not be complete")
    if n % 2 == 1 and g.m == n and all(d == 2 for d in g.degrees):
        raise ValueError("graph must not be an odd cycle")


def _trace_cycle(g: Graph) -> list[int]:
    cyc = [0]
    prev = -1
    while True:
        nxt = [u for u in g.neighbors(cyc[-1]) if u != prev]
        prev = cyc[-1]
        if nxt[0] == 0:
            return cyc
        cyc.append(nxt[0])


def _shortest_cycle(g: Graph) -> list[int]:
    """Vertex sequence of a shortest cycle (hence induced)."""
    best: Optional[list[int]] = None
    for u, v in sorted(g.edges):
        path = _bfs_path(g, u, v, forbidden_edge=(u, v))
        if path is not None and (best is None or len(path) < len(best)):
            best = path
    assert best is not None, "2-connected graph has a cycle"
    return best


def _bfs_path(
    g: Graph, src: int, dst: int, forbidden_edge: tuple[int, int]
) -> Optional[list[int]]:
    parent = {src: -1}
    queue = [src]
    fu, fv = forbidden_edge
    while queue:
        nxt = []
        for x in queue:
            for y in g.neighbors(x):
                if {x, y} == {fu, fv} or y in parent:
                    continue
                parent[y] = x
                if y == dst:
                    path = [y]
                    while path[-1] != src:
                        path.append(parent[path[-1]])
                    return path
                nxt.append(y)
        queue = nxt
    return None


def _shortest_ear(g: Graph, cyc: Sequence[int]) -> Optional[list[int]]:
    """Shortest path with both endpoints on cyc and interior disjoint from it.

    Ties are broken toward ears whose interior sends no extra edges into the
    cycle, which is exactly the corner where the parity argument can break.
    """
    on_c = set(cyc)
    best: Optional[list[int]] = None
    best_clean = False
    for a in sorted(on_c):
        parent = {a: -1}
        queue = [a]
        found: Optional[list[int]] = None
        while queue and found is None:
            nxt = []
            for x in queue:
                for y in g.neighbors(x):
                    if y in parent:
                        continue
                    if y in on_c:
                        if x == a:
                            continue  # cycle's own edge, C is induced
                        found = [y]
                        cur = x
                        while cur != -1:
                            found.append(cur)
                            cur = parent[cur]
                        break
                    parent[y] = x
                    nxt.append(y)
                if found:
                    break
            queue = nxt
        if found is None:
            continue
        clean = not any(
            u in on_c
            for w in found[1:-1]
            for u in g.neighbors(w)
            if u not in (found[0], found[-1])
        )
        better = best is None or len(found) < len(best) or (
            len(found) == len(best) and clean and not best_clean
        )
        if better:
            best, best_clean = found, clean
    return best


def _combine_ear(g: Graph, cyc: Sequence[int], ear: Sequence[int]) -> Optional[EvenCycleResult]:
    ear = list(ear)
    if cyc.index(ear[0]) > cyc.index(ear[-1]):
        ear.reverse()
    a, b = ear[0], ear[-1]
    ia, ib = cyc.index(a), cyc.index(b)
    interior = ear[1:-1]
    arc1 = list(cyc[ia:ib + 1])                  # a .. b forward along the cycle
    arc2 = list(cyc[ib:]) + list(cyc[:ia + 1])   # b .. a the other way around
    cand1 = arc1 + interior[::-1]                # close b -> a through the ear
    cand2 = arc2 + interior                      # close a -> b through the ear
    for cand in (cand1, cand2):
        if len(cand) % 2 == 0 and _is_cycle_sequence(g, cand):
            chords = _chords(g, cand)
            if len(chords) <= 1:
                return EvenCycleResult(tuple(cand), chords[0] if chords else None)
    return None


def _chords(g: Graph, cycle: Sequence[int]) -> list[tuple[int, int]]:
    k = len(cycle)
    cyc_edges = {
        tuple(sorted((cycle[i], cycle[(i + 1) % k]))) for i in range(k)
    }
    out = []
    for u, v in itertools.combinations(sorted(cycle), 2):
        if g.has_edge(u, v) and (u, v) not in cyc_edges:
            out.append((u, v))
    return out


def _is_cycle_sequence(g: Graph, seq: Sequence[int]) -> bool:
    k = len(seq)
    if k < 3 or len(set(seq)) != k:
        return False
    return all(g.has_edge(seq[i], seq[(i + 1) % k]) for i in range(k))


def _search_even_cycle(g: Graph) -> EvenCycleResult:
    """Exhaustive fallback: first even cycle with at most one chord, by length."""
    for k in range(4, g.n + 1, 2):
        for vs in itertools.combinations(range(g.n), k):
            for perm in itertools.permutations(vs[1:]):
                seq = (vs[0],) + perm
                if perm[0] > perm[-1]:
                    continue  # each cycle once per orientation
                if not _is_cycle_sequence(g, seq):
                    continue
                chords = _chords(g, seq)
                if len(chords) <= 1:
                    return EvenCycleResult(seq, chords[0] if chords else None)
    raise ValueError("no even cycle with at most one chord found; "
                     "input violates the 2-connected/non-complete/non-odd-cycle precondition")


# ---------------------------------------------------------------------------
# mic and the low/high split
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MicResult:
    value: int
    witness: frozenset[int]


def mic(g: Graph) -> MicResult:
    """Maximum number of edges incident to an independent set, exactly.

    Exhaustive with pruning; intended for n <= 20.  The witness is the
    lexicographically smallest optimal independent set.
    """
    value, mask = max_weight_independent_set(g, g.degrees)
    if value <= 0:
        return MicResult(0, frozenset())
    return MicResult(value, frozenset(_bits(mask)))


@dataclass(frozen=True)
class LowHighSplit:
    high: frozenset[int]      # degree > delta
    low: frozenset[int]       # degree = delta; high and low partition V
    high_edgeless: bool
    gap_is_one: bool          # max degree == min degree + 1


def low_high_split(g: Graph) -> LowHighSplit:
    if g.n < 1:
        raise ValueError("low_high_split requires at least one vertex")
    delta = min(g.degrees)
    top = max(g.degrees)
    low = frozenset(v for v in range(g.n) if g.degrees[v] == delta)
    high = frozenset(v for v in range(g.n) if g.degrees[v] > delta)
    hmask = _mask(high)
    high_edgeless = all(g.adj[v] & hmask == 0 for v in high)
    return LowHighSplit(high, low, high_edgeless, top == delta + 1)


def sigma(g: Graph) -> Fraction:
    """(delta - 1 + 2/delta)|L| - 2||L|| in exact rationals, L the min-degree part."""
    delta = min(g.degrees, default=0)
    if delta == 0:
        raise UndefinedStatisticError("sigma is undefined when the minimum degree is 0")
    low = [v for v in range(g.n) if g.degrees[v] == delta]
    low_set = set(low)
    low_edges = sum(1 for u, v in g.edges if u in low_set and v in low_set)
    return (Fraction(delta - 1) + Fraction(2, delta)) * len(low) - 2 * low_edges


def beta_t(g: Graph, t: int) -> int:
    """Independence number of the subgraph induced on the degree-t vertices."""
    vt = [v for v in range(g.n) if g.degrees[v] == t]
    return independence_number(g.induced(vt))


# ---------------------------------------------------------------------------
# Counting inequality for Gallai forests
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GallaiCountCheck:
    holds: bool
    lhs: Fraction
    rhs: Fraction


def gallai_count_check(forest: Graph, k: int) -> GallaiCountCheck:
    """For a Gallai forest with max degree <= k-1 and no K_k component, check

        (k-1) * beta_{k-1} + Sum_v (k-1 - d(v))
            >= 2(k-3)/(k-2) * |G| - (k-1)(k-4)/(k-2) * c(G)

    in exact rationals.  Preconditions are verified and violations raise.
    """
    if k < 6:
        raise ValueError("counting inequality requires k >= 6")
    if not is_gallai_forest(forest):
        raise ValueError("input is not a Gallai forest")
    if forest.n and max(forest.degrees) > k - 1:
        raise ValueError(f"maximum degree must be at most {k - 1}")
    comps = forest.component_masks()
    # With max degree <= k-1 a K_k subgraph can only be a whole component.
    for comp in comps:
        if comp.bit_count() == k and all(
            forest.deg_in(v, comp) == k - 1 for v in _bits(comp)
        ):
            raise ValueError(f"forest contains K_{k}")
    lhs = Fraction(
        (k - 1) * beta_t(forest, k - 1)
        + sum(k - 1 - d for d in forest.degrees)
    )
    rhs = (
        Fraction(2 * (k - 3), k - 2) * forest.n
        - Fraction((k - 1) * (k - 4), k - 2) * len(comps)
    )
    return GallaiCountCheck(lhs >= rhs, lhs, rhs)


# ---------------------------------------------------------------------------
# Random Gallai trees / forests (test-instance generation)
# ---------------------------------------------------------------------------


def random_gallai_tree(
    block_count: int,
    max_block_size: int,
    seed: Optional[int] = None,
    rng: Optional[random.Random] = None,
) -> Graph:
    """Random connected graph whose blocks are cliques or odd cycles.

    Endblocks glue at uniformly random existing vertices; each block is an odd
    cycle with probability 1/2 (when sizes allow), else a clique.
    Reproducible from the seed.
    """
    if block_count < 1 or max_block_size < 2:
        raise ValueError("need block_count >= 1 and max_block_size >= 2")
    r = rng if rng is not None else random.Random(seed)
    edges: list[tuple[int, int]] = []
    n = 1  # vertex 0 exists, blocks attach to existing vertices
    for _ in range(block_count):
        attach = r.randrange(n)
        odd_sizes = [s for s in range(3, max_block_size + 1, 2)]
        use_cycle = bool(odd_sizes) and r.random() < 0.5
        if use_cycle:
            size = r.choice(odd_sizes)
            ring = [attach] + [n + i for i in range(size - 1)]
            n += size - 1
            edges += [(ring[i], ring[(i + 1) % size]) for i in range(size)]
        else:
            size = r.randint(2, max_block_size)
            block = [attach] + [n + i for i in range(size - 1)]
            n += size - 1
            edges += list(itertools.combinations(block, 2))
    return Graph(n, edges)


def random_gallai_forest(
    tree_count: int,
    block_count: int,
    max_block_size: int,
    seed: Optional[int] = None,
    max_degree: Optional[int] = None,
) -> Graph:
    """Disjoint union of random Gallai trees, optionally degree-capped by rejection."""
    r = random.Random(seed)
    while True:
        parts = [
            random_gallai_tree(1 + r.randrange(block_count), max_block_size, rng=r)
            for _ in range(tree_count)
        ]
        offset = 0
        edges = []
        total = 0
        for part in parts:
            edges += [(u + offset, v + offset) for u, v in part.edges]
            offset += part.n
            total = offset
        g = Graph(total, edges)
        if max_degree is None or max(g.degrees) <= max_degree:
            return g


# ---------------------------------------------------------------------------
# Triangle-free lower bound on mic
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MicBoundCheck:
    holds: bool
    mic_value: int
    bound: float  # quarter-sum of base-2 logs of the degrees

MIC_BOUND_TOLERANCE = 1e-9


def triangle_free_mic_check(g: Graph) -> MicBoundCheck:
    """Check mic(G) >= (1/4) Sum_v lg d(v) on a triangle-free graph.

    The left side is an exact integer; only the logarithmic side is floating
    point, compared with tolerance 1e-9 in favor of "holds".
    """
    if g.has_triangle():
        raise ValueError("graph must be triangle-free")
    if g.n == 0 or min(g.degrees) < 1:
        raise ValueError("every vertex must have degree at least 1")
    bound = sum(math.log2(d) for d in g.degrees) / 4.0
    value = mic(g).value
    return MicBoundCheck(value >= bound - MIC_BOUND_TOLERANCE, value, bound)
