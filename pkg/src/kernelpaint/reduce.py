"""Reducible-configuration extraction and its certificates.

Given a graph g, a budget table f with f(v) <= d(v) + 1, and an independent
set A incident to at least Sum_v (d(v) + 1 - f(v)) edges, some nonempty
induced subgraph H is online f_H-choosable for f_H(v) = f(v) + d_H(v) - d_G(v).
``extract_reducible`` turns that existence statement into an algorithm: try to
build the kernel-perfect composite digraph on the current H; when the
orientation step fails it hands back a violating vertex set X, and peeling X
preserves the counting hypothesis while strictly shrinking H, so the loop
terminates with a concrete certificate (H, digraph, f_H).

The certificate is self-contained evidence: the digraph is kernel-perfect and
every out-degree is below f_H, which is exactly what the kernel painting
strategy needs to win the online game on H.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import HypothesisNotMetError, SizeLimitError
from .graphs import Graph, cut_size, _bits
from .orient import DegreeTable, Digraph, _build_kp_masked, _table
from .structure import mic
from .verify import PaintabilitySolver

__all__ = [
    "Certificate",
    "CutLemmaRecord",
    "MicStrengthRecord",
    "OC_REDUCIBLE_CAP",
    "check_mic_strength",
    "cut_lemma_check",
    "extract_reducible",
    "is_oc_reducible",
]

OC_REDUCIBLE_CAP = 7
CUT_LEMMA_CAP = 6


@dataclass(frozen=True)
class Certificate:
    """Witness that the induced subgraph on h_vertices is online f_h-choosable."""

    h_vertices: tuple[int, ...]
    digraph: Digraph
    f_h: dict[int, int]

    def to_json(self) -> dict:
        return {
            "vertices": list(self.h_vertices),
            "arcs": [list(a) for a in self.digraph.arcs],
            "f_h": {str(v): self.f_h[v] for v in self.h_vertices},
        }

    @staticmethod
    def from_json(obj: dict) -> "Certificate":
        verts = tuple(int(v) for v in obj["vertices"])
        arcs = [tuple(a) for a in obj["arcs"]]
        f_h = {int(k): int(v) for k, v in obj["f_h"].items()}
        return Certificate(verts, Digraph(verts, arcs), f_h)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @staticmethod
    def loads(text: str) -> "Certificate":
        return Certificate.from_json(json.loads(text))


def extract_reducible(
    g: Graph, f: DegreeTable, a: Optional[Iterable[int]] = None
) -> Certificate:
    """Extract a certified online-choosable induced subgraph.

    A defaults to the lexicographically smallest optimal independent cover.
    Raises HypothesisNotMetError when ||A, V|| < Sum_v (d(v) + 1 - f(v)); that
    is the caller's "independent cover too small" signal.

    The peeling loop maintains ||H_A|| >= Sum_{v in H} (d_H(v) + 1 - f_H(v)),
    where H_A keeps only the H-edges meeting A.  A violating set X cannot be
    all of V(H) under that invariant, so each round removes a proper nonempty
    subset and the loop ends with a nonempty H whose composite digraph exists.
    """
    if g.n == 0:
        raise ValueError("graph must be nonempty")
    ftab = _table(f, range(g.n))
    for v in range(g.n):
        if not 0 <= ftab[v] <= g.degrees[v] + 1:
            raise ValueError(f"f({v}) = {ftab[v]} outside [0, d(v)+1]")
    a_set = frozenset(a) if a is not None else mic(g).witness
    for u in a_set:
        if g.adj[u] & _maskof(a_set):
            raise ValueError("A must be independent")
    need = sum(g.degrees[v] + 1 - ftab[v] for v in range(g.n))
    have = cut_size(g, a_set, range(g.n))
    if have < need:
        raise HypothesisNotMetError(
            f"independent cover supplies {have} edge incidences, hypothesis needs {need}"
        )

    # demands are d_H(v) + 1 - f_H(v) = d_G(v) + 1 - f(v): invariant under peeling
    mask = g.full_mask()
    while True:
        assert mask, "peeling can never empty H"
        h_a = frozenset(v for v in _bits(mask) if v in a_set)
        f_h = {v: ftab[v] + g.deg_in(v, mask) - g.degrees[v] for v in _bits(mask)}
        res = _build_kp_masked(g, mask, h_a, f_h)
        if res.ok:
            return Certificate(tuple(_bits(mask)), res.digraph, f_h)
        x = res.violating_set
        xmask = _maskof(x)
        assert xmask and xmask != mask, "violating set must be a proper nonempty subset"
        mask &= ~xmask
        _assert_counting_invariant(g, mask, a_set, ftab)


def _assert_counting_invariant(g: Graph, mask: int, a_set, ftab) -> None:
    verts = _bits(mask)
    amask = _maskof(a_set) & mask
    h_a_edges = sum(
        1
        for u, v in g.edges
        if mask >> u & 1 and mask >> v & 1 and (amask >> u & 1 or amask >> v & 1)
    )
    need = sum(g.degrees[v] + 1 - ftab[v] for v in verts)
    assert h_a_edges >= need, "peeling must preserve the counting inequality"


def _maskof(vs) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


# ---------------------------------------------------------------------------
# OC-reducibility and the independent cover bound
# ---------------------------------------------------------------------------


def is_oc_reducible(g: Graph) -> Optional[tuple[tuple[int, ...], dict[int, int]]]:
    """Smallest induced subgraph H that is online f_H-choosable, if any.

    f_H(v) = delta(G) + d_H(v) - d_G(v).  Candidates are scanned in increasing
    size, lexicographic within a size, and checked with the exact game solver,
    so the first hit is the deterministic witness.  Returns (vertices, f_H) or
    None when g is OC-irreducible.
    """
    if g.n > OC_REDUCIBLE_CAP:
        raise SizeLimitError(f"OC-reducibility capped at n = {OC_REDUCIBLE_CAP}")
    if g.n == 0:
        return None
    delta = min(g.degrees)
    solver = PaintabilitySolver(g)
    masks = sorted(range(1, 1 << g.n), key=lambda m: (m.bit_count(), _lex(m)))
    for mask in masks:
        f_h = {}
        feasible = True
        for v in _bits(mask):
            fv = delta + g.deg_in(v, mask) - g.degrees[v]
            if fv < 1:
                feasible = False
                break
            f_h[v] = fv
        if not feasible:
            continue
        if solver.wins(mask, f_h):
            return tuple(_bits(mask)), f_h
    return None


def _lex(mask: int) -> tuple:
    return tuple(_bits(mask))


@dataclass(frozen=True)
class MicStrengthRecord:
    irreducible: bool
    mic_value: int
    bound: int
    holds: bool


def check_mic_strength(g: Graph) -> MicStrengthRecord:
    """OC-irreducible graphs satisfy mic(G) <= 2||G|| - (delta - 1)|G| - 1.

    Vacuously true for reducible graphs; for irreducible ones the bound is
    checked against the exact independent cover number.
    """
    if g.n > OC_REDUCIBLE_CAP:
        raise SizeLimitError(f"mic-strength check capped at n = {OC_REDUCIBLE_CAP}")
    reducible = is_oc_reducible(g) is not None
    value = mic(g).value
    delta = min(g.degrees) if g.n else 0
    bound = 2 * g.m - (delta - 1) * g.n - 1
    holds = True if reducible else value <= bound
    return MicStrengthRecord(not reducible, value, bound, holds)


# ---------------------------------------------------------------------------
# Gluing check: choosable parts imply a choosable whole
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CutLemmaRecord:
    rest_choosable: bool   # G - H online choosable with f restricted
    part_choosable: bool   # H online choosable with f_H
    whole_choosable: Optional[bool]  # evaluated only when both antecedents hold
    holds: bool            # False only on a genuine counterexample


def cut_lemma_check(g: Graph, f: DegreeTable, h_vertices: Iterable[int]) -> CutLemmaRecord:
    """If G - H is online f-choosable and H is online f_H-choosable with
    f_H(v) = f(v) + d_H(v) - d_G(v), then G must be online f-choosable."""
    if g.n > CUT_LEMMA_CAP:
        raise SizeLimitError(f"cut-lemma check capped at n = {CUT_LEMMA_CAP}")
    hmask = _maskof(h_vertices)
    if hmask & ~g.full_mask():
        raise ValueError("h_vertices outside the graph")
    ftab = _table(f, range(g.n))
    solver = PaintabilitySolver(g)
    rest = g.full_mask() & ~hmask
    rest_ok = solver.wins(rest, ftab)
    f_h = {
        v: ftab[v] + g.deg_in(v, hmask) - g.degrees[v] for v in _bits(hmask)
    }
    part_ok = all(val >= 1 for val in f_h.values()) and solver.wins(hmask, f_h)
    if not (rest_ok and part_ok):
        return CutLemmaRecord(rest_ok, part_ok, None, True)
    whole = solver.wins(g.full_mask(), ftab)
    return CutLemmaRecord(rest_ok, part_ok, whole, whole)
