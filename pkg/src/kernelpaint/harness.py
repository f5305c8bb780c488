"""Suite runner: theorem checks over graph corpora, certificate validation,
and machine-readable reports.

Each suite walks a corpus (enumerated in-process or read from a graph6 file),
emits one record per instance with a verdict of ``pass``, ``fail`` or
``skip``, and closes with a summary object.  A suite passes iff it produced
zero ``fail`` records; skips never count, and a graph exceeding a suite's
size ceiling becomes a skip record rather than an abort.  Reports serialize
to JSON lines and are byte-identical across runs given the same inputs and
seed; timings are opt-in precisely so that determinism holds by default.
"""

from __future__ import annotations

import itertools
import json
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Optional

from .errors import FormatError, HypothesisNotMetError, SizeLimitError
from .graph6 import encode_graph6, read_graph6_file
from .graphs import (
    Graph,
    canonical_key,
    cut_size,
    enumerate_graphs,
    enumerate_triangle_free,
    graph_stats,
    make_named,
)
from .orient import (
    Digraph,
    extend_d0_kp,
    is_f_AT,
    is_f_KP,
    is_kernel_perfect,
    orient_with_indegrees,
)
from .reduce import (
    Certificate,
    check_mic_strength,
    cut_lemma_check,
    extract_reducible,
    is_oc_reducible,
)
from .structure import (
    gallai_count_check,
    is_gallai_tree,
    low_high_split,
    mic,
    random_gallai_forest,
    sigma,
    triangle_free_mic_check,
)
from .verify import (
    PaintabilitySolver,
    is_k_critical,
    make_kernel_painter,
    play_paint_game,
)

__all__ = [
    "SUITE_CEILINGS",
    "SUITE_NAMES",
    "SuiteReport",
    "run_suite",
    "validate_certificate",
]


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


@dataclass
class SuiteReport:
    suite: str
    records: list[dict] = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not any(r["verdict"] == "fail" for r in self.records)

    def counts(self) -> dict:
        out = {"pass": 0, "fail": 0, "skip": 0}
        for r in self.records:
            out[r["verdict"]] += 1
        return out

    def summary(self) -> dict:
        c = self.counts()
        skip_reasons: dict[str, int] = {}
        for r in self.records:
            if r["verdict"] == "skip":
                reason = r.get("reason", "")
                skip_reasons[reason] = skip_reasons.get(reason, 0) + 1
        return {
            "suite": self.suite,
            "total": len(self.records),
            "passed": c["pass"],
            "failed": c["fail"],
            "skipped": c["skip"],
            "skip_reasons": skip_reasons,
            "ok": self.passed,
            **self.meta,
        }

    def to_jsonl(self) -> str:
        lines = [_dump(r) for r in self.records]
        lines.append(_dump({"summary": self.summary()}))
        return "\n".join(lines) + "\n"


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _rec(g: Optional[Graph], verdict: str, **detail) -> dict:
    rec = {"verdict": verdict}
    if g is not None:
        rec["graph6"] = encode_graph6(g)
    rec.update(detail)
    return rec


def _per_graph(corpus, fn) -> Iterator[dict]:
    """Run a per-graph check, demoting size-limit violations to skip records."""
    for g in corpus:
        try:
            yield from fn(g)
        except SizeLimitError as exc:
            yield _rec(g, "skip", reason=f"size limit: {exc}")


# ---------------------------------------------------------------------------
# Certificate validation
# ---------------------------------------------------------------------------


def validate_certificate(cert, g: Graph, f) -> tuple[bool, str]:
    """Recheck every certificate invariant exhaustively.

    Accepts a Certificate, a JSON dict, or a JSON string.  Checks: nonempty H
    inside V(g); arcs confined to H and covering every edge of G[H] (extra
    arcs and doubled pairs are allowed, the painting strategy tolerates
    them); f_h(v) = f(v) + d_H(v) - d_G(v); out-degrees strictly below f_h;
    and kernel-perfection of the digraph.
    """
    if isinstance(cert, str):
        try:
            cert = Certificate.loads(cert)
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"unparseable certificate: {exc}") from exc
    elif isinstance(cert, dict):
        try:
            cert = Certificate.from_json(cert)
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"unparseable certificate: {exc}") from exc
    h = cert.h_vertices
    if not h:
        return False, "empty vertex set"
    if not all(0 <= v < g.n for v in h):
        return False, "vertices outside the host graph"
    if cert.digraph.vertex_set != frozenset(h):
        return False, "digraph vertex set differs from h_vertices"
    hset = frozenset(h)
    hmask = 0
    for v in h:
        hmask |= 1 << v
    induced_edges = {e for e in g.edges if e[0] in hset and e[1] in hset}
    if not induced_edges <= cert.digraph.underlying_edges():
        return False, "some edge of G[H] carries no arc"
    for v in h:
        expect = f[v] + g.deg_in(v, hmask) - g.degrees[v]
        if cert.f_h.get(v) != expect:
            return False, f"f_h({v}) = {cert.f_h.get(v)} but expected {expect}"
        if cert.digraph.out_degree(v) + 1 > cert.f_h[v]:
            return False, f"out-degree bound violated at {v}"
    kp = is_kernel_perfect(cert.digraph)
    if not kp:
        return False, f"digraph not kernel-perfect (witness {sorted(kp.offending)})"
    return True, "ok"


# ---------------------------------------------------------------------------
# Suite bodies
# ---------------------------------------------------------------------------


def _suite_brooks_alpha(corpus: list[Graph], seed: int) -> Iterator[dict]:
    def check(g: Graph):
        st = graph_stats(g)
        if st.max_degree < 3:
            yield _rec(g, "skip", reason="max degree below 3")
            return
        if st.clique_number > st.max_degree:
            yield _rec(g, "skip", reason="contains a clique on max_degree+1 vertices")
            return
        ok = st.independence_number * st.max_degree >= g.n
        yield _rec(g, "pass" if ok else "fail",
                   alpha=st.independence_number, max_degree=st.max_degree, n=g.n)

    yield from _per_graph(corpus, check)


def _suite_mic_basics(corpus: list[Graph], seed: int) -> Iterator[dict]:
    def check(g: Graph):
        gallai = bool(is_gallai_tree(g))
        value = mic(g).value
        ok = value == g.n - 1 if gallai else value >= g.n
        yield _rec(g, "pass" if ok else "fail", mic=value, gallai_tree=gallai, n=g.n)

    yield from _per_graph(corpus, check)


SOLVER_CONFIRM_CAP = 6


def _suite_main_lemma_d0(corpus: list[Graph], seed: int) -> Iterator[dict]:
    def check(g: Graph):
        if is_gallai_tree(g):
            yield _rec(g, "skip", reason="Gallai tree: independent cover too small")
            return
        try:
            cert = extract_reducible(g, g.degrees)
        except HypothesisNotMetError as exc:
            yield _rec(g, "fail", reason=f"hypothesis unexpectedly not met: {exc}")
            return
        ok, why = validate_certificate(cert, g, g.degrees)
        detail = {"h": list(cert.h_vertices), "certificate": cert.to_json()}
        if ok and g.n <= SOLVER_CONFIRM_CAP:
            if not PaintabilitySolver(g).wins(cert.h_vertices, cert.f_h):
                ok, why = False, "game solver refutes online choosability of H"
            else:
                detail["solver_confirmed"] = True
        yield _rec(g, "pass" if ok else "fail", reason="ok" if ok else why, **detail)

    yield from _per_graph(corpus, check)


def _suite_kernel_game(corpus: list[Graph], seed: int) -> Iterator[dict]:
    def check(g: Graph):
        if is_gallai_tree(g):
            yield _rec(g, "skip", reason="Gallai tree: no certificate to play")
            return
        cert = extract_reducible(g, g.degrees)
        h_sorted = sorted(cert.h_vertices)
        relabel = {v: i for i, v in enumerate(h_sorted)}
        h = g.induced(h_sorted)
        d = cert.digraph.relabel(relabel)
        f_h = [cert.f_h[v] for v in h_sorted]
        out = play_paint_game(h, f_h, painter=make_kernel_painter(d), lister="exhaustive")
        yield _rec(g, "pass" if out.winner == "painter" else "fail",
                   h=list(cert.h_vertices), states=out.states_explored,
                   losing_line=out.to_json() if out.winner != "painter" else None)

    yield from _per_graph(corpus, check)


ORIENT_ORACLE_CAP = 5


def _suite_in_orient_oracle(corpus: list[Graph], seed: int) -> Iterator[dict]:
    def check(g: Graph):
        if g.n > ORIENT_ORACLE_CAP:
            yield _rec(g, "skip", reason=f"oracle capped at n = {ORIENT_ORACLE_CAP}")
            return
        frontier = _indegree_frontier(g)
        checked = 0
        bad = None
        for dem in itertools.product(*[range(d + 1) for d in g.degrees]):
            res = orient_with_indegrees(g, dem)
            brute = any(all(vec[v] >= dem[v] for v in range(g.n)) for vec in frontier)
            if res.ok != brute:
                bad = {"demand": list(dem), "flow": res.ok, "brute": brute}
                break
            if res.ok:
                if any(res.orientation.in_degree(v) < dem[v] for v in range(g.n)):
                    bad = {"demand": list(dem), "error": "orientation misses a demand"}
                    break
            else:
                x = res.violating_set
                inc = cut_size(g, x, x) // 2 + cut_size(g, x, set(range(g.n)) - x)
                if sum(dem[v] for v in x) <= inc:
                    bad = {"demand": list(dem), "error": "reported set does not violate"}
                    break
            checked += 1
        yield _rec(g, "pass" if bad is None else "fail",
                   tables=checked, counterexample=bad)

    yield from _per_graph(corpus, check)


def _indegree_frontier(g: Graph) -> list[tuple[int, ...]]:
    """Pareto-maximal in-degree vectors over all 2^m orientations."""
    edges = sorted(g.edges)
    vecs: set[tuple[int, ...]] = set()
    for pick in range(1 << len(edges)):
        indeg = [0] * g.n
        for i, (u, v) in enumerate(edges):
            indeg[v if pick >> i & 1 else u] += 1
        vecs.add(tuple(indeg))
    frontier = []
    for vec in vecs:
        if not any(other != vec and all(o >= x for o, x in zip(other, vec))
                   for other in vecs):
            frontier.append(vec)
    return frontier


AT_SUITE_EDGE_CAP = 12


def _suite_at_classify(corpus: list[Graph], seed: int) -> Iterator[dict]:
    def check(g: Graph):
        if g.m > AT_SUITE_EDGE_CAP:
            yield _rec(g, "skip", reason=f"more than {AT_SUITE_EDGE_CAP} edges")
            return
        gallai = bool(is_gallai_tree(g))
        at = is_f_AT(g, g.degrees)
        ok = bool(at) == (not gallai)
        yield _rec(g, "pass" if ok else "fail",
                   gallai_tree=gallai, d0_at=bool(at),
                   counts=None if not at.counts else [at.counts.even, at.counts.odd])

    yield from _per_graph(corpus, check)


KP_EXHAUSTIVE_CAP = 5


def _suite_kp_classify(corpus: list[Graph], seed: int) -> Iterator[dict]:
    yield from _kp_fixed_pair()

    def check(g: Graph):
        gallai = bool(is_gallai_tree(g))
        detail: dict = {"gallai_tree": gallai, "phases": []}
        ok = True
        if g.n <= KP_EXHAUSTIVE_CAP:
            dec = is_f_KP(g, g.degrees)
            detail["phases"].append("exhaustive")
            detail["d0_kp"] = bool(dec)
            if bool(dec) != (not gallai):
                ok = False
                detail["reason"] = "exhaustive search disagrees with the block dichotomy"
        if ok and not gallai:
            err = _constructive_kp_route(g)
            detail["phases"].append("constructive")
            if err:
                ok = False
                detail["reason"] = err
        if not detail["phases"]:
            yield _rec(g, "skip", reason="Gallai tree beyond exhaustive cap")
            return
        yield _rec(g, "pass" if ok else "fail", **detail)

    yield from _per_graph(corpus, check)


def _constructive_kp_route(g: Graph) -> Optional[str]:
    """Spanning degree-bounded kernel-perfect witness by extraction plus
    layer-by-layer extension; returns an error string on any failure."""
    cert = extract_reducible(g, g.degrees)
    witness = cert.digraph
    covered = set(cert.h_vertices)
    while True:
        cmask = 0
        for v in covered:
            cmask |= 1 << v
        if not is_kernel_perfect(witness):
            return "witness is not kernel-perfect"
        for v in covered:
            if not witness.out_degree(v) < g.deg_in(v, cmask):
                return f"out-degree bound fails at {v}"
        if covered == set(range(g.n)):
            return None
        witness = extend_d0_kp(g, covered, witness)
        covered = set(witness.vertex_set)


def _kp_fixed_pair() -> Iterator[dict]:
    """K4-e: no strict orientation works, and every supergraph witness is
    exactly the doubled two-triangle edge."""
    g = make_named("K4_minus_e")
    strict = is_f_KP(g, g.degrees, allow_supergraph=False)
    yield _rec(g, "pass" if not strict else "fail",
               phase="fixed-pair-strict", strict_witness_exists=bool(strict))
    doubled_edge = (0, 1)  # the edge lying in both triangles
    witnesses = list(_all_kp_supergraph_witnesses(g))
    ok = bool(witnesses) and all(
        set(w.doubled_pairs()) == {doubled_edge} and w.underlying_edges() == g.edges
        for w in witnesses
    )
    yield _rec(g, "pass" if ok else "fail",
               phase="fixed-pair-supergraph", witnesses=len(witnesses),
               all_double_two_triangle_edge=ok)


def _all_kp_supergraph_witnesses(g: Graph) -> Iterator[Digraph]:
    budget = [d - 1 for d in g.degrees]
    pairs = list(itertools.combinations(range(g.n), 2))

    def options(u, v):
        if g.has_edge(u, v):
            return [((u, v),), ((v, u),), ((u, v), (v, u))]
        return [(), ((u, v),), ((v, u),), ((u, v), (v, u))]

    for combo in itertools.product(*[options(u, v) for u, v in pairs]):
        arcs = [a for opt in combo for a in opt]
        out = [0] * g.n
        for t, _ in arcs:
            out[t] += 1
        if any(out[v] > budget[v] for v in range(g.n)):
            continue
        d = Digraph(range(g.n), arcs)
        if is_kernel_perfect(d):
            yield d


def _suite_mic_strength(corpus: list[Graph], seed: int) -> Iterator[dict]:
    tight_expected = {
        canonical_key(make_named("cycle", [5])): ("C5", 4),
        canonical_key(make_named("complete", [4])): ("K4", 3),
    }
    seen_tight: dict[str, bool] = {}

    def check(g: Graph):
        rec = check_mic_strength(g)
        key = canonical_key(g)
        if key in tight_expected:
            name, expect = tight_expected[key]
            seen_tight[name] = rec.irreducible and rec.mic_value == rec.bound == expect
        yield _rec(g, "pass" if rec.holds else "fail",
                   irreducible=rec.irreducible, mic=rec.mic_value, bound=rec.bound)

    yield from _per_graph(corpus, check)
    for name, _ in tight_expected.values():
        if name not in seen_tight:
            yield {"verdict": "skip", "phase": "tightness", "graph": name,
                   "reason": "expected tight graph not in corpus"}
        else:
            ok = seen_tight[name]
            yield {"verdict": "pass" if ok else "fail",
                   "phase": "tightness", "graph": name, "tight": ok}


GALLAI_COUNT_INSTANCES = 1000


def _suite_gallai_count(corpus, seed: int) -> Iterator[dict]:
    for k in (6, 7, 8):
        if k == 6:
            k5 = make_named("complete", [5])
            chk = gallai_count_check(k5, 6)
            ok = chk.holds and chk.lhs == chk.rhs == 5
            yield _rec(k5, "pass" if ok else "fail", k=6, phase="tight-K5",
                       lhs=str(chk.lhs), rhs=str(chk.rhs))
        for i in range(GALLAI_COUNT_INSTANCES):
            forest = random_gallai_forest(
                tree_count=1 + (i % 3), block_count=3,
                max_block_size=k - 1, seed=seed * 100003 + k * 1009 + i,
                max_degree=k - 1,
            )
            chk = gallai_count_check(forest, k)
            if chk.holds:
                yield _rec(forest, "pass", k=k, index=i)
            else:
                yield _rec(forest, "fail", k=k, index=i,
                           lhs=str(chk.lhs), rhs=str(chk.rhs))


def _suite_triangle_free_mic(corpus: list[Graph], seed: int) -> Iterator[dict]:
    def check(g: Graph):
        if g.n == 0 or min(g.degrees) < 1:
            yield _rec(g, "skip", reason="vertex of degree 0")
            return
        if g.has_triangle():
            yield _rec(g, "skip", reason="not triangle-free")
            return
        chk = triangle_free_mic_check(g)
        yield _rec(g, "pass" if chk.holds else "fail",
                   mic=chk.mic_value, bound=round(chk.bound, 12))

    yield from _per_graph(corpus, check)


def _suite_edges_4critical(corpus: list[Graph], seed: int) -> Iterator[dict]:
    corpus_max = max((g.n for g in corpus), default=0)
    expected_keys = {}
    if corpus_max >= 4:
        expected_keys[canonical_key(make_named("complete", [4]))] = "K4"
    if corpus_max >= 7:
        expected_keys[canonical_key(make_named("moser_spindle"))] = "moser_spindle"
    found: set[str] = set()

    def check(g: Graph):
        if max(g.degrees, default=0) > 4:
            yield _rec(g, "skip", reason="max degree above 4")
            return
        if not is_k_critical(g, 4):
            yield _rec(g, "skip", reason="not 4-critical")
            return
        if not low_high_split(g).high_edgeless:
            yield _rec(g, "skip", reason="high-degree part has an edge")
            return
        formula = math.ceil((5 * g.n - 2) / 3)
        if min(g.degrees) == 4:
            # 4-regular graphs sit outside the edge-count argument (it runs
            # through the gap-1 precursor bound and these graphs are not even
            # OC-irreducible); the complement of C7 shows the formula really
            # fails there, so the boundary is recorded, not asserted.
            yield _rec(g, "skip",
                       reason="4-regular: outside the gap-1 hypothesis",
                       phase="regular-boundary", edges=g.m, formula=formula, n=g.n)
            return
        ok = g.m == formula and g.n % 3 != 0
        key = canonical_key(g)
        if key in expected_keys:
            found.add(expected_keys[key])
        yield _rec(g, "pass" if ok else "fail", edges=g.m, formula=formula, n=g.n)

    yield from _per_graph(corpus, check)
    ok = found == set(expected_keys.values())
    yield {"verdict": "pass" if ok else "fail", "phase": "coverage",
           "found": sorted(found)}


def _suite_ore_precursors(corpus: list[Graph], seed: int) -> Iterator[dict]:
    def check(g: Graph):
        split = low_high_split(g)
        if not split.gap_is_one:
            yield _rec(g, "skip", reason="max degree is not min degree + 1")
            return
        if not split.high_edgeless:
            yield _rec(g, "skip", reason="high-degree part has an edge")
            return
        if is_oc_reducible(g) is not None:
            yield _rec(g, "skip", reason="OC-reducible: lemmas do not apply")
            return
        delta = min(g.degrees)
        nh, nl = len(split.high), len(split.low)
        checks = {
            "mic_below_H_plus_G": mic(g).value < nh + g.n,
            "H_small_vs_L": (delta - 1) * nh < nl,
            "edge_bound": Fraction(2 * g.m) < (delta + Fraction(1, delta)) * g.n,
        }
        detail: dict = {"delta": delta, "high": nh, "low": nl}
        if delta >= 3:
            # The strict sigma bound needs 2/delta - 1 < 0 in its derivation;
            # P3 (delta 1) and K_{2,3} (delta 2) genuinely miss it otherwise.
            checks["sigma_bound"] = sigma(g) < (4 - Fraction(2, delta)) * nh
        else:
            detail["sigma_bound"] = "skipped: bound requires min degree >= 3"
        if delta >= 6 and graph_stats(g).clique_number <= delta:
            comps = len(g.induced(sorted(split.low)).component_masks())
            bound = Fraction(delta * (delta - 3), (delta - 1) * (delta - 5))
            checks["component_bound"] = Fraction(nh) < bound * comps
        else:
            detail["component_bound"] = "skipped: needs min degree >= 6 at desk scale"
        detail.update({k: bool(v) for k, v in checks.items()})
        yield _rec(g, "pass" if all(checks.values()) else "fail", **detail)

    yield from _per_graph(corpus, check)


CUT_LEMMA_SAMPLES = 500


def _suite_cut_lemma(corpus: list[Graph], seed: int) -> Iterator[dict]:
    rng = random.Random(seed)
    pool = [g for g in corpus if 1 <= g.n <= 6]
    if not pool:
        return
    solvers: dict[Graph, PaintabilitySolver] = {}
    for i in range(CUT_LEMMA_SAMPLES):
        g = pool[rng.randrange(len(pool))]
        f = [rng.randint(1, d + 1) for d in g.degrees]
        h = sorted(rng.sample(range(g.n), rng.randint(1, g.n)))
        rec = cut_lemma_check(g, f, h)
        yield _rec(g, "pass" if rec.holds else "fail",
                   index=i, f=f, h=h,
                   antecedents=[rec.rest_choosable, rec.part_choosable],
                   conclusion=rec.whole_choosable)


# ---------------------------------------------------------------------------
# Registry and the runner
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Suite:
    body: Callable[[list[Graph], int], Iterator[dict]]
    max_n: int               # per-suite ceiling, mirrors module preconditions
    connected_only: bool = True
    corpus: str = "all"      # "all" | "triangle_free" | "none"


_SUITES: dict[str, _Suite] = {
    "brooks-alpha": _Suite(_suite_brooks_alpha, 8),
    "mic-basics": _Suite(_suite_mic_basics, 7),
    "main-lemma-d0": _Suite(_suite_main_lemma_d0, 7),
    "kernel-game": _Suite(_suite_kernel_game, 6),
    "in-orient-oracle": _Suite(_suite_in_orient_oracle, 5, connected_only=False),
    "at-classify": _Suite(_suite_at_classify, 6),
    "kp-classify": _Suite(_suite_kp_classify, 6),
    "mic-strength": _Suite(_suite_mic_strength, 7),
    "gallai-count": _Suite(_suite_gallai_count, 0, corpus="none"),
    "triangle-free-mic": _Suite(_suite_triangle_free_mic, 9, corpus="triangle_free"),
    "edges-4critical": _Suite(_suite_edges_4critical, 7),
    "ore-precursors": _Suite(_suite_ore_precursors, 7),
    "cut-lemma": _Suite(_suite_cut_lemma, 6, connected_only=False),
}

SUITE_NAMES = tuple(sorted(_SUITES))
SUITE_CEILINGS = {name: s.max_n for name, s in _SUITES.items()}


def _resolve_corpus(spec: Optional[str], suite: _Suite, max_n: Optional[int],
                    allow_large: bool) -> list[Graph]:
    if suite.corpus == "none":
        return []
    n = suite.max_n if max_n is None else max_n
    if spec is not None and spec.startswith("enumerate:"):
        n = _parse_enumerate(spec)
        spec = None
    if spec is None:
        if n > suite.max_n and not allow_large:
            raise ValueError(
                f"suite ceiling is n = {suite.max_n}; pass allow_large to override"
            )
        gen = (enumerate_triangle_free if suite.corpus == "triangle_free"
               else enumerate_graphs)
        out: list[Graph] = []
        for k in range(1, n + 1):
            out.extend(gen(k, connected_only=suite.connected_only))
        return out
    graphs = read_graph6_file(spec)
    if suite.connected_only:
        graphs = [g for g in graphs if g.is_connected()]
    return graphs


def _parse_enumerate(spec: str) -> int:
    body = spec.split(":", 1)[1]
    digits = "".join(ch for ch in body if ch.isdigit())
    if not digits:
        raise ValueError(f"cannot parse corpus spec {spec!r}")
    return int(digits)


def run_suite(
    name: str,
    source: Optional[str] = None,
    max_n: Optional[int] = None,
    seed: int = 0,
    jobs: int = 1,
    allow_large: bool = False,
    timings: bool = False,
) -> SuiteReport:
    """Run one named suite and return its report.

    ``source`` is ``enumerate:nK`` or a graph6 file path; by default each
    suite enumerates up to its own ceiling, and asking for a larger corpus
    requires ``allow_large``.  ``jobs`` is validated and accepted for
    interface stability; per-graph records are independent, but this runner
    stays sequential so reports are deterministic on any machine.
    """
    if name not in _SUITES:
        raise ValueError(
            f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}"
        )
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    suite = _SUITES[name]
    corpus = _resolve_corpus(source, suite, max_n, allow_large)
    report = SuiteReport(suite=name, meta={"seed": seed, "source": source or "enumerate"})
    start = time.perf_counter()
    last = start
    for rec in suite.body(corpus, seed):
        now = time.perf_counter()
        if timings:
            # work for a record happens between generator yields
            rec["elapsed_ms"] = round((now - last) * 1000, 3)
        last = now
        report.records.append(rec)
    if timings:
        report.meta["elapsed_s"] = round(time.perf_counter() - start, 3)
    return report
