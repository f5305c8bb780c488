"""
Gallai trees and the independent cover number
=============================================

A connected graph whose blocks are all cliques or odd cycles has
mic(G) = |G| - 1 exactly; every other connected graph reaches |G|.  The same
boundary separates three more properties under degree budgets f = d(v):
paintability, Alon-Tarsi orientations, and kernel-perfect supergraph
orientations.  Tabulate all four on the small connected graphs.
"""

from kernelpaint import (
    enumerate_graphs,
    is_f_AT,
    is_gallai_tree,
    is_online_f_choosable,
    mic,
)

print(f"{'graph':>10} {'gallai':>7} {'mic':>5} {'paintable':>10} {'alon-tarsi':>11}")
for n in range(2, 6):
    for g in enumerate_graphs(n, connected_only=True):
        gallai = bool(is_gallai_tree(g))
        value = mic(g).value
        paint = is_online_f_choosable(g, g.degrees)
        at = bool(is_f_AT(g, g.degrees))
        tag = f"n={g.n},m={g.m}"
        print(f"{tag:>10} {str(gallai):>7} {value:>5} {str(paint):>10} {str(at):>11}")
        # the dichotomy, on every row
        assert (value == g.n - 1) == gallai
        assert paint == (not gallai)
        assert at == (not gallai)

print("\nEvery row agrees: Gallai tree <=> mic = n-1 <=> not degree-paintable "
      "<=> no Alon-Tarsi orientation.")
