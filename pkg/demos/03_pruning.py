# Pruning a graph down to the vertices that keep enough walks alive.
#
# A vertex survives when, for every pattern w, it has at least f(|w|) walks
# compatible with w that stay inside the surviving set.  Iterating the removal
# reaches the largest such set.

from sqfree.prune import certify_subset, prune_fixed_point, walk_counts
from sqfree.rauzy import build_psi_graph
from sqfree.words import HOLE, PatternSet, parse_partial

g, meta = build_psi_graph(3, 12)
print("graph:", g.n_vertices, "vertices,", g.n_arcs, "arcs")

# walk counts for a single pattern, one row per prefix length
table = walk_counts(g, range(g.n_vertices), parse_partial("0..1"))
print("walks compatible with 0..1, first ten vertices:", table[-1][:10])

for f in (1, 2, 3):
    ps = PatternSet(((HOLE,) * 4,), 12, {4: f})
    X = prune_fixed_point(g, ps)
    print(f"pattern .... with f={f}: |X|={len(X)} after {X.sweeps} sweeps,"
          f" recount ok={certify_subset(g, X.mask, ps) if len(X) else None}")
