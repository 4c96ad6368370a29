# Rauzy graphs and their compressed form.
#
# R_p has the square-free words of length 2p-3 as vertices.  Every vertex is
# replaced by its shortest suffix that still decides which letters may follow,
# which shrinks the graph a lot without changing walk counts.

import numpy as np

from sqfree.rauzy import build_full_rauzy, build_psi_graph, psi, serialize_graph
from sqfree.words import render

k = 3
for p in range(3, 9):
    full = build_full_rauzy(k, p)
    small, meta = build_psi_graph(k, p)
    print(f"p={p}: full |V|={full.n_vertices:5d}  compressed |V|={small.n_vertices:4d} |A|={small.n_arcs}")

full = build_full_rauzy(3, 5)
for w in full.words[:6]:
    print(render(w), "->", render(psi(w, 5)))

g, meta = build_psi_graph(3, 4)
text = serialize_graph(g, meta).decode().splitlines()
print("\n".join(text[:8]), "\n...")

# out-degree histogram
deg = g.out_degree()
print("out-degree histogram:", np.bincount(deg, minlength=k + 1))
