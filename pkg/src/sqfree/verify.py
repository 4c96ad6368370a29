"""Cross-checks of the compressed graph against the full Rauzy graph (small ``p`` only)."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .prune import walk_counts
from .rauzy import LabeledGraph, build_full_rauzy, psi
from .search import oracle_psi_image
from .words import HOLE, render


@dataclass
class OracleReport:
    k: int
    p: int
    missing_vertices: list[str] = field(default_factory=list)
    extra_vertices: list[str] = field(default_factory=list)
    missing_arcs: list[str] = field(default_factory=list)
    extra_arcs: list[str] = field(default_factory=list)
    walk_mismatches: list[str] = field(default_factory=list)
    samples: int = 0

    @property
    def graph_ok(self) -> bool:
        return not (self.missing_vertices or self.extra_vertices or self.missing_arcs or self.extra_arcs)

    @property
    def ok(self) -> bool:
        return self.graph_ok and not self.walk_mismatches

    def line(self) -> str:
        return (f"k={self.k} p={self.p} vertices={'ok' if not (self.missing_vertices or self.extra_vertices) else 'FAIL'} "
                f"arcs={'ok' if not (self.missing_arcs or self.extra_arcs) else 'FAIL'} "
                f"walks={'ok' if not self.walk_mismatches else 'FAIL'} ({self.samples} words)")

    def diff_lines(self, limit: int = 10) -> list[str]:
        out = []
        for name in ("missing_vertices", "extra_vertices", "missing_arcs", "extra_arcs", "walk_mismatches"):
            items = getattr(self, name)
            if items:
                out.append(f"  {name}: {len(items)}: " + ", ".join(items[:limit]))
        return out


def random_partial_word(rng: np.random.Generator, k: int, max_len: int, hole_prob: float = 0.5):
    n = int(rng.integers(1, max_len + 1))
    return tuple(HOLE if rng.random() < hole_prob else int(rng.integers(k)) for _ in range(n))


def compare_with_oracle(g: LabeledGraph, k: int, p: int, samples: int = 0,
                        rng: np.random.Generator | None = None, max_len: int = 8) -> OracleReport:
    """Compare ``g`` with the ``psi`` image of ``R_p`` and check walk counts.

    Each sample draws a random vertex subset ``X`` of ``g`` and a random
    partial word ``w``; the exact counts on ``R_p`` restricted to the preimage
    of ``X`` must equal the counts on ``g[X]`` at the image vertex.
    """
    rep = OracleReport(k, p, samples=samples)
    V, A = oracle_psi_image(k, p)
    gv, ga = set(g.words), g.word_arcs()
    rep.missing_vertices = sorted(render(w) for w in V - gv)
    rep.extra_vertices = sorted(render(w) for w in gv - V)
    fmt = lambda arc: f"({render(arc[0])},{render(arc[1])},{arc[2]})"
    rep.missing_arcs = sorted(fmt(a) for a in A - ga)
    rep.extra_arcs = sorted(fmt(a) for a in ga - A)
    if not samples or not rep.graph_ok:
        return rep
    rng = rng or np.random.default_rng(0)
    full = build_full_rauzy(k, p)
    image = np.array([g.index[psi(w, p)] for w in full.words], dtype=np.int64)
    for s in range(samples):
        # the first sample keeps every vertex, the rest a random subset
        X = np.ones(g.n_vertices, dtype=bool) if s == 0 else rng.random(g.n_vertices) < rng.uniform(0.3, 1.0)
        w = random_partial_word(rng, k, max_len)
        on_full = walk_counts(full, X[image], w)[-1]
        on_psi = walk_counts(g, X, w)[-1]
        for v in np.flatnonzero(X[image]):
            if on_full[v] != on_psi[image[v]]:
                rep.walk_mismatches.append(f"{render(full.words[v])} w={render(w)}: "
                                           f"{on_full[v]} != {on_psi[image[v]]}")
    return rep
