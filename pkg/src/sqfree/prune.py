"""Walk counting against partial words and the greatest-fixed-point pruning.

``walk_counts`` evaluates, for every vertex ``v`` of an induced subgraph and
every ``i <= |w|``, the number of walks of length ``i`` from ``v`` whose
labels are compatible with the last ``i`` symbols of ``w``.  With a cap the
counts saturate; since ``sum(min(a_j, C)) >= min(sum(a_j), C)`` a saturated
count reaches the cap exactly when the true count does.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .rauzy import GraphMeta, LabeledGraph
from .words import HOLE, PatternSet


def as_mask(g: LabeledGraph, X) -> np.ndarray:
    """Coerce a vertex set (bool mask or iterable of indices) to a bool mask."""
    if isinstance(X, np.ndarray) and X.dtype == bool:
        if X.shape != (g.n_vertices,):
            raise ValueError("mask has the wrong length")
        return X.copy()
    mask = np.zeros(g.n_vertices, dtype=bool)
    idx = np.fromiter(X, dtype=np.int64)
    if idx.size and (idx.min() < 0 or idx.max() >= g.n_vertices):
        raise ValueError("vertex set is not contained in the graph")
    mask[idx] = True
    return mask


def _restricted_succ(g: LabeledGraph, mask: np.ndarray) -> np.ndarray:
    """Successor table of the induced subgraph; arcs leaving ``mask`` become -1."""
    succ = g.succ.copy()
    inside = np.zeros(g.n_vertices + 1, dtype=bool)
    inside[:-1] = mask
    succ[~inside[succ]] = -1
    succ[:, ~mask] = -1
    return succ


def _step(succ: np.ndarray, prev: np.ndarray, symbol: int, cap) -> np.ndarray:
    # prev gets a trailing zero so that index -1 contributes nothing
    padded = np.append(prev, np.zeros(1, dtype=prev.dtype))
    if symbol == HOLE:
        cur = padded[succ].sum(axis=0)
    else:
        cur = padded[succ[symbol]]
    if cap is not None:
        np.minimum(cur, cap, out=cur)
    return cur


def walk_counts(g: LabeledGraph, X, w: Sequence[int], cap: int | None = None) -> np.ndarray:
    """Full table ``T[i, v]`` of walk counts for ``i = 0..|w|``.

    Vertices outside ``X`` get 0.  ``cap=None`` counts exactly with Python
    integers.
    """
    mask = as_mask(g, X)
    succ = _restricted_succ(g, mask)
    dtype = object if cap is None else np.int64
    layer = mask.astype(np.int64).astype(dtype)
    table = [layer]
    for i in range(1, len(w) + 1):
        layer = _step(succ, layer, w[len(w) - i], cap)
        layer[~mask] = 0
        table.append(layer)
    return np.array(table, dtype=dtype)


def final_counts(g: LabeledGraph, mask: np.ndarray, w: Sequence[int], cap: int | None,
                 succ: np.ndarray | None = None) -> np.ndarray:
    """Counts for ``i = |w|`` only, keeping two layers."""
    if succ is None:
        succ = _restricted_succ(g, mask)
    dtype = object if cap is None else np.int64
    layer = mask.astype(np.int64).astype(dtype)
    for i in range(1, len(w) + 1):
        layer = _step(succ, layer, w[len(w) - i], cap)
    layer[~mask] = 0
    return layer


@dataclass
class PrunedSubgraph:
    mask: np.ndarray
    patterns: PatternSet
    sweeps: int = 0

    @property
    def vertices(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.mask)]

    def __len__(self):
        return int(self.mask.sum())


def prune_fixed_point(g: LabeledGraph, ps: PatternSet, X=None,
                      order: Iterable[int] | None = None) -> PrunedSubgraph:
    """Largest ``X`` where every vertex has ``>= f(|w|)`` compatible walks for every ``w``.

    Sweeps over the patterns, recomputing counts against the current ``X`` and
    dropping failing vertices, until a full sweep removes nothing.
    ``order`` permutes the pattern visiting order.
    """
    mask = np.ones(g.n_vertices, dtype=bool) if X is None else as_mask(g, X)
    patterns = list(ps.patterns)
    if order is not None:
        patterns = [patterns[i] for i in order]
    sweeps = 0
    removed = 1
    while removed:
        removed = 0
        sweeps += 1
        for w in patterns:
            if not mask.any():
                break
            cap = ps.threshold(w)
            counts = final_counts(g, mask, w, cap)
            keep = mask & (counts >= cap)
            dropped = int(mask.sum() - keep.sum())
            if dropped:
                mask = keep
                removed += dropped
    return PrunedSubgraph(mask, ps, sweeps)


def certify_subset(g: LabeledGraph, X, ps: PatternSet) -> bool:
    """Re-check from scratch that every vertex of ``X`` meets every threshold."""
    mask = as_mask(g, X)
    if not mask.any():
        raise ValueError("vertex set is empty")
    succ = _restricted_succ(g, mask)
    for w in ps.patterns:
        cap = ps.threshold(w)
        if (final_counts(g, mask, w, cap, succ)[mask] < cap).any():
            return False
    return True


# -- text format ------------------------------------------------------------------

def serialize_pruned(X: PrunedSubgraph, g: LabeledGraph, meta: GraphMeta) -> bytes:
    lines = [f"PRUNE v1 |X|={len(X)}", f"# graph: {meta.header(g.n_vertices, g.n_arcs)}"]
    lines += [str(i) for i in X.vertices]
    return ("\n".join(lines) + "\n").encode("utf-8")


def deserialize_pruned(data: bytes | str) -> tuple[list[int], str]:
    """Return the retained vertex indices and the echoed graph header."""
    text = data.decode("utf-8") if isinstance(data, (bytes, bytearray)) else data
    lines = text.rstrip("\n").split("\n")
    m = re.fullmatch(r"PRUNE v1 \|X\|=(\d+)", lines[0])
    if m is None:
        raise ValueError(f"line 1: bad header {lines[0]!r}")
    if len(lines) < 2 or not lines[1].startswith("# graph: "):
        raise ValueError("line 2: missing graph header comment")
    idx = []
    for ln, line in enumerate(lines[2:], start=3):
        if not line.isdigit():
            raise ValueError(f"line {ln}: bad vertex index {line!r}")
        idx.append(int(line))
    if len(idx) != int(m.group(1)) or idx != sorted(set(idx)):
        raise ValueError("vertex list does not match the declared size or is not ascending")
    return idx, lines[1][len("# graph: "):]
