"""Exhaustive search for square-free words under forced letters, plus slow oracles.

The oracles here are deliberately naive: they enumerate walks and words
explicitly and share no code with :mod:`sqfree.prune` or the compressed graph
construction, so they can be used to cross-check both.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .rauzy import LabeledGraph, build_full_rauzy, psi
from .words import HOLE, PeriodicPartialWord, has_square_suffix, render


@dataclass(frozen=True)
class SearchBudget:
    max_length: int = 10_000
    max_nodes: int = 10**9

    def __post_init__(self):
        if self.max_length < 1 or self.max_nodes < 1:
            raise ValueError("budgets must be positive")


COUNT_CONVENTION = "include-empty"


@dataclass
class SearchOutcome:
    """Result of a search.  ``count`` includes the empty word (the tree root)."""

    status: str  # "exhausted" or "budget_exceeded"
    count: int
    max_depth: int
    witness: tuple[int, ...]

    @property
    def nonempty(self) -> int:
        return self.count - 1

    def summary(self) -> str:
        return (f"status={self.status} count={self.count} max_depth={self.max_depth} "
                f"convention={COUNT_CONVENTION}")


def _allowed(mu, i: int, k: int):
    try:
        m = mu.at(i) if isinstance(mu, PeriodicPartialWord) else mu[i]
    except IndexError:
        return ()
    return range(k) if m == HOLE else (m,)


def _search(mu, k: int, budget: SearchBudget, root: tuple[int, ...] = ()) -> SearchOutcome:
    count = 0
    depth = len(root)
    witness = root
    stack = [root]
    while stack:
        w = stack.pop()
        if count == budget.max_nodes:
            return SearchOutcome("budget_exceeded", count, depth, witness)
        count += 1
        if len(w) > depth:
            depth, witness = len(w), w
        if len(w) >= budget.max_length:
            if any(not has_square_suffix(w + (a,)) for a in _allowed(mu, len(w), k)):
                return SearchOutcome("budget_exceeded", count, depth, witness)
            continue
        for a in _allowed(mu, len(w), k):
            v = w + (a,)
            if not has_square_suffix(v):
                stack.append(v)
    return SearchOutcome("exhausted", count, depth, witness)


def _search_subtree(args):
    mu, k, budget, root = args
    return _search(mu, k, budget, root)


def count_compatible_squarefree(mu, k: int, budget: SearchBudget | None = None,
                                workers: int = 1) -> SearchOutcome:
    """Count the square-free words compatible with ``mu``, the empty word included.

    Depth-first over one-letter extensions, pruning on any square suffix and
    on the forced letters of ``mu`` (a partial word or
    :class:`PeriodicPartialWord`).  Position 0 of the word sits at position 0
    of ``mu``.  With ``workers > 1`` the first-letter subtrees run in
    separate processes; the node budget then applies per subtree.
    """
    budget = budget or SearchBudget()
    if workers <= 1:
        return _search(mu, k, budget)
    roots = [(a,) for a in _allowed(mu, 0, k)]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        parts = list(ex.map(_search_subtree, [(mu, k, budget, r) for r in roots]))
    # subtrees count their own roots; the empty word is added here
    status = "exhausted" if all(o.status == "exhausted" for o in parts) else "budget_exceeded"
    best = max(parts, key=lambda o: o.max_depth, default=SearchOutcome(status, 0, 0, ()))
    return SearchOutcome(status, 1 + sum(o.count for o in parts), best.max_depth, best.witness)


def oracle_walk_count(g: LabeledGraph, v: int, w: Sequence[int], X=None,
                      max_walks: int = 10**6) -> int:
    """Count walks from ``v`` compatible with ``w`` by listing them one by one.

    Only vertices in ``X`` (default: all) may be visited.
    """
    allowed = set(range(g.n_vertices)) if X is None else set(X)
    if v not in allowed:
        return 0
    arcs = {}
    for s, t, a in g.arcs():
        arcs.setdefault(s, []).append((t, a))
    walks = [(v,)]
    for symbol in w:
        nxt = []
        for walk in walks:
            for t, a in arcs.get(walk[-1], ()):
                if t in allowed and symbol in (HOLE, a):
                    nxt.append(walk + (t,))
        if len(nxt) > max_walks:
            raise RuntimeError(f"more than {max_walks} walks")
        walks = nxt
    return len(walks)


def oracle_psi_image(k: int, p: int) -> tuple[set[bytes], set[tuple[bytes, bytes, int]]]:
    """The image of the full Rauzy graph under ``psi``, computed the slow way."""
    g = build_full_rauzy(k, p)
    image = [psi(w, p) for w in g.words]
    return set(image), {(image[s], image[t], a) for s, t, a in g.arcs()}


def describe(outcome: SearchOutcome) -> str:
    return f"{outcome.summary()} witness={render(outcome.witness)}"
