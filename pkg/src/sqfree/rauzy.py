"""Rauzy graphs of square-free words and their compressed quotient.

``R_p`` has the square-free words of length ``2p-3`` as vertices and an arc
``(au, ub, b)`` for every square-free ``aub``.  The compression ``psi`` keeps
the shortest suffix that still decides every future square of period below
``p``; the quotient graph on those suffixes has the same labelled walks.

Vertex words are stored as ``bytes`` (one letter per byte) and looked up
through a dict; arcs live in a dense ``(k, |V|)`` successor table holding the
target index or ``-1``.  One successor per (vertex, label) is therefore a
structural property, not something to check.
"""

from __future__ import annotations

import io
import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .words import DIGITS, has_square_prefix, has_square_suffix, render, parse_word

MODES = ("full", "exhaustive", "reachable")
DEFAULT_MAX_VERTICES = 50_000_000


class BudgetExceeded(RuntimeError):
    """Raised when construction would exceed its vertex budget."""

    def __init__(self, message, stats=None):
        super().__init__(message)
        self.stats = dict(stats or {})


class NotPsiReducible(ValueError):
    pass


class ArcMissing(ValueError):
    pass


class GraphFormatError(ValueError):
    def __init__(self, message, line=None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


@dataclass(frozen=True)
class GraphMeta:
    k: int
    p: int
    mode: str

    @property
    def compressed(self) -> bool:
        return self.mode != "full"

    def header(self, n_vertices: int, n_arcs: int) -> str:
        return f"RAUZY v1 k={self.k} p={self.p} mode={self.mode} |V|={n_vertices} |A|={n_arcs}"


def canonical_key(word: bytes):
    """Canonical vertex order: by length, then lexicographically."""
    return (len(word), word)


class LabeledGraph:
    """Deterministic letter-labelled digraph over word-named vertices."""

    def __init__(self, k: int, words: Sequence[bytes], succ: np.ndarray):
        self.k = k
        self.words = list(words)
        self.succ = np.asarray(succ, dtype=np.int64).reshape(k, len(self.words))
        self.index = {w: i for i, w in enumerate(self.words)}
        if len(self.index) != len(self.words):
            raise ValueError("duplicate vertex words")

    @classmethod
    def from_arcs(cls, k: int, words: Iterable[bytes], arcs: Iterable[tuple[int, int, int]]):
        words = list(words)
        succ = np.full((k, len(words)), -1, dtype=np.int64)
        for s, t, a in arcs:
            if not 0 <= a < k:
                raise ValueError(f"arc label {a} outside alphabet")
            if succ[a, s] not in (-1, t):
                raise ValueError(f"vertex {s} has two arcs labelled {a}")
            succ[a, s] = t
        return cls(k, words, succ)

    @property
    def n_vertices(self) -> int:
        return len(self.words)

    @property
    def n_arcs(self) -> int:
        return int((self.succ >= 0).sum())

    def arcs(self) -> Iterator[tuple[int, int, int]]:
        """Arcs ``(src, dst, label)`` sorted by source then label."""
        for s in range(self.n_vertices):
            for a in range(self.k):
                t = self.succ[a, s]
                if t >= 0:
                    yield s, int(t), a

    def word_arcs(self) -> set[tuple[bytes, bytes, int]]:
        return {(self.words[s], self.words[t], a) for s, t, a in self.arcs()}

    def out_degree(self) -> np.ndarray:
        return (self.succ >= 0).sum(axis=0)

    def canonical(self) -> "LabeledGraph":
        order = sorted(range(self.n_vertices), key=lambda i: canonical_key(self.words[i]))
        remap = np.empty(self.n_vertices + 1, dtype=np.int64)
        remap[np.array(order, dtype=np.int64)] = np.arange(self.n_vertices)
        remap[-1] = -1
        return LabeledGraph(self.k, [self.words[i] for i in order], remap[self.succ[:, order]])

    def __eq__(self, other):
        return (isinstance(other, LabeledGraph) and self.k == other.k
                and set(self.words) == set(other.words) and self.word_arcs() == other.word_arcs())

    def __repr__(self):
        return f"LabeledGraph(k={self.k}, |V|={self.n_vertices}, |A|={self.n_arcs})"


def _bytes(word: Sequence[int]) -> bytes:
    return bytes(word)


# -- full Rauzy graph ---------------------------------------------------------

def build_full_rauzy(k: int, p: int, max_vertices: int = 2_000_000) -> LabeledGraph:
    """Rauzy graph of the square-free words of length ``2p-3`` (oracle scale)."""
    if p < 2:
        raise ValueError("p must be at least 2")
    n = 2 * p - 3
    words = []
    stack = [b""]
    while stack:
        w = stack.pop()
        if len(w) == n:
            words.append(w)
            if len(words) > max_vertices:
                raise BudgetExceeded(f"more than {max_vertices} vertices", {"vertices": len(words)})
            continue
        for a in range(k):
            v = w + bytes((a,))
            if not has_square_suffix(v):
                stack.append(v)
    words.sort(key=canonical_key)
    index = {w: i for i, w in enumerate(words)}
    succ = np.full((k, len(words)), -1, dtype=np.int64)
    for i, w in enumerate(words):
        for b in range(k):
            ext = w + bytes((b,))
            if not has_square_suffix(ext):
                succ[b, i] = index[ext[1:]]
    return LabeledGraph(k, words, succ)


# -- the compression map --------------------------------------------------------

def psi_qualifies(s: Sequence[int], p: int) -> bool:
    """Whether ``s`` satisfies the defining mismatch condition of ``psi``.

    For every period ``i`` with ``ceil(|s|/2) + 1 <= i <= p-1`` there must be
    a mismatch ``s[-1-j] != s[-1-j-i]`` for some ``0 <= j <= |s|-i-1``.
    """
    n = len(s)
    for i in range(-(-n // 2) + 1, p):
        if not any(s[n - 1 - j] != s[n - 1 - j - i] for j in range(n - i)):
            return False
    return True


def psi(w: Sequence[int], p: int):
    """Shortest suffix of ``w`` satisfying :func:`psi_qualifies`."""
    for length in range(1, len(w) + 1):
        s = w[len(w) - length:]
        if psi_qualifies(s, p):
            return s
    raise NotPsiReducible(f"no suffix of {render(w)} qualifies for p={p}")


def psi_step(state: Sequence[int], letter: int, p: int):
    """Compressed successor of ``state`` under ``letter``.

    Only squares inside ``state + letter`` are checked; squares reaching
    further left are excluded by the mismatch condition ``state`` satisfies.
    """
    t = bytes(state) + bytes((letter,)) if isinstance(state, (bytes, bytearray)) \
        else tuple(state) + (letter,)
    if has_square_suffix(t, p):
        raise ArcMissing(f"{render(t)} ends with a square of period < {p}")
    try:
        return psi(t, p)
    except NotPsiReducible:
        raise NotPsiReducible(f"{render(state)} is not a valid psi-state for p={p}") from None


# -- compressed graph -------------------------------------------------------------

def _left_extendable(w: bytes, k: int, target: int) -> bool:
    """Whether some square-free word of length ``target`` ends with ``w``."""
    stack = [w]
    while stack:
        v = stack.pop()
        if len(v) >= target:
            return True
        for a in range(k):
            u = bytes((a,)) + v
            if not has_square_prefix(u):
                stack.append(u)
    return False


def psi_vertices(k: int, p: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> list[bytes]:
    """All words equal to their own ``psi`` image that occur as ``psi`` of a vertex of ``R_p``.

    Words are grown right to left, so every suffix of a candidate is visited
    before the candidate; a branch stops at its first qualifying word.  Each
    such word is kept when it extends to the left into a square-free word of
    length ``2p-3``.
    """
    n = max(2 * p - 3, 1)
    found = []
    stack = [bytes((a,)) for a in reversed(range(k))]
    visited = 0
    while stack:
        w = stack.pop()
        visited += 1
        if psi_qualifies(w, p):
            if _left_extendable(w, k, n):
                found.append(w)
                if len(found) > max_vertices:
                    raise BudgetExceeded(f"more than {max_vertices} vertices",
                                         {"vertices": len(found), "visited": visited})
            continue
        if len(w) >= n:
            continue
        for a in reversed(range(k)):
            u = bytes((a,)) + w
            if not has_square_prefix(u):
                stack.append(u)
    return found


def _greedy_square_free(k: int, first: int, length: int) -> bytes | None:
    """Lexicographically first square-free word of ``length`` starting with ``first``."""
    stack = [bytes((first,))]
    while stack:
        w = stack.pop()
        if len(w) == length:
            return w
        for a in reversed(range(k)):
            v = w + bytes((a,))
            if not has_square_suffix(v):
                stack.append(v)
    return None


def build_psi_graph(k: int, p: int, mode: str = "exhaustive", seeds: int | None = None,
                    max_vertices: int = DEFAULT_MAX_VERTICES) -> tuple[LabeledGraph, GraphMeta]:
    """Build the compressed graph ``psi(R_p)``.

    ``exhaustive`` enumerates every vertex directly (see :func:`psi_vertices`).
    ``reachable`` closes the images of ``seeds`` greedy square-free words
    (one per starting letter, default ``k``) under :func:`psi_step`; its
    vertex set is contained in the exhaustive one and may be smaller.
    """
    if p < 2:
        raise ValueError("p must be at least 2")
    n = 2 * p - 3
    if mode == "exhaustive":
        verts = psi_vertices(k, p, max_vertices)
    elif mode == "reachable":
        verts = []
        for first in range((k if seeds is None else seeds)):
            w = _greedy_square_free(k, first % k, n)
            if w is not None:
                verts.append(psi(w, p))
        verts = list(dict.fromkeys(verts))
    else:
        raise ValueError(f"unknown mode {mode!r}")

    index = {w: i for i, w in enumerate(verts)}
    arcs = []
    queue = deque(verts)
    while queue:
        v = queue.popleft()
        s = index[v]
        for a in range(k):
            try:
                t = psi_step(v, a, p)
            except ArcMissing:
                continue
            if t not in index:
                if mode == "exhaustive":
                    raise AssertionError(f"psi_step left the vertex set at {render(v)}")
                if len(index) >= max_vertices:
                    raise BudgetExceeded(f"more than {max_vertices} vertices",
                                         {"vertices": len(index), "arcs": len(arcs)})
                index[t] = len(verts)
                verts.append(t)
                queue.append(t)
            arcs.append((s, index[t], a))
    g = LabeledGraph.from_arcs(k, verts, arcs).canonical()
    return g, GraphMeta(k, p, mode)


# -- text format ------------------------------------------------------------------

_HEADER = re.compile(
    r"RAUZY v1 k=(\d+) p=(\d+) mode=(full|exhaustive|reachable) \|V\|=(\d+) \|A\|=(\d+)")


def serialize_graph(g: LabeledGraph, meta: GraphMeta) -> bytes:
    arcs = list(g.arcs())
    out = io.StringIO()
    out.write(meta.header(g.n_vertices, len(arcs)) + "\n")
    for w in g.words:
        out.write(render(w) + "\n")
    for s, t, a in arcs:
        out.write(f"{s} {t} {a}\n")
    return out.getvalue().encode("utf-8")


def deserialize_graph(data: bytes | str) -> tuple[LabeledGraph, GraphMeta]:
    text = data.decode("utf-8") if isinstance(data, (bytes, bytearray)) else data
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise GraphFormatError("empty input", 1)
    m = _HEADER.fullmatch(lines[0])
    if m is None:
        raise GraphFormatError(f"bad header {lines[0]!r}", 1)
    k, p, mode, nv, na = int(m.group(1)), int(m.group(2)), m.group(3), int(m.group(4)), int(m.group(5))
    if not 2 <= k <= len(DIGITS):
        raise GraphFormatError(f"bad alphabet size {k}", 1)
    if len(lines) != 1 + nv + na:
        raise GraphFormatError(f"header declares {nv} vertices and {na} arcs "
                               f"but the body has {len(lines) - 1} lines", len(lines))
    words = []
    for ln in range(1, nv + 1):
        try:
            w = parse_word(lines[ln])
        except ValueError as e:
            raise GraphFormatError(str(e), ln + 1) from None
        if not w or max(w) >= k:
            raise GraphFormatError(f"bad vertex word {lines[ln]!r}", ln + 1)
        words.append(bytes(w))
    if len(set(words)) != nv:
        raise GraphFormatError("duplicate vertex words")
    succ = np.full((k, nv), -1, dtype=np.int64)
    for ln in range(1 + nv, 1 + nv + na):
        parts = lines[ln].split(" ")
        try:
            s, t, a = (int(x) for x in parts)
        except ValueError:
            raise GraphFormatError(f"bad arc line {lines[ln]!r}", ln + 1) from None
        if not (0 <= s < nv and 0 <= t < nv and 0 <= a < k):
            raise GraphFormatError(f"arc out of range {lines[ln]!r}", ln + 1)
        if succ[a, s] != -1:
            raise GraphFormatError(f"duplicate arc label {a} at vertex {s}", ln + 1)
        succ[a, s] = t
    return LabeledGraph(k, words, succ), GraphMeta(k, p, mode)
