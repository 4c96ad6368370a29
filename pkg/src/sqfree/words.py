"""Letters, words, partial words and square detection.

Letters are the integers ``0..k-1``.  A word is any sequence of letters
(tuples and ``bytes`` both work); a partial word may additionally contain
:data:`HOLE`.  In text, letters are written ``0-9a-z`` and the hole ``.``.

Period bounds follow one convention everywhere: ``max_period=p`` forbids
squares ``uu`` with ``1 <= |u| < p``; ``max_period=None`` forbids all squares.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, Mapping, Sequence

HOLE = -1
DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"
HOLE_CHAR = "."


@dataclass(frozen=True)
class Alphabet:
    size: int

    def __post_init__(self):
        if not 2 <= self.size <= len(DIGITS):
            raise ValueError(f"alphabet size must be in 2..{len(DIGITS)}, got {self.size}")

    @property
    def letters(self) -> range:
        return range(self.size)

    def __contains__(self, letter) -> bool:
        return isinstance(letter, int) and 0 <= letter < self.size

    def __len__(self) -> int:
        return self.size


def parse_word(text: str) -> tuple[int, ...]:
    """Parse ``"0120"`` into ``(0, 1, 2, 0)``."""
    try:
        return tuple(DIGITS.index(c) for c in text)
    except ValueError:
        raise ValueError(f"invalid letter in word {text!r}") from None


def parse_partial(text: str) -> tuple[int, ...]:
    """Parse ``"0.2"`` into ``(0, HOLE, 2)``."""
    out = []
    for c in text:
        if c == HOLE_CHAR:
            out.append(HOLE)
        elif c in DIGITS:
            out.append(DIGITS.index(c))
        else:
            raise ValueError(f"invalid symbol {c!r} in partial word {text!r}")
    return tuple(out)


def render(word: Iterable[int]) -> str:
    return "".join(HOLE_CHAR if a == HOLE else DIGITS[a] for a in word)


def _check_letter(letter, k):
    if not isinstance(letter, int) or letter < 0 or (k is not None and letter >= k):
        raise ValueError(f"letter {letter!r} outside alphabet of size {k}")


def has_square_suffix(word: Sequence[int], max_period: int | None = None) -> bool:
    """True iff some suffix of ``word`` is a square of period below ``max_period``."""
    n = len(word)
    top = n // 2
    if max_period is not None:
        top = min(top, max_period - 1)
    for i in range(1, top + 1):
        if word[n - i:] == word[n - 2 * i:n - i]:
            return True
    return False


def has_square_prefix(word: Sequence[int], max_period: int | None = None) -> bool:
    n = len(word)
    top = n // 2
    if max_period is not None:
        top = min(top, max_period - 1)
    for i in range(1, top + 1):
        if word[:i] == word[i:2 * i]:
            return True
    return False


def extends_square_free(prefix: Sequence[int], letter: int,
                        max_period: int | None = None, k: int | None = None) -> bool:
    """Whether ``prefix + letter`` has no square suffix of period below ``max_period``.

    ``prefix`` is assumed square-free under the same bound, so only the
    suffixes ending at the new letter are examined.
    """
    _check_letter(letter, k)
    return not has_square_suffix(tuple(prefix) + (letter,), max_period)


longest_square_free_extension_check = extends_square_free


def is_square_free(word: Sequence[int], max_period: int | None = None) -> bool:
    word = tuple(word)
    return not any(has_square_suffix(word[:j], max_period) for j in range(2, len(word) + 1))


def square_free_words(k: int, length: int, max_period: int | None = None) -> Iterator[tuple[int, ...]]:
    """All square-free words of the given length in lexicographic order (backtracking)."""
    if length == 0:
        yield ()
        return
    stack = [()]
    while stack:
        w = stack.pop()
        if len(w) == length:
            yield w
            continue
        for a in reversed(range(k)):
            v = w + (a,)
            if not has_square_suffix(v, max_period):
                stack.append(v)


class PeriodicPartialWord:
    """A partial word given by a finite prefix followed by a repeated cycle.

    Both parts are lists of blocks (partial words).  With an empty cycle the
    word is finite.  Positions are 0-based in :meth:`at`.

    >>> mu = PeriodicPartialWord(cycle=[parse_partial("0.1.")])
    >>> render(mu.at(i) for i in range(6))
    '0.1.0.'
    """

    def __init__(self, prefix: Iterable[Sequence[int]] = (), cycle: Iterable[Sequence[int]] = ()):
        self.prefix_blocks = tuple(tuple(b) for b in prefix)
        self.cycle_blocks = tuple(tuple(b) for b in cycle)
        if any(len(b) == 0 for b in self.prefix_blocks + self.cycle_blocks):
            raise ValueError("blocks must be non-empty")
        self._head = sum(self.prefix_blocks, ())
        self._cycle = sum(self.cycle_blocks, ())

    @classmethod
    def parse(cls, text: str) -> "PeriodicPartialWord":
        """Parse ``"00(.)"`` (prefix then parenthesised cycle); ``{.^n}`` repeats holes."""
        text = re.sub(r"\{\.\^(\d+)\}", lambda m: HOLE_CHAR * int(m.group(1)), text.replace(" ", ""))
        m = re.fullmatch(r"([^()]*)(?:\(([^()]+)\))?", text)
        if m is None:
            raise ValueError(f"cannot parse periodic partial word {text!r}")
        head, cyc = m.group(1), m.group(2)
        return cls([parse_partial(head)] if head else [], [parse_partial(cyc)] if cyc else [])

    @property
    def length(self) -> float:
        return math.inf if self._cycle else len(self._head)

    def __len__(self):
        if self._cycle:
            raise TypeError("infinite partial word has no finite length")
        return len(self._head)

    def at(self, i: int) -> int:
        if i < len(self._head):
            return self._head[i]
        if not self._cycle:
            raise IndexError(i)
        return self._cycle[(i - len(self._head)) % len(self._cycle)]

    def blocks(self) -> Iterator[tuple[int, ...]]:
        """Yield the blocks one at a time (forever when periodic)."""
        yield from self.prefix_blocks
        while self.cycle_blocks:
            yield from self.cycle_blocks

    def __repr__(self):
        head = render(self._head)
        return f"PeriodicPartialWord({head}({render(self._cycle)}))" if self._cycle else \
            f"PeriodicPartialWord({head})"


def compatible(v: Sequence[int], mu) -> bool:
    """Whether ``v`` is compatible with the partial word ``mu``.

    ``mu`` may be a finite partial word or a :class:`PeriodicPartialWord`.
    """
    if isinstance(mu, PeriodicPartialWord):
        if len(v) > mu.length:
            return False
        return all(mu.at(i) in (HOLE, a) for i, a in enumerate(v))
    if len(v) > len(mu):
        return False
    return all(m == HOLE or m == a for a, m in zip(v, mu))


@dataclass(frozen=True)
class PatternSet:
    """The pattern set ``W`` together with the period bound and the thresholds.

    ``thresholds`` maps each pattern length to its required number of
    compatible continuations.
    """

    patterns: tuple[tuple[int, ...], ...]
    period_bound: int
    thresholds: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "patterns", tuple(tuple(w) for w in self.patterns))
        object.__setattr__(self, "thresholds", dict(self.thresholds))
        if not self.patterns:
            raise ValueError("pattern set is empty")
        if any(len(w) == 0 for w in self.patterns):
            raise ValueError("patterns must be non-empty")
        if self.period_bound < 2 * max(self.lengths):
            raise ValueError(f"period bound {self.period_bound} < 2 * max pattern length")
        if set(self.thresholds) != set(self.lengths):
            raise ValueError("thresholds must be defined exactly on the pattern lengths")
        if any(int(c) < 1 for c in self.thresholds.values()):
            raise ValueError("thresholds must be positive")

    @property
    def lengths(self) -> list[int]:
        return sorted({len(w) for w in self.patterns})

    def threshold(self, pattern: Sequence[int]) -> int:
        return self.thresholds[len(pattern)]


# -- pattern shorthand -------------------------------------------------------

_MACRO = re.compile(r"\{(?P<body>[^{}:]*)(?::(?P<binds>[^{}]*))?\}")


def _template_tokens(body: str):
    tokens = []
    pos = 0
    while pos < len(body):
        if body[pos].isspace():
            pos += 1
            continue
        m = re.match(r"\.\^(\d+|[a-zA-Z_]\w*)", body[pos:])
        if m:
            tokens.append(("holes", m.group(1)))
            pos += m.end()
            continue
        c = body[pos]
        if c == HOLE_CHAR:
            tokens.append(("hole", None))
        elif c.isdigit():
            tokens.append(("letter", int(c)))
        elif c.isalpha():
            tokens.append(("var", c))
        else:
            raise ValueError(f"bad token {c!r} in pattern template {body!r}")
        pos += 1
    return tokens


def expand_pattern(spec: str, k: int) -> list[tuple[int, ...]]:
    """Expand one pattern line into the partial words it denotes.

    A plain string (``"0.2"``) is a single literal pattern.  A braced
    set-builder expands over its bindings: ``{.^9}`` is nine holes,
    ``{.a.}`` ranges ``a`` over the alphabet and
    ``{.^i a : i=18..26}`` binds ``i`` to an integer range as well.
    Inside braces, letters are digits and ``a-z`` are variables.

    >>> [render(w) for w in expand_pattern("{.^i a : i=1..2}", 2)]
    ['.0', '.1', '..0', '..1']
    """
    spec = spec.strip()
    m = _MACRO.fullmatch(spec)
    if m is None:
        if "{" in spec or "}" in spec:
            raise ValueError(f"malformed pattern macro {spec!r}")
        return [parse_partial(spec)]
    tokens = _template_tokens(m.group("body"))
    ranges: dict[str, range] = {}
    for bind in filter(None, (b.strip() for b in (m.group("binds") or "").split(","))):
        bm = re.fullmatch(r"([a-zA-Z_]\w*)\s*=\s*(\d+)\s*\.\.\s*(\d+)", bind)
        if bm is None:
            raise ValueError(f"bad binding {bind!r}")
        ranges[bm.group(1)] = range(int(bm.group(2)), int(bm.group(3)) + 1)
    free = []
    for kind, val in tokens:
        if kind == "var" and val not in ranges and val not in free:
            free.append(val)
        if kind == "holes" and not val.isdigit() and val not in ranges:
            raise ValueError(f"unbound repeat count {val!r}")
    names = list(ranges) + free
    domains = [ranges[n] for n in ranges] + [range(k)] * len(free)
    out = []
    for values in product(*domains):
        env = dict(zip(names, values))
        w: list[int] = []
        for kind, val in tokens:
            if kind == "hole":
                w.append(HOLE)
            elif kind == "letter":
                w.append(val)
            elif kind == "var":
                w.append(env[val])
            else:
                w.extend([HOLE] * (int(val) if val.isdigit() else env[val]))
        out.append(tuple(w))
    return out
