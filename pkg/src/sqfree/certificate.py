"""Exact verification of the weighted inequality system behind the avoidability certificates.

Everything here is ``fractions.Fraction`` or ``int``; floats only appear in
report strings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .words import HOLE, expand_pattern, render


class CertificateError(ValueError):
    """Malformed or inconsistent certificate."""


def capped_power(base: int, exp: int, cap: int) -> int:
    """``min(cap, base**exp)`` without building large powers."""
    value = 1
    for _ in range(exp):
        if value >= cap:
            return cap
        value *= base
    return min(value, cap)


@dataclass
class Certificate:
    k: int
    p: int
    patterns: list[tuple[int, ...]]
    f: dict[int, int]
    x: dict[int, Fraction]
    sources: list[str] = field(default_factory=list)

    def __post_init__(self):
        self.patterns = [tuple(w) for w in self.patterns]
        self.f = {int(n): int(c) for n, c in self.f.items()}
        self.x = {int(n): Fraction(v) for n, v in self.x.items()}

    @property
    def lengths(self) -> list[int]:
        return sorted({len(w) for w in self.patterns})

    def validate(self):
        if self.k < 2:
            raise CertificateError(f"alphabet size {self.k} < 2")
        if not self.patterns:
            raise CertificateError("no patterns")
        for w in self.patterns:
            if not w:
                raise CertificateError("empty pattern")
            if any(a != HOLE and not 0 <= a < self.k for a in w):
                raise CertificateError(f"pattern {render(w)} uses a letter outside the alphabet")
        lengths = set(self.lengths)
        if self.p < 2 * max(lengths):
            raise CertificateError(f"p={self.p} is below twice the longest pattern ({max(lengths)})")
        if set(self.f) != lengths:
            raise CertificateError(f"f is defined on {sorted(self.f)}, pattern lengths are {sorted(lengths)}")
        if set(self.x) != lengths:
            raise CertificateError(f"x is defined on {sorted(self.x)}, pattern lengths are {sorted(lengths)}")
        for n in lengths:
            if self.f[n] < 1:
                raise CertificateError(f"f({n}) must be positive")
            if not 0 < self.x[n] < 1:
                raise CertificateError(f"x_{n} = {self.x[n]} is not in (0, 1)")
        return self

    def pattern_set(self):
        from .words import PatternSet
        return PatternSet(tuple(self.patterns), self.p, dict(self.f))


def _require_length(cert: Certificate, n: int):
    if n not in cert.f:
        raise CertificateError(f"length {n} does not occur in the pattern set")


def alpha(len_u: int, len_v: int, cert: Certificate) -> int:
    _require_length(cert, len_u)
    _require_length(cert, len_v)
    cap = cert.f[len_v]
    return sum(capped_power(cert.k - 1, len_v - 1 - j * m, cap)
               for m in range(1, len_u + 1)
               for j in range((len_v - 1) // m + 1))


def alpha_prime(i: int, len_v: int, cert: Certificate) -> int:
    _require_length(cert, len_v)
    if i < 1:
        raise CertificateError(f"alpha' needs i >= 1, got {i}")
    cap = cert.f[len_v]
    return sum(capped_power(cert.k - 1, m, cap) for m in range(i))


def beta_table(cert: Certificate) -> list[Fraction]:
    """Best weight product over decompositions of each ``j <= p`` into pattern lengths.

    ``beta[j] = max(x_n * beta[j - n])`` over pattern lengths ``n <= j``,
    ``beta[0] = 1`` and an empty max is 0.
    """
    beta = [Fraction(1)] + [Fraction(0)] * cert.p
    lengths = cert.lengths
    for j in range(1, cert.p + 1):
        beta[j] = max((cert.x[n] * beta[j - n] for n in lengths if n <= j), default=Fraction(0))
    return beta


@dataclass
class PatternVerdict:
    length: int
    passed: bool
    slack: Fraction
    argmax: tuple[int, int, int]
    max_term: Fraction


@dataclass
class MainReport:
    verdicts: list[PatternVerdict]

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    @property
    def worst(self) -> PatternVerdict:
        return min(self.verdicts, key=lambda v: v.slack)

    def lines(self) -> list[str]:
        out = []
        for v in self.verdicts:
            u, w, r = v.argmax
            out.append(f"|w|={v.length}: {'PASS' if v.passed else 'FAIL'} slack={v.slack} "
                       f"(~{float(v.slack):.6g}) argmax |u|={u} |v|={w} r={r}")
        out.append(f"verdict: {'PASS' if self.passed else 'FAIL'} worst slack={self.worst.slack} "
                   f"(~{float(self.worst.slack):.6g})")
        return out


def check_main(cert: Certificate) -> MainReport:
    """Evaluate the inequality for every pattern length.

    For each length ``|w|`` the slack is
    ``f(|w|) - max_{u,v,r} beta(r+p-|w|-|v|) (alpha'(r,|w|) + x_|v| alpha(|u|,|w|) / (1-x_|u|))
    - 1/x_|w|``, with ``1 <= r <= |v|``; the certificate passes when every
    slack is non-negative.  The bound only depends on lengths, so the maximum
    runs over distinct lengths.
    """
    cert.validate()
    beta = beta_table(cert)
    lengths = cert.lengths
    verdicts = []
    for lw in lengths:
        # beta >= 0 and x > 0, so the |u| factor is maximised on its own
        tails = {lu: alpha(lu, lw, cert) / (1 - cert.x[lu]) for lu in lengths}
        lu = max(lengths, key=lambda n: (tails[n], -n))
        ap = [None] + [alpha_prime(r, lw, cert) for r in range(1, max(lengths) + 1)]
        best, arg = None, None
        for lv in lengths:
            for r in range(1, lv + 1):
                j = r + cert.p - lw - lv
                assert 0 <= j <= cert.p, "beta index out of range"
                term = beta[j] * (ap[r] + cert.x[lv] * tails[lu])
                if best is None or term > best:
                    best, arg = term, (lu, lv, r)
        slack = cert.f[lw] - best - 1 / cert.x[lw]
        verdicts.append(PatternVerdict(lw, slack >= 0, slack, arg, best))
    return MainReport(verdicts)


@dataclass
class SingletonReport:
    passed: bool
    slack: Fraction
    lhs: Fraction


def check_singleton(C: int, len_w: int, p: int, x) -> SingletonReport:
    """Single-pattern condition ``C (1 - x^(p/|w| - 1) |w|^2 / (1-x)) >= 1/x``."""
    x = Fraction(x)
    if C < 1:
        raise CertificateError("C must be a positive integer")
    if len_w < 1 or p < 2 * len_w or p % len_w:
        raise CertificateError(f"need p >= 2|w| and |w| dividing p (|w|={len_w}, p={p})")
    if not 0 < x < 1:
        raise CertificateError(f"x = {x} is not in (0, 1)")
    lhs = C * (1 - x ** (p // len_w - 1) * len_w ** 2 / (1 - x))
    slack = lhs - 1 / x
    return SingletonReport(slack >= 0, slack, lhs)


# -- text format ------------------------------------------------------------------

def parse_certificate(text: str) -> Certificate:
    """Parse the ``CERT v1`` text format.  Pattern lines may use set-builder macros."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [(i + 1, ln) for i, ln in enumerate(lines) if ln and not ln.startswith("#")]
    if not lines or lines[0][1] != "CERT v1":
        raise CertificateError("line 1: expected 'CERT v1'")
    k = p = None
    patterns: list[tuple[int, ...]] = []
    sources = []
    f: dict[int, int] = {}
    x: dict[int, Fraction] = {}
    for ln, line in lines[1:]:
        try:
            if line.startswith("k="):
                k = int(line[2:])
            elif line.startswith("p="):
                p = int(line[2:])
            elif line.startswith("pattern "):
                if k is None:
                    raise CertificateError("k must precede patterns")
                spec = line[len("pattern "):].strip()
                sources.append(spec)
                patterns.extend(expand_pattern(spec, k))
            elif line.startswith("f "):
                _, n, c = line.split()
                if int(n) in f:
                    raise CertificateError(f"f({n}) given twice")
                f[int(n)] = int(c)
            elif line.startswith("x "):
                _, n, v = line.split()
                if int(n) in x:
                    raise CertificateError(f"x_{n} given twice")
                x[int(n)] = Fraction(v)
            else:
                raise CertificateError(f"unrecognised line {line!r}")
        except CertificateError as e:
            raise CertificateError(f"line {ln}: {e}") from None
        except (ValueError, ZeroDivisionError) as e:
            raise CertificateError(f"line {ln}: {e}") from None
    if k is None or p is None:
        raise CertificateError("missing k= or p=")
    return Certificate(k, p, patterns, f, x, sources)


def format_certificate(cert: Certificate) -> str:
    out = ["CERT v1", f"k={cert.k}", f"p={cert.p}"]
    specs = cert.sources or [render(w) for w in cert.patterns]
    out += [f"pattern {s}" for s in specs]
    out += [f"f {n} {cert.f[n]}" for n in sorted(cert.f)]
    out += [f"x {n} {cert.x[n].numerator}/{cert.x[n].denominator}" for n in sorted(cert.x)]
    return "\n".join(out) + "\n"
