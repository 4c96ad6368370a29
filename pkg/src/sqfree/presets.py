"""Parameter sets shipped with the package.

``paper`` certificates are the published ones (six letters with gaps of 2,
four letters with gaps of 3, three letters with gaps of 19).  Their graph
runs need tens of GB, so each also has a ``desk`` variant that runs in
seconds.
"""

from __future__ import annotations

from .certificate import Certificate, parse_certificate
from .words import PeriodicPartialWord

_TERNARY_F = dict(zip([9] + list(range(19, 28)), [4, 19, 22, 28, 36, 50, 63, 88, 118, 148]))
_TERNARY_X = dict(zip([9] + list(range(19, 28)),
                      ["27/100", "7/100", "13/200", "11/200", "9/200",
                       "1/25", "3/100", "1/40", "1/40", "1/50"]))

CERTIFICATES = {
    ("six", "paper"): """CERT v1
k=6
p=12
pattern .
pattern {.a.}
pattern {.a.b}
f 1 3
f 3 6
f 4 6
x 1 2/5
x 3 1/4
x 4 1/4
""",
    ("quaternary", "paper"): """CERT v1
k=4
p=18
pattern .
pattern {..a.}
pattern {..a..b}
f 1 2
f 4 5
f 6 8
x 1 11/20
x 4 1/4
x 6 1/5
""",
    ("ternary", "paper"): "CERT v1\nk=3\np=61\npattern {.^9}\npattern {.^i a : i=18..26}\n"
    + "".join(f"f {n} {c}\n" for n, c in _TERNARY_F.items())
    + "".join(f"x {n} {v}\n" for n, v in _TERNARY_X.items()),
    # desk variants keep the alphabets but shrink W and p
    ("six", "desk"): "CERT v1\nk=6\np=6\npattern .\nf 1 4\nx 1 13/50\n",
    ("quaternary", "desk"): "CERT v1\nk=4\np=5\npattern .\nf 1 2\nx 1 57/100\n",
    # prunes to a non-empty subgraph but the inequality needs p >= 40: NOT PROVEN
    ("ternary", "desk"): "CERT v1\nk=3\np=20\npattern {.^8}\nf 8 4\nx 8 7/25\n",
}

LOWER_BOUNDS = {
    "quaternary": (4, "(0.1.2.3.)"),
    "ternary": (3, "(0{.^5}1{.^5}2{.^5})"),
}


def certificate(name: str, scale: str = "paper") -> Certificate:
    try:
        return parse_certificate(CERTIFICATES[name, scale])
    except KeyError:
        raise KeyError(f"no preset {name!r} at scale {scale!r}") from None


def lower_bound(name: str) -> tuple[int, PeriodicPartialWord]:
    k, text = LOWER_BOUNDS[name]
    return k, PeriodicPartialWord.parse(text)
