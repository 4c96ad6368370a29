# Finite lower bounds by exhaustive search.
#
# For a periodic partial word with few holes the square-free words compatible
# with it form a finite tree.  Counting its nodes (the empty word included)
# shows the search dies out and gives the longest compatible word.

from sqfree import presets
from sqfree.search import count_compatible_squarefree
from sqfree.words import PeriodicPartialWord, render

for name in ("quaternary", "ternary"):
    k, mu = presets.lower_bound(name)
    out = count_compatible_squarefree(mu, k)
    print(f"{name}: mu={mu!r}")
    print("   ", out.summary())
    print("    longest word:", render(out.witness))

out = count_compatible_squarefree(PeriodicPartialWord.parse("00(.)"), 3)
print("00(.):", out.summary(), "non-empty words:", out.nonempty)
