# Square-free words and partial words.
#
# A square is a factor of the form uu.  Over two letters every word of length 4
# contains one, over three letters there are infinitely many square-free words.

from sqfree.words import (PeriodicPartialWord, compatible, is_square_free, parse_partial,
                          parse_word, render, square_free_words)

for n in range(1, 5):
    print(f"binary, length {n}:", [render(w) for w in square_free_words(2, n)])

counts = [len(list(square_free_words(3, n))) for n in range(1, 13)]
print("ternary square-free counts by length:", counts)

w = parse_word("0120210")
print(render(w), "square-free:", is_square_free(w))
print("01201 square-free:", is_square_free(parse_word("01201")))

# holes are written '.', a periodic tail in parentheses
mu = PeriodicPartialWord.parse("0(1.2.)")
print("first letters of", repr(mu), ":", render(tuple(mu.at(i) for i in range(12))))
print("0120 compatible with 0.2. :", compatible(parse_word("0120"), parse_partial("0.2.")))
