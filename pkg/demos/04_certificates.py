# Exact certificate checks.
#
# The inequality only depends on k, p, the pattern lengths, f and x, so it is
# cheap to evaluate.  Arithmetic is exact; the six-letter certificate is tight
# at one length, so a float evaluation could not be trusted there.

from fractions import Fraction

from sqfree import presets
from sqfree.certificate import beta_table, check_main, check_singleton

for name in ("six", "quaternary", "ternary"):
    cert = presets.certificate(name)
    report = check_main(cert)
    print(f"{name}: k={cert.k} p={cert.p} |W|={len(cert.patterns)}")
    for line in report.lines():
        print("   ", line)

cert = presets.certificate("six")
print("beta for the six-letter certificate:", [str(b) for b in beta_table(cert)])

# shrink one weight and the check fails
cert.x[1] = Fraction(1, 100)
print("x_1 = 1/100:", "PASS" if check_main(cert).passed else "FAIL")

print(check_singleton(4, 1, 12, Fraction(3, 10)))
