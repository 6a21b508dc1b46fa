#!/usr/bin/env python3
"""Multiple covers of the basic disk and the logarithm identity.

The d-fold cover of the basic Maslov-zero disk bounding the Harvey-Lawson
filling contributes to the obstruction-bundle Euler number through
fixed-point localization: the weights are {-1, ..., -(d-1)} upstairs and
{2, ..., d} downstairs with a Z/d automorphism group, giving exactly
(-1)^(d-1)/d^2.  Summing the covers over all degree distributions with
multinomial weights reproduces, coefficient by coefficient, the logarithm

    log(1 + mu_1 + ... + mu_m),

which is the closed form of the solved augmentation series.  Everything
below is exact rational arithmetic.

The scheme-level refinement appears at the end: for a repeated factor of a
relation, the solver produces a witness whose relation image is nilpotent
of order exactly the multiplicity, instead of zero.
"""

from augvar.augment import solve_nilpotent_augmentation
from augvar.laurent import LaurentPoly
from augvar.localization import (
    euler_contribution,
    hl_cover_weights,
    log_series,
    multicover_series,
    verify_multicover_identity,
)


def cover_table(dmax=10):
    print("== multiple-cover contributions ==")
    print("  d   numerator weights      denominator weights   |Aut|  contribution")
    for d in range(1, dmax + 1):
        p = hl_cover_weights(d)
        print("  %-3d %-22s %-21s %-6d %s"
              % (d, list(p.numerator_weights), list(p.denominator_weights),
                 p.automorphism_order, euler_contribution(p)))
    print()


def logarithm_identity():
    print("== multinomial aggregation equals the logarithm ==")
    for m in (1, 2, 3):
        equal, compared = verify_multicover_identity(m, 8)
        print("  m = %d, order 8: equal = %s  (%d coefficients compared)"
              % (m, equal, compared))
    s = multicover_series(2, 4)
    print("  sample coefficients (m = 2):")
    for exp in sorted(s.terms, key=lambda e: (sum(e), e)):
        print("    mu1^%d mu2^%d : %s" % (exp[0], exp[1], s.terms[exp]))
    assert s == log_series(2, 4)
    print()


def nilpotent_scheme_variant():
    print("== nilpotent witnesses for repeated factors ==")
    y1, y = LaurentPoly.gens(("y1", "y"))
    for factor, mult in ((1 - y, 2), (1 + y1 - y, 3)):
        sol = solve_nilpotent_augmentation(factor, mult, "y", order=6)
        img = sol.image
        print("  factor %-12s multiplicity %d: image %s" % (factor, mult, img))
        print("    image^%d = 0: %s;  image^%d != 0: %s"
              % (mult, (img ** mult).is_zero(),
                 mult - 1, not (img ** (mult - 1)).is_zero()))
    print()


def main():
    cover_table()
    logarithm_identity()
    nilpotent_scheme_variant()


if __name__ == "__main__":
    main()
