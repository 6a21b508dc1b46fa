"""Fixed-point localization identities for multiple covers.

The Euler number of an equivariant obstruction bundle localizes to a sum
over fixed points of (product of bundle weights)/(product of tangent
weights), divided by the automorphism order in the orbifold case.  For the
d-fold cover of the basic disk bounding the Harvey-Lawson filling the
weight multisets are {-1, ..., -(d-1)} over {2, ..., d} with automorphism
group of order d, giving the multiple-cover factor (-1)^{d-1}/d^2.

Weights are only defined up to sign in general; the concrete signed
representatives fixed here are the ones appearing in the displayed
dimension-three computation, which makes every contribution deterministic.

Aggregating the covers with multinomial weights reproduces, degree by
degree, the logarithm log(1 + mu_1 + ... + mu_m); that identity is exposed
as an exact check.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .rings import TruncatedSeries, series_log


@dataclass(frozen=True)
class FixedPointData:
    """Weight data of one fixed point: numerator (bundle) weights,
    denominator (tangent) weights, and the automorphism order."""

    numerator_weights: tuple
    denominator_weights: tuple
    automorphism_order: int = 1

    def __post_init__(self):
        if any(w == 0 for w in self.numerator_weights):
            raise ValueError("zero numerator weight")
        if any(w == 0 for w in self.denominator_weights):
            raise ValueError("zero denominator weight")
        if self.automorphism_order < 1:
            raise ValueError("automorphism order must be >= 1")


def euler_contribution(p):
    """(prod numerator)/(prod denominator)/|Aut|, exactly.

    Empty weight multisets contribute a product of one, so the basic disk
    (d = 1) counts once.
    """
    num = Fraction(1)
    for w in p.numerator_weights:
        num *= w
    den = Fraction(p.automorphism_order)
    for w in p.denominator_weights:
        den *= w
    return num / den


def hl_cover_weights(d):
    """Weight data of the d-fold cover of the basic Harvey-Lawson disk.

    Numerator weights -1, ..., -(d-1); denominator weights 2, ..., d;
    automorphism order d.  The contribution is (-1)^{d-1}/d^2.
    """
    if d < 1:
        raise ValueError("cover degree must be >= 1")
    return FixedPointData(
        numerator_weights=tuple(-j for j in range(1, d)),
        denominator_weights=tuple(range(2, d + 1)),
        automorphism_order=d,
    )


def multicover_contribution(d):
    return euler_contribution(hl_cover_weights(d))


def multinomial(total, parts):
    out = factorial(total)
    for p in parts:
        out //= factorial(p)
    return out


def _degree_vectors(m, total):
    if m == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _degree_vectors(m - 1, total - first):
            yield (first,) + rest


def multicover_series(m, order):
    """Multinomial aggregation of the cover contributions.

    sum over degree vectors (d_1, ..., d_m), 1 <= d = sum d_i <= order, of
    multinomial(d; d_1, ..., d_m) (-1)^{d-1}/d prod mu_i^{d_i}; the factor
    1/d (not 1/d^2) appears because the d markings of the degree-d cover
    contribute d constrained configurations each.
    """
    if m < 1 or order < 1:
        raise ValueError("need m >= 1 and order >= 1")
    variables = tuple("mu%d" % i for i in range(1, m + 1))
    terms = {}
    for d in range(1, order + 1):
        coeff = Fraction((-1) ** (d - 1), d)
        for vec in _degree_vectors(m, d):
            terms[vec] = coeff * multinomial(d, vec)
    return TruncatedSeries(variables, order, terms)


def log_series(m, order):
    """log(1 + mu_1 + ... + mu_m), the closed form of the aggregation."""
    variables = tuple("mu%d" % i for i in range(1, m + 1))
    u = TruncatedSeries.one(variables, order)
    for v in variables:
        u = u + TruncatedSeries.variable(v, variables, order)
    return series_log(u)


def verify_multicover_identity(m, order):
    """Exact coefficientwise comparison of the multinomial sum with the
    logarithm; returns (equal, number of coefficients compared)."""
    lhs = multicover_series(m, order)
    rhs = log_series(m, order)
    compared = len(set(lhs.terms) | set(rhs.terms))
    return lhs == rhs, compared
