"""Exact coefficient rings.

Four backends, all with exact arithmetic and no floating point anywhere:

* rationals (``fractions.Fraction`` used directly),
* univariate polynomials over the rationals (:class:`UniPoly`),
* quotient fields ``Q[t]/(m)`` for a monic squarefree modulus
  (:class:`QuotientFieldElem`),
* nilpotent rings ``Q[alpha]/(alpha^m)`` (:class:`NilpotentElem`),

plus truncated multivariate power series over any of the scalar backends
(:class:`TruncatedSeries`) with exponential and logarithm.

Values are immutable after construction and every operation is pure, so
everything here can be shared freely between threads.
"""

from fractions import Fraction
from math import factorial

from .errors import (
    BackendMismatch,
    ConstantTermNotOne,
    NonzeroConstantTerm,
    NotInvertible,
    VariableMismatch,
    ZeroPolynomial,
)

DEFAULT_ORDER = 16


def frac(x):
    """Coerce an int, string or Fraction to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError("cannot coerce %r to a rational number" % (x,))


def is_zero(x):
    """Zero test across all scalar backends."""
    if isinstance(x, (int, Fraction)):
        return x == 0
    return x.is_zero()


def invert_scalar(x):
    """Multiplicative inverse in the element's own backend."""
    if isinstance(x, int):
        x = Fraction(x)
    if isinstance(x, Fraction):
        if x == 0:
            raise NotInvertible("division by zero")
        return 1 / x
    return x.invert()


# --------------------------------------------------------------------------
# univariate polynomials over Q
# --------------------------------------------------------------------------

class UniPoly:
    """Dense univariate polynomial over Q, coefficients by ascending degree.

    The zero polynomial is the empty coefficient tuple; otherwise the
    leading coefficient is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def constant(cls, c):
        return cls((frac(c),))

    @classmethod
    def gen(cls):
        """The polynomial t."""
        return cls((0, 1))

    # -- structure ---------------------------------------------------------

    @property
    def degree(self):
        """Degree, with the convention deg 0 = -1."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def leading(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly((other,))
        return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("UniPoly", self.coeffs))

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return UniPoly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("UniPoly powers must be nonnegative integers")
        out = UniPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quo = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        dlead = other.leading()
        dd = other.degree
        while len(rem) - 1 >= dd and rem:
            k = len(rem) - 1 - dd
            q = rem[-1] / dlead
            quo[k] = q
            for i, c in enumerate(other.coeffs):
                rem[k + i] -= q * c
            while rem and rem[-1] == 0:
                rem.pop()
        return UniPoly(quo), UniPoly(rem)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def monic(self):
        if self.is_zero():
            return self
        lead = self.leading()
        return UniPoly(tuple(c / lead for c in self.coeffs))

    def derivative(self):
        return UniPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def evaluate(self, x):
        """Horner evaluation; x may live in any backend containing Q."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        return self.format("t")

    def format(self, var):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                mono = var if i == 1 else "%s^%d" % (var, i)
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append("-" + mono)
                else:
                    parts.append("%s*%s" % (c, mono))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    __repr__ = __str__


def uni_gcd(p, q):
    """Monic greatest common divisor; uni_gcd(p, 0) is monic(p)."""
    while not q.is_zero():
        p, q = q, p % q
    return p.monic()


def squarefree_part(p):
    """p / gcd(p, p'), made monic.  Undefined for the zero polynomial."""
    if p.is_zero():
        raise ZeroPolynomial("squarefree part of the zero polynomial")
    g = uni_gcd(p, p.derivative())
    return (p // g).monic()


def is_squarefree(p):
    if p.is_zero():
        return False
    return uni_gcd(p, p.derivative()).is_constant()


def rational_roots(p):
    """All rational roots of p, sorted by (abs value, -sign).

    The ordering puts the smallest root first and prefers the positive one
    on ties, matching the root-selection rule used by the augmentation
    solver.
    """
    if p.is_zero():
        raise ZeroPolynomial("every rational is a root of zero")
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // _gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    shift = 0
    while ints and ints[0] == 0:
        ints.pop(0)
        shift += 1
    roots = set([Fraction(0)] if shift else [])
    a0, an = abs(ints[0]), abs(ints[-1])
    for num in _divisors(a0):
        for d in _divisors(an):
            for cand in (Fraction(num, d), Fraction(-num, d)):
                if p.evaluate(cand) == 0:
                    roots.add(cand)
    return sorted(roots, key=lambda r: (abs(r), -r))


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _divisors(n):
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return sorted(set(out))


# --------------------------------------------------------------------------
# quotient field Q[t]/(m)
# --------------------------------------------------------------------------

class QuotientFieldElem:
    """Element of Q[t]/(m) for monic squarefree m.

    Irreducibility of m over Q is asserted by the caller (the library only
    verifies squarefreeness); with an irreducible modulus the quotient is a
    field and every nonzero element inverts.  With a merely squarefree
    modulus a failed inversion raises :class:`NotInvertible`, which signals
    reducibility.
    """

    __slots__ = ("residue", "modulus")

    def __init__(self, residue, modulus):
        if not isinstance(residue, UniPoly):
            residue = UniPoly.constant(residue)
        if not isinstance(modulus, UniPoly):
            modulus = UniPoly(modulus)
        if modulus.degree < 1:
            raise ValueError("modulus must be nonconstant")
        modulus = modulus.monic()
        if not is_squarefree(modulus):
            raise ValueError("modulus must be squarefree")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "residue", residue % modulus)

    def __setattr__(self, name, value):
        raise AttributeError("QuotientFieldElem is immutable")

    @classmethod
    def generator(cls, modulus):
        """The class of t."""
        return cls(UniPoly.gen(), modulus)

    def _coerce(self, other):
        if isinstance(other, QuotientFieldElem):
            if other.modulus != self.modulus:
                raise BackendMismatch("different quotient moduli")
            return other
        if isinstance(other, NilpotentElem):
            raise BackendMismatch("cannot mix quotient-field and nilpotent backends")
        if isinstance(other, (int, Fraction)):
            return QuotientFieldElem(UniPoly.constant(other), self.modulus)
        if isinstance(other, UniPoly):
            return QuotientFieldElem(other, self.modulus)
        return None

    def is_zero(self):
        return self.residue.is_zero()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.residue == other.residue

    def __hash__(self):
        return hash(("QFE", self.residue, self.modulus))

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuotientFieldElem(self.residue + other.residue, self.modulus)

    __radd__ = __add__

    def __neg__(self):
        return QuotientFieldElem(-self.residue, self.modulus)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuotientFieldElem(self.residue - other.residue, self.modulus)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuotientFieldElem(self.residue * other.residue, self.modulus)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int):
            raise ValueError("integer powers only")
        if n < 0:
            return self.invert() ** (-n)
        out = QuotientFieldElem(UniPoly.one(), self.modulus)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.invert()

    def __rtruediv__(self, other):
        return self.invert() * other

    def invert(self):
        """Inverse mod m via extended Euclid."""
        if self.residue.is_zero():
            raise NotInvertible("zero has no inverse")
        g, s = _half_ext_gcd(self.residue, self.modulus)
        if not g.is_constant():
            raise NotInvertible(
                "gcd(residue, modulus) = %s is nonconstant; modulus is reducible" % g)
        return QuotientFieldElem(s * (1 / g.leading()), self.modulus)

    def __str__(self):
        return "(%s mod %s)" % (self.residue.format("t"), self.modulus.format("t"))

    __repr__ = __str__


def _half_ext_gcd(a, m):
    """Return (g, s) with g = gcd(a, m) and s*a = g mod m."""
    r0, r1 = a, m
    s0, s1 = UniPoly.one(), UniPoly.zero()
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    return r0, s0 % m


def quotient_invert(x):
    """Module-level alias for :meth:`QuotientFieldElem.invert`."""
    return x.invert()


# --------------------------------------------------------------------------
# nilpotent ring Q[alpha]/(alpha^m)
# --------------------------------------------------------------------------

class NilpotentElem:
    """Element of Q[alpha]/(alpha^m): alpha is nilpotent of order m."""

    __slots__ = ("residue", "order")

    def __init__(self, residue, order):
        if not isinstance(order, int) or order < 1:
            raise ValueError("nilpotency order must be a positive integer")
        if not isinstance(residue, UniPoly):
            residue = UniPoly.constant(residue) if not isinstance(residue, (list, tuple)) \
                else UniPoly(residue)
        object.__setattr__(self, "residue", UniPoly(residue.coeffs[:order]))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("NilpotentElem is immutable")

    @classmethod
    def alpha(cls, order):
        return cls(UniPoly.gen(), order)

    def _coerce(self, other):
        if isinstance(other, NilpotentElem):
            if other.order != self.order:
                raise BackendMismatch("different nilpotency orders")
            return other
        if isinstance(other, QuotientFieldElem):
            raise BackendMismatch("cannot mix nilpotent and quotient-field backends")
        if isinstance(other, (int, Fraction)):
            return NilpotentElem(UniPoly.constant(other), self.order)
        return None

    def is_zero(self):
        return self.residue.is_zero()

    def constant_part(self):
        return self.residue[0]

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.residue == other.residue

    def __hash__(self):
        return hash(("NIL", self.residue, self.order))

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return NilpotentElem(self.residue + other.residue, self.order)

    __radd__ = __add__

    def __neg__(self):
        return NilpotentElem(-self.residue, self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return NilpotentElem(self.residue * other.residue, self.order)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int):
            raise ValueError("integer powers only")
        if n < 0:
            return self.invert() ** (-n)
        out = NilpotentElem(UniPoly.one(), self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.invert()

    def __rtruediv__(self, other):
        return self.invert() * other

    def invert(self):
        """(c + n)^{-1} = c^{-1} sum_j (-n/c)^j, a finite sum since n is
        nilpotent.  Requires nonzero constant part."""
        c = self.constant_part()
        if c == 0:
            raise NotInvertible("constant term vanishes; element is nilpotent")
        v = self * (1 / frac(c)) - 1      # nilpotent part of self/c
        out = NilpotentElem(UniPoly.one(), self.order)
        term = NilpotentElem(UniPoly.one(), self.order)
        for _ in range(1, self.order):
            term = term * (-v)
            if term.is_zero():
                break
            out = out + term
        return out * (1 / frac(c))

    def nilpotency_order(self):
        """Smallest d with self^d = 0, or None if self is a unit."""
        if self.constant_part() != 0:
            return None
        power = NilpotentElem(UniPoly.one(), self.order)
        for d in range(1, self.order + 1):
            power = power * self
            if power.is_zero():
                return d
        return self.order  # unreachable: alpha^order = 0 forces d <= order

    def __str__(self):
        return "(%s mod a^%d)" % (self.residue.format("a"), self.order)

    __repr__ = __str__


# --------------------------------------------------------------------------
# truncated multivariate power series
# --------------------------------------------------------------------------

def _scalar_compatible(a, b):
    """Reject mixing of two different non-rational backends."""
    if isinstance(a, (int, Fraction)) or isinstance(b, (int, Fraction)):
        return
    if type(a) is not type(b):
        raise BackendMismatch("mixed coefficient backends %s / %s"
                              % (type(a).__name__, type(b).__name__))
    if isinstance(a, QuotientFieldElem) and a.modulus != b.modulus:
        raise BackendMismatch("different quotient moduli")
    if isinstance(a, NilpotentElem) and a.order != b.order:
        raise BackendMismatch("different nilpotency orders")


class TruncatedSeries:
    """Multivariate power series truncated past total degree ``order``.

    Terms are a map from exponent tuples (nonnegative, total degree at most
    ``order``) to coefficients in one scalar backend.  Zero coefficients are
    never stored.
    """

    __slots__ = ("variables", "order", "terms")

    def __init__(self, variables, order, terms=None):
        variables = tuple(variables)
        if not isinstance(order, int) or order < 0:
            raise ValueError("truncation order must be a nonnegative integer")
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != len(variables):
                raise VariableMismatch("exponent length != variable count")
            if any(e < 0 for e in exp):
                raise ValueError("series exponents must be nonnegative")
            if sum(exp) > order:
                continue
            if is_zero(c):
                continue
            clean[exp] = c
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables, order):
        return cls(variables, order, {})

    @classmethod
    def constant(cls, c, variables, order):
        variables = tuple(variables)
        return cls(variables, order, {(0,) * len(variables): c})

    @classmethod
    def one(cls, variables, order):
        return cls.constant(1, variables, order)

    @classmethod
    def variable(cls, name, variables, order):
        variables = tuple(variables)
        if name not in variables:
            raise VariableMismatch("unknown series variable %r" % name)
        exp = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, order, {exp: Fraction(1)})

    # -- structure ---------------------------------------------------------

    def _check(self, other):
        if self.variables != other.variables:
            raise VariableMismatch("series over different variables")
        if self.order != other.order:
            raise VariableMismatch("series with different truncation orders")
        for a in self.terms.values():
            for b in other.terms.values():
                _scalar_compatible(a, b)
                break
            break

    def is_zero(self):
        return not self.terms

    def constant_term(self):
        return self.terms.get((0,) * len(self.variables), Fraction(0))

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), Fraction(0))

    def valuation(self):
        """Minimal total degree of a nonzero term; None for the zero series."""
        if not self.terms:
            return None
        return min(sum(e) for e in self.terms)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            if isinstance(other, (int, Fraction)):
                other = TruncatedSeries.constant(other, self.variables, self.order)
            else:
                return NotImplemented
        return (self.variables == other.variables and self.order == other.order
                and self.terms == other.terms)

    __hash__ = None

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, QuotientFieldElem, NilpotentElem)):
            return TruncatedSeries.constant(other, self.variables, self.order)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for exp, c in other.terms.items():
            acc = out.get(exp, 0) + c
            if is_zero(acc):
                out.pop(exp, None)
            else:
                out[exp] = acc
        return TruncatedSeries(self.variables, self.order, out)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.variables, self.order,
                               {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        order = self.order
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, c2 in other.terms.items():
                if d1 + sum(e2) > order:
                    continue
                exp = tuple(a + b for a, b in zip(e1, e2))
                acc = out.get(exp, 0) + c1 * c2
                if is_zero(acc):
                    out.pop(exp, None)
                else:
                    out[exp] = acc
        return TruncatedSeries(self.variables, self.order, out)

    __rmul__ = __mul__

    def scale(self, c):
        return TruncatedSeries(self.variables, self.order,
                               {e: v * c for e, v in self.terms.items()})

    def __pow__(self, n):
        if not isinstance(n, int):
            raise ValueError("integer powers only")
        if n < 0:
            return self.invert() ** (-n)
        out = TruncatedSeries.one(self.variables, self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def invert(self):
        """Inverse of a series with invertible constant term."""
        c = self.constant_term()
        if is_zero(c):
            raise NotInvertible("series with zero constant term")
        cinv = invert_scalar(c)
        v = self.scale(cinv) - 1          # valuation >= 1
        out = TruncatedSeries.one(self.variables, self.order)
        term = TruncatedSeries.one(self.variables, self.order)
        for _ in range(self.order):
            term = term * (-v)
            if term.is_zero():
                break
            out = out + term
        return out.scale(cinv)


def series_exp(s):
    """exp(s) = sum s^j / j!, requiring zero constant term."""
    if not is_zero(s.constant_term()):
        raise NonzeroConstantTerm("series exponential needs zero constant term")
    out = TruncatedSeries.one(s.variables, s.order)
    power = TruncatedSeries.one(s.variables, s.order)
    for j in range(1, s.order + 1):
        power = power * s
        if power.is_zero():
            break
        out = out + power.scale(Fraction(1, factorial(j)))
    return out


def series_log(u):
    """log(u) = sum (-1)^{j-1} (u-1)^j / j, requiring constant term one."""
    if u.constant_term() != 1:
        raise ConstantTermNotOne("series logarithm needs constant term one")
    v = u - 1
    out = TruncatedSeries.zero(u.variables, u.order)
    power = TruncatedSeries.one(u.variables, u.order)
    for j in range(1, u.order + 1):
        power = power * v
        if power.is_zero():
            break
        out = out + power.scale(Fraction((-1) ** (j - 1), j))
    return out
