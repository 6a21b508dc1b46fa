"""Constructive augmentation machinery.

Given a lifted relation W with nonzero constant term and nonnegative
exponents, an augmentation is built by expanding around a transverse root
of the one-variable restriction W(0, ..., 0, y_k):

* pick kappa with W(0,...,0,kappa) = 0 and derivative nonzero there,
* solve W(mu_1, ..., mu_{k-1}, kappa exp(s)) = 0 order by order for a
  power series s with zero constant term.

The order-by-order step is a Newton update.  Writing r(y) for the
restriction, the linearization of s -> W(mu, kappa exp(s)) at s = 0 is
multiplication by kappa r'(kappa), so the update is

    s  <-  s - (kappa r'(kappa))^{-1} W(mu, kappa exp(s)),

which fixes one additional order per step.  (Using the bare derivative
r'(kappa) with a plus sign happens to agree when kappa r'(kappa) =
-r'(kappa) but diverges for the other sign choices; the chain-rule factor
kappa is what makes the update correct for every transverse root.)

The nilpotent variant solves W_i(mu, kappa (1 + alpha) exp(s)) =
W_i(0, ..., kappa (1 + alpha)) over Q[alpha]/(alpha^d)[[mu]], producing a
relation image that is nilpotent of order exactly the multiplicity d.

Also here: partition components of disconnected Legendrians, the
hard-coded degree-one DGA relation check for two and three sheets with
deterministic witness construction, and exact Reeb-chord degrees.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DoubleRoot,
    IndexOutOfRange,
    MissingAssignment,
    NegativeExponentAtZero,
    NoRootAvailable,
)
from .laurent import LaurentPoly, grlex_key
from .rings import (
    DEFAULT_ORDER,
    NilpotentElem,
    QuotientFieldElem,
    TruncatedSeries,
    UniPoly,
    frac,
    invert_scalar,
    is_squarefree,
    is_zero,
    rational_roots,
    series_exp,
)


# --------------------------------------------------------------------------
# transverse roots
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class TransverseRoot:
    """A simple root of the one-variable restriction of a relation."""

    kappa: object            # Fraction or QuotientFieldElem
    witness: object          # r'(kappa), nonzero
    variable: str
    restriction: UniPoly


def random_unimodular(n, seed, steps=4):
    """Seeded random unimodular matrix: a short product of elementary
    shears, swaps and sign flips with small entries, kept small so Newton
    polytopes do not blow up under the substitution."""
    rng = random.Random(seed)
    M = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        op = rng.choice(("shear", "swap", "neg")) if n > 1 else "neg"
        if op == "shear":
            i, j = rng.sample(range(n), 2)
            f = rng.choice((-2, -1, 1, 2))
            M[i] = [a + f * b for a, b in zip(M[i], M[j])]
        elif op == "swap":
            i, j = rng.sample(range(n), 2)
            M[i], M[j] = M[j], M[i]
        else:
            i = rng.randrange(n)
            M[i] = [-x for x in M[i]]
    return M


def _var_name(relation, k):
    if isinstance(k, str):
        if k not in relation.variables:
            raise IndexOutOfRange("unknown variable %r" % k)
        return k
    try:
        return relation.variables[k]
    except IndexError:
        raise IndexOutOfRange("variable index %r out of range" % k) from None


def find_transverse_root(relation, k, factor=None, seed=0):
    """Root selection for the restriction W(0, ..., 0, y_k).

    Rational roots are preferred (smallest absolute value, positive on
    ties); otherwise ``factor`` must supply a squarefree polynomial m
    dividing the restriction, and kappa becomes the class of t in
    Q[t]/(m) (irreducibility of m is asserted by the caller).

    Raises :class:`NoRootAvailable` or :class:`DoubleRoot`; the latter
    carries a seeded suggested unimodular substitution for retrying in
    generic coordinates.
    """
    var = _var_name(relation, k)
    r = relation.set_vars_zero(var)
    if r.is_constant():
        raise NoRootAvailable("restriction in %r is constant" % var)
    if r[0] == 0:
        raise NoRootAvailable(
            "restriction has zero constant term; clear the relation to a vertex first")
    roots = [x for x in rational_roots(r) if x != 0]
    if roots:
        kappa = roots[0]
        witness = r.derivative().evaluate(kappa)
        if witness == 0:
            raise DoubleRoot(
                "rational root %s of the restriction is not simple" % kappa,
                suggested_transform=random_unimodular(len(relation.variables), seed))
        return TransverseRoot(kappa, witness, var, r)
    if factor is None:
        raise NoRootAvailable(
            "no rational root; supply a squarefree factor of %s" % r.format("y"))
    m = (factor if isinstance(factor, UniPoly) else UniPoly(factor)).monic()
    if m.degree < 1 or not is_squarefree(m):
        raise NoRootAvailable("supplied factor must be nonconstant and squarefree")
    if not (r % m).is_zero():
        raise NoRootAvailable("supplied factor does not divide the restriction")
    kappa = QuotientFieldElem.generator(m)
    witness = r.derivative().evaluate(kappa)
    if is_zero(witness):
        raise DoubleRoot(
            "root class of %s is not simple" % m.format("t"),
            suggested_transform=random_unimodular(len(relation.variables), seed))
    return TransverseRoot(kappa, witness, var, r)


# --------------------------------------------------------------------------
# formal power-series augmentations
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class AugmentationSeries:
    """A solved augmentation: y_i -> mu_i for i != k, y_k -> kappa exp(s).

    ``series`` is s (zero constant term); ``image`` is the constant value
    the relation maps to (zero for the honest solver, a nilpotent constant
    for the scheme variant); ``order`` is the truncation order to which the
    residual was verified by substitution.
    """

    relation: LaurentPoly
    variable: str
    kappa: object
    series: TruncatedSeries
    order: int
    image: object = Fraction(0)
    multiplicity: int = 1

    def point(self):
        """The augmentation as an evaluation point for the relation."""
        pt = {v: TruncatedSeries.variable(v, self.series.variables, self.order)
              for v in self.relation.variables if v != self.variable}
        pt[self.variable] = series_exp(self.series).scale(self.kappa)
        return pt

    def residual(self):
        """Independent substitution of the solved point into the relation."""
        return self.relation.evaluate(self.point()) - self.image

    def series_coefficients(self):
        """Terms of s in deterministic graded-lex order."""
        return [(exp, self.series.terms[exp])
                for exp in sorted(self.series.terms, key=grlex_key)]


def _mu_variables(relation, var):
    return tuple(v for v in relation.variables if v != var)


def _check_nonnegative_off_variable(relation, var):
    k = relation.variables.index(var)
    for exp in relation.terms:
        if any(e < 0 for i, e in enumerate(exp) if i != k):
            raise NegativeExponentAtZero(
                "relation has negative exponents in the zeroed variables; "
                "apply a unimodular basis change first")


def solve_formal_augmentation(relation, k, kappa=None, order=DEFAULT_ORDER,
                              factor=None, seed=0):
    """Order-by-order solution of W(mu, kappa exp(s)) = 0.

    ``kappa`` defaults to the preferred transverse root of the restriction.
    Each Newton step fixes at least one more order; the loop stops when the
    residual vanishes in the truncated ring.  The residual of the returned
    solution is re-checked by direct substitution.
    """
    var = _var_name(relation, k)
    _check_nonnegative_off_variable(relation, var)
    if kappa is None:
        kappa = find_transverse_root(relation, var, factor=factor, seed=seed).kappa
    r = relation.set_vars_zero(var)
    if not is_zero(r.evaluate(kappa)):
        raise NoRootAvailable("kappa is not a root of the restriction")
    deriv = r.derivative().evaluate(kappa)
    if is_zero(deriv):
        raise DoubleRoot(
            "restriction root is not simple",
            suggested_transform=random_unimodular(len(relation.variables), seed))
    slope = kappa * deriv                   # chain rule through kappa exp(s)
    slope_inv = invert_scalar(slope)
    mu_vars = _mu_variables(relation, var)
    s = TruncatedSeries.zero(mu_vars, order)
    point = {v: TruncatedSeries.variable(v, mu_vars, order) for v in mu_vars}
    prev_val = 0
    for _ in range(order + 1):
        point[var] = series_exp(s).scale(kappa)
        residual = relation.evaluate(point)
        if residual.is_zero():
            break
        val = residual.valuation()
        if val <= prev_val:
            raise DoubleRoot(
                "iteration stalled at order %d" % val,
                suggested_transform=random_unimodular(len(relation.variables), seed))
        prev_val = val
        s = s - residual.scale(slope_inv)
    sol = AugmentationSeries(relation=relation, variable=var, kappa=kappa,
                             series=s, order=order)
    res = sol.residual()
    assert res.is_zero(), "solver left a nonzero residual"
    return sol


def solve_nilpotent_augmentation(factor_poly, multiplicity, k,
                                 order=DEFAULT_ORDER, kappa=None, seed=0):
    """Scheme-level augmentation for one irreducible factor W_i of the
    relation, valued in Q[alpha]/(alpha^d)[[mu]].

    The solved assignment sends y_k to kappa (1 + alpha) exp(s) so that the
    image of W_i is the mu-independent constant W_i(0, ..., kappa(1+alpha)),
    nilpotent of order exactly ``multiplicity``; the image of W_i^d is then
    zero while the (d-1)-st power survives.

    ``multiplicity`` = 1 degenerates to the honest formal solver (alpha = 0).
    """
    if multiplicity < 1:
        raise ValueError("multiplicity must be >= 1")
    if multiplicity == 1:
        return solve_formal_augmentation(factor_poly, k, kappa=kappa,
                                         order=order, seed=seed)
    var = _var_name(factor_poly, k)
    _check_nonnegative_off_variable(factor_poly, var)
    if kappa is None:
        kappa = find_transverse_root(factor_poly, var, seed=seed).kappa
    if isinstance(kappa, QuotientFieldElem):
        raise NoRootAvailable(
            "nilpotent solver needs a rational root (nilpotents over a "
            "quotient field are not supported)")
    r = factor_poly.set_vars_zero(var)
    if r.evaluate(kappa) != 0:
        raise NoRootAvailable("kappa is not a root of the restriction")
    if r.derivative().evaluate(kappa) == 0:
        raise DoubleRoot(
            "restriction root is not simple",
            suggested_transform=random_unimodular(len(factor_poly.variables), seed))
    d = multiplicity
    one = NilpotentElem(UniPoly.one(), d)
    alpha = NilpotentElem.alpha(d)
    kap = (one + alpha) * frac(kappa)
    target = r.evaluate(kap)                # c alpha + higher, c != 0
    slope = kap * r.derivative().evaluate(kap)
    slope_inv = slope.invert()
    mu_vars = _mu_variables(factor_poly, var)
    s = TruncatedSeries.zero(mu_vars, order)
    point = {v: TruncatedSeries.variable(v, mu_vars, order) for v in mu_vars}
    for _ in range(order + 1):
        point[var] = series_exp(s).scale(kap)
        residual = factor_poly.evaluate(point) - target
        if residual.is_zero():
            break
        s = s - residual.scale(slope_inv)
    sol = AugmentationSeries(relation=factor_poly, variable=var, kappa=kap,
                             series=s, order=order, image=target,
                             multiplicity=d)
    res = sol.residual()
    assert res.is_zero(), "nilpotent solver left a nonzero residual"
    assert (target ** d).is_zero(), "image should be nilpotent of order d"
    assert not (target ** (d - 1)).is_zero(), "image nilpotency order too small"
    return sol


def point_on_variety(relation, point):
    """Exact test that a point satisfies the relation."""
    value = relation.evaluate(point)
    return is_zero(value)


# --------------------------------------------------------------------------
# partition components for disconnected Legendrians
# --------------------------------------------------------------------------

def sheet_variables(base_variables, sheet):
    return tuple("%s_%d" % (v, sheet) for v in base_variables)


def chord_name(j, k):
    return "a%d%d" % (j, k)


@dataclass(frozen=True)
class PartitionComponent:
    """One irreducible component of the augmentation variety of a disjoint
    union of sheets, indexed by a partition into blocks of size <= 2.

    Pair blocks contribute diagonal equations y_{i,a} - y_{i,b}; singleton
    blocks contribute the sheet relation in that sheet's variables.
    """

    blocks: tuple                 # tuple of sorted tuples, e.g. ((1, 3), (2,))
    equations: tuple              # defining Laurent equations over all sheets

    def label(self):
        return "|".join("{%s}" % ",".join(str(i) for i in b) for b in self.blocks)


def _partitions_le2(items):
    """All partitions of items (a list) into blocks of size one or two."""
    if not items:
        yield ()
        return
    head, rest = items[0], items[1:]
    for sub in _partitions_le2(rest):
        yield ((head,),) + sub
    for i, partner in enumerate(rest):
        remaining = rest[:i] + rest[i + 1:]
        for sub in _partitions_le2(remaining):
            yield (tuple(sorted((head, partner))),) + sub


def _rename_into(f, rename, all_vars):
    index = {v: i for i, v in enumerate(all_vars)}
    terms = {}
    for exp, c in f.terms.items():
        new = [0] * len(all_vars)
        for v, e in zip(f.variables, exp):
            new[index[rename[v]]] = e
        terms[tuple(new)] = c
    return LaurentPoly(all_vars, terms)


def enumerate_partition_components(ell, sheet_relation, spin_labels=None):
    """Components of the augmentation variety of ell translated sheets.

    Pair blocks {a, b} are allowed only when the sheets' spin labels agree
    (labels are opaque; only equality matters).  Components are returned in
    a deterministic order sorted by their block structure.
    """
    if ell < 1:
        raise ValueError("need at least one sheet")
    rel = sheet_relation.lifted_relation if hasattr(sheet_relation, "lifted_relation") \
        else sheet_relation
    base_vars = rel.variables
    all_vars = tuple(v for j in range(1, ell + 1)
                     for v in sheet_variables(base_vars, j))
    if spin_labels is None:
        spin_labels = [0] * ell
    if len(spin_labels) != ell:
        raise ValueError("need one spin label per sheet")
    components = []
    seen = set()
    for part in _partitions_le2(list(range(1, ell + 1))):
        blocks = tuple(sorted(part))
        if blocks in seen:
            continue
        seen.add(blocks)
        if any(len(b) == 2 and spin_labels[b[0] - 1] != spin_labels[b[1] - 1]
               for b in blocks):
            continue
        eqs = []
        for b in blocks:
            if len(b) == 1:
                j = b[0]
                rename = dict(zip(base_vars, sheet_variables(base_vars, j)))
                eqs.append(_rename_into(rel, rename, all_vars))
            else:
                a, b2 = b
                for v in base_vars:
                    ya = LaurentPoly.variable("%s_%d" % (v, a), all_vars)
                    yb = LaurentPoly.variable("%s_%d" % (v, b2), all_vars)
                    eqs.append(ya - yb)
        components.append(PartitionComponent(blocks=blocks, equations=tuple(eqs)))
    components.sort(key=lambda c: (len(c.blocks), c.blocks))
    return components


# --------------------------------------------------------------------------
# degree-one DGA relations for two and three sheets
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class AugCandidate:
    """Assignment of sheet coordinates y_{i,b} and mixed-chord values a_{jk}.

    ``y`` maps sheet number (1-based) to the tuple of that sheet's variable
    values; ``a`` maps ordered sheet pairs to chord values.  ``signs`` is
    one sign vector per sheet (constant slot first).  Diagonal chords
    a_{jj} are relation sources, never assigned.
    """

    ell: int
    y: tuple                     # y[j-1] = tuple of values for sheet j
    a: tuple                     # tuple of ((j, k), value) sorted
    signs: tuple                 # signs[j-1] = sign vector for sheet j

    def y_value(self, sheet, i):
        return self.y[sheet - 1][i - 1]

    def a_value(self, j, k):
        for (jj, kk), v in self.a:
            if (jj, kk) == (j, k):
                return v
        raise MissingAssignment("no value for chord a_%d%d" % (j, k))

    @classmethod
    def from_obj(cls, obj):
        ell = int(obj["ell"])
        nv = None
        y = []
        for j in range(1, ell + 1):
            row = obj["y"].get(str(j))
            if row is None:
                raise MissingAssignment("no y values for sheet %d" % j)
            row = tuple(frac(x) for x in row)
            if nv is None:
                nv = len(row)
            elif len(row) != nv:
                raise MissingAssignment("sheets with different variable counts")
            y.append(row)
        a = {}
        for j in range(1, ell + 1):
            for k in range(1, ell + 1):
                if j == k:
                    continue
                key = "%d%d" % (j, k)
                if key not in obj.get("a", {}):
                    raise MissingAssignment("no value for chord a_%s" % key)
                a[(j, k)] = frac(obj["a"][key])
        raw_signs = obj.get("signs", [1] * (nv + 1))
        if raw_signs and isinstance(raw_signs[0], (list, tuple)):
            signs = tuple(tuple(int(s) for s in row) for row in raw_signs)
        else:
            signs = tuple(tuple(int(s) for s in raw_signs) for _ in range(ell))
        if len(signs) != ell or any(len(s) != nv + 1 for s in signs):
            raise MissingAssignment("need one sign per monomial slot per sheet")
        return cls(ell, tuple(y), tuple(sorted(a.items())), signs)

    def to_obj(self):
        return {
            "ell": self.ell,
            "y": {str(j + 1): [str(x) for x in row]
                  for j, row in enumerate(self.y)},
            "a": {"%d%d" % jk: str(v) for jk, v in self.a},
            "signs": [list(s) for s in self.signs],
        }


@dataclass(frozen=True)
class CheckResult:
    passed: bool
    violated: str = ""
    value: object = None

    def __bool__(self):
        return self.passed


def _sheet_relation_value(cand, j):
    """eps_0 + sum_i eps_i y_{i,j} for sheet j."""
    signs = cand.signs[j - 1]
    total = Fraction(signs[0])
    for i, v in enumerate(cand.y[j - 1], start=1):
        total += signs[i] * v
    return total


def dga_relations_text(ell):
    """Names of the degree-one relations checked for ell sheets."""
    if ell not in (2, 3):
        raise IndexOutOfRange("relation list is hard-coded for 2 or 3 sheets")
    names = ["delta(a_%d%d)" % (i, i) for i in range(1, ell + 1)]
    if ell == 3:
        names += ["delta(a_13)", "delta(a_21)", "delta(a_32)"]
    return names


def dga_relation_check(cand):
    """Evaluate every degree-one relation of the 2- or 3-sheet DGA.

    Relations checked, with W_j the signed sheet relation:

    * delta(a_jj):  W_j(y_{.,j}) + sum_{k != j} a_jk a_kj = 0;
    * three sheets only, covers of the constant disk:
      delta(a_13) = a_12 a_23,  delta(a_21) = a_23 a_31,
      delta(a_32) = a_31 a_12 must map to zero;
    * chord/diagonal compatibility for every ordered pair (j, k) and every
      coordinate i:  a_jk (y_{i,k} - y_{i,j}) = 0.

    Passes exactly when all values vanish; the first violated relation (in
    the order above) is reported.
    """
    ell = cand.ell
    if ell not in (2, 3):
        raise IndexOutOfRange("relation check is hard-coded for 2 or 3 sheets")
    nv = len(cand.y[0])
    # diagonal relations
    for j in range(1, ell + 1):
        total = _sheet_relation_value(cand, j)
        for k in range(1, ell + 1):
            if k != j:
                total += cand.a_value(j, k) * cand.a_value(k, j)
        if total != 0:
            return CheckResult(False, "delta(a_%d%d)" % (j, j), total)
    # covers of the constant disk (three sheets)
    if ell == 3:
        for (i, j, k) in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
            value = cand.a_value(i, j) * cand.a_value(j, k)
            if value != 0:
                return CheckResult(False, "delta(a_%d%d)" % (i, k), value)
    # chord/diagonal compatibility
    for j in range(1, ell + 1):
        for k in range(1, ell + 1):
            if j == k:
                continue
            ajk = cand.a_value(j, k)
            if ajk == 0:
                continue
            for i in range(1, nv + 1):
                value = ajk * (cand.y_value(k, i) - cand.y_value(j, i))
                if value != 0:
                    return CheckResult(
                        False, "a_%d%d*(y_%d,%d - y_%d,%d)" % (j, k, i, k, i, j),
                        value)
    return CheckResult(True)


def build_partition_witness(blocks, signs, nvars, ell=None):
    """Deterministic witness candidate for one partition component.

    Singleton sheets get points exactly on their sheet variety, pair sheets
    get a shared off-variety point; all sheets receive pairwise distinct
    values in every coordinate, so any unit perturbation of any single
    value violates some checked relation.  Chord values: a_ab = 1 and
    a_ba = -W_a for each pair block {a, b}, zero otherwise.

    The sheet relation here is the Clifford-type one encoded by ``signs``
    (constant slot plus one sign per variable), which is linear in the last
    variable and therefore solvable exactly.
    """
    blocks = tuple(sorted(tuple(sorted(b)) for b in blocks))
    ell = ell or max(max(b) for b in blocks)
    if isinstance(signs[0], int):
        signs = tuple(tuple(signs) for _ in range(ell))
    used = [set() for _ in range(nvars)]    # values used per coordinate
    y = [None] * ell

    def fresh_row(start, on_variety, sheet):
        """First row of values with offset >= start meeting all constraints."""
        t = start
        while True:
            row = [Fraction(t + 7 * i) for i in range(nvars)]
            if on_variety:
                # solve the last coordinate from the sheet relation
                eps = signs[sheet - 1]
                head = Fraction(eps[0])
                for i in range(nvars - 1):
                    head += eps[1 + i] * row[i]
                row[-1] = -head * eps[nvars]
            ok = all(v != 0 for v in row)
            if ok and not on_variety:
                # keep the pair point off the variety
                eps = signs[sheet - 1]
                total = Fraction(eps[0])
                for i in range(nvars):
                    total += eps[1 + i] * row[i]
                ok = total != 0
            if ok:
                ok = all(row[i] not in used[i] for i in range(nvars))
            if ok:
                return row
            t += 1

    offset = 2
    for b in blocks:
        if len(b) == 1:
            row = fresh_row(offset, True, b[0])
            y[b[0] - 1] = tuple(row)
        else:
            row = fresh_row(offset, False, b[0])
            y[b[0] - 1] = tuple(row)
            y[b[1] - 1] = tuple(row)
        for i in range(nvars):
            used[i].add(row[i])
        offset += 11
    a = {}
    for j in range(1, ell + 1):
        for k in range(1, ell + 1):
            if j != k:
                a[(j, k)] = Fraction(0)
    cand0 = AugCandidate(ell, tuple(y), tuple(sorted(a.items())), signs)
    for b in blocks:
        if len(b) == 2:
            j, k = b
            a[(j, k)] = Fraction(1)
            a[(k, j)] = -_sheet_relation_value(cand0, j)
    return AugCandidate(ell, tuple(y), tuple(sorted(a.items())), signs)


def witness_for_component(component, signs, nvars):
    return build_partition_witness(component.blocks, signs, nvars)


def perturbations(cand):
    """All single-value +1 perturbations of a candidate, with labels."""
    out = []
    for j in range(1, cand.ell + 1):
        for i in range(1, len(cand.y[0]) + 1):
            y = [list(r) for r in cand.y]
            y[j - 1][i - 1] += 1
            out.append(("y_%d,%d" % (i, j),
                        AugCandidate(cand.ell, tuple(tuple(r) for r in y),
                                     cand.a, cand.signs)))
    for (j, k), v in cand.a:
        a = dict(cand.a)
        a[(j, k)] = v + 1
        out.append(("a_%d%d" % (j, k),
                    AugCandidate(cand.ell, cand.y, tuple(sorted(a.items())),
                                 cand.signs)))
    return out


# --------------------------------------------------------------------------
# Reeb-chord degrees
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ChordDegreeParams:
    """Inputs for the mixed-chord degree formula.

    ``theta_over_pi`` is the translation angle between consecutive sheets
    as an exact multiple of pi; ``slope`` is the grading slope of the
    ambient contact form (3 for the five-sphere setup).
    """

    sheets: int
    theta_over_pi: Fraction
    slope: Fraction

    def __post_init__(self):
        if self.sheets < 2:
            raise ValueError("need at least two sheets")
        if self.theta_over_pi <= 0:
            raise ValueError("rotation angle must be positive")


def reeb_chord_degree(params, j, k):
    """Real degree of the mixed chord a_{jk}; wraps k - j modulo the sheet
    count.  Returns (real degree, Z2 degree); all mixed chords have Z2
    degree one."""
    if not (1 <= j <= params.sheets and 1 <= k <= params.sheets):
        raise IndexOutOfRange("sheet index out of range")
    if j == k:
        raise IndexOutOfRange("mixed chords connect distinct sheets")
    m = (k - j) % params.sheets
    degree = params.slope * m * params.theta_over_pi - 1
    return degree, 1
