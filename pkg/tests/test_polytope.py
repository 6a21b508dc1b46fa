"""Tests for lattice polytopes, invariants, and certificates.

The oracles here (monotone-chain hull, shoelace area, box lattice counts,
erosion-based Minkowski decomposition search) are implemented locally with
plain integer arithmetic and never call the library's hull code, so they
check the LP-based implementation from an independent route.
"""

import itertools
import random
from fractions import Fraction

import pytest

from augvar.augment import random_unimodular
from augvar.errors import DimensionMismatch, NotTwoDimensionalInput
from augvar.laurent import LaurentPoly
from augvar.polytope import (
    LatticePolytope,
    certify_distinct,
    ccw_vertex_cycle,
    indecomposable_2d,
    irreducibility_certificate,
    minkowski_sum,
    newton_polytope,
    polytope_invariants,
)

F = Fraction


# --------------------------------------------------------------------------
# independent 2-D oracles
# --------------------------------------------------------------------------

def hull2d(points):
    """Monotone chain; returns ccw vertex list (no collinear points)."""
    pts = sorted(set(points))
    if len(pts) == 1:
        return pts

    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and _cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(list(reversed(pts)))
    hull = lower[:-1] + upper[:-1]
    return hull if len(hull) > 1 else pts


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def in_polygon(p, cycle):
    if len(cycle) == 1:
        return p == cycle[0]
    if len(cycle) == 2:
        a, b = cycle
        if _cross(a, b, p) != 0:
            return False
        return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and \
            min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    n = len(cycle)
    return all(_cross(cycle[i], cycle[(i + 1) % n], p) >= 0 for i in range(n))


def box_lattice_points(cycle):
    xs = [p[0] for p in cycle]
    ys = [p[1] for p in cycle]
    out = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            if in_polygon((x, y), cycle):
                out.append((x, y))
    return out


def shoelace_doubled(cycle):
    n = len(cycle)
    total = 0
    for i in range(n):
        x1, y1 = cycle[i]
        x2, y2 = cycle[(i + 1) % n]
        total += x1 * y2 - x2 * y1
    return abs(total)


def decomposable_bruteforce(P):
    """Search all lattice sub-polygons A of P and test P = A + B via the
    erosion B = {x : x + A inside P}."""
    cycle = ccw_oracle(P)
    pts = box_lattice_points(cycle)
    seen = set()
    candidates = []
    for r in range(2, len(pts) + 1):
        for subset in itertools.combinations(pts, r):
            h = tuple(sorted(hull2d(subset)))
            base = h[0]
            canon = tuple(sorted((x - base[0], y - base[1]) for x, y in h))
            if canon in seen:
                continue
            seen.add(canon)
            if len(canon) >= 2:
                candidates.append(canon)
    target = set(P.vertices)
    for A in candidates:
        shifts = []
        for x in range(min(p[0] for p in pts) - max(a[0] for a in A),
                       max(p[0] for p in pts) + 1):
            for y in range(min(p[1] for p in pts) - max(a[1] for a in A),
                           max(p[1] for p in pts) + 1):
                if all(in_polygon((x + ax, y + ay), cycle) for ax, ay in A):
                    shifts.append((x, y))
        if not shifts:
            continue
        B = hull2d(shifts)
        if len(B) < 2:
            continue
        sums = hull2d([(a[0] + b[0], a[1] + b[1]) for a in A for b in B])
        if set(sums) == target:
            return True
    return False


def ccw_oracle(P):
    return hull2d(list(P.vertices))


# --------------------------------------------------------------------------
# hulls and Minkowski sums
# --------------------------------------------------------------------------

def test_newton_polytope_triangle():
    y1, y2 = LaurentPoly.gens(("y1", "y2"))
    P = newton_polytope(1 + y1 + y2)
    assert P.vertices == ((0, 0), (0, 1), (1, 0))


def test_newton_polytope_constant():
    P = newton_polytope(LaurentPoly.constant(7, ("y1", "y2")))
    assert P.vertices == ((0, 0),)


def test_newton_polytope_clifford_triangle():
    y1, y2 = LaurentPoly.gens(("y1", "y2"))
    P = newton_polytope(y1 + y2 - (y1 * y2) ** -1)
    assert set(P.vertices) == {(1, 0), (0, 1), (-1, -1)}


def test_hull_drops_interior_and_edge_points():
    P = LatticePolytope.from_points(
        [(0, 0), (2, 0), (0, 2), (1, 0), (0, 1), (1, 1)])
    assert set(P.vertices) == {(0, 0), (2, 0), (0, 2)}


def test_hull_matches_monotone_chain_oracle():
    rng = random.Random(2718)
    for _ in range(200):
        pts = [(rng.randint(-6, 6), rng.randint(-6, 6))
               for _ in range(rng.randint(1, 10))]
        P = LatticePolytope.from_points(pts)
        assert sorted(P.vertices) == sorted(hull2d(pts))


def test_lattice_count_3d_matches_membership_oracle():
    rng = random.Random(31415)
    done = 0
    while done < 12:
        pts = [tuple(rng.randint(-2, 3) for _ in range(3))
               for _ in range(rng.randint(4, 7))]
        P = LatticePolytope.from_points(pts)
        if P.affine_dim != 3:
            continue
        los = [min(v[i] for v in P.vertices) for i in range(3)]
        his = [max(v[i] for v in P.vertices) for i in range(3)]
        count = 0
        for x in range(los[0], his[0] + 1):
            for y in range(los[1], his[1] + 1):
                for z in range(los[2], his[2] + 1):
                    if P.contains((x, y, z)):
                        count += 1
        assert P.lattice_point_count() == count
        done += 1


def test_minkowski_point_translates():
    P = LatticePolytope(2, [(0, 0), (1, 0), (0, 1)])
    Q = LatticePolytope(2, [(3, 4)])
    assert minkowski_sum(P, Q) == P.translate((3, 4))


def test_minkowski_segments_make_square():
    S1 = LatticePolytope(2, [(0, 0), (1, 0)])
    S2 = LatticePolytope(2, [(0, 0), (0, 1)])
    assert set(minkowski_sum(S1, S2).vertices) == {(0, 0), (1, 0), (0, 1), (1, 1)}


def test_minkowski_matches_product_newton():
    y1, y2 = LaurentPoly.gens(("y1", "y2"))
    f, g = 1 + y1, 1 + y2
    assert newton_polytope(f * g) == minkowski_sum(newton_polytope(f),
                                                   newton_polytope(g))


def test_minkowski_dimension_mismatch():
    P = LatticePolytope(2, [(0, 0)])
    Q = LatticePolytope(3, [(0, 0, 0)])
    with pytest.raises(DimensionMismatch):
        minkowski_sum(P, Q)


def test_ostrowski_random_pairs():
    rng = random.Random(101)
    for trial in range(60):
        nvars = 2 if trial % 2 == 0 else 3
        f = _random_laurent(rng, nvars)
        g = _random_laurent(rng, nvars)
        assert newton_polytope(f * g) == \
            minkowski_sum(newton_polytope(f), newton_polytope(g))


def _random_laurent(rng, nvars, span=3):
    vs = tuple("y%d" % i for i in range(1, nvars + 1))
    terms = {}
    for _ in range(rng.randint(2, 5)):
        e = tuple(rng.randint(-span, span) for _ in range(nvars))
        terms[e] = F(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 2]))
    return LaurentPoly(vs, terms)


# --------------------------------------------------------------------------
# invariants
# --------------------------------------------------------------------------

def test_invariants_clifford_triangle():
    P = LatticePolytope(2, [(1, 0), (0, 1), (-1, -1)])
    inv = polytope_invariants(P)
    assert inv.normalized_volume == 3
    assert inv.lattice_point_count == 4
    assert inv.edge_lattice_lengths == (1, 1, 1)
    assert inv.vertex_count == 3


def test_invariants_unit_triangle():
    P = LatticePolytope(2, [(0, 0), (1, 0), (0, 1)])
    inv = polytope_invariants(P)
    assert inv.normalized_volume == 1
    assert inv.lattice_point_count == 3
    assert inv.edge_lattice_lengths == (1, 1, 1)


def test_invariants_segment():
    P = LatticePolytope(1, [(0,), (4,)])
    inv = polytope_invariants(P)
    assert inv.edge_lattice_lengths == (4,)
    assert inv.lattice_point_count == 5
    assert inv.normalized_volume == 4     # full-dimensional in ambient dim 1


def test_invariants_lower_dimensional_flagged():
    P = LatticePolytope(2, [(0, 0), (2, 2)])
    inv = polytope_invariants(P)
    assert inv.affine_dim == 1
    assert inv.normalized_volume == 0
    assert inv.edge_lattice_lengths == (2,)
    assert inv.lattice_point_count == 3


def test_volume_and_count_match_oracles_2d():
    rng = random.Random(71)
    for _ in range(30):
        pts = [(rng.randint(-4, 4), rng.randint(-4, 4))
               for _ in range(rng.randint(3, 7))]
        P = LatticePolytope.from_points(pts)
        if P.affine_dim != 2:
            continue
        cycle = ccw_oracle(P)
        assert P.normalized_volume() == shoelace_doubled(cycle)
        assert P.lattice_point_count() == len(box_lattice_points(cycle))


def test_volume_3d_known_values():
    cube = LatticePolytope(3, list(itertools.product((0, 1), repeat=3)))
    assert cube.normalized_volume() == 6
    assert cube.lattice_point_count() == 8
    simplex = LatticePolytope(3, [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert simplex.normalized_volume() == 1
    assert simplex.lattice_point_count() == 4
    big = LatticePolytope(3, [(0, 0, 0), (2, 0, 0), (0, 2, 0), (0, 0, 2)])
    assert big.normalized_volume() == 8
    assert big.lattice_point_count() == 10


def test_cube_edge_structure():
    cube = LatticePolytope(3, list(itertools.product((0, 1), repeat=3)))
    edges = cube.edges()
    assert len(edges) == 12
    assert cube.edge_lattice_lengths() == (1,) * 12
    doubled = LatticePolytope(3, list(itertools.product((0, 2), repeat=3)))
    assert doubled.edge_lattice_lengths() == (2,) * 12


def test_octahedron_structure():
    octa = LatticePolytope(3, [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0),
                               (0, 0, 1), (0, 0, -1)])
    assert len(octa.edges()) == 12
    assert octa.normalized_volume() == 8      # euclidean volume 4/3
    assert octa.lattice_point_count() == 7


def test_sheared_cube_keeps_volume_and_count():
    cube = LatticePolytope(3, list(itertools.product((0, 1), repeat=3)))
    shear = [[1, 2, 0], [0, 1, -1], [0, 0, 1]]
    Q = cube.transform(shear).translate((4, -1, 2))
    assert Q.normalized_volume() == 6
    assert Q.lattice_point_count() == 8
    assert Q.edge_lattice_lengths() == cube.edge_lattice_lengths()


def test_invariance_under_unimodular_and_translation():
    rng = random.Random(83)
    for trial in range(40):
        nvars = 2 if trial % 2 == 0 else 3
        pts = [tuple(rng.randint(-3, 3) for _ in range(nvars))
               for _ in range(rng.randint(2, 6))]
        P = LatticePolytope.from_points(pts)
        M = random_unimodular(nvars, seed=trial)
        t = tuple(rng.randint(-5, 5) for _ in range(nvars))
        Q = P.transform(M).translate(t)
        assert polytope_invariants(P) == polytope_invariants(Q)


# --------------------------------------------------------------------------
# distinctness certificates
# --------------------------------------------------------------------------

def test_certify_distinct_by_edge_lengths():
    P = LatticePolytope(2, [(1, 0), (0, 1), (-1, -1)])
    Q = LatticePolytope(2, [(0, 0), (3, 0), (0, 1)])
    verdict = certify_distinct(P, Q)
    assert verdict.kind == "distinct"
    assert verdict.witness == "edge_lattice_lengths"


def test_certify_distinct_unknown_for_unimodular_image():
    P = LatticePolytope(2, [(1, 0), (0, 1), (-1, -1)])
    Q = P.transform([[2, 1], [1, 1]]).translate((3, -2))
    assert certify_distinct(P, Q).kind == "unknown"


def test_certify_distinct_unknown_for_translate():
    P = LatticePolytope(2, [(1, 0), (0, 1), (-1, -1)])
    assert certify_distinct(P, P.translate((1, 1))).kind == "unknown"


def test_certify_never_distinct_on_equivalent_random():
    rng = random.Random(97)
    for trial in range(40):
        pts = [(rng.randint(-3, 3), rng.randint(-3, 3))
               for _ in range(rng.randint(2, 6))]
        P = LatticePolytope.from_points(pts)
        Q = P.transform(random_unimodular(2, seed=1000 + trial)) \
            .translate((rng.randint(-4, 4), rng.randint(-4, 4)))
        assert certify_distinct(P, Q).kind == "unknown"


# --------------------------------------------------------------------------
# indecomposability
# --------------------------------------------------------------------------

def test_unit_triangle_indecomposable():
    assert indecomposable_2d(LatticePolytope(2, [(0, 0), (1, 0), (0, 1)]))


def test_unit_square_decomposable():
    assert not indecomposable_2d(
        LatticePolytope(2, [(0, 0), (1, 0), (0, 1), (1, 1)]))


def test_point_indecomposable():
    assert indecomposable_2d(LatticePolytope(2, [(5, -3)]))


def test_segments():
    assert indecomposable_2d(LatticePolytope(2, [(0, 0), (1, 1)]))
    assert not indecomposable_2d(LatticePolytope(2, [(0, 0), (2, 2)]))


def test_indecomposable_requires_dim_2():
    with pytest.raises(NotTwoDimensionalInput):
        indecomposable_2d(LatticePolytope(3, [(0, 0, 0), (1, 0, 0)]))


def test_indecomposable_agrees_with_bruteforce():
    cases = [
        [(0, 0), (1, 0), (0, 1)],
        [(0, 0), (1, 0), (0, 1), (1, 1)],
        [(1, 0), (0, 1), (-1, -1)],
        [(0, 0), (2, 0), (0, 2)],
        [(0, 0), (2, 1), (1, 2)],
        [(0, 0), (1, 0), (1, 1), (0, 2)],
        [(0, 0), (2, 0), (2, 1), (0, 1)],
        [(0, 0), (3, 0), (0, 1)],
        [(0, 0), (2, 0), (1, 2)],
        [(0, 0), (1, 0), (2, 1), (2, 2), (1, 2), (0, 1)],
    ]
    rng = random.Random(7)
    while len(cases) < 18:
        pts = [(rng.randint(0, 3), rng.randint(0, 3))
               for _ in range(rng.randint(3, 6))]
        P = LatticePolytope.from_points(pts)
        if P.affine_dim == 2 and len(box_lattice_points(ccw_oracle(P))) <= 12:
            cases.append(list(P.vertices))
    for verts in cases:
        P = LatticePolytope.from_points(verts)
        if P.affine_dim != 2:
            continue
        assert indecomposable_2d(P) == (not decomposable_bruteforce(P)), verts


def test_ccw_cycle_is_convex():
    rng = random.Random(29)
    for _ in range(20):
        pts = [(rng.randint(-4, 4), rng.randint(-4, 4)) for _ in range(6)]
        P = LatticePolytope.from_points(pts)
        if P.affine_dim != 2:
            continue
        cycle = ccw_vertex_cycle(P)
        n = len(cycle)
        for i in range(n):
            assert _cross(cycle[i], cycle[(i + 1) % n], cycle[(i + 2) % n]) > 0


# --------------------------------------------------------------------------
# irreducibility certificates
# --------------------------------------------------------------------------

def test_certificate_unit_triangle_irreducible():
    y1, y2 = LaurentPoly.gens(("y1", "y2"))
    assert irreducibility_certificate(1 + y1 + y2).kind == "irreducible"


def test_certificate_product_inconclusive_with_factorization():
    y1, y2 = LaurentPoly.gens(("y1", "y2"))
    f = (1 - y1) * (1 - y2)
    verdict = irreducibility_certificate(f)
    assert verdict.kind == "inconclusive"
    # the library itself exhibits the factorization
    assert (1 - y1) * (1 - y2) == f


def test_certificate_cleared_projective_plane_potential():
    y1, y2 = LaurentPoly.gens(("y1", "y2"))
    f = 1 + y1 ** 2 * y2 + y1 * y2 ** 2
    assert irreducibility_certificate(f).kind == "irreducible"


def test_certificate_suspension_route():
    vs = ("y1", "y2", "y3")
    y1, y2, y3 = LaurentPoly.gens(vs)
    f = 1 + y1 + y2 + y3
    verdict = irreducibility_certificate(f, ("y3",))
    assert verdict.kind == "irreducible"


def test_certificate_suspension_over_clifford_facet():
    vs = ("y1", "y2", "y3")
    y1, y2, y3 = LaurentPoly.gens(vs)
    f = 1 + y1 ** 2 * y2 + y1 * y2 ** 2 + y3
    assert irreducibility_certificate(f, ("y3",)).kind == "irreducible"


def test_certificate_double_suspension():
    vs = ("y1", "y2", "y3", "y4")
    y1, y2, y3, y4 = LaurentPoly.gens(vs)
    f = 1 + y1 + y2 + y3 + y4
    assert irreducibility_certificate(f, ("y4", "y3")).kind == "irreducible"


def test_certificate_rejects_high_apex():
    vs = ("y1", "y2", "y3")
    y1, y2, y3 = LaurentPoly.gens(vs)
    f = 1 + y1 + y2 + y3 ** 2
    verdict = irreducibility_certificate(f, ("y3",))
    assert verdict.kind == "inconclusive"


def test_certificate_rejects_non_simplex():
    vs = ("y1", "y2", "y3")
    y1, y2, y3 = LaurentPoly.gens(vs)
    f = 1 + y1 + y2 + y3 + y1 * y2 * y3
    verdict = irreducibility_certificate(f, ("y3",))
    assert verdict.kind == "inconclusive"


def test_certificate_never_claims_irreducible_for_known_products():
    rng = random.Random(53)
    vs = ("y1", "y2")
    for _ in range(25):
        f = _random_laurent(rng, 2)
        g = _random_laurent(rng, 2)
        if f.is_monomial() or g.is_monomial():
            continue
        verdict = irreducibility_certificate(f * g)
        assert verdict.kind == "inconclusive"
