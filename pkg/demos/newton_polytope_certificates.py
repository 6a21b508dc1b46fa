#!/usr/bin/env python3
"""Newton polytopes as isotopy obstructions.

Two Legendrian torus lifts with unimodularly inequivalent Newton polytopes
of their relations cannot be isotopic.  Unimodular equivalence is hard to
decide, but inequivalence is easy to certify: normalized volume, lattice
point count, and edge lattice lengths are all invariant under GL(n, Z)
plus translation, so any difference is a proof.

Irreducibility of a relation is certified through its polytope too: an
integrally indecomposable Newton polygon forces irreducibility (any
factorization would split the polytope as a Minkowski sum), and in higher
dimension a simplex that suspends a certified facet at lattice height one
inherits irreducibility from the facet.  Both certificates are
conservative: they never claim reducibility, and a decomposable polygon
simply yields "inconclusive" - sometimes rightly so, as the product
example and the reducible four-term relation below show.
"""

from augvar.laurent import LaurentPoly
from augvar.polytope import (
    certify_distinct,
    irreducibility_certificate,
    minkowski_sum,
    newton_polytope,
    polytope_invariants,
)
from augvar.potentials import (
    markov_fibonacci_check,
    markov_generate,
    product_spheres_relation,
    toric_relation,
)


def invariants_table():
    print("== polytope invariants ==")
    spec = toric_relation([(1, 0), (0, 1), (-1, -1)], vertex=(-1, -1))
    P = newton_polytope(spec.base_potential)
    Q = newton_polytope(spec.lifted_relation)
    long_edge = LaurentPoly(("y1", "y2"),
                            {(0, 0): 1, (3, 0): 1, (0, 1): 1})
    R = newton_polytope(long_edge)
    for name, poly in (("projective-plane potential", P),
                       ("cleared relation", Q),
                       ("edge-length {1,1,3} triangle", R)):
        inv = polytope_invariants(poly)
        print("%-30s vertices %s" % (name, list(poly.vertices)))
        print("%-30s volume %d, lattice points %d, edge lengths %s"
              % ("", inv.normalized_volume, inv.lattice_point_count,
                 list(inv.edge_lattice_lengths)))
    print("distinct(potential, long-edge): %s"
          % (certify_distinct(P, R),))
    print("distinct(potential, translate): %s"
          % (certify_distinct(P, P.translate((2, -1))),))
    print()


def irreducibility_gallery():
    print("== irreducibility certificates ==")
    y1, y2 = LaurentPoly.gens(("y1", "y2"))
    cases = [
        ("unit triangle relation", 1 + y1 + y2, ()),
        ("cleared projective-plane relation", 1 + y1 ** 2 * y2 + y1 * y2 ** 2, ()),
        ("product (1-y1)(1-y2)", (1 - y1) * (1 - y2), ()),
    ]
    for name, f, chain in cases:
        verdict = irreducibility_certificate(f, chain)
        print("%-36s %s  (%s)" % (name, verdict.kind, verdict.witness))
    # the relation for the anticanonical lift of the sphere product is a
    # counterexample to a naive irreducibility guess: it factors exactly
    anti = product_spheres_relation("anticanonical").lifted_relation
    factored = (1 - y1 * y2 ** -1) * (1 + y1 * y2)
    print("%-36s %s  (%s)" % ("anticanonical sphere-product lift",
                              irreducibility_certificate(anti).kind,
                              irreducibility_certificate(anti).witness))
    print("    it factors exactly: %s == (1 - y1/y2)(1 + y1*y2): %s"
          % (anti, factored == anti))
    # a higher-dimensional suspension certified by peeling a variable
    vs = ("y1", "y2", "y3")
    z1, z2, z3 = LaurentPoly.gens(vs)
    susp = 1 + z1 ** 2 * z2 + z1 * z2 ** 2 + z3
    print("%-36s %s" % ("height-1 suspension in 3 variables",
                        irreducibility_certificate(susp, ("y3",)).kind))
    print()


def ostrowski_demo():
    print("== Newton polytopes multiply Minkowski-wise ==")
    y1, y2 = LaurentPoly.gens(("y1", "y2"))
    f = 1 + y1 - y2 ** -1
    g = 2 - y1 * y2 + y1 ** -2
    lhs = newton_polytope(f * g)
    rhs = minkowski_sum(newton_polytope(f), newton_polytope(g))
    print("Newt(fg) vertices:          %s" % (list(lhs.vertices),))
    print("Newt(f)+Newt(g) vertices:   %s" % (list(rhs.vertices),))
    print("equal: %s" % (lhs == rhs))
    print()


def markov_lifts():
    print("== Markov triples indexing exotic torus lifts ==")
    triples = markov_generate(1000)
    print("triples with max entry <= 1000: %d" % len(triples))
    for t in triples:
        tag = ""
        if t.a == 1:
            tag = "  (1,b,c): b,c Fibonacci -> %s" % markov_fibonacci_check(t)
        print("  %-15s%s" % (t.as_tuple(), tag))
    print()


def main():
    invariants_table()
    irreducibility_gallery()
    ostrowski_demo()
    markov_lifts()


if __name__ == "__main__":
    main()
