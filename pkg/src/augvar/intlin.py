"""Exact integer and rational linear algebra.

Small dense routines over Fraction / int used by the polytope and Laurent
machinery: determinants, inverses of unimodular matrices, rational null
spaces, saturated integer kernels, completion of a primitive vector to a
lattice basis, and a phase-one simplex for exact feasibility questions
(point-in-hull tests and finding interior vectors of dual cones).

Everything is exact; inputs are tiny, so no effort is spent on asymptotics.
"""

from fractions import Fraction
from math import gcd


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_vec(M, v):
    return tuple(sum(r[j] * v[j] for j in range(len(v))) for r in M)


def mat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    return [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(m)]
            for i in range(n)]


def det(M):
    """Determinant by exact fraction-free-ish elimination."""
    n = len(M)
    A = [[Fraction(x) for x in row] for row in M]
    sign = 1
    d = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            sign = -sign
        d *= A[col][col]
        inv = 1 / A[col][col]
        for r in range(col + 1, n):
            f = A[r][col] * inv
            if f == 0:
                continue
            for c in range(col, n):
                A[r][c] -= f * A[col][c]
    return sign * d


def is_unimodular(M):
    if not M or len(M) != len(M[0]):
        return False
    if any(not isinstance(x, int) for row in M for x in row):
        return False
    return abs(det(M)) == 1


def mat_inverse(M):
    """Exact inverse via Gauss-Jordan.  Integer entries are returned as
    ints when the inverse is integral (the unimodular case)."""
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
         for i, row in enumerate(M)]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        A[col], A[piv] = A[piv], A[col]
        inv = 1 / A[col][col]
        A[col] = [x * inv for x in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    out = [row[n:] for row in A]
    if all(x.denominator == 1 for row in out for x in row):
        return [[int(x) for x in row] for row in out]
    return out


def rref(rows):
    """Reduced row echelon form over Q.  Returns (rows, pivot columns)."""
    A = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    ncols = len(A[0]) if A else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A[:r], pivots


def rational_nullspace(rows):
    """Basis of {x : rows . x = 0} over Q, as integer primitive vectors."""
    if not rows:
        return []
    n = len(rows[0])
    R, pivots = rref(rows)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * n
        vec[f] = Fraction(1)
        for i, p in enumerate(pivots):
            vec[p] = -R[i][f]
        basis.append(primitive_vector(vec))
    return basis


def primitive_vector(v):
    """Scale a rational vector to a primitive integer vector (gcd 1)."""
    den = 1
    for x in v:
        x = Fraction(x)
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def integer_kernel(rows):
    """Basis of the integer kernel {x in Z^n : rows . x = 0}.

    Column-reduction by unimodular operations: track U with A U = H; the
    columns of U matching zero columns of H form the kernel basis.  The
    basis is automatically saturated.
    """
    if not rows:
        return []
    m, n = len(rows), len(rows[0])
    A = [list(r) for r in rows]
    U = identity_matrix(n)

    def col(M, j):
        return [M[i][j] for i in range(len(M))]

    def addcol(M, dst, src, f):
        for i in range(len(M)):
            M[i][dst] += f * M[i][src]

    def swapcol(M, a, b):
        for i in range(len(M)):
            M[i][a], M[i][b] = M[i][b], M[i][a]

    row = 0
    colidx = 0
    while row < m and colidx < n:
        # find a nonzero entry in this row at column >= colidx
        j = next((c for c in range(colidx, n) if A[row][c] != 0), None)
        if j is None:
            row += 1
            continue
        swapcol(A, colidx, j)
        swapcol(U, colidx, j)
        # gcd chain across the remaining columns
        for c in range(colidx + 1, n):
            while A[row][c] != 0:
                q = A[row][colidx] // A[row][c]
                addcol(A, colidx, c, -q)
                addcol(U, colidx, c, -q)
                swapcol(A, colidx, c)
                swapcol(U, colidx, c)
        row += 1
        colidx += 1
    kernel = []
    for c in range(n):
        if all(A[i][c] == 0 for i in range(m)):
            kernel.append(tuple(col(U, c)))
    return kernel


def complete_primitive_row(q):
    """A unimodular integer matrix whose first row is the primitive q.

    Column-reduce q to (1, 0, ..., 0) by unimodular operations V; then the
    first row of V^{-1} is q and its rows form the sought basis.
    """
    n = len(q)
    row = list(q)
    V = identity_matrix(n)

    def addcol(M, dst, src, f):
        for i in range(len(M)):
            M[i][dst] += f * M[i][src]

    def swapcol(M, a, b):
        for i in range(len(M)):
            M[i][a], M[i][b] = M[i][b], M[i][a]

    def negcol(M, a):
        for i in range(len(M)):
            M[i][a] = -M[i][a]

    for c in range(1, n):
        while row[c] != 0:
            if row[0] == 0 or abs(row[c]) < abs(row[0]):
                row[0], row[c] = row[c], row[0]
                swapcol(V, 0, c)
            q_ = row[c] // row[0]
            row[c] -= q_ * row[0]
            addcol(V, c, 0, -q_)
    if row[0] == -1:
        row[0] = 1
        negcol(V, 0)
    if row[0] != 1:
        raise ValueError("vector %r is not primitive" % (q,))
    return mat_inverse(V)


# --------------------------------------------------------------------------
# exact phase-one simplex
# --------------------------------------------------------------------------

def phase1_feasible(A, b):
    """Solve A x = b, x >= 0 over Q exactly.

    Returns a feasible x as a list of Fractions, or None.  Phase-one
    simplex with Bland's rule, which cannot cycle.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    T = []
    rhs = []
    for i in range(m):
        row = [Fraction(x) for x in A[i]]
        bi = Fraction(b[i])
        if bi < 0:
            row = [-x for x in row]
            bi = -bi
        T.append(row + [Fraction(1 if j == i else 0) for j in range(m)])
        rhs.append(bi)
    basis = [n + i for i in range(m)]
    total = n + m
    # objective: minimize sum of artificials; reduced costs
    cost = [Fraction(0)] * total
    for j in range(n, total):
        cost[j] = Fraction(1)
    # z_j - c_j computed from scratch each pivot (sizes are tiny)
    while True:
        # reduced costs for current basis
        y = [cost[basis[i]] for i in range(m)]
        entering = None
        for j in range(total):
            if j in basis:
                continue
            zj = sum(y[i] * T[i][j] for i in range(m))
            if zj - cost[j] > 0:
                entering = j
                break  # Bland: first improving index
        if entering is None:
            break
        leaving = None
        best = None
        for i in range(m):
            if T[i][entering] > 0:
                ratio = rhs[i] / T[i][entering]
                if best is None or ratio < best or \
                        (ratio == best and basis[i] < basis[leaving]):
                    best = ratio
                    leaving = i
        if leaving is None:
            return None  # unbounded phase-one cannot happen with b >= 0
        piv = T[leaving][entering]
        T[leaving] = [x / piv for x in T[leaving]]
        rhs[leaving] /= piv
        for i in range(m):
            if i != leaving and T[i][entering] != 0:
                f = T[i][entering]
                T[i] = [x - f * y2 for x, y2 in zip(T[i], T[leaving])]
                rhs[i] -= f * rhs[leaving]
        basis[leaving] = entering
    value = sum(rhs[i] for i in range(m) if basis[i] >= n)
    if value != 0:
        return None
    x = [Fraction(0)] * n
    for i in range(m):
        if basis[i] < n:
            x[basis[i]] = rhs[i]
    return x


def in_convex_hull(point, points):
    """Exact test whether point lies in the convex hull of points."""
    pts = list(points)
    if not pts:
        return False
    n = len(point)
    A = [[Fraction(p[i]) for p in pts] for i in range(n)]
    A.append([Fraction(1)] * len(pts))
    b = [Fraction(x) for x in point] + [Fraction(1)]
    return phase1_feasible(A, b) is not None


def strict_dual_vector(generators):
    """An integer vector q with <q, u> >= 1 for every generator u.

    Exists exactly when the cone spanned by the generators is pointed.
    Returns None otherwise.  Used to fit a tangent cone into the positive
    orthant.
    """
    gens = [g for g in generators if any(x != 0 for x in g)]
    if not gens:
        return None
    n = len(gens[0])
    # variables: q+ (n), q- (n), slack s (m);  U q+ - U q- - s = 1
    m = len(gens)
    A = []
    for i, u in enumerate(gens):
        row = [Fraction(x) for x in u] + [Fraction(-x) for x in u]
        row += [Fraction(-1) if j == i else Fraction(0) for j in range(m)]
        A.append(row)
    b = [Fraction(1)] * m
    sol = phase1_feasible(A, b)
    if sol is None:
        return None
    qvec = [sol[i] - sol[n + i] for i in range(n)]
    den = 1
    for x in qvec:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in qvec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g:
        ints = [x // g for x in ints]
    return tuple(ints)


def fit_cone_to_orthant(generators):
    """Unimodular M with M u componentwise >= 0 for all generators u.

    Take a strict interior vector q of the dual cone, complete it to a
    lattice basis, then shear the remaining basis rows by multiples of q
    until they are nonnegative on every generator.  Returns None when the
    cone is not pointed.
    """
    gens = [tuple(g) for g in generators if any(x != 0 for x in g)]
    if not gens:
        return identity_matrix(len(generators[0])) if generators else None
    n = len(gens[0])
    q = strict_dual_vector(gens)
    if q is None:
        return None
    B = complete_primitive_row(q)
    qdots = {u: sum(a * b for a, b in zip(q, u)) for u in gens}
    M = [list(q)]
    for i in range(1, n):
        row = B[i]
        k = 0
        for u in gens:
            d = sum(a * b for a, b in zip(row, u))
            if d < 0:
                # smallest k with d + k*<q,u> >= 0
                k = max(k, (-d + qdots[u] - 1) // qdots[u])
        M.append([row[j] + k * q[j] for j in range(n)])
    return M
