"""Small exact linear algebra helpers: Fraction solves, integer adjugates,
Hermite and Smith normal forms.

Everything here works on nested tuples/lists of ints or Fractions; matrices
are row-major lists of rows.  Sizes stay tiny (rank <= 9), so the quadratic
and cubic algorithms below are plenty.
"""

from __future__ import annotations

from fractions import Fraction


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    return [
        [sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
        for i in range(rows)
    ]


def vec_mat(v, m):
    """Row vector times matrix."""
    cols = len(m[0])
    return tuple(sum(v[k] * m[k][j] for k in range(len(v))) for j in range(cols))


def solve_exact(a, b):
    """Solve a x = b for square Fraction matrix a, column b.  Returns a list
    of Fractions; raises ValueError if singular."""
    n = len(a)
    m = [[Fraction(a[i][j]) for j in range(n)] + [Fraction(b[i])] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular system")
        m[col], m[pivot] = m[pivot], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]


def invert_exact(a):
    """Exact inverse of a square integer/Fraction matrix."""
    n = len(a)
    m = [[Fraction(a[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        m[col], m[pivot] = m[pivot], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def int_det(a):
    """Determinant of an integer matrix via fraction-free elimination."""
    n = len(a)
    m = [list(row) for row in a]
    det = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        for r in range(col + 1, n):
            # Bareiss-style elimination keeps entries integral.
            f = Fraction(m[r][col], m[col][col])
            m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    for i in range(n):
        det *= m[i][i]
    det = Fraction(det)
    assert det.denominator == 1
    return int(det)


def hermite_normal_form(rows):
    """Row-style HNF of an integer matrix (list of row tuples).

    Returns a tuple of nonzero rows in canonical form: row-echelon, positive
    pivots, entries above each pivot reduced into [0, pivot).  Two generator
    sets span the same row lattice iff their HNFs are equal.
    """
    work = [list(r) for r in rows if any(r)]
    if not work:
        return ()
    ncols = len(work[0])
    done = []
    col = 0
    while work and col < ncols:
        piv_idx = min(
            (i for i, r in enumerate(work) if r[col] != 0),
            key=lambda i: abs(work[i][col]),
            default=None,
        )
        if piv_idx is None:
            col += 1
            continue
        piv = work.pop(piv_idx)
        reduced = True
        for r in work:
            if r[col] != 0:
                q = r[col] // piv[col]
                for j in range(ncols):
                    r[j] -= q * piv[j]
                if r[col] != 0:
                    reduced = False
        if not reduced:
            work.append(piv)
            continue
        work = [r for r in work if any(r)]
        if piv[col] < 0:
            piv = [-x for x in piv]
        done.append(piv)
        col += 1
    assert not work
    # Reduce entries above pivots.
    for i in reversed(range(len(done))):
        pcol = next(j for j, x in enumerate(done[i]) if x != 0)
        for k in range(i):
            q = done[k][pcol] // done[i][pcol]
            if q:
                done[k] = [x - q * y for x, y in zip(done[k], done[i])]
    return tuple(tuple(r) for r in done)


def smith_normal_form(a):
    """Smith normal form with transforms: returns (d, u, v) where
    u @ a @ v = diag(d) padded to the shape of a, u and v unimodular.

    d lists the diagonal entries (nonnegative, each dividing the next).
    """
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    m = [list(row) for row in a]
    u = identity_matrix(nrows)
    v = identity_matrix(ncols)

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in m:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, f):
        m[dst] = [x + f * y for x, y in zip(m[dst], m[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, f):
        for r in m:
            r[dst] += f * r[src]
        for r in v:
            r[dst] += f * r[src]

    def negate_row(i):
        m[i] = [-x for x in m[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(nrows, ncols):
        # Find a nonzero pivot in the remaining block.
        pos = None
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if m[i][j] != 0 and (best is None or abs(m[i][j]) < best):
                    best = abs(m[i][j])
                    pos = (i, j)
        if pos is None:
            break
        swap_rows(t, pos[0])
        swap_cols(t, pos[1])
        while True:
            cleared = True
            for i in range(t + 1, nrows):
                if m[i][t] != 0:
                    q = m[i][t] // m[t][t]
                    add_row(t, i, -q)
                    if m[i][t] != 0:
                        swap_rows(t, i)
                        cleared = False
            for j in range(t + 1, ncols):
                if m[t][j] != 0:
                    q = m[t][j] // m[t][t]
                    add_col(t, j, -q)
                    if m[t][j] != 0:
                        swap_cols(t, j)
                        cleared = False
            if cleared:
                break
        if m[t][t] < 0:
            negate_row(t)
        # Divisibility: fold any non-multiple into the pivot position.
        bad = None
        for i in range(t + 1, nrows):
            for j in range(t + 1, ncols):
                if m[i][j] % m[t][t] != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            add_row(bad, t, 1)
            continue
        t += 1
    d = [m[i][i] for i in range(min(nrows, ncols))]
    while d and d[-1] == 0:
        d.pop()
    return d, u, v
