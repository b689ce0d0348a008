"""Small dense matrices over a finite ring given by the shared ring protocol.

Matrices are tuples of row tuples of ring elements; the ring object supplies
add/sub/neg/mul/inv/zero_elt/one_elt (FiniteField and QuadExtension both
qualify).  Only 2x2 and 3x3 are needed, so inverses use closed adjugates.
"""

from __future__ import annotations


def identity(ring, n=3):
    z, o = ring.zero_elt(), ring.one_elt()
    return tuple(tuple(o if i == j else z for j in range(n)) for i in range(n))


def scalar(ring, c, n=3):
    z = ring.zero_elt()
    return tuple(tuple(c if i == j else z for j in range(n)) for i in range(n))


def mat_mul(ring, a, b):
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            s = ring.zero_elt()
            for k in range(n):
                s = ring.add(s, ring.mul(a[i][k], b[k][j]))
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def mat_add(ring, a, b):
    return tuple(tuple(ring.add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(ring, a, b):
    return tuple(tuple(ring.sub(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(ring, c, a):
    return tuple(tuple(ring.mul(c, x) for x in row) for row in a)


def transpose(a):
    n = len(a)
    return tuple(tuple(a[j][i] for j in range(n)) for i in range(n))


def mat_conj(ext, a):
    """Entrywise involution of a matrix over a quadratic extension."""
    return tuple(tuple(ext.conj(x) for x in row) for row in a)


def det(ring, a):
    n = len(a)
    if n == 2:
        return ring.sub(ring.mul(a[0][0], a[1][1]), ring.mul(a[0][1], a[1][0]))
    if n == 3:
        m = ring.mul
        t1 = m(a[0][0], ring.sub(m(a[1][1], a[2][2]), m(a[1][2], a[2][1])))
        t2 = m(a[0][1], ring.sub(m(a[1][0], a[2][2]), m(a[1][2], a[2][0])))
        t3 = m(a[0][2], ring.sub(m(a[1][0], a[2][1]), m(a[1][1], a[2][0])))
        return ring.add(ring.sub(t1, t2), t3)
    raise ValueError("det implemented for 2x2 and 3x3 only")


def trace(ring, a):
    s = ring.zero_elt()
    for i in range(len(a)):
        s = ring.add(s, a[i][i])
    return s


def adjugate(ring, a):
    n = len(a)
    m, sub = ring.mul, ring.sub
    if n == 2:
        return ((a[1][1], ring.neg(a[0][1])), (ring.neg(a[1][0]), a[0][0]))
    if n == 3:
        def c(i1, j1, i2, j2):
            return sub(m(a[i1][j1], a[i2][j2]), m(a[i1][j2], a[i2][j1]))
        return (
            (c(1, 1, 2, 2), ring.neg(c(0, 1, 2, 2)), c(0, 1, 1, 2)),
            (ring.neg(c(1, 0, 2, 2)), c(0, 0, 2, 2), ring.neg(c(0, 0, 1, 2))),
            (c(1, 0, 2, 1), ring.neg(c(0, 0, 2, 1)), c(0, 0, 1, 1)),
        )
    raise ValueError("adjugate implemented for 2x2 and 3x3 only")


def mat_inv(ring, a):
    d = det(ring, a)
    return mat_scale(ring, ring.inv(d), adjugate(ring, a))


def mat_pow(ring, a, e):
    if e < 0:
        return mat_pow(ring, mat_inv(ring, a), -e)
    out = identity(ring, len(a))
    while e:
        if e & 1:
            out = mat_mul(ring, out, a)
        a = mat_mul(ring, a, a)
        e >>= 1
    return out


def mat_vec(ring, a, v):
    n = len(a)
    out = []
    for i in range(n):
        s = ring.zero_elt()
        for k in range(n):
            s = ring.add(s, ring.mul(a[i][k], v[k]))
        out.append(s)
    return tuple(out)


def vectors_parallel(ring, u, v):
    """True iff all 2x2 minors of (u | v) vanish (over a field: same line)."""
    n = len(u)
    for i in range(n):
        for j in range(i + 1, n):
            lhs = ring.mul(u[i], v[j])
            rhs = ring.mul(u[j], v[i])
            if ring.sub(lhs, rhs) != ring.zero_elt():
                return False
    return True


def nullspace(fieldlike, rows, ncols):
    """Basis of the right nullspace of a matrix over a field.

    ``rows`` is a list of length-``ncols`` tuples.  Gaussian elimination
    with exact field arithmetic; returns a list of basis vectors.
    """
    R = [list(r) for r in rows]
    pivots = []
    col = 0
    rank_row = 0
    while col < ncols and rank_row < len(R):
        pivot = None
        for r in range(rank_row, len(R)):
            if R[r][col] != fieldlike.zero_elt():
                pivot = r
                break
        if pivot is None:
            col += 1
            continue
        R[rank_row], R[pivot] = R[pivot], R[rank_row]
        inv = fieldlike.inv(R[rank_row][col])
        R[rank_row] = [fieldlike.mul(inv, x) for x in R[rank_row]]
        for r in range(len(R)):
            if r != rank_row and R[r][col] != fieldlike.zero_elt():
                f = R[r][col]
                R[r] = [fieldlike.sub(x, fieldlike.mul(f, y))
                        for x, y in zip(R[r], R[rank_row])]
        pivots.append(col)
        rank_row += 1
        col += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [fieldlike.zero_elt()] * ncols
        vec[fc] = fieldlike.one_elt()
        for prow, pcol in enumerate(pivots):
            vec[pcol] = fieldlike.neg(R[prow][fc])
        basis.append(tuple(vec))
    return basis
