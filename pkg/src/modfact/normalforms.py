"""Exact normal forms: Smith form over Euclidean domains, one-sided Hermite form.

The Smith routine works over any commutative Euclidean domain object (the
integers or F_p[t] from :mod:`modfact.rings`) and tracks all four transforms
U, U^-1, V, V^-1 with U*A*V = D.  Pivots are chosen with minimal Euclidean
height, ties broken by lowest (row, col) index, so results are deterministic.

The Hermite routine works at ring level (integers, F_p[x], and the skew
polynomial ring) using left division: it produces U*M = H with H in
row-echelon form and U invertible, suitable for solving v*M = b by
back-substitution.
"""

from __future__ import annotations

from dataclasses import dataclass

from modfact.matrices import Matrix
from modfact.rings import IntegerRing, PolyRing, SkewPolyRing, GroupRing, UnsupportedRing


# ---------------------------------------------------------------------------
# Smith normal form over a Euclidean base domain (lists of lists)
# ---------------------------------------------------------------------------


@dataclass
class SmithResult:
    diag: list
    U: list
    Uinv: list
    V: list
    Vinv: list


def _eye(dom, n):
    out = [[dom.zero] * n for _ in range(n)]
    for i in range(n):
        out[i][i] = dom.one
    return out


def smith(dom, A_rows, ncols=None):
    """Diagonalize over the domain: U*A*V = D with successive divisibility."""
    A = [list(r) for r in A_rows]
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    U, Uinv = _eye(dom, m), _eye(dom, m)
    V, Vinv = _eye(dom, n), _eye(dom, n)

    def row_sub(i, j, q):  # row_i -= q * row_j  (on A and U), Uinv col_j += col_i * q
        for k in range(n):
            A[i][k] = dom.sub(A[i][k], dom.mul(q, A[j][k]))
        for k in range(m):
            U[i][k] = dom.sub(U[i][k], dom.mul(q, U[j][k]))
        for k in range(m):
            Uinv[k][j] = dom.add(Uinv[k][j], dom.mul(Uinv[k][i], q))

    def col_sub(j, i, q):  # col_j -= col_i * q, Vinv row_i += q * row_j
        for k in range(m):
            A[k][j] = dom.sub(A[k][j], dom.mul(A[k][i], q))
        for k in range(n):
            V[k][j] = dom.sub(V[k][j], dom.mul(V[k][i], q))
        for k in range(n):
            Vinv[i][k] = dom.add(Vinv[i][k], dom.mul(q, Vinv[j][k]))

    def row_swap(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]
        for k in range(m):
            Uinv[k][i], Uinv[k][j] = Uinv[k][j], Uinv[k][i]

    def col_swap(i, j):
        for k in range(m):
            A[k][i], A[k][j] = A[k][j], A[k][i]
        for k in range(n):
            V[k][i], V[k][j] = V[k][j], V[k][i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def row_scale(i, u):  # unit u
        for k in range(n):
            A[i][k] = dom.mul(u, A[i][k])
        for k in range(m):
            U[i][k] = dom.mul(u, U[i][k])
        uinv = _unit_inv(dom, u)
        for k in range(m):
            Uinv[k][i] = dom.mul(Uinv[k][i], uinv)

    def find_pivot(t):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if not dom.is_zero(A[i][j]):
                    key = (dom.height(A[i][j]), i, j)
                    if best is None or key < best[0]:
                        best = (key, i, j)
        return (best[1], best[2]) if best else None

    t = 0
    while t < min(m, n):
        piv = find_pivot(t)
        if piv is None:
            break
        if piv[0] != t:
            row_swap(t, piv[0])
        if piv[1] != t:
            col_swap(t, piv[1])
        while True:
            # clear column t with row operations
            restart = False
            for i in range(t + 1, m):
                if not dom.is_zero(A[i][t]):
                    q, r = dom.divmod(A[i][t], A[t][t])
                    row_sub(i, t, q)
                    if not dom.is_zero(r):
                        row_swap(t, i)
                        restart = True
                        break
            if restart:
                continue
            # clear row t with column operations
            for j in range(t + 1, n):
                if not dom.is_zero(A[t][j]):
                    q, r = dom.divmod(A[t][j], A[t][t])
                    col_sub(j, t, q)
                    if not dom.is_zero(r):
                        col_swap(t, j)
                        restart = True
                        break
            if restart:
                continue
            # enforce divisibility of the remaining block by the pivot
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if not dom.divides(A[t][t], A[i][j]):
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            # fold the offending row into row t and keep reducing
            row_sub(t, bad, dom.neg(dom.one))
        t += 1

    for i in range(min(m, n)):
        if not dom.is_zero(A[i][i]):
            _, u = dom.normalize(A[i][i])
            if not dom.is_zero(dom.sub(u, dom.one)):
                row_scale(i, u)

    diag = [A[i][i] for i in range(min(m, n))]
    return SmithResult(diag, U, Uinv, V, Vinv)


def _unit_inv(dom, u):
    # units in ZZ are +-1 (self-inverse); in F_p[t] nonzero constants
    if isinstance(u, int):
        return u
    p = dom.p
    return (pow(u[0], p - 2, p),)


def mat_vec(dom, A, x):
    return [
        _dot(dom, row, x) for row in A
    ]


def _dot(dom, row, x):
    acc = dom.zero
    for a, b in zip(row, x):
        acc = dom.add(acc, dom.mul(a, b))
    return acc


def mat_mul(dom, A, B):
    if not A:
        return []
    n = len(B[0]) if B else 0
    return [
        [_dot(dom, row, [B[k][j] for k in range(len(B))]) for j in range(n)]
        for row in A
    ]


def solve_columns(dom, A, b, ncols=None):
    """One solution x of A x = b over the domain, or None."""
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    if m == 0:
        return [dom.zero] * n
    sm = smith(dom, A)
    c = mat_vec(dom, sm.U, b)
    y = [dom.zero] * n
    for i in range(m):
        d = sm.diag[i] if i < len(sm.diag) else dom.zero
        if dom.is_zero(d):
            if not dom.is_zero(c[i]):
                return None
        else:
            q, r = dom.divmod(c[i], d)
            if not dom.is_zero(r):
                return None
            if i < n:
                y[i] = q
    return mat_vec(dom, sm.V, y)


def kernel_columns(dom, A, ncols=None):
    """Basis (list of columns) of {x : A x = 0}."""
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    if m == 0:
        return [[dom.one if i == j else dom.zero for i in range(n)] for j in range(n)]
    sm = smith(dom, A)
    out = []
    for j in range(n):
        d = sm.diag[j] if j < len(sm.diag) else dom.zero
        if dom.is_zero(d):
            out.append([sm.V[i][j] for i in range(n)])
    return out


def row_kernel(dom, A):
    """Basis (list of rows) of {v : v A = 0}."""
    m = len(A)
    if m == 0:
        return []
    At = [[A[i][j] for i in range(m)] for j in range(len(A[0]))] if A[0] else []
    if not At:
        return [
            [dom.one if i == j else dom.zero for i in range(m)] for j in range(m)
        ]
    return kernel_columns(dom, At)


@dataclass
class QuotientForm:
    """B^rank modulo the row span of a relation matrix, in diagonal coordinates.

    moduli[i] is the invariant annihilating the i-th diagonal generator
    (zero meaning a free summand); generators[i] is that generator written
    in the original coordinates.
    """

    free_rank: int
    torsion: list
    moduli: list
    generators: list


def quotient_row_form(dom, rank, rel_rows):
    if rank == 0:
        return QuotientForm(0, [], [], [])
    if not rel_rows:
        gens = [[dom.one if i == j else dom.zero for i in range(rank)] for j in range(rank)]
        return QuotientForm(rank, [], [dom.zero] * rank, gens)
    sm = smith(dom, rel_rows)
    moduli = []
    for i in range(rank):
        d = sm.diag[i] if i < len(sm.diag) else dom.zero
        moduli.append(d)
    torsion = [d for d in moduli if not dom.is_zero(d) and not dom.is_unit(d)]
    free_rank = sum(1 for d in moduli if dom.is_zero(d))
    generators = [list(sm.Vinv[i]) for i in range(rank)]
    return QuotientForm(free_rank, torsion, moduli, generators)


# ---------------------------------------------------------------------------
# Ring-level wrappers
# ---------------------------------------------------------------------------


def smith_normal_form(ctx, M: Matrix):
    """Invariant factors with transforms for the principal ideal domain kinds."""
    if not isinstance(ctx, (IntegerRing, PolyRing)):
        raise UnsupportedRing(
            f"{ctx.kind}: Smith form needs a PID kind (use hermite_form or expansion)"
        )
    dom = ctx.base_domain
    sm = smith(dom, M.to_lists(), ncols=M.cols)
    U = Matrix.from_rows(ctx, sm.U) if sm.U else Matrix.zero(ctx, 0, 0)
    V = Matrix.from_rows(ctx, sm.V) if sm.V else Matrix.zero(ctx, 0, 0)
    if V.rows != M.cols:
        V = Matrix.identity(ctx, M.cols)
    return list(sm.diag), U, V


def hermite_form(ctx, M: Matrix):
    """Row echelon form H = U*M by left division; works for Euclidean kinds."""
    if isinstance(ctx, GroupRing):
        raise UnsupportedRing("group: no one-sided Euclidean division")
    m, n = M.rows, M.cols
    A = M.to_lists()
    U = [[ctx.one if i == j else ctx.zero for j in range(m)] for i in range(m)]
    Uinv = [[ctx.one if i == j else ctx.zero for j in range(m)] for i in range(m)]

    def row_sub(i, j, q):  # row_i -= q*row_j, q multiplies from the left
        for k in range(n):
            A[i][k] = ctx.sub(A[i][k], ctx.mul(q, A[j][k]))
        for k in range(m):
            U[i][k] = ctx.sub(U[i][k], ctx.mul(q, U[j][k]))
        for k in range(m):
            Uinv[k][j] = ctx.add(Uinv[k][j], ctx.mul(Uinv[k][i], q))

    def row_swap(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]
        for k in range(m):
            Uinv[k][i], Uinv[k][j] = Uinv[k][j], Uinv[k][i]

    def row_scale(i, u, uinv):
        for k in range(n):
            A[i][k] = ctx.mul(u, A[i][k])
        for k in range(m):
            U[i][k] = ctx.mul(u, U[i][k])
        for k in range(m):
            Uinv[k][i] = ctx.mul(Uinv[k][i], uinv)

    r = 0
    for c in range(n):
        while True:
            best = None
            for i in range(r, m):
                if not ctx.is_zero(A[i][c]):
                    key = (ctx.height(A[i][c]), i)
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                break
            if best[1] != r:
                row_swap(r, best[1])
            changed = False
            for i in range(r + 1, m):
                if not ctx.is_zero(A[i][c]):
                    q, rem = ctx.left_divmod(A[i][c], A[r][c])
                    row_sub(i, r, q)
                    if not ctx.is_zero(rem):
                        changed = True
            if not changed:
                break
        if best is not None:
            _, u = ctx.normalize(A[r][c])
            if not ctx.is_zero(ctx.sub(u, ctx.one)):
                row_scale(r, u, _ring_unit_inv(ctx, u))
            for i in range(r):
                if not ctx.is_zero(A[i][c]):
                    q, _ = ctx.left_divmod(A[i][c], A[r][c])
                    if not ctx.is_zero(q):
                        row_sub(i, r, q)
            r += 1
            if r == m:
                break
    H = Matrix.from_rows(ctx, A) if A else Matrix.zero(ctx, 0, n)
    Um = Matrix.from_rows(ctx, U) if U else Matrix.zero(ctx, 0, 0)
    Uinvm = Matrix.from_rows(ctx, Uinv) if Uinv else Matrix.zero(ctx, 0, 0)
    return H, Um, Uinvm


def _ring_unit_inv(ctx, u):
    if isinstance(ctx, IntegerRing):
        return u
    if isinstance(ctx, PolyRing):
        return (pow(u[0], ctx.p - 2, ctx.p),)
    if isinstance(ctx, SkewPolyRing):
        return (ctx.gf.inv(u[0]),)
    raise UnsupportedRing(f"{ctx.kind}: unit inversion unavailable")


def det_comm(ops, rows):
    """Cofactor-expansion determinant for small matrices over a commutative ring."""
    n = len(rows)
    if n == 0:
        return ops.one
    if n == 1:
        return rows[0][0]
    acc = ops.zero
    sign = True
    for j in range(n):
        a = rows[0][j]
        if not ops.is_zero(a):
            minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
            term = ops.mul(a, det_comm(ops, minor))
            acc = ops.add(acc, term if sign else ops.neg(term))
        sign = not sign
    return acc


def expanded_row_matrix(ctx, M: Matrix):
    """The base-domain matrix of v |-> v*M acting on expanded row coordinates.

    Rows are indexed by (row of M, basis element), columns by
    (column of M, base coordinate).
    """
    basis = expansion_basis(ctx)
    rows = []
    for k in range(M.rows):
        for beta in basis:
            vec = []
            for j in range(M.cols):
                vec.extend(ctx.expand(ctx.mul(beta, M[k, j])))
            rows.append(vec)
    return rows


def expansion_basis(ctx):
    """Central free basis of the ring over its base domain."""
    if isinstance(ctx, (IntegerRing, PolyRing)):
        return [ctx.one]
    if isinstance(ctx, GroupRing):
        return [ctx.x_power(k) for k in range(ctx.n)]
    if isinstance(ctx, SkewPolyRing):
        gf = ctx.gf
        basis = []
        for j in range(ctx.e):
            gj = gf.one
            for _ in range(j):
                gj = gf.mul(gj, gf.elem((0, 1)))
            for i0 in range(ctx.e):
                elem = ctx.mul((gj,), ctx.x(i0)) if i0 else (gj,)
                basis.append(elem)
        return basis
    raise UnsupportedRing(f"{ctx.kind}: no expansion basis")


def row_rank_full(ctx, M: Matrix) -> bool:
    """True iff v*M = 0 forces v = 0 (the map on row vectors is injective)."""
    if M.rows == 0:
        return True
    if isinstance(ctx, (IntegerRing, PolyRing)):
        diag, _, _ = smith_normal_form(ctx, M)
        nonzero = sum(1 for d in diag if not ctx.is_zero(d))
        return nonzero == M.rows
    if isinstance(ctx, SkewPolyRing):
        H, _, _ = hermite_form(ctx, M)
        zero_rows = sum(1 for i in range(H.rows) if all(ctx.is_zero(e) for e in H.row(i)))
        return zero_rows == 0
    if isinstance(ctx, GroupRing):
        dom = ctx.base_domain
        E = expanded_row_matrix(ctx, M)
        return len(row_kernel(dom, E)) == 0
    raise UnsupportedRing(ctx.kind)
