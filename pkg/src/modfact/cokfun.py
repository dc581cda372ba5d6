"""Cokernel functors into modules over the quotient ring, and their inverses.

cok0 sends (n0, n1; D0, D1) to the quotient module presented on n1
generators by the rows of D0 (reduced); on morphisms it is induced by F1.
The constructive density inverse (mf_from_module) and the fullness lift
(lift_map) realize the equivalence between the stable factorization
category and the stable quotient-module category at desk scale, with all
side conditions asserted.
"""

from __future__ import annotations

from dataclasses import dataclass

from modfact.factorizations import (
    FactorizationMorphism,
    ModuleFactorization,
    compose,
    is_morphism,
    shift,
    theta0,
)
from modfact.linsolve import equation, flatten_system, solve_linear
from modfact.matrices import Matrix
from modfact.modules import (
    ModulePresentation,
    NotFinitePd,
    cokernel_presentation,
    ext_gcd,
    field_rank,
    free_cover_step,
    invariant_factors,
)
from modfact.normalforms import (
    kernel_columns,
    quotient_row_form,
    row_rank_full,
    smith_normal_form,
    solve_columns,
)
from modfact.rings import (
    FpPolyDomain,
    GroupRing,
    IntegerRing,
    PolyRing,
    SkewPolyRing,
    poly_trim,
)


class InternalInconsistency(Exception):
    """An identity the theory guarantees failed to verify; indicates a bug."""


class ExactnessFailure(Exception):
    def __init__(self, position, detail=""):
        super().__init__(f"resolution not exact at position {position} {detail}")
        self.position = position


# ---------------------------------------------------------------------------
# The cokernel functors
# ---------------------------------------------------------------------------


def cok0(X: ModuleFactorization) -> ModulePresentation:
    return cokernel_presentation(X.ctx, X.D0, over_quotient=True)


def cok1(X: ModuleFactorization) -> ModulePresentation:
    """First cokernel via the shift; agrees with the direct form (tested)."""
    return cok0(shift(X))


def cok1_direct(X: ModuleFactorization) -> ModulePresentation:
    """Cokernel of d1 computed directly from D1 in plain coordinates."""
    return cokernel_presentation(X.ctx, X.D1.twist(-1), over_quotient=True)


@dataclass(frozen=True)
class QuotientMap:
    source: ModulePresentation
    target: ModulePresentation
    matrix: Matrix  # source.generators x target.generators, reduced entries


def quotient_map(source, target, rows) -> QuotientMap:
    M = (
        Matrix.from_rows(source.ctx, rows)
        if rows
        else Matrix.zero(source.ctx, source.generators, target.generators)
    )
    return QuotientMap(source, target, M.reduce_mod_omega())


def in_row_span_mod_omega(ctx, relations: Matrix, v: Matrix) -> bool:
    """Is the row vector v in rowspan(relations) + omega * A^n over A?"""
    n = relations.cols
    if v.cols != n:
        raise ValueError("length mismatch")
    shapes = {"U": (1, relations.rows), "W": (1, n)}
    eq = equation(
        [
            (Matrix.identity(ctx, 1), "U", 0, relations),
            (Matrix.scalar(ctx, 1, ctx.omega), "W", 0, Matrix.identity(ctx, n)),
        ],
        v,
    )
    return solve_linear(ctx, shapes, [eq]) is not None


def maps_equal(g1: QuotientMap, g2: QuotientMap) -> bool:
    """Equality as maps between the presented quotient modules."""
    diff = g1.matrix - g2.matrix
    ctx = g1.source.ctx
    rel = g1.target.relations
    for i in range(diff.rows):
        row = Matrix(ctx, 1, diff.cols, diff.row(i))
        if not in_row_span_mod_omega(ctx, rel, row):
            return False
    return True


def is_zero_map(g: QuotientMap) -> bool:
    return maps_equal(g, quotient_map(g.source, g.target, None))


def cok0_on_morphism(f: FactorizationMorphism) -> QuotientMap:
    """The induced map on zeroth cokernels, with a well-definedness check."""
    X, Y = f.source, f.target
    src, tgt = cok0(X), cok0(Y)
    ctx = X.ctx
    carried = X.D0 @ f.F1
    for i in range(carried.rows):
        row = Matrix(ctx, 1, carried.cols, carried.row(i))
        if not in_row_span_mod_omega(ctx, Y.D0, row):
            raise InternalInconsistency("F1 does not carry relations into relations")
    return QuotientMap(src, tgt, f.F1.reduce_mod_omega())


# ---------------------------------------------------------------------------
# Density: a factorization realizing a given quotient module
# ---------------------------------------------------------------------------


def mf_from_module(N: ModulePresentation) -> ModuleFactorization:
    """A factorization X with cok0(X) isomorphic to N.

    D0 comes from an injective free presentation; D1 is solved from
    sigma(D0) @ D1 = omega*I.  The second axiom is forced by regularity and
    is asserted, not solved for.
    """
    ctx = N.ctx
    D0, _cert = free_cover_step(N)
    n0, n1 = D0.rows, D0.cols
    sol = solve_linear(
        ctx,
        {"D1": (n1, n0)},
        [
            equation(
                [(D0.twist(1), "D1", 0, Matrix.identity(ctx, n0))],
                Matrix.scalar(ctx, n0, ctx.omega),
            )
        ],
    )
    if sol is None:
        raise InternalInconsistency("omega does not factor through the free cover")
    D1 = sol["D1"]
    if D1 @ D0 != Matrix.scalar(ctx, n1, ctx.omega):
        raise InternalInconsistency("second factorization identity failed")
    X = ModuleFactorization(ctx, n0, n1, D0, D1)
    if invariant_factors(cok0(X)) != invariant_factors(N):
        raise InternalInconsistency("cokernel of the constructed factorization drifted")
    return X


def lift_map(X: ModuleFactorization, Y: ModuleFactorization, g: QuotientMap) -> FactorizationMorphism:
    """A morphism X -> Y inducing g on zeroth cokernels.

    Requires the mono-and-projective condition on the injective side of Y
    (D0 of Y injective); the second commuting square then follows and is
    asserted rather than solved.
    """
    ctx = X.ctx
    if not row_rank_full(ctx, Y.D0):
        raise ValueError("target D0 must be injective (mono-and-projective range)")
    glift = g.matrix
    carried = X.D0.reduce_mod_omega() @ glift
    for i in range(carried.rows):
        row = Matrix(ctx, 1, carried.cols, carried.row(i))
        if not in_row_span_mod_omega(ctx, Y.D0, row):
            raise ValueError("map is not well-defined on the presented modules")
    I1x = Matrix.identity(ctx, X.n1)
    shapes = {
        "F1": (X.n1, Y.n1),
        "U": (X.n1, Y.n0),
        "W": (X.n1, Y.n1),
        "F0": (X.n0, Y.n0),
    }
    eq_rep = equation(
        [
            (I1x, "F1", 0, Matrix.identity(ctx, Y.n1)),
            (-I1x, "U", 0, Y.D0),
            (Matrix.scalar(ctx, X.n1, ctx.neg(ctx.omega)), "W", 0, Matrix.identity(ctx, Y.n1)),
        ],
        glift,
    )
    eq_sq0 = equation(
        [
            (X.D0, "F1", 0, Matrix.identity(ctx, Y.n1)),
            (-Matrix.identity(ctx, X.n0), "F0", 0, Y.D0),
        ],
        Matrix.zero(ctx, X.n0, Y.n1),
    )
    sol = solve_linear(ctx, shapes, [eq_rep, eq_sq0])
    if sol is None:
        raise InternalInconsistency("projectivity guarantees a lift, none was found")
    F0, F1 = sol["F0"], sol["F1"]
    if X.D1 @ F0 != F1.twist(1) @ Y.D1:
        raise InternalInconsistency("second square failed despite injective target")
    f = FactorizationMorphism(X, Y, F0, F1)
    if not maps_equal(cok0_on_morphism(f), g):
        raise InternalInconsistency("lift does not induce the requested map")
    return f


def factor_through_theta0(f: FactorizationMorphism):
    """When cok0(f) = 0, factor f through the trivial object on the middle term.

    Returns (u, v) with u: X -> theta0(n1 X), v: theta0(n1 X) -> Y and
    f = v.u; requires the target differential to be injective.
    """
    X, Y = f.source, f.target
    ctx = X.ctx
    sol = solve_linear(
        ctx,
        {"H": (X.n1, Y.n0)},
        [
            equation(
                [(Matrix.identity(ctx, X.n1), "H", 0, Y.D0)],
                f.F1,
            )
        ],
    )
    if sol is None:
        raise ValueError("cok0 of the morphism is not zero; no such factorization")
    H = sol["H"]
    if f.F0 != X.D0 @ H:
        raise InternalInconsistency("factor-through-trivial lost the zero component")
    T = theta0(ctx, X.n1)
    u = FactorizationMorphism(X, T, X.D0, Matrix.identity(ctx, X.n1))
    v = FactorizationMorphism(T, Y, H, f.F1)
    if not (is_morphism(u) and is_morphism(v)):
        raise InternalInconsistency("trivial-object factorization is not a morphism")
    g = compose(u, v)
    if g.F0 != f.F0 or g.F1 != f.F1:
        raise InternalInconsistency("factorization does not recompose to f")
    return u, v


# ---------------------------------------------------------------------------
# Quotient-side stable homs and projectivity
# ---------------------------------------------------------------------------


def factors_through_projective_quotient(g: QuotientMap) -> bool:
    """Does the map of quotient modules factor through a projective module?

    A single free cover of the target suffices: any projective detour lifts
    through it.
    """
    ctx = g.source.ctx
    relN, relM = g.source.relations, g.target.relations
    n, m = g.source.generators, g.target.generators
    rN, rM = relN.rows, relM.rows
    shapes = {
        "H": (n, m),
        "Z": (rN, m),
        "U": (n, rM),
        "V": (n, m),
    }
    eqs = [
        equation(
            [
                (relN, "H", 0, Matrix.identity(ctx, m)),
                (Matrix.scalar(ctx, rN, ctx.neg(ctx.omega)), "Z", 0, Matrix.identity(ctx, m)),
            ],
            Matrix.zero(ctx, rN, m),
        ),
        equation(
            [
                (Matrix.identity(ctx, n), "H", 0, Matrix.identity(ctx, m)),
                (Matrix.identity(ctx, n), "U", 0, relM),
                (Matrix.scalar(ctx, n, ctx.omega), "V", 0, Matrix.identity(ctx, m)),
            ],
            g.matrix,
        ),
    ]
    return solve_linear(ctx, shapes, eqs) is not None


def is_projective_over_quotient(N: ModulePresentation) -> bool:
    """Projectivity over the quotient ring: does the free cover split?"""
    ctx = N.ctx
    g, r = N.generators, N.relations.rows
    if g == 0:
        return True
    shapes = {"S": (g, g), "W": (r, g), "U": (g, r), "V": (g, g)}
    eqs = [
        equation(
            [
                (N.relations, "S", 0, Matrix.identity(ctx, g)),
                (Matrix.scalar(ctx, r, ctx.neg(ctx.omega)), "W", 0, Matrix.identity(ctx, g)),
            ],
            Matrix.zero(ctx, r, g),
        ),
        equation(
            [
                (Matrix.identity(ctx, g), "S", 0, Matrix.identity(ctx, g)),
                (Matrix.identity(ctx, g), "U", 0, N.relations),
                (Matrix.scalar(ctx, g, ctx.omega), "V", 0, Matrix.identity(ctx, g)),
            ],
            Matrix.identity(ctx, g),
        ),
    ]
    return solve_linear(ctx, shapes, eqs) is not None


def quotient_stable_hom(N: ModulePresentation, M: ModulePresentation):
    """Hom over the quotient ring modulo maps through projectives.

    Returns (free_rank, torsion) over the base domain, directly comparable
    with the factorization-side stable Hom description.
    """
    ctx = N.ctx
    dom = ctx.base_domain
    from modfact.normalforms import expansion_basis

    basis = expansion_basis(ctx)
    n, m = N.generators, M.generators
    rN, rM = N.relations.rows, M.relations.rows

    # well-defined maps: projection to H-coordinates of the solution space of
    # relN*H = U*relM + omega*Z
    shapes = {"H": (n, m), "U": (rN, rM), "Z": (rN, m)}
    eq = equation(
        [
            (N.relations, "H", 0, Matrix.identity(ctx, m)),
            (-Matrix.identity(ctx, rN), "U", 0, M.relations),
            (Matrix.scalar(ctx, rN, ctx.neg(ctx.omega)), "Z", 0, Matrix.identity(ctx, m)),
        ],
        Matrix.zero(ctx, rN, m),
    )
    flat = flatten_system(ctx, shapes, [eq])
    h_len = n * m * flat.rank
    sol_basis = kernel_columns(dom, flat.rows, ncols=flat.total)
    hom_gens = [col[:h_len] for col in sol_basis]  # H block comes first

    # maps representing the zero or a projective-factoring map
    null_gens = []
    for i in range(n):
        for j in range(rM):
            for beta in basis:
                rows = [[ctx.zero] * m for _ in range(n)]
                for c in range(m):
                    rows[i][c] = ctx.mul(beta, M.relations[j, c])
                null_gens.append(_flatten_h(ctx, rows, flat.rank))
    for i in range(n):
        for j in range(m):
            for beta in basis:
                rows = [[ctx.zero] * m for _ in range(n)]
                rows[i][j] = ctx.mul(ctx.omega, beta)
                null_gens.append(_flatten_h(ctx, rows, flat.rank))
    # maps through the free cover of M: relN * H = omega * Z
    shapes_p = {"H": (n, m), "Z": (rN, m)}
    eq_p = equation(
        [
            (N.relations, "H", 0, Matrix.identity(ctx, m)),
            (Matrix.scalar(ctx, rN, ctx.neg(ctx.omega)), "Z", 0, Matrix.identity(ctx, m)),
        ],
        Matrix.zero(ctx, rN, m),
    )
    flat_p = flatten_system(ctx, shapes_p, [eq_p])
    for col in kernel_columns(dom, flat_p.rows, ncols=flat_p.total):
        null_gens.append(col[:h_len])

    if not hom_gens:
        return (0, ())
    gmat = [[hom_gens[j][i] for j in range(len(hom_gens))] for i in range(h_len)]
    rel_rows = []
    for v in null_gens:
        coeffs = solve_columns(dom, gmat, v, ncols=len(hom_gens))
        if coeffs is None:
            raise InternalInconsistency("projective-factoring map is not well-defined")
        rel_rows.append(coeffs)
    # syzygies among the generators present the hom module itself
    syz = kernel_columns(dom, gmat, ncols=len(hom_gens))
    for s in syz:
        rel_rows.append(s)
    form = quotient_row_form(dom, len(hom_gens), rel_rows)
    return (form.free_rank, tuple(form.torsion))


def _flatten_h(ctx, rows, rank):
    out = []
    for r in rows:
        for e in r:
            out.extend(ctx.expand(e))
    return out


# ---------------------------------------------------------------------------
# Periodic complete resolutions
# ---------------------------------------------------------------------------


@dataclass
class PeriodicResolution:
    ranks: list  # ranks of C_0 .. C_window
    diffs: list  # reduced differential matrices d_k: C_k -> C_{k+1}
    certificates: list  # per interior position


def periodic_resolution(X: ModuleFactorization, window: int) -> PeriodicResolution:
    """The 2-periodic complex of reductions, with exactness certificates.

    Differentials alternate the reductions of D0 and D1, twisted by the
    entrywise sigma powers the plain coordinatization dictates.  Exactness
    is certified at every interior node by exact kernel/image counting, and
    Hom-acyclicity is checked against the quotient ring itself and a rank-2
    free module; 2-periodicity makes a window of 4 logically sufficient.
    """
    if window < 2:
        raise ValueError("window must be at least 2")
    ctx = X.ctx
    ranks = []
    diffs = []
    for k in range(window + 1):
        ranks.append(X.n0 if k % 2 == 0 else X.n1)
    for k in range(window):
        if k % 2 == 0:
            mat = X.D0.twist(-(k // 2))
        else:
            mat = X.D1.twist(-((k - 1) // 2 + 1))
        diffs.append(mat.reduce_mod_omega())
    for k in range(window - 1):
        prod = diffs[k] @ diffs[k + 1]
        if not prod.reduce_mod_omega().is_zero():
            raise ExactnessFailure(k + 1, "(composite not zero)")
    certificates = []
    for j in range(1, window):
        size_prev = _module_size(ctx, ranks[j - 1])
        ker_in = _row_kernel_size(ctx, diffs[j - 1])
        im_in = size_prev // ker_in
        ker_out = _row_kernel_size(ctx, diffs[j])
        if im_in != ker_out:
            raise ExactnessFailure(j, f"(image {im_in} != kernel {ker_out})")
        cert = {"position": j, "image_size": im_in, "kernel_size": ker_out}
        certificates.append(cert)
    # Hom-acyclicity against the quotient ring and a rank-2 free probe
    for probe in (1, 2):
        for j in range(1, window):
            size_next = _module_size(ctx, ranks[j + 1]) ** probe
            ker_out_dual = _col_kernel_size(ctx, diffs[j]) ** probe
            im_dual = size_next // ker_out_dual
            ker_in_dual = _col_kernel_size(ctx, diffs[j - 1]) ** probe
            if im_dual != ker_in_dual:
                raise ExactnessFailure(j, f"(dual, probe rank {probe})")
    return PeriodicResolution(ranks, diffs, certificates)


def _quotient_size(ctx) -> int:
    if isinstance(ctx, IntegerRing):
        return abs(ctx.omega)
    if isinstance(ctx, PolyRing):
        return ctx.p ** (len(ctx.omega) - 1)
    if isinstance(ctx, SkewPolyRing):
        return ctx.p**ctx.e
    if isinstance(ctx, GroupRing):
        return ctx.p**ctx.n
    raise TypeError(ctx)


def _module_size(ctx, rank) -> int:
    return _quotient_size(ctx) ** rank


def _row_kernel_size(ctx, Mbar: Matrix) -> int:
    """Number of row vectors v over the quotient with v*M = 0."""
    r = Mbar.rows
    if r == 0:
        return 1
    if isinstance(ctx, IntegerRing):
        m = abs(ctx.omega)
        diag, _, _ = smith_normal_form(ctx, Mbar)
        out = 1
        import math

        for i, d in enumerate(diag):
            out *= math.gcd(d, m) if d else m
        out *= m ** (r - len(diag))
        return out
    if isinstance(ctx, PolyRing):
        dom = ctx.dom
        f = ctx.omega
        diag, _, _ = smith_normal_form(ctx, Mbar)
        log = 0
        for d in diag:
            g, _, _ = ext_gcd(dom, d, f)
            log += len(dom.normalize(g)[0]) - 1
        log += (len(f) - 1) * (r - len(diag))
        return ctx.p**log
    if isinstance(ctx, SkewPolyRing):
        gf = ctx.gf
        rows = [[e[0] if e else gf.zero for e in Mbar.row(i)] for i in range(r)]
        rank = field_rank(gf, rows)
        return (ctx.p**ctx.e) ** (r - rank)
    if isinstance(ctx, GroupRing):
        dom = FpPolyDomain(ctx.p)
        f = poly_trim([-1 % ctx.p] + [0] * (ctx.n - 1) + [1])
        rows = [
            [poly_trim([c % ctx.p for c in e]) for e in Mbar.row(i)] for i in range(r)
        ]
        sm_ctx = PolyRing(ctx.p, f)
        diag, _, _ = smith_normal_form(sm_ctx, Matrix.from_rows(sm_ctx, rows))
        log = 0
        for d in diag:
            g, _, _ = ext_gcd(dom, d, f)
            log += len(dom.normalize(g)[0]) - 1
        log += (len(f) - 1) * (r - len(diag))
        return ctx.p**log
    raise TypeError(ctx)


def _col_kernel_size(ctx, Mbar: Matrix) -> int:
    return _row_kernel_size(ctx, Mbar.transpose())


# ---------------------------------------------------------------------------
# Projective dimension over A
# ---------------------------------------------------------------------------


def pd_over_A(N: ModulePresentation):
    """0 for the zero module, else 1 with an injective presentation as witness.

    Nonzero quotient modules are never submodules of projectives, so the
    only possible finite value is 1; when no injective presentation exists
    NotFinitePd propagates.
    """
    if invariant_factors(N).is_zero():
        return 0, {"zero_module": True}
    D, cert = free_cover_step(N)
    return 1, {"presentation": D, "certificate": cert}
