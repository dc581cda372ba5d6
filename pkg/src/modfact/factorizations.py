"""The category of module factorizations of omega, in free coordinates.

Conventions (fixed once, used everywhere):

* elements of free modules are row vectors; linear maps act by right
  multiplication, v -> v*G;
* a map into the sigma^k-twisted module of a free module is stored through
  its underlying function v -> sigma^k(v)*G, so composing (k, G) after
  (l, H) yields (k+l, sigma^l(G) @ H);
* a factorization is (n0, n1; D0, D1) with d0 = (0, D0) and d1 = (1, D1),
  giving the two axioms
      sigma(D0) @ D1 = omega*I   and   D1 @ D0 = omega*I.

Twisted components are always re-coordinatized to plain free modules through
the canonical isomorphisms, which is where the entrywise sigma^{+-1} in the
shift formulas comes from.
"""

from __future__ import annotations

from dataclasses import dataclass

from modfact.matrices import ContextMismatch, Matrix, ShapeMismatch


@dataclass(frozen=True)
class ModuleFactorization:
    ctx: object
    n0: int
    n1: int
    D0: Matrix  # n0 x n1
    D1: Matrix  # n1 x n0, the sigma-semilinear representative of d1

    def __post_init__(self):
        if (self.D0.rows, self.D0.cols) != (self.n0, self.n1):
            raise ShapeMismatch("D0 must be n0 x n1")
        if (self.D1.rows, self.D1.cols) != (self.n1, self.n0):
            raise ShapeMismatch("D1 must be n1 x n0")


def factorization(ctx, d0_rows, d1_rows, n0=None, n1=None) -> ModuleFactorization:
    n0 = len(d0_rows) if n0 is None else n0
    n1 = len(d1_rows) if n1 is None else n1
    D0 = Matrix.from_rows(ctx, d0_rows) if d0_rows else Matrix.zero(ctx, 0, n1)
    D1 = Matrix.from_rows(ctx, d1_rows) if d1_rows else Matrix.zero(ctx, 0, n0)
    return ModuleFactorization(ctx, n0, n1, D0, D1)


def check_axioms(X: ModuleFactorization):
    """Exact verification of both factorization identities, with a report."""
    ctx = X.ctx
    report = []
    wI0 = Matrix.scalar(ctx, X.n0, ctx.omega)
    wI1 = Matrix.scalar(ctx, X.n1, ctx.omega)
    if X.D0.twist(1) @ X.D1 != wI0:
        report.append("axiom A fails: sigma(D0) @ D1 != omega*I")
    if X.D1 @ X.D0 != wI1:
        report.append("axiom B fails: D1 @ D0 != omega*I")
    return not report, report


def is_valid(X: ModuleFactorization) -> bool:
    return check_axioms(X)[0]


def theta0(ctx, n: int) -> ModuleFactorization:
    """Trivial factorization (M, M; id, omega) on a rank-n free module."""
    return ModuleFactorization(
        ctx, n, n, Matrix.identity(ctx, n), Matrix.scalar(ctx, n, ctx.omega)
    )


def theta1(ctx, n: int) -> ModuleFactorization:
    """Trivial factorization (inverse-twist of M, M; omega, id); uses sigma(omega) = omega."""
    return ModuleFactorization(
        ctx, n, n, Matrix.scalar(ctx, n, ctx.omega), Matrix.identity(ctx, n)
    )


def shift(X: ModuleFactorization) -> ModuleFactorization:
    """S(X) = (X^1, twist of X^0; -d^1, -twist of d^0) in plain coordinates."""
    return ModuleFactorization(
        X.ctx, X.n1, X.n0, -X.D1.twist(-1), -X.D0
    )


def unshift(X: ModuleFactorization) -> ModuleFactorization:
    """Exact inverse of shift."""
    return ModuleFactorization(X.ctx, X.n1, X.n0, -X.D1, -X.D0.twist(1))


def direct_sum(X: ModuleFactorization, Y: ModuleFactorization) -> ModuleFactorization:
    if X.ctx != Y.ctx:
        raise ContextMismatch("direct sum of factorizations over different contexts")
    ctx = X.ctx
    return ModuleFactorization(
        ctx,
        X.n0 + Y.n0,
        X.n1 + Y.n1,
        Matrix.block_diag(ctx, [X.D0, Y.D0]),
        Matrix.block_diag(ctx, [X.D1, Y.D1]),
    )


# ---------------------------------------------------------------------------
# Morphisms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FactorizationMorphism:
    source: ModuleFactorization
    target: ModuleFactorization
    F0: Matrix  # n0(X) x n0(Y)
    F1: Matrix  # n1(X) x n1(Y)

    def __post_init__(self):
        if (self.F0.rows, self.F0.cols) != (self.source.n0, self.target.n0):
            raise ShapeMismatch("F0 shape mismatch")
        if (self.F1.rows, self.F1.cols) != (self.source.n1, self.target.n1):
            raise ShapeMismatch("F1 shape mismatch")


def is_morphism(f: FactorizationMorphism) -> bool:
    X, Y = f.source, f.target
    square0 = X.D0 @ f.F1 == f.F0 @ Y.D0
    square1 = X.D1 @ f.F0 == f.F1.twist(1) @ Y.D1
    return square0 and square1


def identity_morphism(X: ModuleFactorization) -> FactorizationMorphism:
    return FactorizationMorphism(
        X, X, Matrix.identity(X.ctx, X.n0), Matrix.identity(X.ctx, X.n1)
    )


def zero_morphism(X, Y) -> FactorizationMorphism:
    return FactorizationMorphism(
        X, Y, Matrix.zero(X.ctx, X.n0, Y.n0), Matrix.zero(X.ctx, X.n1, Y.n1)
    )


def compose(f: FactorizationMorphism, g: FactorizationMorphism) -> FactorizationMorphism:
    """First f, then g."""
    if f.target != g.source:
        raise ShapeMismatch("composition endpoints do not match")
    return FactorizationMorphism(f.source, g.target, f.F0 @ g.F0, f.F1 @ g.F1)


def morphism_add(f, g):
    return FactorizationMorphism(f.source, f.target, f.F0 + g.F0, f.F1 + g.F1)


def morphism_sub(f, g):
    return FactorizationMorphism(f.source, f.target, f.F0 - g.F0, f.F1 - g.F1)


def morphism_scale(f, c):
    """Left scaling; c must be central for the result to stay a morphism."""
    return FactorizationMorphism(
        f.source, f.target, f.F0.scale_left(c), f.F1.scale_left(c)
    )


def theta0_on_map(ctx, G: Matrix) -> FactorizationMorphism:
    return FactorizationMorphism(theta0(ctx, G.rows), theta0(ctx, G.cols), G, G)


def theta1_on_map(ctx, G: Matrix) -> FactorizationMorphism:
    # the inverse-twist component re-coordinatizes to an entrywise sigma
    return FactorizationMorphism(theta1(ctx, G.rows), theta1(ctx, G.cols), G.twist(1), G)


def shift_on_map(f: FactorizationMorphism) -> FactorizationMorphism:
    """S(f0, f1) = (f1, twisted f0) in plain coordinates."""
    return FactorizationMorphism(
        shift(f.source), shift(f.target), f.F1, f.F0.twist(-1)
    )


def conjugate(X: ModuleFactorization, U, Uinv, V, Vinv) -> ModuleFactorization:
    """Isomorphic factorization (U D0 V, sigma(V^-1) D1 U^-1); U, V invertible."""
    return ModuleFactorization(
        X.ctx,
        X.n0,
        X.n1,
        U @ X.D0 @ V,
        Vinv.twist(1) @ X.D1 @ Uinv,
    )


def random_invertible(ctx, n, rng, steps=4):
    """A product of elementary transvections and unit scalings, with inverse."""
    U = Matrix.identity(ctx, n)
    Uinv = Matrix.identity(ctx, n)
    for _ in range(steps if n > 1 else min(steps, 2)):
        kind = rng.randrange(3)
        if kind == 0 and n > 1:
            i, j = rng.sample(range(n), 2)
            a = ctx.random_element(rng)
            E = _transvection(ctx, n, i, j, a)
            Einv = _transvection(ctx, n, i, j, ctx.neg(a))
            U, Uinv = E @ U, Uinv @ Einv
        elif kind == 1:
            i = rng.randrange(n)
            u = ctx.random_unit(rng)
            uinv = _unit_inverse(ctx, u)
            U = Matrix.from_rows(
                ctx,
                [
                    [ctx.mul(u, U[r, c]) if r == i else U[r, c] for c in range(n)]
                    for r in range(n)
                ],
            )
            Uinv = Matrix.from_rows(
                ctx,
                [
                    [
                        ctx.mul(Uinv[r, c], uinv) if c == i else Uinv[r, c]
                        for c in range(n)
                    ]
                    for r in range(n)
                ],
            )
        elif n > 1:
            i, j = rng.sample(range(n), 2)
            P = _swap_matrix(ctx, n, i, j)
            U, Uinv = P @ U, Uinv @ P
    return U, Uinv


def _transvection(ctx, n, i, j, a):
    rows = [
        [ctx.one if r == c else (a if (r, c) == (i, j) else ctx.zero) for c in range(n)]
        for r in range(n)
    ]
    return Matrix.from_rows(ctx, rows)


def _swap_matrix(ctx, n, i, j):
    rows = []
    for r in range(n):
        s = r
        if r == i:
            s = j
        elif r == j:
            s = i
        rows.append([ctx.one if c == s else ctx.zero for c in range(n)])
    return Matrix.from_rows(ctx, rows)


def _unit_inverse(ctx, u):
    from modfact.normalforms import _ring_unit_inv
    from modfact.rings import GroupRing

    if isinstance(ctx, GroupRing):
        # trivial units +-x^k invert to +-x^{n-k}
        for k, c in enumerate(u):
            if c:
                out = [0] * ctx.n
                out[(-k) % ctx.n] = c
                return tuple(out)
        raise ZeroDivisionError
    return _ring_unit_inv(ctx, u)


def is_projective_object(X: ModuleFactorization) -> bool:
    """Projectivity in the factorization category: the identity is null-homotopic."""
    from modfact.homotopy import is_p_null_homotopic

    return is_p_null_homotopic(identity_morphism(X)) is not None


# ---------------------------------------------------------------------------
# Bridge to modules over the 2x2 matrix ring [[A, A], [A*omega, A]]
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GammaElement:
    """The matrix [[a, b], [c*omega, d]]; c stores the coefficient of omega."""

    a: object
    b: object
    c: object
    d: object


def gamma_mul(ctx, g1: GammaElement, g2: GammaElement) -> GammaElement:
    w = ctx.omega
    return GammaElement(
        ctx.add(ctx.mul(g1.a, g2.a), ctx.mul(g1.b, ctx.mul(g2.c, w))),
        ctx.add(ctx.mul(g1.a, g2.b), ctx.mul(g1.b, g2.d)),
        ctx.add(ctx.mul(g1.c, ctx.sigma(g2.a)), ctx.mul(g1.d, g2.c)),
        ctx.add(ctx.mul(g1.c, ctx.mul(w, g2.b)), ctx.mul(g1.d, g2.d)),
    )


def gamma_sigma_bar(ctx, g: GammaElement) -> GammaElement:
    return GammaElement(
        g.d, ctx.neg(g.c), ctx.neg(ctx.sigma(g.b)), ctx.sigma(g.a)
    )


@dataclass(frozen=True)
class GammaModuleView:
    """Column pair (top = X^1 coordinates, bottom = X^0 coordinates).

    The action of [[a, b], [c*omega, d]] on (t, v) is
        top    <- a*t + b*(v @ D0)
        bottom <- c*(sigma(t) @ D1) + d*v
    the sigma in the bottom row being the coordinate form of the abelian
    untwisting isomorphism applied after d1.
    """

    X: ModuleFactorization

    @property
    def n_top(self):
        return self.X.n1

    @property
    def n_bottom(self):
        return self.X.n0


def to_gamma(X: ModuleFactorization) -> GammaModuleView:
    return GammaModuleView(X)


def from_gamma(view: GammaModuleView) -> ModuleFactorization:
    return view.X


def gamma_act(view: GammaModuleView, g: GammaElement, elem):
    """elem is a pair of row-vector matrices (top: 1 x n1, bottom: 1 x n0)."""
    X = view.X
    ctx = X.ctx
    top, bottom = elem
    new_top = top.scale_left(g.a) + (bottom @ X.D0).scale_left(g.b)
    new_bottom = (top.twist(1) @ X.D1).scale_left(g.c) + bottom.scale_left(g.d)
    return (new_top, new_bottom)


def gamma_basis_units(ctx):
    """The four matrix-unit generators e11, e12, e21*omega, e22."""
    z, o = ctx.zero, ctx.one
    return [
        GammaElement(o, z, z, z),
        GammaElement(z, o, z, z),
        GammaElement(z, z, o, z),
        GammaElement(z, z, z, o),
    ]


def gamma_shift_compatible(X: ModuleFactorization, g: GammaElement, elem) -> bool:
    """The shift corresponds to the bar-twist of the matrix ring.

    Transport eta(top, bottom) = (sigma^{-1}(bottom), top) intertwines the
    bar-twisted action on the view of X with the plain action on the view
    of shift(X).
    """
    SX = shift(X)
    ctx = X.ctx

    def eta(e):
        t, v = e
        return (v.twist(-1), t)

    lhs = eta(gamma_act(to_gamma(X), gamma_sigma_bar(ctx, g), elem))
    rhs = gamma_act(to_gamma(SX), g, eta(elem))
    return lhs == rhs
