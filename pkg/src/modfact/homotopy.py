"""Null-homotopy, stable Hom, stable isomorphism, and syzygies.

A morphism (F0, F1): X -> Y is null-homotopic if there are matrices
H0 (n0X x n1Y, the inverse-twist-valued component) and H1 (n1X x n0Y) with

    F0 = D0_X @ H1 + sigma(H0) @ D1_Y
    F1 = H1 @ D0_Y + sigma^{-1}(D1_X) @ H0

For factorizations with free components the usual side condition that the
homotopies factor through projectives is automatic: any map between free
modules factors through a free module (the target).  The decision is
therefore a pure linear-system problem over the ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from modfact.factorizations import (
    FactorizationMorphism,
    ModuleFactorization,
    compose,
    identity_morphism,
    morphism_add,
    morphism_scale,
    morphism_sub,
    theta0,
    theta1,
    unshift,
)
from modfact.linsolve import equation, flatten_system, iter_elements, solve_linear
from modfact.matrices import Matrix
from modfact.normalforms import kernel_columns, quotient_row_form, solve_columns
from modfact.rings import FpPolyDomain, IntegerDomain


class SearchBoundExceeded(Exception):
    """The bounded certificate search was inconclusive (never reported as no)."""


@dataclass(frozen=True)
class Homotopy:
    H0: Matrix  # n0(X) x n1(Y)
    H1: Matrix  # n1(X) x n0(Y)


def homotopy_equations(f: FactorizationMorphism):
    X, Y = f.source, f.target
    ctx = X.ctx
    I_n0x = Matrix.identity(ctx, X.n0)
    I_n1x = Matrix.identity(ctx, X.n1)
    eq0 = equation(
        [(X.D0, "H1", 0, Matrix.identity(ctx, Y.n0)), (I_n0x, "H0", 1, Y.D1)],
        f.F0,
    )
    eq1 = equation(
        [(I_n1x, "H1", 0, Y.D0), (X.D1.twist(-1), "H0", 0, Matrix.identity(ctx, Y.n1))],
        f.F1,
    )
    shapes = {"H0": (X.n0, Y.n1), "H1": (X.n1, Y.n0)}
    return shapes, [eq0, eq1]


def is_p_null_homotopic(f: FactorizationMorphism):
    """A witnessing homotopy, or None when the system is unsolvable."""
    shapes, eqs = homotopy_equations(f)
    sol = solve_linear(f.source.ctx, shapes, eqs)
    if sol is None:
        return None
    return Homotopy(sol["H0"], sol["H1"])


def null_morphism(X, Y, h: Homotopy) -> FactorizationMorphism:
    """The morphism witnessed null-homotopic by h (always a valid morphism)."""
    F0 = X.D0 @ h.H1 + h.H0.twist(1) @ Y.D1
    F1 = h.H1 @ Y.D0 + X.D1.twist(-1) @ h.H0
    return FactorizationMorphism(X, Y, F0, F1)


def brute_force_null_homotopic(f: FactorizationMorphism, bound):
    """Independent oracle: exhaustive search for homotopies inside a window."""
    X, Y = f.source, f.target
    ctx = X.ctx
    elements = iter_elements(ctx, bound)
    size0 = X.n0 * Y.n1
    size1 = X.n1 * Y.n0
    for combo in product(elements, repeat=size0 + size1):
        H0 = Matrix(ctx, X.n0, Y.n1, tuple(combo[:size0]))
        H1 = Matrix(ctx, X.n1, Y.n0, tuple(combo[size0:]))
        h = Homotopy(H0, H1)
        g = null_morphism(X, Y, h)
        if g.F0 == f.F0 and g.F1 == f.F1:
            return h
    return None


def factor_through_trivials(f: FactorizationMorphism, h: Homotopy):
    """Explicit factorization of a null-homotopic f through trivial objects.

    Returns (u, v, s, t) with u: X -> theta1(n1 Y), v: theta1(n1 Y) -> Y,
    s: X -> theta0(n0 Y), t: theta0(n0 Y) -> Y, all genuine morphisms, and
    f = v.u + t.s.
    """
    X, Y = f.source, f.target
    ctx = X.ctx
    T1 = theta1(ctx, Y.n1)
    T0 = theta0(ctx, Y.n0)
    u = FactorizationMorphism(X, T1, h.H0.twist(1), X.D1.twist(-1) @ h.H0)
    v = FactorizationMorphism(T1, Y, Y.D1, Matrix.identity(ctx, Y.n1))
    s = FactorizationMorphism(X, T0, X.D0 @ h.H1, h.H1)
    t = FactorizationMorphism(T0, Y, Matrix.identity(ctx, Y.n0), Y.D0)
    return u, v, s, t


# ---------------------------------------------------------------------------
# Stable Hom
# ---------------------------------------------------------------------------


@dataclass
class StableHomDescription:
    ctx: object
    free_rank: int
    torsion: tuple  # base-domain invariant factors, canonical associates
    moduli: list  # per-generator annihilator (base element; zero = free)
    representatives: list  # one FactorizationMorphism per generator

    def is_zero(self):
        return self.free_rank == 0 and not self.torsion

    def fp_dimension(self):
        """Dimension over the prime field for polynomial-based kinds."""
        if self.free_rank:
            return None
        return sum(len(d) - 1 for d in self.torsion)

    def group_order(self):
        """Order of the underlying abelian group for integer-based kinds."""
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= abs(d)
        return out


def morphism_space(X, Y):
    """Flattened commuting-square constraints and the kernel basis (cached)."""
    return _morphism_space_cached(X, Y)


@lru_cache(maxsize=512)
def _morphism_space_cached(X, Y):
    ctx = X.ctx
    shapes = {"F0": (X.n0, Y.n0), "F1": (X.n1, Y.n1)}
    zero0 = Matrix.zero(ctx, X.n0, Y.n1)
    zero1 = Matrix.zero(ctx, X.n1, Y.n0)
    I0x = Matrix.identity(ctx, X.n0)
    I1x = Matrix.identity(ctx, X.n1)
    sq0 = equation(
        [(X.D0, "F1", 0, Matrix.identity(ctx, Y.n1)), (-I0x, "F0", 0, Y.D0)], zero0
    )
    sq1 = equation(
        [(X.D1, "F0", 0, Matrix.identity(ctx, Y.n0)), (-I1x, "F1", 1, Y.D1)], zero1
    )
    flat = flatten_system(ctx, shapes, [sq0, sq1])
    kern = kernel_columns(ctx.base_domain, flat.rows, ncols=flat.total)
    return flat, kern


def null_image_columns(X, Y, flat):
    """Images of the homotopy basis vectors inside morphism coordinates."""
    ctx = X.ctx
    from modfact.normalforms import expansion_basis

    basis = expansion_basis(ctx)
    cols = []
    for (rows, cols_shape, name) in ((X.n0, Y.n1, "H0"), (X.n1, Y.n0, "H1")):
        for k in range(rows):
            for l in range(cols_shape):
                for beta in basis:
                    H0 = Matrix.zero(ctx, X.n0, Y.n1)
                    H1 = Matrix.zero(ctx, X.n1, Y.n0)
                    ents0 = list(H0.entries)
                    ents1 = list(H1.entries)
                    if name == "H0":
                        ents0[k * Y.n1 + l] = beta
                    else:
                        ents1[k * Y.n0 + l] = beta
                    h = Homotopy(
                        Matrix(ctx, X.n0, Y.n1, tuple(ents0)),
                        Matrix(ctx, X.n1, Y.n0, tuple(ents1)),
                    )
                    g = null_morphism(X, Y, h)
                    cols.append(flat.flatten_assignment({"F0": g.F0, "F1": g.F1}))
    return cols


def stable_hom(X, Y) -> StableHomDescription:
    """Hom(X, Y) modulo null-homotopic morphisms, in diagonal coordinates."""
    ctx = X.ctx
    dom = ctx.base_domain
    flat, kern = morphism_space(X, Y)
    if not kern:
        return StableHomDescription(ctx, 0, (), [], [])
    kmat = [[kern[j][i] for j in range(len(kern))] for i in range(flat.total)]
    rel_rows = []
    for col in null_image_columns(X, Y, flat):
        coeffs = solve_columns(dom, kmat, col, ncols=len(kern))
        if coeffs is None:
            raise AssertionError("null-homotopic image escaped the morphism space")
        rel_rows.append(coeffs)
    form = quotient_row_form(dom, len(kern), rel_rows)
    reps = []
    moduli = []
    for gen, mod in zip(form.generators, form.moduli):
        if not dom.is_zero(mod) and dom.is_unit(mod):
            continue
        coords = [dom.zero] * flat.total
        for c, basis_col in zip(gen, kern):
            if not dom.is_zero(c):
                for i in range(flat.total):
                    coords[i] = dom.add(coords[i], dom.mul(c, basis_col[i]))
        mats = flat.unflatten(coords)
        reps.append(FactorizationMorphism(X, Y, mats["F0"], mats["F1"]))
        moduli.append(mod)
    return StableHomDescription(
        ctx, form.free_rank, tuple(form.torsion), moduli, reps
    )


def stably_equal(f, g) -> bool:
    return is_p_null_homotopic(morphism_sub(f, g)) is not None


def _residues(dom, d, height_bound, degree_bound):
    if dom.is_zero(d):
        if isinstance(dom, IntegerDomain):
            return list(range(-height_bound, height_bound + 1))
        return list(iter_base_polys(dom, degree_bound))
    if isinstance(dom, IntegerDomain):
        return list(range(abs(d)))
    return list(iter_base_polys(dom, len(d) - 2))


def iter_base_polys(dom: FpPolyDomain, max_deg):
    yield ()
    for degp1 in range(1, max_deg + 2):
        for cs in product(range(dom.p), repeat=degp1):
            if cs[-1] != 0:
                yield tuple(cs)


def _one_sided_stable_inverse(u, side_identity_on):
    """Solve for v with squares(v) and compose-with-u stably the identity."""
    X, Y = u.source, u.target
    ctx = X.ctx
    if side_identity_on == "source":
        # v: Y -> X with u then v == id_X modulo a homotopy
        shapes = {
            "V0": (Y.n0, X.n0),
            "V1": (Y.n1, X.n1),
            "H0": (X.n0, X.n1),
            "H1": (X.n1, X.n0),
        }
        sq0 = equation(
            [
                (Y.D0, "V1", 0, Matrix.identity(ctx, X.n1)),
                (-Matrix.identity(ctx, Y.n0), "V0", 0, X.D0),
            ],
            Matrix.zero(ctx, Y.n0, X.n1),
        )
        sq1 = equation(
            [
                (Y.D1, "V0", 0, Matrix.identity(ctx, X.n0)),
                (-Matrix.identity(ctx, Y.n1), "V1", 1, X.D1),
            ],
            Matrix.zero(ctx, Y.n1, X.n0),
        )
        comp0 = equation(
            [
                (u.F0, "V0", 0, Matrix.identity(ctx, X.n0)),
                (-X.D0, "H1", 0, Matrix.identity(ctx, X.n0)),
                (-Matrix.identity(ctx, X.n0), "H0", 1, X.D1),
            ],
            Matrix.identity(ctx, X.n0),
        )
        comp1 = equation(
            [
                (u.F1, "V1", 0, Matrix.identity(ctx, X.n1)),
                (-Matrix.identity(ctx, X.n1), "H1", 0, X.D0),
                (-X.D1.twist(-1), "H0", 0, Matrix.identity(ctx, X.n1)),
            ],
            Matrix.identity(ctx, X.n1),
        )
        sol = solve_linear(ctx, shapes, [sq0, sq1, comp0, comp1])
        if sol is None:
            return None
        return FactorizationMorphism(Y, X, sol["V0"], sol["V1"])
    # v: Y -> X with v then u == id_Y modulo a homotopy
    shapes = {
        "V0": (Y.n0, X.n0),
        "V1": (Y.n1, X.n1),
        "H0": (Y.n0, Y.n1),
        "H1": (Y.n1, Y.n0),
    }
    sq0 = equation(
        [
            (Y.D0, "V1", 0, Matrix.identity(ctx, X.n1)),
            (-Matrix.identity(ctx, Y.n0), "V0", 0, X.D0),
        ],
        Matrix.zero(ctx, Y.n0, X.n1),
    )
    sq1 = equation(
        [
            (Y.D1, "V0", 0, Matrix.identity(ctx, X.n0)),
            (-Matrix.identity(ctx, Y.n1), "V1", 1, X.D1),
        ],
        Matrix.zero(ctx, Y.n1, X.n0),
    )
    comp0 = equation(
        [
            (Matrix.identity(ctx, Y.n0), "V0", 0, u.F0),
            (-Y.D0, "H1", 0, Matrix.identity(ctx, Y.n0)),
            (-Matrix.identity(ctx, Y.n0), "H0", 1, Y.D1),
        ],
        Matrix.identity(ctx, Y.n0),
    )
    comp1 = equation(
        [
            (Matrix.identity(ctx, Y.n1), "V1", 0, u.F1),
            (-Matrix.identity(ctx, Y.n1), "H1", 0, Y.D0),
            (-Y.D1.twist(-1), "H0", 0, Matrix.identity(ctx, Y.n1)),
        ],
        Matrix.identity(ctx, Y.n1),
    )
    sol = solve_linear(ctx, shapes, [sq0, sq1, comp0, comp1])
    if sol is None:
        return None
    return FactorizationMorphism(Y, X, sol["V0"], sol["V1"])


def stable_iso(X, Y, height_bound=8, degree_bound=4, candidate_cap=20000) -> bool:
    """Stable isomorphism via bounded certificate search.

    The torsion part of the stable Hom group is enumerated completely; free
    parts are scanned within the bounds (integer coefficient height 8 and
    base-domain degree 4 by default).  With a nonzero free part an exhausted
    search raises SearchBoundExceeded instead of answering no.
    """
    ctx = X.ctx
    dom = ctx.base_domain
    # both stably zero: isomorphic to the zero object
    zero_x = is_p_null_homotopic(identity_morphism(X)) is not None
    zero_y = is_p_null_homotopic(identity_morphism(Y)) is not None
    if zero_x or zero_y:
        return zero_x and zero_y
    sh = stable_hom(X, Y)
    if sh.is_zero():
        return False
    residue_lists = [_residues(dom, d, height_bound, degree_bound) for d in sh.moduli]
    count = 1
    for r in residue_lists:
        count *= len(r)
    complete = sh.free_rank == 0
    if count > candidate_cap:
        raise SearchBoundExceeded(
            f"candidate space of size {count} exceeds the cap {candidate_cap}"
        )
    from modfact.factorizations import zero_morphism

    for combo in product(*residue_lists):
        if all(dom.is_zero(c) for c in combo):
            continue
        u = zero_morphism(X, Y)
        for c, rep in zip(combo, sh.representatives):
            if not dom.is_zero(c):
                u = morphism_add(u, morphism_scale(rep, ctx.embed_base(c)))
        if _one_sided_stable_inverse(u, "source") is None:
            continue
        if _one_sided_stable_inverse(u, "target") is None:
            continue
        return True
    if not complete:
        raise SearchBoundExceeded("no certificate within the free-part bound")
    return False


# ---------------------------------------------------------------------------
# Syzygies
# ---------------------------------------------------------------------------


def syzygy(X: ModuleFactorization) -> ModuleFactorization:
    """The syzygy of a factorization with free components.

    With free components one may take zero first syzygies of the components
    themselves, and the general construction collapses to the inverse shift;
    the equality is exact on matrices, not merely up to isomorphism.
    """
    return unshift(X)


def syzygy_general(X: ModuleFactorization, T0: Matrix, T1: Matrix) -> ModuleFactorization:
    """The syzygy via explicit redundant free covers (internal general path).

    The covers are A^{n+k} -> A^n with matrix [I; T]; their kernels have the
    explicit free bases [-T | I], which keeps every step matrix-exact.  The
    block formula below is the coordinate form of the general syzygy
    construction; with empty paddings it reduces literally to unshift.
    """
    ctx = X.ctx
    k0, k1 = T0.rows, T1.rows
    if T0.cols != X.n0 or T1.cols != X.n1:
        raise ValueError("padding shapes must be k0 x n0 and k1 x n1")
    p0, p1 = X.n0 + k0, X.n1 + k1
    Pi0 = Matrix.identity(ctx, X.n0).vstack(T0)
    Pi1 = Matrix.identity(ctx, X.n1).vstack(T1)
    J0 = (-T0).hstack(Matrix.identity(ctx, k0))
    J1 = (-T1).hstack(Matrix.identity(ctx, k1))
    Delta0 = (Pi0 @ X.D0).hstack(Matrix.zero(ctx, p0, k1))
    Delta1 = (Pi1.twist(1) @ X.D1).hstack(Matrix.zero(ctx, p1, k0))

    M0 = Matrix.scalar(ctx, p0, ctx.omega) - Delta0.twist(1) @ Delta1
    M0a, H0m = M0.split_cols(X.n0)
    if M0a != -(H0m @ T0):
        raise AssertionError("homotopy block H0 failed its defining identity")
    M1 = Matrix.scalar(ctx, p1, ctx.omega) - Delta1 @ Delta0
    M1a, H1m = M1.split_cols(X.n1)
    if M1a != -(H1m @ T1):
        raise AssertionError("homotopy block H1 failed its defining identity")

    D0_Z = Matrix.block(
        [[J0, Matrix.zero(ctx, k0, k1)], [-Delta1, H1m]]
    )
    D1_Z = Matrix.block(
        [[H0m, -Delta0.twist(1)], [Matrix.zero(ctx, k1, k0), J1.twist(1)]]
    )
    Z = ModuleFactorization(ctx, k0 + p1, p0 + k1, D0_Z, D1_Z)
    from modfact.factorizations import check_axioms

    ok, report = check_axioms(Z)
    if not ok:
        raise AssertionError(f"general syzygy path broke the axioms: {report}")
    return Z


def two_sided_ideal_check(f, pre, post) -> bool:
    """Null-homotopic morphisms absorb composition on both sides."""
    if is_p_null_homotopic(f) is None:
        raise ValueError("f must be null-homotopic")
    left = compose(pre, f)
    right = compose(f, post)
    return (
        is_p_null_homotopic(left) is not None
        and is_p_null_homotopic(right) is not None
    )
