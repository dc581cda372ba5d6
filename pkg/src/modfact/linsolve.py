"""Exact solver for matrix equations with twisted unknowns.

Equations have the shape  sum_i  C_i * tau_i(U_i) * C'_i  =  R  where the
C_i, C'_i, R are known matrices over the ring, the U_i are unknown matrices,
and tau_i is an entrywise power of sigma in {-1, 0, 1}.

Everything is flattened over a central free basis of the ring:

* integers / F_p[x]: the ring is its own base, basis {1};
* Z[x]/(x^n - 1): base Z, basis 1, x, ..., x^{n-1};
* F_{p^e}[x; Frob]: base F_p[y] with y = x^e (central since Frobenius has
  order e), basis g^j x^i for 0 <= j, i < e.  sigma fixes the base pointwise,
  so twisted terms stay base-linear.

The flattened system is solved by Smith reduction over the base domain.
Returned assignments are re-verified against the original equations by
direct multiplication; failure of that check is a bug, never an expected
outcome.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from modfact.matrices import Matrix
from modfact.normalforms import expansion_basis, solve_columns
from modfact.rings import GroupRing, IntegerRing, PolyRing, SkewPolyRing


@dataclass(frozen=True)
class Term:
    left: Matrix
    unknown: str
    twist: int  # entrywise sigma power applied to the unknown: -1, 0 or 1
    right: Matrix


@dataclass(frozen=True)
class MatrixEquation:
    terms: tuple
    rhs: Matrix


def equation(terms, rhs) -> MatrixEquation:
    return MatrixEquation(tuple(Term(*t) for t in terms), rhs)


@dataclass
class FlatSystem:
    """The base-domain image of a twisted matrix system."""

    ctx: object
    shapes: dict
    names: list
    offsets: dict
    rank: int
    total: int
    rows: list
    rhs: list

    def unflatten(self, x) -> dict:
        ctx = self.ctx
        out = {}
        for name in self.names:
            r, c = self.shapes[name]
            base = self.offsets[name]
            ents = []
            for k in range(r):
                for l in range(c):
                    lo = base + (k * c + l) * self.rank
                    ents.append(ctx.unexpand(x[lo : lo + self.rank]))
            out[name] = Matrix(ctx, r, c, tuple(ents))
        return out

    def flatten_assignment(self, assignment) -> list:
        ctx = self.ctx
        x = [None] * self.total
        for name in self.names:
            r, c = self.shapes[name]
            base = self.offsets[name]
            M = assignment[name]
            for k in range(r):
                for l in range(c):
                    lo = base + (k * c + l) * self.rank
                    x[lo : lo + self.rank] = ctx.expand(M[k, l])
        return x


def flatten_system(ctx, shapes: dict, equations) -> FlatSystem:
    dom = ctx.base_domain
    basis = expansion_basis(ctx)
    rank = len(basis)

    names = list(shapes)
    offsets = {}
    total = 0
    for name in names:
        r, c = shapes[name]
        offsets[name] = total
        total += r * c * rank

    rows = []
    rhs_vec = []
    for eq in equations:
        er, ec = eq.rhs.rows, eq.rhs.cols
        for a in range(er):
            for b in range(ec):
                coeff_rows = [[dom.zero] * total for _ in range(rank)]
                for term in eq.terms:
                    C, Cp = term.left, term.right
                    ur, uc = shapes[term.unknown]
                    if C.cols != ur or Cp.rows != uc:
                        raise ValueError("term shape mismatch")
                    base = offsets[term.unknown]
                    for k in range(ur):
                        cak = C[a, k]
                        if ctx.is_zero(cak):
                            continue
                        for l in range(uc):
                            clb = Cp[l, b]
                            if ctx.is_zero(clb):
                                continue
                            for t, beta in enumerate(basis):
                                val = ctx.mul(
                                    ctx.mul(cak, ctx.sigma_pow(beta, term.twist)), clb
                                )
                                col = base + (k * uc + l) * rank + t
                                for s, cv in enumerate(ctx.expand(val)):
                                    if not dom.is_zero(cv):
                                        coeff_rows[s][col] = dom.add(
                                            coeff_rows[s][col], cv
                                        )
                rhs_coords = ctx.expand(eq.rhs[a, b])
                for s in range(rank):
                    rows.append(coeff_rows[s])
                    rhs_vec.append(rhs_coords[s])
    return FlatSystem(ctx, dict(shapes), names, offsets, rank, total, rows, rhs_vec)


def solve_linear(ctx, shapes: dict, equations) -> dict | None:
    """Solve for the unknown matrices; None when unsolvable over the ring."""
    flat = flatten_system(ctx, shapes, equations)
    x = solve_columns(ctx.base_domain, flat.rows, flat.rhs, ncols=flat.total)
    if x is None:
        return None
    out = flat.unflatten(x)
    for eq in equations:
        if not _evaluate(ctx, eq, out):
            raise AssertionError("solver produced a non-verifying assignment")
    return out


def _evaluate(ctx, eq: MatrixEquation, assignment) -> bool:
    acc = Matrix.zero(ctx, eq.rhs.rows, eq.rhs.cols)
    for term in eq.terms:
        U = assignment[term.unknown]
        acc = acc + (term.left @ U.twist(term.twist) @ term.right)
    return acc == eq.rhs


def verify_assignment(ctx, equations, assignment) -> bool:
    return all(_evaluate(ctx, eq, assignment) for eq in equations)


# ---------------------------------------------------------------------------
# Brute-force enumeration (independent oracle for tiny instances)
# ---------------------------------------------------------------------------


def iter_elements(ctx, bound):
    """All ring elements inside a finite window, deterministically ordered.

    Window meaning: integers |a| <= bound; polynomial kinds degree <= bound
    over the full coefficient range; group ring coefficients |c| <= bound.
    """
    if isinstance(ctx, IntegerRing):
        return list(range(-bound, bound + 1))
    if isinstance(ctx, PolyRing):
        out = []
        for degp1 in range(bound + 2):
            for cs in product(range(ctx.p), repeat=degp1):
                if degp1 == 0:
                    out.append(())
                elif cs[-1] != 0:
                    out.append(tuple(cs))
        return out
    if isinstance(ctx, SkewPolyRing):
        gf = ctx.gf
        coeffs = gf.all_elements()
        out = []
        for degp1 in range(bound + 2):
            for cs in product(coeffs, repeat=degp1):
                if degp1 == 0:
                    out.append(())
                elif cs[-1] != gf.zero:
                    out.append(tuple(cs))
        return out
    if isinstance(ctx, GroupRing):
        rng = range(-bound, bound + 1)
        return [tuple(v) for v in product(rng, repeat=ctx.n)]
    raise TypeError(ctx)


def brute_force_solve(ctx, shapes, equations, bound):
    """Exhaustive search over the window; independent of the Smith-based path."""
    elements = iter_elements(ctx, bound)
    names = list(shapes)
    sizes = [shapes[n][0] * shapes[n][1] for n in names]
    slots = sum(sizes)
    for combo in product(elements, repeat=slots):
        idx = 0
        assignment = {}
        for name, size in zip(names, sizes):
            r, c = shapes[name]
            assignment[name] = Matrix(ctx, r, c, tuple(combo[idx : idx + size]))
            idx += size
        if all(_evaluate(ctx, eq, assignment) for eq in equations):
            return assignment
    return None
