"""Finitely presented modules over the base ring A and its quotient A/(omega).

A presentation is a generator count g together with a relation matrix whose
rows are relation vectors; module elements are row vectors of length g modulo
the row span of the relations.  Over the quotient, entries are kept reduced
in the canonical residue system of the kind.

The Gorenstein-projectivity decision is a per-ring oracle table, not a
general algorithm; each branch records the classifying fact that justifies
it.  Isomorphism fingerprints are Smith-form invariant factors where a
principal ideal domain is available, and underlying-abelian-group invariants
for the group-ring kind.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from modfact.matrices import Matrix
from modfact.normalforms import (
    det_comm,
    quotient_row_form,
    row_kernel,
    smith,
    smith_normal_form,
    solve_columns,
)
from modfact.rings import (
    FpPolyDomain,
    GroupRing,
    IntegerDomain,
    IntegerRing,
    PolyRing,
    SkewPolyRing,
    UnsupportedRing,
    poly_trim,
)


class NoOracle(Exception):
    """No shipped classification decides the query for this ring/quotient."""


class NotFinitePd(Exception):
    """No injective two-term free presentation over A was found."""


@dataclass(frozen=True)
class ModulePresentation:
    ctx: object
    over_quotient: bool
    generators: int
    relations: Matrix  # rows are relation vectors, exactly `generators` columns

    def __post_init__(self):
        if self.relations.cols != self.generators:
            raise ValueError("relation matrix must have one column per generator")


def presentation(ctx, rows, generators, over_quotient=True) -> ModulePresentation:
    M = Matrix.from_rows(ctx, rows) if rows else Matrix.zero(ctx, 0, generators)
    if over_quotient:
        M = M.reduce_mod_omega()
    return ModulePresentation(ctx, over_quotient, generators, M)


def cokernel_presentation(ctx, D: Matrix, over_quotient=True) -> ModulePresentation:
    """The cokernel of v -> v*D, with one generator per column of D."""
    M = D.reduce_mod_omega() if over_quotient else D
    return ModulePresentation(ctx, over_quotient, D.cols, M)


@dataclass(frozen=True)
class InvariantFactorForm:
    free_rank: int
    torsion: tuple

    def is_zero(self):
        return self.free_rank == 0 and not self.torsion

    def describe(self, ctx=None):
        if self.is_zero():
            return "zero module"
        parts = []
        if self.free_rank:
            parts.append(f"free rank {self.free_rank}")
        if self.torsion:
            ts = ", ".join(
                str(ctx.fmt(t)) if ctx is not None else str(t) for t in self.torsion
            )
            parts.append(f"torsion ({ts})")
        return "; ".join(parts)


def _stacked_quotient_relations(m: ModulePresentation) -> Matrix:
    """Relations of m viewed as an A-module: lifted rows plus omega*I."""
    ctx = m.ctx
    omega_rows = Matrix.scalar(ctx, m.generators, ctx.omega)
    if m.relations.rows == 0:
        return omega_rows
    return m.relations.vstack(omega_rows)


def invariant_factors(m: ModulePresentation) -> InvariantFactorForm:
    """Isomorphism fingerprint.

    PID kinds: Smith invariant factors (over A; quotient modules are handled
    by adjoining the omega relations, so every factor divides omega and
    factors associate to omega count as free quotient summands).
    Group ring: invariant factors of the underlying abelian group.
    Skew kind: the quotient is the Galois field, so the form is a dimension.
    """
    ctx = m.ctx
    if isinstance(ctx, (IntegerRing, PolyRing)):
        if m.over_quotient:
            rel = _stacked_quotient_relations(m)
            diag, _, _ = smith_normal_form(ctx, rel)
            omega_assoc, _ = ctx.normalize(ctx.omega)
            free = sum(1 for d in diag if d == omega_assoc)
            torsion = tuple(
                d
                for d in diag
                if not ctx.is_zero(d)
                and ctx.height(d) > ctx.height(ctx.one)
                and d != omega_assoc
            )
            return InvariantFactorForm(free, torsion)
        diag, _, _ = smith_normal_form(ctx, m.relations)
        nonzero = [d for d in diag if not ctx.is_zero(d)]
        torsion = tuple(d for d in nonzero if ctx.height(d) > ctx.height(ctx.one))
        return InvariantFactorForm(m.generators - len(nonzero), torsion)
    if isinstance(ctx, GroupRing):
        return underlying_abelian_form(m)
    if isinstance(ctx, SkewPolyRing):
        if not m.over_quotient:
            raise UnsupportedRing("skew: no invariant factors over the skew ring itself")
        gf = ctx.gf
        rows = [
            [_skew_residue(ctx, e) for e in m.relations.row(i)]
            for i in range(m.relations.rows)
        ]
        rank = field_rank(gf, rows)
        return InvariantFactorForm(m.generators - rank, ())
    raise UnsupportedRing(ctx.kind)


def _skew_residue(ctx, a):
    """Image of a skew polynomial in A/(x) = F_{p^e}."""
    return a[0] if a else ctx.gf.zero


def expanded_relation_rows(m: ModulePresentation):
    """Integer relation rows of the scalar-expanded (underlying) Z-module."""
    ctx = m.ctx
    assert isinstance(ctx, GroupRing)
    rows = []
    for i in range(m.relations.rows):
        for t in range(ctx.n):
            xt = ctx.x_power(t)
            vec = []
            for j in range(m.generators):
                vec.extend(ctx.expand(ctx.mul(xt, m.relations[i, j])))
            rows.append(vec)
    if m.over_quotient:
        size = m.generators * ctx.n
        for i in range(size):
            row = [0] * size
            row[i] = ctx.p
            rows.append(row)
    return rows


def underlying_abelian_form(m: ModulePresentation) -> InvariantFactorForm:
    ctx = m.ctx
    dom = IntegerDomain()
    rows = expanded_relation_rows(m)
    size = m.generators * ctx.n
    if not rows:
        return InvariantFactorForm(size, ())
    sm = smith(dom, rows)
    nonzero = [d for d in sm.diag if d != 0]
    torsion = tuple(d for d in nonzero if d != 1)
    return InvariantFactorForm(size - len(nonzero), torsion)


def is_gorenstein_projective(m: ModulePresentation) -> bool:
    """Oracle table; each branch cites the classifying fact that justifies it."""
    ctx = m.ctx
    if m.over_quotient:
        # A/(omega) is self-injective in all four kinds (Z/m and F_p[x]/(f)
        # are products of local complete intersections, F_{p^e} is a field,
        # F_pC_n is a group algebra), and over a self-injective ring every
        # module is Gorenstein projective.
        return True
    if isinstance(ctx, (IntegerRing, PolyRing)):
        # hereditary domains: Gorenstein projective = projective = free
        return not invariant_factors(m).torsion
    if isinstance(ctx, GroupRing):
        # over ZG a module is Gorenstein projective iff its underlying
        # abelian group is free (it is a lattice)
        return not underlying_abelian_form(m).torsion
    raise NoOracle(f"no Gorenstein-projectivity oracle over {ctx.kind} itself")


def underlying_syzygy_form(N: ModulePresentation) -> InvariantFactorForm:
    """Underlying-abelian-group form of the kernel of the free cover A^g -> N.

    The kernel is generated (as a Z-module) by the expanded relation rows;
    its relations are the integer row-kernel of that generating matrix.
    """
    ctx = N.ctx
    assert isinstance(ctx, GroupRing) and N.over_quotient
    dom = IntegerDomain()
    gen_rows = expanded_relation_rows(N)
    if not gen_rows:
        return InvariantFactorForm(0, ())
    kernel_rows = row_kernel(dom, gen_rows)
    form = quotient_row_form(dom, len(gen_rows), kernel_rows)
    return InvariantFactorForm(form.free_rank, tuple(form.torsion))


# ---------------------------------------------------------------------------
# Free covers: injective two-term free presentations over A
# ---------------------------------------------------------------------------


def free_cover_step(m: ModulePresentation):
    """An injective A-matrix D whose cokernel is isomorphic to m over A/(omega).

    Returns (D, certificate).  Injectivity is certified by the normal form
    (no zero invariant factor over PID kinds, full expanded rank otherwise).
    Raises NotFinitePd when no such presentation is found; over the
    group-ring kind with p dividing n this is a mathematically possible
    outcome, not a failure of the search alone.
    """
    ctx = m.ctx
    if not m.over_quotient:
        raise ValueError("free_cover_step expects a quotient-side module")
    if isinstance(ctx, (IntegerRing, PolyRing)):
        rel = _stacked_quotient_relations(m)
        diag, _, _ = smith_normal_form(ctx, rel)
        factors = [d for d in diag if ctx.height(d) > ctx.height(ctx.one)]
        D = Matrix.block_diag(ctx, [Matrix.from_rows(ctx, [[d]]) for d in factors])
        cert = {
            "injective": True,
            "invariant_factors": [ctx.fmt(d) for d in factors],
        }
        return D, cert
    if isinstance(ctx, SkewPolyRing):
        dim = invariant_factors(m).free_rank
        D = Matrix.block_diag(
            ctx, [Matrix.from_rows(ctx, [[ctx.x()]]) for _ in range(dim)]
        )
        cert = {"injective": True, "dimension": dim}
        return D, cert
    if isinstance(ctx, GroupRing):
        return _group_free_cover(m)
    raise UnsupportedRing(ctx.kind)


def _group_free_cover(m: ModulePresentation):
    if m.ctx.n % m.ctx.p != 0:
        return _group_free_cover_semisimple(m)
    return _group_free_cover_selection(m)


def _group_free_cover_semisimple(m: ModulePresentation):
    """p does not divide n: split over the simple factors of F_pC_n.

    x^n - 1 is squarefree mod p, so the quotient is a product of fields
    F_p[x]/(f).  For each irreducible factor f a bounded search finds a
    single element generating the ideal (p, f(x)) of A; the cover is the
    block diagonal of those generators with the multiplicities of m.
    """
    ctx = m.ctx
    dom = FpPolyDomain(ctx.p)
    xn1 = poly_trim([-1 % ctx.p] + [0] * (ctx.n - 1) + [1])
    factors = factor_poly_over_fp(ctx.p, xn1)
    blocks = []
    detail = []
    for f in factors:
        mult = _multiplicity_at_factor(m, f)
        if mult == 0:
            continue
        gen = _principal_generator(ctx, f)
        if gen is None:
            raise NotFinitePd(
                f"no principal generator found for the factor {dom.fmt(f)}"
            )
        for _ in range(mult):
            blocks.append(Matrix.from_rows(ctx, [[gen]]))
        detail.append({"factor": dom.fmt(f), "multiplicity": mult})
    D = Matrix.block_diag(ctx, blocks)
    _assert_cover_matches(m, D)
    return D, {"injective": True, "simple_factors": detail}


def _multiplicity_at_factor(m: ModulePresentation, f) -> int:
    """dim over F_p[x]/(f) of m tensored at that simple factor."""
    ctx = m.ctx
    field = FpQuotientField(ctx.p, f)
    rows = []
    for i in range(m.relations.rows):
        rows.append([field.from_group_elem(e) for e in m.relations.row(i)])
    return m.generators - field_rank(field, rows)


_PRINCIPAL_CACHE = {}


def _principal_generator(ctx, f):
    """Bounded search for alpha with (alpha) = (p, f(x)) inside Z[x]/(x^n-1)."""
    key = (ctx.n, ctx.p, f)
    if key in _PRINCIPAL_CACHE:
        return _PRINCIPAL_CACHE[key]
    out = _principal_generator_search(ctx, f)
    _PRINCIPAL_CACHE[key] = out
    return out


def _principal_generator_search(ctx, f):
    dom = IntegerDomain()
    p, n = ctx.p, ctx.n
    fp = FpPolyDomain(p)
    ideal_rows = _expanded_ideal_rows(ctx, f)
    deg_f = len(f) - 1
    target = p**deg_f
    for coeffs in product(range(-2, 3), repeat=n):
        alpha = tuple(coeffs)
        if alpha == ctx.zero:
            continue
        # membership: alpha mod p must vanish at the factor f
        apoly = poly_trim([c % p for c in alpha])
        if fp.divmod(apoly, f)[1] != ():
            continue
        rho = [list(ctx.expand(ctx.mul(ctx.x_power(t), alpha))) for t in range(n)]
        if abs(det_comm(dom, rho)) != target:
            continue
        if _row_spans_equal(dom, rho, ideal_rows):
            return alpha
    return None


def _expanded_ideal_rows(ctx, f):
    rows = []
    fl = tuple(int(c) for c in f) + (0,) * (ctx.n - len(f))
    for t in range(ctx.n):
        rows.append(list(ctx.expand(ctx.mul(ctx.x_power(t), ctx.int_scalar(ctx.p)))))
        rows.append(list(ctx.expand(ctx.mul(ctx.x_power(t), fl))))
    return rows


def _row_spans_equal(dom, rows_a, rows_b) -> bool:
    return _span_contains_all(dom, rows_a, rows_b) and _span_contains_all(
        dom, rows_b, rows_a
    )


def _span_contains_all(dom, basis_rows, rows) -> bool:
    if not rows:
        return True
    cols = [
        [basis_rows[i][j] for i in range(len(basis_rows))]
        for j in range(len(basis_rows[0]))
    ]
    for v in rows:
        if solve_columns(dom, cols, list(v)) is None:
            return False
    return True


def _group_free_cover_selection(m: ModulePresentation):
    """p divides n: look for g stacked relation rows that freely span the kernel.

    This covers quotient-free modules (the omega rows themselves) and small
    perturbations; when no selection works the module may genuinely admit no
    finite free presentation, reported as NotFinitePd.
    """
    ctx = m.ctx
    dom = IntegerDomain()
    if m.generators == 0:
        return Matrix.zero(ctx, 0, 0), {"injective": True, "selected_rows": []}
    stacked = _stacked_quotient_relations(m)
    rows = [list(stacked.row(i)) for i in range(stacked.rows)]
    target_rows = expanded_relation_rows(m)
    tried = 0
    for combo in combinations(range(len(rows)), m.generators):
        tried += 1
        if tried > 300:
            break
        cand = [rows[i] for i in combo]
        D = Matrix.from_rows(ctx, cand) if cand else Matrix.zero(ctx, 0, m.generators)
        expanded = []
        for i in combo:
            for t in range(ctx.n):
                xt = ctx.x_power(t)
                vec = []
                for j in range(m.generators):
                    vec.extend(ctx.expand(ctx.mul(xt, rows[i][j])))
                expanded.append(vec)
        if not target_rows:
            continue
        kern = row_kernel(dom, expanded)
        if kern:
            continue  # not injective
        if not _row_spans_equal(dom, expanded, target_rows):
            continue
        _assert_cover_matches(m, D)
        return D, {"injective": True, "selected_rows": list(combo)}
    raise NotFinitePd(
        "no injective free presentation found (finite projective dimension may fail)"
    )


def _assert_cover_matches(m: ModulePresentation, D: Matrix):
    got = invariant_factors(cokernel_presentation(m.ctx, D, over_quotient=True))
    want = invariant_factors(m)
    if got != want:
        raise AssertionError(f"free cover mismatch: {got} != {want}")


# ---------------------------------------------------------------------------
# Small field helpers
# ---------------------------------------------------------------------------


def field_rank(field, rows) -> int:
    """Gaussian elimination rank over any small field object."""
    rows = [list(r) for r in rows if any(not field.is_zero(e) for e in r)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    while rows and col < ncols:
        piv = next(
            (i for i in range(rank, len(rows)) if not field.is_zero(rows[i][col])),
            None,
        )
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = field.inv(rows[rank][col])
        rows[rank] = [field.mul(inv, e) for e in rows[rank]]
        for i in range(len(rows)):
            if i != rank and not field.is_zero(rows[i][col]):
                c = rows[i][col]
                rows[i] = [
                    field.add(e, field.neg(field.mul(c, pe)))
                    for e, pe in zip(rows[i], rows[rank])
                ]
        rank += 1
        col += 1
    return rank


class FpQuotientField:
    """F_p[x]/(f) for an irreducible f; elements are reduced coefficient tuples."""

    def __init__(self, p, f):
        self.dom = FpPolyDomain(p)
        self.p = p
        self.f = f
        self.zero = ()
        self.one = (1,)

    def from_group_elem(self, a):
        return self.dom.divmod(poly_trim([c % self.p for c in a]), self.f)[1]

    def add(self, a, b):
        return self.dom.add(a, b)

    def neg(self, a):
        return self.dom.neg(a)

    def mul(self, a, b):
        return self.dom.divmod(self.dom.mul(a, b), self.f)[1]

    def inv(self, a):
        g, s, _ = ext_gcd(self.dom, a, self.f)
        if len(g) != 1:
            raise ZeroDivisionError("not invertible modulo f")
        c = pow(g[0], self.p - 2, self.p)
        return self.mul((c,), self.dom.divmod(s, self.f)[1])

    def is_zero(self, a):
        return a == ()


def ext_gcd(dom, a, b):
    """g, s, t with s*a + t*b = g over a Euclidean domain."""
    s, s1 = dom.one, dom.zero
    t, t1 = dom.zero, dom.one
    g, g1 = a, b
    while not dom.is_zero(g1):
        q, r = dom.divmod(g, g1)
        g, g1 = g1, r
        s, s1 = s1, dom.sub(s, dom.mul(q, s1))
        t, t1 = t1, dom.sub(t, dom.mul(q, t1))
    return g, s, t


def factor_poly_over_fp(p, f):
    """Irreducible monic factors of a squarefree monic polynomial over F_p."""
    dom = FpPolyDomain(p)
    factors = []
    rest = f
    deg = 1
    while len(rest) - 1 > 0:
        if len(rest) - 1 == 1:
            factors.append(dom.normalize(rest)[0])
            break
        found = False
        for cand in _monic_polys(p, deg):
            q, r = dom.divmod(rest, cand)
            if r == () and len(cand) - 1 >= 1:
                if _is_irreducible(dom, cand):
                    factors.append(cand)
                    rest = q
                    found = True
                    break
        if not found:
            deg += 1
            if deg > len(rest) - 1:
                factors.append(dom.normalize(rest)[0])
                break
    return sorted(factors)


def _monic_polys(p, deg):
    for cs in product(range(p), repeat=deg):
        yield poly_trim(list(cs) + [1])


def _is_irreducible(dom, f):
    d = len(f) - 1
    if d <= 1:
        return True
    for deg in range(1, d // 2 + 1):
        for cand in _monic_polys(dom.p, deg):
            if dom.divmod(f, cand)[1] == ():
                return False
    return True
