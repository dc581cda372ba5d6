"""Desk-scale verification suites with structured, deterministic reports.

Every suite consumes an explicit seed and a corpus (built-in by default) and
emits a Report whose JSON schema is stable:

    {suite, ring, seed, scope_note, instances: [{id, checks: [...]}], summary}

A report never claims more than "no counterexample in corpus"; the quotient
construction on the stable category has no harness of its own, only its
ingredient functors are exercised (through the adjunction suite), and the
scope_note field says so.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from modfact.cokfun import (
    cok0,
    cok0_on_morphism,
    factors_through_projective_quotient,
    is_projective_over_quotient,
    lift_map,
    mf_from_module,
    pd_over_A,
    periodic_resolution,
    quotient_map,
    maps_equal,
    ExactnessFailure,
)
from modfact.factorizations import (
    FactorizationMorphism,
    check_axioms,
    compose,
    conjugate,
    direct_sum,
    factorization,
    identity_morphism,
    is_morphism,
    random_invertible,
    theta0,
    theta1,
    shift,
)
from modfact.homotopy import is_p_null_homotopic, morphism_space
from modfact.linsolve import flatten_system, equation
from modfact.matrices import Matrix
from modfact.modules import (
    ModulePresentation,
    NotFinitePd,
    invariant_factors,
    is_gorenstein_projective,
    presentation,
    underlying_syzygy_form,
)
from modfact.normalforms import kernel_columns
from modfact.rings import (
    GroupRing,
    IntegerRing,
    PolyRing,
    SkewPolyRing,
)

SCOPE_NOTE = (
    "stable-category quotient constructions are not verified directly; "
    "only their ingredient functors (the trivial-object functors and the "
    "projections) are exercised, through the adjunction suite"
)


@dataclass
class Check:
    name: str
    status: str  # "pass" | "fail"
    witness: object = None

    def to_dict(self):
        out = {"name": self.name, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Instance:
    id: str
    checks: list = field(default_factory=list)

    def check(self, name, ok, witness=None):
        self.checks.append(
            Check(name, "pass" if ok else "fail", witness if not ok else None)
        )
        return ok

    def to_dict(self):
        return {"id": self.id, "checks": [c.to_dict() for c in self.checks]}


@dataclass
class Report:
    suite: str
    ring: str
    seed: int
    instances: list = field(default_factory=list)

    def new_instance(self, iid):
        inst = Instance(iid)
        self.instances.append(inst)
        return inst

    @property
    def passed(self):
        return all(c.status == "pass" for i in self.instances for c in i.checks)

    def to_dict(self):
        failures = sum(
            1 for i in self.instances for c in i.checks if c.status == "fail"
        )
        return {
            "suite": self.suite,
            "ring": self.ring,
            "seed": self.seed,
            "scope_note": SCOPE_NOTE,
            "instances": [i.to_dict() for i in self.instances],
            "summary": {
                "pass": self.passed,
                "failed_checks": failures,
                "statement": (
                    "no counterexample in corpus"
                    if self.passed
                    else "counterexample found in corpus"
                ),
            },
        }


def ring_label(ctx) -> str:
    if isinstance(ctx, IntegerRing):
        return f"integers omega={ctx.omega}"
    if isinstance(ctx, PolyRing):
        return f"GF({ctx.p})[x] omega={ctx.fmt(ctx.omega)}"
    if isinstance(ctx, SkewPolyRing):
        return f"GF({ctx.p}^{ctx.e})[x;Frob] omega=x"
    if isinstance(ctx, GroupRing):
        return f"Z[C{ctx.n}] omega={ctx.p}"
    return ctx.kind


RING_PRESETS = {
    "z5": lambda: IntegerRing(5),
    "z6": lambda: IntegerRing(6),
    "f2x2": lambda: PolyRing(2, (0, 0, 1)),
    "f2x3": lambda: PolyRing(2, (0, 0, 0, 1)),
    "f2x4": lambda: PolyRing(2, (0, 0, 0, 0, 1)),
    "f4": lambda: SkewPolyRing(2, 2),
    "f9": lambda: SkewPolyRing(3, 2),
    "zc2p3": lambda: GroupRing(2, 3),
    "zc3p2": lambda: GroupRing(3, 2),
    "zc2p2": lambda: GroupRing(2, 2),
}


# ---------------------------------------------------------------------------
# Deterministic corpora and samplers
# ---------------------------------------------------------------------------


def standard_corpus(ctx, seed=0):
    """Built-in factorization corpus for a ring, plus seeded conjugates."""
    rng = random.Random(seed)
    items = [("theta0_1", theta0(ctx, 1)), ("theta1_1", theta1(ctx, 1))]
    if isinstance(ctx, IntegerRing):
        w = abs(ctx.omega)
        for d in range(2, w):
            if w % d == 0:
                items.append((f"d{d}", factorization(ctx, [[d]], [[w // d]])))
    if isinstance(ctx, PolyRing):
        n = len(ctx.omega) - 1
        for i in range(1, n):
            items.append(
                (
                    f"x{i}_x{n - i}",
                    factorization(ctx, [[ctx.x(i)]], [[ctx.x(n - i)]]),
                )
            )
    if isinstance(ctx, SkewPolyRing):
        gf = ctx.gf
        alpha = ctx.const((0, 1))
        # ([c], [sigma(c)^-1 x]) and ([c x], [c^-1]) factor omega = x
        inv_sig = (gf.inv(gf.frob((0, 1))),)
        items.append(("const_then_x", factorization(ctx, [[alpha]], [[ctx.mul(inv_sig, ctx.x())]])))
        inv = (gf.inv((0, 1)),)
        items.append(("x_then_const", factorization(ctx, [[ctx.mul(alpha, ctx.x())]], [[inv]])))
    if isinstance(ctx, GroupRing) and ctx.n % ctx.p != 0:
        for gid, N in standard_quotient_modules(ctx, seed)[:2]:
            items.append((f"mf_{gid}", mf_from_module(N)))
    base = direct_sum(theta0(ctx, 1), theta1(ctx, 1))
    U, Uinv = random_invertible(ctx, 2, rng)
    V, Vinv = random_invertible(ctx, 2, rng)
    items.append(("conjugate_theta_sum", conjugate(base, U, Uinv, V, Vinv)))
    if len(items) > 2:
        items.append(("sum_mixed", direct_sum(items[2][1], theta0(ctx, 1))))
    return items


def standard_quotient_modules(ctx, seed=0, count=6):
    """Deterministic small quotient-side modules for a ring."""
    rng = random.Random(seed)
    out = [("free1", presentation(ctx, [], 1, over_quotient=True))]
    if isinstance(ctx, IntegerRing):
        w = abs(ctx.omega)
        divs = [d for d in range(2, w + 1) if w % d == 0]
        for d in divs:
            out.append((f"tor{d}", presentation(ctx, [[d]], 1, over_quotient=True)))
    if isinstance(ctx, PolyRing):
        n = len(ctx.omega) - 1
        for i in range(1, n + 1):
            out.append((f"x{i}", presentation(ctx, [[ctx.x(i)]], 1, over_quotient=True)))
    if isinstance(ctx, SkewPolyRing):
        out.append(("dim2", presentation(ctx, [], 2, over_quotient=True)))
    if isinstance(ctx, GroupRing):
        out.append(("trivial", presentation(ctx, [[_aug_relation(ctx)]], 1, over_quotient=True)))
        out.append(
            ("free_plus_trivial", presentation(ctx, [[_aug_relation(ctx), ctx.zero]], 2, over_quotient=True))
        )
    while len(out) < count:
        out.append((f"rand{len(out)}", random_quotient_module(ctx, rng)))
    return out[:count]


def _aug_relation(ctx):
    # the relation x - 1, cutting out the trivial module
    out = [0] * ctx.n
    out[0] = -1
    out[1 % ctx.n] = 1
    return tuple(out)


def random_quotient_module(ctx, rng) -> ModulePresentation:
    # sampling distribution (fixed for reproducibility): integer entries
    # uniform in [-5, 5], polynomial degrees <= 3, skew degrees <= 2,
    # group-ring coefficients in [-3, 3]; 1-2 generators, 0-2 relations
    g = rng.randint(1, 2)
    nrel = rng.randint(0, 2)
    rows = [[ctx.random_element(rng) for _ in range(g)] for _ in range(nrel)]
    return presentation(ctx, rows, g, over_quotient=True)


def random_base_elem(dom, rng):
    if hasattr(dom, "p"):
        deg = rng.randint(0, 1)
        from modfact.rings import poly_trim

        return poly_trim([rng.randrange(dom.p) for _ in range(deg + 1)])
    return rng.randint(-2, 2)


def random_well_defined_map(N, M, rng):
    """A random well-defined quotient-module map N -> M (possibly zero)."""
    ctx = N.ctx
    dom = ctx.base_domain
    n, m = N.generators, M.generators
    rN, rM = N.relations.rows, M.relations.rows
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
    kern = kernel_columns(dom, flat.rows, ncols=flat.total)
    coords = [dom.zero] * flat.total
    for col in kern:
        c = random_base_elem(dom, rng)
        if not dom.is_zero(c):
            for i in range(flat.total):
                coords[i] = dom.add(coords[i], dom.mul(c, col[i]))
    mats = flat.unflatten(coords)
    return _map_from_matrix(N, M, mats["H"])


def _map_from_matrix(N, M, H):
    return quotient_map(N, M, [list(H.row(i)) for i in range(H.rows)] if H.rows else None)


def random_morphism(X, Y, rng):
    """A random genuine morphism X -> Y built on the morphism-space basis."""
    ctx = X.ctx
    dom = ctx.base_domain
    flat, kern = morphism_space(X, Y)
    coords = [dom.zero] * flat.total
    for col in kern:
        c = random_base_elem(dom, rng)
        if not dom.is_zero(c):
            for i in range(flat.total):
                coords[i] = dom.add(coords[i], dom.mul(c, col[i]))
    mats = flat.unflatten(coords)
    return FactorizationMorphism(X, Y, mats["F0"], mats["F1"])


# ---------------------------------------------------------------------------
# Suite: density, fullness and faithfulness of the zeroth cokernel functor
# ---------------------------------------------------------------------------


def verify_theorem1_desk(ctx, corpus=None, seed=0, map_samples=12) -> Report:
    rep = Report("theorem1", ring_label(ctx), seed)
    corpus = corpus if corpus is not None else standard_corpus(ctx, seed)
    rng = random.Random(seed)
    valid = []
    for cid, X in corpus:
        inst = rep.new_instance(f"object:{cid}")
        ok, why = check_axioms(X)
        if not inst.check("axioms", ok, why):
            continue  # abort this instance only
        valid.append((cid, X))
        N = cok0(X)
        try:
            X2 = mf_from_module(N)
            inst.check(
                "density_roundtrip",
                invariant_factors(cok0(X2)) == invariant_factors(N),
                {"object": cid},
            )
        except (NotFinitePd, AssertionError) as e:
            inst.check("density_roundtrip", False, str(e))
        inst.check("gp_condition", is_gorenstein_projective(N), {"object": cid})
    for k in range(map_samples):
        cid_x, X = valid[rng.randrange(len(valid))]
        cid_y, Y = valid[rng.randrange(len(valid))]
        inst = rep.new_instance(f"map:{k}:{cid_x}->{cid_y}")
        g = random_well_defined_map(cok0(X), cok0(Y), rng)
        try:
            f = lift_map(X, Y, g)
            inst.check("fullness_roundtrip", maps_equal(cok0_on_morphism(f), g))
        except Exception as e:  # noqa: BLE001 - reported, not raised
            inst.check("fullness_roundtrip", False, repr(e))
        zero_g = quotient_map(cok0(X), cok0(Y), None)
        fz = lift_map(X, Y, zero_g)
        inst.check("lift_zero_null_homotopic", is_p_null_homotopic(fz) is not None)
        f_rand = random_morphism(X, Y, rng)
        nh = is_p_null_homotopic(f_rand) is not None
        proj = factors_through_projective_quotient(cok0_on_morphism(f_rand))
        inst.check("faithfulness_agreement", nh == proj, {"null": nh, "proj": proj})
    return rep


# ---------------------------------------------------------------------------
# Suite: matrix factorizations against finite-projective-dimension modules
# ---------------------------------------------------------------------------


def verify_theorem3_desk(ctx, corpus=None, seed=0, module_samples=8) -> Report:
    rep = Report("theorem3", ring_label(ctx), seed)
    corpus = corpus if corpus is not None else standard_corpus(ctx, seed)
    for cid, X in corpus:
        inst = rep.new_instance(f"object:{cid}")
        ok, why = check_axioms(X)
        if not inst.check("axioms", ok, why):
            continue
        N = cok0(X)
        try:
            pd, _cert = pd_over_A(N)
            inst.check("pd_at_most_one", pd in (0, 1), {"pd": pd})
        except NotFinitePd as e:
            inst.check("pd_at_most_one", False, str(e))
        try:
            periodic_resolution(X, 4)
            inst.check("periodic_resolution_exact", True)
        except ExactnessFailure as e:
            inst.check("periodic_resolution_exact", False, str(e))
    mods = standard_quotient_modules(ctx, seed, count=module_samples)
    for mid, N in mods:
        inst = rep.new_instance(f"module:{mid}")
        try:
            X = mf_from_module(N)
            inst.check("density_restricted", is_morphism(identity_morphism(X)))
            inst.check(
                "cokernel_matches",
                invariant_factors(cok0(X)) == invariant_factors(N),
            )
        except NotFinitePd as e:
            inst.check("density_restricted", False, str(e))
    return rep


# ---------------------------------------------------------------------------
# Suite: Gorenstein-projectivity transfer along the free cover
# ---------------------------------------------------------------------------


def verify_gp_transfer(n, p, seed=0, samples=20) -> Report:
    ctx = GroupRing(n, p)
    rep = Report("gp-transfer", ring_label(ctx), seed)
    rng = random.Random(seed)
    for k in range(samples):
        inst = rep.new_instance(f"module:{k}")
        N = random_quotient_module(ctx, rng)
        inst.check("quotient_side_gp", is_gorenstein_projective(N))
        form = underlying_syzygy_form(N)
        inst.check(
            "syzygy_is_lattice",
            not form.torsion,
            {"torsion": [int(t) for t in form.torsion]},
        )
    inst = rep.new_instance("negative_control:torsion_module")
    torsion_mod = presentation(
        ctx, [[ctx.int_scalar(2)] + [ctx.zero] * 0], 1, over_quotient=False
    )
    inst.check(
        "torsion_module_not_gp", not is_gorenstein_projective(torsion_mod)
    )
    return rep


# ---------------------------------------------------------------------------
# Suite: the four adjunctions of the trivial-object and projection functors
# ---------------------------------------------------------------------------


def adj_theta0_fwd(ctx, G, X):
    """Hom_A(M, X^0) -> Hom(theta0(M), X):  G |-> (G, G @ D0)."""
    return FactorizationMorphism(theta0(ctx, G.rows), X, G, G @ X.D0)


def adj_pr0_fwd(ctx, X, G):
    """Hom_A(X^0, M) -> Hom(X, S theta0(M)): G |-> (G, -(D1 @ G) twisted back)."""
    return FactorizationMorphism(
        X, shift(theta0(ctx, G.cols)), G, -(X.D1 @ G).twist(-1)
    )


def adj_theta1_fwd(ctx, G, X):
    """Hom_A(M, X^1) -> Hom(theta1(M), X): G |-> (sigma(G) @ D1, G)."""
    return FactorizationMorphism(theta1(ctx, G.rows), X, G.twist(1) @ X.D1, G)


def adj_pr1_fwd(ctx, X, G):
    """Hom_A(X^1, M) -> Hom(X, theta0(M)): G |-> (D0 @ G, G)."""
    return FactorizationMorphism(X, theta0(ctx, G.cols), X.D0 @ G, G)


def verify_adjunctions(ctx, seed=0, samples=50, corpus=None) -> Report:
    rep = Report("adjunctions", ring_label(ctx), seed)
    rng = random.Random(seed)
    corpus = corpus if corpus is not None else standard_corpus(ctx, seed)
    for k in range(samples):
        cid, X = corpus[k % len(corpus)]
        m = rng.randint(1, 2)
        inst = rep.new_instance(f"pair:{k}:M(rank {m}),{cid}")

        G0 = Matrix.from_rows(ctx, [[ctx.random_element(rng) for _ in range(X.n0)] for _ in range(m)])
        f1 = adj_theta0_fwd(ctx, G0, X)
        inst.check("theta0_pr0_valid", is_morphism(f1))
        inst.check("theta0_pr0_roundtrip", f1.F0 == G0)
        inst.check("theta0_pr0_complete", _complete_on_basis(ctx, theta0(ctx, m), X, lambda f: adj_theta0_fwd(ctx, f.F0, X)))

        G0b = Matrix.from_rows(ctx, [[ctx.random_element(rng) for _ in range(m)] for _ in range(X.n0)])
        f2 = adj_pr0_fwd(ctx, X, G0b)
        inst.check("pr0_stheta0_valid", is_morphism(f2))
        inst.check("pr0_stheta0_roundtrip", f2.F0 == G0b)
        inst.check("pr0_stheta0_complete", _complete_on_basis(ctx, X, shift(theta0(ctx, m)), lambda f: adj_pr0_fwd(ctx, X, f.F0)))

        G1 = Matrix.from_rows(ctx, [[ctx.random_element(rng) for _ in range(X.n1)] for _ in range(m)])
        f3 = adj_theta1_fwd(ctx, G1, X)
        inst.check("theta1_pr1_valid", is_morphism(f3))
        inst.check("theta1_pr1_roundtrip", f3.F1 == G1)
        inst.check("theta1_pr1_complete", _complete_on_basis(ctx, theta1(ctx, m), X, lambda f: adj_theta1_fwd(ctx, f.F1, X)))

        G1b = Matrix.from_rows(ctx, [[ctx.random_element(rng) for _ in range(m)] for _ in range(X.n1)])
        f4 = adj_pr1_fwd(ctx, X, G1b)
        inst.check("pr1_theta0_valid", is_morphism(f4))
        inst.check("pr1_theta0_roundtrip", f4.F1 == G1b)
        inst.check("pr1_theta0_complete", _complete_on_basis(ctx, X, theta0(ctx, m), lambda f: adj_pr1_fwd(ctx, X, f.F1)))

        inst.check("naturality", _naturality_checks(ctx, X, m, rng))
        inst.check("triangle_identities", _triangle_identities(ctx, X, m))
    return rep


def _complete_on_basis(ctx, S, T, reconstruct):
    """The bijection hits every morphism: checked on a basis of Hom(S, T)."""
    flat, kern = morphism_space(S, T)
    for col in kern:
        mats = flat.unflatten(col)
        f = FactorizationMorphism(S, T, mats["F0"], mats["F1"])
        g = reconstruct(f)
        if g.F0 != f.F0 or g.F1 != f.F1:
            return False
    return True


def _naturality_checks(ctx, X, m, rng) -> bool:
    # precompose with a module map P: M' -> M and postcompose with a morphism
    # h: X -> X; the bijections must intertwine both
    mp = rng.randint(1, 2)
    P = Matrix.from_rows(ctx, [[ctx.random_element(rng) for _ in range(m)] for _ in range(mp)])
    h = random_morphism(X, X, rng)
    G = Matrix.from_rows(ctx, [[ctx.random_element(rng) for _ in range(X.n0)] for _ in range(m)])
    lhs = adj_theta0_fwd(ctx, P @ G @ h.F0, X)
    from modfact.factorizations import theta0_on_map

    rhs = compose(compose(theta0_on_map(ctx, P), adj_theta0_fwd(ctx, G, X)), h)
    if lhs.F0 != rhs.F0 or lhs.F1 != rhs.F1:
        return False
    G1 = Matrix.from_rows(ctx, [[ctx.random_element(rng) for _ in range(X.n1)] for _ in range(m)])
    from modfact.factorizations import theta1_on_map

    lhs1 = adj_theta1_fwd(ctx, P @ G1 @ h.F1, X)
    rhs1 = compose(compose(theta1_on_map(ctx, P), adj_theta1_fwd(ctx, G1, X)), h)
    return lhs1.F0 == rhs1.F0 and lhs1.F1 == rhs1.F1


def _triangle_identities(ctx, X, m) -> bool:
    I_m = Matrix.identity(ctx, m)
    T0 = theta0(ctx, m)
    # (theta0, pr0): counit at X is (I, D0); unit at M is the identity
    eps_x = adj_theta0_fwd(ctx, Matrix.identity(ctx, X.n0), X)
    eps_t0 = adj_theta0_fwd(ctx, I_m, T0)
    tri1 = compose(identity_morphism(T0), eps_t0)
    if tri1.F0 != I_m or tri1.F1 != I_m:
        return False
    if eps_x.F0 != Matrix.identity(ctx, X.n0):
        return False
    # (pr0, S theta0): unit at X is (I, -sigma^{-1}(D1)); triangles
    eta_x = adj_pr0_fwd(ctx, X, Matrix.identity(ctx, X.n0))
    if eta_x.F0 != Matrix.identity(ctx, X.n0):
        return False
    ST0 = shift(theta0(ctx, m))
    eta_st = adj_pr0_fwd(ctx, ST0, Matrix.identity(ctx, m))
    ident = identity_morphism(ST0)
    if eta_st.F0 != ident.F0 or eta_st.F1 != ident.F1:
        return False
    # (theta1, pr1): counit at X is (sigma(I) D1, I) = (D1, I)
    T1 = theta1(ctx, m)
    eps1_t1 = adj_theta1_fwd(ctx, I_m, T1)
    if eps1_t1.F0 != I_m or eps1_t1.F1 != I_m:
        return False
    eps1_x = adj_theta1_fwd(ctx, Matrix.identity(ctx, X.n1), X)
    if eps1_x.F1 != Matrix.identity(ctx, X.n1):
        return False
    # (pr1, theta0): unit at X is (D0, I); at theta0 it is the identity
    eta4_x = adj_pr1_fwd(ctx, X, Matrix.identity(ctx, X.n1))
    if eta4_x.F0 != X.D0 or eta4_x.F1 != Matrix.identity(ctx, X.n1):
        return False
    eta4_t0 = adj_pr1_fwd(ctx, T0, I_m)
    ident0 = identity_morphism(T0)
    return eta4_t0.F0 == ident0.F0 and eta4_t0.F1 == ident0.F1


# ---------------------------------------------------------------------------
# Suite: group rings of cyclic groups at a prime
# ---------------------------------------------------------------------------


def verify_group_ring_semisimple(n, p, seed=0, samples=10) -> Report:
    ctx = GroupRing(n, p)
    rep = Report("group-ring-semisimple", ring_label(ctx), seed)
    rng = random.Random(seed)
    semisimple = n % p != 0
    for k in range(samples):
        inst = rep.new_instance(f"lattice_factorization:{k}")
        base = direct_sum(theta0(ctx, 1), theta1(ctx, 1))
        U, Uinv = random_invertible(ctx, 2, rng)
        V, Vinv = random_invertible(ctx, 2, rng)
        X = conjugate(base, U, Uinv, V, Vinv)
        if semisimple and k % 2 == 0:
            mods = standard_quotient_modules(ctx, seed + k)
            X = direct_sum(X, mf_from_module(mods[k % len(mods)][1]))
        ok, why = check_axioms(X)
        if not inst.check("axioms", ok, why):
            continue
        if semisimple:
            inst.check("cok0_projective", is_projective_over_quotient(cok0(X)))
        else:
            inst.check("cok0_projective_free_case", is_projective_over_quotient(cok0(X)))
    if not semisimple:
        inst = rep.new_instance("counterexample:trivial_module")
        triv = presentation(ctx, [[_aug_relation(ctx)]], 1, over_quotient=True)
        inst.check("reported_nonprojective", not is_projective_over_quotient(triv))
        try:
            mf_from_module(triv)
            inst.check("no_injective_free_presentation", False)
        except NotFinitePd:
            inst.check("no_injective_free_presentation", True)
    return rep


SUITES = {
    "theorem1": lambda ctx, seed, corpus=None: verify_theorem1_desk(ctx, corpus, seed),
    "theorem3": lambda ctx, seed, corpus=None: verify_theorem3_desk(ctx, corpus, seed),
    "adjunctions": lambda ctx, seed, corpus=None: verify_adjunctions(ctx, seed, corpus=corpus),
}
