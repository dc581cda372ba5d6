import random

import pytest
from hypothesis import given, settings, strategies as st

from modfact.rings import (
    GFField,
    GroupRing,
    IntegerRing,
    PolyRing,
    SkewPolyRing,
    UnsupportedRing,
)

ALL_CONTEXTS = [
    IntegerRing(5),
    IntegerRing(6),
    PolyRing(2, (0, 0, 1)),
    PolyRing(3, (0, 1)),
    SkewPolyRing(2, 2),
    SkewPolyRing(3, 2),
    GroupRing(2, 3),
    GroupRing(3, 2),
]


@pytest.mark.parametrize("ctx", ALL_CONTEXTS, ids=lambda c: c.kind + str(getattr(c, "omega", ""))[:8])
def test_sigma_fixes_omega(ctx):
    assert ctx.sigma(ctx.omega) == ctx.omega


@pytest.mark.parametrize("ctx", ALL_CONTEXTS, ids=lambda c: c.kind + str(getattr(c, "omega", ""))[:8])
def test_omega_normality_sampled(ctx):
    rng = random.Random(0)
    for _ in range(1000):
        a = ctx.random_element(rng)
        assert ctx.mul(ctx.omega, a) == ctx.mul(ctx.sigma(a), ctx.omega)


@pytest.mark.parametrize("ctx", ALL_CONTEXTS, ids=lambda c: c.kind + str(getattr(c, "omega", ""))[:8])
def test_sigma_inverse_roundtrip(ctx):
    rng = random.Random(1)
    for _ in range(1000):
        a = ctx.random_element(rng)
        assert ctx.sigma_inv(ctx.sigma(a)) == a
        assert ctx.sigma(ctx.sigma_inv(a)) == a


@pytest.mark.parametrize("ctx", ALL_CONTEXTS, ids=lambda c: c.kind + str(getattr(c, "omega", ""))[:8])
def test_sigma_is_ring_hom(ctx):
    rng = random.Random(2)
    for _ in range(200):
        a, b = ctx.random_element(rng), ctx.random_element(rng)
        assert ctx.sigma(ctx.add(a, b)) == ctx.add(ctx.sigma(a), ctx.sigma(b))
        assert ctx.sigma(ctx.mul(a, b)) == ctx.mul(ctx.sigma(a), ctx.sigma(b))
    assert ctx.sigma(ctx.one) == ctx.one


def test_sigma_identity_when_omega_central():
    ctx = IntegerRing(5)
    assert ctx.sigma(7) == 7


def test_sigma_skew_example():
    # sigma(alpha x^2 + 1) = alpha^2 x^2 + 1, verified by skew multiplication
    S = SkewPolyRing(2, 2)
    alpha = S.const((0, 1))
    alpha_sq = S.gf.mul((0, 1), (0, 1))
    a = S.add(S.mul(alpha, S.x(2)), S.one)
    expect = S.add(S.mul((alpha_sq,), S.x(2)), S.one)
    assert S.sigma(a) == expect
    assert S.mul(S.x(), a) == S.mul(S.sigma(a), S.x())


@pytest.mark.parametrize("ctx", ALL_CONTEXTS, ids=lambda c: c.kind + str(getattr(c, "omega", ""))[:8])
def test_ring_axioms_sampled(ctx):
    rng = random.Random(3)
    for _ in range(150):
        a, b, c = (ctx.random_element(rng) for _ in range(3))
        assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
        assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
        assert ctx.mul(ctx.add(b, c), a) == ctx.add(ctx.mul(b, a), ctx.mul(c, a))
        assert ctx.mul(ctx.one, a) == a == ctx.mul(a, ctx.one)
        assert ctx.add(a, ctx.neg(a)) == ctx.zero


@pytest.mark.parametrize("ctx", ALL_CONTEXTS, ids=lambda c: c.kind + str(getattr(c, "omega", ""))[:8])
def test_expansion_roundtrip_and_centrality(ctx):
    from modfact.normalforms import expansion_basis

    rng = random.Random(4)
    basis = expansion_basis(ctx)
    assert len(basis) == ctx.base_rank
    for _ in range(300):
        a = ctx.random_element(rng)
        assert ctx.unexpand(ctx.expand(a)) == a
    # base-domain images commute with everything
    dom = ctx.base_domain
    for _ in range(50):
        c = dom.one if not hasattr(dom, "p") else (1,)
        el = ctx.embed_base(rng.randint(-3, 3) if not hasattr(dom, "p") else (rng.randrange(dom.p), rng.randrange(dom.p)))
        a = ctx.random_element(rng)
        assert ctx.mul(el, a) == ctx.mul(a, el)
    _ = c


def test_gf_field_tables():
    gf = GFField(2, 2)
    alpha = (0, 1)
    assert gf.mul(alpha, alpha) == (1, 1)  # alpha^2 = alpha + 1
    assert gf.pow(alpha, 3) == gf.one
    assert gf.inv(alpha) == gf.mul(alpha, alpha)
    gf9 = GFField(3, 2)
    for a in gf9.all_elements():
        if a != gf9.zero:
            assert gf9.mul(a, gf9.inv(a)) == gf9.one
        assert gf9.frob(gf9.frob(a)) == a


def test_skew_left_divmod():
    S = SkewPolyRing(2, 2)
    rng = random.Random(5)
    for _ in range(200):
        a = S.random_element(rng, bound=3)
        b = S.random_element(rng, bound=2)
        if S.is_zero(b):
            continue
        q, r = S.left_divmod(a, b)
        assert S.add(S.mul(q, b), r) == a
        assert len(r) < len(b)


def test_group_ring_is_commutative_quotient():
    G = GroupRing(3, 2)
    x = G.x_power(1)
    assert G.mul(x, G.mul(x, x)) == G.one  # x^3 = 1
    rng = random.Random(6)
    for _ in range(100):
        a, b = G.random_element(rng), G.random_element(rng)
        assert G.mul(a, b) == G.mul(b, a)


def test_invalid_contexts_rejected():
    with pytest.raises(ValueError):
        IntegerRing(0)
    with pytest.raises(ValueError):
        PolyRing(4, (0, 1))
    with pytest.raises(ValueError):
        GroupRing(2, 6)
    with pytest.raises(UnsupportedRing):
        SkewPolyRing(2, 3)


@given(st.integers(-50, 50), st.integers(-50, 50))
@settings(max_examples=60, deadline=None)
def test_integer_ops_match_python(a, b):
    ctx = IntegerRing(7)
    assert ctx.add(a, b) == a + b
    assert ctx.mul(a, b) == a * b


@given(st.lists(st.integers(0, 1), max_size=6), st.lists(st.integers(0, 1), max_size=6))
@settings(max_examples=60, deadline=None)
def test_poly_mul_degree(a_list, b_list):
    from modfact.rings import poly_trim

    ctx = PolyRing(2, (0, 1))
    a, b = poly_trim(a_list), poly_trim(b_list)
    prod = ctx.mul(a, b)
    if a and b:
        assert len(prod) == len(a) + len(b) - 1
    else:
        assert prod == ()
