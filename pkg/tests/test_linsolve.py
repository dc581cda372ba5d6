import random

import pytest
from hypothesis import given, settings, strategies as st

from modfact.linsolve import (
    brute_force_solve,
    equation,
    iter_elements,
    solve_linear,
    verify_assignment,
)
from modfact.matrices import Matrix
from modfact.rings import GroupRing, IntegerRing, PolyRing, SkewPolyRing

Z6 = IntegerRing(6)
F2X2 = PolyRing(2, (0, 0, 1))
S4 = SkewPolyRing(2, 2)
G32 = GroupRing(3, 2)


def scalar_system(ctx, coeff, rhs):
    return (
        {"X": (1, 1)},
        [
            equation(
                [(Matrix.identity(ctx, 1), "X", 0, Matrix.from_rows(ctx, [[coeff]]))],
                Matrix.from_rows(ctx, [[rhs]]),
            )
        ],
    )


def test_solve_x2_eq_6():
    shapes, eqs = scalar_system(Z6, 2, 6)
    sol = solve_linear(Z6, shapes, eqs)
    assert sol["X"].to_lists() == [[3]]


def test_solve_x2_eq_5_unsolvable():
    shapes, eqs = scalar_system(Z6, 2, 5)
    assert solve_linear(Z6, shapes, eqs) is None


def test_homotopy_style_unsolvable_over_f2x():
    # 1 = H1*x + x*H0 has no solution: the right side has zero constant term
    x = (0, 1)
    one = Matrix.identity(F2X2, 1)
    xm = Matrix.from_rows(F2X2, [[x]])
    eqs = [equation([(one, "H1", 0, xm), (xm, "H0", 0, one)], one)]
    shapes = {"H1": (1, 1), "H0": (1, 1)}
    assert solve_linear(F2X2, shapes, eqs) is None
    assert brute_force_solve(F2X2, shapes, eqs, 3) is None


def test_skew_semilinear_solve():
    # sigma(D0) @ D1 = x for D0 = [alpha] forces D1 = alpha*x
    alpha = S4.const((0, 1))
    D0 = Matrix.from_rows(S4, [[alpha]])
    rhs = Matrix.scalar(S4, 1, S4.omega)
    sol = solve_linear(
        S4,
        {"D1": (1, 1)},
        [equation([(D0.twist(1), "D1", 0, Matrix.identity(S4, 1))], rhs)],
    )
    assert sol["D1"][0, 0] == S4.mul(alpha, S4.x())


def test_twisted_unknown_solve():
    # sigma(U) * x = alpha * x  =>  U = sigma^{-1}(alpha) = alpha^2
    alpha = S4.const((0, 1))
    xm = Matrix.from_rows(S4, [[S4.x()]])
    rhs = Matrix.from_rows(S4, [[S4.mul(alpha, S4.x())]])
    sol = solve_linear(
        S4, {"U": (1, 1)}, [equation([(Matrix.identity(S4, 1), "U", 1, xm)], rhs)]
    )
    assert sol["U"][0, 0] == S4.sigma_inv(alpha)


def test_group_ring_solve():
    # (1+x) * U = 2 over Z[C3] has the solution 1 - x + x^2
    a = Matrix.from_rows(G32, [[(1, 1, 0)]])
    rhs = Matrix.from_rows(G32, [[(2, 0, 0)]])
    sol = solve_linear(
        G32, {"U": (1, 1)}, [equation([(a, "U", 0, Matrix.identity(G32, 1))], rhs)]
    )
    assert G32.mul((1, 1, 0), sol["U"][0, 0]) == (2, 0, 0)


@pytest.mark.parametrize(
    "ctx,bound",
    [(Z6, 2), (F2X2, 1), (S4, 0), (G32, 1)],
    ids=["int", "poly", "skew", "group"],
)
def test_planted_solutions_recovered(ctx, bound):
    rng = random.Random(17)
    for _ in range(12):
        r, c = rng.randint(1, 2), rng.randint(1, 2)
        U_true = Matrix.from_rows(
            ctx, [[ctx.random_element(rng) for _ in range(c)] for _ in range(r)]
        )
        C = Matrix.from_rows(
            ctx, [[ctx.random_element(rng) for _ in range(r)] for _ in range(2)]
        )
        Cp = Matrix.from_rows(
            ctx, [[ctx.random_element(rng) for _ in range(2)] for _ in range(c)]
        )
        tw = rng.choice((-1, 0, 1))
        rhs = C @ U_true.twist(tw) @ Cp
        eqs = [equation([(C, "U", tw, Cp)], rhs)]
        sol = solve_linear(ctx, {"U": (r, c)}, eqs)
        assert sol is not None
        assert verify_assignment(ctx, eqs, sol)
    _ = bound


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=25, deadline=None)
def test_completeness_against_brute_force_tiny(seed):
    # windowed enumeration agrees with the Smith-based solver on existence
    rng = random.Random(seed)
    ctx = rng.choice([IntegerRing(4), PolyRing(2, (0, 0, 1))])
    bound = 2 if ctx.kind == "integers" else 1
    C = Matrix.from_rows(ctx, [[ctx.random_element(rng, bound=2)]])
    Cp = Matrix.from_rows(ctx, [[ctx.random_element(rng, bound=1)]])
    rhs = Matrix.from_rows(ctx, [[ctx.random_element(rng, bound=2)]])
    eqs = [equation([(C, "U", 0, Cp)], rhs)]
    shapes = {"U": (1, 1)}
    brute = brute_force_solve(ctx, shapes, eqs, bound)
    solver = solve_linear(ctx, shapes, eqs)
    if brute is not None:
        assert solver is not None  # the solver is complete over the ring
    if solver is not None and brute is None:
        # the only explanation is a solution outside the window
        entries = set(iter_elements(ctx, bound))
        assert any(e not in entries for e in solver["U"].entries)


def test_multi_unknown_multi_equation():
    # the pair of homotopy equations for the identity of ([2],[3]) over (Z,6)
    D0 = Matrix.from_rows(Z6, [[2]])
    D1 = Matrix.from_rows(Z6, [[3]])
    one = Matrix.identity(Z6, 1)
    eqs = [
        equation([(D0, "H1", 0, one), (one, "H0", 1, D1)], one),
        equation([(one, "H1", 0, D0), (D1.twist(-1), "H0", 0, one)], one),
    ]
    sol = solve_linear(Z6, {"H0": (1, 1), "H1": (1, 1)}, eqs)
    assert sol is not None
    h0, h1 = sol["H0"][0, 0], sol["H1"][0, 0]
    assert 2 * h1 + 3 * h0 == 1


def test_iter_elements_windows():
    assert set(iter_elements(Z6, 1)) == {-1, 0, 1}
    polys = iter_elements(F2X2, 1)
    assert set(polys) == {(), (1,), (0, 1), (1, 1)}
    gf_elems = iter_elements(S4, 0)
    assert len(gf_elems) == 4  # constants of GF(4)
    group = iter_elements(G32, 1)
    assert len(group) == 27
