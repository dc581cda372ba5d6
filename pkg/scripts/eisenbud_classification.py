#!/usr/bin/env python3
"""Desk classification of the factorizations of x^n over GF(2)[x].

For n = 2, 3, 4 the objects ([x^i], [x^{n-i}]) realize every stable class:
the ends i = 0, n are projective objects, and the interior classes are
pairwise distinguished by the invariant factor of their zeroth cokernel.
This is the classical hypersurface picture computed by the library.
"""

from modfact.cokfun import cok0
from modfact.factorizations import factorization, is_projective_object
from modfact.homotopy import stable_hom, stable_iso
from modfact.modules import invariant_factors
from modfact.rings import PolyRing


def classify(n):
    ctx = PolyRing(2, tuple([0] * n + [1]))
    objs = {}
    for i in range(n + 1):
        d0 = ctx.x(i) if i else ctx.one
        d1 = ctx.x(n - i) if n - i else ctx.one
        objs[i] = factorization(ctx, [[d0]], [[d1]])
    print(f"omega = x^{n} over GF(2)[x]")
    for i, X in objs.items():
        form = invariant_factors(cok0(X))
        proj = is_projective_object(X)
        end = stable_hom(X, X)
        dim = end.fp_dimension()
        print(
            f"  ([x^{i}],[x^{n - i}]): cok0 = {form.describe(ctx)}; "
            f"projective object: {proj}; stable End dimension: {dim}"
        )
    interior = [i for i in range(1, n)]
    for i in interior:
        for j in interior:
            if i < j:
                iso = stable_iso(objs[i], objs[j])
                print(f"  stable_iso(i={i}, i={j}) = {iso}")
    print()


if __name__ == "__main__":
    for n in (2, 3, 4):
        classify(n)
