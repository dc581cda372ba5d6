"""Cross-route consistency on rings beyond the acceptance battery.

The factorization-side stable Hom (flattened commuting-square solver) and
the module-side stable Hom (presentation calculus over the quotient) are
computed by disjoint code paths; they must agree wherever both apply.
"""

import random

import pytest

from modfact.cokfun import (
    cok0,
    cok0_on_morphism,
    factors_through_projective_quotient,
    quotient_stable_hom,
)
from modfact.harness import random_morphism, standard_corpus
from modfact.homotopy import is_p_null_homotopic, stable_hom
from modfact.rings import GroupRing, IntegerRing, PolyRing, SkewPolyRing

EXTRA_RINGS = [
    IntegerRing(8),
    IntegerRing(12),
    PolyRing(3, (0, 0, 1)),
    SkewPolyRing(3, 2),
    GroupRing(2, 2),
]


@pytest.mark.parametrize("ctx", EXTRA_RINGS, ids=lambda c: f"{c.kind}:{c.omega}"[:16])
def test_stable_hom_routes_agree(ctx):
    corpus = [X for _cid, X in standard_corpus(ctx, seed=42)][:4]
    for X in corpus:
        for Y in corpus:
            fs = stable_hom(X, Y)
            qs = quotient_stable_hom(cok0(X), cok0(Y))
            assert qs == (fs.free_rank, fs.torsion)


@pytest.mark.parametrize("ctx", EXTRA_RINGS, ids=lambda c: f"{c.kind}:{c.omega}"[:16])
def test_faithfulness_routes_agree(ctx):
    rng = random.Random(99)
    corpus = [X for _cid, X in standard_corpus(ctx, seed=42)]
    for _ in range(5):
        X = corpus[rng.randrange(len(corpus))]
        Y = corpus[rng.randrange(len(corpus))]
        f = random_morphism(X, Y, rng)
        nh = is_p_null_homotopic(f) is not None
        pf = factors_through_projective_quotient(cok0_on_morphism(f))
        assert nh == pf
