import json

from modfact.factorizations import factorization
from modfact.harness import (
    RING_PRESETS,
    standard_corpus,
    verify_adjunctions,
    verify_gp_transfer,
    verify_group_ring_semisimple,
    verify_theorem1_desk,
    verify_theorem3_desk,
)
from modfact.rings import IntegerRing, PolyRing


def test_report_schema_fields():
    rep = verify_theorem1_desk(IntegerRing(6), seed=1, map_samples=2).to_dict()
    assert set(rep) == {"suite", "ring", "seed", "scope_note", "instances", "summary"}
    assert rep["suite"] == "theorem1"
    assert rep["seed"] == 1
    for inst in rep["instances"]:
        assert set(inst) == {"id", "checks"}
        for c in inst["checks"]:
            assert c["status"] in ("pass", "fail")
    assert rep["summary"]["statement"] == "no counterexample in corpus"
    assert "ingredient functors" in rep["scope_note"]


def test_reports_are_deterministic():
    a = verify_theorem1_desk(PolyRing(2, (0, 0, 1)), seed=3, map_samples=3).to_dict()
    b = verify_theorem1_desk(PolyRing(2, (0, 0, 1)), seed=3, map_samples=3).to_dict()
    assert json.dumps(a) == json.dumps(b)
    c = verify_gp_transfer(2, 3, seed=5, samples=4).to_dict()
    d = verify_gp_transfer(2, 3, seed=5, samples=4).to_dict()
    assert json.dumps(c) == json.dumps(d)


def test_theorem1_passes_on_builtins():
    for key in ("z6", "f2x3", "f4", "zc3p2"):
        ctx = RING_PRESETS[key]()
        rep = verify_theorem1_desk(ctx, seed=7, map_samples=4)
        assert rep.passed, rep.to_dict()


def test_theorem1_flags_invalid_instance_and_continues():
    ctx = IntegerRing(6)
    corpus = standard_corpus(ctx, 0) + [("bad", factorization(ctx, [[2]], [[2]]))]
    rep = verify_theorem1_desk(ctx, corpus=corpus, seed=0, map_samples=2)
    assert not rep.passed
    bad = [i for i in rep.instances if i.id == "object:bad"][0]
    assert [c.status for c in bad.checks] == ["fail"]
    good = [i for i in rep.instances if i.id == "object:theta0_1"][0]
    assert all(c.status == "pass" for c in good.checks)
    assert rep.to_dict()["summary"]["statement"] == "counterexample found in corpus"


def test_theorem3_passes():
    for key in ("z5", "f4", "f2x2"):
        rep = verify_theorem3_desk(RING_PRESETS[key](), seed=2)
        assert rep.passed, rep.to_dict()


def test_gp_transfer_passes():
    assert verify_gp_transfer(2, 3, seed=3, samples=6).passed
    assert verify_gp_transfer(3, 2, seed=3, samples=6).passed


def test_adjunctions_pass_all_kinds():
    for key in ("z6", "f2x2", "f4", "zc2p3"):
        rep = verify_adjunctions(RING_PRESETS[key](), seed=4, samples=6)
        assert rep.passed, rep.to_dict()


def test_group_ring_suites():
    rep = verify_group_ring_semisimple(3, 2, seed=5, samples=4)
    assert rep.passed
    rep23 = verify_group_ring_semisimple(2, 3, seed=5, samples=4)
    assert rep23.passed
    rep22 = verify_group_ring_semisimple(2, 2, seed=5, samples=3)
    assert rep22.passed
    ids = [i.id for i in rep22.instances]
    assert "counterexample:trivial_module" in ids


def test_standard_corpus_valid_everywhere():
    from modfact.factorizations import is_valid

    for key, mk in RING_PRESETS.items():
        ctx = mk()
        for cid, X in standard_corpus(ctx, 0):
            assert is_valid(X), (key, cid)


def test_theorem3_trivial_corpus():
    from modfact.factorizations import theta0

    ctx = IntegerRing(5)
    corpus = [("theta0_only", theta0(ctx, 2))]
    rep = verify_theorem3_desk(ctx, corpus=corpus, seed=0)
    assert rep.passed
