import json
import subprocess
import sys
from pathlib import Path

from modfact import docio
from modfact.cli import main
from modfact.factorizations import factorization, theta0
from modfact.modules import presentation
from modfact.rings import GroupRing, IntegerRing, PolyRing, SkewPolyRing

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_ok(capsys):
    code, out, _ = run(capsys, "check", str(FIXTURES / "z6_23.json"))
    assert code == 0 and out.strip() == "axioms: OK"


def test_check_axiom_failure_exit_2(tmp_path, capsys):
    doc = docio.load_json(FIXTURES / "z6_23.json")
    doc["d1"] = ["2"]
    bad = tmp_path / "bad.json"
    bad.write_text(docio.canonical_json(doc))
    code, out, _ = run(capsys, "check", str(bad))
    assert code == 2 and out.startswith("axioms: FAIL")


def test_parse_error_exit_1(tmp_path, capsys):
    p = tmp_path / "junk.json"
    p.write_text("{not json")
    code, _, err = run(capsys, "check", str(p))
    assert code == 1 and "error:" in err
    q = tmp_path / "badelem.json"
    doc = docio.load_json(FIXTURES / "z6_23.json")
    doc["d0"] = ["2x"]
    q.write_text(docio.canonical_json(doc))
    code, _, err = run(capsys, "check", str(q))
    assert code == 1


def test_cok0_outputs(capsys):
    code, out, _ = run(capsys, "cok0", str(FIXTURES / "theta0_z5.json"))
    assert code == 0 and out.strip() == "zero module"
    code, out, _ = run(capsys, "cok0", str(FIXTURES / "z6_23.json"))
    assert code == 0 and "torsion (2)" in out
    code, out, _ = run(capsys, "cok1", str(FIXTURES / "theta1_z5.json"))
    assert code == 0 and out.strip() == "zero module"


def test_shift_twice_byte_identical_commutative(tmp_path, capsys):
    code, out1, _ = run(capsys, "shift", str(FIXTURES / "z6_23.json"))
    assert code == 0
    p1 = tmp_path / "s1.json"
    p1.write_text(out1)
    code, out2, _ = run(capsys, "shift", str(p1))
    assert code == 0
    assert out2 == (FIXTURES / "z6_23.json").read_text()


def test_sum_document(tmp_path, capsys):
    code, out, _ = run(
        capsys, "sum", str(FIXTURES / "theta0_z5.json"), str(FIXTURES / "theta1_z5.json")
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["n0"] == 2 and doc["d0"] == ["1", "0", "0", "5"]


def test_homotopic_fixtures(capsys):
    code, out, _ = run(capsys, "homotopic", str(FIXTURES / "x_x_times_x_endo.json"))
    assert code == 0 and out.startswith("null-homotopic: yes")
    code, out, _ = run(capsys, "homotopic", str(FIXTURES / "x_x_identity_endo.json"))
    assert code == 0 and out.strip() == "null-homotopic: no"


def test_stable_iso_fixture_pair(capsys):
    code, out, _ = run(
        capsys, "stable-iso", str(FIXTURES / "x1_x3.json"), str(FIXTURES / "x3_x1.json")
    )
    assert code == 0 and out.strip() == "no"
    code, out, _ = run(
        capsys, "stable-iso", str(FIXTURES / "x1_x3.json"), str(FIXTURES / "x1_x3.json")
    )
    assert code == 0 and out.strip() == "yes"


def test_stable_hom_output(capsys):
    code, out, _ = run(
        capsys, "stable-hom", str(FIXTURES / "f2x2_xx.json"), str(FIXTURES / "f2x2_xx.json")
    )
    assert code == 0 and "torsion" in out
    code, out, _ = run(
        capsys, "stable-hom", str(FIXTURES / "theta0_z5.json"), str(FIXTURES / "theta0_z5.json")
    )
    assert code == 0 and out.strip() == "stable hom: zero"


def test_syzygy_and_resolve(capsys):
    code, out, _ = run(capsys, "syzygy", str(FIXTURES / "f2x2_xx.json"))
    assert code == 0
    doc = json.loads(out)
    assert doc["d0"] == ["1*x"]
    code, out, _ = run(capsys, "resolve", str(FIXTURES / "f4_alpha.json"), "--window", "4")
    assert code == 0 and "OK" in out


def test_from_module_and_roundtrip(tmp_path, capsys):
    code, out, _ = run(capsys, "from-module", str(FIXTURES / "z5_module_f5.json"))
    assert code == 0
    doc = json.loads(out)
    assert doc["d0"] == ["5"] and doc["d1"] == ["1"]
    # NotFinitePd surfaces as a mathematical failure
    code, _, err = run(capsys, "from-module", str(FIXTURES / "zc2p2_trivial_module.json"))
    assert code == 2 and "unsolvable" in err


def test_lift_command(capsys):
    code, out, _ = run(
        capsys,
        "lift",
        str(FIXTURES / "z6_23.json"),
        str(FIXTURES / "z6_23.json"),
        "--map",
        str(FIXTURES / "z6_map_identity.json"),
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["type"] == "morphism"
    f = docio.morphism_from_doc(doc)
    from modfact.factorizations import is_morphism

    assert is_morphism(f)


def test_gamma_command(capsys):
    code, out, _ = run(capsys, "gamma", str(FIXTURES / "z6_23.json"))
    assert code == 0
    doc = json.loads(out)
    assert doc["type"] == "gamma-view"
    assert doc["action"]["top_from_bottom"] == ["2"]


def test_verify_report(capsys):
    code, out, _ = run(capsys, "verify", "theorem1", "--seed", "7")
    assert code == 0
    rep = json.loads(out)
    assert rep["suite"] == "theorem1" and rep["summary"]["pass"] is True
    code, out, _ = run(
        capsys, "verify", "group-ring-semisimple", "--ring", "zc2p2", "--seed", "1", "--samples", "2"
    )
    assert code == 0
    rep = json.loads(out)
    ids = [i["id"] for i in rep["instances"]]
    assert "counterexample:trivial_module" in ids


def test_verify_corpus_dir(tmp_path, capsys):
    doc = docio.factorization_to_doc(factorization(IntegerRing(6), [[2]], [[3]]))
    (tmp_path / "only.json").write_text(docio.canonical_json(doc))
    code, out, _ = run(
        capsys, "verify", "theorem1", "--corpus", str(tmp_path), "--seed", "2"
    )
    assert code == 0
    rep = json.loads(out)
    assert any(i["id"] == "object:only" for i in rep["instances"])


def test_document_roundtrip_byte_identity():
    for name in (
        "z6_23.json",
        "theta0_z5.json",
        "f2x2_xx.json",
        "f4_alpha.json",
        "zc3p2_theta1.json",
        "x1_x3.json",
    ):
        raw = (FIXTURES / name).read_text()
        X = docio.factorization_from_doc(json.loads(raw))
        assert docio.canonical_json(docio.factorization_to_doc(X)) == raw


def test_document_roundtrip_generated():
    ctxs = [
        IntegerRing(7),
        PolyRing(3, (0, 0, 1)),
        SkewPolyRing(3, 2),
        GroupRing(4, 3),
    ]
    import random

    rng = random.Random(5)
    from modfact.harness import standard_corpus

    for ctx in ctxs:
        for _cid, X in standard_corpus(ctx, 1)[:4]:
            doc = docio.factorization_to_doc(X)
            X2 = docio.factorization_from_doc(doc)
            assert X2 == X
            assert docio.canonical_json(docio.factorization_to_doc(X2)) == docio.canonical_json(doc)
    _ = rng


def test_module_document_roundtrip():
    N = presentation(GroupRing(3, 2), [[(-1, 1, 0)]], 1, over_quotient=True)
    doc = docio.module_to_doc(N)
    N2 = docio.module_from_doc(doc)
    assert N2 == N


def test_console_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "modfact.cli", "check", str(FIXTURES / "z6_23.json")],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0 and out.stdout.strip() == "axioms: OK"
