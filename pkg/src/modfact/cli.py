"""Command-line front end.

Exit codes: 0 success (including a mathematically negative answer such as
"no"), 2 mathematical failure (axiom violation, unsolvable construction,
search bound exceeded, verification counterexample), 1 I/O or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from modfact import docio
from modfact.cokfun import (
    cok0,
    cok1,
    lift_map,
    mf_from_module,
    periodic_resolution,
    quotient_map,
    ExactnessFailure,
    InternalInconsistency,
)
from modfact.docio import DocumentError, canonical_json
from modfact.factorizations import (
    check_axioms,
    direct_sum,
    shift,
    to_gamma,
)
from modfact.harness import (
    RING_PRESETS,
    verify_adjunctions,
    verify_gp_transfer,
    verify_group_ring_semisimple,
    verify_theorem1_desk,
    verify_theorem3_desk,
)
from modfact.homotopy import (
    SearchBoundExceeded,
    is_p_null_homotopic,
    stable_hom,
    stable_iso,
    syzygy,
)
from modfact.modules import NotFinitePd, invariant_factors
from modfact.rings import UnsupportedRing

MATH_FAIL = 2
IO_FAIL = 1


def _load_factorization(path, require_axioms=True):
    return docio.factorization_from_doc(docio.load_json(path), require_axioms=require_axioms)


def _fmt_matrix(ctx, M):
    rows = []
    for i in range(M.rows):
        rows.append(", ".join(str(ctx.fmt(e)) for e in M.row(i)))
    return "[" + "; ".join(rows) + "]"


def cmd_check(args):
    X = _load_factorization(args.file, require_axioms=False)
    ok, report = check_axioms(X)
    if ok:
        print("axioms: OK")
        return 0
    print("axioms: FAIL (" + "; ".join(report) + ")")
    return MATH_FAIL


def cmd_cok(args, which):
    X = _load_factorization(args.file)
    N = cok0(X) if which == 0 else cok1(X)
    print(invariant_factors(N).describe(X.ctx))
    return 0


def cmd_shift(args):
    X = _load_factorization(args.file)
    sys.stdout.write(canonical_json(docio.factorization_to_doc(shift(X))))
    return 0


def cmd_sum(args):
    X = _load_factorization(args.f1)
    Y = _load_factorization(args.f2)
    sys.stdout.write(canonical_json(docio.factorization_to_doc(direct_sum(X, Y))))
    return 0


def cmd_homotopic(args):
    f = docio.morphism_from_doc(docio.load_json(args.file))
    h = is_p_null_homotopic(f)
    ctx = f.source.ctx
    if h is None:
        print("null-homotopic: no")
    else:
        print(
            f"null-homotopic: yes; H1={_fmt_matrix(ctx, h.H1)}, H0={_fmt_matrix(ctx, h.H0)}"
        )
    return 0


def cmd_stable_hom(args):
    X = _load_factorization(args.fX)
    Y = _load_factorization(args.fY)
    sh = stable_hom(X, Y)
    ctx = X.ctx
    if sh.is_zero():
        print("stable hom: zero")
    else:
        parts = []
        if sh.free_rank:
            parts.append(f"free rank {sh.free_rank}")
        if sh.torsion:
            dom = ctx.base_domain
            parts.append("torsion (" + ", ".join(dom.fmt(t) for t in sh.torsion) + ")")
        print("stable hom: " + "; ".join(parts))
    return 0


def cmd_stable_iso(args):
    X = _load_factorization(args.fX)
    Y = _load_factorization(args.fY)
    try:
        if args.bound is None:
            ans = stable_iso(X, Y)
        else:
            ans = stable_iso(X, Y, height_bound=args.bound, degree_bound=args.bound)
    except SearchBoundExceeded as e:
        print(f"inconclusive: {e}")
        return MATH_FAIL
    print("yes" if ans else "no")
    return 0


def cmd_syzygy(args):
    X = _load_factorization(args.file)
    sys.stdout.write(canonical_json(docio.factorization_to_doc(syzygy(X))))
    return 0


def cmd_resolve(args):
    X = _load_factorization(args.file)
    try:
        res = periodic_resolution(X, args.window)
    except ExactnessFailure as e:
        print(f"exactness failure: {e}")
        return MATH_FAIL
    positions = [c["position"] for c in res.certificates]
    print(
        f"exact at positions {positions[0]}..{positions[-1]}: OK"
        if positions
        else "window too small for interior positions"
    )
    return 0


def cmd_from_module(args):
    N = docio.module_from_doc(docio.load_json(args.module_file))
    X = mf_from_module(N)
    sys.stdout.write(canonical_json(docio.factorization_to_doc(X)))
    return 0


def cmd_lift(args):
    X = _load_factorization(args.fX)
    Y = _load_factorization(args.fY)
    gdoc = docio.load_json(args.map)
    src, tgt = cok0(X), cok0(Y)
    gm = docio.map_from_doc(gdoc, src, tgt)
    g = quotient_map(src, tgt, [list(gm.row(i)) for i in range(gm.rows)] if gm.rows else None)
    try:
        f = lift_map(X, Y, g)
    except ValueError as e:
        print(f"unsolvable: {e}")
        return MATH_FAIL
    sys.stdout.write(canonical_json(docio.morphism_to_doc(f)))
    return 0


def cmd_gamma(args):
    X = _load_factorization(args.file)
    view = to_gamma(X)
    ctx = X.ctx
    doc = {
        "schema_version": docio.SCHEMA_VERSION,
        "type": "gamma-view",
        "ring": ctx.to_params(),
        "omega": docio.fmt_omega(ctx),
        "n_top": view.n_top,
        "n_bottom": view.n_bottom,
        "action": {
            "top_from_bottom": [docio.fmt_element(ctx, e) for e in X.D0.entries],
            "bottom_from_top": [docio.fmt_element(ctx, e) for e in X.D1.entries],
            "bottom_from_top_twist": "sigma",
        },
    }
    sys.stdout.write(canonical_json(doc))
    return 0


def _corpus_from_dir(directory):
    out = []
    for p in sorted(Path(directory).glob("*.json")):
        doc = docio.load_json(p)
        if "d0" in doc and doc.get("type") is None:
            out.append((p.stem, docio.factorization_from_doc(doc, require_axioms=False)))
    return out


def cmd_verify(args):
    ring = RING_PRESETS[args.ring]() if args.ring else None
    corpus = _corpus_from_dir(args.corpus) if args.corpus else None
    suite = args.suite
    if suite == "theorem1":
        rep = verify_theorem1_desk(ring or RING_PRESETS["z6"](), corpus=corpus, seed=args.seed)
    elif suite == "theorem3":
        rep = verify_theorem3_desk(ring or RING_PRESETS["z5"](), corpus=corpus, seed=args.seed)
    elif suite == "adjunctions":
        rep = verify_adjunctions(ring or RING_PRESETS["z6"](), seed=args.seed, samples=args.samples or 50, corpus=corpus)
    elif suite == "gp-transfer":
        ctx = ring or RING_PRESETS["zc2p3"]()
        rep = verify_gp_transfer(ctx.n, ctx.p, seed=args.seed, samples=args.samples or 20)
    elif suite == "group-ring-semisimple":
        ctx = ring or RING_PRESETS["zc3p2"]()
        rep = verify_group_ring_semisimple(ctx.n, ctx.p, seed=args.seed, samples=args.samples or 10)
    else:
        print(f"unknown suite {suite!r}", file=sys.stderr)
        return IO_FAIL
    sys.stdout.write(canonical_json(rep.to_dict()))
    return 0 if rep.passed else MATH_FAIL


def build_parser():
    ap = argparse.ArgumentParser(
        prog="modfact",
        description="Exact computations with matrix factorizations of a regular normal element.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="verify the factorization axioms of a document")
    p.add_argument("file")
    p = sub.add_parser("cok0", help="invariant factors of the zeroth cokernel")
    p.add_argument("file")
    p = sub.add_parser("cok1", help="invariant factors of the first cokernel")
    p.add_argument("file")
    p = sub.add_parser("shift", help="shifted factorization document")
    p.add_argument("file")
    p = sub.add_parser("sum", help="direct sum document")
    p.add_argument("f1")
    p.add_argument("f2")
    p = sub.add_parser("homotopic", help="decide null-homotopy of a morphism document")
    p.add_argument("file")
    p = sub.add_parser("stable-hom", help="stable Hom invariants of a pair")
    p.add_argument("fX")
    p.add_argument("fY")
    p = sub.add_parser("stable-iso", help="decide stable isomorphism (bounded search)")
    p.add_argument("fX")
    p.add_argument("fY")
    p.add_argument("--bound", type=int, default=None, help="override the free-part search bounds")
    p = sub.add_parser("syzygy", help="syzygy document (free components)")
    p.add_argument("file")
    p = sub.add_parser("resolve", help="periodic resolution exactness certificates")
    p.add_argument("file")
    p.add_argument("--window", type=int, default=4)
    p = sub.add_parser("from-module", help="factorization realizing a module document")
    p.add_argument("module_file")
    p = sub.add_parser("lift", help="lift a cokernel map to a morphism")
    p.add_argument("fX")
    p.add_argument("fY")
    p.add_argument("--map", required=True)
    p = sub.add_parser("gamma", help="matrix-ring module view of a factorization")
    p.add_argument("file")
    p = sub.add_parser("verify", help="run a verification suite, print the JSON report")
    p.add_argument(
        "suite",
        choices=["theorem1", "theorem3", "adjunctions", "gp-transfer", "group-ring-semisimple"],
    )
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--corpus")
    p.add_argument("--ring", choices=sorted(RING_PRESETS))
    p.add_argument("--samples", type=int)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    handlers = {
        "check": cmd_check,
        "cok0": lambda a: cmd_cok(a, 0),
        "cok1": lambda a: cmd_cok(a, 1),
        "shift": cmd_shift,
        "sum": cmd_sum,
        "homotopic": cmd_homotopic,
        "stable-hom": cmd_stable_hom,
        "stable-iso": cmd_stable_iso,
        "syzygy": cmd_syzygy,
        "resolve": cmd_resolve,
        "from-module": cmd_from_module,
        "lift": cmd_lift,
        "gamma": cmd_gamma,
        "verify": cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except DocumentError as e:
        print(f"error: {e}", file=sys.stderr)
        return IO_FAIL
    except (NotFinitePd, InternalInconsistency, UnsupportedRing, SearchBoundExceeded) as e:
        print(f"unsolvable: {e}", file=sys.stderr)
        return MATH_FAIL


if __name__ == "__main__":
    sys.exit(main())
