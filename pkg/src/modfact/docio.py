"""Bit-exact JSON document formats and the element string grammar.

Element strings (canonical writer output; parsers accept exactly this shape
up to surrounding whitespace):

* integers: optional-sign decimal, ``-12``;
* polynomials over F_p: zero is ``"0"``; otherwise nonzero terms ascending,
  joined by `` + ``, constant written bare and higher terms as ``c*x`` /
  ``c*x^k``, e.g. ``1 + 1*x^2``;
* Galois coefficients: ``(a0+a1*g)`` in the fixed generator g, all e digits
  always written, e.g. ``(0+1*g)*x``;
* group-ring elements: length-n JSON integer arrays.

omega is written as a plain decimal string for the integer and group-ring
kinds (the prime p), and as an element string otherwise.  Factorization
documents carry {schema_version, ring, omega, n0, n1, d0, d1} with d0/d1
row-major arrays; loading re-canonicalizes nothing: non-canonical input is
an error, so load then save is the identity on bytes.
"""

from __future__ import annotations

import json
import re

from modfact.factorizations import FactorizationMorphism, ModuleFactorization, check_axioms
from modfact.matrices import Matrix
from modfact.modules import ModulePresentation, presentation
from modfact.rings import (
    GroupRing,
    IntegerRing,
    PolyRing,
    SkewPolyRing,
    poly_trim,
)

SCHEMA_VERSION = 1


class DocumentError(Exception):
    """Malformed document or element string; carries a positional hint."""


# ---------------------------------------------------------------------------
# Element strings
# ---------------------------------------------------------------------------

_INT_RE = re.compile(r"^-?\d+$")
_TERM_RE = re.compile(r"^(?P<coeff>.+?)(?:\*x(?:\^(?P<pow>\d+))?)?$")
_GF_RE = re.compile(r"^\((?P<body>[0-9+*g^]+)\)$")


def fmt_element(ctx, a):
    return ctx.fmt(a)


def parse_element(ctx, s, where=""):
    try:
        return _parse_element(ctx, s)
    except DocumentError:
        raise
    except Exception as e:  # noqa: BLE001
        raise DocumentError(f"{where}: cannot parse element {s!r}: {e}") from e


def _parse_element(ctx, s):
    if isinstance(ctx, IntegerRing):
        if not isinstance(s, str) or not _INT_RE.match(s.strip()):
            raise DocumentError(f"not an integer string: {s!r}")
        return int(s)
    if isinstance(ctx, GroupRing):
        if not isinstance(s, list) or len(s) != ctx.n:
            raise DocumentError(f"group element must be a length-{ctx.n} array")
        return tuple(int(c) for c in s)
    if isinstance(ctx, PolyRing):
        coeffs = _parse_poly_terms(s, lambda c: int(c))
        for c in coeffs:
            if not 0 <= c < ctx.p:
                raise DocumentError(f"coefficient {c} out of range mod {ctx.p}")
        out = poly_trim(coeffs)
        if list(out) != coeffs:
            raise DocumentError(f"non-canonical polynomial (trailing zeros): {s!r}")
        return out
    if isinstance(ctx, SkewPolyRing):
        coeffs = _parse_poly_terms(s, lambda c: _parse_gf(ctx, c))
        out = ctx._trim(coeffs)
        if list(out) != coeffs:
            raise DocumentError(f"non-canonical skew polynomial: {s!r}")
        return out
    raise DocumentError(f"unknown ring kind {ctx.kind}")


def _parse_poly_terms(s, coeff_parser):
    if not isinstance(s, str):
        raise DocumentError(f"expected an element string, got {type(s).__name__}")
    s = s.strip()
    if s == "0":
        return []
    coeffs = []
    for raw in s.split(" + "):
        m = _TERM_RE.match(raw.strip())
        if not m:
            raise DocumentError(f"bad term {raw!r}")
        power = int(m.group("pow")) if m.group("pow") else (1 if "*x" in raw else 0)
        coeff = coeff_parser(m.group("coeff"))
        while len(coeffs) <= power:
            coeffs.append(_zero_like(coeff))
        if coeffs[power] != _zero_like(coeff):
            raise DocumentError(f"duplicate power {power} in {s!r}")
        coeffs[power] = coeff
    return coeffs


def _zero_like(coeff):
    return 0 if isinstance(coeff, int) else tuple(0 for _ in coeff)


def _parse_gf(ctx, s):
    m = _GF_RE.match(s.strip())
    if not m:
        raise DocumentError(f"bad Galois coefficient {s!r}")
    digits = [0] * ctx.e
    for tok in m.group("body").split("+"):
        tok = tok.strip()
        if "*g" in tok:
            c, g = tok.split("*g", 1)
            k = int(g[1:]) if g.startswith("^") else 1
        else:
            c, k = tok, 0
        if k >= ctx.e:
            raise DocumentError(f"generator power {k} too large in {s!r}")
        digits[k] = int(c)
    for d in digits:
        if not 0 <= d < ctx.p:
            raise DocumentError(f"digit out of range in {s!r}")
    return tuple(digits)


def fmt_omega(ctx):
    if isinstance(ctx, (IntegerRing,)):
        return str(ctx.omega)
    if isinstance(ctx, GroupRing):
        return str(ctx.p)
    return ctx.fmt(ctx.omega)


def context_from_doc(doc) -> object:
    ring = doc.get("ring")
    if not isinstance(ring, dict) or "kind" not in ring:
        raise DocumentError("ring: missing or malformed")
    kind = ring["kind"]
    omega_s = doc.get("omega")
    if kind == "integers":
        if not _INT_RE.match(str(omega_s)):
            raise DocumentError("omega: expected an integer string")
        return IntegerRing(int(omega_s))
    if kind == "poly":
        p = int(ring["p"])
        probe = PolyRing(p, (0, 1))
        return PolyRing(p, parse_element(probe, omega_s, "omega"))
    if kind == "skew":
        ctx = SkewPolyRing(int(ring["p"]), int(ring["e"]))
        if parse_element(ctx, omega_s, "omega") != ctx.omega:
            raise DocumentError("omega: skew contexts require omega = x")
        return ctx
    if kind == "group":
        return GroupRing(int(ring["n"]), int(str(omega_s)))
    raise DocumentError(f"ring.kind: unknown kind {kind!r}")


# ---------------------------------------------------------------------------
# Factorization documents
# ---------------------------------------------------------------------------


def factorization_to_doc(X: ModuleFactorization) -> dict:
    ctx = X.ctx
    return {
        "schema_version": SCHEMA_VERSION,
        "ring": ctx.to_params(),
        "omega": fmt_omega(ctx),
        "n0": X.n0,
        "n1": X.n1,
        "d0": [fmt_element(ctx, e) for e in X.D0.entries],
        "d1": [fmt_element(ctx, e) for e in X.D1.entries],
    }


def factorization_from_doc(doc, require_axioms=True) -> ModuleFactorization:
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise DocumentError("schema_version: unsupported or missing")
    ctx = context_from_doc(doc)
    try:
        n0, n1 = int(doc["n0"]), int(doc["n1"])
    except (KeyError, TypeError, ValueError) as e:
        raise DocumentError(f"n0/n1: {e}") from e
    d0 = _parse_matrix(ctx, doc.get("d0"), n0, n1, "d0")
    d1 = _parse_matrix(ctx, doc.get("d1"), n1, n0, "d1")
    X = ModuleFactorization(ctx, n0, n1, d0, d1)
    if require_axioms:
        ok, report = check_axioms(X)
        if not ok:
            raise DocumentError("; ".join(report))
    return X


def _parse_matrix(ctx, flat, rows, cols, where) -> Matrix:
    if not isinstance(flat, list) or len(flat) != rows * cols:
        raise DocumentError(f"{where}: expected a row-major array of {rows * cols} entries")
    ents = [
        parse_element(ctx, s, f"{where}[{i // cols},{i % cols}]")
        for i, s in enumerate(flat)
    ]
    return Matrix(ctx, rows, cols, tuple(ents))


# ---------------------------------------------------------------------------
# Morphism, module and map documents
# ---------------------------------------------------------------------------


def morphism_to_doc(f: FactorizationMorphism) -> dict:
    ctx = f.source.ctx
    return {
        "schema_version": SCHEMA_VERSION,
        "type": "morphism",
        "ring": ctx.to_params(),
        "omega": fmt_omega(ctx),
        "source": _bare_factorization(f.source),
        "target": _bare_factorization(f.target),
        "f0": [fmt_element(ctx, e) for e in f.F0.entries],
        "f1": [fmt_element(ctx, e) for e in f.F1.entries],
    }


def _bare_factorization(X):
    ctx = X.ctx
    return {
        "n0": X.n0,
        "n1": X.n1,
        "d0": [fmt_element(ctx, e) for e in X.D0.entries],
        "d1": [fmt_element(ctx, e) for e in X.D1.entries],
    }


def morphism_from_doc(doc, require_axioms=True) -> FactorizationMorphism:
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise DocumentError("schema_version: unsupported or missing")
    if doc.get("type") != "morphism":
        raise DocumentError("type: expected 'morphism'")
    ctx = context_from_doc(doc)
    ends = []
    for key in ("source", "target"):
        sub = doc.get(key)
        if not isinstance(sub, dict):
            raise DocumentError(f"{key}: missing")
        full = {"schema_version": SCHEMA_VERSION, "ring": doc["ring"], "omega": doc["omega"], **sub}
        ends.append(factorization_from_doc(full, require_axioms=require_axioms))
    X, Y = ends
    F0 = _parse_matrix(ctx, doc.get("f0"), X.n0, Y.n0, "f0")
    F1 = _parse_matrix(ctx, doc.get("f1"), X.n1, Y.n1, "f1")
    return FactorizationMorphism(X, Y, F0, F1)


def module_to_doc(N: ModulePresentation) -> dict:
    ctx = N.ctx
    return {
        "schema_version": SCHEMA_VERSION,
        "type": "module",
        "ring": ctx.to_params(),
        "omega": fmt_omega(ctx),
        "generators": N.generators,
        "relations": [
            [fmt_element(ctx, e) for e in N.relations.row(i)]
            for i in range(N.relations.rows)
        ],
    }


def module_from_doc(doc) -> ModulePresentation:
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise DocumentError("schema_version: unsupported or missing")
    if doc.get("type") != "module":
        raise DocumentError("type: expected 'module'")
    ctx = context_from_doc(doc)
    g = int(doc.get("generators", -1))
    if g < 0:
        raise DocumentError("generators: missing")
    rel = doc.get("relations")
    if not isinstance(rel, list):
        raise DocumentError("relations: expected an array of rows")
    rows = []
    for i, r in enumerate(rel):
        if not isinstance(r, list) or len(r) != g:
            raise DocumentError(f"relations[{i}]: expected {g} entries")
        rows.append([parse_element(ctx, s, f"relations[{i}][{j}]") for j, s in enumerate(r)])
    return presentation(ctx, rows, g, over_quotient=True)


def map_from_doc(doc, source, target) -> Matrix:
    if doc.get("type") != "map":
        raise DocumentError("type: expected 'map'")
    ctx = source.ctx
    rows = doc.get("matrix")
    n, m = source.generators, target.generators
    if not isinstance(rows, list) or len(rows) != n:
        raise DocumentError(f"matrix: expected {n} rows")
    out = []
    for i, r in enumerate(rows):
        if not isinstance(r, list) or len(r) != m:
            raise DocumentError(f"matrix[{i}]: expected {m} entries")
        out.append([parse_element(ctx, s, f"matrix[{i}][{j}]") for j, s in enumerate(r)])
    return Matrix.from_rows(ctx, out) if out else Matrix.zero(ctx, 0, m)


def canonical_json(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise DocumentError(f"{path}: {e}") from e
    except json.JSONDecodeError as e:
        raise DocumentError(f"{path}: invalid JSON: {e}") from e
