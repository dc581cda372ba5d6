#!/usr/bin/env python3
"""Run every verification suite over the standard ring battery.

Prints a one-line summary per (suite, ring) and writes the full JSON
reports under out/reports/ (git-ignored scratch output).

Usage:  python scripts/run_all_suites.py [--seed 7] [--outdir out/reports]
"""

import argparse
import json
from pathlib import Path

from modfact.harness import (
    RING_PRESETS,
    verify_adjunctions,
    verify_gp_transfer,
    verify_group_ring_semisimple,
    verify_theorem1_desk,
    verify_theorem3_desk,
)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--outdir", default="out/reports")
    args = ap.parse_args()
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    runs = []
    for key in ("z6", "f2x3", "f4", "zc3p2"):
        runs.append((f"theorem1-{key}", verify_theorem1_desk(RING_PRESETS[key](), seed=args.seed)))
    for key in ("z5", "f2x2", "f4", "zc2p3"):
        runs.append((f"theorem3-{key}", verify_theorem3_desk(RING_PRESETS[key](), seed=args.seed)))
    for key in ("z6", "f2x2", "f4", "zc2p3"):
        runs.append((f"adjunctions-{key}", verify_adjunctions(RING_PRESETS[key](), seed=args.seed, samples=20)))
    for n, p in ((2, 3), (3, 2)):
        runs.append((f"gp-transfer-c{n}p{p}", verify_gp_transfer(n, p, seed=args.seed)))
    for n, p in ((3, 2), (2, 3), (2, 2)):
        runs.append((f"group-ring-c{n}p{p}", verify_group_ring_semisimple(n, p, seed=args.seed)))

    all_ok = True
    for name, rep in runs:
        doc = rep.to_dict()
        (outdir / f"{name}.json").write_text(json.dumps(doc, indent=2) + "\n")
        status = "PASS" if doc["summary"]["pass"] else "FAIL"
        all_ok &= doc["summary"]["pass"]
        print(f"{status}  {name:28s} {doc['summary']['statement']}")
    raise SystemExit(0 if all_ok else 2)


if __name__ == "__main__":
    main()
