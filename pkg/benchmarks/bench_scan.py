#!/usr/bin/env python3
"""Benchmark: compiled fast-scan kernel vs the pure-Python fallback.

Times the candidate-subset scan that dominates facet enumeration, on an
oracle-style workload (all subsets) and a signature-style workload
(selection products), and checks that both backends return identical
results.  Run after `pip install -e .`:

    python benchmarks/bench_scan.py [--repeat N]
"""

from __future__ import annotations

import argparse
import itertools
import time

from disjhull import families
from disjhull.hullenum import _scaled_points, enumerate_signatures
from disjhull._kernels import reference

try:
    from disjhull._kernels import _fastscan
except ImportError:
    _fastscan = None


def oracle_workload():
    inst = families.gen_hyperrect([((0, 0, 0, 0), (2, 3, 2, 3)), ((5, 4, 5, 4), (7, 6, 6, 7))])
    scaled, _ = _scaled_points(inst)
    dim = inst.d + inst.n
    cands = list(itertools.combinations(range(len(scaled)), dim))
    return "oracle d=4 n=1 boxes", scaled, cands


def signature_workload():
    inst = families.gen_hyperrect(
        [((0, 0, 0), (2, 2, 2)), ((3, 3, 3), (5, 4, 5)), ((-3, -2, -3), (-1, -1, -1))]
    )
    scaled, _ = _scaled_points(inst)
    groups, start = [], 0
    for vr in inst.vreps:
        groups.append(range(start, start + len(vr.points)))
        start += len(vr.points)
    cands = []
    for sig in enumerate_signatures(inst.d, inst.n):
        for sel in itertools.product(
            *(itertools.combinations(g, s) for g, s in zip(groups, sig.sigma))
        ):
            cands.append(tuple(itertools.chain.from_iterable(sel)))
    return "signature d=3 n=2 boxes", scaled, cands


def run(name, scaled, cands, repeat):
    print(f"{name}: {len(cands)} candidate subsets, {len(scaled)} points")
    results = {}
    for label, mod in (("pure", reference), ("cython", _fastscan)):
        if mod is None:
            print(f"  {label:7s} not built")
            continue
        best = None
        for _ in range(repeat):
            t0 = time.perf_counter()
            out = mod.scan_candidates(scaled, iter(cands))
            dt = time.perf_counter() - t0
            best = dt if best is None else min(best, dt)
        results[label] = (best, out)
        print(f"  {label:7s} {best:8.3f} s   ({len(out)} valid inequalities)")
    if len(results) == 2:
        assert results["pure"][1] == results["cython"][1], "backend results differ"
        print(f"  speedup {results['pure'][0] / results['cython'][0]:.2f}x (identical output)")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=1)
    args = ap.parse_args()
    for workload in (signature_workload, oracle_workload):
        run(*workload(), args.repeat)


if __name__ == "__main__":
    main()
