"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--repeat 3]

Each row times one kernel on a fixed workload and checks that both backends
return the same answer.
"""
import argparse
import random
import timeit
from itertools import combinations

from clutterlab._backend import compiled_kernels, python_kernels


def _uniform(n, d, p, seed):
    rng = random.Random(seed)
    cands = [sum(1 << (v - 1) for v in s) for s in combinations(range(1, n + 1), d)]
    return [c for c in cands if rng.random() < p] or cands[:1]


def workloads():
    rng = random.Random(7)
    graphs = [_uniform(9, 2, 0.35, s) for s in range(40)]
    triples = [_uniform(8, 3, 0.25, s) for s in range(40)]
    cands63 = [sum(1 << (v - 1) for v in s) for s in combinations(range(1, 7), 3)]
    classes = python_kernels.enumerate_classes(6, cands63)
    sample = rng.sample(classes, 400)
    return [
        ("minimal_transversals", lambda k: [k.minimal_transversals(e) for e in triples]),
        ("max_matching", lambda k: [k.max_matching(e) for e in graphs]),
        ("packing_witness n=8", lambda k: [k.packing_witness(8, e) for e in triples[:10]]),
        ("canonical_edges n=9", lambda k: [k.canonical_edges(9, e) for e in graphs]),
        ("enumerate_classes n=6 d=3", lambda k: k.enumerate_classes(6, cands63)),
        ("screen_uniform n=6 d=3", lambda k: k.screen_uniform(sample, cands63, 6, 3)),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if compiled_kernels is None:
        raise SystemExit("compiled extension not built; run: pip install -e . --no-build-isolation")
    print(f"{'kernel':28s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}  same")
    for name, job in workloads():
        same = job(python_kernels) == job(compiled_kernels)
        tp = min(timeit.repeat(lambda: job(python_kernels), number=1, repeat=args.repeat))
        tc = min(timeit.repeat(lambda: job(compiled_kernels), number=1, repeat=args.repeat))
        print(f"{name:28s} {tp:10.4f} {tc:10.4f} {tp / tc:8.1f}x  {same}")


if __name__ == "__main__":
    main()
