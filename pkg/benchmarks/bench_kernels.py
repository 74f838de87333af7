"""Compare the compiled and pure-Python elimination kernels on end-to-end workloads.

    python3 benchmarks/bench_kernels.py            # all workloads
    python3 benchmarks/bench_kernels.py --only e6-flats --repeat 3
"""
import argparse
import random
import time

from tcarr import kernels
from tcarr.bounds import lattice_well_balanced, tc_report
from tcarr.catalog import build
from tcarr.matroid import Arrangement


def fresh(cid, backend):
    # a new Arrangement per run so that no cache carries over
    a = build(cid)
    return Arrangement(a.normals, a.labels, a.field, a.name, backend=backend)


def random_ranks(backend):
    a = fresh("weyl:E8", backend)
    rng = random.Random(0)
    for _ in range(20000):
        a.rank(rng.sample(range(a.n), rng.randint(1, 9)))


def closures(backend):
    a = fresh("weyl:E7", backend)
    rng = random.Random(1)
    for _ in range(5000):
        a.closure(rng.sample(range(a.n), rng.randint(1, 6)))


WORKLOADS = {
    "rank-e8": ("20k random rank queries on E8", random_ranks),
    "closure-e7": ("5k random closures on E7", closures),
    "e6-flats": ("all corank-1 flats of E6", lambda b: fresh("weyl:E6", b).flats_by_rank(5)),
    "e8-lattice": ("well-balanced lattice test on E8", lambda b: lattice_well_balanced(fresh("weyl:E8", b))),
    "braid6-circuits": ("circuits of braid(6)", lambda b: fresh("braid:6", b).circuits()),
    "tc-b4": ("tc_report(full_monomial:2:4, s=3)", lambda b: tc_report(fresh("full_monomial:2:4", b), 3)),
}


def timed(fn, backend, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn(backend)
        best = min(best, time.perf_counter() - t)
    return best


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--only", action="append", choices=sorted(WORKLOADS))
    p.add_argument("--repeat", type=int, default=1)
    args = p.parse_args()
    backends = ["python"] + (["cython"] if kernels._ext is not None else [])
    if len(backends) == 1:
        print("compiled kernel not available; timing the pure-Python kernel only")
    print(f"{'workload':<18}{'description':<40}" + "".join(f"{b:>10}" for b in backends) + "   speedup")
    for name in args.only or WORKLOADS:
        desc, fn = WORKLOADS[name]
        times = [timed(fn, b, args.repeat) for b in backends]
        speed = f"{times[0] / times[1]:8.1f}x" if len(times) == 2 else ""
        print(f"{name:<18}{desc:<40}" + "".join(f"{t:9.3f}s" for t in times) + f"  {speed}")


if __name__ == "__main__":
    main()
