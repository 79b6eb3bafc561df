#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs the hot paths (both multiplication algorithms, the double-and-add
oracle, the invariant checker, and a verify-style differential sweep) on
each available backend and prints the per-call medians plus the speedup.

    python3 benchmarks/compare_backends.py [--reps 9]
"""

import argparse
import statistics
import time

from carrymul import kernels
from carrymul.oracle import SplitMix64


def timed(fn, reps):
    times = []
    for _ in range(reps):
        started = time.perf_counter()
        fn()
        times.append(time.perf_counter() - started)
    return statistics.median(times)


def make_operand(rng, base, length):
    digits = [rng.bounded(base) for _ in range(length - 1)]
    digits.append(1 + rng.bounded(base - 1))
    return digits


def workloads():
    rng = SplitMix64(0xB16B00B5)
    cases = []
    for base, length in [(10, 8), (10, 64), (10, 256), (16, 64), (36, 64)]:
        a = make_operand(rng, base, length)
        b = make_operand(rng, base, length)
        cases.append((f"incremental {length}d base {base}",
                      lambda k, a=a, b=b, base=base: k.incremental(a, b, base)))
        cases.append((f"schoolbook  {length}d base {base}",
                      lambda k, a=a, b=b, base=base: k.schoolbook(a, b, base)))
        cases.append((f"oracle      {length}d base {base}",
                      lambda k, a=a, b=b, base=base: k.oracle_mul(a, b, base)))

    a64 = make_operand(rng, 10, 64)
    b64 = make_operand(rng, 10, 64)

    def invariant_case(k, a=a64, b=b64):
        steps, _, _, _ = k.incremental(a, b, 10)
        k.check_invariant(a, b, steps, 10)

    cases.append(("invariant   64d base 10", invariant_case))

    def sweep(k):
        # differential mini-sweep, the exhaustive-verify hot loop in little
        for x in range(40):
            for y in range(40):
                ax = [int(c) for c in reversed(str(x))] if x else []
                by = [int(c) for c in reversed(str(y))] if y else []
                _, r1, _, _ = k.incremental(ax, by, 10)
                _, r2, _, _ = k.schoolbook(ax, by, 10)
                r3 = k.oracle_mul(ax, by, 10)
                assert r1 == r2 == r3

    cases.append(("sweep 40x40 pairs", sweep))
    return cases


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--reps", type=int, default=9)
    args = parser.parse_args()

    names = kernels.available_backends()
    backends = {name: kernels.get_backend(name) for name in names}
    if "compiled" not in backends:
        print("note: compiled backend not built; timing pure Python only")

    print(f"{'workload':<26} " + " ".join(f"{n:>12}" for n in names)
          + ("      speedup" if len(names) > 1 else ""))
    for label, fn in workloads():
        medians = {}
        for name, mod in backends.items():
            medians[name] = timed(lambda m=mod: fn(m), args.reps)
        row = f"{label:<26} " + " ".join(f"{medians[n] * 1e6:>10.1f}us" for n in names)
        if "compiled" in medians and "python" in medians:
            row += f"   {medians['python'] / medians['compiled']:>8.1f}x"
        print(row)


if __name__ == "__main__":
    main()
