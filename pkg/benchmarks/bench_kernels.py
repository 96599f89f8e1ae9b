"""Compare the compiled and pure-Python kernel backends.

Usage::

    python benchmarks/bench_kernels.py [--repeat 5] [--seed 0]

Both backends are run on the same seeded inputs; their outputs are checked
for equality before timings are reported.
"""
from __future__ import annotations

import argparse
import random
import sys
import timeit

from indpoly.graph import Graph
from indpoly.kernels import available_backends


def random_graphs(rng: random.Random, count: int, n: int, p: float) -> list[Graph]:
    out = []
    for _ in range(count):
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        out.append(Graph.from_edge_list(n, edges))
    return out


def workloads(seed: int) -> dict[str, tuple[str, list[Graph]]]:
    rng = random.Random(seed)
    return {
        "stable_set_counts n=20 p=0.2": ("stable_set_counts", random_graphs(rng, 20, 20, 0.2)),
        "stable_set_counts n=28 p=0.3": ("stable_set_counts", random_graphs(rng, 5, 28, 0.3)),
        "canonical_code n=10 p=0.4": ("canonical_code", random_graphs(rng, 500, 10, 0.4)),
        "canonical_code n=16 p=0.3": ("canonical_code", random_graphs(rng, 200, 16, 0.3)),
    }


def run(repeat: int, seed: int, out=sys.stdout) -> dict[str, dict[str, float]]:
    backends = available_backends()
    if "cython" not in backends:
        out.write("compiled backend not built; timing the pure-Python kernels only\n")
    results: dict[str, dict[str, float]] = {}
    for label, (fn_name, graphs) in workloads(seed).items():
        outputs = {}
        times = {}
        for name, mod in backends.items():
            fn = getattr(mod, fn_name)
            outputs[name] = [fn(g.n, g.adj) for g in graphs]
            times[name] = min(
                timeit.repeat(lambda: [fn(g.n, g.adj) for g in graphs], number=1, repeat=repeat)
            )
        reference = outputs["python"]
        for name, got in outputs.items():
            if got != reference:
                raise SystemExit(f"backend {name} disagrees with python on {label}")
        results[label] = times
        line = f"{label:32s}" + "".join(f"  {k}={v * 1e3:9.2f} ms" for k, v in times.items())
        if "cython" in times:
            line += f"  speedup={times['python'] / times['cython']:6.1f}x"
        out.write(line + "\n")
    return results


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)
    run(args.repeat, args.seed)
    return 0


if __name__ == "__main__":
    sys.exit(main())
