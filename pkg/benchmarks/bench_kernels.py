"""Compare the compiled clique-tally kernel against the pure-Python one.

The workload is the real one: antichain tallies of root posets and face
tallies of cluster complexes.  Run from the repository root:

    python3 benchmarks/bench_kernels.py --repeat 3
"""

from __future__ import annotations

import argparse
import os
import time

from coxcat import kernels
from coxcat._kernels_py import clique_tally as pure_clique_tally
from coxcat.cluster import ClusterComplex
from coxcat.poset import RootPoset
from coxcat.rootsys import build_root_system


def poset_workload(label: str):
    poset = RootPoset(build_root_system(label))
    return (
        poset.incomparable,
        poset.simple_mask,
        poset.edge_masks,
        len(poset.root_ids),
    )


def cluster_workload(label: str):
    rs = build_root_system(label)
    complex_ = ClusterComplex(rs)
    return (
        complex_.adjacency,
        (1 << rs.rank) - 1,
        [0] * complex_.n_vertices,
        rs.rank,
    )


WORKLOADS = [
    ("antichains D5", lambda: poset_workload("D5")),
    ("antichains E6", lambda: poset_workload("E6")),
    ("antichains E7", lambda: poset_workload("E7")),
    ("antichains E8", lambda: poset_workload("E8")),
    ("cluster B4", lambda: cluster_workload("B4")),
    ("cluster D5", lambda: cluster_workload("D5")),
    ("cluster D6", lambda: cluster_workload("D6")),
]


def time_call(fn, args, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if not kernels.USING_COMPILED:
        print("note: compiled kernel unavailable or disabled; comparing pure to itself")
    print(f"{'workload':<16} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for name, make in WORKLOADS:
        adj, special, edges, max_size = make()
        pure_s = time_call(pure_clique_tally, (adj, special, edges, max_size), args.repeat)
        fast_s = time_call(kernels.clique_tally, (adj, special, edges, max_size), args.repeat)
        ratio = pure_s / fast_s if fast_s > 0 else float("inf")
        print(f"{name:<16} {pure_s * 1000:>8.1f}ms {fast_s * 1000:>8.1f}ms {ratio:>7.1f}x")
        both_equal = pure_clique_tally(adj, special, edges, max_size) == kernels.clique_tally(
            adj, special, edges, max_size
        )
        if not both_equal:
            print(f"  MISMATCH between kernels on {name}")
            return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
