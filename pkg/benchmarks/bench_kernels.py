"""Compiled vs pure-Python kernels on representative v-number workloads.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each workload runs on both backends; the table reports the best of N wall
times and the speedup.  Results must agree, or the run aborts.
"""
import argparse
import time

from vnum import kernels as K
from vnum import power, v_number
from vnum.clutter import complete, cycle, graph_power, path
from vnum.constructors import MixedSpec, edge_ideal, mixed_ideal, squarefree_power, symbolic_power

WORKLOADS = [
    ("stable-set  I(C_16^2)", lambda: v_number(edge_ideal(graph_power(cycle(16), 2)), "stable-set")),
    ("stable-set  I(L_20)", lambda: v_number(edge_ideal(path(20)), "stable-set")),
    ("colon       mixed 5+5 [2,4],[4,2]", lambda: v_number(mixed_ideal(MixedSpec(5, 5, [(2, 4), (4, 2)])), "colon")),
    ("witness     I(L_8)^4", lambda: v_number(power(edge_ideal(path(8)), 4), "witness")),
    ("witness     I(K_5)^(4)", lambda: v_number(symbolic_power(edge_ideal(complete(5)), 4), "witness")),
    ("sqfree pow  I(L_14)^[4]", lambda: squarefree_power(edge_ideal(path(14)), 4)),
]


def best_time(fn, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    if K.BACKEND != "cython":
        raise SystemExit("compiled extension not available; build with pip install -e .")
    print(f"{'workload':36s} {'cython s':>10s} {'python s':>10s} {'speedup':>8s}")
    for name, fn in WORKLOADS:
        fast, r_fast = best_time(fn, args.repeat)
        saved = K.use_python()
        try:
            slow, r_slow = best_time(fn, args.repeat)
        finally:
            K.restore(saved)
        if r_fast != r_slow:
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:36s} {fast:10.4f} {slow:10.4f} {slow / fast:7.1f}x")


if __name__ == "__main__":
    main()
