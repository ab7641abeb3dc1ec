"""Benchmark the equality kernel: numba @njit vs the plain-Python fallback.

Runs the same union-find merge over identical encoded machine pairs and
prints per-size timings for both paths, plus the end-to-end equivalent()
call. The fallback is what you get with FSMGRADER_DISABLE_JIT=1 or without
numba installed.

Usage: python benchmarks/bench_equivalence.py [--sizes 1000,10000,100000]
"""

import argparse
import time

import numpy as np

from fsmgrader._accel import _hk_core_py, hk_kernel, jit_enabled
from fsmgrader.automata import Alphabet, Dfa
from fsmgrader.equivalence import _encode_pair, equivalent


def random_dfa(seed: int, n: int, prefix: str = "s") -> Dfa:
    rng = np.random.default_rng(seed)
    targets = rng.integers(0, n, size=(n, 2))
    finals = rng.random(n) < 0.5
    states = [f"{prefix}{i:06d}" for i in range(n)]
    transitions = {
        states[i]: {"0": states[targets[i, 0]], "1": states[targets[i, 1]]}
        for i in range(n)
    }
    return Dfa(
        states=frozenset(states),
        alphabet=Alphabet(["0", "1"]),
        transitions=transitions,
        initial_state=states[0],
        final_states=frozenset(s for i, s in enumerate(states) if finals[i]),
    )


def relabeled(dfa: Dfa) -> Dfa:
    mapping = {s: "t" + s[1:] for s in dfa.states}
    return Dfa(
        states=frozenset(mapping.values()),
        alphabet=dfa.alphabet,
        transitions={
            mapping[s]: {sym: mapping[t] for sym, t in row.items()}
            for s, row in dfa.transitions.items()
        },
        initial_state=mapping[dfa.initial_state],
        final_states=frozenset(mapping[s] for s in dfa.final_states),
    )


def best_of(fn, reps: int = 3) -> float:
    times = []
    for _ in range(reps):
        started = time.perf_counter()
        fn()
        times.append(time.perf_counter() - started)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--sizes",
        default="1000,10000,100000",
        help="comma-separated state counts (two equivalent machines per size)",
    )
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if not jit_enabled():
        print("note: JIT disabled in this environment; 'njit' column will equal 'python'")
    kernel = hk_kernel()

    tiny = _encode_pair(random_dfa(0, 64), relabeled(random_dfa(0, 64)))[:4]
    kernel(*tiny)  # compile outside the timings

    header = f"{'states':>8} | {'njit kernel':>12} | {'python kernel':>14} | {'speedup':>8} | {'equivalent()':>13}"
    print(header)
    print("-" * len(header))
    for n in sizes:
        dfa = random_dfa(7, n)
        twin = relabeled(dfa)
        encoded = _encode_pair(dfa, twin)[:4]
        t_jit = best_of(lambda: kernel(*encoded))
        t_py = best_of(lambda: _hk_core_py(*encoded), reps=1 if n >= 100_000 else 3)
        t_full = best_of(lambda: equivalent(dfa, twin))
        print(
            f"{n:>8} | {t_jit*1e3:>9.2f} ms | {t_py*1e3:>11.1f} ms | "
            f"{t_py/t_jit:>7.1f}x | {t_full*1e3:>10.2f} ms"
        )


if __name__ == "__main__":
    main()
