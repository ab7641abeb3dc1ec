"""Array-encoded equality kernel, JIT-compiled when numba is available.

The merge loop below is the one genuinely hot path in the package: it runs
over machines with up to hundreds of thousands of states, so it works on
flat numpy arrays and compiles with numba's @njit by default. Setting the
environment variable ``FSMGRADER_DISABLE_JIT=1`` (or running without numba
installed) selects the same function body as plain Python over the same
arrays. ``benchmarks/bench_equivalence.py`` compares the two paths.
"""

import os

import numpy as np

ENV_DISABLE_JIT = "FSMGRADER_DISABLE_JIT"


def _hk_core_py(delta, final, init_a, init_b):
    """Union-find merge over the disjoint union of two total DFAs.

    ``delta`` is the stacked (n_total, n_symbols) transition table of both
    machines (second machine's states offset past the first), ``final``
    the stacked finality flags. Pairs of states are merged breadth-first
    starting from the two initial states, expanding symbols in index
    (= sorted) order; a finality mismatch is checked at discovery time,
    before the merged-already prune, so the first hit reconstructs the
    shortlex-minimal disagreeing word through the parent pointers.

    Returns ``(equivalent, word)`` where ``word`` is an array of symbol
    indices (empty and meaningless when ``equivalent`` is true; empty and
    meaning the empty word when false).
    """
    n_total, n_syms = delta.shape
    parent = np.arange(n_total)
    rank = np.zeros(n_total, dtype=np.int64)

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]  # path halving
            x = parent[x]
        return x

    empty = np.empty(0, dtype=np.int64)
    if final[init_a] != final[init_b]:
        return False, empty

    # explored pairs: at most one per union plus the seed
    cap = n_total + 1
    pair_a = np.empty(cap, dtype=np.int64)
    pair_b = np.empty(cap, dtype=np.int64)
    via_pair = np.empty(cap, dtype=np.int64)
    via_sym = np.empty(cap, dtype=np.int64)
    pair_a[0] = init_a
    pair_b[0] = init_b
    via_pair[0] = -1
    via_sym[0] = -1
    ra, rb = find(init_a), find(init_b)
    if ra != rb:
        parent[rb] = ra
        rank[ra] = 1
    head, tail = 0, 1
    while head < tail:
        p = pair_a[head]
        q = pair_b[head]
        for s in range(n_syms):
            p2 = delta[p, s]
            q2 = delta[q, s]
            if final[p2] != final[q2]:
                length = 1
                i = head
                while via_sym[i] != -1:
                    length += 1
                    i = via_pair[i]
                word = np.empty(length, dtype=np.int64)
                word[length - 1] = s
                i = head
                j = length - 2
                while via_sym[i] != -1:
                    word[j] = via_sym[i]
                    j -= 1
                    i = via_pair[i]
                return False, word
            r1 = find(p2)
            r2 = find(q2)
            if r1 != r2:
                if rank[r1] < rank[r2]:
                    r1, r2 = r2, r1
                parent[r2] = r1
                if rank[r1] == rank[r2]:
                    rank[r1] += 1
                pair_a[tail] = p2
                pair_b[tail] = q2
                via_pair[tail] = head
                via_sym[tail] = s
                tail += 1
        head += 1
    return True, empty


def jit_enabled() -> bool:
    if os.environ.get(ENV_DISABLE_JIT, "").strip().lower() in ("1", "true", "yes"):
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


_kernel = None


def hk_kernel():
    """The selected kernel; numba import and compilation happen lazily."""
    global _kernel
    if _kernel is None:
        if jit_enabled():
            from numba import njit

            _kernel = njit(cache=True)(_hk_core_py)
        else:
            _kernel = _hk_core_py
    return _kernel
