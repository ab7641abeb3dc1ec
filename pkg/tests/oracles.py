"""Brute-force reference implementations used to check the real algorithms.

Everything in here works on plain dict-shaped machines (see fixtures.py) and
computes answers by direct enumeration or graph search, never by calling into
the package. Keep it that way: these are the independent side of every
dual-route check in the test suite.

Raw machine shape::

    {
        "states": [...],
        "alphabet": [...],          # sorted single-char symbols
        "delta": {state: {symbol: state}},   # total
        "initial": state,
        "finals": {state, ...},
    }
"""

from collections import deque
from fractions import Fraction
from itertools import product as iproduct


def run(machine, word):
    """Final state reached by a total DFA on ``word``."""
    state = machine["initial"]
    for ch in word:
        state = machine["delta"][state][ch]
    return state


def accepts(machine, word):
    return run(machine, word) in machine["finals"]


def accepts_from(machine, state, word):
    for ch in word:
        state = machine["delta"][state][ch]
    return state in machine["finals"]


def all_words(alphabet, length):
    for tup in iproduct(sorted(alphabet), repeat=length):
        yield "".join(tup)


def shortlex_words(alphabet, max_len):
    for n in range(max_len + 1):
        yield from all_words(alphabet, n)


def count_words(machine, length):
    """Count accepted words of exactly ``length`` by walking the word tree."""
    total = 0
    stack = [(machine["initial"], 0)]
    symbols = sorted(machine["alphabet"])
    while stack:
        state, depth = stack.pop()
        if depth == length:
            if state in machine["finals"]:
                total += 1
            continue
        for ch in symbols:
            stack.append((machine["delta"][state][ch], depth + 1))
    return total


def enumerate_shortlex(machine, max_len, limit):
    out = []
    for word in shortlex_words(machine["alphabet"], max_len):
        if accepts(machine, word):
            out.append(word)
            if len(out) == limit:
                break
    return out


def equivalent(a, b):
    """Product-graph BFS looking for a reachable finality-mismatched pair."""
    symbols = sorted(a["alphabet"])
    assert symbols == sorted(b["alphabet"])
    start = (a["initial"], b["initial"])
    seen = {start}
    queue = deque([start])
    while queue:
        p, q = queue.popleft()
        if (p in a["finals"]) != (q in b["finals"]):
            return False
        for ch in symbols:
            nxt = (a["delta"][p][ch], b["delta"][q][ch])
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return True


def shortlex_witness(a, b, max_len):
    """First word in shortlex order on which the two machines disagree.

    Exhaustive scan; callers must keep max_len small enough to enumerate.
    """
    for word in shortlex_words(a["alphabet"], max_len):
        if accepts(a, word) != accepts(b, word):
            return word
    return None


def witness_length_bound(a, b):
    """Shortest disagreement length via product BFS; None if equivalent."""
    symbols = sorted(a["alphabet"])
    start = (a["initial"], b["initial"])
    seen = {start}
    queue = deque([(start, 0)])
    while queue:
        (p, q), depth = queue.popleft()
        if (p in a["finals"]) != (q in b["finals"]):
            return depth
        for ch in symbols:
            nxt = (a["delta"][p][ch], b["delta"][q][ch])
            if nxt not in seen:
                seen.add(nxt)
                queue.append(((nxt), depth + 1))
    return None


def density_difference(student, reference, k):
    """Exact mean, over lengths 0..2k, of misclassified/reference ratios."""
    total = Fraction(0)
    for n in range(2 * k + 1):
        mismatched = 0
        ref_count = 0
        for word in all_words(reference["alphabet"], n):
            in_student = accepts(student, word)
            in_ref = accepts(reference, word)
            if in_ref:
                ref_count += 1
            if in_student != in_ref:
                mismatched += 1
        total += Fraction(mismatched, max(ref_count, 1))
    return total / (2 * k + 1)


def myhill_nerode_classes(machine):
    """Number of distinguishability classes among accessible states.

    Two states are distinguished iff some word of length <= |states| is
    accepted from exactly one of them.
    """
    symbols = sorted(machine["alphabet"])
    accessible = []
    seen = {machine["initial"]}
    queue = deque([machine["initial"]])
    while queue:
        s = queue.popleft()
        accessible.append(s)
        for ch in symbols:
            t = machine["delta"][s][ch]
            if t not in seen:
                seen.add(t)
                queue.append(t)

    words = list(shortlex_words(machine["alphabet"], len(machine["states"])))
    signatures = set()
    for s in accessible:
        signatures.add(tuple(accepts_from(machine, s, w) for w in words))
    return len(signatures)


def random_total_dfa(rng, n_states, alphabet, final_prob=0.5, prefix="s"):
    """Random total DFA in raw form. Always at least one state."""
    states = [f"{prefix}{i}" for i in range(n_states)]
    delta = {
        s: {ch: states[rng.randrange(n_states)] for ch in alphabet}
        for s in states
    }
    finals = {s for s in states if rng.random() < final_prob}
    return {
        "states": states,
        "alphabet": list(alphabet),
        "delta": delta,
        "initial": states[0],
        "finals": finals,
    }


def random_nfa(rng, n_states, alphabet, edge_prob=0.25, eps_prob=0.12, final_prob=0.4):
    """Random NFA in raw form: {state: {symbol_or_eps: set_of_states}}."""
    states = [f"n{i}" for i in range(n_states)]
    delta = {s: {} for s in states}
    for s in states:
        for ch in alphabet:
            targets = {t for t in states if rng.random() < edge_prob}
            if targets:
                delta[s][ch] = targets
        eps_targets = {t for t in states if rng.random() < eps_prob}
        if eps_targets:
            delta[s][""] = eps_targets
    finals = {s for s in states if rng.random() < final_prob}
    if not finals:
        finals = {states[-1]}
    return {
        "states": states,
        "alphabet": list(alphabet),
        "delta": delta,
        "initial": states[0],
        "finals": finals,
    }


def nfa_accepts(machine, word):
    """Epsilon-closure simulation on a raw NFA."""

    def closure(states):
        out = set(states)
        stack = list(states)
        while stack:
            s = stack.pop()
            for t in machine["delta"].get(s, {}).get("", ()):
                if t not in out:
                    out.add(t)
                    stack.append(t)
        return out

    current = closure({machine["initial"]})
    for ch in word:
        stepped = set()
        for s in current:
            stepped |= machine["delta"].get(s, {}).get(ch, set())
        current = closure(stepped)
        if not current:
            return False
    return bool(current & machine["finals"])
