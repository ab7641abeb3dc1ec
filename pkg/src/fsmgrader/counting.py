"""Exact per-length word counts and shortlex enumeration for DFAs."""

from dataclasses import dataclass

from .automata import Dfa


@dataclass(frozen=True)
class WordCountTable:
    """counts[n] = number of accepted words of exactly length n.

    Plain Python integers throughout: counts reach |alphabet| ** n, which
    overflows fixed-width arithmetic long before n gets interesting.
    """

    counts: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.counts[n]

    def __len__(self) -> int:
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)


def count_words(dfa: Dfa, max_len: int) -> WordCountTable:
    """Count accepted words of each length 0..max_len.

    Dynamic programming on how many words of length n reach each state;
    one pass per length, exact integer arithmetic.
    """
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    states = sorted(dfa.states)
    index = {s: i for i, s in enumerate(states)}
    targets = [
        [index[dfa.transitions[s][sym]] for sym in dfa.alphabet] for s in states
    ]
    is_final = [s in dfa.final_states for s in states]

    vec = [0] * len(states)
    vec[index[dfa.initial_state]] = 1
    counts = []
    for n in range(max_len + 1):
        counts.append(sum(v for v, f in zip(vec, is_final) if f))
        if n == max_len:
            break
        nxt = [0] * len(states)
        for i, v in enumerate(vec):
            if v:
                for t in targets[i]:
                    nxt[t] += v
        vec = nxt
    return WordCountTable(tuple(counts))


def enumerate_shortlex(dfa: Dfa, max_len: int, limit: int) -> list[str]:
    """First ``limit`` accepted words of length <= max_len, shortlex order.

    Walks the automaton guided by a can-reach-acceptance table, so pruned
    branches cost nothing and the work is bounded by the output size times
    the automaton size times max_len - the full |alphabet|^n word space is
    never materialized.
    """
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    if limit <= 0:
        raise ValueError("limit must be positive")
    states = sorted(dfa.states)
    index = {s: i for i, s in enumerate(states)}
    symbols = list(dfa.alphabet)
    targets = [[index[dfa.transitions[s][sym]] for sym in symbols] for s in states]

    # can_accept[r][i]: some word of exactly r symbols is accepted from i
    can_accept = [[s in dfa.final_states for s in states]]
    for _ in range(max_len):
        prev = can_accept[-1]
        can_accept.append([any(prev[t] for t in targets[i]) for i in range(len(states))])

    out: list[str] = []
    start = index[dfa.initial_state]
    for length in range(max_len + 1):
        if len(out) >= limit:
            break
        if not can_accept[length][start]:
            continue
        # lex-order DFS: push symbols reversed so the smallest pops first
        stack: list[tuple[str, int]] = [("", start)]
        while stack and len(out) < limit:
            prefix, i = stack.pop()
            remaining = length - len(prefix)
            if remaining == 0:
                out.append(prefix)
                continue
            for k in range(len(symbols) - 1, -1, -1):
                t = targets[i][k]
                if can_accept[remaining - 1][t]:
                    stack.append((prefix + symbols[k], t))
    return out
