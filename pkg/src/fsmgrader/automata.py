"""Immutable DFA/NFA value types and the classical constructions.

All operations here are pure functions over immutable values: every
construction returns a new machine and identical inputs always produce
structurally identical outputs (same state names, same ordering), so
results are safe to share across threads and to compare byte-for-byte
after serialization.

Epsilon moves are keyed by the empty string, which is therefore illegal
as an alphabet symbol.
"""

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Literal, Union

from .errors import AlphabetMismatchError

EPSILON = ""

ProductMode = Literal["intersection", "union", "symmetric_difference"]


class Alphabet:
    """Ordered set of single-character symbols, sorted by code point."""

    __slots__ = ("symbols",)

    def __init__(self, symbols: Iterable[str]):
        symbols = list(symbols)
        if not symbols:
            raise ValueError("alphabet must not be empty")
        if len(set(symbols)) != len(symbols):
            raise ValueError("alphabet contains duplicate symbols")
        for sym in symbols:
            if not isinstance(sym, str) or len(sym) != 1:
                raise ValueError(f"alphabet symbol must be a single character, got {sym!r}")
        object.__setattr__(self, "symbols", tuple(sorted(symbols)))

    def __setattr__(self, name, value):
        raise AttributeError("Alphabet is immutable")

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def __contains__(self, sym):
        return sym in self.symbols

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __hash__(self):
        return hash(self.symbols)

    def __repr__(self):
        return f"Alphabet({''.join(self.symbols)!r})"


def _check_state_names(states: frozenset[str]):
    if not states:
        raise ValueError("machine must have at least one state")
    for name in states:
        if not isinstance(name, str) or not name:
            raise ValueError(f"state names must be nonempty strings, got {name!r}")


@dataclass(frozen=True, eq=True)
class Dfa:
    """Total deterministic automaton: every (state, symbol) has one target."""

    states: frozenset[str]
    alphabet: Alphabet
    transitions: dict[str, dict[str, str]]
    initial_state: str
    final_states: frozenset[str]

    def __post_init__(self):
        states = frozenset(self.states)
        finals = frozenset(self.final_states)
        _check_state_names(states)
        if self.initial_state not in states:
            raise ValueError(f"initial state {self.initial_state!r} not among states")
        if not finals <= states:
            raise ValueError(f"final states {sorted(finals - states)} not among states")
        table: dict[str, dict[str, str]] = {}
        for state in sorted(states):
            row = self.transitions.get(state)
            if row is None:
                raise ValueError(f"state {state!r} has no transitions; DFA must be total")
            new_row: dict[str, str] = {}
            for sym in self.alphabet:
                target = row.get(sym)
                if target is None:
                    raise ValueError(f"missing transition ({state!r}, {sym!r}); DFA must be total")
                if target not in states:
                    raise ValueError(f"transition ({state!r}, {sym!r}) targets unknown state {target!r}")
                new_row[sym] = target
            extra = set(row) - set(self.alphabet.symbols)
            if extra:
                raise ValueError(f"state {state!r} has transitions on non-alphabet symbols {sorted(extra)}")
            table[state] = new_row
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "final_states", finals)
        object.__setattr__(self, "transitions", table)

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True, eq=True)
class Nfa:
    """Nondeterministic automaton; epsilon moves keyed by the empty string."""

    states: frozenset[str]
    alphabet: Alphabet
    transitions: dict[str, dict[str, frozenset[str]]]
    initial_state: str
    final_states: frozenset[str]

    def __post_init__(self):
        states = frozenset(self.states)
        finals = frozenset(self.final_states)
        _check_state_names(states)
        if self.initial_state not in states:
            raise ValueError(f"initial state {self.initial_state!r} not among states")
        if not finals <= states:
            raise ValueError(f"final states {sorted(finals - states)} not among states")
        table: dict[str, dict[str, frozenset[str]]] = {}
        for state in sorted(states):
            new_row: dict[str, frozenset[str]] = {}
            for sym, targets in sorted(self.transitions.get(state, {}).items()):
                if sym != EPSILON and sym not in self.alphabet:
                    raise ValueError(f"state {state!r} has transitions on non-alphabet symbol {sym!r}")
                targets = frozenset([targets] if isinstance(targets, str) else targets)
                if not targets <= states:
                    raise ValueError(
                        f"transition ({state!r}, {sym!r}) targets unknown states {sorted(targets - states)}"
                    )
                if targets:
                    new_row[sym] = targets
            table[state] = new_row
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "final_states", finals)
        object.__setattr__(self, "transitions", table)

    __hash__ = None  # type: ignore[assignment]


Machine = Union[Dfa, Nfa]


def epsilon_closure(nfa: Nfa, states: Iterable[str]) -> frozenset[str]:
    """Smallest superset of ``states`` closed under epsilon moves."""
    states = set(states)
    unknown = states - nfa.states
    if unknown:
        raise ValueError(f"unknown states {sorted(unknown)}")
    closure = set(states)
    stack = list(states)
    while stack:
        state = stack.pop()
        for target in nfa.transitions[state].get(EPSILON, ()):
            if target not in closure:
                closure.add(target)
                stack.append(target)
    return frozenset(closure)


def _subset_name(subset: frozenset[str]) -> str:
    return "{" + ",".join(sorted(subset)) + "}"


def nfa_to_dfa(nfa: Nfa) -> Dfa:
    """Subset construction; materializes accessible subsets only.

    Subset states are named by their sorted members joined with commas
    inside braces, e.g. ``{q0,q1}``; the empty subset is ``{}``. Names are
    disambiguated with trailing apostrophes in the (contrived) event that
    two distinct subsets render identically.
    """
    symbols = list(nfa.alphabet)
    start = epsilon_closure(nfa, {nfa.initial_state})
    names: dict[frozenset[str], str] = {}
    used: set[str] = set()

    def assign(subset: frozenset[str]) -> str:
        name = _subset_name(subset)
        while name in used:
            name += "'"
        names[subset] = name
        used.add(name)
        return name

    assign(start)
    order = [start]
    queue = deque([start])
    transitions: dict[str, dict[str, str]] = {}
    while queue:
        subset = queue.popleft()
        row: dict[str, str] = {}
        for sym in symbols:
            stepped: set[str] = set()
            for state in subset:
                stepped |= nfa.transitions[state].get(sym, frozenset())
            target = epsilon_closure(nfa, stepped) if stepped else frozenset()
            if target not in names:
                assign(target)
                order.append(target)
                queue.append(target)
            row[sym] = names[target]
        transitions[names[subset]] = row
    finals = frozenset(names[s] for s in order if s & nfa.final_states)
    return Dfa(
        states=frozenset(names.values()),
        alphabet=nfa.alphabet,
        transitions=transitions,
        initial_state=names[start],
        final_states=finals,
    )


def _accessible_order(dfa: Dfa) -> list[str]:
    """States reachable from the start, in BFS order with sorted symbols."""
    order = [dfa.initial_state]
    seen = {dfa.initial_state}
    queue = deque(order)
    while queue:
        state = queue.popleft()
        for sym in dfa.alphabet:
            target = dfa.transitions[state][sym]
            if target not in seen:
                seen.add(target)
                order.append(target)
                queue.append(target)
    return order


def minimize(dfa: Dfa) -> Dfa:
    """Language-equivalent DFA with the minimum number of states.

    Inaccessible states are dropped, then indistinguishable states are
    merged by Moore-style partition refinement. The result is renamed
    canonically ("0", "1", ...) in BFS discovery order, which makes
    minimization reproducible and idempotent: minimizing an already
    minimal machine returns an identical value.
    """
    symbols = list(dfa.alphabet)
    order = _accessible_order(dfa)

    block = {s: (1 if s in dfa.final_states else 0) for s in order}
    n_blocks = len({block[s] for s in order})
    while True:
        signatures: dict[tuple, int] = {}
        new_block = {}
        for s in order:
            sig = (block[s], tuple(block[dfa.transitions[s][a]] for a in symbols))
            if sig not in signatures:
                signatures[sig] = len(signatures)
            new_block[s] = signatures[sig]
        if len(signatures) == n_blocks:
            break
        block, n_blocks = new_block, len(signatures)

    # canonical rename: BFS over the quotient graph
    rep = {}  # block id -> representative state
    for s in order:
        rep.setdefault(block[s], s)
    name: dict[int, str] = {block[dfa.initial_state]: "0"}
    bfs = deque([block[dfa.initial_state]])
    seq = [block[dfa.initial_state]]
    while bfs:
        b = bfs.popleft()
        for sym in symbols:
            t = block[dfa.transitions[rep[b]][sym]]
            if t not in name:
                name[t] = str(len(name))
                seq.append(t)
                bfs.append(t)
    transitions = {
        name[b]: {sym: name[block[dfa.transitions[rep[b]][sym]]] for sym in symbols}
        for b in seq
    }
    finals = frozenset(name[b] for b in seq if rep[b] in dfa.final_states)
    return Dfa(
        states=frozenset(name.values()),
        alphabet=dfa.alphabet,
        transitions=transitions,
        initial_state="0",
        final_states=finals,
    )


def complement(dfa: Dfa) -> Dfa:
    """DFA accepting exactly the words ``dfa`` rejects."""
    return Dfa(
        states=dfa.states,
        alphabet=dfa.alphabet,
        transitions=dfa.transitions,
        initial_state=dfa.initial_state,
        final_states=dfa.states - dfa.final_states,
    )


def _require_same_alphabet(a: Machine, b: Machine):
    if a.alphabet != b.alphabet:
        raise AlphabetMismatchError(
            f"alphabets differ: {''.join(a.alphabet)!r} vs {''.join(b.alphabet)!r}"
        )


_FINALITY = {
    "intersection": lambda fa, fb: fa and fb,
    "union": lambda fa, fb: fa or fb,
    "symmetric_difference": lambda fa, fb: fa != fb,
}


def product(dfa_a: Dfa, dfa_b: Dfa, mode: ProductMode) -> Dfa:
    """Run both machines in lockstep; finality of a pair depends on ``mode``."""
    if mode not in _FINALITY:
        raise ValueError(f"unknown product mode {mode!r}")
    _require_same_alphabet(dfa_a, dfa_b)
    is_final = _FINALITY[mode]
    symbols = list(dfa_a.alphabet)
    start = (dfa_a.initial_state, dfa_b.initial_state)
    name = lambda pair: f"({pair[0]},{pair[1]})"
    seen = {start}
    order = [start]
    queue = deque([start])
    transitions: dict[str, dict[str, str]] = {}
    while queue:
        pa, pb = queue.popleft()
        row = {}
        for sym in symbols:
            target = (dfa_a.transitions[pa][sym], dfa_b.transitions[pb][sym])
            if target not in seen:
                seen.add(target)
                order.append(target)
                queue.append(target)
            row[sym] = name(target)
        transitions[name((pa, pb))] = row
    finals = frozenset(
        name(p) for p in order
        if is_final(p[0] in dfa_a.final_states, p[1] in dfa_b.final_states)
    )
    return Dfa(
        states=frozenset(name(p) for p in order),
        alphabet=dfa_a.alphabet,
        transitions=transitions,
        initial_state=name(start),
        final_states=finals,
    )


def _check_word(machine: Machine, word: str):
    for ch in word:
        if ch not in machine.alphabet:
            raise ValueError(f"symbol {ch!r} not in alphabet")


def accepts(machine: Machine, word: str) -> bool:
    """Standard acceptance; NFAs are simulated through epsilon closures."""
    _check_word(machine, word)
    if isinstance(machine, Dfa):
        state = machine.initial_state
        for ch in word:
            state = machine.transitions[state][ch]
        return state in machine.final_states
    current = epsilon_closure(machine, {machine.initial_state})
    for ch in word:
        stepped: set[str] = set()
        for state in current:
            stepped |= machine.transitions[state].get(ch, frozenset())
        current = epsilon_closure(machine, stepped) if stepped else frozenset()
        if not current:
            return False
    return bool(current & machine.final_states)


def trace(machine: Machine, word: str) -> tuple[str, ...]:
    """Sequence of states visited while reading ``word``.

    For a DFA this is the unique run (length ``len(word) + 1``), defined
    whether or not the word is accepted. For an NFA it is one shortest
    accepting run, epsilon steps included; tracing a rejected word on an
    NFA raises, since there is no single run to report.
    """
    _check_word(machine, word)
    if isinstance(machine, Dfa):
        state = machine.initial_state
        path = [state]
        for ch in word:
            state = machine.transitions[state][ch]
            path.append(state)
        return tuple(path)
    return _nfa_accepting_run(machine, word)


def _nfa_accepting_run(nfa: Nfa, word: str) -> tuple[str, ...]:
    # BFS over (position, state); consuming moves expand before epsilon
    # moves so ties break toward making progress.
    start = (0, nfa.initial_state)
    parent: dict[tuple[int, str], tuple[int, str] | None] = {start: None}
    queue = deque([start])
    goal = None
    while queue:
        pos, state = queue.popleft()
        if pos == len(word) and state in nfa.final_states:
            goal = (pos, state)
            break
        moves = []
        if pos < len(word):
            moves.extend(
                (pos + 1, t) for t in sorted(nfa.transitions[state].get(word[pos], frozenset()))
            )
        moves.extend((pos, t) for t in sorted(nfa.transitions[state].get(EPSILON, frozenset())))
        for nxt in moves:
            if nxt not in parent:
                parent[nxt] = (pos, state)
                queue.append(nxt)
    if goal is None:
        raise ValueError(f"word {word!r} is not accepted; no run to trace")
    path = []
    node: tuple[int, str] | None = goal
    while node is not None:
        path.append(node[1])
        node = parent[node]
    return tuple(reversed(path))
