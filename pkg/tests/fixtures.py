"""Shared machine fixtures, in the raw dict shape the oracles understand.

Builders at the bottom convert raw machines into package values so the same
data backs both sides of each check.
"""

# Reference machine bundled as questions/at-least-three-zeros: accepts the
# binary strings containing at least three 0s. State name = number of 0s
# seen so far, capped at 3.
RAW_THREE_ZEROS = {
    "states": ["0", "1", "2", "3"],
    "alphabet": ["0", "1"],
    "delta": {
        "0": {"0": "1", "1": "0"},
        "1": {"0": "2", "1": "1"},
        "2": {"0": "3", "1": "2"},
        "3": {"0": "3", "1": "3"},
    },
    "initial": "0",
    "finals": {"3"},
}

# Same language, two redundant states: q2b duplicates "2", q4 duplicates "3".
RAW_THREE_ZEROS_PADDED = {
    "states": ["0", "1", "2", "2b", "3", "4"],
    "alphabet": ["0", "1"],
    "delta": {
        "0": {"0": "1", "1": "0"},
        "1": {"0": "2", "1": "1"},
        "2": {"0": "3", "1": "2b"},
        "2b": {"0": "4", "1": "2"},
        "3": {"0": "4", "1": "3"},
        "4": {"0": "3", "1": "4"},
    },
    "initial": "0",
    "finals": {"3", "4"},
}

# At least two 0s.
RAW_TWO_ZEROS = {
    "states": ["a", "b", "c"],
    "alphabet": ["0", "1"],
    "delta": {
        "a": {"0": "b", "1": "a"},
        "b": {"0": "c", "1": "b"},
        "c": {"0": "c", "1": "c"},
    },
    "initial": "a",
    "finals": {"c"},
}

# At least four 0s.
RAW_FOUR_ZEROS = {
    "states": ["z0", "z1", "z2", "z3", "z4"],
    "alphabet": ["0", "1"],
    "delta": {
        "z0": {"0": "z1", "1": "z0"},
        "z1": {"0": "z2", "1": "z1"},
        "z2": {"0": "z3", "1": "z2"},
        "z3": {"0": "z4", "1": "z3"},
        "z4": {"0": "z4", "1": "z4"},
    },
    "initial": "z0",
    "finals": {"z4"},
}

RAW_ALL_STRINGS = {
    "states": ["u"],
    "alphabet": ["0", "1"],
    "delta": {"u": {"0": "u", "1": "u"}},
    "initial": "u",
    "finals": {"u"},
}

RAW_EMPTY_LANGUAGE = {
    "states": ["e"],
    "alphabet": ["0", "1"],
    "delta": {"e": {"0": "e", "1": "e"}},
    "initial": "e",
    "finals": set(),
}

# Wire form of RAW_THREE_ZEROS, exactly as shipped in the question bank.
THREE_ZEROS_DOCUMENT = {
    "states": ["0", "1", "2", "3"],
    "input_symbols": ["0", "1"],
    "transitions": {
        "0": {"0": "1", "1": "0"},
        "1": {"0": "2", "1": "1"},
        "2": {"0": "3", "1": "2"},
        "3": {"0": "3", "1": "3"},
    },
    "initial_state": "0",
    "final_states": ["3"],
}


def build_dfa(raw):
    from fsmgrader.automata import Alphabet, Dfa

    return Dfa(
        states=frozenset(raw["states"]),
        alphabet=Alphabet(raw["alphabet"]),
        transitions=raw["delta"],
        initial_state=raw["initial"],
        final_states=frozenset(raw["finals"]),
    )


def build_nfa(raw):
    from fsmgrader.automata import Alphabet, Nfa

    return Nfa(
        states=frozenset(raw["states"]),
        alphabet=Alphabet(raw["alphabet"]),
        transitions=raw["delta"],
        initial_state=raw["initial"],
        final_states=frozenset(raw["finals"]),
    )


def dfa_to_raw(dfa):
    return {
        "states": sorted(dfa.states),
        "alphabet": list(dfa.alphabet),
        "delta": {s: dict(row) for s, row in dfa.transitions.items()},
        "initial": dfa.initial_state,
        "finals": set(dfa.final_states),
    }
