"""Regular expressions over a fixed alphabet, compiled to NFAs.

The dialect is deliberately small: union ``|``, concatenation by
juxtaposition, Kleene star ``*``, grouping parentheses, and the empty
pattern (or empty alternative) denoting the empty word. Every other
character must be a symbol of the declared alphabet.
"""

from dataclasses import dataclass

from .automata import EPSILON, Alphabet, Nfa
from .errors import RegexParseError


@dataclass(frozen=True)
class _Empty:
    pass


@dataclass(frozen=True)
class _Sym:
    char: str


@dataclass(frozen=True)
class _Concat:
    left: "_Node"
    right: "_Node"


@dataclass(frozen=True)
class _Union:
    left: "_Node"
    right: "_Node"


@dataclass(frozen=True)
class _Star:
    inner: "_Node"


_Node = _Empty | _Sym | _Concat | _Union | _Star


class _Parser:
    """Recursive descent over: union -> concat ('|' concat)*, etc."""

    def __init__(self, pattern: str, alphabet: Alphabet):
        self.pattern = pattern
        self.alphabet = alphabet
        self.pos = 0

    def peek(self) -> str | None:
        return self.pattern[self.pos] if self.pos < len(self.pattern) else None

    def parse(self) -> _Node:
        node = self.union()
        if self.pos != len(self.pattern):
            raise RegexParseError(f"unexpected {self.peek()!r}", self.pos)
        return node

    def union(self) -> _Node:
        node = self.concat()
        while self.peek() == "|":
            self.pos += 1
            node = _Union(node, self.concat())
        return node

    def concat(self) -> _Node:
        parts = []
        while self.peek() is not None and self.peek() not in "|)":
            parts.append(self.postfix())
        if not parts:
            return _Empty()
        node = parts[0]
        for part in parts[1:]:
            node = _Concat(node, part)
        return node

    def postfix(self) -> _Node:
        node = self.atom()
        while self.peek() == "*":
            self.pos += 1
            node = _Star(node)
        return node

    def atom(self) -> _Node:
        ch = self.peek()
        if ch == "*":
            raise RegexParseError("nothing to repeat", self.pos)
        if ch == "(":
            open_pos = self.pos
            self.pos += 1
            node = self.union()
            if self.peek() != ")":
                raise RegexParseError("unbalanced parenthesis", open_pos)
            self.pos += 1
            return node
        if ch is None or ch in "|)":
            raise RegexParseError("expected a symbol or group", self.pos)
        if ch not in self.alphabet:
            raise RegexParseError(f"symbol {ch!r} not in alphabet", self.pos)
        self.pos += 1
        return _Sym(ch)


def parse_regex(pattern: str, alphabet: Alphabet) -> _Node:
    """Parse ``pattern``; raises RegexParseError with the failing offset."""
    return _Parser(pattern, alphabet).parse()


def regex_to_nfa(pattern: str, alphabet: Alphabet) -> Nfa:
    """Thompson-style construction: one NFA fragment per syntax node."""
    ast = parse_regex(pattern, alphabet)
    counter = [0]
    transitions: dict[str, dict[str, set[str]]] = {}

    def fresh() -> str:
        name = f"r{counter[0]}"
        counter[0] += 1
        transitions[name] = {}
        return name

    def link(src: str, sym: str, dst: str):
        transitions[src].setdefault(sym, set()).add(dst)

    def build(node: _Node) -> tuple[str, str]:
        start, accept = fresh(), fresh()
        if isinstance(node, _Empty):
            link(start, EPSILON, accept)
        elif isinstance(node, _Sym):
            link(start, node.char, accept)
        elif isinstance(node, _Concat):
            ls, la = build(node.left)
            rs, ra = build(node.right)
            link(start, EPSILON, ls)
            link(la, EPSILON, rs)
            link(ra, EPSILON, accept)
        elif isinstance(node, _Union):
            ls, la = build(node.left)
            rs, ra = build(node.right)
            link(start, EPSILON, ls)
            link(start, EPSILON, rs)
            link(la, EPSILON, accept)
            link(ra, EPSILON, accept)
        elif isinstance(node, _Star):
            inner_s, inner_a = build(node.inner)
            link(start, EPSILON, accept)
            link(start, EPSILON, inner_s)
            link(inner_a, EPSILON, inner_s)
            link(inner_a, EPSILON, accept)
        else:  # pragma: no cover
            raise TypeError(f"unknown node {node!r}")
        return start, accept

    start, accept = build(ast)
    return Nfa(
        states=frozenset(transitions),
        alphabet=alphabet,
        transitions={s: {k: frozenset(v) for k, v in row.items()} for s, row in transitions.items()},
        initial_state=start,
        final_states=frozenset({accept}),
    )
