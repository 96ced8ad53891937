"""Jumping finite automata: construction, simulation and acceptance oracles.

A machine is the usual five-tuple (states, alphabet, rules, start, finals)
except that consuming a symbol lets the read head jump to any position of
the remaining input.  Acceptance is therefore order-insensitive: it depends
only on the multiset of input symbols, which is what parikh_accepts
exploits as an independent check on the simulator.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from string import ascii_uppercase
from typing import Sequence

from .errors import DuplicateSymbol, NoDerivation

# A word is any sequence of symbol ids, e.g. ("b23", "c2", "a12").
InputWord = Sequence[str]


@dataclass(frozen=True)
class Rule:
    """One jumping rule: in state ``src``, consume ``symbol``, enter ``dst``."""

    src: str
    symbol: str
    dst: str

    def __str__(self) -> str:
        return f"{self.src} {self.symbol} -> {self.dst}"


@dataclass(frozen=True)
class JfaMachine:
    states: tuple[str, ...]
    alphabet: frozenset[str]
    rules: tuple[Rule, ...]
    start: str
    finals: frozenset[str]

    def __post_init__(self):
        if not self.states:
            raise ValueError("machine needs at least one state")
        known = set(self.states)
        if self.start not in known:
            raise ValueError(f"start state {self.start!r} not in states")
        if not self.finals <= known:
            raise ValueError("final states must be a subset of states")
        for rule in self.rules:
            if rule.src not in known or rule.dst not in known:
                raise ValueError(f"rule {rule} references unknown state")
            if rule.symbol not in self.alphabet:
                raise ValueError(f"rule {rule} references unknown symbol")

    def rules_from(self, state: str) -> list[Rule]:
        return [r for r in self.rules if r.src == state]


@dataclass(frozen=True)
class Configuration:
    """Remaining input split around the read head."""

    left: tuple[str, ...]
    state: str
    right: tuple[str, ...]

    @property
    def remaining(self) -> tuple[str, ...]:
        return self.left + self.right

    def __str__(self) -> str:
        parts = list(self.left) + [f"[{self.state}]"] + list(self.right)
        return " ".join(parts)


@dataclass(frozen=True)
class DerivationTrace:
    """A witness run: the start configuration plus (configuration, rule) steps."""

    initial: Configuration
    steps: tuple[tuple[Configuration, Rule], ...]

    @property
    def final(self) -> Configuration:
        return self.steps[-1][0] if self.steps else self.initial

    def applied_rules(self) -> list[Rule]:
        return [rule for _, rule in self.steps]


def _state_name(index: int) -> str:
    # Paper-style names: I, J, K, L, ... wrapping through the alphabet.
    if index < len(ascii_uppercase):
        return ascii_uppercase[(ascii_uppercase.index("I") + index) % len(ascii_uppercase)]
    return f"Q{index}"


def chain_machine(required: Sequence[str]) -> JfaMachine:
    """A single-path machine that must consume each required symbol once.

    States are named I, J, K, ... with one rule per symbol; the only final
    state is the end of the chain.
    """
    if not required:
        raise ValueError("required symbols must be non-empty")
    if len(set(required)) != len(required):
        dupes = sorted({s for s in required if list(required).count(s) > 1})
        raise DuplicateSymbol(f"repeated chain symbols: {', '.join(dupes)}")
    states = tuple(_state_name(i) for i in range(len(required) + 1))
    rules = tuple(Rule(states[i], sym, states[i + 1]) for i, sym in enumerate(required))
    return JfaMachine(
        states=states,
        alphabet=frozenset(required),
        rules=rules,
        start=states[0],
        finals=frozenset({states[-1]}),
    )


def jump_step(machine: JfaMachine, config: Configuration) -> list[tuple[Configuration, Rule]]:
    """All positional successors of a configuration.

    For each applicable rule, every occurrence of its symbol may be consumed
    and the head may land at any split of what remains.  Exact duplicates
    are dropped; an empty list means no rule applies.
    """
    if config.state not in machine.states:
        raise ValueError(f"state {config.state!r} not in machine")
    word = config.remaining
    successors: list[tuple[Configuration, Rule]] = []
    seen: set[tuple[tuple[str, ...], str, tuple[str, ...]]] = set()
    for rule in machine.rules_from(config.state):
        for i, symbol in enumerate(word):
            if symbol != rule.symbol:
                continue
            rest = word[:i] + word[i + 1:]
            for split in range(len(rest) + 1):
                key = (rest[:split], rule.dst, rest[split:])
                if key in seen:
                    continue
                seen.add(key)
                successors.append((Configuration(rest[:split], rule.dst, rest[split:]), rule))
    return successors


def _multiset(word: InputWord) -> tuple[str, ...]:
    return tuple(sorted(word))


def accepts(machine: JfaMachine, word: InputWord) -> bool:
    """True iff some jumping run consumes the whole word and ends final.

    Jumping makes symbol positions irrelevant, so the search runs over
    (state, remaining multiset) pairs with memoization.  Every step consumes
    one symbol, so the recursion depth is bounded by |word|.
    """
    by_src = _rules_by_src(machine)
    memo: dict[tuple[str, tuple[str, ...]], bool] = {}

    def search(state: str, remaining: tuple[str, ...]) -> bool:
        if not remaining:
            return state in machine.finals
        key = (state, remaining)
        if key in memo:
            return memo[key]
        result = False
        for rule in by_src.get(state, ()):
            idx = _index_of(remaining, rule.symbol)
            if idx < 0:
                continue
            if search(rule.dst, remaining[:idx] + remaining[idx + 1:]):
                result = True
                break
        memo[key] = result
        return result

    return search(machine.start, _multiset(word))


def _rules_by_src(machine: JfaMachine) -> dict[str, list[Rule]]:
    grouped: dict[str, list[Rule]] = {}
    for rule in machine.rules:
        grouped.setdefault(rule.src, []).append(rule)
    return grouped


def _index_of(sorted_word: tuple[str, ...], symbol: str) -> int:
    # sorted tuple, so a linear probe is fine at these sizes
    for i, s in enumerate(sorted_word):
        if s == symbol:
            return i
    return -1


def derive(machine: JfaMachine, word: InputWord) -> DerivationTrace:
    """One canonical witness derivation for an accepted word.

    Each step consumes the leftmost occurrence of the applied rule's symbol
    and re-renders the head at the consumed position, so traces are stable
    across runs.  Raises NoDerivation when the word is rejected.
    """
    rules = _witness_rules(machine, word)
    if rules is None:
        raise NoDerivation(f"word {' '.join(word)!r} is not accepted")
    current = tuple(word)
    head = 0
    initial = Configuration((), machine.start, current)
    steps: list[tuple[Configuration, Rule]] = []
    for rule in rules:
        idx = current.index(rule.symbol)
        current = current[:idx] + current[idx + 1:]
        head = min(idx, len(current))
        steps.append((Configuration(current[:head], rule.dst, current[head:]), rule))
    return DerivationTrace(initial=initial, steps=tuple(steps))


def _witness_rules(machine: JfaMachine, word: InputWord) -> list[Rule] | None:
    by_src = _rules_by_src(machine)
    memo: dict[tuple[str, tuple[str, ...]], list[Rule] | None] = {}

    def search(state: str, remaining: tuple[str, ...]) -> list[Rule] | None:
        if not remaining:
            return [] if state in machine.finals else None
        key = (state, remaining)
        if key in memo:
            return memo[key]
        found = None
        for rule in by_src.get(state, ()):
            idx = _index_of(remaining, rule.symbol)
            if idx < 0:
                continue
            tail = search(rule.dst, remaining[:idx] + remaining[idx + 1:])
            if tail is not None:
                found = [rule] + tail
                break
        memo[key] = found
        return found

    return search(machine.start, _multiset(word))


def parikh_vector(word: InputWord) -> Counter:
    return Counter(word)


def parikh_accepts(machine: JfaMachine, word: InputWord) -> bool:
    """Independent acceptance oracle via the commutative image.

    Enumerates rule paths from the start state, |word| steps deep, pruning
    on the word's symbol budget; accepts iff some path ends in a final state
    having consumed exactly the word's Parikh vector.  No jumping
    simulation involved.
    """
    budget = parikh_vector(word)

    def walk(state: str, depth: int) -> bool:
        if depth == len(word):
            return state in machine.finals
        for rule in machine.rules:
            if rule.src != state or budget[rule.symbol] <= 0:
                continue
            budget[rule.symbol] -= 1
            found = walk(rule.dst, depth + 1)
            budget[rule.symbol] += 1
            if found:
                return True
        return False

    return walk(machine.start, 0)


def to_dot(machine: JfaMachine) -> str:
    """Graphviz rendering of the rule graph, matching the usual FA drawing:
    circles for states, double circles for finals, labeled edges."""
    lines = [
        "digraph jfa {",
        "  rankdir=LR;",
        '  __start [shape=none, label=""];',
    ]
    for state in machine.states:
        shape = "doublecircle" if state in machine.finals else "circle"
        lines.append(f'  "{state}" [shape={shape}];')
    lines.append(f'  __start -> "{machine.start}";')
    for rule in machine.rules:
        lines.append(f'  "{rule.src}" -> "{rule.dst}" [label="{rule.symbol}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
