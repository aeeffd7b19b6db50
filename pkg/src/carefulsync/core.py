"""Partial finite automata and careful-synchronization semantics.

A partial finite automaton (PFA) is a deterministic automaton whose
transition table may leave some (state, letter) pairs undefined.  A word is
*carefully synchronizing* when every one of its letters is defined on the
whole current state set, starting from the full set, and the final image is
a single state.  A PFA with a total table is an ordinary DFA, and careful
synchronization coincides with ordinary synchronization.

State subsets are plain ints used as bitmasks (bit q set = state q in the
subset), which keeps subset images cheap inside power-automaton loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

# A word is a tuple of letter indices; a state set is an int bitmask.
Word = tuple[int, ...]
StateSet = int

# Undefined transition entries are stored in-band as None.
UNDEFINED = None


@dataclass(frozen=True)
class Pfa:
    """A partial finite automaton over named letters.

    ``delta[state][letter]`` is the target state index or ``None`` when the
    transition is undefined.  Instances are immutable values; construction
    does not validate (use :func:`validate`), so ill-formed tables can be
    built and diagnosed.
    """

    letters: tuple[str, ...]
    delta: tuple[tuple[int | None, ...], ...]
    state_names: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))
        if self.state_names is not None:
            object.__setattr__(self, "state_names", tuple(self.state_names))

    @property
    def n(self) -> int:
        """Number of states."""
        return len(self.delta)

    def letter_index(self, name: str) -> int:
        try:
            return self.letters.index(name)
        except ValueError:
            raise ValueError(f"unknown letter {name!r}") from None

    def target(self, state: int, letter: int) -> int | None:
        return self.delta[state][letter]

    def is_total(self) -> bool:
        return all(t is not None for row in self.delta for t in row)

    def full_set(self) -> int:
        return (1 << self.n) - 1

    def state_name(self, q: int) -> str:
        if self.state_names is not None:
            return self.state_names[q]
        return str(q)


def validate(pfa: Pfa) -> list[str]:
    """Check all structural invariants, returning one diagnostic per violation.

    An empty list means the automaton is well formed.  Diagnostics name the
    violated invariant and its location; nothing is raised.
    """
    diags: list[str] = []
    n = pfa.n
    if n < 1:
        diags.append("automaton must have at least one state")
    seen: set[str] = set()
    for i, name in enumerate(pfa.letters):
        if not name:
            diags.append(f"letter {i} has an empty name")
        if name in seen:
            diags.append(f"duplicate letter name {name!r}")
        seen.add(name)
    width = len(pfa.letters)
    for q, row in enumerate(pfa.delta):
        if len(row) != width:
            diags.append(f"delta row {q} has {len(row)} entries, expected {width}")
            continue
        for a, t in enumerate(row):
            if t is None:
                continue
            if not isinstance(t, int) or isinstance(t, bool):
                diags.append(f"delta[{q}][{pfa.letters[a]!r}] = {t!r} is not a state index")
            elif not 0 <= t < n:
                diags.append(
                    f"delta[{q}][{pfa.letters[a]!r}] = {t} is out of range for {n} states"
                )
    if pfa.state_names is not None and len(pfa.state_names) != n:
        diags.append(f"state_names has {len(pfa.state_names)} entries, expected {n}")
    return diags


def bits_from_states(states: Iterable[int]) -> int:
    """Pack state indices into a subset mask."""
    mask = 0
    for q in states:
        mask |= 1 << q
    return mask


def states_from_bits(mask: int) -> tuple[int, ...]:
    """Unpack a subset mask into sorted state indices."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def format_state_set(pfa: Pfa, mask: int) -> str:
    return "{" + ",".join(pfa.state_name(q) for q in states_from_bits(mask)) + "}"


def apply_set(pfa: Pfa, s: int, letter: int) -> int | None:
    """Image of a nonempty state subset under one letter.

    Returns the image mask when the letter is defined on every member of
    ``s`` and ``None`` otherwise (the in-band "undefined" outcome of the
    power automaton).  An empty subset or an invalid letter index is a
    usage error.
    """
    if s == 0:
        raise ValueError("cannot apply a letter to the empty state set")
    if not 0 <= letter < len(pfa.letters):
        raise ValueError(f"letter index {letter} out of range")
    out = 0
    m = s
    delta = pfa.delta
    while m:
        low = m & -m
        t = delta[low.bit_length() - 1][letter]
        if t is None:
            return None
        out |= 1 << t
        m ^= low
    return out


@dataclass(frozen=True)
class RunResult:
    """Outcome of folding a word over a state subset.

    ``trace`` starts with the initial subset and records the image after
    each applied letter.  On failure ``final`` is None and ``undefined_at``
    is the 0-based position of the first letter undefined on the current
    subset (the trace then stops just before that letter).
    """

    final: int | None
    trace: tuple[int, ...]
    undefined_at: int | None = None

    @property
    def ok(self) -> bool:
        return self.final is not None


def run_word(pfa: Pfa, s: int, word: Sequence[int]) -> RunResult:
    """Apply a word letter by letter from subset ``s``, keeping the trace."""
    if s == 0:
        raise ValueError("cannot run a word from the empty state set")
    trace = [s]
    cur = s
    for pos, letter in enumerate(word):
        cur = apply_set(pfa, cur, letter)
        if cur is None:
            return RunResult(None, tuple(trace), undefined_at=pos)
        trace.append(cur)
    return RunResult(cur, tuple(trace))


def is_careful_sync_word(pfa: Pfa, word: Sequence[int]) -> tuple[bool, int | None]:
    """Does ``word`` carefully synchronize the automaton from the full set?

    Returns ``(True, state)`` with the synchronized state on success and
    ``(False, None)`` otherwise.
    """
    res = run_word(pfa, pfa.full_set(), word)
    if res.final is None or res.final.bit_count() != 1:
        return False, None
    return True, res.final.bit_length() - 1


def total_merging_letter(pfa: Pfa) -> int | None:
    """First letter defined on every state that merges two distinct states.

    Every carefully synchronizing PFA has such a letter, so ``None`` is a
    cheap "cannot synchronize" preflight (the converse does not hold).
    """
    n = pfa.n
    for a in range(len(pfa.letters)):
        targets = [pfa.delta[q][a] for q in range(n)]
        if any(t is None for t in targets):
            continue
        if len(set(targets)) < n:
            return a
    return None
