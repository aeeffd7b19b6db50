"""Class expansion: blowing each state of a base automaton into a d-counter.

The expansion of a base automaton with k states replaces state i by a class
of d digit-states.  Letters ``a`` and ``b1..bk`` drive the digit odometer
inside classes; one c-letter per base letter fires only from top digits and
applies the base transition to whole classes.  The expansion is carefully
synchronizing exactly when the base is, and any (careful) synchronizing
base word lifts to a careful word for the expansion.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

from .core import Pfa, bits_from_states, is_careful_sync_word, run_word, states_from_bits
from .families import gen_cerny
from .words import cerny_alt_word, cerny_word, counting_word, min_alt_reps


@dataclass(frozen=True)
class Partition:
    """Disjoint state classes covering all states, with a reverse index."""

    classes: tuple[int, ...]
    class_of: tuple[int, ...]

    @classmethod
    def from_classes(cls, n: int, classes: Sequence[int]) -> "Partition":
        class_of = [-1] * n
        union = 0
        for idx, mask in enumerate(classes):
            if union & mask:
                raise ValueError("classes overlap")
            union |= mask
            for q in states_from_bits(mask):
                class_of[q] = idx
        if union != (1 << n) - 1:
            raise ValueError("classes do not cover all states")
        return cls(tuple(classes), tuple(class_of))

    @property
    def size(self) -> int:
        return len(self.classes)


def kernel_partition(pfa: Pfa, letter: int) -> Partition:
    """Partition states by equal image under a total letter.

    Two states are equivalent when the letter sends them to the same
    target.  The letter must be defined everywhere, otherwise the relation
    is partial and a ValueError is raised.  Classes are ordered by their
    smallest member.
    """
    groups: dict[int, list[int]] = defaultdict(list)
    for q in range(pfa.n):
        t = pfa.delta[q][letter]
        if t is None:
            raise ValueError(
                f"letter {pfa.letters[letter]!r} is not total; kernel undefined"
            )
        groups[t].append(q)
    classes = sorted(groups.values(), key=min)
    return Partition.from_classes(pfa.n, [bits_from_states(c) for c in classes])


def is_class_preserving(pfa: Pfa, letter: int, partition: Partition) -> bool:
    """True when every defined transition of the letter stays inside its class."""
    for q in range(pfa.n):
        t = pfa.delta[q][letter]
        if t is not None and partition.class_of[t] != partition.class_of[q]:
            return False
    return True


@dataclass(frozen=True)
class TransformRecord:
    """A base automaton together with its d-counter expansion.

    ``letter_map[b]`` is the expansion's c-letter index for base letter b.
    """

    base: Pfa
    d: int
    result: Pfa
    letter_map: tuple[int, ...]


def transform(d: int, base: Pfa) -> TransformRecord:
    """Expand each base state into a class of d digit-states.

    The result has ``d * k`` states under the canonical layout and alphabet
    ``a``, ``b1..bk``, then one c-letter per base letter (named ``c1..cs``
    positionally).  Digit rules match the counter grid; the c-letter for
    base letter ``b`` sends class i's top digit to digit 0 of the base
    target's class wherever the base transition is defined.  Everything
    else is undefined.
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    k = base.n
    s = len(base.letters)
    if k < 1 or s < 1:
        raise ValueError("base automaton needs at least one state and one letter")
    n = d * k
    letters = (
        ["a"]
        + [f"b{i}" for i in range(1, k + 1)]
        + [f"c{l}" for l in range(1, s + 1)]
    )
    table: list[list[int | None]] = [[None] * len(letters) for _ in range(n)]
    for i in range(1, k + 1):
        base_idx = (i - 1) * d
        for j in range(d):
            table[base_idx + j][0] = base_idx  # a
    for l in range(1, k + 1):
        col = l
        for i in range(1, k + 1):
            base_idx = (i - 1) * d
            if i == l:
                for j in range(d - 1):
                    table[base_idx + j][col] = base_idx + j + 1
            elif i > l:
                for j in range(d):
                    table[base_idx + j][col] = base_idx + j
            else:
                table[base_idx + d - 1][col] = base_idx
    for b in range(s):
        col = k + 1 + b
        for i in range(1, k + 1):
            t = base.delta[i - 1][b]
            if t is not None:
                table[(i - 1) * d + d - 1][col] = t * d
    names = tuple(f"q{j}^{i}" for i in range(1, k + 1) for j in range(d))
    result = Pfa(tuple(letters), table, names)
    letter_map = tuple(k + 1 + b for b in range(s))
    return TransformRecord(base=base, d=d, result=result, letter_map=letter_map)


def lift_word(rec: TransformRecord, base_word: Sequence[int]) -> tuple[int, ...]:
    """Lift a (careful) synchronizing base word to the expansion.

    Emits ``a``, the odometer over all classes, then for each base letter
    its c-letter followed by the odometer over the classes still active in
    the base (recomputed by simulating the base, not trusted from the
    caller); nothing follows the final c-letter.  The base word must
    carefully synchronize the base automaton, else ValueError.
    """
    base = rec.base
    res = run_word(base, base.full_set(), base_word)
    if res.final is None or res.final.bit_count() != 1:
        raise ValueError("base word does not carefully synchronize the base automaton")
    k = base.n
    word: list[int] = [0]
    word.extend(counting_word(rec.d, range(1, k + 1)))
    last = len(base_word) - 1
    for pos, letter in enumerate(base_word):
        word.append(rec.letter_map[letter])
        if pos == last:
            break
        active = [q + 1 for q in states_from_bits(res.trace[pos + 1])]
        word.extend(counting_word(rec.d, active))
    return tuple(word)


@dataclass(frozen=True)
class LiftedCernyMeasurement:
    """Measured size of the lifted reset word for an expanded cyclic DFA.

    ``lower_bound_ok`` records whether the lifted length clears the d^n
    floor that the initial odometer segment forces on any careful word.
    """

    d: int
    n: int
    base_word_length: int
    word_length: int
    synchronizes: bool
    lower_bound_ok: bool


def lifted_cerny_measurement(
    d: int, n: int, r_max: int | None = None, max_word_len: int = 1_000_000
) -> LiftedCernyMeasurement:
    """Expand the n-state cyclic DFA by d and measure the lifted word.

    The base word is the two-phase reset word with the smallest working
    tail count when one exists within ``r_max`` (default 2n), otherwise the
    classic reset word.  Raises ValueError when the worst-case lifted
    length would exceed ``max_word_len``.
    """
    if d < 2 or n < 3:
        raise ValueError("requires d >= 2 and n >= 3")
    if r_max is None:
        r_max = 2 * n
    r = min_alt_reps(n, r_max)
    if r is not None:
        base_word = cerny_alt_word(n, r)
    else:
        base_word = cerny_word(n)
    # every segment is at most one c-letter plus a full odometer
    estimate = 1 + (len(base_word) + 1) * d**n
    if estimate > max_word_len:
        raise ValueError(
            f"lifted word could reach {estimate} letters, over the {max_word_len} budget"
        )
    rec = transform(d, gen_cerny(n))
    lifted = lift_word(rec, base_word)
    ok, _ = is_careful_sync_word(rec.result, lifted)
    return LiftedCernyMeasurement(
        d=d,
        n=n,
        base_word_length=len(base_word),
        word_length=len(lifted),
        synchronizes=ok,
        lower_bound_ok=len(lifted) >= d**n,
    )
