"""Closed-form word builders and length bookkeeping.

Words are tuples of letter indices.  The builders that target counter-style
automata (grids and expanded automata from :mod:`carefulsync.transforms`)
assume the canonical letter layout ``a``, ``b1..bk``, c-letters; under that
layout letter ``b_i`` has index ``i``, which is what :func:`counting_word`
emits.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import is_careful_sync_word
from .families import gen_cerny


def counting_word(d: int, indices: Iterable[int]) -> tuple[int, ...]:
    """Odometer word over the given 1-based class indices.

    With W(empty) the empty word and m the largest index,
    ``W(S) = (W(S') b_m)^(d-1) W(S')`` where S' drops m.  Applied to one
    state per listed class, all at digit 0, it steps through every base-d
    assignment of digits to those classes in increasing numeric order.
    Length is exactly ``d^|S| - 1``.
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    idx = sorted(set(indices))
    if idx and idx[0] < 1:
        raise ValueError("class indices are 1-based")
    word: tuple[int, ...] = ()
    for m in idx:
        word = (word + (m,)) * (d - 1) + word
    return word


def counting_word_length(d: int, size: int) -> int:
    return d**size - 1


def grid_word(d: int, k: int) -> tuple[int, ...]:
    """Carefully synchronizing word for the (d, k) counter grid.

    ``a``, then for i = k down to 2 the odometer over classes 1..i followed
    by ``c_i``.  Synchronizes to q_0^1.  Length is ``1 + sum(d^i, i=2..k)``.
    """
    if d < 2 or k < 2:
        raise ValueError("requires d >= 2 and k >= 2")
    word = [0]
    for i in range(k, 1, -1):
        word.extend(counting_word(d, range(1, i + 1)))
        word.append(k + i - 1)
    return tuple(word)


def grid_word_length(d: int, k: int) -> int:
    if d < 2 or k < 2:
        raise ValueError("requires d >= 2 and k >= 2")
    return 1 + sum(d**i for i in range(2, k + 1))


def grid_word_claimed_length(d: int, k: int) -> int:
    """Published closed-form length claim for the grid word.

    Evaluates ``(d^(k+1) + (d-1)k - d^2) / (d-1)`` exactly.  The claim
    exceeds the constructed word's length by k-1 (the per-class c-letter is
    counted twice in the published derivation); kept verbatim so reports
    can show the discrepancy.
    """
    if d < 2 or k < 2:
        raise ValueError("requires d >= 2 and k >= 2")
    num = d ** (k + 1) + (d - 1) * k - d * d
    if num % (d - 1):
        raise ArithmeticError("claimed closed form is not an integer")
    return num // (d - 1)


def cerny_word(n: int) -> tuple[int, ...]:
    """Classic reset word (c1 c2^(n-1))^(n-2) c1 of length (n-1)^2."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return ((0,) + (1,) * (n - 1)) * (n - 2) + (0,)


def cerny_alt_word(n: int, reps: int | None = None) -> tuple[int, ...]:
    """Two-phase reset word (c1 c2^2)^h (c1 c2^(n-1))^r c1 for the cyclic DFA.

    The head repetition count h is n/2 for even n and (n+1)/2 for odd n.
    ``reps`` overrides the tail count r, whose published defaults are n-3
    (even) and n-4 (odd); simulation shows those defaults undershoot, see
    :func:`min_alt_reps`.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    if n % 2 == 0:
        head, default_r = n // 2, n - 3
    else:
        head, default_r = (n + 1) // 2, n - 4
    r = default_r if reps is None else reps
    if r < 0:
        raise ValueError(f"tail repetition count {r} is negative")
    u = (0, 1, 1)
    v = (0,) + (1,) * (n - 1)
    return u * head + v * r + (0,)


def min_alt_reps(n: int, r_max: int) -> int | None:
    """Smallest tail count r <= r_max making the two-phase word reset the cyclic DFA.

    Found by simulation; ``None`` when no r in range works.
    """
    auto = gen_cerny(n)
    for r in range(r_max + 1):
        ok, _ = is_careful_sync_word(auto, cerny_alt_word(n, r))
        if ok:
            return r
    return None


def digit_subset(d: int, indices: Iterable[int], value: int) -> int:
    """State mask encoding ``value`` in base d across the given classes.

    Classes are 1-based and sorted ascending; the smallest listed class
    holds the least significant digit.  Uses the canonical state layout
    (class i's digit j is state ``(i-1)*d + j``).
    """
    idx = sorted(set(indices))
    if not idx:
        raise ValueError("need at least one class index")
    if idx[0] < 1:
        raise ValueError("class indices are 1-based")
    if value < 0:
        raise ValueError("value must be non-negative")
    mask = 0
    v = value
    for i in idx:
        mask |= 1 << ((i - 1) * d + v % d)
        v //= d
    if v:
        raise ValueError(f"value {value} does not fit in {len(idx)} base-{d} digits")
    return mask


@dataclass(frozen=True)
class LengthReport:
    """Constructed, claimed, and searched lengths for one word family instance.

    Agreement flags are computed on access so they can never go stale; each
    is ``None`` when one side is missing.
    """

    builder_length: int
    claimed_length: int | None = None
    bfs_length: int | None = None

    @property
    def builder_matches_claimed(self) -> bool | None:
        if self.claimed_length is None:
            return None
        return self.builder_length == self.claimed_length

    @property
    def builder_matches_bfs(self) -> bool | None:
        if self.bfs_length is None:
            return None
        return self.builder_length == self.bfs_length

    @property
    def claimed_matches_bfs(self) -> bool | None:
        if self.claimed_length is None or self.bfs_length is None:
            return None
        return self.claimed_length == self.bfs_length


def format_word(letters: Sequence[str], word: Sequence[int]) -> str:
    """Render a word as space-separated letter names."""
    return " ".join(letters[a] for a in word)


def parse_word(letters: Sequence[str], text: str) -> tuple[int, ...]:
    """Parse space-separated letter names, each optionally with a ^N exponent.

    ``"c1 c2^3"`` expands to c1 c2 c2 c2.  Unknown names and malformed
    exponents raise ValueError.
    """
    index = {name: a for a, name in enumerate(letters)}
    out: list[int] = []
    for token in text.split():
        name, caret, exp = token.partition("^")
        if name not in index:
            raise ValueError(f"unknown letter {name!r}")
        count = 1
        if caret:
            try:
                count = int(exp)
            except ValueError:
                raise ValueError(f"bad exponent in {token!r}") from None
            if count < 0:
                raise ValueError(f"negative exponent in {token!r}")
        out.extend([index[name]] * count)
    return tuple(out)
