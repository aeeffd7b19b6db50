"""Deterministic generators for the automaton families under study.

Canonical indexing convention for the counter-style families: class
``i`` (1-based) occupies states ``(i-1)*d .. (i-1)*d + d-1``; state
``q_j^i`` (digit j of class i) has index ``(i-1)*d + j``.  Letters are
ordered ``a``, ``b1..bk``, then c-letters ascending.  This makes a state
subset holding one digit per class read as a base-d number, which the
counting words in :mod:`carefulsync.words` increment.
"""

from __future__ import annotations

import random
import string
from dataclasses import dataclass

from .core import Pfa


def gen_witness() -> Pfa:
    """4-state, 3-letter PFA whose shortest careful word has length 10.

    Since 10 > (4-1)^2, it witnesses that the quadratic reset-word bound
    for DFAs does not carry over to careful synchronization of PFAs.
    """
    delta = (
        (1, None, 1),
        (1, 2, None),
        (2, 3, 3),
        (3, 0, 0),
    )
    return Pfa(("a", "b", "c"), delta)


def gen_grid(d: int, k: int) -> Pfa:
    """Counter grid: k classes of d states each, with odometer letters.

    Letter action, writing q_j^i for digit j of class i:

    * ``a``    resets every class to digit 0 (the only total letter),
    * ``b_i``  increments class i's digit (undefined at the top digit),
      acts as identity on classes above i, and on classes below i is
      defined only at the top digit, which it resets to 0,
    * ``c_i``  is defined only on top digits: it sends class i's top to
      class i-1's digit 0 and the tops of classes below i to their own
      digit 0.

    ``k = 1`` is permitted as a degenerate boundary case (no c-letters).
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    if k < 1:
        raise ValueError("k must be at least 1")
    n = d * k
    letters = ["a"] + [f"b{i}" for i in range(1, k + 1)] + [
        f"c{i}" for i in range(2, k + 1)
    ]
    table: list[list[int | None]] = [[None] * len(letters) for _ in range(n)]
    for i in range(1, k + 1):
        base = (i - 1) * d
        for j in range(d):
            table[base + j][0] = base  # a
    for l in range(1, k + 1):
        col = l
        for i in range(1, k + 1):
            base = (i - 1) * d
            if i == l:
                for j in range(d - 1):
                    table[base + j][col] = base + j + 1
            elif i > l:
                for j in range(d):
                    table[base + j][col] = base + j
            else:
                table[base + d - 1][col] = base
    for l in range(2, k + 1):
        col = k + l - 1
        for i in range(1, l + 1):
            top = (i - 1) * d + d - 1
            if i == l:
                table[top][col] = (i - 2) * d
            else:
                table[top][col] = (i - 1) * d
    names = tuple(f"q{j}^{i}" for i in range(1, k + 1) for j in range(d))
    return Pfa(tuple(letters), table, names)


def gen_cerny(n: int) -> Pfa:
    """The classic n-state cyclic DFA with shortest reset word (n-1)^2.

    Letter ``c1`` sends state 0 to 1 and fixes everything else; ``c2`` is
    the cyclic shift.  The table is total.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    table = []
    for m in range(n):
        table.append((1 if m == 0 else m, (m + 1) % n))
    names = tuple(f"q{m}" for m in range(n))
    return Pfa(("c1", "c2"), table, names)


def gen_chain(k: int) -> Pfa:
    """k-state descending chain, carefully synchronized by c_k c_{k-1} .. c_2.

    State q_i (index i-1) steps down to q_{i-1} on letter c_i, is fixed by
    c_l for i < l, and has no transition on c_l for i > l.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    letters = tuple(f"c{l}" for l in range(2, k + 1))
    table: list[list[int | None]] = [[None] * len(letters) for _ in range(k)]
    for l in range(2, k + 1):
        col = l - 2
        table[l - 1][col] = l - 2
        for i in range(1, l):
            table[i - 1][col] = i - 1
    names = tuple(f"q{i}" for i in range(1, k + 1))
    return Pfa(letters, table, names)


def gen_padded(d: int, n: int) -> Pfa:
    """Counter grid padded with n mod d extra states and one reset letter.

    Builds the grid on ``d * (n // d)`` states and appends the leftover
    states, plus a new letter ``p`` that fixes every grid state and sends
    every extra state to q_0^k (the top class's digit 0).  No other letter
    is defined on the extra states, so every careful word must start
    with ``p``.
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    if n <= d:
        raise ValueError("n must exceed d")
    if n % d == 0:
        raise ValueError("n must not be divisible by d")
    k = n // d
    core = gen_grid(d, k)
    extras = n - core.n
    letters = core.letters + ("p",)
    table: list[list[int | None]] = []
    for q in range(core.n):
        table.append(list(core.delta[q]) + [q])
    pad_target = (k - 1) * d
    for _ in range(extras):
        table.append([None] * len(core.letters) + [pad_target])
    names = tuple(core.state_names) + tuple(f"x{j}" for j in range(extras))
    return Pfa(letters, table, names)


def gen_random(n: int, letter_count: int, density: float, seed: int) -> Pfa:
    """Seeded random PFA: each entry defined with probability ``density``.

    Targets are uniform over states.  The same seed always yields the same
    table.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if letter_count < 1:
        raise ValueError("letter_count must be at least 1")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must be within [0, 1]")
    rng = random.Random(seed)
    letters = tuple(
        string.ascii_lowercase[a] if a < 26 else f"x{a}" for a in range(letter_count)
    )
    table = []
    for _ in range(n):
        row = []
        for _ in range(letter_count):
            if rng.random() < density:
                row.append(rng.randrange(n))
            else:
                row.append(None)
        table.append(row)
    return Pfa(letters, table)


def grid_fact_violations(pfa: Pfa, d: int, k: int) -> list[str]:
    """Check the definedness pattern a counter grid must satisfy.

    Verifies, directly against the table: ``a`` is total; ``b_l`` is
    undefined on non-top digits of lower classes and at the top digit of
    its own class; every c-letter is undefined off top digits and on
    classes above its own index.  Returns one message per violation.
    """
    bad: list[str] = []
    a_col = 0
    for q in range(pfa.n):
        if pfa.delta[q][a_col] is None:
            bad.append(f"letter a undefined at state {pfa.state_name(q)}")
    for l in range(1, k + 1):
        col = l
        for i in range(1, k + 1):
            base = (i - 1) * d
            for j in range(d):
                t = pfa.delta[base + j][col]
                if i < l and j < d - 1 and t is not None:
                    bad.append(f"b{l} defined at q{j}^{i} (lower class, non-top digit)")
                if i == l and j == d - 1 and t is not None:
                    bad.append(f"b{l} defined at its own top digit q{j}^{i}")
    for l in range(2, k + 1):
        col = k + l - 1
        for i in range(1, k + 1):
            base = (i - 1) * d
            for j in range(d):
                t = pfa.delta[base + j][col]
                if j < d - 1 and t is not None:
                    bad.append(f"c{l} defined at non-top digit q{j}^{i}")
                if i > l and t is not None:
                    bad.append(f"c{l} defined on class {i} above its index")
    return bad


@dataclass(frozen=True)
class FamilySpec:
    """Parsed family-instance description with a canonical string form.

    Kinds and their parameters:

    * ``witness``                        the fixed 4-state example
    * ``grid:d=3,k=4``                   counter grid
    * ``cerny:n=5``                      cyclic DFA
    * ``chain:k=3``                      descending chain
    * ``padded:d=3,n=7``                 padded grid
    * ``random:n=4,l=3,p=0.8,seed=42``   seeded random PFA
    """

    kind: str
    d: int | None = None
    k: int | None = None
    n: int | None = None
    letter_count: int | None = None
    density: float | None = None
    seed: int | None = None

    def to_string(self) -> str:
        parts = []
        for key, value in self._params():
            parts.append(f"{key}={value}")
        if not parts:
            return self.kind
        return self.kind + ":" + ",".join(parts)

    def _params(self) -> list[tuple[str, int | float]]:
        if self.kind == "witness":
            return []
        if self.kind == "grid":
            return [("d", self.d), ("k", self.k)]
        if self.kind == "cerny":
            return [("n", self.n)]
        if self.kind == "chain":
            return [("k", self.k)]
        if self.kind == "padded":
            return [("d", self.d), ("n", self.n)]
        if self.kind == "random":
            return [
                ("n", self.n),
                ("l", self.letter_count),
                ("p", self.density),
                ("seed", self.seed),
            ]
        raise ValueError(f"unknown family kind {self.kind!r}")

    def sort_key(self) -> tuple:
        return (
            self.kind,
            self.d or 0,
            self.k or 0,
            self.n or 0,
            self.letter_count or 0,
            self.density or 0.0,
            self.seed or 0,
        )

    def build(self) -> Pfa:
        if self.kind == "witness":
            return gen_witness()
        if self.kind == "grid":
            return gen_grid(self.d, self.k)
        if self.kind == "cerny":
            return gen_cerny(self.n)
        if self.kind == "chain":
            return gen_chain(self.k)
        if self.kind == "padded":
            return gen_padded(self.d, self.n)
        if self.kind == "random":
            return gen_random(self.n, self.letter_count, self.density, self.seed)
        raise ValueError(f"unknown family kind {self.kind!r}")


_SPEC_FIELDS = {
    "witness": (),
    "grid": ("d", "k"),
    "cerny": ("n",),
    "chain": ("k",),
    "padded": ("d", "n"),
    "random": ("n", "l", "p", "seed"),
}

_FIELD_NAMES = {"l": "letter_count", "p": "density"}


def parse_family(text: str) -> FamilySpec:
    """Parse the canonical family string form, e.g. ``grid:d=3,k=4``."""
    kind, sep, rest = text.strip().partition(":")
    kind = kind.strip()
    if kind not in _SPEC_FIELDS:
        raise ValueError(f"unknown family kind {kind!r}")
    wanted = _SPEC_FIELDS[kind]
    given: dict[str, int | float] = {}
    if sep:
        for item in rest.split(","):
            key, eq, value = item.partition("=")
            key = key.strip()
            if not eq or key not in wanted:
                raise ValueError(f"unexpected parameter {item!r} for family {kind!r}")
            if key in given:
                raise ValueError(f"duplicate parameter {key!r}")
            try:
                given[key] = float(value) if key == "p" else int(value)
            except ValueError:
                raise ValueError(f"bad value in {item!r}") from None
    missing = [key for key in wanted if key not in given]
    if missing:
        raise ValueError(f"family {kind!r} is missing parameters: {', '.join(missing)}")
    fields = {_FIELD_NAMES.get(key, key): value for key, value in given.items()}
    return FamilySpec(kind=kind, **fields)
