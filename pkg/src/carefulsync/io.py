"""Automaton document serialization and DOT export.

The document format is JSON: an object with ``format_version``,
``letters``, ``states``, ``delta`` (one array per state, ``null`` marking
undefined entries), optional ``state_names``, and an optional ``metadata``
string carrying a family spec.  Round-trips are lossless.
"""

from __future__ import annotations

import json
from collections import defaultdict

from .core import Pfa, validate

FORMAT_VERSION = 1


class ParseError(ValueError):
    """Document is syntactically or structurally malformed."""


class ValidationError(ValueError):
    """Document parsed but the automaton violates its invariants."""

    def __init__(self, diagnostics: list[str]):
        super().__init__("; ".join(diagnostics))
        self.diagnostics = diagnostics


def automaton_to_document(pfa: Pfa, family: str | None = None) -> dict:
    doc = {
        "format_version": FORMAT_VERSION,
        "letters": list(pfa.letters),
        "states": pfa.n,
        "delta": [list(row) for row in pfa.delta],
    }
    if pfa.state_names is not None:
        doc["state_names"] = list(pfa.state_names)
    if family is not None:
        doc["metadata"] = family
    return doc


def automaton_to_json(pfa: Pfa, family: str | None = None) -> str:
    return json.dumps(automaton_to_document(pfa, family), indent=2) + "\n"


def load_document(text: str) -> tuple[Pfa, str | None]:
    """Parse a document; returns the automaton and its metadata string."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"not valid JSON: line {e.lineno}, column {e.colno}") from None
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported format_version {version!r}")
    letters = doc.get("letters")
    if not isinstance(letters, list) or not all(isinstance(x, str) for x in letters):
        raise ParseError("field 'letters' must be a list of strings")
    states = doc.get("states")
    if not isinstance(states, int) or isinstance(states, bool):
        raise ParseError("field 'states' must be an integer")
    delta = doc.get("delta")
    if not isinstance(delta, list):
        raise ParseError("field 'delta' must be a list of per-state rows")
    if len(delta) != states:
        raise ParseError(f"delta has {len(delta)} rows, 'states' says {states}")
    for q, row in enumerate(delta):
        if not isinstance(row, list):
            raise ParseError(f"delta row {q} is not a list")
        if len(row) != len(letters):
            raise ParseError(
                f"delta row {q} has {len(row)} entries, expected {len(letters)}"
            )
    state_names = doc.get("state_names")
    if state_names is not None:
        if not isinstance(state_names, list) or not all(
            isinstance(x, str) for x in state_names
        ):
            raise ParseError("field 'state_names' must be a list of strings")
    metadata = doc.get("metadata")
    if metadata is not None and not isinstance(metadata, str):
        raise ParseError("field 'metadata' must be a string")
    pfa = Pfa(
        tuple(letters),
        tuple(tuple(row) for row in delta),
        tuple(state_names) if state_names is not None else None,
    )
    diags = validate(pfa)
    if diags:
        raise ValidationError(diags)
    return pfa, metadata


def automaton_from_json(text: str) -> Pfa:
    pfa, _ = load_document(text)
    return pfa


def export_dot(pfa: Pfa) -> str:
    """Render the automaton as Graphviz DOT.

    One edge per (source, target) pair, labelled with the comma-joined
    letters that realize it; undefined entries contribute nothing.  Output
    ordering is deterministic.
    """
    lines = ["digraph pfa {", "  rankdir=LR;", "  node [shape=circle];"]
    for q in range(pfa.n):
        lines.append(f'  "{pfa.state_name(q)}";')
    edges: dict[tuple[int, int], list[str]] = defaultdict(list)
    for q in range(pfa.n):
        for a, name in enumerate(pfa.letters):
            t = pfa.delta[q][a]
            if t is not None:
                edges[(q, t)].append(name)
    for (q, t) in sorted(edges):
        label = ",".join(edges[(q, t)])
        lines.append(f'  "{pfa.state_name(q)}" -> "{pfa.state_name(t)}" [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
