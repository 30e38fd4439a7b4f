"""Reading, writing, generating, and validating quantitative sequence data.

Database file, one sequence per line; itemsets end with -1, lines with -2:

    b:2 f:4 -1 a:2 e:2 -1 c:2 e:1 -1 -2

External-utility file, one item per line:

    b 1

Item ids are assigned by first appearance in the external-utility file, and
itemsets in the database file must list items in ascending id order.  Results
are written one pattern per line, itemsets separated by -1:

    a -1 c -1 #UTIL: 36

All files are UTF-8 with LF line endings; serialization is byte-deterministic.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass

from .core import (
    ExternalUtilityTable,
    QItem,
    QItemset,
    QSequence,
    QSequenceDatabase,
    ResultSet,
    Segment,
)

_TOKEN = re.compile(r"\S+")


class ParseError(ValueError):
    """Input text rejected at a specific line and column (both 1-based)."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def parse_utility_table(text: str) -> tuple[tuple[str, ...], ExternalUtilityTable]:
    """Parse 'name weight' lines; ids follow first-appearance order."""
    names: list[str] = []
    weights: list[int] = []
    seen: set[str] = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]
        if not tokens:
            continue
        if len(tokens) != 2:
            tok, col = tokens[2] if len(tokens) > 2 else tokens[0]
            raise ParseError("expected 'name weight'", lineno, col)
        (name, name_col), (weight_text, weight_col) = tokens
        if name in seen:
            raise ParseError(f"duplicate item name {name!r}", lineno, name_col)
        try:
            weight = int(weight_text)
        except ValueError:
            raise ParseError(f"malformed weight {weight_text!r}", lineno, weight_col) from None
        if weight < 1:
            raise ParseError("external utility must be >= 1", lineno, weight_col)
        seen.add(name)
        names.append(name)
        weights.append(weight)
    return tuple(names), ExternalUtilityTable(tuple(weights))


def parse_database(db_text: str, eut_text: str) -> tuple[QSequenceDatabase, ExternalUtilityTable]:
    """Parse a database file against its external-utility file."""
    names, eut = parse_utility_table(eut_text)
    ids = {name: i for i, name in enumerate(names)}
    sequences: list[QSequence] = []
    for lineno, line in enumerate(db_text.splitlines(), start=1):
        tokens = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]
        if not tokens:
            continue
        itemsets: list[QItemset] = []
        current: list[QItem] = []
        ended = False
        for token, col in tokens:
            if ended:
                raise ParseError("content after end of sequence", lineno, col)
            if token == "-2":
                if current:
                    raise ParseError("itemset not closed before -2", lineno, col)
                if not itemsets:
                    raise ParseError("empty sequence", lineno, col)
                ended = True
            elif token == "-1":
                if not current:
                    raise ParseError("empty itemset", lineno, col)
                itemsets.append(tuple(current))
                current = []
            else:
                name, sep, quantity_text = token.partition(":")
                if not sep or not name or not quantity_text:
                    raise ParseError(f"malformed token {token!r}", lineno, col)
                item = ids.get(name)
                if item is None:
                    raise ParseError(f"unknown item {name!r}", lineno, col)
                try:
                    quantity = int(quantity_text)
                except ValueError:
                    raise ParseError(f"malformed quantity {quantity_text!r}", lineno, col) from None
                if quantity < 1:
                    raise ParseError("quantity must be >= 1", lineno, col)
                if current:
                    if current[-1].item == item:
                        raise ParseError(f"duplicate item {name!r} in itemset", lineno, col)
                    if current[-1].item > item:
                        raise ParseError("items out of ascending id order", lineno, col)
                current.append(QItem(item, quantity))
        if not ended:
            last_token, last_col = tokens[-1]
            raise ParseError("sequence not terminated by -2", lineno, last_col + len(last_token))
        sequences.append(QSequence(len(sequences), (Segment(1, tuple(itemsets)),)))
    return QSequenceDatabase(tuple(sequences), names), eut


def serialize_database(db: QSequenceDatabase, eut: ExternalUtilityTable) -> tuple[str, str]:
    """Render (database text, utility-table text); inverse of parse_database.

    Only unrevised databases serialize: the grammar has no syntax for
    position gaps, so multi-segment sequences are refused.
    """
    if len(eut.weights) != len(db.names):
        raise ValueError("names and weights must be the same length")
    eut_lines = [f"{name} {weight}" for name, weight in zip(db.names, eut.weights)]
    db_lines = []
    for expected_sid, seq in enumerate(db.sequences):
        if seq.sid != expected_sid:
            raise ValueError("cannot serialize a database with sid gaps")
        if len(seq.segments) != 1 or seq.segments[0].start != 1:
            raise ValueError("cannot serialize a revised (multi-segment) database")
        parts = []
        for itemset in seq.segments[0].itemsets:
            parts.extend(f"{db.names[q.item]}:{q.quantity}" for q in itemset)
            parts.append("-1")
        parts.append("-2")
        db_lines.append(" ".join(parts))
    return "".join(line + "\n" for line in db_lines), "".join(line + "\n" for line in eut_lines)


def format_pattern(pattern, names: tuple[str, ...]) -> str:
    """Render a pattern as itemset tokens, each itemset closed by -1."""
    parts: list[str] = []
    for itemset in pattern:
        parts.extend(names[item] for item in itemset)
        parts.append("-1")
    return " ".join(parts)


def serialize_results(results: ResultSet, names: tuple[str, ...]) -> str:
    """Render (pattern, utility) pairs one per line, in the order given."""
    return "".join(
        f"{format_pattern(pattern, names)} #UTIL: {utility}\n" for pattern, utility in results
    )


@dataclass(frozen=True)
class GeneratorParams:
    sequence_count: int
    distinct_items: int = 100
    max_itemsets_per_seq: int = 8
    max_items_per_itemset: int = 4
    max_quantity: int = 5
    max_weight: int = 5
    seed: int = 1

    def __post_init__(self) -> None:
        for field in (
            "sequence_count",
            "distinct_items",
            "max_itemsets_per_seq",
            "max_items_per_itemset",
            "max_quantity",
            "max_weight",
        ):
            if getattr(self, field) < 1:
                raise ValueError(f"{field} must be >= 1")


def generate_synthetic(params: GeneratorParams) -> tuple[QSequenceDatabase, ExternalUtilityTable]:
    """Draw a random database; same params give byte-identical output."""
    rng = random.Random(params.seed)
    names = tuple(f"i{k}" for k in range(params.distinct_items))
    # Weights are drawn before any sequence so sizing params do not shift them.
    weights = tuple(rng.randint(1, params.max_weight) for _ in names)
    top_size = min(params.max_items_per_itemset, params.distinct_items)
    sequences = []
    for sid in range(params.sequence_count):
        itemsets = []
        for _ in range(rng.randint(1, params.max_itemsets_per_seq)):
            size = rng.randint(1, top_size)
            members = sorted(rng.sample(range(params.distinct_items), size))
            itemsets.append(tuple(QItem(i, rng.randint(1, params.max_quantity)) for i in members))
        sequences.append(QSequence(sid, (Segment(1, tuple(itemsets)),)))
    return QSequenceDatabase(tuple(sequences), names), ExternalUtilityTable(weights)


def validate(db: QSequenceDatabase, eut: ExternalUtilityTable) -> list[str]:
    """Structural checks; returns one message per violation, empty when clean."""
    problems: list[str] = []
    for i, weight in enumerate(eut.weights):
        if weight < 1:
            problems.append(f"item {i}: external utility must be >= 1, got {weight}")
    for seq in db.sequences:
        for pos, itemset in sorted(seq.by_position.items()):
            if not itemset:
                problems.append(f"sequence {seq.sid}, position {pos}: empty itemset")
            last = -1
            for qitem in itemset:
                if qitem.item <= last:
                    problems.append(
                        f"sequence {seq.sid}, position {pos}: items not strictly ascending"
                    )
                last = qitem.item
                if qitem.quantity < 1:
                    problems.append(
                        f"sequence {seq.sid}, position {pos}: quantity must be >= 1"
                    )
                if qitem.item < 0 or qitem.item >= len(eut.weights):
                    problems.append(
                        f"sequence {seq.sid}, position {pos}: "
                        f"missing external utility for item {qitem.item}"
                    )
    return problems
