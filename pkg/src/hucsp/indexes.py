"""Sequence information lists and instance chains.

The SIL is a per-sequence mirror of the database that stores, for every
q-item occurrence, its utility and the remaining utility (total utility of
everything after it in reading order).  Remaining utilities telescope: each
entry's remainder equals the next entry's remainder plus the next entry's
utility, and the last entry's remainder is 0.

An IChain indexes every instance of one pattern: per containing sequence, the
(ending position, instance utility) pairs in ascending position order.
Chains for extended patterns are built from the parent chain plus the SIL
without touching the database again.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, NamedTuple

from .core import (
    ExternalUtilityTable,
    Item,
    Pattern,
    QSequenceDatabase,
    q_sequence_utility,
)


class SILEntry(NamedTuple):
    item: Item
    utility: int
    remaining: int


class SILSegment(NamedTuple):
    start: int
    itemsets: tuple[tuple[SILEntry, ...], ...]


@dataclass(frozen=True)
class SIL:
    sid: int
    segments: tuple[SILSegment, ...]

    @cached_property
    def by_position(self) -> dict[int, dict[Item, SILEntry]]:
        out: dict[int, dict[Item, SILEntry]] = {}
        for seg in self.segments:
            for offset, itemset in enumerate(seg.itemsets):
                out[seg.start + offset] = {entry.item: entry for entry in itemset}
        return out


def build_sil(db: QSequenceDatabase, eut: ExternalUtilityTable) -> list[SIL]:
    """One SIL per sequence, in database order."""
    sils = []
    for seq in db.sequences:
        left = q_sequence_utility(seq, eut)
        segments = []
        for seg in seq.segments:
            itemsets = []
            for itemset in seg.itemsets:
                entries = []
                for qitem in itemset:
                    utility = qitem.quantity * eut.weight(qitem.item)
                    left -= utility
                    entries.append(SILEntry(qitem.item, utility, left))
                itemsets.append(tuple(entries))
            segments.append(SILSegment(seg.start, tuple(itemsets)))
        sils.append(SIL(seq.sid, tuple(segments)))
    return sils


def sil_to_text(sil: SIL, names: tuple[str, ...]) -> str:
    """Render entries as (name,utility,remaining); '/' between itemsets, '//' between segments."""
    segments = []
    for seg in sil.segments:
        segments.append(
            "/".join(
                "".join(f"({names[e.item]},{e.utility},{e.remaining})" for e in itemset)
                for itemset in seg.itemsets
            )
        )
    return "//".join(segments)


class IChainElement(NamedTuple):
    epos: int
    utility: int


@dataclass(frozen=True)
class InstanceList:
    sid: int
    elements: tuple[IChainElement, ...]


@dataclass(frozen=True)
class IChain:
    """All instances of one pattern, grouped by sequence, positions ascending."""

    pattern: Pattern
    lists: tuple[InstanceList, ...]


def build_initial_ichains(sils: list[SIL]) -> dict[Item, IChain]:
    """IChains of every single-item pattern present in the indexed database."""
    per_item: dict[Item, dict[int, list[IChainElement]]] = {}
    for sil in sils:
        for pos in sorted(sil.by_position):
            for item, entry in sil.by_position[pos].items():
                per_item.setdefault(item, {}).setdefault(sil.sid, []).append(
                    IChainElement(pos, entry.utility)
                )
    chains: dict[Item, IChain] = {}
    for item in sorted(per_item):
        lists = tuple(
            InstanceList(sid, tuple(elements))
            for sid, elements in sorted(per_item[item].items())
        )
        chains[item] = IChain(((item,),), lists)
    return chains


def extend_ichain_i(prefix: IChain, item: Item, sils: Mapping[int, SIL]) -> IChain:
    """Chain for the pattern with item appended to the last itemset.

    item must sort after the last item of the prefix pattern.  An instance
    survives when item also occurs at its ending position; its utility grows
    by that occurrence.
    """
    last_itemset = prefix.pattern[-1]
    if item <= last_itemset[-1]:
        raise ValueError("item-extension must append a larger item id")
    pattern = prefix.pattern[:-1] + (last_itemset + (item,),)
    lists = []
    for il in prefix.lists:
        by_position = sils[il.sid].by_position
        elements = []
        for epos, utility in il.elements:
            entry = by_position[epos].get(item)
            if entry is not None:
                elements.append(IChainElement(epos, utility + entry.utility))
        if elements:
            lists.append(InstanceList(il.sid, tuple(elements)))
    return IChain(pattern, tuple(lists))


def extend_ichain_s(prefix: IChain, item: Item, sils: Mapping[int, SIL]) -> IChain:
    """Chain for the pattern with {item} appended as a new itemset.

    An instance extends only when the position after its ending position
    exists (same segment, contiguity) and holds item; the new instance ends
    one position later.
    """
    pattern = prefix.pattern + ((item,),)
    lists = []
    for il in prefix.lists:
        by_position = sils[il.sid].by_position
        elements = []
        for epos, utility in il.elements:
            nxt = by_position.get(epos + 1)
            if nxt is None:
                continue
            entry = nxt.get(item)
            if entry is not None:
                elements.append(IChainElement(epos + 1, utility + entry.utility))
        if elements:
            lists.append(InstanceList(il.sid, tuple(elements)))
    return IChain(pattern, tuple(lists))


def ichain_pattern_utility(chain: IChain) -> int:
    """Pattern utility from the chain alone: per-sequence maxima, summed."""
    return sum(max(e.utility for e in il.elements) for il in chain.lists)


def collect_extension_items(
    chain: IChain, sils: Mapping[int, SIL]
) -> tuple[tuple[Item, ...], tuple[Item, ...]]:
    """Items that could item-extend / sequence-extend the chain's pattern.

    Item-extension candidates occur at an instance's ending position with an
    id above the pattern's last item; sequence-extension candidates occur at
    the position right after an ending position.  Both ascending.
    """
    last = chain.pattern[-1][-1]
    i_items: set[Item] = set()
    s_items: set[Item] = set()
    for il in chain.lists:
        by_position = sils[il.sid].by_position
        for epos, _ in il.elements:
            for item in by_position[epos]:
                if item > last:
                    i_items.add(item)
            nxt = by_position.get(epos + 1)
            if nxt:
                s_items.update(nxt)
    return tuple(sorted(i_items)), tuple(sorted(s_items))
