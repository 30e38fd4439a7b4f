"""Shared fixtures: the worked five-sequence example and randomized corpora.

The worked example (five sequences over items a..f) is the source of most
frozen expected values; sequences are referred to as S1..S5 below, mapping to
sids 0..4.  Item ids follow the utility file: a=0 .. f=5.
"""

from __future__ import annotations

import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hucsp.core import ExternalUtilityTable, QItem, QSequence, QSequenceDatabase, Segment
from hucsp.dataio import GeneratorParams, generate_synthetic, parse_database
from hucsp.oracle import instance_count

settings.register_profile(
    "suite", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("suite")

RUNNING_DB_TEXT = """\
b:2 f:4 -1 a:2 e:2 -1 c:2 e:1 -1 -2
a:1 -1 c:2 d:1 -1 a:1 b:1 e:2 -1 -2
b:2 f:2 -1 f:2 -1 a:3 d:1 -1 -2
d:1 -1 b:4 f:5 -1 c:1 e:2 -1 f:1 -1 -2
a:2 -1 a:1 c:3 -1 c:1 f:2 -1 b:1 -1 -2
"""

RUNNING_EUT_TEXT = """\
a 3
b 2
c 3
d 2
e 1
f 1
"""

A, B, C, D, E, F = range(6)


@pytest.fixture(scope="session")
def running():
    """(database, utility table) of the worked example."""
    return parse_database(RUNNING_DB_TEXT, RUNNING_EUT_TEXT)


def draw_corpus(count: int, meta_seed: int, work_cap: int = 200_000):
    """Random small databases, deterministic in meta_seed.

    Dimensions stay within: <= 8 sequences, <= 6 itemsets/sequence,
    <= 4 items/itemset, <= 6 distinct items, quantities/weights <= 5.
    Databases whose brute-force work estimate exceeds work_cap are redrawn so
    full enumeration over the corpus stays fast.
    """
    meta = random.Random(meta_seed)
    corpus = []
    while len(corpus) < count:
        params = GeneratorParams(
            sequence_count=meta.randint(1, 8),
            distinct_items=meta.randint(1, 6),
            max_itemsets_per_seq=meta.randint(1, 6),
            max_items_per_itemset=meta.randint(1, 4),
            max_quantity=5,
            max_weight=5,
            seed=meta.randrange(2**32),
        )
        db, eut = generate_synthetic(params)
        if instance_count(db) <= work_cap:
            corpus.append((db, eut))
    return corpus


@pytest.fixture(scope="session")
def corpus200():
    """The 200-database corpus used by the acceptance suite."""
    return draw_corpus(200, meta_seed=20260814)


@pytest.fixture(scope="session")
def corpus30():
    """A smaller independent corpus for module-level property tests."""
    return draw_corpus(30, meta_seed=997)


def _hyp_itemset(draw, n_items: int, max_size: int):
    members = draw(
        st.sets(st.integers(0, n_items - 1), min_size=1, max_size=min(max_size, n_items))
    )
    return tuple(QItem(i, draw(st.integers(1, 5))) for i in sorted(members))


@st.composite
def q_databases(draw, segmented: bool = False):
    """Small random databases; segmented=True also draws position gaps."""
    n_items = draw(st.integers(1, 5))
    eut = ExternalUtilityTable(tuple(draw(st.integers(1, 5)) for _ in range(n_items)))
    names = tuple(f"i{k}" for k in range(n_items))
    sequences = []
    for sid in range(draw(st.integers(1, 4))):
        n_segments = draw(st.integers(1, 2)) if segmented else 1
        segments = []
        min_start = 1
        for _ in range(n_segments):
            start = min_start + (draw(st.integers(0, 2)) if segmented else 0)
            itemsets = tuple(
                _hyp_itemset(draw, n_items, 3) for _ in range(draw(st.integers(1, 3)))
            )
            segments.append(Segment(start, itemsets))
            min_start = start + len(itemsets) + 1  # at least one missing position
        sequences.append(QSequence(sid, tuple(segments)))
    return QSequenceDatabase(tuple(sequences), names), eut
