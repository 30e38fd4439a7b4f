"""Threshold sweep over a synthetic database, with pruning-strategy ablation.

Generates a reproducible random database, mines it at several thresholds,
and shows how candidate counts shrink as the bounds bite.

    python3 demos/synthetic_benchmark.py [--sequences 5000] [--seed 1]
"""

import argparse
import time

from hucsp.dataio import GeneratorParams, generate_synthetic
from hucsp.miner import MiningConfig, mine


def run(db, eut, xi: str, guip: bool, luip: bool, max_len: int | None = None):
    config = MiningConfig(
        xi=xi, enable_guip=guip, enable_luip=luip, max_pattern_length=max_len
    )
    started = time.perf_counter()
    results, stats = mine(db, eut, config)
    return results, stats, time.perf_counter() - started


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sequences", type=int, default=5000)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    db, eut = generate_synthetic(
        GeneratorParams(
            sequence_count=args.sequences,
            distinct_items=60,
            max_itemsets_per_seq=8,
            max_items_per_itemset=4,
            seed=args.seed,
        )
    )
    print(f"database: {len(db.sequences)} sequences, {len(db.names)} items")

    # Below ~0.005 on a database this small the minimum utility sinks under
    # typical extension bounds and the search degenerates toward exhaustive
    # enumeration; that cliff is a property of the problem, not a knob.
    print("\nthreshold sweep (both pruning strategies on):")
    print(f"  {'xi':>8} {'patterns':>9} {'candidates':>11} {'esr':>8} {'seconds':>8}")
    for xi in ("0.03", "0.02", "0.01", "0.005"):
        results, stats, elapsed = run(db, eut, xi, True, True)
        esr = stats.to_dict()["esr"] or "-"
        print(f"  {xi:>8} {len(results):>9} {stats.candidates:>11} {esr:>8} {elapsed:>8.2f}")

    # Without the IEU bound the search walks every pattern with an instance,
    # which is exponential in itemset width; cap the length to keep the
    # unpruned runs finite.
    print("\npruning ablation at xi = 0.005, patterns capped at 2 items:")
    print(f"  {'guip':>5} {'luip':>5} {'patterns':>9} {'pruned':>8} {'seconds':>8}")
    reference = None
    for guip in (True, False):
        for luip in (True, False):
            results, stats, elapsed = run(db, eut, "0.005", guip, luip, max_len=2)
            if reference is None:
                reference = results
            assert results == reference, "pruning must never change the answer"
            print(f"  {str(guip):>5} {str(luip):>5} {len(results):>9} "
                  f"{stats.luip_pruned:>8} {elapsed:>8.2f}")
    print("\nall four configurations returned identical results")


if __name__ == "__main__":
    main()
