"""Survey the quotient covers that general towers produce.

Samples general towers over a genus range, pushes each through the
sections construction, classifies the tetragonal quotient, and runs
it back through the pairs construction.  Prints distribution tables
only; nothing here is asserted, it is a map of the terrain around
the two-marked stratum.

Usage: python scripts/general_image_stats.py [count] [seed]
"""
from __future__ import annotations

import sys
from collections import Counter

from trigonal import (
    SampleConfig,
    TetragonalCover,
    construct,
    derive_seed,
    genus,
    invert,
    sample_tower,
)


def main(count: int = 60, seed: int = 1) -> int:
    strata = Counter()
    fiber_mix = Counter()
    node_counts = Counter()
    genus_pairs = Counter()

    for index in range(count):
        g = 3 + index % 6
        cfg = SampleConfig(genus=g, mode="general", seed=derive_seed(seed, index))
        tower = sample_tower(cfg)
        quotient = TetragonalCover(construct(tower).quotient)
        strata[quotient.stratum] += 1
        fiber_mix[tuple(sorted(Counter(quotient.fiber_types().values()).items()))] += 1
        genus_pairs[(g, quotient.genus)] += 1

        inverse = invert(quotient)
        node_counts[
            (len(inverse.trigonal_model.nodes), len(inverse.pairs_model.nodes))
        ] += 1

    print(f"{count} general towers, genus cycling 3..8, master seed {seed}")
    print("\nquotient stratum:")
    for stratum, n in sorted(strata.items()):
        print(f"  {stratum}: {n}")
    print("\n(tower genus, quotient genus):")
    for pair, n in sorted(genus_pairs.items()):
        print(f"  {pair}: {n}")
    print("\nfibre-type multiset of the quotient (type: how many labels):")
    for mix, n in sorted(fiber_mix.items()):
        print(f"  {dict(mix)}: {n}")
    print("\n(nodes downstairs, nodes upstairs) after the pairs construction:")
    for pair, n in sorted(node_counts.items()):
        print(f"  {pair}: {n}")
    return 0


if __name__ == "__main__":
    args = [int(a) for a in sys.argv[1:3]]
    sys.exit(main(*args))
