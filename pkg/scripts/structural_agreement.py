#!/usr/bin/env python3
"""Random-instance experiment: graph-characterization flags vs exhaustive enumeration.

Draws random families of 2-element generators, classifies each lattice both
structurally (pairing-graph shapes) and by brute force, and reports the
agreement counts plus how often each component shape occurred.
"""

import argparse
import random
from collections import Counter

from boolattice import (
    FiniteSet,
    classify_brute,
    classify_structural,
    close,
    component_shapes,
)


def random_family(rng: random.Random, max_vertices: int, max_edges: int):
    n = rng.randint(2, max_vertices)
    possible = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    m = rng.randint(1, min(max_edges, len(possible)))
    return [FiniteSet(e) for e in rng.sample(possible, m)]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=500)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--max-vertices", type=int, default=8)
    parser.add_argument("--max-edges", type=int, default=10)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    shape_counts: Counter[str] = Counter()
    verdicts: Counter[tuple[bool, bool]] = Counter()
    disagreements = 0
    for _ in range(args.count):
        gens = random_family(rng, args.max_vertices, args.max_edges)
        S = close(gens)
        structural = classify_structural(S)
        brute = classify_brute(S)
        for shape in component_shapes(S):
            shape_counts[shape.kind.value] += 1
        verdicts[(brute.ufs, brute.hfs)] += 1
        if (structural.ufs, structural.hfs, structural.lfs) != (
            brute.ufs, brute.hfs, brute.lfs
        ):
            disagreements += 1
            print(f"DISAGREEMENT on {[str(g) for g in gens]}")

    print(f"instances: {args.count}   disagreements: {disagreements}")
    print("verdict counts (UFS, HFS):")
    for key in sorted(verdicts):
        print(f"  {key}: {verdicts[key]}")
    print("component shapes seen:")
    for kind, count in shape_counts.most_common():
        print(f"  {kind}: {count}")


if __name__ == "__main__":
    main()
