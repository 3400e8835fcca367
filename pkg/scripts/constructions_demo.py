#!/usr/bin/env python3
"""Build and verify the two bundled constructions at a few sizes."""

import argparse
import time
from fractions import Fraction

from boolattice import (
    ElasticitySpec,
    LayeredSpec,
    build_elasticity_lattice,
    build_layered_lattice,
    verify_elasticity_construction,
    verify_layered_lattice,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--ratios", default="3/2,5/3,7/4",
                        help="comma-separated increasing ratios > 1")
    parser.add_argument("--max-layers", type=int, default=3)
    args = parser.parse_args()

    ratios = tuple(Fraction(r) for r in args.ratios.split(","))
    for upto in range(1, len(ratios) + 1):
        spec = ElasticitySpec(ratios[:upto])
        start = time.perf_counter()
        report = verify_elasticity_construction(build_elasticity_lattice(spec), spec)
        elapsed = time.perf_counter() - start
        print(f"ratios {', '.join(str(q) for q in spec.ratios)}  "
              f"[{elapsed:.2f}s]")
        for line in report.lines():
            print(f"  {line}")

    for layers in range(1, args.max_layers + 1):
        start = time.perf_counter()
        report = verify_layered_lattice(build_layered_lattice(LayeredSpec(layers)))
        elapsed = time.perf_counter() - start
        print(f"layers {layers}  [{elapsed:.2f}s]")
        for line in report.lines():
            print(f"  {line}")


if __name__ == "__main__":
    main()
