#!/usr/bin/env python3
"""Classify every catalog lattice and print a verdict table."""

from boolattice import (
    EXAMPLE_NAMES,
    classify_brute,
    close,
    elasticity_of_lattice,
    named_example,
    quarkic_graph,
)


def yn(flag: bool) -> str:
    return "yes" if flag else "no"


def main() -> None:
    header = f"{'example':24} {'elms':>5} {'quarks':>6} {'fact':>5} {'UFS':>4} {'HFS':>4} {'LFS':>4} {'rho':>5} components"
    print(header)
    print("-" * len(header))
    for name in EXAMPLE_NAMES:
        S = close(named_example(name).generators)
        r = classify_brute(S)
        rho = "-" if not r.factorizable else str(elasticity_of_lattice(S)[0])
        comps = len(quarkic_graph(S).components)
        print(f"{name:24} {len(S.elements):>5} {len(S.quarks):>6} "
              f"{yn(r.factorizable):>5} {yn(r.ufs):>4} {yn(r.hfs):>4} {yn(r.lfs):>4} "
              f"{rho:>5} {comps}")
        for flag in ("factorizable", "ufs", "hfs", "lfs"):
            w = r.witnesses.get(flag)
            if w is None:
                continue
            if w.factorizations:
                zs = " vs ".join(str(z) for z in w.factorizations)
                print(f"{'':24}   {flag} fails at '{w.element}': {zs}")
            else:
                print(f"{'':24}   {flag} fails at '{w.element}' (no factorization)")


if __name__ == "__main__":
    main()
