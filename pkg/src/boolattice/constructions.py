"""Executable lattice constructions and their brute-force verifiers.

Two families are built here.  The elasticity family allocates one integer
block per requested ratio a/b, arranged as an a-by-b matrix whose rows and
columns become the generators; each block then has exactly two
factorizations (rows vs. columns) with lengths a and b, everything off the
blocks factors uniquely, and the lattice elasticity equals the largest
ratio.  The layered family labels the binary strings of a fixed length and
generates one partition block per digit-segment value; the top element has
one factorization per layer (lengths 2, 4, 8, ...) and every other element
factors uniquely, so the lattice is length-factorial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import PreconditionViolated, UnknownExample, VerificationFailed
from .factorize import factorizations
from .lattice import DEFAULT_MAX_CLOSURE, Sublattice, close
from .sets import FiniteSet


def mediant_bound(numerators: Sequence[int], denominators: Sequence[int]) -> bool:
    """Check (a1+...+ak)/(b1+...+bk) <= ak/bk for increasing ratios > 1.

    Exposed as an operation so the property suite can exercise the
    inequality directly; it holds for every valid input.
    """
    if len(numerators) != len(denominators) or not numerators:
        raise PreconditionViolated("need equally long, nonempty numerator and denominator lists")
    for v in (*numerators, *denominators):
        if not isinstance(v, int) or v < 1:
            raise PreconditionViolated(f"entries must be positive integers, got {v!r}")
    ratios = [Fraction(a, b) for a, b in zip(numerators, denominators)]
    if ratios[0] <= 1:
        raise PreconditionViolated(f"first ratio {ratios[0]} is not > 1")
    for prev, cur in zip(ratios, ratios[1:]):
        if cur < prev:
            raise PreconditionViolated("ratios must be non-decreasing")
    return Fraction(sum(numerators), sum(denominators)) <= ratios[-1]


@dataclass(frozen=True)
class ElasticitySpec:
    """Strictly increasing target ratios, each > 1 with both parts >= 2."""

    ratios: tuple[Fraction, ...]

    def __post_init__(self):
        ratios = tuple(Fraction(r) for r in self.ratios)
        object.__setattr__(self, "ratios", ratios)
        if not ratios:
            raise PreconditionViolated("at least one ratio is required")
        prev = None
        for q in ratios:
            if q <= 1:
                raise PreconditionViolated(f"ratio {q} is not > 1")
            if min(q.numerator, q.denominator) < 2:
                raise PreconditionViolated(
                    f"ratio {q} must have numerator and denominator >= 2 in lowest terms"
                )
            if prev is not None and q <= prev:
                raise PreconditionViolated("ratios must be strictly increasing")
            prev = q


@dataclass(frozen=True)
class LayeredSpec:
    """Number of digit layers to build, between 1 and 4."""

    layers: int

    def __post_init__(self):
        if not isinstance(self.layers, int) or not 1 <= self.layers <= 4:
            raise PreconditionViolated("layer count must be an integer in [1, 4]")

    @property
    def string_length(self) -> int:
        n = self.layers
        return n * (n + 1) // 2


@dataclass(frozen=True)
class ConstructionOutput:
    """Generators of a built lattice plus the labels explaining each one."""

    kind: str
    generators: tuple[FiniteSet, ...]
    labels: tuple[dict, ...]
    ground_size: int
    params: dict = field(default_factory=dict)


@dataclass
class VerificationReport:
    """Checked claims of a construction, with one detail line per claim."""

    kind: str
    closure_size: int
    checks: tuple[tuple[str, str], ...]

    def lines(self) -> list[str]:
        out = [f"verified {self.kind} construction ({self.closure_size} elements)"]
        out.extend(f"  {claim}: {detail}" for claim, detail in self.checks)
        return out


# -- elasticity family ---------------------------------------------------------


def build_elasticity_lattice(spec: ElasticitySpec) -> ConstructionOutput:
    """One disjoint a x b integer block per ratio; rows and columns generate."""
    generators: list[FiniteSet] = []
    labels: list[dict] = []
    start = 1
    for n, q in enumerate(spec.ratios, start=1):
        a, b = q.numerator, q.denominator
        for i in range(a):
            row = range(start + i * b, start + (i + 1) * b)
            generators.append(FiniteSet(row))
            labels.append({"block": n, "kind": "row", "index": i + 1})
        for j in range(b):
            col = range(start + j, start + a * b, b)
            generators.append(FiniteSet(col))
            labels.append({"block": n, "kind": "col", "index": j + 1})
        start += a * b
    return ConstructionOutput(
        kind="elasticity",
        generators=tuple(generators),
        labels=tuple(labels),
        ground_size=start - 1,
        params={"ratios": [str(q) for q in spec.ratios]},
    )


def _block_sets(spec: ElasticitySpec) -> list[FiniteSet]:
    blocks = []
    start = 1
    for q in spec.ratios:
        size = q.numerator * q.denominator
        blocks.append(FiniteSet(range(start, start + size)))
        start += size
    return blocks


def verify_elasticity_construction(out: ConstructionOutput, spec: ElasticitySpec,
                                   max_closure: int = DEFAULT_MAX_CLOSURE) -> VerificationReport:
    """Close the built lattice and check every claim behind the construction."""
    rebuilt = build_elasticity_lattice(spec)
    if rebuilt.generators != out.generators:
        raise VerificationFailed("construction", "generators do not match the ratio list")
    S = close(out.generators, max_closure)

    checks: list[tuple[str, str]] = []
    if set(S.quarks) != set(out.generators):
        raise VerificationFailed("quarks", "the quarks are not exactly the generators")
    checks.append(("quarks", f"all {len(out.generators)} generators are quarks"))

    blocks = _block_sets(spec)
    details = []
    for n, (q, block) in enumerate(zip(spec.ratios, blocks), start=1):
        a, b = q.numerator, q.denominator
        zs = factorizations(S, block)
        expected = {
            frozenset(g for g, lab in zip(rebuilt.generators, rebuilt.labels)
                      if lab["block"] == n and lab["kind"] == kind)
            for kind in ("row", "col")
        }
        got = {frozenset(z.quarks) for z in zs}
        lengths = sorted(len(z) for z in zs)
        if got != expected or lengths != sorted({a, b}):
            raise VerificationFailed(
                "block-factorizations",
                f"block {n} should factor exactly as its rows or its columns",
            )
        details.append(f"block {n}: 2 factorizations, lengths {{{min(a, b)}, {max(a, b)}}}")
    checks.append(("block-factorizations", "; ".join(details)))

    block_masks = [S.encode(bl) for bl in blocks]
    best = Fraction(1)
    witness = None
    unique_off_blocks = 0
    for elem, mask in zip(S.elements, S.element_masks):
        if not mask:
            continue
        lengths = sorted(len(z) for z in factorizations(S, elem))
        contains_block = any(bm & ~mask == 0 for bm in block_masks)
        if (len(lengths) == 1) == contains_block:
            raise VerificationFailed(
                "unique-elsewhere",
                f"element '{elem}' has {len(lengths)} factorizations but "
                f"{'contains' if contains_block else 'avoids'} a block",
            )
        if not contains_block:
            unique_off_blocks += 1
        ratio = Fraction(lengths[-1], lengths[0])
        if ratio > best:
            best = ratio
            witness = elem
    checks.append(("unique-elsewhere",
                   f"{unique_off_blocks} elements avoiding all blocks factor uniquely"))

    if best != spec.ratios[-1]:
        raise VerificationFailed(
            "elasticity", f"lattice elasticity is {best}, expected {spec.ratios[-1]}"
        )
    checks.append(("elasticity", f"{best} attained at '{witness}'"))
    return VerificationReport("elasticity", len(S), tuple(checks))


# -- layered family -------------------------------------------------------------


def build_layered_lattice(spec: LayeredSpec) -> ConstructionOutput:
    """Partition blocks of binary strings, one partition per digit layer.

    Ground element v+1 stands for the length-T binary string with value v
    (most significant digit first).  The block for value k in layer n
    collects the strings whose n-digit segment for that layer equals k, so
    each layer is a partition of the ground set and blocks from different
    layers properly overlap.
    """
    T = spec.string_length
    total = 1 << T
    generators: list[FiniteSet] = []
    labels: list[dict] = []
    for n in range(1, spec.layers + 1):
        t_n = n * (n + 1) // 2
        shift = T - t_n
        width_mask = (1 << n) - 1
        for k in range(1 << n):
            block = FiniteSet(
                v + 1 for v in range(total) if (v >> shift) & width_mask == k
            )
            generators.append(block)
            labels.append({"layer": n, "value": k})
    return ConstructionOutput(
        kind="layered",
        generators=tuple(generators),
        labels=tuple(labels),
        ground_size=total,
        params={"layers": spec.layers},
    )


def verify_layered_lattice(out: ConstructionOutput,
                           max_closure: int = DEFAULT_MAX_CLOSURE) -> VerificationReport:
    """Close the layered lattice and check its factorization claims."""
    spec = LayeredSpec(out.params["layers"])
    rebuilt = build_layered_lattice(spec)
    if rebuilt.generators != out.generators:
        raise VerificationFailed("construction", "generators do not match the layer count")
    S = close(out.generators, max_closure)

    checks: list[tuple[str, str]] = []
    if set(S.quarks) != set(out.generators):
        raise VerificationFailed("quarks", "the quarks are not exactly the blocks")
    checks.append(("quarks", f"all {len(out.generators)} blocks are quarks"))

    top = FiniteSet(range(1, out.ground_size + 1))
    layers = {
        n: frozenset(g for g, lab in zip(rebuilt.generators, rebuilt.labels)
                     if lab["layer"] == n)
        for n in range(1, spec.layers + 1)
    }
    zs_top = factorizations(S, top)
    got = {frozenset(z.quarks) for z in zs_top}
    expected_lengths = sorted(1 << n for n in range(1, spec.layers + 1))
    if got != set(layers.values()) or sorted(len(z) for z in zs_top) != expected_lengths:
        raise VerificationFailed(
            "top-factorizations",
            f"the top element should factor exactly as each of the {spec.layers} layers",
        )
    plural = "s" if spec.layers != 1 else ""
    checks.append(("top-factorizations",
                   f"top has {spec.layers} factorization{plural} with lengths "
                   f"{{{', '.join(str(v) for v in expected_lengths)}}}"))

    top_mask = S.encode(top)
    others = 0
    for elem, mask in zip(S.elements, S.element_masks):
        if not mask or mask == top_mask:
            continue
        count = len(factorizations(S, elem))
        if count != 1:
            raise VerificationFailed(
                "unique-elsewhere",
                f"element '{elem}' has {count} factorizations, expected 1",
            )
        others += 1
    checks.append(("unique-elsewhere", f"{others} non-top elements factor uniquely"))

    # unique factorizations everywhere else + distinct lengths at the top
    if len({len(z) for z in zs_top}) != len(zs_top):
        raise VerificationFailed("length-distinct", "two top factorizations share a length")
    checks.append(("length-distinct",
                   "factorization lengths are pairwise distinct per element (LFS)"))
    return VerificationReport("layered", len(S), tuple(checks))


# -- worked-example catalog -------------------------------------------------------

# An 11-vertex candy graph: centers 1 and 9, middles 5..8, leaves 2..4
# at center 1 and 10..11 at center 9.
_CANDY_11_EDGES = (
    (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8),
    (5, 9), (6, 9), (7, 9), (8, 9), (9, 10), (9, 11),
)

_EXAMPLES: dict[str, tuple[tuple[int, ...], ...]] = {
    "hfs_triangle": ((1, 2), (2, 3), (1, 3)),
    "ufs_chain_overlap": ((1, 2, 3), (2, 3, 4), (3, 4, 5), (4, 5, 6)),
    "quarkic_two_components": ((1, 2), (1, 3), (2, 3), (4, 5), (4, 6)),
    "lfs_not_ufs": ((1, 2, 3), (4, 5, 6), (1, 4), (2, 5), (3, 6)),
    "not_factorizable": ((1,), (1, 2)),
    "candy_11": _CANDY_11_EDGES,
}

EXAMPLE_NAMES = tuple(_EXAMPLES)


def named_example(name: str) -> ConstructionOutput:
    """Generators of one of the small catalog lattices."""
    try:
        raw = _EXAMPLES[name]
    except KeyError:
        raise UnknownExample(name, EXAMPLE_NAMES) from None
    generators = tuple(FiniteSet(g) for g in raw)
    ground = {v for g in generators for v in g}
    return ConstructionOutput(
        kind="example",
        generators=generators,
        labels=(),
        ground_size=len(ground),
        params={"name": name},
    )
