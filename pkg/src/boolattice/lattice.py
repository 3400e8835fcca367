"""Union closure of finite integer sets and its order structure.

The closure engine materializes the smallest family containing the empty
set and all generators that is closed under pairwise union.  Elements are
encoded internally as bitmasks over the ground universe (the union of the
generators), which keeps subset tests and unions cheap even for closures
with tens of thousands of elements.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .errors import ClosureCapExceeded, ElementNotInLattice
from .sets import FiniteSet

DEFAULT_MAX_CLOSURE = 100_000


class CoverRelation(NamedTuple):
    lower: FiniteSet
    upper: FiniteSet


class Sublattice:
    """A finite union-closed family of integer sets containing the empty set.

    Instances are produced by :func:`close` and are immutable afterwards;
    they are safe to share between threads.  ``elements`` and ``quarks``
    are kept in canonical order (size, then lexicographic).
    """

    __slots__ = (
        "generators",
        "elements",
        "quarks",
        "ground",
        "max_closure",
        "_bit",
        "_masks",
        "_quark_masks",
        "_mask_by_element",
        "_covers",
        "_factorization_gap",
        "_gap_computed",
    )

    def __init__(self, generators: tuple[FiniteSet, ...], element_masks: list[int],
                 ground: tuple[int, ...], max_closure: int):
        self.generators = generators
        self.ground = ground
        self.max_closure = max_closure
        self._bit = {v: i for i, v in enumerate(ground)}

        decoded = [(m, self._decode_tuple(m)) for m in element_masks]
        decoded.sort(key=lambda pair: (len(pair[1]), pair[1]))
        self._masks: tuple[int, ...] = tuple(m for m, _ in decoded)
        self.elements: tuple[FiniteSet, ...] = tuple(FiniteSet(t) for _, t in decoded)
        self._mask_by_element = {e: m for e, m in zip(self.elements, self._masks)}

        quark_masks: list[int] = []
        quarks: list[FiniteSet] = []
        for elem, mask in zip(self.elements, self._masks):
            if not mask:
                continue
            if any(q & mask == q for q in quark_masks):
                continue
            quark_masks.append(mask)
            quarks.append(elem)
        self._quark_masks: tuple[int, ...] = tuple(quark_masks)
        self.quarks: tuple[FiniteSet, ...] = tuple(quarks)

        self._covers: tuple[CoverRelation, ...] | None = None
        self._factorization_gap: FiniteSet | None = None
        self._gap_computed = False

    # -- encoding ---------------------------------------------------------

    def _decode_tuple(self, mask: int) -> tuple[int, ...]:
        out = []
        while mask:
            low = mask & -mask
            out.append(self.ground[low.bit_length() - 1])
            mask ^= low
        return tuple(out)

    def encode(self, x: FiniteSet) -> int:
        """Bitmask of an element; raises if ``x`` is not in the lattice."""
        try:
            return self._mask_by_element[x]
        except KeyError:
            raise ElementNotInLattice(x) from None

    def decode(self, mask: int) -> FiniteSet:
        return FiniteSet(self._decode_tuple(mask))

    @property
    def element_masks(self) -> tuple[int, ...]:
        return self._masks

    @property
    def quark_masks(self) -> tuple[int, ...]:
        return self._quark_masks

    def __contains__(self, x: FiniteSet) -> bool:
        return x in self._mask_by_element

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return (f"Sublattice({len(self.generators)} generators, "
                f"{len(self.elements)} elements, {len(self.quarks)} quarks)")

    # -- order structure --------------------------------------------------

    def downset(self, x: FiniteSet) -> tuple[FiniteSet, ...]:
        """All elements contained in ``x``, in canonical order."""
        xm = self.encode(x)
        return tuple(e for e, m in zip(self.elements, self._masks) if m & ~xm == 0)

    def meet(self, x: FiniteSet, y: FiniteSet) -> FiniteSet:
        """Greatest lower bound: the union of all elements below both.

        This can be strictly smaller than the set intersection when the
        intersection itself is not in the lattice.
        """
        bound = self.encode(x) & self.encode(y)
        out = 0
        for m in self._masks:
            if m & ~bound == 0:
                out |= m
        return self.decode(out)

    def covers(self) -> tuple[CoverRelation, ...]:
        """The full cover relation (x, y) with nothing strictly between."""
        if self._covers is None:
            relations: list[CoverRelation] = []
            pairs = list(zip(self.elements, self._masks))
            for upper, um in pairs:
                below = [(e, m) for e, m in pairs if m != um and m & ~um == 0]
                below.sort(key=lambda p: -len(p[0]))
                maximal: list[tuple[FiniteSet, int]] = []
                for e, m in below:
                    if not any(m & ~mm == 0 for _, mm in maximal):
                        maximal.append((e, m))
                relations.extend(CoverRelation(e, upper) for e, _ in maximal)
            relations.sort(key=lambda c: (c.lower.sort_key, c.upper.sort_key))
            self._covers = tuple(relations)
        return self._covers

    # -- factorizability --------------------------------------------------

    def factorization_gap(self) -> FiniteSet | None:
        """First element (canonical order) not covered by its quarks, if any."""
        if not self._gap_computed:
            gap = None
            for elem, mask in zip(self.elements, self._masks):
                if not mask:
                    continue
                covered = 0
                for q in self._quark_masks:
                    if q & ~mask == 0:
                        covered |= q
                if covered != mask:
                    gap = elem
                    break
            self._factorization_gap = gap
            self._gap_computed = True
        return self._factorization_gap

    def is_factorizable(self) -> bool:
        """True iff every nonempty element is the union of the quarks below it."""
        return self.factorization_gap() is None


def close(generators: Iterable[FiniteSet], max_closure: int = DEFAULT_MAX_CLOSURE) -> Sublattice:
    """Materialize the union closure of ``generators``.

    Empty generators are absorbed into the minimum; duplicate generators are
    dropped.  Raises :class:`ClosureCapExceeded` if more than ``max_closure``
    elements appear.
    """
    if max_closure < 1:
        raise ValueError("max_closure must be positive")
    gens = tuple(sorted({g for g in generators if len(g)}))
    ground = tuple(sorted({v for g in gens for v in g}))
    bit = {v: i for i, v in enumerate(ground)}

    gen_masks: list[int] = []
    seen_gen = set()
    for g in gens:
        m = 0
        for v in g:
            m |= 1 << bit[v]
        if m not in seen_gen:
            seen_gen.add(m)
            gen_masks.append(m)

    found = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gen_masks:
                u = m | g
                if u not in found:
                    found.add(u)
                    if len(found) > max_closure:
                        raise ClosureCapExceeded(max_closure, len(found))
                    nxt.append(u)
        frontier = nxt

    return Sublattice(gens, list(found), ground, max_closure)
