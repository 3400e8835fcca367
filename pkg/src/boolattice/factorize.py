"""Factorizations into quarks: enumeration, length sets, elasticity, classification.

A factorization of an element is an irredundant set of quarks whose union
is that element (irredundant: dropping any quark strictly shrinks the
union).  Enumeration branches on the smallest uncovered ground element and
prunes with exclusion sets, so every irredundant cover is produced exactly
once; a final filter removes the redundant covers the search also reaches.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NotFactorable, NotFactorizable
from .lattice import Sublattice, close
from .sets import FiniteSet


@dataclass(frozen=True)
class Factorization:
    """An irredundant set of quarks, kept in canonical order."""

    quarks: tuple[FiniteSet, ...]

    def __len__(self) -> int:
        return len(self.quarks)

    def __iter__(self):
        return iter(self.quarks)

    @property
    def sort_key(self):
        return (len(self.quarks), tuple(q.sort_key for q in self.quarks))

    def joined(self) -> FiniteSet:
        out: set[int] = set()
        for q in self.quarks:
            out.update(q.elements)
        return FiniteSet(out)

    def as_strings(self) -> list[str]:
        return [str(q) for q in self.quarks]

    def __str__(self) -> str:
        return "{" + ", ".join(self.as_strings()) + "}"


@dataclass
class Witness:
    """Evidence behind a false classification flag."""

    element: FiniteSet
    factorizations: tuple[Factorization, ...] = ()


@dataclass
class ClassificationReport:
    """Verdict flags plus the witnesses that justify every 'no'.

    For non-factorizable input the ufs/hfs/lfs flags describe the factorable
    elements only (equivalently, the sublattice generated by the quarks),
    with ``factorizable`` flagged false.  ``elasticity`` is None when the
    classifier did not compute it (structural mode).
    """

    factorizable: bool
    ffs: bool
    ufs: bool
    hfs: bool
    lfs: bool
    elasticity: Fraction | None
    witnesses: dict[str, Witness] = field(default_factory=dict)
    elasticity_witness: FiniteSet | None = None
    method: str = "brute"

    def to_json_dict(self) -> dict:
        witnesses = {}
        for flag in ("factorizable", "ffs", "ufs", "hfs", "lfs"):
            w = self.witnesses.get(flag)
            if w is not None:
                witnesses[flag] = {
                    "element": str(w.element),
                    "factorizations": [z.as_strings() for z in w.factorizations],
                }
        return {
            "factorizable": self.factorizable,
            "ffs": self.ffs,
            "ufs": self.ufs,
            "hfs": self.hfs,
            "lfs": self.lfs,
            "elasticity": None if self.elasticity is None else str(self.elasticity),
            "witnesses": witnesses,
        }


def _factorization_masks(S: Sublattice, xm: int) -> list[tuple[int, ...]]:
    """All irredundant quark covers of the mask ``xm``, as index tuples."""
    qmasks = [q for q in S.quark_masks if q & ~xm == 0]
    if not qmasks:
        return []
    holders: dict[int, list[int]] = {}
    for i, q in enumerate(qmasks):
        m = q
        while m:
            low = m & -m
            holders.setdefault(low.bit_length() - 1, []).append(i)
            m ^= low

    results: list[tuple[int, ...]] = []

    def search(covered: int, banned: int, chosen: list[int]) -> None:
        if covered == xm:
            results.append(tuple(chosen))
            return
        rem = xm & ~covered
        low = rem & -rem
        options = holders.get(low.bit_length() - 1)
        if not options:
            return
        acc = banned
        for i in options:
            if (acc >> i) & 1:
                continue
            chosen.append(i)
            search(covered | qmasks[i], acc, chosen)
            chosen.pop()
            acc |= 1 << i

    search(0, 0, [])

    irredundant = []
    for chosen in results:
        masks = [qmasks[i] for i in chosen]
        total = 0
        for m in masks:
            total |= m
        ok = True
        for j, m in enumerate(masks):
            rest = 0
            for k, mm in enumerate(masks):
                if k != j:
                    rest |= mm
            if m & ~rest == 0:
                ok = False
                break
        if ok:
            irredundant.append(tuple(sorted(chosen)))
    irredundant.sort(key=lambda idxs: (len(idxs), idxs))
    return irredundant


def factorizations(S: Sublattice, x: FiniteSet) -> list[Factorization]:
    """All factorizations of ``x``, ordered by size then quark order.

    Returns the empty list iff ``x`` is not a union of quarks.
    """
    xm = S.encode(x)
    if xm == 0:
        raise ValueError("the minimum has no factorizations")
    applicable = [q for q, m in zip(S.quarks, S.quark_masks) if m & ~xm == 0]
    return [
        Factorization(tuple(applicable[i] for i in idxs))
        for idxs in _factorization_masks(S, xm)
    ]


def length_set(S: Sublattice, x: FiniteSet) -> tuple[int, ...]:
    """The distinct factorization lengths of ``x``, ascending."""
    zs = factorizations(S, x)
    if not zs:
        raise NotFactorable(x)
    return tuple(sorted({len(z) for z in zs}))


def elasticity_of(S: Sublattice, x: FiniteSet) -> Fraction:
    """max length / min length over the factorizations of ``x``, exact."""
    lengths = length_set(S, x)
    return Fraction(lengths[-1], lengths[0])


def elasticity_of_lattice(S: Sublattice) -> tuple[Fraction, FiniteSet | None]:
    """Largest element elasticity and the first element attaining it."""
    if not S.is_factorizable():
        raise NotFactorizable(S.factorization_gap())
    best = Fraction(1)
    witness = None
    for elem, mask in zip(S.elements, S.element_masks):
        if not mask:
            continue
        lengths = sorted({len(idxs) for idxs in _factorization_masks(S, mask)})
        ratio = Fraction(lengths[-1], lengths[0])
        if ratio > best:
            best = ratio
            witness = elem
    if witness is None and len(S) > 1:
        witness = S.elements[1]
    return best, witness


def classify_brute(S: Sublattice) -> ClassificationReport:
    """Classify by enumerating the factorizations of every nonempty element.

    Witnesses record the first offending element in canonical order, with
    ties inside an element broken by factorization order.
    """
    factorizable = True
    ufs = hfs = lfs = True
    witnesses: dict[str, Witness] = {}
    best = Fraction(1)
    best_witness: FiniteSet | None = None

    applicable_cache = list(zip(S.elements, S.element_masks))
    for elem, mask in applicable_cache:
        if not mask:
            continue
        idx_lists = _factorization_masks(S, mask)
        if not idx_lists:
            if factorizable:
                factorizable = False
                w = Witness(elem)
                witnesses["factorizable"] = w
                witnesses["ffs"] = w
            continue
        quark_list = [q for q, m in zip(S.quarks, S.quark_masks) if m & ~mask == 0]
        zs = [Factorization(tuple(quark_list[i] for i in idxs)) for idxs in idx_lists]
        lengths = [len(z) for z in zs]

        if ufs and len(zs) > 1:
            ufs = False
            witnesses["ufs"] = Witness(elem, (zs[0], zs[1]))
        if hfs and lengths[-1] > lengths[0]:
            hfs = False
            longest = next(z for z in zs if len(z) == lengths[-1])
            witnesses["hfs"] = Witness(elem, (zs[0], longest))
        if lfs:
            for a, b in zip(zs, zs[1:]):
                if len(a) == len(b):
                    lfs = False
                    witnesses["lfs"] = Witness(elem, (a, b))
                    break
        ratio = Fraction(lengths[-1], lengths[0])
        if ratio > best:
            best = ratio
            best_witness = elem

    if best_witness is None and len(S) > 1 and factorizable:
        best_witness = S.elements[1]
    return ClassificationReport(
        factorizable=factorizable,
        ffs=factorizable,
        ufs=ufs,
        hfs=hfs,
        lfs=lfs,
        elasticity=best,
        witnesses=witnesses,
        elasticity_witness=best_witness,
        method="brute",
    )


def _quark_components(S: Sublattice) -> list[list[int]]:
    """Quark indices grouped by intersection-connectivity, in canonical order."""
    n = len(S.quark_masks)
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    masks = S.quark_masks
    for i in range(n):
        for j in range(i + 1, n):
            if masks[i] & masks[j]:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[rj] = ri
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return [groups[r] for r in sorted(groups, key=lambda r: min(groups[r]))]


def decompose(S: Sublattice, x: FiniteSet) -> list[tuple[int, FiniteSet]]:
    """Split ``x`` into its unique per-component pieces.

    Each piece is the union of the quarks of one quarkic-graph component
    that lie below ``x``.  Pieces are returned as (component index, piece)
    ordered by the smallest ground element of the piece; component indices
    refer to the canonical component order (smallest quark first).
    """
    if not S.is_factorizable():
        raise NotFactorizable(S.factorization_gap())
    xm = S.encode(x)
    if xm == 0:
        raise ValueError("the minimum has no decomposition into pieces")
    pieces: list[tuple[int, FiniteSet]] = []
    for ci, comp in enumerate(_quark_components(S)):
        pm = 0
        for i in comp:
            q = S.quark_masks[i]
            if q & ~xm == 0:
                pm |= q
        if pm:
            pieces.append((ci, S.decode(pm)))
    pieces.sort(key=lambda piece: piece[1].elements[0])
    return pieces


def factorization_product_check(S: Sublattice, x: FiniteSet) -> bool:
    """Check |Z(x)| against the product of per-component counts.

    Both sides are enumerated directly: the left on ``S``, the right on the
    closures generated by each component's quarks.
    """
    pieces = decompose(S, x)
    lhs = len(factorizations(S, x))
    components = _quark_components(S)
    rhs = 1
    for ci, piece in pieces:
        comp_quarks = [S.quarks[i] for i in components[ci]]
        sub = close(comp_quarks, S.max_closure)
        rhs *= len(factorizations(sub, piece))
    return lhs == rhs
