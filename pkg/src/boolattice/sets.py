"""Canonical finite sets of positive integers."""

from __future__ import annotations

from functools import total_ordering
from typing import Iterable, Iterator


@total_ordering
class FiniteSet:
    """An immutable finite set of positive integers, kept in sorted form.

    The comparison operators implement the canonical display order used
    throughout the package (smaller sets first, then lexicographic on the
    sorted elements); they do *not* test inclusion.  Use :meth:`issubset`
    for inclusion and ``|`` for union.  The empty set is the lattice
    minimum and serializes as ``{}``.
    """

    __slots__ = ("elements", "_set")

    def __init__(self, elements: Iterable[int] = ()):
        elems = tuple(sorted(set(elements)))
        for e in elems:
            if not isinstance(e, int):
                raise ValueError(f"ground elements must be integers, got {e!r}")
            if e < 1:
                raise ValueError(f"ground elements must be positive, got {e}")
        self.elements: tuple[int, ...] = elems
        self._set = frozenset(elems)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, value: int) -> bool:
        return value in self._set

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteSet):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __lt__(self, other: "FiniteSet") -> bool:
        if not isinstance(other, FiniteSet):
            return NotImplemented
        return self.sort_key < other.sort_key

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Canonical order key: size first, then lexicographic."""
        return (len(self.elements), self.elements)

    def __or__(self, other: "FiniteSet") -> "FiniteSet":
        return FiniteSet(self._set | other._set)

    def issubset(self, other: "FiniteSet") -> bool:
        return self._set <= other._set

    def intersects(self, other: "FiniteSet") -> bool:
        return not self._set.isdisjoint(other._set)

    def isdisjoint(self, other: "FiniteSet") -> bool:
        return self._set.isdisjoint(other._set)

    def __str__(self) -> str:
        if not self.elements:
            return "{}"
        return " ".join(str(e) for e in self.elements)

    def __repr__(self) -> str:
        return f"FiniteSet({list(self.elements)!r})"


EMPTY = FiniteSet()


def union_all(sets: Iterable[FiniteSet]) -> FiniteSet:
    """Union of an arbitrary (possibly empty) collection of sets."""
    out: set[int] = set()
    for s in sets:
        out.update(s.elements)
    return FiniteSet(out)
