"""Independent oracles and random-instance generators for the test suite.

Everything here is deliberately naive and separate from the package's own
algorithms: closures by pairwise-union fixpoint, factorizations by powerset
scan, covers by betweenness elimination, and the candy-graph definition
checked by exhaustive cycle enumeration.
"""

from __future__ import annotations

import itertools
import random

from hypothesis import strategies as st

from boolattice import FiniteSet


def fs(*values: int) -> FiniteSet:
    return FiniteSet(values)


def naive_close(generators) -> set[frozenset]:
    """Pairwise-union fixpoint, the slow way."""
    elems = {frozenset()} | {frozenset(g) for g in generators if len(g)}
    changed = True
    while changed:
        changed = False
        for a in list(elems):
            for b in list(elems):
                u = a | b
                if u not in elems:
                    elems.add(u)
                    changed = True
    return elems


def naive_covers(elements) -> set[tuple[frozenset, frozenset]]:
    """All (lower, upper) pairs with nothing strictly between."""
    elems = [frozenset(e) for e in elements]
    out = set()
    for a in elems:
        for b in elems:
            if a < b and not any(a < c < b for c in elems):
                out.add((a, b))
    return out


def oracle_factorizations(quarks, target) -> set[frozenset]:
    """Powerset scan: subsets of applicable quarks, union = target, irredundant."""
    target = frozenset(target)
    applicable = [frozenset(q) for q in quarks if frozenset(q) <= target]
    found = set()
    for r in range(1, len(applicable) + 1):
        for combo in itertools.combinations(applicable, r):
            union = frozenset().union(*combo)
            if union != target:
                continue
            irredundant = all(
                frozenset().union(*(combo[:i] + combo[i + 1:])) != union
                for i in range(len(combo))
            )
            if irredundant:
                found.add(frozenset(combo))
    return found


# -- graph oracles -------------------------------------------------------------


def adjacency_from_edges(edges) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    for v in adj:
        adj[v].sort()
    return adj


def is_connected(adj) -> bool:
    verts = sorted(adj)
    if not verts:
        return False
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(verts)


def cycle_lengths(adj) -> set[int]:
    """Lengths of all simple cycles, by exhaustive enumeration."""
    lengths: set[int] = set()

    def dfs(start: int, path: list[int], used: set[int]) -> None:
        for w in adj[path[-1]]:
            if w == start and len(path) >= 3:
                lengths.add(len(path))
            elif w not in used and w > start:
                path.append(w)
                used.add(w)
                dfs(start, path, used)
                path.pop()
                used.remove(w)

    for v in sorted(adj):
        dfs(v, [v], {v})
    return lengths


def has_path_of_length(adj, length: int) -> bool:
    """Does a simple path with ``length`` edges exist?"""

    def dfs(path: list[int], used: set[int]) -> bool:
        if len(path) == length + 1:
            return True
        return any(
            dfs(path + [w], used | {w})
            for w in adj[path[-1]]
            if w not in used
        )

    return any(dfs([v], {v}) for v in adj)


def definitional_candy(adj) -> bool:
    """The candy-graph definition checked directly on a connected graph.

    Diameter is the longest-simple-path length (the tree notion extended to
    cyclic graphs), so "diameter at most 4" means no path with 5 edges.
    """
    lengths = cycle_lengths(adj)
    if lengths != {4}:
        return False
    return not has_path_of_length(adj, 5)


# -- random instances ----------------------------------------------------------


def random_edge_family(rng: random.Random, max_vertices: int = 8,
                       max_edges: int = 10) -> list[FiniteSet]:
    """A random family of 2-element generators (size-2 quarks guaranteed)."""
    n = rng.randint(2, max_vertices)
    possible = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    m = rng.randint(1, min(max_edges, len(possible)))
    return [FiniteSet(e) for e in rng.sample(possible, m)]


def random_connected_edges(rng: random.Random, min_vertices: int = 3,
                           max_vertices: int = 9,
                           max_extra: int = 4) -> list[tuple[int, int]]:
    """Random connected graph: a random spanning tree plus a few extra edges."""
    n = rng.randint(min_vertices, max_vertices)
    order = list(range(1, n + 1))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        a, b = order[i], order[rng.randrange(i)]
        edges.add((min(a, b), max(a, b)))
    room = n * (n - 1) // 2 - (n - 1)
    for _ in range(rng.randint(0, min(max_extra, room))):
        a, b = rng.sample(range(1, n + 1), 2)
        edges.add((min(a, b), max(a, b)))
    return sorted(edges)


def random_candy_edges(rng: random.Random) -> list[tuple[int, int]]:
    """A genuine candy graph with shuffled vertex labels."""
    middles = rng.randint(2, 4)
    leaves_a = rng.randint(0, 3)
    leaves_c = rng.randint(0, 2)
    total = 2 + middles + leaves_a + leaves_c
    labels = list(range(1, total + 1))
    rng.shuffle(labels)
    it = iter(labels)
    a, c = next(it), next(it)
    mids = [next(it) for _ in range(middles)]
    la = [next(it) for _ in range(leaves_a)]
    lc = [next(it) for _ in range(leaves_c)]
    edges = [(a, m) for m in mids] + [(c, m) for m in mids]
    edges += [(a, v) for v in la] + [(c, v) for v in lc]
    return sorted((min(x, y), max(x, y)) for x, y in edges)


# -- hypothesis strategies -------------------------------------------------------


def finite_sets(max_value: int = 7, max_size: int = 3):
    return st.sets(st.integers(1, max_value), min_size=1, max_size=max_size).map(FiniteSet)


def generator_families(max_value: int = 7, max_size: int = 3, max_count: int = 5):
    return st.lists(finite_sets(max_value, max_size), min_size=0, max_size=max_count)


def edge_generator_families(max_value: int = 7, max_count: int = 7):
    pair = st.sets(st.integers(1, max_value), min_size=2, max_size=2).map(FiniteSet)
    return st.lists(pair, min_size=1, max_size=max_count)
