"""Quarkic and pairing graphs, component shapes, and the structural classifiers.

The structural classifiers decide the unique-factorization and
half-factorial flags from the pairing graph alone: the lattice has unique
factorizations iff every component is a tree of diameter at most 3, and is
half-factorial iff every component is a 3-cycle, a 5-cycle, a tree of
diameter at most 4, or a candy graph.  Throughout, "diameter" is meant in
the sense used for trees (the length of a longest simple path), which is
how it extends to cyclic components here.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import NotAComponent, QuarkTooLarge
from .factorize import ClassificationReport
from .lattice import Sublattice
from .sets import FiniteSet


@dataclass(frozen=True)
class QuarkicGraph:
    """Quarks as vertices, with edges between intersecting pairs."""

    vertices: tuple[FiniteSet, ...]
    edges: tuple[tuple[FiniteSet, FiniteSet], ...]
    components: tuple[tuple[FiniteSet, ...], ...]


@dataclass(frozen=True)
class PairingGraph:
    """Integers as vertices, with one edge per size-2 quark."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    components: tuple[tuple[int, ...], ...]


class ComponentKind(Enum):
    TREE_DIAM_AT_MOST_2 = "TreeDiamAtMost2"
    TREE_DIAM_3 = "TreeDiam3"
    TREE_DIAM_4 = "TreeDiam4"
    TREE_DEEPER = "TreeDeeper"
    CYCLE_C3 = "CycleC3"
    CYCLE_C5 = "CycleC5"
    CANDY = "CandyGraph"
    OTHER = "Other"


#: Component kinds that keep a lattice a UFS / an HFS.
UFS_KINDS = frozenset({ComponentKind.TREE_DIAM_AT_MOST_2, ComponentKind.TREE_DIAM_3})
HFS_KINDS = frozenset(
    {
        ComponentKind.TREE_DIAM_AT_MOST_2,
        ComponentKind.TREE_DIAM_3,
        ComponentKind.TREE_DIAM_4,
        ComponentKind.CYCLE_C3,
        ComponentKind.CYCLE_C5,
        ComponentKind.CANDY,
    }
)


@dataclass(frozen=True)
class ComponentShape:
    """A component's classification plus the certifying substructure.

    ``evidence`` holds a diameter path for trees, a cycle for cycle and
    candy components, and the forbidden structure (tagged by
    ``evidence_kind``: "C3", "C5" or "P5") for Other.
    """

    kind: ComponentKind
    evidence: tuple[int, ...] = ()
    evidence_kind: str = ""
    diameter: int | None = None
    centers: tuple[int, ...] = ()
    middles: tuple[int, ...] = ()

    def describe(self) -> str:
        if self.kind in (ComponentKind.TREE_DIAM_AT_MOST_2, ComponentKind.TREE_DIAM_3,
                         ComponentKind.TREE_DIAM_4, ComponentKind.TREE_DEEPER):
            path = "-".join(str(v) for v in self.evidence)
            return f"tree of diameter {self.diameter} (path {path})"
        if self.kind in (ComponentKind.CYCLE_C3, ComponentKind.CYCLE_C5):
            return f"cycle {'-'.join(str(v) for v in self.evidence)}"
        if self.kind is ComponentKind.CANDY:
            mids = " ".join(str(v) for v in self.middles)
            return (f"candy graph (centers {self.centers[0]} {self.centers[1]}, "
                    f"middles {mids})")
        seq = "-".join(str(v) for v in self.evidence)
        return f"other ({self.evidence_kind} {seq})" if self.evidence_kind else "other"


@dataclass(frozen=True)
class Finding:
    """One forbidden-structure occurrence: kind and a witness sequence."""

    kind: str
    vertices: tuple[int, ...]


# -- graph construction -----------------------------------------------------


def quarkic_graph(S: Sublattice) -> QuarkicGraph:
    """The intersection graph of the quarks, components sorted by smallest quark."""
    masks = S.quark_masks
    n = len(masks)
    idx_edges = [(i, j) for i in range(n) for j in range(i + 1, n)
                 if masks[i] & masks[j]]
    edges = tuple((S.quarks[i], S.quarks[j]) for i, j in idx_edges)
    comps = _index_components(n, idx_edges)
    components = tuple(tuple(S.quarks[i] for i in comp) for comp in comps)
    return QuarkicGraph(S.quarks, edges, components)


def isolated_quarks(S: Sublattice) -> tuple[FiniteSet, ...]:
    """Quarks disjoint from every other quark."""
    masks = S.quark_masks
    out = []
    for i, q in enumerate(S.quarks):
        if not any(masks[i] & masks[j] for j in range(len(masks)) if j != i):
            out.append(q)
    return tuple(out)


def pairing_graph(S: Sublattice) -> PairingGraph:
    """Graph with one edge per size-2 quark.

    Raises :class:`QuarkTooLarge` if a non-isolated quark has size other
    than 2; isolated quarks of any size are allowed (larger ones simply do
    not appear in the graph).
    """
    isolated = set(isolated_quarks(S))
    for q in S.quarks:
        if q not in isolated and len(q) != 2:
            raise QuarkTooLarge(q)
    edges = sorted(q.elements for q in S.quarks if len(q) == 2)
    return graph_from_edges(edges)


def graph_from_edges(edges: Iterable[Sequence[int]]) -> PairingGraph:
    """Build a PairingGraph from raw integer edges (deduplicated, canonical)."""
    canon = set()
    for e in edges:
        a, b = e
        if a == b:
            raise ValueError(f"loops are not allowed: {e!r}")
        canon.add((a, b) if a < b else (b, a))
    edge_list = sorted(canon)
    vertices = sorted({v for e in edge_list for v in e})
    index = {v: i for i, v in enumerate(vertices)}
    comps = _index_components(len(vertices), [(index[a], index[b]) for a, b in edge_list])
    components = tuple(tuple(vertices[i] for i in comp) for comp in comps)
    return PairingGraph(tuple(vertices), tuple(edge_list), components)


def _index_components(n: int, edges: list[tuple[int, int]]) -> list[list[int]]:
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return [groups[r] for r in sorted(groups, key=lambda r: min(groups[r]))]


def _adjacency(G: PairingGraph) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {v: [] for v in G.vertices}
    for a, b in G.edges:
        adj[a].append(b)
        adj[b].append(a)
    for v in adj:
        adj[v].sort()
    return adj


# -- excess quarks ------------------------------------------------------------


def excess_quarks(S: Sublattice) -> tuple[FiniteSet, ...]:
    """Quarks contained in the union of the remaining quarks."""
    masks = S.quark_masks
    out = []
    for i, q in enumerate(S.quarks):
        rest = 0
        for j, m in enumerate(masks):
            if j != i:
                rest |= m
        if masks[i] & ~rest == 0:
            out.append(q)
    return tuple(out)


def ufs_sufficient_disjoint_excess(S: Sublattice) -> bool:
    """True iff no two distinct excess quarks intersect.

    A true answer forces unique factorizations; the converse fails, so a
    false answer decides nothing.
    """
    excess = excess_quarks(S)
    return all(
        a.isdisjoint(b) for i, a in enumerate(excess) for b in excess[i + 1:]
    )


# -- shape recognition --------------------------------------------------------


def component_shape(G: PairingGraph, component: Iterable[int]) -> ComponentShape:
    """Classify one connected component of ``G``."""
    comp = tuple(sorted(component))
    if comp not in {tuple(c) for c in G.components}:
        raise NotAComponent(f"{list(comp)} is not a component of the graph")
    comp_set = set(comp)
    adj = {v: nbrs for v, nbrs in _adjacency(G).items() if v in comp_set}

    edge_count = sum(len(nbrs) for nbrs in adj.values()) // 2
    if edge_count == len(comp) - 1:
        diameter, path = _tree_diameter(adj)
        if diameter <= 2:
            kind = ComponentKind.TREE_DIAM_AT_MOST_2
        elif diameter == 3:
            kind = ComponentKind.TREE_DIAM_3
        elif diameter == 4:
            kind = ComponentKind.TREE_DIAM_4
        else:
            kind = ComponentKind.TREE_DEEPER
        return ComponentShape(kind, evidence=path, evidence_kind="diameter-path",
                              diameter=diameter)

    if all(len(nbrs) == 2 for nbrs in adj.values()):
        cycle = _find_cycle(adj, len(comp))
        if len(comp) == 3:
            return ComponentShape(ComponentKind.CYCLE_C3, evidence=cycle,
                                  evidence_kind="cycle")
        if len(comp) == 5:
            return ComponentShape(ComponentKind.CYCLE_C5, evidence=cycle,
                                  evidence_kind="cycle")
        if len(comp) == 4:
            a = comp[0]
            middles = tuple(adj[a])
            c = next(v for v in comp if v != a and v not in adj[a])
            return ComponentShape(ComponentKind.CANDY, evidence=cycle,
                                  evidence_kind="cycle", centers=(a, c),
                                  middles=middles)
        return ComponentShape(ComponentKind.OTHER, *_other_evidence(adj))

    candy = _try_candy(adj)
    if candy is not None:
        return candy
    return ComponentShape(ComponentKind.OTHER, *_other_evidence(adj))


def _try_candy(adj: dict[int, list[int]]) -> ComponentShape | None:
    """Recognize the two-centers-through-middles shape of a candy graph."""
    hubs = sorted(v for v, nbrs in adj.items() if len(nbrs) >= 3)
    if not hubs or len(hubs) > 2:
        return None
    if len(hubs) == 2:
        a, c = hubs
        if c in adj[a]:
            return None
    else:
        a = hubs[0]
        mids = [w for w in adj[a] if len(adj[w]) == 2]
        seconds = {next(u for u in adj[w] if u != a) for w in mids}
        if len(seconds) != 1:
            return None
        c = seconds.pop()
        if c == a or c in adj[a]:
            return None
    middles = sorted(set(adj[a]) & set(adj[c]))
    if len(middles) < 2:
        return None
    if any(len(adj[b]) != 2 for b in middles):
        return None
    middle_set = set(middles)
    for v, nbrs in adj.items():
        if v in (a, c) or v in middle_set:
            continue
        if len(nbrs) != 1 or nbrs[0] not in (a, c):
            return None
    cycle = _find_cycle(adj, 4)
    centers = (a, c) if a < c else (c, a)
    return ComponentShape(ComponentKind.CANDY, evidence=cycle, evidence_kind="cycle",
                          centers=centers, middles=tuple(middles))


def _other_evidence(adj: dict[int, list[int]]) -> tuple[tuple[int, ...], str]:
    for kind, finder, size in (("C3", _find_cycle, 3), ("C5", _find_cycle, 5),
                               ("P5", _find_path, 5)):
        witness = finder(adj, size)
        if witness:
            return witness, kind
    return (), ""


def _bfs_distances(adj: dict[int, list[int]], src: int) -> dict[int, int]:
    dist = {src: 0}
    frontier = [src]
    while frontier:
        nxt = []
        for v in frontier:
            for w in adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


def _tree_diameter(adj: dict[int, list[int]]) -> tuple[int, tuple[int, ...]]:
    """Diameter of a tree plus the lexicographically smallest diameter path."""
    if len(adj) == 1:
        v = next(iter(adj))
        return 0, (v,)
    dist_from = {v: _bfs_distances(adj, v) for v in adj}
    diameter = max(max(d.values()) for d in dist_from.values())
    best: tuple[int, ...] | None = None
    for u in sorted(adj):
        for v in sorted(adj):
            if dist_from[u].get(v) != diameter:
                continue
            dist_v = dist_from[v]
            path = [u]
            cur = u
            while cur != v:
                cur = min(w for w in adj[cur] if dist_v[w] == dist_v[cur] - 1)
                path.append(cur)
            candidate = tuple(path)
            if best is None or candidate < best:
                best = candidate
    assert best is not None
    return diameter, best


def _find_path(adj: dict[int, list[int]], length: int) -> tuple[int, ...] | None:
    """Lexicographically smallest simple path with ``length`` edges, if any."""

    def extend(path: list[int], used: set[int]) -> tuple[int, ...] | None:
        if len(path) == length + 1:
            return tuple(path)
        for w in adj[path[-1]]:
            if w not in used:
                path.append(w)
                used.add(w)
                found = extend(path, used)
                if found:
                    return found
                path.pop()
                used.remove(w)
        return None

    for v in sorted(adj):
        found = extend([v], {v})
        if found:
            return found
    return None


def _find_cycle(adj: dict[int, list[int]], length: int) -> tuple[int, ...] | None:
    """Lexicographically smallest cycle with ``length`` edges, if any."""
    if length < 3:
        return None

    def extend(path: list[int], used: set[int]) -> tuple[int, ...] | None:
        if len(path) == length:
            return tuple(path) if path[0] in adj[path[-1]] else None
        for w in adj[path[-1]]:
            if w not in used:
                path.append(w)
                used.add(w)
                found = extend(path, used)
                if found:
                    return found
                path.pop()
                used.remove(w)
        return None

    for v in sorted(adj):
        found = extend([v], {v})
        if found:
            return found
    return None


def forbidden_subgraph_scan(G: PairingGraph) -> tuple[Finding, ...]:
    """Report one witness per forbidden-structure class present in ``G``.

    Classes scanned: 3-cycles, length-4 paths, 4-cycles, length-5 paths and
    5-cycles (path/cycle length counted in edges).  Witnesses are the
    lexicographically smallest vertex sequences.
    """
    adj = _adjacency(G)
    findings = []
    for kind, finder, size in (("C3", _find_cycle, 3), ("P4", _find_path, 4),
                               ("C4", _find_cycle, 4), ("P5", _find_path, 5),
                               ("C5", _find_cycle, 5)):
        witness = finder(adj, size)
        if witness:
            findings.append(Finding(kind, witness))
    return tuple(findings)


# -- structural classification ------------------------------------------------


def component_shapes(S: Sublattice) -> tuple[ComponentShape, ...]:
    """Shapes of all pairing-graph components, in component order."""
    G = pairing_graph(S)
    return tuple(component_shape(G, comp) for comp in G.components)


def classify_structural(S: Sublattice) -> ClassificationReport:
    """Classify from the pairing graph instead of enumerating factorizations.

    Requires every non-isolated quark to have size exactly 2 (isolated
    quarks of any size never change the flags and are skipped).  Elasticity
    is left unknown; this classifier decides flags only.
    """
    shapes = component_shapes(S)
    ufs = all(s.kind in UFS_KINDS for s in shapes)
    hfs = all(s.kind in HFS_KINDS for s in shapes)
    factorizable = S.is_factorizable()
    return ClassificationReport(
        factorizable=factorizable,
        ffs=factorizable,
        ufs=ufs,
        hfs=hfs,
        lfs=ufs,
        elasticity=None,
        witnesses={},
        method="structural",
    )


# -- DOT export ---------------------------------------------------------------

_PALETTE = ("#4c72b0", "#dd8452", "#55a868", "#c44e52",
            "#8172b3", "#937860", "#da8bc3", "#8c8c8c")


def quarkic_dot(G: QuarkicGraph) -> str:
    """Byte-stable DOT rendering, components colored by index."""
    comp_of = {v: i for i, comp in enumerate(G.components) for v in comp}
    lines = ["graph quarkic {", "  node [shape=box];"]
    for v in G.vertices:
        lines.append(f'  "{v}" [color="{_PALETTE[comp_of[v] % len(_PALETTE)]}"];')
    for a, b in G.edges:
        color = _PALETTE[comp_of[a] % len(_PALETTE)]
        lines.append(f'  "{a}" -- "{b}" [color="{color}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def pairing_dot(G: PairingGraph) -> str:
    """Byte-stable DOT rendering; candy-graph centers drawn as double circles."""
    comp_of = {v: i for i, comp in enumerate(G.components) for v in comp}
    centers: set[int] = set()
    for comp in G.components:
        shape = component_shape(G, comp)
        if shape.kind is ComponentKind.CANDY:
            centers.update(shape.centers)
    lines = ["graph pairing {"]
    for v in G.vertices:
        attrs = [f'color="{_PALETTE[comp_of[v] % len(_PALETTE)]}"']
        if v in centers:
            attrs.append("shape=doublecircle")
        lines.append(f'  {v} [{", ".join(attrs)}];')
    for a, b in G.edges:
        color = _PALETTE[comp_of[a] % len(_PALETTE)]
        lines.append(f'  {a} -- {b} [color="{color}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
