"""Structural predicates: bipartiteness, odd-cycle pair classification,
bridges, and edge cuts.

The class split tests whether a graph contains two vertex-disjoint odd
cycles whose lengths sum to 2 mod 4; graphs without such a pair are
``CLASS1``, the rest ``CLASS2`` with a witness pair. Cycle enumeration is
exponential in general, so the split is limited to n <= 12 (cycle space
rank stays tiny for the sparse censuses this serves).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import NotAnEdgeError, ScaleError
from .graphs import Edge, Graph, delete_edges

MAX_CLASSIFY_VERTICES = 12


class ClassKind(enum.Enum):
    CLASS1 = "class1"
    CLASS2 = "class2"


@dataclass(frozen=True)
class ClassLabel:
    kind: ClassKind
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None = None


@dataclass(frozen=True)
class BipartiteCheck:
    bipartite: bool
    coloring: tuple[int, ...] | None = None  # 0/1 per vertex when bipartite
    odd_cycle: tuple[int, ...] | None = None  # vertex sequence otherwise

    def __bool__(self) -> bool:
        return self.bipartite


def is_bipartite(g: Graph) -> BipartiteCheck:
    """BFS two-colouring; on failure returns a simple odd cycle as witness."""
    color = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            nxt = []
            for v in queue:
                for u in g.neighbors(v):
                    if color[u] == -1:
                        color[u] = color[v] ^ 1
                        parent[u] = v
                        depth[u] = depth[v] + 1
                        nxt.append(u)
                    elif color[u] == color[v]:
                        return BipartiteCheck(
                            False, None, _odd_cycle_from_conflict(parent, depth, v, u)
                        )
            queue = nxt
    return BipartiteCheck(True, tuple(color), None)


def _odd_cycle_from_conflict(parent, depth, v, u) -> tuple[int, ...]:
    """Shrink the closed walk through the BFS tree edge-conflict to a cycle."""
    path_v, path_u = [v], [u]
    a, b = v, u
    while depth[a] > depth[b]:
        a = parent[a]
        path_v.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        path_u.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        path_v.append(a)
        path_u.append(b)
    # path_v ends at the meeting vertex; cycle = v..lca..u, plus edge (u,v)
    return tuple(path_v + path_u[-2::-1])


def simple_cycles(g: Graph) -> list[tuple[int, ...]]:
    """All simple cycles as vertex sequences (each once, smallest vertex first)."""
    cycles: list[tuple[int, ...]] = []
    for s in range(g.n):
        stack = [(s, 1 << s, (s,))]
        while stack:
            v, mask, path = stack.pop()
            for u in g.neighbors(v):
                if u == s and len(path) >= 3 and path[1] < path[-1]:
                    cycles.append(path)
                elif u > s and not mask >> u & 1:
                    stack.append((u, mask | 1 << u, path + (u,)))
    return cycles


def _cycle_edges(path: tuple[int, ...]) -> frozenset[Edge]:
    out = set()
    for i, v in enumerate(path):
        u = path[(i + 1) % len(path)]
        out.add((min(u, v), max(u, v)))
    return frozenset(out)


def classify(g: Graph, *, disjointness: str = "vertex") -> ClassLabel:
    """Split by presence of two disjoint odd cycles with length sum 2 mod 4.

    ``disjointness`` selects vertex-disjoint (default) or edge-disjoint
    pairing; the vertex reading is the one the family checks rely on.
    """
    if g.n > MAX_CLASSIFY_VERTICES:
        raise ScaleError(
            f"classification supports n <= {MAX_CLASSIFY_VERTICES}, got n={g.n}"
        )
    if disjointness not in ("vertex", "edge"):
        raise ValueError(f"unknown disjointness {disjointness!r}")
    odd = [c for c in simple_cycles(g) if len(c) % 2 == 1]
    for i in range(len(odd)):
        mask_i = 0
        for v in odd[i]:
            mask_i |= 1 << v
        edges_i = _cycle_edges(odd[i]) if disjointness == "edge" else None
        for j in range(i + 1, len(odd)):
            if (len(odd[i]) + len(odd[j])) % 4 != 2:
                continue
            if disjointness == "vertex":
                mask_j = 0
                for v in odd[j]:
                    mask_j |= 1 << v
                if mask_i & mask_j:
                    continue
            else:
                if edges_i & _cycle_edges(odd[j]):
                    continue
            return ClassLabel(ClassKind.CLASS2, (odd[i], odd[j]))
    return ClassLabel(ClassKind.CLASS1, None)


def bridges(g: Graph) -> list[Edge]:
    """All cut edges, by the standard low-link computation; sorted output."""
    disc = [-1] * g.n
    low = [0] * g.n
    out: list[Edge] = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        # iterative DFS: stack of (v, parent_edge_vertex, neighbor iterator)
        stack = [(root, -1, iter(g.neighbors(root)))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, pv, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] == -1:
                    disc[u] = low[u] = timer
                    timer += 1
                    stack.append((u, v, iter(g.neighbors(u))))
                    advanced = True
                    break
                elif u != pv:
                    low[v] = min(low[v], disc[u])
                # u == pv: simple graphs have no parallel edges; skip the tree edge
            if not advanced:
                stack.pop()
                if stack:
                    w = stack[-1][0]
                    low[w] = min(low[w], low[v])
                    if low[v] > disc[w]:
                        out.append((min(v, w), max(v, w)))
    return sorted(out)


def is_edge_cut(g: Graph, edges) -> bool:
    """True iff deleting ``edges`` increases the number of components."""
    edges = list(edges)
    for u, v in edges:
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise NotAnEdgeError(f"({u},{v}) is not an edge of the graph")
    if not edges:
        return False
    return delete_edges(g, edges).component_count() > g.component_count()
