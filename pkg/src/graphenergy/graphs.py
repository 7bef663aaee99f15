"""Immutable simple-graph value type and deterministic family constructors.

Graphs are stored as per-vertex adjacency bitsets (one machine word each),
capped at 62 vertices: that covers every family the inequality checks sample
(up to 40 vertices) while keeping single-byte graph6 headers, and bitset rows
keep enumeration and refinement fast.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field

from .errors import (
    FamilyParseError,
    InvalidFamilyError,
    NotAnEdgeError,
    SizeOverflowError,
)

MAX_VERTICES = 62

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    ``adj[v]`` is the neighbour bitset of v. All edit operations return new
    values; instances are safe to share across threads.
    """

    n: int
    adj: tuple[int, ...]
    e: int = field(default=-1)

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise SizeOverflowError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        deg_sum = 0
        for v, row in enumerate(self.adj):
            if row >> self.n:
                raise ValueError(f"adjacency row {v} references vertices >= {self.n}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            deg_sum += row.bit_count()
        if deg_sum % 2:
            raise ValueError("adjacency relation is not symmetric")
        if self.e == -1:
            object.__setattr__(self, "e", deg_sum // 2)
        elif self.e != deg_sum // 2:
            raise ValueError("cached edge count disagrees with adjacency")
        for v in range(self.n):
            for u in self._iter_bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise ValueError("adjacency relation is not symmetric")

    @staticmethod
    def _iter_bits(mask: int):
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        rows = [0] * n
        count = 0
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop ({u},{v}) rejected")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
            if not rows[u] >> v & 1:
                count += 1
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), count)

    def edges(self) -> list[Edge]:
        return [
            (u, v)
            for u in range(self.n)
            for v in self._iter_bits(self.adj[u] >> (u + 1) << (u + 1))
        ]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(self._iter_bits(self.adj[v]))

    def component_masks(self) -> list[int]:
        """Connected components as vertex bitsets, ordered by smallest member."""
        seen = 0
        comps = []
        full = (1 << self.n) - 1
        while seen != full:
            start = ((~seen) & full) & -((~seen) & full)
            comp = start
            frontier = start
            while frontier:
                grow = 0
                for v in self._iter_bits(frontier):
                    grow |= self.adj[v]
                frontier = grow & ~comp
                comp |= grow
            comps.append(comp)
            seen |= comp
        return comps

    def component_count(self) -> int:
        return len(self.component_masks())

    def is_connected(self) -> bool:
        return self.component_count() == 1

    def relabeled(self, perm) -> "Graph":
        """Image under ``perm``: old vertex v becomes ``perm[v]``."""
        rows = [0] * self.n
        for v in range(self.n):
            m = 0
            for u in self._iter_bits(self.adj[v]):
                m |= 1 << perm[u]
            rows[perm[v]] = m
        return Graph(self.n, tuple(rows), self.e)

    def adjacency_matrix(self):
        import numpy as np

        a = np.zeros((self.n, self.n), dtype=np.float64)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1.0
        return a


def count_triangles(g: Graph) -> int:
    """Brute-force triangle count (oracle for coefficient identities)."""
    return sum(
        1
        for a, b, c in itertools.combinations(range(g.n), 3)
        if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
    )


def make_s_graph(n: int, e: int) -> Graph:
    """Star on n vertices (centre 0) plus e-n+1 edges from vertex 1 to 2..e-n+2.

    Every extra edge closes a triangle through the centre, so the result has
    exactly e-n+1 triangles.
    """
    if n < 3:
        raise InvalidFamilyError(f"S({n},{e}): requires n >= 3")
    if e < n - 1:
        raise InvalidFamilyError(f"S({n},{e}): requires e >= n-1 = {n - 1}")
    if e > 2 * n - 3:
        raise InvalidFamilyError(f"S({n},{e}): requires e <= 2n-3 = {2 * n - 3}")
    edges = [(0, v) for v in range(1, n)]
    edges += [(1, v) for v in range(2, e - n + 3)]
    return Graph.from_edges(n, edges)


def make_b_graph(n: int, e: int) -> Graph:
    """Bipartite graph with parts {0,1} and {2..n-1}; 0 complete to the big side.

    Vertex 1 is joined to the lowest-indexed e-(n-2) vertices of the big side;
    any other choice is isomorphic, so the deterministic one loses nothing.
    """
    if n < 3:
        raise InvalidFamilyError(f"B({n},{e}): requires n >= 3")
    if e < n - 1:
        raise InvalidFamilyError(f"B({n},{e}): requires e >= n-1 = {n - 1}")
    if e > 2 * (n - 2):
        raise InvalidFamilyError(f"B({n},{e}): requires e <= 2(n-2) = {2 * (n - 2)}")
    edges = [(0, w) for w in range(2, n)]
    edges += [(1, w) for w in range(2, 2 + e - (n - 2))]
    return Graph.from_edges(n, edges)


def make_star(n: int) -> Graph:
    if n < 2:
        raise InvalidFamilyError(f"Star({n}): requires n >= 2")
    return Graph.from_edges(n, [(0, v) for v in range(1, n)])


def make_cycle(k: int) -> Graph:
    if k < 3:
        raise InvalidFamilyError(f"C({k}): requires k >= 3")
    return Graph.from_edges(k, [(v, (v + 1) % k) for v in range(k)])


def make_complete(k: int) -> Graph:
    if k < 1:
        raise InvalidFamilyError(f"K({k}): requires k >= 1")
    return Graph.from_edges(k, itertools.combinations(range(k), 2))


def make_complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise InvalidFamilyError(f"K({a},{b}): requires both parts >= 1")
    return Graph.from_edges(a + b, [(u, a + w) for u in range(a) for w in range(b)])


def make_wheel(k: int) -> Graph:
    """Hub (vertex 0) joined to every vertex of a (k-1)-cycle; k vertices total."""
    if k < 4:
        raise InvalidFamilyError(f"W({k}): requires k >= 4")
    rim = [(v, v % (k - 1) + 1) for v in range(1, k)]
    hub = [(0, v) for v in range(1, k)]
    return Graph.from_edges(k, rim + hub)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    if g.n + h.n > MAX_VERTICES:
        raise SizeOverflowError(
            f"disjoint union needs {g.n + h.n} vertices; limit is {MAX_VERTICES}"
        )
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(g.n + h.n, tuple(rows), g.e + h.e)


def delete_edges(g: Graph, edges) -> Graph:
    rows = list(g.adj)
    for u, v in edges:
        if not (0 <= u < g.n and 0 <= v < g.n) or not rows[u] >> v & 1:
            raise NotAnEdgeError(f"({u},{v}) is not an edge of the graph")
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


# --- named-family specifications -------------------------------------------

_KINDS = {
    "star",
    "s",
    "b",
    "cycle",
    "complete",
    "complete_bipartite",
    "wheel",
    "union",
}


@dataclass(frozen=True)
class FamilySpec:
    """Symbolic description of a named graph family instance."""

    kind: str
    params: tuple[int, ...] = ()
    parts: tuple["FamilySpec", ...] = ()

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise InvalidFamilyError(f"unknown family kind {self.kind!r}")

    def describe(self) -> str:
        if self.kind == "union":
            return " + ".join(p.describe() for p in self.parts)
        name = {
            "star": "Star",
            "s": "S",
            "b": "B",
            "cycle": "C",
            "complete": "K",
            "complete_bipartite": "K",
            "wheel": "W",
        }[self.kind]
        return f"{name}({','.join(map(str, self.params))})"


def make_named(spec: FamilySpec) -> Graph:
    k = spec.kind
    p = spec.params
    if k == "union":
        if not spec.parts:
            raise InvalidFamilyError("empty union")
        g = make_named(spec.parts[0])
        for part in spec.parts[1:]:
            g = disjoint_union(g, make_named(part))
        return g
    arity = {"star": 1, "cycle": 1, "complete": 1, "wheel": 1, "s": 2, "b": 2,
             "complete_bipartite": 2}[k]
    if len(p) != arity:
        raise InvalidFamilyError(f"{k} expects {arity} parameter(s), got {len(p)}")
    if k == "star":
        return make_star(*p)
    if k == "s":
        return make_s_graph(*p)
    if k == "b":
        return make_b_graph(*p)
    if k == "cycle":
        return make_cycle(*p)
    if k == "complete":
        return make_complete(*p)
    if k == "complete_bipartite":
        return make_complete_bipartite(*p)
    return make_wheel(*p)


_TERM_RE = re.compile(r"^\s*([A-Za-z]+)\s*([\d\s,]*)\s*$")

_NAME_TO_KIND = {
    ("s", 2): "s",
    ("b", 2): "b",
    ("c", 1): "cycle",
    ("k", 1): "complete",
    ("k", 2): "complete_bipartite",
    ("kb", 2): "complete_bipartite",
    ("w", 1): "wheel",
    ("star", 1): "star",
}


def parse_family(text: str) -> FamilySpec:
    """Parse the family mini-language: "S 7 7", "K4", "Kb 3 3", "C3 + C3"...

    Terms are joined with "+" for disjoint unions; parameters may be separated
    by spaces or commas, or run straight after a single-letter name ("W5").
    """
    chunks = text.split("+")
    specs = []
    for chunk in chunks:
        m = _TERM_RE.match(chunk)
        if not m:
            raise FamilyParseError(f"cannot parse family term {chunk.strip()!r}")
        name = m.group(1)
        nums = re.findall(r"\d+", m.group(2))
        if not nums:
            raise FamilyParseError(f"family term {chunk.strip()!r} has no parameters")
        key = (name.lower(), len(nums))
        if key not in _NAME_TO_KIND:
            raise FamilyParseError(
                f"unknown family {name!r} with {len(nums)} parameter(s)"
            )
        specs.append(FamilySpec(_NAME_TO_KIND[key], tuple(int(x) for x in nums)))
    if len(specs) == 1:
        return specs[0]
    return FamilySpec("union", (), tuple(specs))


def family_graph(text: str) -> Graph:
    """Convenience: parse a family expression and build the graph."""
    return make_named(parse_family(text))
