"""Zero-divisor graphs of Z_n, explicit and compressed.

The explicit graph puts a vertex on every nonzero zero divisor of Z_n
(residues v with gcd(v, n) > 1) and an edge between u != w whenever
u*w = 0 (mod n).  The compressed form groups vertices by their divisor
class d = gcd(v, n): adjacency between classes decides adjacency between
all their members, so degree and size analyses run on the divisor lattice
and scale to n around 10^12 without touching individual residues.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .arith import Factorization, divisors, factorize, totient
from .errors import NoZeroDivisorsError, ResourceLimitError

# Guards for materializing the explicit graph.
MAX_EXPLICIT_VERTICES = 200_000
MAX_EXPLICIT_EDGES = 50_000_000


@dataclass(frozen=True)
class ZeroDivisorGraph:
    """Explicit zero-divisor graph: sorted vertices, sorted neighbor lists."""

    n: int
    vertices: tuple[int, ...]
    adjacency: dict[int, tuple[int, ...]]
    edge_count: int

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (smaller, larger) pairs in ascending order."""
        return [
            (u, w) for u in self.vertices for w in self.adjacency[u] if u < w
        ]


@dataclass(frozen=True)
class CompressedZdg:
    """Divisor-class quotient of the zero-divisor graph.

    classes holds (d, size) with size = totient(n/d) for every proper
    divisor 1 < d < n; class_adjacency holds unordered pairs (d, e), d < e,
    with d*e = 0 (mod n).  A class whose members are adjacent to each other
    (d*d = 0 mod n) is flagged in self_saturated.
    """

    n: int
    classes: tuple[tuple[int, int], ...]
    class_adjacency: tuple[tuple[int, int], ...]
    self_saturated: dict[int, bool]

    def sizes(self) -> dict[int, int]:
        return dict(self.classes)

    def num_vertices(self) -> int:
        return sum(size for _, size in self.classes)

    def num_edges(self) -> int:
        """Edge count of the explicit graph this compression describes."""
        size = self.sizes()
        total = sum(size[d] * size[e] for d, e in self.class_adjacency)
        for d, sat in self.self_saturated.items():
            if sat:
                total += size[d] * (size[d] - 1) // 2
        return total


@dataclass(frozen=True)
class DegreeProfile:
    """Vertex degrees of the explicit graph, aggregated per divisor class."""

    n: int
    class_degrees: dict[int, int]
    degree_counts: dict[int, int]

    @property
    def min_degree(self) -> int:
        return min(self.class_degrees.values())

    @property
    def num_vertices(self) -> int:
        return sum(self.degree_counts.values())

    @property
    def edge_count(self) -> int:
        return sum(d * c for d, c in self.degree_counts.items()) // 2


def _composite_factorization(n: int) -> Factorization:
    f = factorize(n)
    if not f.is_composite():
        raise NoZeroDivisorsError(
            f"Z_{n} has no nonzero zero divisors; need composite n >= 4"
        )
    return f


def build_compressed(n: int) -> CompressedZdg:
    """Compress Z_n's zero-divisor graph onto its divisor classes.

    Requires composite n >= 4.  Cost is polynomial in the divisor count,
    independent of n itself.
    """
    f = _composite_factorization(n)
    divs = divisors(f)
    proper = divs[1:-1]  # 1 < d < n
    sizes = {d: totient(factorize(n // d)) for d in proper}
    classes = tuple((d, sizes[d]) for d in proper)
    adjacency = tuple(
        (d, e)
        for i, d in enumerate(proper)
        for e in proper[i + 1 :]
        if (d * e) % n == 0
    )
    saturated = {d: (d * d) % n == 0 for d in proper}
    return CompressedZdg(n, classes, adjacency, saturated)


def degree_profile(c: CompressedZdg) -> DegreeProfile:
    """Per-class degrees and the whole-graph degree multiset.

    A vertex in class d is adjacent to every member of every partner class
    e with d*e = 0 (mod n), minus itself when its own class is a partner.
    """
    sizes = c.sizes()
    partners: dict[int, list[int]] = {d: [] for d in sizes}
    for d, e in c.class_adjacency:
        partners[d].append(e)
        partners[e].append(d)
    class_degrees = {}
    for d in sizes:
        deg = sum(sizes[e] for e in partners[d])
        if c.self_saturated[d]:
            deg += sizes[d] - 1
        class_degrees[d] = deg
    degree_counts: dict[int, int] = {}
    for d, size in c.classes:
        deg = class_degrees[d]
        degree_counts[deg] = degree_counts.get(deg, 0) + size
    return DegreeProfile(c.n, class_degrees, degree_counts)


def class_members(n: int, d: int) -> list[int]:
    """Residues v in (0, n) with gcd(v, n) = d, ascending."""
    return [v for v in range(d, n, d) if gcd(v // d, n // d) == 1]


def build_explicit(n: int) -> ZeroDivisorGraph:
    """Materialize the zero-divisor graph of Z_n.

    Refuses (ResourceLimitError) when the graph would exceed
    MAX_EXPLICIT_VERTICES vertices or MAX_EXPLICIT_EDGES edges; the limits
    are computed from the compressed form before any allocation.
    """
    c = build_compressed(n)
    num_vertices = c.num_vertices()
    if num_vertices > MAX_EXPLICIT_VERTICES:
        raise ResourceLimitError(
            f"n={n}: {num_vertices} vertices exceed the explicit-graph limit "
            f"of {MAX_EXPLICIT_VERTICES}"
        )
    num_edges = c.num_edges()
    if num_edges > MAX_EXPLICIT_EDGES:
        raise ResourceLimitError(
            f"n={n}: {num_edges} edges exceed the explicit-graph limit "
            f"of {MAX_EXPLICIT_EDGES}"
        )

    # one pass over residues buckets every vertex into its class, ascending
    members: dict[int, list[int]] = {d: [] for d, _ in c.classes}
    for v in range(2, n):
        g = gcd(v, n)
        if g > 1:
            members[g].append(v)

    adj: dict[int, list[int]] = {}
    for d, _ in c.classes:
        for v in members[d]:
            adj[v] = []
    for d, e in c.class_adjacency:
        md, me = members[d], members[e]
        for u in md:
            adj[u].extend(me)
        for w in me:
            adj[w].extend(md)
    for d, sat in c.self_saturated.items():
        if sat:
            ms = members[d]
            for i, u in enumerate(ms):
                adj[u].extend(ms[:i])
                adj[u].extend(ms[i + 1 :])

    vertices = tuple(sorted(adj))
    adjacency = {}
    for v in vertices:
        nbrs = adj[v]
        nbrs.sort()
        adjacency[v] = tuple(nbrs)
    graph = ZeroDivisorGraph(n, vertices, adjacency, num_edges)
    assert sum(len(a) for a in adjacency.values()) == 2 * num_edges
    return graph


def export_dot(g: ZeroDivisorGraph, color_by_class: bool = False) -> str:
    """Graphviz DOT text; every edge appears once, smaller endpoint first.

    With color_by_class, vertices in the same divisor class share a fill
    color (HSV, spread over the class list).
    """
    lines = [f"graph zdg_{g.n} {{"]
    if color_by_class:
        class_of = {v: gcd(v, g.n) for v in g.vertices}
        palette = sorted(set(class_of.values()))
        hues = {d: i / len(palette) for i, d in enumerate(palette)}
        for v in g.vertices:
            h = hues[class_of[v]]
            lines.append(
                f'  {v} [style=filled, fillcolor="{h:.3f} 0.450 0.950"];'
            )
    else:
        for v in g.vertices:
            lines.append(f"  {v};")
    for u in g.vertices:
        for w in g.adjacency[u]:
            if u < w:
                lines.append(f"  {u} -- {w};")
    lines.append("}")
    return "\n".join(lines) + "\n"
