"""Exact connectivity of zero-divisor graphs.

Vertex connectivity follows Menger: unit-capacity max-flow on the
vertex-split network, minimized over a sufficient pair family rooted at a
minimum-degree vertex (its non-neighbors, plus non-adjacent pairs inside
its neighborhood).  Edge connectivity is the minimum of s-t max-flows from
a fixed minimum-degree source; targets are restricted to a dominating set,
which preserves exactness (a cut smaller than the minimum degree strands a
dominated vertex on each side) while cutting the flow count by orders of
magnitude.

Cheap certified bounds (connectedness, articulation points, common-neighbor
counts) short-circuit flows whose value provably cannot lower the running
minimum; the returned values are exactly the Menger minima either way.

Everything also comes in an exhaustive flavor that enumerates deletion
subsets outright, as an independent cross-check at small sizes.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import ResourceLimitError

DEFAULT_SUBSET_BUDGET = 10_000_000

_NO_CUTOFF = 1 << 62


class _View:
    """Index-based adjacency snapshot of a graph-like object."""

    __slots__ = ("verts", "nbrs", "degs")

    def __init__(self, g):
        self.verts = list(g.vertices)
        index = {v: i for i, v in enumerate(self.verts)}
        self.nbrs = [[index[w] for w in g.adjacency[v]] for v in self.verts]
        self.degs = [len(a) for a in self.nbrs]


def _view_connected(view: _View) -> bool:
    nv = len(view.verts)
    seen = bytearray(nv)
    seen[0] = 1
    queue = [0]
    count = 1
    for u in queue:
        for w in view.nbrs[u]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                queue.append(w)
    return count == nv


def is_connected(g) -> bool:
    """BFS connectivity; a single-vertex graph counts as connected."""
    if not g.vertices:
        raise ValueError("graph has no vertices")
    return _view_connected(_View(g))


def min_degree(g) -> int:
    """Smallest vertex degree; 0 for a single-vertex graph."""
    return min(len(g.adjacency[v]) for v in g.vertices)


class _FlowNet:
    """Dinic's algorithm on unit capacities with arc-level undo.

    Arcs are stored flat; arc a and a^1 are mutual reverses.  max_flow
    augments one unit per path and stops as soon as the flow reaches the
    cutoff, recording touched arcs so a caller can roll back cheaply.
    """

    __slots__ = ("adj", "to", "cap", "init_cap")

    def __init__(self, num_nodes: int):
        self.adj: list[list[int]] = [[] for _ in range(num_nodes)]
        self.to: list[int] = []
        self.cap: list[int] = []
        self.init_cap: list[int] = []

    def add_pair(self, u: int, v: int, cap_uv: int, cap_vu: int) -> None:
        a = len(self.to)
        self.to.append(v)
        self.cap.append(cap_uv)
        self.to.append(u)
        self.cap.append(cap_vu)
        self.adj[u].append(a)
        self.adj[v].append(a + 1)

    def freeze(self) -> None:
        self.init_cap = self.cap[:]

    def restore(self, dirty: list[int]) -> None:
        cap, init = self.cap, self.init_cap
        for a in dirty:
            cap[a] = init[a]
            cap[a ^ 1] = init[a ^ 1]

    def max_flow(self, s: int, t: int, cutoff: int, dirty: list[int]) -> int:
        adj, to, cap = self.adj, self.to, self.cap
        nn = len(adj)
        flow = 0
        while flow < cutoff:
            level = [-1] * nn
            level[s] = 0
            queue = [s]
            for u in queue:
                lu = level[u] + 1
                for a in adj[u]:
                    if cap[a] > 0:
                        w = to[a]
                        if level[w] < 0:
                            level[w] = lu
                            queue.append(w)
            if level[t] < 0:
                break
            it = [0] * nn
            while flow < cutoff:
                # one augmenting path inside the level graph
                path: list[int] = []
                u = s
                found = False
                while True:
                    if u == t:
                        found = True
                        break
                    moved = False
                    au = adj[u]
                    while it[u] < len(au):
                        a = au[it[u]]
                        w = to[a]
                        if cap[a] > 0 and level[w] == level[u] + 1:
                            path.append(a)
                            u = w
                            moved = True
                            break
                        it[u] += 1
                    if moved:
                        continue
                    if u == s:
                        break
                    level[u] = -1  # dead end, prune for this phase
                    a = path.pop()
                    u = to[a ^ 1]
                    it[u] += 1
                if not found:
                    break
                for a in path:
                    cap[a] -= 1
                    cap[a ^ 1] += 1
                    dirty.append(a)
                flow += 1
        return flow

    def residual_reachable(self, s: int) -> bytearray:
        adj, to, cap = self.adj, self.to, self.cap
        seen = bytearray(len(adj))
        seen[s] = 1
        queue = [s]
        for u in queue:
            for a in adj[u]:
                if cap[a] > 0:
                    w = to[a]
                    if not seen[w]:
                        seen[w] = 1
                        queue.append(w)
        return seen


def _min_degree_root(view: _View) -> int:
    best = 0
    for i in range(1, len(view.verts)):
        if view.degs[i] < view.degs[best]:
            best = i
    return best


def _smallest_articulation(view: _View) -> int | None:
    """Smallest articulation vertex of a connected graph, or None."""
    nv = len(view.verts)
    nbrs = view.nbrs
    parent = [-1] * nv
    disc = [0] * nv
    low = [0] * nv
    disc[0] = low[0] = 1
    timer = 1
    stack: list[tuple[int, int]] = [(0, 0)]
    root_children = 0
    arts: list[int] = []
    while stack:
        u, pos = stack[-1]
        if pos < len(nbrs[u]):
            stack[-1] = (u, pos + 1)
            w = nbrs[u][pos]
            if disc[w] == 0:
                parent[w] = u
                timer += 1
                disc[w] = low[w] = timer
                stack.append((w, 0))
            elif w != parent[u] and disc[w] < low[u]:
                low[u] = disc[w]
        else:
            stack.pop()
            p = parent[u]
            if p >= 0:
                if low[u] < low[p]:
                    low[p] = low[u]
                if p == 0:
                    root_children += 1
                elif low[u] >= disc[p]:
                    arts.append(p)
    if root_children > 1:
        arts.append(0)
    return min(arts) if arts else None


def _sorted_edge(u: int, w: int) -> tuple[int, int]:
    return (u, w) if u < w else (w, u)


def _dominating_set(view: _View, root: int) -> list[int]:
    """Greedy dominating set that starts at root; deterministic tie-break."""
    nv = len(view.verts)
    uncovered = set(range(nv))
    chosen = [root]
    uncovered.discard(root)
    uncovered.difference_update(view.nbrs[root])
    while uncovered:
        best_i = -1
        best_cover = 0
        for i in range(nv):
            cover = 1 if i in uncovered else 0
            for j in view.nbrs[i]:
                if j in uncovered:
                    cover += 1
            if cover > best_cover:
                best_cover = cover
                best_i = i
        chosen.append(best_i)
        uncovered.discard(best_i)
        uncovered.difference_update(view.nbrs[best_i])
    return chosen


def edge_connectivity(g) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Exact edge connectivity with a witness edge cut.

    Returns 0 with an empty witness for disconnected or single-vertex
    graphs.  Flow targets range over a dominating set of the source, which
    is sufficient: were some cut smaller than every computed flow and the
    minimum degree, each of its sides would contain a vertex whose whole
    closed neighborhood sits inside that side, and the dominating set
    would have to meet both sides.
    """
    view = _View(g)
    nv = len(view.verts)
    if nv == 1 or not _view_connected(view):
        return 0, ()
    si = _min_degree_root(view)
    best = view.degs[si]
    s_res = view.verts[si]
    witness = tuple(
        sorted(_sorted_edge(s_res, view.verts[j]) for j in view.nbrs[si])
    )
    if best <= 1:
        return best, witness  # connected, so 1 is already exact
    net = _FlowNet(nv)
    for i in range(nv):
        for j in view.nbrs[i]:
            if i < j:
                net.add_pair(i, j, 1, 1)
    net.freeze()
    for ti in _dominating_set(view, si)[1:]:
        dirty: list[int] = []
        flow = net.max_flow(si, ti, best, dirty)
        if flow < best:
            best = flow
            seen = net.residual_reachable(si)
            witness = tuple(
                sorted(
                    _sorted_edge(view.verts[i], view.verts[j])
                    for i in range(nv)
                    for j in view.nbrs[i]
                    if i < j and seen[i] != seen[j]
                )
            )
        net.restore(dirty)
        if best <= 1:
            break
    return best, witness


def vertex_connectivity(g) -> tuple[int, tuple[int, ...]]:
    """Exact vertex connectivity with a witness cut.

    Conventions: 0 for disconnected or single-vertex graphs; a complete
    graph on m vertices yields m - 1 (deleting the witness leaves K_1).
    """
    view = _View(g)
    nv = len(view.verts)
    if nv == 1:
        return 0, ()
    if not _view_connected(view):
        return 0, ()
    num_edges = sum(view.degs) // 2
    if 2 * num_edges == nv * (nv - 1):
        return nv - 1, tuple(view.verts[: nv - 1])
    # connected and not complete, so nv >= 3 and some cut exists
    si = _min_degree_root(view)
    delta = view.degs[si]
    if delta == 1:
        return 1, (view.verts[view.nbrs[si][0]],)
    ap = _smallest_articulation(view)
    if ap is not None:
        return 1, (view.verts[ap],)
    lower = 2  # biconnected
    best = delta
    witness = tuple(view.verts[j] for j in view.nbrs[si])
    if best <= lower:
        return best, witness
    # vertex-split flow network: node 2i is i's in-side, 2i+1 its out-side
    net = _FlowNet(2 * nv)
    for i in range(nv):
        net.add_pair(2 * i, 2 * i + 1, 1, 0)
    for i in range(nv):
        for j in view.nbrs[i]:
            if i < j:
                net.add_pair(2 * i + 1, 2 * j, 1, 0)
                net.add_pair(2 * j + 1, 2 * i, 1, 0)
    net.freeze()
    nbr_sets = [set(a) for a in view.nbrs]

    def local_flow(a: int, b: int) -> None:
        nonlocal best, witness
        sa, sb = nbr_sets[a], nbr_sets[b]
        if len(sa) > len(sb):
            sa, sb = sb, sa
        common = 0
        for z in sa:
            if z in sb:
                common += 1
                if common >= best:
                    return  # that many disjoint 2-paths already
        dirty: list[int] = []
        flow = net.max_flow(2 * a + 1, 2 * b, best, dirty)
        if flow < best:
            best = flow
            seen = net.residual_reachable(2 * a + 1)
            witness = tuple(
                view.verts[i]
                for i in range(nv)
                if seen[2 * i] and not seen[2 * i + 1]
            )
        net.restore(dirty)

    root_nbrs = view.nbrs[si]
    root_set = nbr_sets[si]
    for b in range(nv):
        if best <= lower:
            break
        if b != si and b not in root_set:
            local_flow(si, b)
    for xi in range(len(root_nbrs)):
        if best <= lower:
            break
        for yi in range(xi + 1, len(root_nbrs)):
            if best <= lower:
                break
            x, y = root_nbrs[xi], root_nbrs[yi]
            if y not in nbr_sets[x]:
                local_flow(x, y)
    return best, witness


def _subset_budget(universe: int, max_size: int, budget: int, what: str) -> None:
    total = 0
    for k in range(max_size + 1):
        total += comb(universe, k)
        if total > budget:
            raise ResourceLimitError(
                f"exhaustive {what} enumeration needs more than "
                f"{budget} subsets"
            )


def exhaustive_vertex_connectivity(g, budget: int = DEFAULT_SUBSET_BUDGET) -> int:
    """Brute-force vertex connectivity by deleting subsets in size order.

    Success means the remainder is disconnected or a single vertex.  The
    enumeration is capped by the number of subsets up to the minimum
    degree (the answer never exceeds it); past the budget this raises
    ResourceLimitError rather than grind.
    """
    verts = list(g.vertices)
    adj = {v: g.adjacency[v] for v in verts}
    nv = len(verts)
    if nv == 1:
        return 0
    delta = min(len(adj[v]) for v in verts)
    _subset_budget(nv, delta, budget, "vertex-cut")
    for k in range(delta + 1):
        for cut in combinations(verts, k):
            cut_set = set(cut)
            keep = [v for v in verts if v not in cut_set]
            if len(keep) == 1:
                return k
            seen = {keep[0]}
            queue = [keep[0]]
            for u in queue:
                for w in adj[u]:
                    if w not in cut_set and w not in seen:
                        seen.add(w)
                        queue.append(w)
            if len(seen) != len(keep):
                return k
    raise AssertionError("connectivity must not exceed the minimum degree")


def exhaustive_edge_connectivity(g, budget: int = DEFAULT_SUBSET_BUDGET) -> int:
    """Brute-force edge connectivity by deleting edge subsets in size order.

    Success means the remainder is disconnected or has no edges left.
    """
    verts = list(g.vertices)
    adj = {v: g.adjacency[v] for v in verts}
    nv = len(verts)
    if nv == 1:
        return 0
    edges = sorted(
        (u, w) for u in verts for w in adj[u] if u < w
    )
    delta = min(len(adj[v]) for v in verts)
    _subset_budget(len(edges), delta, budget, "edge-cut")
    for k in range(delta + 1):
        for cut in combinations(edges, k):
            if k == len(edges):
                return k  # nothing left, graph is edgeless
            cut_set = set(cut)
            seen = {verts[0]}
            queue = [verts[0]]
            for u in queue:
                for w in adj[u]:
                    if w not in seen and _sorted_edge(u, w) not in cut_set:
                        seen.add(w)
                        queue.append(w)
            if len(seen) != nv:
                return k
    raise AssertionError("edge connectivity must not exceed the minimum degree")


@dataclass(frozen=True)
class ConnectivityReport:
    """All three connectivity quantities of one graph, with witnesses."""

    n: int
    num_vertices: int
    num_edges: int
    delta: int
    kappa_e: int
    kappa: int
    witness_vertex_cut: tuple[int, ...] | None
    witness_edge_cut: tuple[tuple[int, int], ...] | None


def connectivity_report(g) -> ConnectivityReport:
    """Compute min degree, edge and vertex connectivity in one pass."""
    delta = min_degree(g)
    kappa_e, edge_cut = edge_connectivity(g)
    kappa, vertex_cut = vertex_connectivity(g)
    nv = len(g.vertices)
    if nv >= 2:
        assert 0 <= kappa <= kappa_e <= delta, (g.n, kappa, kappa_e, delta)
    return ConnectivityReport(
        n=g.n,
        num_vertices=nv,
        num_edges=sum(len(g.adjacency[v]) for v in g.vertices) // 2,
        delta=delta,
        kappa_e=kappa_e,
        kappa=kappa,
        witness_vertex_cut=vertex_cut,
        witness_edge_cut=edge_cut,
    )
