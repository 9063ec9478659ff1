"""Dense bitset graph core, verification predicates, exact solver, formats.

Adjacency rows are Python ints used as bitsets, which keeps neighborhood
intersections (triangle counting, branch-and-bound candidate filtering)
single machine operations per word.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field


def popcount(x: int) -> int:
    return x.bit_count()


def bits(x: int):
    """Indices of set bits, ascending."""
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


class Graph:
    """Simple undirected graph on vertices 0..n-1 with bitset adjacency."""

    def __init__(self, n: int, adj=None, labels=None):
        self.n = n
        self.adj = list(adj) if adj is not None else [0] * n
        self.labels = labels

    @classmethod
    def from_edges(cls, n, edges, labels=None):
        g = cls(n, labels=labels)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    def add_edge(self, u, v):
        if u == v:
            raise ValueError("self-loops are not allowed")
        self._check_vertex(u)
        self._check_vertex(v)
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u

    def _check_vertex(self, v):
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range [0, {self.n})")

    def has_edge(self, u, v) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v) -> int:
        return popcount(self.adj[v])

    def num_edges(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def edges(self):
        for u in range(self.n):
            higher = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(higher):
                yield (u, v)

    def neighbors(self, v):
        return list(bits(self.adj[v]))

    def check_symmetric(self):
        for u in range(self.n):
            if self.adj[u] >> u & 1:
                raise AssertionError(f"loop at vertex {u}")
        for u, v in self.edges():
            if not self.adj[v] >> u & 1:
                raise AssertionError(f"asymmetric edge ({u},{v})")

    def __eq__(self, other):
        return (isinstance(other, Graph) and self.n == other.n
                and self.adj == other.adj)

    # -- predicates --------------------------------------------------------

    def is_independent(self, S):
        """None if S is independent, else one violating edge (u, v)."""
        S = list(S)
        for v in S:
            self._check_vertex(v)
        mask = 0
        for v in S:
            mask |= 1 << v
        for v in S:
            inside = self.adj[v] & mask
            if inside:
                return (v, next(bits(inside)))
        return None

    def is_regular(self, k) -> bool:
        return all(self.degree(v) == k for v in range(self.n))

    def induced(self, S) -> "Graph":
        """Induced subgraph; vertex i of the result is the i-th vertex of S.

        Labels carry over (falling back to the original vertex id).
        """
        S = sorted(set(S))
        for v in S:
            self._check_vertex(v)
        pos = {v: i for i, v in enumerate(S)}
        g = Graph(len(S))
        for i, v in enumerate(S):
            row = 0
            for w in bits(self.adj[v]):
                j = pos.get(w)
                if j is not None:
                    row |= 1 << j
            g.adj[i] = row
        src = self.labels if self.labels is not None else list(range(self.n))
        g.labels = [src[v] for v in S]
        return g

    # -- triangles and girth -----------------------------------------------

    def triangle_count(self) -> int:
        total = 0
        for u, v in self.edges():
            common = self.adj[u] & self.adj[v]
            total += popcount(common >> (v + 1) << (v + 1))
        return total

    def triangles(self):
        """All triangles as sorted triples u < v < w, lexicographic order."""
        for u, v in self.edges():
            common = self.adj[u] & self.adj[v]
            for w in bits(common >> (v + 1) << (v + 1)):
                yield (u, v, w)

    def max_common_neighbors(self) -> int:
        """Largest number of common neighbors over all vertex pairs."""
        best = 0
        for u in range(self.n):
            for v in range(u + 1, self.n):
                best = max(best, popcount(self.adj[u] & self.adj[v]))
        return best

    def girth(self):
        """Length of a shortest cycle; math.inf for forests.

        BFS from every vertex; the shortest cycle through the root is
        detected at the first non-tree edge between visited vertices.
        """
        best = math.inf
        nbrs = [self.neighbors(v) for v in range(self.n)]
        for root in range(self.n):
            dist = {root: 0}
            parent = {root: -1}
            frontier = [root]
            d = 0
            while frontier and 2 * d + 1 < best:
                nxt = []
                for u in frontier:
                    for w in nbrs[u]:
                        if w not in dist:
                            dist[w] = d + 1
                            parent[w] = u
                            nxt.append(w)
                        elif parent[u] != w and dist[w] >= d:
                            # cross (dist equal) or forward (d+1) edge
                            best = min(best, dist[w] + d + 1)
                frontier = nxt
                d += 1
        return best


# -- exact maximum independent set ------------------------------------------

@dataclass
class SolveBudget:
    max_nodes: int = 10 ** 8
    time_cap: float = math.inf

    def __post_init__(self):
        if self.max_nodes <= 0 or self.time_cap <= 0:
            raise ValueError("budget must be positive")


@dataclass
class MISResult:
    size: int
    vertices: list
    status: str  # "optimal" | "budget_exhausted"
    nodes: int = 0


def _clique_cover_bound(adj, cand):
    """Greedy clique-cover upper bound on the independence number of cand."""
    bound = 0
    rest = cand
    while rest:
        v = (rest & -rest).bit_length() - 1
        clique_members = 1 << v
        grow = rest & adj[v]
        while grow:
            w = (grow & -grow).bit_length() - 1
            clique_members |= 1 << w
            grow &= adj[w]
        rest &= ~clique_members
        bound += 1
    return bound


def max_independent_set(g: Graph, budget: SolveBudget | None = None,
                        initial=None) -> MISResult:
    """Exact maximum independent set by bitset branch-and-bound.

    Branches on a maximum-degree candidate vertex (least index breaks
    ties); the bound is a greedy clique cover of the candidate set.
    Deterministic: identical inputs give identical outputs.  `initial`
    seeds the incumbent with a known independent set.
    """
    if budget is None:
        budget = SolveBudget()
    adj = g.adj
    n = g.n
    full = (1 << n) - 1

    best_set = 0
    if initial:
        witness = g.is_independent(initial)
        if witness is not None:
            raise ValueError(f"initial set is not independent: edge {witness}")
        for v in initial:
            best_set |= 1 << v
    best = [popcount(best_set), best_set]

    t0 = time.monotonic()
    nodes = [0]
    exhausted = [False]

    def dfs(chosen: int, csize: int, cand: int):
        if exhausted[0]:
            return
        nodes[0] += 1
        if nodes[0] > budget.max_nodes or (
                nodes[0] % 4096 == 0
                and time.monotonic() - t0 > budget.time_cap):
            exhausted[0] = True
            return
        if not cand:
            if csize > best[0]:
                best[0], best[1] = csize, chosen
            return
        if csize + _clique_cover_bound(adj, cand) <= best[0]:
            return
        # max-degree candidate (degree within cand), least index on ties
        v, vdeg = -1, -1
        rest = cand
        while rest:
            u = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            d = popcount(adj[u] & cand)
            if d > vdeg:
                v, vdeg = u, d
        # include v
        dfs(chosen | (1 << v), csize + 1, cand & ~(adj[v] | (1 << v)))
        # exclude v
        dfs(chosen, csize, cand & ~(1 << v))

    dfs(0, 0, full)
    status = "budget_exhausted" if exhausted[0] else "optimal"
    return MISResult(best[0], sorted(bits(best[1])), status, nodes[0])


def greedy_extend(g: Graph, S, candidates):
    """Extend an independent set greedily over candidates in given order."""
    witness = g.is_independent(S)
    if witness is not None:
        raise ValueError(f"input set is not independent: edge {witness}")
    chosen = list(S)
    mask = 0
    for v in chosen:
        mask |= 1 << v
    blocked = 0
    for v in chosen:
        blocked |= g.adj[v]
    for v in candidates:
        b = 1 << v
        if not (mask & b) and not (blocked & b):
            chosen.append(v)
            mask |= b
            blocked |= g.adj[v]
    return chosen


# -- interchange formats -----------------------------------------------------

def _graph6_size_bytes(n):
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63
                                   for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("graph too large for graph6")


def to_graph6(g: Graph) -> bytes:
    """Header-less graph6: upper triangle column-wise, 6 bits per byte."""
    out = bytearray(_graph6_size_bytes(g.n))
    acc, nb = 0, 0
    for v in range(1, g.n):
        col = g.adj[v]
        for u in range(v):
            acc = acc << 1 | (col >> u & 1)
            nb += 1
            if nb == 6:
                out.append(acc + 63)
                acc, nb = 0, 0
    if nb:
        out.append((acc << (6 - nb)) + 63)
    return bytes(out)


def from_graph6(data: bytes) -> Graph:
    data = bytes(data).strip()
    pos = 0
    if data[pos] == 126:
        if data[pos + 1] == 126:
            vals = [b - 63 for b in data[pos + 2:pos + 8]]
            n = 0
            for v in vals:
                n = n << 6 | v
            pos += 8
        else:
            vals = [b - 63 for b in data[pos + 1:pos + 4]]
            n = vals[0] << 12 | vals[1] << 6 | vals[2]
            pos += 4
    else:
        n = data[pos] - 63
        pos += 1
    g = Graph(n)
    bitstream = []
    for b in data[pos:]:
        v = b - 63
        if not 0 <= v < 64:
            raise ValueError("invalid graph6 byte")
        bitstream.extend((v >> s) & 1 for s in range(5, -1, -1))
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bitstream[k]:
                g.add_edge(u, v)
            k += 1
    return g


def to_dimacs(g: Graph) -> bytes:
    lines = [f"p edge {g.n} {g.num_edges()}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return ("\n".join(lines) + "\n").encode()


def from_dimacs(data: bytes) -> Graph:
    g = None
    for raw in bytes(data).decode().splitlines():
        tok = raw.split()
        if not tok or tok[0] == "c":
            continue
        if tok[0] == "p":
            g = Graph(int(tok[2]))
        elif tok[0] == "e":
            g.add_edge(int(tok[1]) - 1, int(tok[2]) - 1)
    if g is None:
        raise ValueError("missing DIMACS problem line")
    return g


def to_edgelist_csv(g: Graph) -> bytes:
    lines = ["u,v"]
    lines.extend(f"{u},{v}" for u, v in g.edges())
    return ("\n".join(lines) + "\n").encode()


def from_edgelist_csv(data: bytes, n=None) -> Graph:
    rows = bytes(data).decode().splitlines()[1:]
    edges = [tuple(int(t) for t in r.split(",")) for r in rows if r.strip()]
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return Graph.from_edges(n, edges)


_EXPORTERS = {"graph6": to_graph6, "dimacs": to_dimacs,
              "edgelist_csv": to_edgelist_csv, "csv": to_edgelist_csv}


def export(g: Graph, fmt: str) -> bytes:
    try:
        fn = _EXPORTERS[fmt]
    except KeyError:
        raise ValueError(f"unsupported format {fmt!r}; "
                         f"choose from {sorted(_EXPORTERS)}")
    return fn(g)
