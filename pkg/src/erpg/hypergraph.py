"""The 3-uniform hypergraph of triangles of ER_q.

Vertices are the non-absolute points; edges are the vertex triples of the
triangles of ER_q.  The edge count is q(q^2-1)/6.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .field import field_for_order
from .plane import ProjectivePlane
from .polarity import Polarity, build_er_graph


@dataclass
class TriangleHypergraph:
    q: int
    vertices: list   # indices into the plane's point list
    edges: list      # sorted triples of point indices, lexicographic
    labels: list     # point triples for every plane index

    def num_edges(self):
        return len(self.edges)


def build_hypergraph(q) -> TriangleHypergraph:
    """Enumerate all triangles of ER_q; aborts if one touches an absolute
    point (none can) or if the count differs from q(q^2-1)/6."""
    plane = ProjectivePlane(field_for_order(q))
    pol = Polarity(plane)
    g = build_er_graph(plane)
    absolute = {plane.index[pt] for pt in pol.absolute_points()}
    edges = []
    for tri in g.triangles():
        if any(v in absolute for v in tri):
            raise AssertionError(
                f"triangle {tri} contains an absolute point")
        edges.append(tri)
    expected = q * (q * q - 1) // 6
    if len(edges) != expected:
        raise AssertionError(
            f"{len(edges)} triangles found, expected {expected}")
    vertices = [i for i in range(g.n) if i not in absolute]
    return TriangleHypergraph(q=q, vertices=vertices, edges=edges,
                              labels=list(plane.points))


def hyper_independent(h: TriangleHypergraph, S):
    """None if no edge of h lies inside S, else one witnessing triple."""
    S = set(S)
    vs = set(h.vertices)
    for v in S:
        if v not in vs:
            raise IndexError(f"vertex {v} is not a hypergraph vertex")
    for e in h.edges:
        if all(v in S for v in e):
            return e
    return None


def sample_girth_five(h: TriangleHypergraph, samples=10_000, seed=0):
    """Sample 8-subsets of the vertex set and assert none spans 4+ edges.

    Returns the max edge count seen over all samples; a value >= 4 would
    contradict the girth-five structure and raises.
    """
    rng = random.Random(seed)
    worst = 0
    for _ in range(samples):
        sub = set(rng.sample(h.vertices, 8))
        inside = sum(1 for e in h.edges if all(v in sub for v in e))
        worst = max(worst, inside)
        if inside >= 4:
            raise AssertionError(
                f"8-subset {sorted(sub)} spans {inside} triangle edges")
    return worst


def mw_bound_report(q):
    """Lower bound achieved for even q and the leading upper-bound terms."""
    if q % 2:
        raise ValueError("report applies to even q")
    lower = q * (q + 1) // 2
    upper_leading = q * q / 2 + q ** 1.5
    if not lower <= upper_leading + 2 * q:
        raise AssertionError("lower bound exceeds the upper-bound envelope")
    return {"q": q, "lower": lower, "upper_leading": upper_leading}


def edges_csv(h: TriangleHypergraph) -> bytes:
    lines = ["u,v,w"]
    lines.extend(f"{u},{v},{w}" for u, v, w in h.edges)
    return ("\n".join(lines) + "\n").encode()
