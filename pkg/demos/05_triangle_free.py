"""Triangle-free induced subgraphs and the triangle hypergraph, q even.

Taking the points off the absolute line whose polar line is secant to a
fixed trace-zero conic gives q(q+1)/2 vertices inducing a q/2-regular
subgraph of ER_q with girth at least 5.
"""

from erpg import constructions as cons
from erpg import hypergraph as hg

for q in (4, 8, 16):
    ctx, plane, pol = cons._context(q)
    tfs = cons.triangle_free_set(q)
    sub = cons.induced_on_points(plane, pol, tfs.points)
    print(f"q={q:>2}: {tfs.size} vertices, {sub.num_edges()} edges, "
          f"{sub.triangle_count()} triangles, "
          f"{q // 2}-regular: {sub.is_regular(q // 2)}, "
          f"girth {sub.girth()}")

q = 8
h = hg.build_hypergraph(q)
print(f"\ntriangle hypergraph H_{q}: {len(h.vertices)} vertices, "
      f"{h.num_edges()} edges (= q(q^2-1)/6)")
worst = hg.sample_girth_five(h, samples=10_000, seed=0)
print(f"largest edge count among 10,000 random 8-vertex subsets: {worst} "
      f"(girth-5 behaviour: no two edges share two vertices)")
r = hg.mw_bound_report(q)
print(f"independence bounds for H_{q}: "
      f"lower {r['lower']}, upper ~ {r['upper_leading']:.0f} + O(q)")
