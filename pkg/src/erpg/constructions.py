"""Coclique and triangle-free constructions in the polarity graph ER_q.

Four families are built and certified:

* odd square q, sqrt(q) = -1 mod 4: conic plus one orbit of internal
  points under the lifted PGL(2, sqrt q); size (q^{3/2} - sqrt q)/2 + q + 1.
* odd square q, sqrt(q) = +1 mod 4: conic plus one orbit of internal
  points under the group K of order q(sqrt q + 1); size
  (q^{3/2} + q)/2 + q + 1.
* even q = 2^n, n odd: a Denniston maximal arc of degree sqrt(q/2) built
  from a pairwise-trace-zero set; size q^{3/2}/sqrt 2 - q + sqrt(q/2).
* even q: a set of q(q+1)/2 non-absolute points inducing a triangle-free
  q/2-regular subgraph of girth at least 5.

Every construction is verified against the graph-level predicates before
its certificate is returned; verification failure raises, it is never
reported as a warning.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .field import FieldCtx, field_for_order
from .plane import (Collineation, ProjectivePlane, baer_stabilizer_generators,
                    conic_stabilizer_lift, orbit)
from .polarity import ABSOLUTE, EXTERNAL, INTERNAL, Polarity

CERTIFICATE_VERSION = "v1"


class VerificationError(AssertionError):
    """A construction failed one of its own certifying checks."""


# ---------------------------------------------------------------------------
# shared helpers
# ---------------------------------------------------------------------------

def _context(q):
    ctx = field_for_order(q)
    plane = ProjectivePlane(ctx)
    return ctx, plane, Polarity(plane)


def point_set_independent(plane, pol, points):
    """None if the point set is a coclique of ER_q, else a violating pair.

    Checked through polar lines directly, so it does not need the full
    graph in memory.
    """
    pts = set(points)
    for P in points:
        for R in plane.line_points(pol.polar_line(P)):
            if R != P and R in pts:
                return (P, R)
    return None


def _require_independent(plane, pol, points, what):
    witness = point_set_independent(plane, pol, points)
    if witness is not None:
        raise VerificationError(f"{what}: conjugate pair {witness}")


@dataclass
class CocliqueCertificate:
    """A constructed coclique together with its verification flags."""

    construction_id: str
    q: int
    parameters: dict
    points: list
    claimed_size: int
    verified: dict = field(default_factory=dict)
    extension: dict | None = None

    @property
    def size(self):
        return len(self.points)

    def to_json(self, ctx: FieldCtx) -> str:
        doc = {
            "version": CERTIFICATE_VERSION,
            "construction": self.construction_id,
            "q": self.q,
            "modulus": list(ctx.modulus),
            "parameters": self.parameters,
            "size": self.size,
            "claimed_size": self.claimed_size,
            "points": [[list(ctx.coeffs(c)) for c in pt] for pt in self.points],
            "verified": self.verified,
        }
        if self.extension is not None:
            doc["extension"] = self.extension
        return json.dumps(doc, indent=2, sort_keys=True)


def _certify(cert, plane, pol):
    _require_independent(plane, pol, cert.points, cert.construction_id)
    if len(cert.points) != cert.claimed_size:
        raise VerificationError(
            f"{cert.construction_id}: built {len(cert.points)} points, "
            f"formula gives {cert.claimed_size}")
    if len(set(cert.points)) != len(cert.points):
        raise VerificationError(f"{cert.construction_id}: duplicate points")
    cert.verified = {"independent": True, "size_matches": True}
    return cert


def isqrt_exact(m):
    r = round(m ** 0.5)
    for c in (r - 1, r, r + 1):
        if c * c == m:
            return c
    return None


# ---------------------------------------------------------------------------
# q odd square: orbit census and the two coclique families
# ---------------------------------------------------------------------------

CENSUS_CONIC = "conic"
CENSUS_EXTERNAL_TANGENT = "external-tangent"
CENSUS_EXTERNAL = "external"
CENSUS_INTERNAL = "internal"


@dataclass
class OrbitCensus:
    """Orbits of the Baer-conic stabilizer on points off the Baer subplane."""

    q: int
    entries: list  # (class label, orbit size, multiplicity), aggregated
    orbits: list   # raw orbits as (label, point list)

    def expected(self):
        r = isqrt_exact(self.q)
        half = (self.q * r - r) // 2
        return sorted([
            (CENSUS_CONIC, self.q - r, 1),
            (CENSUS_EXTERNAL_TANGENT, self.q * r - r, 1),
            (CENSUS_EXTERNAL, half, r - 2),
            (CENSUS_INTERNAL, half, r),
        ])

    def matches_expected(self):
        return sorted(self.entries) == self.expected()


def _odd_square_context(q):
    ctx, plane, pol = _context(q)
    if ctx.p == 2 or ctx.n % 2:
        raise ValueError(f"q = {q} is not an odd square")
    return ctx, plane, pol


def orbit_census_odd_square(q) -> OrbitCensus:
    """Decompose PG(2,q) minus the Baer subplane under the lifted
    PGL(2, sqrt q) and label each orbit by its conic point class."""
    ctx, plane, pol = _odd_square_context(q)
    gens = baer_stabilizer_generators(plane)
    baer = plane.baer_points()
    # Tangent lines to the Baer conic: polars of the conic points inside B.
    tangent_pts = set()
    for R in pol.absolute_points():
        if R in baer:
            tangent_pts.update(plane.line_points(pol.polar_line(R)))
    seen = set()
    raw = []
    for pt in plane.points:
        if pt in baer or pt in seen:
            continue
        orb = orbit(gens, pt)
        seen.update(orb)
        cls = pol.classify(pt)
        if cls == ABSOLUTE:
            label = CENSUS_CONIC
        elif cls == EXTERNAL:
            label = (CENSUS_EXTERNAL_TANGENT if pt in tangent_pts
                     else CENSUS_EXTERNAL)
        else:
            label = CENSUS_INTERNAL
        if any(pol.classify(x) != cls for x in orb):
            raise VerificationError("orbit mixes point classes")
        if label == CENSUS_EXTERNAL_TANGENT and any(
                x not in tangent_pts for x in orb):
            raise VerificationError("orbit mixes tangent membership")
        raw.append((label, orb))
    counts = {}
    for label, orb in raw:
        counts[(label, len(orb))] = counts.get((label, len(orb)), 0) + 1
    entries = [(label, size, mult) for (label, size), mult in counts.items()]
    total = sum(size * mult for _, size, mult in entries)
    if total != len(plane.points) - len(baer):
        raise VerificationError("census does not cover PG(2,q) \\ B")
    return OrbitCensus(q, sorted(entries), raw)


def coclique_odd_sq_neg(q) -> CocliqueCertificate:
    """Conic plus a stabilizer orbit of an internal point; needs
    sqrt(q) = -1 mod 4."""
    ctx, plane, pol = _odd_square_context(q)
    r = ctx.sqrt_q()
    if r % 4 != 3:
        raise ValueError(f"sqrt(q) = {r} is not -1 mod 4")
    w = ctx.find_nonsquare()
    base = plane.normalize((1, 0, w))
    if pol.classify(base) != INTERNAL:
        raise VerificationError("base point (1,0,w) must be internal")
    gens = baer_stabilizer_generators(plane)
    orb = orbit(gens, base)
    expected_orbit = (q * r - r) // 2
    if len(orb) != expected_orbit:
        raise VerificationError(
            f"orbit size {len(orb)} != {expected_orbit}")
    points = pol.absolute_points() + orb
    cert = CocliqueCertificate(
        construction_id="odd_sq_neg", q=q,
        parameters={"w": w}, points=points,
        claimed_size=expected_orbit + q + 1)
    return _certify(cert, plane, pol)


def k_group(plane) -> list:
    """The group of q(sqrt q + 1) upper-triangular conic stabilizers
    [[a^2, 2ac, c^2], [0, a, c], [0, 0, 1]] with a of norm 1."""
    ctx = plane.ctx
    r = ctx.sqrt_q()
    norm_one = [a for a in range(1, ctx.q) if ctx.pow(a, r + 1) == 1]
    two = ctx.add(1, 1)
    mats = []
    for a in norm_one:
        for c in ctx.elements():
            m = ((ctx.mul(a, a), ctx.mul(two, ctx.mul(a, c)), ctx.mul(c, c)),
                 (0, a, c),
                 (0, 0, 1))
            mats.append(Collineation(plane, m))
    assert len(mats) == ctx.q * (r + 1)
    return mats


def coclique_odd_sq_pos(q) -> CocliqueCertificate:
    """Conic plus a K-orbit of an internal point; needs sqrt(q) = 1 mod 4."""
    ctx, plane, pol = _odd_square_context(q)
    r = ctx.sqrt_q()
    if r % 4 != 1:
        raise ValueError(f"sqrt(q) = {r} is not 1 mod 4")
    w = ctx.find_nonsquare()
    base = plane.normalize((1, 0, w))
    if pol.classify(base) != INTERNAL:
        raise VerificationError("base point (1,0,w) must be internal")
    group = k_group(plane)
    orb = sorted({g.apply(base) for g in group}, key=plane.index.__getitem__)
    expected_orbit = q * (r + 1) // 2
    if len(orb) != expected_orbit:
        raise VerificationError(f"orbit size {len(orb)} != {expected_orbit}")
    points = pol.absolute_points() + orb
    cert = CocliqueCertificate(
        construction_id="odd_sq_pos", q=q,
        parameters={"w": w}, points=points,
        claimed_size=expected_orbit + q + 1)
    return _certify(cert, plane, pol)


def internal_k_orbits(q):
    """All K-orbits on internal points, as lists (deterministic order)."""
    ctx, plane, pol = _odd_square_context(q)
    group = k_group(plane)
    seen = set()
    orbits = []
    for pt in plane.points:
        if pt in seen or pol.classify(pt) != INTERNAL:
            continue
        orb = sorted({g.apply(pt) for g in group}, key=plane.index.__getitem__)
        seen.update(orb)
        orbits.append(orb)
    return orbits


# ---------------------------------------------------------------------------
# q even: trace-zero sets, Denniston arcs, cocliques, triangle-free sets
# ---------------------------------------------------------------------------

def _even_context(q):
    ctx, plane, pol = _context(q)
    if ctx.p != 2:
        raise ValueError(f"q = {q} is not even")
    return ctx, plane, pol


def trace_zero_set(q) -> list:
    """A GF(2)-subspace N of GF(q) with Tr(x*y) = 0 for all x, y in N.

    For q = 2^n with n odd, N has size 2^((n-1)/2) and is built by greedy
    basis extension inside the trace-zero hyperplane, totally isotropic
    for the bilinear form (x, y) -> Tr(x*y).  For n even the embedded
    subfield GF(sqrt q) is returned (its pairwise products lie in the
    subfield, where the trace vanishes).
    """
    ctx, _, _ = _even_context(q)
    n = ctx.n
    if n % 2 == 0:
        return sorted(ctx.embed_subfield(x) for x in ctx.subfield().elements())
    dim = (n - 1) // 2
    basis = []
    span = {0}
    for x in range(1, q):
        if len(basis) == dim:
            break
        if x in span or ctx.abs_trace(x):
            continue
        if any(ctx.abs_trace(ctx.mul(x, b)) for b in basis):
            continue
        if ctx.abs_trace(ctx.mul(x, x)):
            continue
        basis.append(x)
        span |= {s ^ x for s in span}
    if len(basis) != dim:
        raise VerificationError("isotropic basis extension fell short")
    N = sorted(span)
    for x in N:
        for y in N:
            if ctx.abs_trace(ctx.mul(x, y)):
                raise VerificationError("pairwise trace-zero property failed")
    return N


def conic_points(plane, pol_unused, alpha, lam):
    """Points of the pencil conic X2^2 + X2*X3 + alpha*X3^2 + lam*X1^2 = 0."""
    f = plane.ctx
    out = []
    for (x1, x2, x3) in plane.points:
        v = f.add(f.add(f.mul(x2, x2), f.mul(x2, x3)),
                  f.add(f.mul(alpha, f.mul(x3, x3)),
                        f.mul(lam, f.mul(x1, x1))))
        if v == 0:
            out.append((x1, x2, x3))
    return out


@dataclass
class MaximalArc:
    degree: int
    points: list
    subgroup: list  # the additive subgroup of pencil parameters
    alpha: int


def denniston_arc(q, N=None) -> MaximalArc:
    """Union of pencil conics over the additive subgroup {x^2 : x in N}.

    Verifies both the point count (degree-1)*q + degree and the defining
    line-intersection property (every line meets the arc in 0 or degree
    points).
    """
    ctx, plane, pol = _even_context(q)
    if N is None:
        N = trace_zero_set(q)
    A = sorted({ctx.mul(x, x) for x in N})
    for a in A:
        for b in A:
            if (a ^ b) not in A:  # char-2 addition is xor on encodings
                raise VerificationError("pencil parameter set is not a group")
    alpha = ctx.find_trace_one()
    pts = []
    for lam in A:
        pts.extend(conic_points(plane, pol, alpha, lam))
    if len(set(pts)) != len(pts):
        raise VerificationError("pencil conics are not disjoint")
    degree = len(A)
    if len(pts) != (degree - 1) * q + degree:
        raise VerificationError(
            f"arc has {len(pts)} points, expected {(degree - 1) * q + degree}")
    arc_set = set(pts)
    for line in plane.lines:
        hits = sum(1 for R in plane.line_points(line) if R in arc_set)
        if hits not in (0, degree):
            raise VerificationError(
                f"line {line} meets arc in {hits} points")
    return MaximalArc(degree=degree, points=sorted(pts, key=plane.index.__getitem__),
                      subgroup=A, alpha=alpha)


def coclique_even(q) -> CocliqueCertificate:
    """Denniston-arc coclique for q = 2^n, n odd, plus an extension report.

    The extension report counts the points whose polar line misses the
    arc (exactly sqrt(q/2)*(q+1) of them) and greedily adds them.
    """
    ctx, plane, pol = _even_context(q)
    if ctx.n % 2 == 0 or ctx.n < 3:
        raise ValueError(f"q = {q} is not an odd power of 2 with n >= 3")
    N = trace_zero_set(q)
    arc = denniston_arc(q, N)
    half = arc.degree  # sqrt(q/2)
    claimed = (half - 1) * q + half
    cert = CocliqueCertificate(
        construction_id="even_arc", q=q,
        parameters={"trace_zero_set": N, "pencil_subgroup": arc.subgroup,
                    "alpha": arc.alpha},
        points=arc.points, claimed_size=claimed)
    _certify(cert, plane, pol)
    arc_set = set(arc.points)
    candidates = []
    for pt in plane.points:
        if pt in arc_set:
            continue
        if all(R not in arc_set for R in plane.line_points(pol.polar_line(pt))):
            candidates.append(pt)
    extended = _greedy_extend_points(plane, pol, arc.points, candidates)
    _require_independent(plane, pol, extended, "even_arc greedy extension")
    cert.extension = {
        "candidate_count": len(candidates),
        "expected_candidates": half * (q + 1),
        "greedy_size": len(extended),
    }
    if len(candidates) != half * (q + 1):
        raise VerificationError(
            f"extension candidates {len(candidates)} != {half * (q + 1)}")
    return cert


def even_square_arc_coclique(q) -> CocliqueCertificate:
    """Degree-sqrt(q) subfield Denniston arc coclique for even square q."""
    ctx, plane, pol = _even_context(q)
    if ctx.n % 2:
        raise ValueError(f"q = {q} is not an even square")
    N = trace_zero_set(q)  # the embedded subfield
    arc = denniston_arc(q, N)
    cert = CocliqueCertificate(
        construction_id="even_sq_subfield_arc", q=q,
        parameters={"pencil_subgroup": arc.subgroup, "alpha": arc.alpha},
        points=arc.points,
        claimed_size=(arc.degree - 1) * q + arc.degree)
    return _certify(cert, plane, pol)


def _greedy_extend_points(plane, pol, base, candidates):
    chosen = list(base)
    chosen_set = set(chosen)
    blocked = set()
    for P in chosen:
        blocked.update(plane.line_points(pol.polar_line(P)))
    for P in sorted(candidates, key=plane.index.__getitem__):
        if P in chosen_set or P in blocked:
            continue
        chosen.append(P)
        chosen_set.add(P)
        blocked.update(plane.line_points(pol.polar_line(P)))
    return chosen


def conic_polar_disjointness(q, lam) -> bool:
    """Whether every point of the pencil conic with parameter lam^2 has a
    polar line disjoint from that conic.  Holds exactly when Tr(lam) = 0."""
    ctx, plane, pol = _even_context(q)
    alpha = ctx.find_trace_one()
    pts = conic_points(plane, pol, alpha, ctx.mul(lam, lam))
    pset = set(pts)
    for R in pts:
        if any(x in pset for x in plane.line_points(pol.polar_line(R))):
            return False
    return True


def cyclic_pencil_group(q):
    """Generator of the cyclic order-(q+1) collineation group stabilizing
    the pencil; its orbits off the absolute line are the pencil conics."""
    ctx, plane, _ = _even_context(q)
    alpha = ctx.find_trace_one()
    sols = []
    for a in ctx.elements():
        for b in ctx.elements():
            v = ctx.add(ctx.add(ctx.mul(a, a), ctx.mul(a, b)),
                        ctx.mul(alpha, ctx.mul(b, b)))
            if v == 1:
                sols.append(Collineation(
                    plane, ((1, 0, 0),
                            (0, a, ctx.mul(alpha, b)),
                            (0, b, ctx.add(a, b)))))
    assert len(sols) == q + 1
    identity = Collineation.identity(plane)
    for g in sols:
        order, acc = 1, g
        while acc != identity:
            acc = acc.compose(g)
            order += 1
        if order == q + 1:
            return g
    raise VerificationError("pencil group has no element of order q+1")


@dataclass
class TriangleFreeSet:
    q: int
    lam: int
    points: list

    @property
    def size(self):
        return len(self.points)


def triangle_free_set(q, lam=None) -> TriangleFreeSet:
    """The q(q+1)/2 points off the absolute line whose polar line is secant
    to the pencil conic with parameter lam^2 (lam nonzero, Tr(lam) = 0)."""
    ctx, plane, pol = _even_context(q)
    if lam is None:
        lam = next((x for x in range(1, q) if ctx.abs_trace(x) == 0), None)
        if lam is None:
            raise ValueError("no nonzero trace-zero element (q = 2)")
    if lam == 0 or ctx.abs_trace(lam):
        raise ValueError("lam must be nonzero with trace zero")
    alpha = ctx.find_trace_one()
    conic = set(conic_points(plane, pol, alpha, ctx.mul(lam, lam)))
    pts = []
    for pt in plane.points:
        if pt[0] == 0:  # absolute line X1 = 0
            continue
        hits = sum(1 for R in plane.line_points(pol.polar_line(pt))
                   if R in conic)
        if hits == 2:
            pts.append(pt)
    if len(pts) != q * (q + 1) // 2:
        raise VerificationError(
            f"triangle-free set has {len(pts)} points, "
            f"expected {q * (q + 1) // 2}")
    if any(pol.is_absolute(pt) for pt in pts):
        raise VerificationError("triangle-free set contains an absolute point")
    return TriangleFreeSet(q=q, lam=lam, points=pts)


def induced_on_points(plane, pol, points):
    """Induced ER_q subgraph on a point list, without the full graph."""
    from .graphs import Graph
    idx = {pt: i for i, pt in enumerate(points)}
    g = Graph(len(points))
    for i, pt in enumerate(points):
        for R in plane.line_points(pol.polar_line(pt)):
            j = idx.get(R)
            if j is not None and j != i:
                g.adj[i] |= 1 << j
    g.labels = list(points)
    return g


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

def auto_construction_id(q):
    """Construction selected for q by parity and squareness."""
    ctx = field_for_order(q)
    r = isqrt_exact(q)
    if ctx.p == 2:
        if r is not None:
            return "even_sq_subfield_arc"
        return "even_arc"
    if r is None:
        raise ValueError(
            f"q = {q}: no coclique construction here for odd non-square q")
    return "odd_sq_neg" if r % 4 == 3 else "odd_sq_pos"


BUILDERS = {
    "odd_sq_neg": coclique_odd_sq_neg,
    "odd_sq_pos": coclique_odd_sq_pos,
    "even_arc": coclique_even,
    "even_sq_subfield_arc": even_square_arc_coclique,
}


def build_coclique(q, construction="auto") -> CocliqueCertificate:
    if construction == "auto":
        construction = auto_construction_id(q)
    try:
        builder = BUILDERS[construction]
    except KeyError:
        raise ValueError(f"unknown construction {construction!r}")
    return builder(q)
