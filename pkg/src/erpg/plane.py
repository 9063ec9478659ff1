"""Points, lines and collineations of PG(2,q).

Points and lines are homogeneous triples of field elements, stored as
plain 3-tuples of ints and normalized so the first nonzero coordinate
equals 1.  Enumeration order is fixed: (0,0,1), then (0,1,z), then
(1,y,z) with (y,z) in canonical field order, giving every point/line a
stable integer index.
"""

from __future__ import annotations

from .field import FieldCtx


class ProjectivePlane:
    """PG(2,q) over a fixed field context."""

    def __init__(self, ctx: FieldCtx):
        self.ctx = ctx
        self.q = ctx.q
        self.points = self._enumerate()
        self.index = {pt: i for i, pt in enumerate(self.points)}
        # Lines use the same normalization and ordering as points.
        self.lines = self.points
        self.line_index = self.index
        self._baer = None

    def _enumerate(self):
        q = self.q
        pts = [(0, 0, 1)]
        pts.extend((0, 1, z) for z in range(q))
        pts.extend((1, y, z) for y in range(q) for z in range(q))
        assert len(pts) == q * q + q + 1
        return pts

    def normalize(self, v):
        """Scale a nonzero triple so its first nonzero coordinate is 1."""
        f = self.ctx
        x, y, z = v
        if x:
            if x == 1:
                return (1, y, z)
            s = f.inv(x)
            return (1, f.mul(s, y), f.mul(s, z))
        if y:
            if y == 1:
                return (0, 1, z)
            return (0, 1, f.mul(f.inv(y), z))
        if z:
            return (0, 0, 1)
        raise ValueError("cannot normalize the zero triple")

    def incident(self, point, line) -> bool:
        f = self.ctx
        s = f.add(f.add(f.mul(line[0], point[0]), f.mul(line[1], point[1])),
                  f.mul(line[2], point[2]))
        return s == 0

    def line_points(self, line):
        """The q+1 points of a line, via a two-point parametrization."""
        f = self.ctx
        a, b, c = line
        if a:
            ia = f.inv(a)
            v1 = (f.neg(f.mul(ia, b)), 1, 0)
            v2 = (f.neg(f.mul(ia, c)), 0, 1)
        elif b:
            ib = f.inv(b)
            v1 = (1, 0, 0)
            v2 = (0, f.neg(f.mul(ib, c)), 1)
        else:
            v1 = (1, 0, 0)
            v2 = (0, 1, 0)
        pts = [self.normalize(v2)]
        for t in range(self.q):
            w = (f.add(v1[0], f.mul(t, v2[0])),
                 f.add(v1[1], f.mul(t, v2[1])),
                 f.add(v1[2], f.mul(t, v2[2])))
            pts.append(self.normalize(w))
        assert len(set(pts)) == self.q + 1
        return pts

    def line_through(self, P, Q):
        """The unique line through two distinct points (cross product)."""
        f = self.ctx
        a = f.sub(f.mul(P[1], Q[2]), f.mul(P[2], Q[1]))
        b = f.sub(f.mul(P[2], Q[0]), f.mul(P[0], Q[2]))
        c = f.sub(f.mul(P[0], Q[1]), f.mul(P[1], Q[0]))
        return self.normalize((a, b, c))

    # -- Baer subplane -----------------------------------------------------

    def baer_points(self):
        """Points of the standard Baer subplane (all coords in GF(sqrt q))."""
        if self.ctx.n % 2:
            raise ValueError("Baer subplane needs a square field order")
        if self._baer is None:
            self.ctx.subfield()
            self._baer = frozenset(
                pt for pt in self.points
                if all(self.ctx.in_subfield(c) for c in pt))
        return self._baer

    def in_baer_subplane(self, point) -> bool:
        return point in self.baer_points()


class Collineation:
    """An element of PGL(3,q): an invertible 3x3 matrix modulo scalars.

    The matrix is normalized so that its first nonzero entry in row-major
    order equals 1, which makes equality and hashing well defined.
    """

    __slots__ = ("plane", "m")

    def __init__(self, plane: ProjectivePlane, matrix):
        self.plane = plane
        self.m = self._normalize(matrix)
        if self._det() == 0:
            raise ValueError("singular matrix does not define a collineation")

    def _normalize(self, m):
        f = self.plane.ctx
        flat = [m[i][j] for i in range(3) for j in range(3)]
        lead = next((v for v in flat if v), None)
        if lead is None:
            raise ValueError("zero matrix")
        if lead != 1:
            s = f.inv(lead)
            flat = [f.mul(s, v) for v in flat]
        return (tuple(flat[0:3]), tuple(flat[3:6]), tuple(flat[6:9]))

    def _det(self):
        f = self.plane.ctx
        m = self.m
        t = 0
        for (j, k, l), sign in ((( 0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1),
                                ((2, 1, 0), -1), ((1, 0, 2), -1), ((0, 2, 1), -1)):
            term = f.mul(f.mul(m[0][j], m[1][k]), m[2][l])
            t = f.add(t, term if sign == 1 else f.neg(term))
        return t

    def __eq__(self, other):
        return isinstance(other, Collineation) and self.m == other.m

    def __hash__(self):
        return hash(self.m)

    def __repr__(self):
        return f"Collineation({self.m})"

    def apply(self, point):
        """Image of a point (matrix acting on the left on column vectors)."""
        f = self.plane.ctx
        m = self.m
        img = tuple(
            f.add(f.add(f.mul(m[i][0], point[0]), f.mul(m[i][1], point[1])),
                  f.mul(m[i][2], point[2]))
            for i in range(3))
        return self.plane.normalize(img)

    def apply_to_line(self, line):
        """Image of a line: inverse-transpose action preserves incidence."""
        inv = self.inverse().m
        f = self.plane.ctx
        img = tuple(
            f.add(f.add(f.mul(inv[0][i], line[0]), f.mul(inv[1][i], line[1])),
                  f.mul(inv[2][i], line[2]))
            for i in range(3))
        return self.plane.normalize(img)

    def compose(self, other: "Collineation") -> "Collineation":
        """self after other (matrix product self.m @ other.m)."""
        f = self.plane.ctx
        a, b = self.m, other.m
        prod = tuple(
            tuple(
                f.add(f.add(f.mul(a[i][0], b[0][j]), f.mul(a[i][1], b[1][j])),
                      f.mul(a[i][2], b[2][j]))
                for j in range(3))
            for i in range(3))
        return Collineation(self.plane, prod)

    def inverse(self) -> "Collineation":
        f = self.plane.ctx
        m = self.m
        # Adjugate; the projective scalar 1/det is absorbed by normalization.
        def c2(i1, j1, i2, j2):
            return f.sub(f.mul(m[i1][j1], m[i2][j2]), f.mul(m[i1][j2], m[i2][j1]))
        adj = (
            (c2(1, 1, 2, 2), f.neg(c2(0, 1, 2, 2)), c2(0, 1, 1, 2)),
            (f.neg(c2(1, 0, 2, 2)), c2(0, 0, 2, 2), f.neg(c2(0, 0, 1, 2))),
            (c2(1, 0, 2, 1), f.neg(c2(0, 0, 2, 1)), c2(0, 0, 1, 1)),
        )
        return Collineation(self.plane, adj)

    @classmethod
    def identity(cls, plane):
        return cls(plane, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))


def conic_stabilizer_lift(plane: ProjectivePlane, a, b, c, d) -> Collineation:
    """3x3 lift of an invertible 2x2 matrix into the conic/polarity stabilizer.

    For odd q the lift stabilizes the conic X2^2 - X1*X3 = 0; for even q it
    commutes with the pseudo polarity.
    """
    f = plane.ctx
    det = f.sub(f.mul(a, d), f.mul(b, c))
    if det == 0:
        raise ValueError("degenerate 2x2 matrix")
    if f.p == 2:
        return Collineation(plane, ((1, 0, 0), (0, a, b), (0, c, d)))
    two = f.add(1, 1)
    # symmetric square of [[a,b],[c,d]] in the basis (x^2, x*y, y^2);
    # a true homomorphism GL(2,q) -> GL(3,q) stabilizing X2^2 - X1*X3 = 0
    m = (
        (f.mul(a, a), f.mul(two, f.mul(a, b)), f.mul(b, b)),
        (f.mul(a, c), f.add(f.mul(a, d), f.mul(b, c)), f.mul(b, d)),
        (f.mul(c, c), f.mul(two, f.mul(c, d)), f.mul(d, d)),
    )
    return Collineation(plane, m)


def orbit(generators, point):
    """BFS closure of a point under a list of collineations.

    Returns the orbit in deterministic first-seen order.
    """
    seen = {point}
    order = [point]
    frontier = [point]
    while frontier:
        nxt = []
        for pt in frontier:
            for g in generators:
                img = g.apply(pt)
                if img not in seen:
                    seen.add(img)
                    order.append(img)
                    nxt.append(img)
        frontier = nxt
    return order


def baer_stabilizer_generators(plane: ProjectivePlane):
    """Lifted generators of PGL(2, sqrt q) acting with subfield entries.

    Uses the standard generating set of GL(2, F): a transvection, a
    diagonal matrix with a generating scalar, and the coordinate swap.
    """
    ctx = plane.ctx
    sub = ctx.subfield()
    e = ctx.embed_subfield
    g = e(sub.generator if sub.generator is not None else 1)
    one = e(1)
    gens2 = [
        (one, one, 0, one),
        (g, 0, 0, one),
        (0, one, one, 0),
    ]
    return [conic_stabilizer_lift(plane, *t) for t in gens2]
