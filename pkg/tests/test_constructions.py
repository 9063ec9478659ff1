import json

import jsonschema
import pytest

from erpg import constructions as cons
from erpg.field import field_for_order
from erpg.plane import ProjectivePlane, orbit, baer_stabilizer_generators
from erpg.polarity import INTERNAL, Polarity, build_er_graph


def setup(q):
    pl = ProjectivePlane(field_for_order(q))
    return pl, Polarity(pl)


# -- orbit census ------------------------------------------------------------

def test_census_q9():
    census = cons.orbit_census_odd_square(9)
    assert census.entries == [
        ("conic", 6, 1),
        ("external", 12, 1),
        ("external-tangent", 24, 1),
        ("internal", 12, 3),
    ]
    assert census.matches_expected()
    # orbit sizes divide |PGL(2,3)| = 24
    assert all(24 % size == 0 for _, size, _ in census.entries)


def test_census_q25():
    census = cons.orbit_census_odd_square(25)
    assert census.entries == [
        ("conic", 20, 1),
        ("external", 60, 3),
        ("external-tangent", 120, 1),
        ("internal", 60, 5),
    ]
    assert census.matches_expected()


def test_census_rejects_bad_q():
    with pytest.raises(ValueError):
        cons.orbit_census_odd_square(8)
    with pytest.raises(ValueError):
        cons.orbit_census_odd_square(5)


# -- odd square cocliques ----------------------------------------------------

@pytest.mark.parametrize("q,size", [(9, 22), (49, 218)])
def test_coclique_neg_sizes(q, size):
    cert = cons.coclique_odd_sq_neg(q)
    assert cert.size == size == cert.claimed_size
    assert cert.verified == {"independent": True, "size_matches": True}


def test_coclique_neg_is_conic_plus_internals():
    pl, pol = setup(9)
    cert = cons.coclique_odd_sq_neg(9)
    classes = [pol.classify(P) for P in cert.points]
    assert classes.count("absolute") == 10
    assert classes.count("internal") == 12


def test_coclique_neg_wrong_residue_and_parity():
    with pytest.raises(ValueError):
        cons.coclique_odd_sq_neg(25)  # sqrt = 5 = 1 mod 4
    with pytest.raises(ValueError):
        cons.coclique_odd_sq_neg(27)  # not a square


def test_all_good_internal_orbits_q9():
    # the (sqrt(q)+1)/2 = 2 orbits of internal points meeting X2 = 0 all
    # avoid their own polar lines
    pl, pol = setup(9)
    f = pl.ctx
    gens = baer_stabilizer_generators(pl)
    line_internals = [pl.normalize((1, 0, z)) for z in f.elements()
                      if pol.classify(pl.normalize((1, 0, z))) == INTERNAL]
    orbits = []
    seen = set()
    for P in line_internals:
        if P in seen:
            continue
        orb = orbit(gens, P)
        seen.update(orb)
        orbits.append(orb)
    assert len(orbits) == 2
    for orb in orbits:
        assert len(orb) == 12
        assert cons.point_set_independent(pl, pol, orb) is None


def test_transitivity_transfer_q9():
    # base-point check and full exhaustive check must agree on the orbit
    pl, pol = setup(9)
    cert = cons.coclique_odd_sq_neg(9)
    internals = [P for P in cert.points if pol.classify(P) == INTERNAL]
    base = internals[0]
    pts = set(internals)
    base_clean = all(R not in pts
                     for R in pl.line_points(pol.polar_line(base))
                     if R != base)
    full_clean = cons.point_set_independent(pl, pol, internals) is None
    assert base_clean and full_clean


@pytest.mark.parametrize("q,size", [(25, 101)])
def test_coclique_pos_sizes(q, size):
    cert = cons.coclique_odd_sq_pos(q)
    assert cert.size == size == cert.claimed_size


def test_k_group_and_orbit_split_q25():
    pl, _ = setup(25)
    group = cons.k_group(pl)
    assert len(group) == 25 * 6
    orbits = cons.internal_k_orbits(25)
    # sqrt(q)-1 = 4 orbits of size q(sqrt(q)+1)/2 = 75 covering all
    # q(q-1)/2 = 300 internal points
    assert len(orbits) == 4
    assert all(len(o) == 75 for o in orbits)
    assert sum(len(o) for o in orbits) == 300
    # every K-orbit of internal points is a coclique
    pl2, pol2 = setup(25)
    for orb in orbits:
        assert cons.point_set_independent(pl2, pol2, orb) is None


def test_coclique_pos_wrong_residue():
    with pytest.raises(ValueError):
        cons.coclique_odd_sq_pos(9)


# -- trace-zero sets and Denniston arcs --------------------------------------

def test_trace_zero_set_sizes():
    assert cons.trace_zero_set(2) == [0]
    n8 = cons.trace_zero_set(8)
    assert len(n8) == 2 and n8[0] == 0
    n32 = cons.trace_zero_set(32)
    assert len(n32) == 4
    n128 = cons.trace_zero_set(128)
    assert len(n128) == 8


@pytest.mark.parametrize("q", [8, 32, 128])
def test_trace_zero_pairwise_products(q):
    ctx = field_for_order(q)
    N = cons.trace_zero_set(q)
    for x in N:
        for y in N:
            assert ctx.abs_trace(ctx.mul(x, y)) == 0


def test_trace_zero_even_degree_is_subfield():
    ctx = field_for_order(16)
    N = cons.trace_zero_set(16)
    assert N == sorted(ctx.embed_subfield(x) for x in ctx.subfield().elements())


@pytest.mark.parametrize("q,degree,size", [(8, 2, 10), (16, 4, 52), (32, 4, 100)])
def test_denniston_arc(q, degree, size):
    arc = cons.denniston_arc(q)
    assert arc.degree == degree
    assert len(arc.points) == size == (degree - 1) * q + degree


def test_arc_line_intersections_q8():
    pl, _ = setup(8)
    arc = cons.denniston_arc(8)
    pts = set(arc.points)
    hits = {sum(P in pts for P in pl.line_points(l)) for l in pl.lines}
    assert hits == {0, 2}


# -- even cocliques ----------------------------------------------------------

@pytest.mark.parametrize("q,size,candidates", [(8, 10, 18), (32, 100, 132)])
def test_coclique_even(q, size, candidates):
    cert = cons.coclique_even(q)
    assert cert.size == size == cert.claimed_size
    assert cert.extension["candidate_count"] == candidates
    assert cert.extension["greedy_size"] >= size


def test_coclique_even_rejects_bad_q():
    with pytest.raises(ValueError):
        cons.coclique_even(16)  # even square
    with pytest.raises(ValueError):
        cons.coclique_even(2)   # n = 1
    with pytest.raises(ValueError):
        cons.coclique_even(9)


def test_even_square_arc_coclique_q16():
    cert = cons.even_square_arc_coclique(16)
    assert cert.size == 52  # q^{3/2} - q + sqrt(q)


def test_greedy_extension_is_independent_and_larger():
    pl, pol = setup(8)
    cert = cons.coclique_even(8)
    assert cert.extension["greedy_size"] > cert.size


# -- pencil dichotomy and cyclic group ---------------------------------------

@pytest.mark.parametrize("q", [8, 32])
def test_pencil_conic_polar_dichotomy(q):
    ctx = field_for_order(q)
    for lam in ctx.elements():
        assert cons.conic_polar_disjointness(q, lam) == (ctx.abs_trace(lam) == 0)


@pytest.mark.parametrize("q", [4, 8, 16])
def test_cyclic_pencil_group(q):
    pl, _ = setup(q)
    gen = cons.cyclic_pencil_group(q)
    from erpg.plane import Collineation
    ident = Collineation.identity(pl)
    seen, acc = [], gen
    while acc != ident:
        seen.append(acc)
        acc = acc.compose(gen)
    assert len(seen) + 1 == q + 1  # cyclic of order q+1
    # U1 is fixed; the absolute line X1 = 0 is stabilized setwise
    assert gen.apply((1, 0, 0)) == (1, 0, 0)
    absolute = set(pl.line_points((1, 0, 0)))
    assert {gen.apply(P) for P in absolute} == absolute


def test_pencil_orbit_is_conic():
    q = 8
    pl, pol = setup(q)
    ctx = pl.ctx
    gen = cons.cyclic_pencil_group(q)
    lam = next(x for x in range(1, q) if ctx.abs_trace(x) == 0)
    alpha = ctx.find_trace_one()
    expected = set(cons.conic_points(pl, pol, alpha, ctx.mul(lam, lam)))
    assert set(orbit([gen], (1, lam, 0))) == expected


# -- triangle-free sets ------------------------------------------------------

@pytest.mark.parametrize("q", [4, 8, 16])
def test_triangle_free_set(q):
    pl, pol = setup(q)
    tfs = cons.triangle_free_set(q)
    assert tfs.size == q * (q + 1) // 2
    assert all(not pol.is_absolute(P) for P in tfs.points)
    sub = cons.induced_on_points(pl, pol, tfs.points)
    assert sub.triangle_count() == 0
    assert sub.is_regular(q // 2)
    assert sub.girth() >= 5


def test_triangle_free_matches_er_induced():
    q = 8
    pl, pol = setup(q)
    tfs = cons.triangle_free_set(q)
    g = build_er_graph(pl)
    via_big = g.induced([pl.index[P] for P in tfs.points])
    direct = cons.induced_on_points(pl, pol, tfs.points)
    assert via_big.n == direct.n and via_big.adj == direct.adj


def test_triangle_free_invariant_under_pencil_group():
    q = 8
    gen = cons.cyclic_pencil_group(q)
    tfs = cons.triangle_free_set(q)
    pts = set(tfs.points)
    assert {gen.apply(P) for P in pts} == pts


def test_triangle_free_rejects_bad_input():
    with pytest.raises(ValueError):
        cons.triangle_free_set(9)
    ctx = field_for_order(8)
    trace_one = ctx.find_trace_one()
    with pytest.raises(ValueError):
        cons.triangle_free_set(8, lam=trace_one)


# -- certificates and dispatch -----------------------------------------------

def test_certificate_json_matches_schema():
    import erpg
    from pathlib import Path
    schema_path = Path(erpg.__file__).parent / "schemas" / "certificate_v1.json"
    schema = json.loads(schema_path.read_text())
    for q in (9, 8, 16, 25):
        cert = cons.build_coclique(q, "auto")
        doc = json.loads(cert.to_json(field_for_order(q)))
        jsonschema.validate(doc, schema)
        assert doc["version"] == "v1"
        assert doc["size"] == len(doc["points"])


def test_certificate_points_decode_back():
    q = 9
    ctx = field_for_order(q)
    cert = cons.build_coclique(q, "auto")
    doc = json.loads(cert.to_json(ctx))
    decoded = [tuple(ctx.from_coeffs(c) for c in pt) for pt in doc["points"]]
    assert decoded == cert.points


def test_auto_dispatch():
    assert cons.auto_construction_id(9) == "odd_sq_neg"
    assert cons.auto_construction_id(25) == "odd_sq_pos"
    assert cons.auto_construction_id(8) == "even_arc"
    assert cons.auto_construction_id(16) == "even_sq_subfield_arc"
    with pytest.raises(ValueError):
        cons.auto_construction_id(7)  # odd non-square: nothing to build
    with pytest.raises(ValueError):
        cons.build_coclique(9, "bogus")


def test_build_deterministic():
    a = cons.build_coclique(9).to_json(field_for_order(9))
    b = cons.build_coclique(9).to_json(field_for_order(9))
    assert a == b
