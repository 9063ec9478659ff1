"""Orbit census under the lifted subfield group, q an odd square.

The stabilizer of a conic over GF(sqrt(q)), lifted into PGL(3,q), acts on
the points of PG(2,q) outside the Baer subplane.  Counting its orbits by
point class explains where the independent sets come from: each internal
orbit that avoids its own polar lines is a coclique of size
(q^{3/2} - sqrt(q))/2.
"""

from erpg import constructions as cons

for q in (9, 25):
    census = cons.orbit_census_odd_square(q)
    print(f"q = {q}:  (class, orbit size, multiplicity)")
    for cls, size, mult in census.entries:
        print(f"    {cls:<16} {mult} x {size}")
    total = sum(size * mult for _, size, mult in census.entries)
    print(f"    total {total} points outside the Baer subplane; "
          f"matches expectation: {census.matches_expected()}")

orbits = cons.internal_k_orbits(25)
print(f"\nq = 25, K-group orbits on internal points: "
      f"{[len(o) for o in orbits]} (all cocliques)")
