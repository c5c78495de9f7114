"""Blocking and antiblocking bodies, computed exactly.

Every polyhedron here is carried as exact rational data, so duality
statements can be checked as set equalities rather than numerically.
The antiblocker body of P = {x >= 0 : xA <= 1} is the down-set hull of
the columns, taking the antiblocker again recovers P, and fractional
vertices of the covering polyhedron Q witness max-flow min-cut failure.
"""

from roundnorm.clutters import cycle_graph, incidence_matrix
from roundnorm.polyhedra import (PolyhedronRep, antiblocker_from_matrix,
                                 covering_polyhedron, dd_convert,
                                 is_integral_polytope, lattice_points,
                                 polytope_P)


def fmt(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


def main():
    for name, n in (("square C4", 4), ("pentagon C5", 5)):
        a = incidence_matrix(cycle_graph(n))
        p = dd_convert(polytope_P(a))
        q = dd_convert(covering_polyhedron(a))
        print(f"{name}:")
        print(f"    P has {len(p.vertices)} vertices; "
              f"integral: {is_integral_polytope(p)}")
        print(f"    Q has {len(q.vertices)} vertices and {len(q.rays)} rays")
        for v in q.vertices:
            if any(x.denominator > 1 for x in v):
                print(f"        fractional vertex of Q: {fmt(v)}")

    print("\nantiblocker duality on the pentagon:")
    a = incidence_matrix(cycle_graph(5))
    p = dd_convert(polytope_P(a))
    t = antiblocker_from_matrix(a)
    ineqs = [(tuple(int(x) for x in v), 1) for v in t.vertices]
    ineqs += [(tuple(-(i == j) for j in range(5)), 0) for i in range(5)]
    back = dd_convert(PolyhedronRep.from_inequalities(ineqs, 5))
    print(f"    T = down-set hull with {len(t.vertices)} vertices")
    print(f"    antiblocker of T recovers P: "
          f"{set(back.vertices) == set(p.vertices)}")

    print("\nlattice points of P for the square (the stable sets of C4):")
    sq = dd_convert(polytope_P(incidence_matrix(cycle_graph(4))))
    for pt in sorted(lattice_points(sq), key=sum):
        print("   ", pt)


if __name__ == "__main__":
    main()
