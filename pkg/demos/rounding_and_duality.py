"""Rounding properties, their failures, and the blocking-duality theorem.

The square C4 is bipartite, so every linear program over its incidence
matrix rounds integrally.  The triangle C3 is the smallest graph where
rounding fails, and the failure is certified three independent ways: a
fractional vertex, a Hilbert-basis witness, and an explicit objective
whose LP and IP optima disagree.
"""

from roundnorm.clutters import (clutter_from_matrix, cycle_graph, dual_matrix,
                                incidence_matrix, verify_duality_theorem)
from roundnorm.rounding import irp_check, mfmc_check


def show_systems(name, a):
    print(f"{name}:")
    for system in ("leq1", "geq1", "eq1"):
        v = irp_check(system, a, oracle_box=3)
        line = f"    {system}: theorem={v.theorem_route} oracle={v.oracle_route}"
        if v.counterexample is not None:
            obj, lp, rounded, ip = v.counterexample
            line += f"  (a={obj}: LP={lp}, rounded={rounded}, IP={ip})"
        print(line)


def main():
    square = incidence_matrix(cycle_graph(4))
    triangle = incidence_matrix(cycle_graph(3))

    show_systems("square C4", square)
    show_systems("triangle C3", triangle)

    print("\nmax-flow min-cut:")
    for name, a in (("C4", square), ("C3", triangle)):
        m = mfmc_check(a, oracle_box=3)
        extra = ""
        if m.fractional_vertex is not None:
            extra = "  fractional vertex " + str(
                tuple(str(x) for x in m.fractional_vertex))
        print(f"    {name}: {m.verdict}{extra}")

    print("\nblocking duality on the triangle clutter:")
    report = verify_duality_theorem(clutter_from_matrix(triangle))
    print(f"    Rees algebra of A normal:        {report.rees_normal}")
    print(f"    down-set ring of A* normal:      {report.dual_downset_normal}")
    print(f"    augmented columns Hilbert basis: {report.gamma_hilbert_basis}")
    print(f"    covering system rounds on A:     {report.covering_rounding}")
    print(f"    packing system rounds on A*:     {report.dual_packing_rounding}")
    print(f"    all five agree: {report.verdict}")

    print("\nthe same equivalence, checked directly across the dual pair:")
    for name, a in (("C4", square), ("C3", triangle)):
        lhs = irp_check("geq1", a).theorem_route
        rhs = irp_check("leq1", dual_matrix(a)).theorem_route
        print(f"    {name}: geq1 on A = {lhs}, leq1 on A* = {rhs}")


if __name__ == "__main__":
    main()
