"""Where Rees-algebra normality breaks.

A single odd cycle still has a normal Rees algebra, but two disjoint
odd cycles do not: the witness lives in degree (r+s)/2 for cycle
lengths r and s, and the certificate below is checked by independent
semigroup membership.  A 10x10 clutter then separates a matrix from its
dual: the Rees algebra on one side is normal while the other side
fails, so normality of the dual is a genuinely independent condition.
"""

from roundnorm.algebras import build_algebra, is_normal
from roundnorm.clutters import cycle_graph, disjoint_union, dual_matrix, incidence_matrix
from roundnorm.formats import parse_input
from roundnorm.hilbert import semigroup_membership

TEN_BY_TEN = """
matrix 10 10
0 0 0 1 0 1 1 1 1 1
0 0 1 1 1 1 1 1 1 1
1 1 1 0 1 1 1 1 1 1
1 0 0 0 0 1 1 1 1 1
0 1 0 0 1 1 1 1 1 0
1 1 1 1 0 0 0 0 1 0
1 1 1 1 1 0 0 1 1 1
1 1 1 1 1 1 1 1 0 1
1 1 1 1 1 1 0 0 0 0
1 1 1 1 1 0 1 0 0 1
"""


def report(name, matrix):
    spec = build_algebra("rees", matrix)
    cert = is_normal(spec)
    print(f"{name}: Rees algebra normal = {cert.verdict}")
    if cert.witness is not None:
        member, _ = semigroup_membership(cert.witness, spec.generator_vectors)
        print(f"    witness {cert.witness} "
              f"(independent membership re-check: {member})")
    return cert.verdict


def main():
    for r, s in ((3, 3), (3, 5), (5, 5)):
        g = disjoint_union(cycle_graph(r), cycle_graph(s))
        report(f"C{r} + C{s}", incidence_matrix(g))
    print("    (single odd cycles are fine:)")
    for r in (3, 5, 7):
        report(f"lone C{r}", incidence_matrix(cycle_graph(r)))

    print()
    a = parse_input(TEN_BY_TEN).payload
    normal_a = report("10x10 matrix A", a)
    normal_dual = report("its dual A*", dual_matrix(a))
    assert normal_a and not normal_dual


if __name__ == "__main__":
    main()
