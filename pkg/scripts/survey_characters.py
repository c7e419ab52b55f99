"""Survey symmetry characters across degrees 3, 4, 5.

For each sample polynomial f and prime q with f^q invariant under even
permutations, print the character table on the standard three-cycle
generators and the keeping-symmetry verdict.  Below five variables the
counterexample characters show up; from five on, every character is
forced trivial, shown through both the generator identities and the
commutator-closure oracle.
"""

from radform.corpus import vandermonde
from radform.cyclotomic import root_of_unity
from radform.multipoly import MPoly, elem_sym
from radform.obstruction import keeping_symmetry
from radform.permchar import verify_hom_trivial


def cubic_resolvent() -> MPoly:
    w = root_of_unity(3, 3)
    x = [MPoly.variable(3, i) for i in (1, 2, 3)]
    return x[0] + w * x[1] + w ** 2 * x[2]


def main():
    samples = [
        ("cubic resolvent", cubic_resolvent(), 3),
        ("vandermonde n=3", vandermonde(3), 2),
        ("vandermonde n=5", vandermonde(5), 2),
        ("elementary sigma_2 n=5", elem_sym(5, 2), 3),
    ]
    for label, f, q in samples:
        print(f"== {label}, q={q}")
        verdict = keeping_symmetry(f, q)
        for line in verdict.lines():
            print("   " + line)
        print()

    for q in (2, 3, 5, 7):
        print(f"== triviality of degree-5 characters, q={q}")
        report = verify_hom_trivial(5, q)
        for line in report.lines():
            print("   " + line)
        print()


if __name__ == "__main__":
    main()
