"""Walk the cubic formula through the downward rewrite, step by step.

Builds the three-level tower behind the classical cubic solution (square
root of the discriminant expression, then the two cube roots), derives
polynomial witnesses from scratch, runs the rewrite, and prints each
intermediate document.  The level-2 skip is expected: after the top-level
rewrite the middle radicand no longer mentions its own generator.
"""

from fractions import Fraction

from radform.cyclotomic import root_of_unity
from radform.formula import FormalRadicalFormula, serialize, to_poly_formula, verify_poly_formula
from radform.multipoly import MPoly, symmetrize
from radform.resolvent import abel_polynomialize, derive_witnesses
from radform.tower import ATTESTED_ASSERTED, TowerSpec


def cubic_tower() -> FormalRadicalFormula:
    x = [MPoly.variable(3, i) for i in (1, 2, 3)]
    w = root_of_unity(3, 3)
    u = x[0] + w * x[1] + w ** 2 * x[2]
    v = x[0] + w ** 2 * x[1] + w * x[2]
    p0 = symmetrize((u ** 3 - v ** 3) ** 2).poly
    big_u = symmetrize(u ** 3 + v ** 3).poly
    spec = TowerSpec(3)
    spec.add_level(2, p0, ATTESTED_ASSERTED)
    lifted = spec.lift(spec.from_sigma_poly(big_u), 1)
    spec.add_level(3, (lifted + spec.generator(1)) * Fraction(1, 2), ATTESTED_ASSERTED)
    spec.add_level(
        3, spec.lift((lifted - spec.generator(1)) * Fraction(1, 2), 2), ATTESTED_ASSERTED
    )
    s1 = spec.lift(spec.from_sigma_poly(MPoly.variable(3, 1)), 3)
    target = (
        s1 + spec.lift(spec.generator(2), 3) + spec.generator(3)
    ) * Fraction(1, 3)
    return FormalRadicalFormula(spec, target)


def main():
    formula = cubic_tower()
    print("input document:\n")
    print(serialize(formula))

    witnesses, notes = derive_witnesses(formula)
    print("witness derivation:")
    for note in notes:
        print("   " + note)

    report = abel_polynomialize(formula, witnesses)
    print()
    print(report)
    print()
    for step in report.steps:
        tag = "skipped" if step.skipped else "rewritten"
        print(f"document after level {step.level} ({tag}):\n")
        print(serialize(step.formula))

    converted = to_poly_formula(report.final, report.witnesses)
    verdict = verify_poly_formula(converted)
    print("final polynomial document:\n")
    print(serialize(converted))
    print("verifies:", "yes" if verdict.all_pass else "NO")


if __name__ == "__main__":
    main()
