"""The ten headline checks, each timed against its stated budget.

Run with `pytest tests/test_acceptance.py -s` to see the one-line
verdicts.  Every check is exact (no numerical tolerance anywhere); the
budgets are wall-clock seconds on ordinary hardware.
"""

import contextlib
import io
import random
import time
from fractions import Fraction

from radform.cli import main as cli_main
from radform.corpus import adversarial_candidates, vandermonde
from radform.cyclotomic import root_of_unity
from radform.formula import builtin, parse, serialize, to_poly_formula, verify_poly_formula
from radform.multipoly import MPoly, elem_sym, symmetrize
from radform.obstruction import keeping_symmetry, run_ruffini
from radform.permchar import Perm, an_generators, close_group, commutator_closure, verify_hom_trivial
from radform.resolvent import abel_polynomialize, build_R, derive_witnesses, telescope_average
from radform.tower import ATTESTED_ASSERTED, TowerSpec, check_annihilation


def _verdict(number, budget, description, body):
    start = time.perf_counter()
    try:
        body()
    except BaseException:
        print(f"criterion {number:2d} FAIL        {description}")
        raise
    elapsed = time.perf_counter() - start
    print(
        f"criterion {number:2d} PASS {elapsed:6.2f}s  {description} (budget {budget}s)"
    )
    assert elapsed < budget, f"{elapsed:.2f}s exceeds the {budget}s budget"


def _cubic_resolvents():
    x = [MPoly.variable(3, i) for i in (1, 2, 3)]
    w = root_of_unity(3, 3)
    return x[0] + w * x[1] + w ** 2 * x[2], x[0] + w ** 2 * x[1] + w * x[2]


def _random_sigma_poly(rng, n, terms, max_deg):
    f = MPoly.zero(n)
    for _ in range(terms):
        exps = [0] * n
        for _ in range(rng.randint(0, max_deg)):
            exps[rng.randrange(n)] += 1
        c = Fraction(rng.randint(-4, 4), rng.choice([1, 1, 2]))
        if c:
            f = f + MPoly.monomial(n, tuple(exps), c)
    return f


def test_01_quadratic_example():
    def body():
        report = verify_poly_formula(builtin("degree2"))
        assert report.all_pass

    _verdict(1, 0.1, "quadratic formula verifies exactly", body)


def test_02_cubic_chain():
    def body():
        formula = builtin("degree3")
        report = verify_poly_formula(formula)
        assert report.all_pass
        u, v = _cubic_resolvents()
        assert symmetrize(u ** 3 + v ** 3).expand() == u ** 3 + v ** 3
        assert symmetrize((u ** 3 - v ** 3) ** 2).expand() == (u ** 3 - v ** 3) ** 2

    _verdict(2, 1.0, "cubic chain verifies with symmetrized coefficients", body)


def test_03_triviality_both_routes():
    def body():
        a5 = close_group(an_generators(5))
        assert len(a5) == 60
        assert commutator_closure(an_generators(5)) == a5
        for q in (2, 3, 5, 7):
            report = verify_hom_trivial(5, q)
            assert report.trivial
            assert report.derivations
            assert any(run.n == 5 and run.perfect for run in report.oracle_runs)

    _verdict(3, 1.0, "degree-5 characters trivial via identities and oracle", body)


def test_04_symmetry_boundary():
    def body():
        certificate = keeping_symmetry(vandermonde(5), 2)
        assert certificate.certified
        u, _ = _cubic_resolvents()
        counter = keeping_symmetry(u, 3)
        assert not counter.certified
        three_cycle = Perm.from_cycles("(1 2 3)", 3)
        assert counter.character.values[three_cycle] == root_of_unity(3, 3)

    _verdict(4, 1.0, "symmetry kept at n=5, counterexample character at n=3", body)


def test_05_random_inverses():
    def body():
        s1, s2 = MPoly.variable(2, 1), MPoly.variable(2, 2)
        quad = TowerSpec(2)
        quad.add_level(2, quad.from_sigma_poly(s1 ** 2 - 4 * s2), ATTESTED_ASSERTED)
        u, v = _cubic_resolvents()
        cubic = TowerSpec(3)
        cubic.add_level(
            3, symmetrize((u ** 3 - v ** 3) ** 2).poly, ATTESTED_ASSERTED
        )
        rng = random.Random(0)
        done = 0
        for spec, n, count, rich in ((quad, 2, 60, True), (cubic, 3, 40, False)):
            k = spec.ks[0]
            for _ in range(count):
                while True:
                    special = rng.randrange(k)
                    coeffs = []
                    for m in range(k):
                        if rich:
                            coeffs.append(_random_sigma_poly(rng, n, 2, 2))
                        elif m == special:
                            coeffs.append(_random_sigma_poly(rng, n, 1, 1))
                        else:
                            coeffs.append(
                                MPoly.constant(n, Fraction(rng.randint(-4, 4)))
                            )
                    element = spec.zero(1)
                    for m, coeff in enumerate(coeffs):
                        element = element + spec.lift(
                            spec.from_sigma_poly(coeff), 1
                        ) * spec.generator(1) ** m
                    if not element.is_zero():
                        break
                assert element * element.inverse() == spec.one(1)
                done += 1
        assert done == 100

    _verdict(5, 10.0, "100 random tower inverses multiply back to 1", body)


def test_06_annihilation():
    def body():
        rng = random.Random(0)
        s1, s2 = MPoly.variable(2, 1), MPoly.variable(2, 2)
        for k in (2, 3):
            spec = TowerSpec(2)
            spec.add_level(
                k, spec.from_sigma_poly(s1 ** 2 - 4 * s2), ATTESTED_ASSERTED
            )
            rho = spec.ps[0]
            defining = [-1 * rho] + [spec.zero(0)] * (k - 1) + [spec.one(0)]
            report = check_annihilation(spec, 1, defining)
            assert report.annihilates
            for _ in range(20):
                multiplier = [
                    spec.from_sigma_poly(_random_sigma_poly(rng, 2, 2, 2))
                    for _ in range(rng.randint(1, 2))
                ]
                product = _upoly_mul(defining, multiplier, spec)
                assert check_annihilation(spec, 1, product).annihilates
                remainder = [
                    spec.from_sigma_poly(_random_sigma_poly(rng, 2, 1, 1))
                    for _ in range(k)
                ]
                if all(c.is_zero() for c in remainder):
                    remainder[0] = spec.one(0)
                perturbed = list(product)
                for m, c in enumerate(remainder):
                    perturbed[m] = perturbed[m] + c
                assert not check_annihilation(spec, 1, perturbed).annihilates

    _verdict(6, 1.0, "defining polynomial annihilates; perturbations do not", body)


def _upoly_mul(a, b, spec):
    out = [spec.zero(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] = out[i + j] + ca * cb
    return out


def test_07_last_radical_round_trip(tmp_path):
    def body():
        tower = parse(
            "towerformula n=2 s=1\n"
            "k 2\n"
            "p 0 = s1^2 - 4*s2\n"
            "target = (s1 + y1)/2\n"
            "assert-nonpower 1\n"
        )
        witnesses, notes = derive_witnesses(tower)
        report = abel_polynomialize(tower, witnesses)
        x1, x2 = MPoly.variable(2, 1), MPoly.variable(2, 2)
        assert report.witnesses == [(x1 - x2) / 2]
        assert notes == ["level 1: extracted root times w(2)^0"]
        document = tmp_path / "round_trip.poly"
        document.write_text(
            serialize(to_poly_formula(report.final, report.witnesses))
        )
        with contextlib.redirect_stdout(io.StringIO()):
            assert cli_main(["verify", str(document)]) == 0

        rng = random.Random(0)
        spec = tower.spec
        for trial in range(100):
            k = (2, 3, 5)[trial % 3]
            coeffs = [
                spec.from_sigma_poly(_random_sigma_poly(rng, 2, 2, 2))
                for _ in range(k)
            ]
            coeffs[1] = spec.one(0)
            averaged = telescope_average(coeffs, k)
            for m in range(k):
                expected = coeffs[1] if m == 1 else spec.zero(0)
                assert averaged[m] == expected

    _verdict(7, 10.0, "degree-2 rewrite gives (x1-x2)/2 and telescoping holds", body)


def test_08_diagnosis_exhaustive():
    def body():
        candidates = adversarial_candidates()
        assert len(candidates) >= 10
        for name, formula in candidates:
            report = run_ruffini(formula)
            assert report.refuted, name
            broken = report.first_failure()
            assert broken is not None or report.contradiction is not None, name

    _verdict(8, 30.0, "every adversarial degree-5 candidate is refuted", body)


def test_09_symmetrize_round_trip():
    def body():
        rng = random.Random(0)
        for _ in range(200):
            n = rng.randint(1, 4)
            f = MPoly.zero(n)
            for _ in range(rng.randint(1, 3)):
                exps = [0] * n
                budget = 6
                while budget > 0 and rng.random() < 0.8:
                    i = rng.randint(1, n)
                    if i > budget:
                        break
                    exps[i - 1] += 1
                    budget -= i
                term = MPoly.constant(
                    n, Fraction(rng.randint(-5, 5), rng.choice([1, 2]))
                )
                for i, e in enumerate(exps, start=1):
                    if e:
                        term = term * elem_sym(n, i) ** e
                f = f + term
            assert symmetrize(f).expand() == f

    _verdict(9, 30.0, "200 symmetrize round trips are exact", body)


def test_10_orbit_product():
    def body():
        s1, s2 = MPoly.variable(2, 1), MPoly.variable(2, 2)
        coeffs = build_R(MPoly.variable(2, 1) - MPoly.variable(2, 2))
        assert [c.poly for c in coeffs] == [
            -1 * (s1 ** 2 - 4 * s2),
            MPoly.zero(2),
            MPoly.constant(2, 1),
        ]

    _verdict(10, 0.1, "orbit product of x1-x2 recovers the discriminant", body)
