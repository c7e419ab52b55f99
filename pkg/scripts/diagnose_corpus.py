"""Run the degree-5 diagnosis over the whole adversarial corpus.

Every candidate either breaks at a pinpointed chain identity or survives
to the closing contradiction; the point of the sweep is that no candidate
ever earns a "valid formula" verdict.  The discriminant-root flagship is
included last since its radicand takes a while to build.
"""

import argparse
import time

from radform.corpus import adversarial_candidates, discriminant_candidate
from radform.obstruction import run_ruffini


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--skip-flagship", action="store_true",
        help="leave out the slow discriminant-root candidate",
    )
    args = parser.parse_args()

    candidates = list(adversarial_candidates())
    if not args.skip_flagship:
        candidates.append(discriminant_candidate())

    grand_start = time.perf_counter()
    for name, formula in candidates:
        start = time.perf_counter()
        report = run_ruffini(formula)
        elapsed = time.perf_counter() - start
        print(f"== {name}  ({elapsed:.2f}s)")
        for line in report.lines():
            print("   " + line)
        assert report.refuted, name
    total = time.perf_counter() - grand_start
    print(f"\nall {len(candidates)} candidates refuted in {total:.2f}s")


if __name__ == "__main__":
    main()
