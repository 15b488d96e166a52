#!/usr/bin/env python3
"""Run the full acceptance suite standalone and print one line per criterion.

Equivalent to `pytest tests/test_acceptance.py -s`; exits nonzero on failure.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

import test_acceptance as acc  # noqa: E402


def main() -> int:
    criteria = [
        acc.test_criterion_01_dimension_formulas,
        acc.test_criterion_02_presentation_relations,
        acc.test_criterion_03_associativity,
        acc.test_criterion_04_braid_word_problem,
        acc.test_criterion_05_length_theory,
        acc.test_criterion_06_poincare_polynomials,
        acc.test_criterion_07_classical_irreps,
        acc.test_criterion_08_isomorphism_theorems,
        acc.test_criterion_09_integral_structure_constants,
        acc.test_criterion_10_root_system_axioms,
        acc.test_criterion_11_worked_example_regression,
    ]
    failed = 0
    for fn in criteria:
        try:
            fn()
        except AssertionError as exc:
            failed += 1
            print(f"  -> {exc}")
    print("all criteria passed" if not failed else f"{failed} criteria FAILED")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
