#!/usr/bin/env python3
"""Survey the order-n landscape: factorization counts, structure classes, and
how the bundled examples sit inside them.

For each n the generated chain products are checked pairwise, both as posets
and as algebras. Each bundled difference table is then matched against the
generated classes of its order.
"""

import argparse

from bckalg import (
    check_bck,
    enumerate_wajsberg,
    factorizations,
    find_isomorphism,
    fixture_dir,
    load_algebra,
    poset_isomorphic,
    wajsberg_to_bck,
)
from bckalg.golden import EXAMPLES, diagnose_wajsberg


def survey_orders(max_order: int) -> None:
    print(f"{'n':>3}  {'pi_n':>4}  classes")
    for n in range(2, max_order + 1):
        facts = factorizations(n)
        algs = enumerate_wajsberg(n)
        labels = ", ".join(f.label for f in facts)
        print(f"{n:>3}  {len(facts):>4}  {labels}")
        for i in range(len(algs)):
            for j in range(i + 1, len(algs)):
                assert not poset_isomorphic(algs[i], algs[j]), (n, i, j)
                assert find_isomorphism(algs[i], algs[j]) is None, (n, i, j)
    print("all classes pairwise non-isomorphic (as posets and as algebras)")


def match_fixtures() -> None:
    print("\nfixture structure classes:")
    for ex in EXAMPLES:
        stored = load_algebra(fixture_dir() / f"{ex}_bck.alg")
        diag = diagnose_wajsberg(load_algebra(fixture_dir() / f"{ex}_wajsberg.alg"))
        target = stored if check_bck(stored).passed else wajsberg_to_bck(diag.corrected)
        note = "" if target is stored else " (after misprint correction)"
        for fact, cand in zip(factorizations(target.order), enumerate_wajsberg(target.order)):
            if find_isomorphism(target, wajsberg_to_bck(cand)) is not None:
                print(f"  {ex}: order {target.order}, isomorphic to {fact.label}{note}")
                break
        else:
            print(f"  {ex}: no matching chain product (unexpected)")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-order", type=int, default=12)
    args = parser.parse_args()
    survey_orders(args.max_order)
    match_fixtures()


if __name__ == "__main__":
    main()
