#!/usr/bin/env python3
"""Run every claim checker and print the reports.

Per-graph claims (lemma3, lemma5, theorem1, corollary, theorem3) run over the
embedded corpus of all connected graphs up to --max-n vertices; family claims
(lemma4, theorem2) run over their default parameter ranges unless --m-range
overrides them.  Invariant values are cached across checkers, so the whole
sweep costs little more than the slowest single claim.
"""
import argparse
import sys
import time

from sgc.verify import THEOREM_IDS, Corpus, verify_theorem


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=6,
                        help="embedded corpus size cap (default 6)")
    parser.add_argument("--m-range", metavar="LOW..HIGH",
                        help="family parameter range for lemma4/theorem2")
    parser.add_argument("--budget-nodes", type=int, default=None)
    parser.add_argument("--budget-ms", type=float, default=None)
    parser.add_argument("--json", action="store_true",
                        help="print each full report as JSON")
    args = parser.parse_args(argv)

    m_values = None
    if args.m_range:
        lo, _, hi = args.m_range.partition("..")
        m_values = tuple(range(int(lo), int(hi) + 1))

    corpus = Corpus.embedded(args.max_n)
    print(f"corpus: {len(corpus)} connected graphs with n <= {args.max_n}")
    cache: dict = {}
    rows = []
    for theorem_id in THEOREM_IDS:
        started = time.perf_counter()
        report = verify_theorem(
            theorem_id,
            corpus=corpus,
            m_values=m_values,
            budget_nodes=args.budget_nodes,
            budget_ms=args.budget_ms,
            cache=cache,
        )
        elapsed = time.perf_counter() - started
        rows.append((theorem_id, report, elapsed))
        if args.json:
            print(report.to_json())
        for violation in report.violations:
            print(f"  {theorem_id} violation {violation.graph6}: {violation.detail}")

    print()
    print(f"{'claim':<10} {'corpus':>7} {'checked':>8} {'verified':>9}"
          f" {'violations':>11} {'timeouts':>9} {'seconds':>8}")
    bad = 0
    for theorem_id, report, elapsed in rows:
        print(f"{theorem_id:<10} {report.corpus_size:>7} {report.hypothesis_count:>8}"
              f" {report.verified:>9} {len(report.violations):>11}"
              f" {report.timeouts:>9} {elapsed:>8.1f}")
        if theorem_id != "lemma4":  # lemma4's violations are the refutation
            bad += len(report.violations) + report.timeouts
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
