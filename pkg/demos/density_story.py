#!/usr/bin/env python3
"""How common is a dominant root?

Exhaustively classify every integer polynomial of degree n and height
at most H (leading coefficient nonzero), count how many have a single
root of maximal modulus (k_max = 1) or a conjugate pair up there
(k_max = 2), and watch the excluded tail k_max >= 3 die off like a
negative power of H. The same machinery reports the signature split
(r real roots, s conjugate pairs) and the B* cells with k_max and
k_min both at most 2.
"""

from __future__ import annotations

import time

from rootcensus import CensusSpec, density_report, fit_growth_exponent, run_census

LINE = "-" * 72


def main() -> None:
    print(LINE)
    print("dominated shares for non-monic cubics, exhaustive over the box")
    print(LINE)
    heights = (4, 8, 16, 32)
    tables = []
    for H in heights:
        t0 = time.perf_counter()
        table = run_census(
            CensusSpec(n=3, height=H, counters=("A*", "B*", "D*"), engine="auto")
        )
        tables.append(table)
        fam = table.family("A*")
        tail = sum(v for k, v in fam.items() if int(k) >= 3)
        share = (fam.get("1", 0) + fam.get("2", 0)) / table.totals
        print(
            "H=%3d  box=%9d  k_max=1: %8d  k_max=2: %8d  k_max>=3: %6d"
            "  share(<=2)=%.6f  (%.1fs)"
            % (
                H,
                table.totals,
                fam.get("1", 0),
                fam.get("2", 0),
                tail,
                share,
                time.perf_counter() - t0,
            )
        )

    print()
    print("tail exponent: count(k_max >= 3) ~ H^slope")
    pts = []
    for H, table in zip(heights, tables):
        tail = sum(v for k, v in table.family("A*").items() if int(k) >= 3)
        pts.append((H, tail))
    fit = fit_growth_exponent(pts)
    print("  points %s" % (pts,))
    print("  slope %.4f  (box itself grows like H^4)" % fit.slope)

    print()
    print(LINE)
    print("density report (shares, partition checks, reciprocal symmetry)")
    print(LINE)
    rep = density_report(tables)
    for row in rep["rows"]:
        print(
            "H=%3d  dominant %.6f  pair %.6f  sum_check %s  D* cells %d"
            % (
                row["H"],
                row["dominant_ratio"],
                row["dominant_pair_ratio"],
                row["sum_check"],
                len(row["D*"]),
            )
        )
    print(
        "pair share rose from %.6f to %.6f: %s"
        % (rep["pair_ratio_first"], rep["pair_ratio_last"], rep["pair_ratio_increased"])
    )

    print()
    print("B* cells at the largest height (k_max,k_min both <= 2):")
    last = tables[-1]
    for label, k in sorted(last.family("B*").items()):
        nz = last.get("B*nz", label)
        print("  (%s): %8d   restricted to a_n != 0: %8d" % (label, k, nz))
    print(
        "reciprocal pairing on the a_n != 0 sub-box: (2,1) count %d == (1,2) count %d"
        % (last.get("B*nz", "2,1"), last.get("B*nz", "1,2"))
    )


if __name__ == "__main__":
    main()
