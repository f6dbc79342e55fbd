#!/usr/bin/env python3
"""Reproduce the expansion-emptiness computations at a chosen label cap.

Every Lanner diagram of order 4 or 5 admits no 3-vertex expansion, and no
order-3 one admits a 5-vertex expansion; the searches verify this
exhaustively under the cap and print per-base counts.
"""

import argparse
import time

from coxeterlab.search import expansion_empty_for_order


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cap", type=int, default=10)
    ap.add_argument("--jobs", type=int, default=4)
    ap.add_argument("--verbose", action="store_true", help="print per-base counts")
    args = ap.parse_args()
    for order, extra in ((4, 3), (5, 3), (3, 5)):
        t0 = time.time()
        counts = expansion_empty_for_order(order, extra, cap=args.cap, jobs=args.jobs)
        verdict = "EMPTY" if all(v == 0 for v in counts.values()) else "NONEMPTY"
        print(
            f"order {order} + {extra} vertices @ cap {args.cap}: {verdict} "
            f"({len(counts)} bases, {time.time() - t0:.1f}s)"
        )
        if args.verbose or verdict == "NONEMPTY":
            for name, count in counts.items():
                if count or args.verbose:
                    print(f"  {name}: {count}")


if __name__ == "__main__":
    main()
