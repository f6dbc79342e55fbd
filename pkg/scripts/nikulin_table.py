#!/usr/bin/env python3
"""Print the face-count bound chain for 3 <= d <= 29."""

from coxeterlab.nikulin import three_free_contradiction
from coxeterlab.rationals import rat_str


def main():
    print(f"{'d':>3} {'A_d^(1,2)':>10} {'lower*a0 <':>12} {'upper*a0':>10} contradiction")
    for d in range(3, 30):
        r = three_free_contradiction(d)
        print(
            f"{d:>3} {rat_str(r.a_bound):>10} {rat_str(r.lower_coeff):>12} "
            f"{rat_str(r.upper_coeff):>10} {r.contradiction}"
        )


if __name__ == "__main__":
    main()
