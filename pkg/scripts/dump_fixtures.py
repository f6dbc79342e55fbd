#!/usr/bin/env python3
"""Regenerate fixtures/paper/*.cox from the built-in fixture library."""

import argparse
import os

from coxeterlab.fixtures import write_fixture_files


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    default = os.path.join(os.path.dirname(__file__), "..", "fixtures", "paper")
    ap.add_argument("--out", default=os.path.normpath(default))
    args = ap.parse_args()
    paths = write_fixture_files(args.out)
    print(f"wrote {len(paths)} files under {args.out}")


if __name__ == "__main__":
    main()
