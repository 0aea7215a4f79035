#!/usr/bin/env python3
"""Print the hyperplane multiplication tables of both F4 quotients."""

import argparse
import json

from chowring.f4pipeline import NODE_P1, NODE_P4, get_f4_varieties
from chowring.schubert import format_table_text, hyperplane_table


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()

    x1, x4 = get_f4_varieties()
    for ring, node, name in ((x1, NODE_P1, "F4/P1"), (x4, NODE_P4, "F4/P4")):
        rows = hyperplane_table(ring, node)
        print(f"# {name}")
        if args.json:
            print(json.dumps(rows, indent=2))
        else:
            print(format_table_text(rows), end="")
        print()


if __name__ == "__main__":
    main()
