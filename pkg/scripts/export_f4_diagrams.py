#!/usr/bin/env python3
"""Write the Hasse and Pieri diagrams of both F4 quotients as DOT files."""

import argparse
from pathlib import Path

from chowring import hasse
from chowring.f4pipeline import NODE_P1, NODE_P4, get_f4_varieties


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", default="diagrams")
    parser.add_argument("--by-codim", action="store_true")
    args = parser.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    x1, x4 = get_f4_varieties()
    for ring, node, tag in ((x1, NODE_P1, "p1"), (x4, NODE_P4, "p4")):
        plain = hasse.build_hasse(ring.group, ring.theta)
        (outdir / f"hasse_{tag}.dot").write_text(
            hasse.export_dot(plain, by_codim=args.by_codim))
        weighted = hasse.build_pieri_diagram(ring, node)
        (outdir / f"pieri_{tag}.dot").write_text(hasse.export_dot(weighted))
        print(f"{tag}: {len(plain.edges)} hasse edges, "
              f"{len(weighted.edges)} weighted edges -> {outdir}")


if __name__ == "__main__":
    main()
