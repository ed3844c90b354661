"""Tabulate dim and relation rank of Gauss algebras over small graphs with one loop.

Flags every bipartite (graph, loop) pair where "hypersurface of dimension d-1"
and "even cycle" disagree.
"""

import argparse
from dataclasses import dataclass
from pathlib import Path

from gaussalg.graphs import SCAN_CAP, conjecture_scan


@dataclass
class ScanConfig:
    max_d: int = SCAN_CAP
    all_graphs: bool = False
    out: Path | None = None


def main(cfg: ScanConfig):
    report = conjecture_scan(cfg.max_d, bipartite_only=not cfg.all_graphs)
    table = report.format()
    if cfg.out:
        cfg.out.write_text(table + "\n")
    hyp = [r for r in report.rows if r.hypersurface_dim_d_minus_1]
    print(f"{len(report.rows)} (graph, loop) pairs on <= {cfg.max_d} vertices")
    print(f"{len(hyp)} hypersurfaces of dimension d-1, all even cycles: {all(r.even_cycle for r in hyp)}")
    print(f"{len(report.counterexamples)} counterexample candidates")
    for r in report.counterexamples:
        print("  candidate:", r)


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-d", type=int, default=SCAN_CAP)
    p.add_argument("--all-graphs", action="store_true")
    p.add_argument("--out", type=Path)
    main(ScanConfig(**vars(p.parse_args())))
