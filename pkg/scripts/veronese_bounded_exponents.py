"""Gauss sets of squarefree r-Veronese algebras vs Mon_S(r+1, (r-1)d) with exponents <= d-2.

Containment is expected; whether equality holds is reported, not assumed.
"""

import argparse
import time
from dataclasses import dataclass, field

from gaussalg.exactcore import MonomialAlgebra
from gaussalg.gauss import gauss_generators
from gaussalg.veronese import bounded_support_family, squarefree_veronese


@dataclass
class ProbeConfig:
    cases: list[tuple[int, int]] = field(default_factory=lambda: [(2, 4), (2, 5), (2, 6), (3, 5), (3, 6), (3, 7)])


def main(cfg: ProbeConfig):
    print("r\td\t|G(A)|\t|family|\tcontained\tequal\tseconds")
    for r, d in cfg.cases:
        t0 = time.perf_counter()
        G = set(gauss_generators(MonomialAlgebra(d, squarefree_veronese(r, d))).gens)
        F = set(bounded_support_family(r, d))
        print(f"{r}\t{d}\t{len(G)}\t{len(F)}\t{G <= F}\t{G == F}\t{time.perf_counter() - t0:.2f}")


def _pair(text):
    r, d = text.split(",")
    return int(r), int(d)


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("cases", nargs="*", type=_pair, help="r,d pairs")
    args = p.parse_args()
    main(ProbeConfig(args.cases) if args.cases else ProbeConfig())
