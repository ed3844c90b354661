"""Birationality of the Gauss map for squarefree 2-Veronese algebras, d = 4, 5, 6."""

import argparse
from dataclasses import dataclass

from gaussalg.exactcore import MonomialAlgebra
from gaussalg.gauss import algebra_dimension, gauss_generators, is_birational, normality_probe
from gaussalg.veronese import squarefree_veronese


@dataclass
class BirationalConfig:
    dims: tuple[int, ...] = (4, 5, 6)


def main(cfg: BirationalConfig):
    print("d\tedim G(A)\tdim G(A)\tbirational")
    for d in cfg.dims:
        A = MonomialAlgebra(d, squarefree_veronese(2, d))
        G = gauss_generators(A).gens
        print(f"{d}\t{len(G)}\t{algebra_dimension(G)}\t{is_birational(A, G)}")
    # d = 4 is the case with a non-normal Gauss algebra
    G4 = MonomialAlgebra(4, gauss_generators(MonomialAlgebra(4, squarefree_veronese(2, 4))).gens)
    probe = normality_probe(G4, 2)
    print("d=4 Gauss algebra normality probe:", "clean" if probe.clean else f"gap {probe.gap} at level {probe.gap_level}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("dims", nargs="*", type=int)
    args = p.parse_args()
    main(BirationalConfig(tuple(args.dims)) if args.dims else BirationalConfig())
