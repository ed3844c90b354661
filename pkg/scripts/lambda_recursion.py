"""Compare lambda_d with 3 lambda_{d-1} - lambda_{d-2}, and with forest counts for small d."""

import argparse
from dataclasses import dataclass

from gaussalg.graphs import gauss_from_forests, lambda_recursion_table, path_graph


@dataclass
class LambdaConfig:
    max_d: int = 12
    brute_max_d: int = 7


def main(cfg: LambdaConfig):
    print("d\tlambda\t3l(d-1)-l(d-2)\tforest generators")
    for d, lam, pred in lambda_recursion_table(cfg.max_d):
        brute = len(gauss_from_forests(path_graph(d, range(1, d + 1)))) if d <= cfg.brute_max_d else ""
        print(f"{d}\t{lam}\t{'' if pred is None else pred}\t{brute}")
    ok = all(pred is None or pred == lam for _, lam, pred in lambda_recursion_table(cfg.max_d))
    print(f"recursion holds up to d={cfg.max_d}: {ok}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-d", type=int, default=12)
    p.add_argument("--brute-max-d", type=int, default=7)
    main(LambdaConfig(**vars(p.parse_args())))
