"""Borel (strongly stable) sets of monomials."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .exactcore import DimensionError, Monomial, borel_leq, canonical, common_degree


@dataclass(frozen=True)
class BorelSet:
    d: int
    degree: int
    members: tuple[Monomial, ...]

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, m):
        return m in self.members


def _moves(u: Monomial):
    """All x_i (u / x_j) with i < j and x_j | u."""
    for j in u.support:
        for i in range(1, j):
            yield u.shift(i, j)


def borel_closure(seed: Iterable[Monomial]) -> BorelSet:
    """Smallest strongly stable set containing ``seed``."""
    seed = list(seed)
    if not seed:
        raise ValueError("empty seed")
    r = common_degree(seed)
    seen = set(seed)
    work = list(seen)
    while work:
        u = work.pop()
        for w in _moves(u):
            if w not in seen:
                seen.add(w)
                work.append(w)
    return BorelSet(seed[0].d, r, canonical(seen))


def is_strongly_stable(G: Iterable[Monomial]) -> bool:
    G = set(G)
    if G:
        common_degree(G)
    # one-step moves x_{j-1}(u/x_j) generate all others
    return all(u.shift(j - 1, j) in G for u in G for j in u.support if j > 1)


def _as_borel(G) -> BorelSet:
    if isinstance(G, BorelSet):
        return G
    G = canonical(G)
    if not is_strongly_stable(G):
        raise ValueError("set is not strongly stable")
    return BorelSet(G[0].d, G[0].degree, G)


def borel_generators(G) -> tuple[Monomial, ...]:
    """The Borel-maximal elements; their closure is checked to give back G.

    In a strongly stable set, u is maximal iff no elementary up-move
    x_{i+1} (u / x_i) stays inside the set, so no pairwise comparison is needed.
    """
    G = _as_borel(G)
    members = G.members
    present = set(members)
    d = G.d
    gens = [u for u in members if not any(u.shift(i + 1, i) in present for i in u.support if i < d)]
    assert borel_closure(gens).members == members, "Borel generators do not regenerate the set"
    return canonical(gens)


def borel_maximal(G) -> tuple[Monomial, ...]:
    """Maximal elements under the Borel order by pairwise comparison, O(|G|^2)."""
    G = list(G)
    return canonical(u for u in G if not any(v != u and borel_leq(u, v) for v in G))


def is_principal(G) -> bool:
    return len(borel_generators(G)) == 1


def principal_gauss_generator(m: Monomial, d: int | None = None) -> Monomial:
    """Borel generator of the Gauss algebra of the principal Borel algebra <m>.

    With supp(m) = {i_1 < ... < i_s}, the result is m^{i_s} divided by
    x_{i_1}^{i_1 - 1} x_{i_2}^{i_2 - i_1} ... x_{i_s}^{i_s - i_{s-1} + 1}.
    A one-variable support m = x_d^a gives x_d^{(a-1)d}.
    """
    if d is None:
        d = m.d
    if m.d != d:
        raise ValueError(f"{m} is not a monomial in {d} variables")
    supp = m.support
    if not supp or supp[-1] != d:
        raise DimensionError("algebra dimension deficient: x_d does not divide the Borel generator")
    top = supp[-1]
    exps = [top * e for e in m.exps]
    prev = 1
    for i in supp:
        exps[i - 1] -= i - prev
        prev = i
    exps[top - 1] -= 1
    out = Monomial(tuple(exps))
    assert out.degree == (m.degree - 1) * d
    return out
