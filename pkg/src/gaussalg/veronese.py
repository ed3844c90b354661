"""Squarefree Veronese sets, the Mon_S(t, r) families and the exchange property."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .exactcore import Monomial, canonical, common_degree


def squarefree_veronese(r: int, d: int) -> tuple[Monomial, ...]:
    if not 1 <= r <= d:
        raise ValueError(f"need 1 <= r <= d, got r={r}, d={d}")
    return canonical(Monomial.from_indices(c, d) for c in combinations(range(1, d + 1), r))


def all_monomials(r: int, d: int) -> tuple[Monomial, ...]:
    """Every monomial of degree r in d variables."""
    from itertools import combinations_with_replacement

    return canonical(Monomial.from_indices(c, d) for c in combinations_with_replacement(range(1, d + 1), r))


def mon_min_support(t: int, r: int, d: int) -> tuple[Monomial, ...]:
    """Degree-r monomials in d variables whose support has at least t elements."""
    if t > d:
        raise ValueError(f"support bound {t} exceeds {d} variables")
    return tuple(m for m in all_monomials(r, d) if len(m.support) >= t)


def polymatroid_exchange_check(G: Sequence[Monomial]) -> tuple[Monomial, Monomial, int] | None:
    """Return None if G has the polymatroid exchange property, else a violating (u, v, i).

    For u, v in G and i with deg_i(u) > deg_i(v) there must be j with
    deg_j(u) < deg_j(v) and x_j (u / x_i) in G.  u runs over G in canonical
    order and v in the reverse order, so the reported triple pairs the
    lexicographically extreme elements first.  O(|G|^2 d).
    """
    G = canonical(G)
    if not G:
        return None
    common_degree(G)
    members = set(G)
    d = G[0].d
    for u in G:
        a = u.exps
        for v in reversed(G):
            b = v.exps
            for i in range(d):
                if a[i] <= b[i]:
                    continue
                if not any(a[j] < b[j] and u.shift(j + 1, i + 1) in members for j in range(d)):
                    return (u, v, i + 1)
    return None


def expected_gauss_squarefree2(d: int) -> tuple[Monomial, ...]:
    """Predicted Gauss generators of K[V_{2,d}]: Mon_S(3,d), minus x1x2x3x4 when d = 4."""
    if d < 4:
        raise ValueError("the Gauss algebra of K[V_{2,d}] is a polynomial ring for d <= 3")
    mons = mon_min_support(3, d, d)
    if d == 4:
        mons = tuple(m for m in mons if m != Monomial((1, 1, 1, 1)))
    return mons


def bounded_support_family(r: int, d: int) -> tuple[Monomial, ...]:
    """Monomials of Mon_S(r+1, (r-1)d) with every exponent at most d-2."""
    return tuple(m for m in mon_min_support(r + 1, (r - 1) * d, d) if max(m.exps) <= d - 2)
