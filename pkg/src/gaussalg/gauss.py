"""Gauss algebras of monomial algebras.

For A = K[g_1, ..., g_n] of dimension d, the Gauss algebra is generated by the
monomials (g_{i_1} ... g_{i_d}) / (x_1 ... x_d) over d-subsets whose
log-matrix is nonsingular.  Two exact enumerators are provided:

``subsets``
    depth-first walk over index subsets (colex order) that abandons a branch as
    soon as the chosen columns become dependent.
``targeted``
    computes every exponent vector reachable as a sum of d distinct
    generators, then searches, for each such sum, for one decomposition with
    independent columns.  Far fewer nodes when many subsets share a product.

Both are brute force in the sense that neither uses structure theorems.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .exactcore import (
    BudgetExceeded,
    DimensionError,
    IncrementalRank,
    LatticeBasis,
    Monomial,
    MonomialAlgebra,
    canonical,
    common_degree,
    difference_lattice,
    kernel_lattice,
    lattice_equal,
    log_matrix,
    rank,
)

DEFAULT_LIMIT = 10**7
AUTO_SUBSET_THRESHOLD = 20_000


@dataclass(frozen=True)
class GaussResult:
    gens: tuple[Monomial, ...]
    source_degree: int
    d: int
    subset_count_examined: int
    method: str = "subsets"

    @property
    def degree(self) -> int:
        return (self.source_degree - 1) * self.d

    def __len__(self) -> int:
        return len(self.gens)


@dataclass(frozen=True)
class RelationReport:
    dim: int
    edim: int
    kernel_rank: int
    hypersurface_witness: tuple[dict[int, int], dict[int, int]] | None = None
    kernel_vector: tuple[int, ...] | None = None

    @property
    def is_hypersurface(self) -> bool:
        return self.kernel_rank == 1

    def binomial(self, var: str = "y") -> str | None:
        if self.hypersurface_witness is None:
            return None
        plus, minus = self.hypersurface_witness

        def term(part):
            return "*".join(f"{var}{i}" + (f"^{e}" if e > 1 else "") for i, e in sorted(part.items())) or "1"

        return f"{term(plus)} - {term(minus)}"


# ---------------------------------------------------------------------------
# enumeration


def _gauss_vector(vecs: Sequence[tuple[int, ...]], idx: Iterable[int]) -> tuple[int, ...]:
    total = [-1] * len(vecs[0])
    for i in idx:
        for k, x in enumerate(vecs[i]):
            total[k] += x
    return tuple(total)


def _subset_search(vecs, d, top_range, limit):
    """Colex DFS: the largest index is chosen first, then smaller ones."""
    found = set()
    count = 0

    def walk(hi, chosen, ech):
        nonlocal count
        k = d - len(chosen)
        # indices available below hi are 0..hi-1; need k of them
        for i in range(hi - 1, k - 2, -1):
            count += 1
            if count > limit:
                raise BudgetExceeded(limit)
            nxt = ech.extend(vecs[i])
            if nxt is None:
                continue
            if k == 1:
                found.add(_gauss_vector(vecs, chosen + (i,)))
            else:
                walk(i, chosen + (i,), nxt)

    empty = IncrementalRank()
    for top in top_range:
        count += 1
        if count > limit:
            raise BudgetExceeded(limit)
        ech = empty.extend(vecs[top])
        if ech is None:
            continue
        if d == 1:
            found.add(_gauss_vector(vecs, (top,)))
        else:
            walk(top, (top,), ech)
    return found, count


def _pack_base(vecs, d):
    return max(1, d * max(max(v) for v in vecs) + 1)


def _pack(v, base):
    x = 0
    for c in reversed(v):
        x = x * base + c
    return x


def _unpack(x, base, d):
    out = []
    for _ in range(d):
        x, c = divmod(x, base)
        out.append(c)
    return out


def _viable_targets(sums, base, d):
    # a zero coordinate means a zero row in every decomposition
    return sorted(t for t in sums if min(_unpack(t, base, d)) > 0)


def _suffix_reach(packed, d):
    """reach[i][k]: packed sums of k distinct vectors with index >= i."""
    n = len(packed)
    reach = [None] * (n + 1)
    reach[n] = [frozenset([0])] + [frozenset()] * d
    for i in range(n - 1, -1, -1):
        prev = reach[i + 1]
        p = packed[i]
        layer = [prev[0]]
        for k in range(1, d + 1):
            layer.append(prev[k] | frozenset(s + p for s in prev[k - 1]))
        reach[i] = layer
    return reach


def _targeted_search(vecs, d, targets, reach, packed, limit):
    n = len(vecs)
    found = set()
    count = 0

    def walk(start, k, residual, ech, chosen):
        nonlocal count
        for i in range(start, n - k + 1):
            res = residual - packed[i]
            if res not in reach[i + 1][k - 1]:
                continue
            count += 1
            if count > limit:
                raise BudgetExceeded(limit)
            nxt = ech.extend(vecs[i])
            if nxt is None:
                continue
            if k == 1:
                return chosen + (i,)
            hit = walk(i + 1, k - 1, res, nxt, chosen + (i,))
            if hit is not None:
                return hit
        return None

    empty = IncrementalRank()
    for t in targets:
        hit = walk(0, d, t, empty, ())
        if hit is not None:
            found.add(_gauss_vector(vecs, hit))
    return found, count


def _run_subsets(args):
    vecs, d, top_range, limit = args
    return _subset_search(vecs, d, top_range, limit)


def _run_targeted(args):
    vecs, d, targets, limit = args
    base = _pack_base(vecs, d)
    packed = [_pack(v, base) for v in vecs]
    reach = _suffix_reach(packed, d)
    return _targeted_search(vecs, d, targets, reach, packed, limit)


def _check_full_dimension(vecs, d):
    if rank(vecs) < d:
        raise DimensionError("algebra has dimension < d")


def gauss_generators(
    A: MonomialAlgebra,
    limit: int | None = DEFAULT_LIMIT,
    method: str = "auto",
    workers: int = 1,
) -> GaussResult:
    """Generating set of the Gauss algebra of A.

    ``limit`` bounds the number of search nodes; exceeding it raises
    BudgetExceeded rather than returning a partial answer.  ``method`` is one
    of "subsets", "targeted" or "auto".
    """
    d = A.d
    vecs = [g.exps for g in A.gens]
    n = len(vecs)
    _check_full_dimension(vecs, d)
    if limit is None:
        limit = math.inf
    if method == "auto":
        method = "subsets" if math.comb(n, d) <= AUTO_SUBSET_THRESHOLD else "targeted"

    if method == "subsets":
        tops = list(range(n - 1, d - 2, -1))
        chunks = [tops[w::workers] for w in range(workers)]
        jobs = [(vecs, d, c, limit) for c in chunks if c]
        runner = _run_subsets
    elif method == "targeted":
        base = _pack_base(vecs, d)
        packed = [_pack(v, base) for v in vecs]
        reach = _suffix_reach(packed, d)
        targets = _viable_targets(reach[0][d], base, d)
        if workers == 1:
            found, count = _targeted_search(vecs, d, targets, reach, packed, limit)
            return _result(found, A, count, method)
        jobs = [(vecs, d, targets[w::workers], limit) for w in range(workers)]
        runner = _run_targeted
    else:
        raise ValueError(f"unknown method {method!r}")

    if workers == 1:
        found, count = runner(jobs[0])
    else:
        found, count = set(), 0
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for f, c in pool.map(runner, jobs):
                found |= f
                count += c
        if count > limit:
            raise BudgetExceeded(limit)
    return _result(found, A, count, method)


def _result(found, A, count, method):
    gens = canonical(Monomial(v) for v in found)
    r = A.degree
    for g in gens:
        assert g.degree == (r - 1) * A.d, g
    return GaussResult(gens, r, A.d, count, method)


def gauss_by_definition(A: MonomialAlgebra) -> tuple[Monomial, ...]:
    """Every d-subset, determinant via IncrementalRank-free Bareiss; tiny inputs only."""
    from .exactcore import det_exact

    d = A.d
    found = set()
    for sub in combinations(A.gens, d):
        if det_exact(log_matrix(sub)):
            found.add(_gauss_vector([g.exps for g in sub], range(d)))
    return canonical(Monomial(v) for v in found)


# ---------------------------------------------------------------------------
# analytics


def algebra_dimension(A: MonomialAlgebra | Sequence[Monomial]) -> int:
    gens = A.gens if isinstance(A, MonomialAlgebra) else A
    return rank(log_matrix(list(gens)))


def relation_report(gens: Sequence[Monomial], witness: bool = True) -> RelationReport:
    """Dimension, embedding dimension and relation-lattice rank of K[gens].

    The generator order is kept as given: y_k stands for ``gens[k-1]``.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("empty generating set")
    common_degree(gens)
    M = log_matrix(gens)
    dim = rank(M)
    edim = len(gens)
    krank = edim - dim
    if krank != 1 or not witness:
        return RelationReport(dim, edim, krank)
    K = kernel_lattice(M)
    assert K.rank == 1
    vec = K.basis[0]
    plus = {i + 1: c for i, c in enumerate(vec) if c > 0}
    minus = {i + 1: -c for i, c in enumerate(vec) if c < 0}
    return RelationReport(dim, edim, krank, (plus, minus), vec)


def is_birational(A: MonomialAlgebra | Sequence[Monomial], G: Sequence[Monomial]) -> bool:
    """Quotient lattice of A equals the quotient lattice of G."""
    gens = A.gens if isinstance(A, MonomialAlgebra) else tuple(A)
    G = tuple(G)
    if not G:
        raise ValueError("empty Gauss set")
    common_degree(G)
    return lattice_equal(difference_lattice(gens), difference_lattice(G))


# ---------------------------------------------------------------------------
# normality probe


@dataclass(frozen=True)
class ProbeResult:
    level_bound: int
    gap: tuple[int, ...] | None = None
    gap_level: int | None = None
    checked: dict[int, int] = field(default_factory=dict)

    @property
    def clean(self) -> bool:
        return self.gap is None


def _compositions(total: int, parts: int):
    """All nonnegative integer vectors of length ``parts`` summing to ``total``,
    lexicographically largest first."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


class _Cone:
    """Membership in the rational cone spanned by integer vectors.

    A point lies in the cone iff it lies in the simplicial cone of some
    linearly independent subset of full rank (Caratheodory); each simplicial
    test is Cramer's rule with exact determinants.
    """

    def __init__(self, vectors: Sequence[tuple[int, ...]]):
        from .exactcore import det_exact, hnf

        self._det = det_exact
        vectors = list(vectors)
        self.rank = rank(vectors)
        # coordinates where the span has pivots; the span is the graph of a
        # linear map over them, so checking those coordinates plus span
        # membership suffices.
        H = hnf(vectors)
        self.pivots = [next(i for i, x in enumerate(row) if x) for row in H]
        self.span = [list(r) for r in H]
        self.bases = []
        for sub in combinations(vectors, self.rank):
            B = [[v[p] for v in sub] for p in self.pivots]
            D = det_exact(B)
            if D:
                self.bases.append((B, D))

    def _in_rational_span(self, v) -> bool:
        return rank(self.span + [list(v)]) == self.rank

    def __contains__(self, v) -> bool:
        if not self._in_rational_span(v):
            return False
        rhs = [v[p] for p in self.pivots]
        for B, D in self.bases:
            ok = True
            for j in range(self.rank):
                Bj = [row[:j] + [rhs[i]] + row[j + 1:] for i, row in enumerate(B)]
                if self._det(Bj) * D < 0:
                    ok = False
                    break
            if ok:
                return True
        return False


def normality_probe(A: MonomialAlgebra, level_bound: int = 3) -> ProbeResult:
    """Search degree k*r lattice points of the cone for a saturation gap.

    A reported gap proves A is not normal; a clean result says nothing beyond
    the levels checked.
    """
    if level_bound < 1:
        raise ValueError("level bound must be at least 1")
    vecs = [g.exps for g in A.gens]
    r = A.degree
    lattice = LatticeBasis.from_generators(vecs, A.d)
    cone = _Cone(vecs)
    sums = {tuple([0] * A.d)}
    checked = {}
    for k in range(1, level_bound + 1):
        sums = {tuple(a + b for a, b in zip(s, v)) for s in sums for v in vecs}
        n = 0
        for p in _compositions(k * r, A.d):
            if p in sums:
                n += 1
                continue
            if p in lattice and p in cone:
                return ProbeResult(level_bound, p, k, checked)
        checked[k] = n
    return ProbeResult(level_bound, None, None, checked)
