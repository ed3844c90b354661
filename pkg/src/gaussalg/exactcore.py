"""Monomials, the Borel order, and exact integer linear algebra.

Everything here works on Python ints; no floating point is used anywhere.
Matrices are plain lists of rows (lists or tuples of ints).
"""

from __future__ import annotations

import math
import re
import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

Matrix = Sequence[Sequence[int]]


class ShapeError(ValueError):
    pass


class DimensionError(ValueError):
    """The algebra does not have full dimension d."""


class BudgetExceeded(RuntimeError):
    def __init__(self, limit: int):
        super().__init__(f"subset budget of {limit} exceeded")
        self.limit = limit


# ---------------------------------------------------------------------------
# monomials


_TOKEN = re.compile(r"^x(\d+)(?:\^(\d+))?$")


@dataclass(frozen=True, order=True)
class Monomial:
    exps: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exps)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        object.__setattr__(self, "exps", exps)

    @classmethod
    def parse(cls, text: str, d: int) -> "Monomial":
        """Parse ``x1^2*x3`` (or ``1`` for the unit) into a monomial in d variables."""
        exps = [0] * d
        text = text.strip()
        if text == "1":
            return cls(tuple(exps))
        for tok in text.split("*"):
            m = _TOKEN.match(tok.strip())
            if not m:
                raise ValueError(f"bad monomial token {tok!r}")
            i = int(m.group(1))
            if not 1 <= i <= d:
                raise ValueError(f"variable x{i} outside 1..{d}")
            exps[i - 1] += int(m.group(2) or 1)
        return cls(tuple(exps))

    @classmethod
    def from_indices(cls, indices: Iterable[int], d: int) -> "Monomial":
        """x_{i_1} x_{i_2} ... from 1-based indices (repeats allowed)."""
        exps = [0] * d
        for i in indices:
            exps[i - 1] += 1
        return cls(tuple(exps))

    @property
    def d(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def support(self) -> tuple[int, ...]:
        """1-based indices of the variables dividing the monomial."""
        return tuple(i + 1 for i, e in enumerate(self.exps) if e)

    def indices(self) -> list[int]:
        """Weakly increasing 1-based index word i_1 <= ... <= i_r."""
        return [i + 1 for i, e in enumerate(self.exps) for _ in range(e)]

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __pow__(self, k: int) -> "Monomial":
        return Monomial(tuple(k * a for a in self.exps))

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exps, other.exps)))

    def shift(self, i: int, j: int) -> "Monomial":
        """x_i * (self / x_j), 1-based."""
        exps = list(self.exps)
        if exps[j - 1] == 0:
            raise ValueError(f"x{j} does not divide {self}")
        exps[j - 1] -= 1
        exps[i - 1] += 1
        return Monomial(tuple(exps))

    def __str__(self) -> str:
        parts = []
        for i, e in enumerate(self.exps, 1):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts) or "1"


def canonical(monomials: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Deduplicate and sort lexicographically, largest exponent vector first."""
    return tuple(sorted(set(monomials), reverse=True))


def monomial_set(vectors: Iterable[Sequence[int]]) -> tuple[Monomial, ...]:
    return canonical(Monomial(tuple(v)) for v in vectors)


def common_degree(monomials: Iterable[Monomial]) -> int:
    degrees = {m.degree for m in monomials}
    if len(degrees) != 1:
        raise ValueError(f"monomials are not equigenerated (degrees {sorted(degrees)})")
    return degrees.pop()


@dataclass(frozen=True)
class MonomialAlgebra:
    """K[gens] inside K[x_1..x_d]; gens distinct, canonical, of one degree."""

    d: int
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        gens = [g if isinstance(g, Monomial) else Monomial(tuple(g)) for g in self.gens]
        if not gens:
            raise ValueError("an algebra needs at least one generator")
        for g in gens:
            if g.d != self.d:
                raise ShapeError(f"{g} does not live in {self.d} variables")
        uniq = canonical(gens)
        if len(uniq) != len(gens):
            warnings.warn(f"dropped {len(gens) - len(uniq)} duplicate generator(s)", stacklevel=3)
        common_degree(uniq)
        object.__setattr__(self, "gens", uniq)

    @classmethod
    def from_vectors(cls, vectors: Iterable[Sequence[int]], d: int | None = None) -> "MonomialAlgebra":
        gens = [Monomial(tuple(v)) for v in vectors]
        if d is None:
            d = gens[0].d
        return cls(d, tuple(gens))

    @property
    def degree(self) -> int:
        return self.gens[0].degree

    def log_matrix(self) -> list[list[int]]:
        return log_matrix(self.gens)

    def __len__(self) -> int:
        return len(self.gens)


def log_matrix(monomials: Sequence[Monomial]) -> list[list[int]]:
    """d x n matrix whose columns are exponent vectors."""
    if not monomials:
        return []
    d = monomials[0].d
    return [[m.exps[i] for m in monomials] for i in range(d)]


# ---------------------------------------------------------------------------
# Borel order


def borel_leq(u: Monomial, v: Monomial) -> bool:
    """u <= v in the Borel order: sorted index words compare componentwise."""
    if u.degree != v.degree:
        raise ValueError("Borel order compares monomials of equal degree only")
    return all(i <= j for i, j in zip(u.indices(), v.indices()))


def borel_order_witness(u: Monomial, v: Monomial) -> int | None:
    """Tail-sum test for u not <= v.

    With supp(v) = {i_1 < ... < i_s} and exponents c_1..c_s of v, returns the
    least j such that the exponents of u beyond i_j sum to at least
    c_{j+1} + ... + c_s + 1, or None when no such j exists (u <= v).
    """
    if u.degree != v.degree:
        raise ValueError("Borel order compares monomials of equal degree only")
    supp = v.support
    c = [v.exps[i - 1] for i in supp]
    for j, ij in enumerate(supp, 1):
        if sum(u.exps[ij:]) >= sum(c[j:]) + 1:
            return j
    return None


# ---------------------------------------------------------------------------
# exact linear algebra


def _check_rect(M: Matrix) -> tuple[int, int]:
    rows = len(M)
    cols = len(M[0]) if rows else 0
    if any(len(r) != cols for r in M):
        raise ShapeError("ragged matrix")
    return rows, cols


def det_exact(M: Matrix) -> int:
    """Determinant by Bareiss fraction-free elimination."""
    n, cols = _check_rect(M)
    if n != cols:
        raise ShapeError(f"determinant of a non-square {n}x{cols} matrix")
    if n == 0:
        return 1
    A = [list(r) for r in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * A[n - 1][n - 1]


def det_cofactor(M: Matrix) -> int:
    """Laplace expansion along the first row; slow, used as an oracle."""
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    total = 0
    for j in range(n):
        if M[0][j]:
            minor = [row[:j] + row[j + 1:] for row in (list(r) for r in M[1:])]
            total += (-1) ** j * M[0][j] * det_cofactor(minor)
    return total


def rank(M: Matrix) -> int:
    """Rank over Q, by fraction-free elimination."""
    rows, cols = _check_rect(M)
    A = [list(r) for r in M]
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r]
        for i in range(r + 1, rows):
            a = A[i][c]
            if a:
                pc = p[c]
                A[i] = _primitive([pc * x - a * y for x, y in zip(A[i], p)])
        r += 1
        if r == rows:
            break
    return r


def _primitive(v: list[int]) -> list[int]:
    g = math.gcd(*v)
    if g > 1:
        return [x // g for x in v]
    return v


def transpose(M: Matrix) -> list[list[int]]:
    return [list(c) for c in zip(*M)]


class IncrementalRank:
    """Echelon form that grows one vector at a time.

    ``extend`` returns a new object (or None if the vector is dependent),
    leaving ``self`` untouched so it can be shared between search branches.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: tuple = ()):
        self.rows = rows  # tuple of (pivot index, primitive row)

    def reduce(self, v: Sequence[int]) -> list[int]:
        v = list(v)
        for p, row in self.rows:
            a = v[p]
            if a:
                b = row[p]
                v = [b * x - a * y for x, y in zip(v, row)]
        return v

    def extend(self, v: Sequence[int]) -> "IncrementalRank | None":
        w = self.reduce(v)
        for p, x in enumerate(w):
            if x:
                return IncrementalRank(self.rows + ((p, _primitive(w)),))
        return None

    def __len__(self) -> int:
        return len(self.rows)


def hnf(rows: Matrix, ncols: int | None = None) -> list[list[int]]:
    """Row Hermite normal form of the lattice spanned by ``rows``.

    Zero rows are dropped; pivots are positive and strictly to the right of
    the previous pivot; entries above a pivot lie in [0, pivot).
    """
    A = [list(r) for r in rows if any(r)]
    if ncols is None:
        ncols = len(A[0]) if A else 0
    A, r = _echelon(A, ncols)
    return A[:r]


def _echelon(A: list[list[int]], ncols: int) -> tuple[list[list[int]], int]:
    """Unimodular row reduction of the first ``ncols`` columns, in place.

    Returns the matrix and the number of pivot rows; rows past that index are
    zero on the first ``ncols`` columns.
    """
    r = 0
    m = len(A)
    for c in range(ncols):
        while True:
            nz = [i for i in range(r, m) if A[i][c]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(A[i][c]))
            A[r], A[piv] = A[piv], A[r]
            prow = A[r]
            p = prow[c]
            done = True
            for i in range(r + 1, m):
                a = A[i][c]
                if a:
                    q = a // p
                    A[i] = [x - q * y for x, y in zip(A[i], prow)]
                    if A[i][c]:
                        done = False
            if done:
                break
        if r < m and A[r][c]:
            if A[r][c] < 0:
                A[r] = [-x for x in A[r]]
            prow = A[r]
            p = prow[c]
            for i in range(r):
                q = A[i][c] // p
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], prow)]
            r += 1
            if r == m:
                break
    return A, r


@dataclass(frozen=True)
class LatticeBasis:
    """A sublattice of Z^dim, stored as its row Hermite normal form."""

    basis: tuple[tuple[int, ...], ...]
    dim: int

    @classmethod
    def from_generators(cls, vectors: Iterable[Sequence[int]], dim: int) -> "LatticeBasis":
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != dim:
                raise ShapeError(f"vector {v} not in Z^{dim}")
        return cls(tuple(tuple(r) for r in hnf(vectors, dim)), dim)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def __contains__(self, v: Sequence[int]) -> bool:
        w = list(v)
        for row in self.basis:
            c = next(i for i, x in enumerate(row) if x)
            for i in range(c):
                if w[i]:
                    return False
            q, rem = divmod(w[c], row[c])
            if rem:
                return False
            if q:
                w = [x - q * y for x, y in zip(w, row)]
        return not any(w)


def kernel_lattice(M: Matrix) -> LatticeBasis:
    """HNF basis of the integer kernel {v in Z^cols : M v = 0}."""
    rows, cols = _check_rect(M)
    if cols == 0:
        return LatticeBasis((), 0)
    # [M^T | I]; unimodular reduction on the M^T block leaves the kernel
    # basis in the identity block of the rows that became zero.
    aug = [[M[i][j] for i in range(rows)] + [int(k == j) for k in range(cols)] for j in range(cols)]
    aug, r = _echelon(aug, rows)
    kernel = [row[rows:] for row in aug[r:]]
    return LatticeBasis.from_generators(kernel, cols)


def lattice_equal(a: LatticeBasis, b: LatticeBasis) -> bool:
    if a.dim != b.dim:
        raise ShapeError(f"lattices live in Z^{a.dim} and Z^{b.dim}")
    return a.basis == b.basis


def difference_lattice(monomials: Sequence[Monomial]) -> LatticeBasis:
    """Lattice spanned by log(u) - log(v) over pairs of the given monomials."""
    first = monomials[0].exps
    diffs = [tuple(a - b for a, b in zip(m.exps, first)) for m in monomials[1:]]
    return LatticeBasis.from_generators(diffs, len(first))
