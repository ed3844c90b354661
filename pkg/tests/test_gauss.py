import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import monomials
from gaussalg.borel import borel_closure
from gaussalg.exactcore import BudgetExceeded, DimensionError, Monomial, MonomialAlgebra
from gaussalg.gauss import (
    algebra_dimension,
    gauss_by_definition,
    gauss_generators,
    is_birational,
    normality_probe,
    relation_report,
)
from gaussalg.veronese import all_monomials, squarefree_veronese


def alg(d, *texts):
    return MonomialAlgebra(d, tuple(Monomial.parse(t, d) for t in texts))


@st.composite
def full_dim_algebras(draw, max_d=4, max_degree=3, max_size=9):
    """Random equigenerated algebras of full dimension, via a Borel closure plus extras."""
    d = draw(st.integers(1, max_d))
    r = draw(st.integers(1, max_degree))
    top = draw(monomials(d, r).filter(lambda m: m.exps[-1] > 0))
    extra = draw(st.lists(monomials(d, r), max_size=3))
    gens = set(borel_closure([top]).members) | set(extra)
    gens = sorted(gens)[:max_size] if len(gens) > max_size else sorted(gens)
    A = MonomialAlgebra(d, tuple(gens))
    if algebra_dimension(A) < d:
        A = MonomialAlgebra(d, tuple(sorted(set(borel_closure([top]).members))))
    return A


def test_quadric_veronese_is_its_own_gauss_algebra():
    A = alg(2, "x1^2", "x1*x2", "x2^2")
    res = gauss_generators(A)
    assert res.gens == A.gens
    assert res.degree == 2


def test_polynomial_ring():
    A = alg(3, "x1", "x2", "x3")
    assert gauss_generators(A).gens == (Monomial((0, 0, 0)),)


def test_dimension_deficient_algebra_raises():
    with pytest.raises(DimensionError):
        gauss_generators(alg(3, "x1*x2", "x2*x3"))


def test_budget_exceeded_is_loud():
    A = MonomialAlgebra(5, squarefree_veronese(2, 5))
    with pytest.raises(BudgetExceeded):
        gauss_generators(A, limit=10, method="subsets")
    with pytest.raises(BudgetExceeded):
        gauss_generators(A, limit=10, method="targeted")


def test_unknown_method():
    with pytest.raises(ValueError):
        gauss_generators(alg(1, "x1"), method="magic")


def test_algebra_dimension_examples():
    assert algebra_dimension(MonomialAlgebra(4, squarefree_veronese(2, 4))) == 4
    assert algebra_dimension(alg(3, "x1*x2", "x2*x3")) == 2


@given(full_dim_algebras())
def test_methods_agree_with_definition(A):
    want = gauss_by_definition(A)
    for method in ("subsets", "targeted"):
        res = gauss_generators(A, method=method)
        assert res.gens == want
        assert all(g.degree == (A.degree - 1) * A.d for g in res.gens)


@given(full_dim_algebras(), st.randoms(use_true_random=False))
def test_independent_of_generator_order(A, rnd):
    gens = list(A.gens)
    rnd.shuffle(gens)
    shuffled = MonomialAlgebra(A.d, tuple(gens))
    assert gauss_generators(shuffled).gens == gauss_generators(A).gens


def test_parallel_matches_serial():
    A = MonomialAlgebra(5, squarefree_veronese(2, 5))
    serial = gauss_generators(A)
    for method in ("subsets", "targeted"):
        assert gauss_generators(A, method=method, workers=2).gens == serial.gens


# -- relations -------------------------------------------------------------


def test_even_cycle_relation():
    # keep the listing order x1^2x3x4, x1^2x2x3, x1^3x4, x1^3x2
    gens = [Monomial(v) for v in [(2, 0, 1, 1), (2, 1, 1, 0), (3, 0, 0, 1), (3, 1, 0, 0)]]
    rel = relation_report(gens)
    assert (rel.dim, rel.edim, rel.kernel_rank) == (3, 4, 1)
    plus, minus = rel.hypersurface_witness
    assert {frozenset(plus), frozenset(minus)} == {frozenset({1, 4}), frozenset({2, 3})}
    assert rel.binomial() in {"y1*y4 - y2*y3", "y2*y3 - y1*y4"}


def test_path_relation():
    gens = [Monomial.parse(t, 3) for t in ("x1^2*x2", "x2*x3^2", "x1*x3^2", "x1^2*x3")]
    rel = relation_report(gens)
    plus, minus = rel.hypersurface_witness
    assert {tuple(sorted(plus.items())), tuple(sorted(minus.items()))} == {((1, 1), (3, 2)), ((2, 1), (4, 2))}


def test_no_witness_unless_hypersurface():
    rel = relation_report(all_monomials(2, 3))
    assert rel.kernel_rank == 3 and rel.hypersurface_witness is None
    assert rel.binomial() is None


@given(full_dim_algebras())
def test_witness_vanishes(A):
    G = gauss_generators(A).gens
    rel = relation_report(G)
    assert rel.edim - rel.dim == rel.kernel_rank
    if rel.hypersurface_witness is not None:
        plus, minus = rel.hypersurface_witness
        d = A.d

        def total(part):
            return [sum(e * G[k - 1].exps[i] for k, e in part.items()) for i in range(d)]

        assert total(plus) == total(minus)


# -- birationality -----------------------------------------------------------


def test_birational_trivial_and_veronese():
    A = alg(2, "x1^2", "x1*x2", "x2^2")
    assert is_birational(A, A.gens)
    for d in (4, 5):
        A = MonomialAlgebra(d, squarefree_veronese(2, d))
        assert is_birational(A, gauss_generators(A).gens)


def test_not_birational_when_gauss_dim_drops():
    A = alg(4, "x1^2", "x1*x2", "x2^2", "x1*x3", "x2*x3", "x1*x4")
    G = gauss_generators(A).gens
    assert algebra_dimension(G) == 3
    assert not is_birational(A, G)


@given(full_dim_algebras())
def test_birational_with_itself(A):
    assert is_birational(A, A.gens)


# -- normality probe ---------------------------------------------------------


def test_curve_gap():
    curve = MonomialAlgebra.from_vectors([(6, 0), (5, 1), (4, 2), (3, 3), (0, 6)])
    probe = normality_probe(curve, 2)
    assert (probe.gap, probe.gap_level) == ((2, 4), 1)
    assert not probe.clean


def test_clean_cases():
    assert normality_probe(alg(2, "x1", "x2"), 3).clean
    eight = MonomialAlgebra.from_vectors([(8 - i, i) for i in range(9)])
    assert normality_probe(eight, 3).clean


def test_probe_rejects_bad_bound():
    with pytest.raises(ValueError):
        normality_probe(alg(2, "x1", "x2"), 0)


def test_two_variable_gap_search_is_sound():
    # every gap is a lattice point of the cone missing from the semigroup
    rnd = random.Random(7)
    for _ in range(10):
        r = rnd.randint(2, 5)
        exps = sorted(set(rnd.sample(range(r + 1), k=min(3, r + 1))) | {0, r})
        A = MonomialAlgebra.from_vectors([(r - a, a) for a in exps])
        probe = normality_probe(A, 2)
        if probe.gap is not None:
            assert sum(probe.gap) == probe.gap_level * r
            assert probe.gap not in {m.exps for m in A.gens}
