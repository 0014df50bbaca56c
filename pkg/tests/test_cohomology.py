import itertools
import random

import pytest
from hypothesis import given, strategies as st

from flagcalc.cohomology import (
    CohomClass,
    FlagSpace,
    InvariantViolation,
    NamedCycle,
    class_partitions,
    cup_product,
    cycle,
    divisor,
    dynkin_involution,
    monk_step,
    named_cycle,
    parse_class,
    parse_space,
    pieri_product,
    product_on_space,
    schubert_basis,
    verify_lemmas,
)
from flagcalc.cohomology.cache import product_in_sn
from flagcalc.polyring import DomainError
from flagcalc.weyl import Permutation as P, all_permutations, grassmannian_permutation, partition_of


def sig(space, *entries):
    return CohomClass.sigma(space, P(entries))


def all_subsets(n):
    return [J for r in range(n) for J in itertools.combinations(range(1, n), r)]


# spaces -----------------------------------------------------------------------

def test_space_conventions():
    assert FlagSpace.grassmannian(2, 5).J == (1, 3, 4)
    assert FlagSpace.minimal(2, 5).J == (2,)
    assert FlagSpace.minimal(2, 5).dimension_vector == (1, 3, 4, 5)
    assert FlagSpace.partial((2, 3), 5).J == (1, 4)
    assert FlagSpace.grassmannian(2, 4).dimension == 4
    assert FlagSpace.full_flag(4).dimension == 6
    assert FlagSpace.minimal(1, 5).picard_rank == 3


@pytest.mark.parametrize("n", range(2, 6))
def test_dimension_is_top_length(n):
    for J in all_subsets(n):
        s = FlagSpace(n, J)
        assert s.dimension == max(w.length for w in s.coset_reps())
        assert s.picard_rank == len(s.divisors) == n - 1 - len(J)


def test_parse_space():
    assert parse_space("full-flag", 4) == FlagSpace.full_flag(4)
    assert parse_space("gr:2,4") == FlagSpace.grassmannian(2, 4)
    assert parse_space("minimal:1", 5) == FlagSpace.minimal(1, 5)
    assert parse_space("levi:{1,3},5") == FlagSpace(5, (1, 3))
    for s in [FlagSpace.full_flag(3), FlagSpace.grassmannian(1, 3), FlagSpace.minimal(2, 5), FlagSpace(6, (1, 4))]:
        assert parse_space(s.spec()) == s
    for bad in ["gr:5,4", "minimal:1", "levi:{7},5", "torus:3", "gr:2,4x"]:
        with pytest.raises(DomainError):
            parse_space(bad)
    with pytest.raises(DomainError):
        parse_space("gr:2,4", 5)


# bases ------------------------------------------------------------------------

def test_basis_examples():
    assert schubert_basis(FlagSpace.full_flag(3), 1) == [P(2, 1, 3), P(1, 3, 2)]
    assert schubert_basis(FlagSpace.grassmannian(2, 4), 0) == [P(1, 2, 3, 4)]
    assert set(schubert_basis(FlagSpace.grassmannian(2, 4), 2)) == {P(1, 4, 2, 3), P(2, 3, 1, 4)}
    with pytest.raises(DomainError):
        schubert_basis(FlagSpace.grassmannian(2, 4), 5)
    with pytest.raises(DomainError):
        schubert_basis(FlagSpace.grassmannian(2, 4), -1)


def test_class_validation():
    g = FlagSpace.grassmannian(2, 4)
    with pytest.raises(DomainError):
        sig(g, 2, 1, 3, 4)  # not in W^J
    with pytest.raises(DomainError):
        CohomClass(g, {P(1, 3, 2, 4): 1, P(1, 4, 2, 3): 1})  # mixed degrees
    with pytest.raises(DomainError):
        cup_product(sig(g, 1, 3, 2, 4), sig(FlagSpace.full_flag(4), 1, 3, 2, 4))


# products ---------------------------------------------------------------------

def test_product_examples():
    g24 = FlagSpace.grassmannian(2, 4)
    d2 = sig(g24, 1, 3, 2, 4)
    assert cup_product(d2, d2) == sig(g24, 1, 4, 2, 3) + sig(g24, 2, 3, 1, 4)
    g = FlagSpace.full_flag(4)
    d = sig(g, 1, 3, 2, 4)
    assert d * d == sig(g, 1, 4, 2, 3) + sig(g, 2, 3, 1, 4)
    assert d * CohomClass.unit(g) == d
    g25 = FlagSpace.grassmannian(2, 5)
    assert cycle("D(2,1)", g25) * cycle("D(2)", g25) == cycle("E1", g25)


def test_products_past_the_top_vanish():
    g = FlagSpace.grassmannian(1, 3)
    h = divisor(g, 1)
    assert (h * h * h).is_zero()


@pytest.mark.parametrize("n", range(2, 6))
def test_structure_constants_nonnegative_exhaustive(n):
    perms = all_permutations(n)
    top = n * (n - 1) // 2
    for i, u in enumerate(perms):
        for v in perms[i:]:
            if u.length + v.length <= top:
                prod = product_in_sn(u, v, n)
                assert all(c > 0 for c in prod.values())
                assert all(w.length == u.length + v.length for w in prod)


def test_monk_examples():
    g3 = FlagSpace.full_flag(3)
    assert monk_step(P(2, 1, 3), 1, g3) == sig(g3, 3, 1, 2)
    assert monk_step(P(1, 2, 3), 2, g3) == sig(g3, 1, 3, 2)
    g4 = FlagSpace.full_flag(4)
    assert monk_step(P(1, 3, 2, 4), 2, g4) == sig(g4, 1, 4, 2, 3) + sig(g4, 2, 3, 1, 4)
    with pytest.raises(DomainError):
        monk_step(P(1, 2, 3), 3, g3)


def test_monk_matches_polynomial_route_exhaustive_s5():
    g = FlagSpace.full_flag(5)
    for u in all_permutations(5):
        for r in range(1, 5):
            assert monk_step(u, r, g) == cup_product(divisor(g, r), CohomClass.sigma(g, u))


@pytest.mark.parametrize("n", range(3, 6))
def test_monk_on_partial_flags(n):
    for J in all_subsets(n):
        s = FlagSpace(n, J)
        for u in s.coset_reps():
            for r in s.divisors:
                assert monk_step(u, r, s) == cup_product(divisor(s, r), CohomClass.sigma(s, u))


@pytest.mark.parametrize("n", range(3, 6))
def test_invariant_subring_closed(n):
    rng = random.Random(n)
    for J in all_subsets(n):
        s = FlagSpace(n, J)
        reps = s.coset_reps()
        for _ in range(30):
            u, v = rng.choice(reps), rng.choice(reps)
            if u.length + v.length <= s.dimension:
                assert all(s.contains(w) for w in product_on_space(s, u, v))


def test_closure_violation_is_detected():
    g = FlagSpace.grassmannian(2, 4)
    with pytest.raises(InvariantViolation):
        product_on_space(g, P(2, 1, 3, 4), P(2, 1, 3, 4))


classes5 = st.sampled_from(list(all_permutations(5))).map(lambda w: CohomClass.sigma(FlagSpace.full_flag(5), w))


@given(classes5, classes5, classes5)
def test_commutative_and_associative(a, b, c):
    assert a * b == b * a
    if a.grade + b.grade + c.grade <= 10:
        assert (a * b) * c == a * (b * c)


@pytest.mark.parametrize("k,n", [(k, n) for n in range(2, 7) for k in range(1, n)])
def test_poincare_duality_grassmannian(k, n):
    g = FlagSpace.grassmannian(k, n)
    top = k * (n - k)
    reps = g.coset_reps()
    parts = {w: partition_of(w, k) for w in reps}
    top_class = [w for w in reps if w.length == top]
    assert len(top_class) == 1
    for u in reps:
        lam = parts[u]
        dual = tuple(n - k - p for p in reversed(list(lam) + [0] * (k - len(lam))))
        dual = tuple(p for p in dual if p)
        for v in reps:
            if u.length + v.length != top:
                continue
            prod = cup_product(CohomClass.sigma(g, u), CohomClass.sigma(g, v))
            if parts[v] == dual:
                assert prod == CohomClass.sigma(g, top_class[0])
            else:
                assert prod.is_zero()


# named cycles and lemmas ------------------------------------------------------

def test_named_cycle_examples():
    g24 = FlagSpace.grassmannian(2, 4)
    assert named_cycle(NamedCycle("D(2)", g24)) == sig(g24, 1, 3, 2, 4)
    assert named_cycle(NamedCycle("D(1,0)", FlagSpace.grassmannian(1, 5))).is_zero()
    assert named_cycle(NamedCycle("D(4,5)", FlagSpace.grassmannian(4, 5))).is_zero()
    g25 = FlagSpace.grassmannian(2, 5)
    e2 = named_cycle(NamedCycle("E2", g25))
    assert class_partitions(e2, 2) == {(3,): 1}
    assert cycle("E2", g24).is_zero()
    for bad in [("D(3)", g24), ("D(2,5)", g24), ("F1", g24), ("D(7)", g24)]:
        with pytest.raises(DomainError):
            named_cycle(NamedCycle(*bad))


def test_named_cycles_pull_back_to_flags():
    two_step = FlagSpace.partial((2, 3), 5)
    assert cycle("D(2,3)", two_step) == CohomClass.sigma(two_step, grassmannian_permutation((2,), 2, 5))
    assert cycle("D(3,2)", two_step) == CohomClass.sigma(two_step, grassmannian_permutation((1, 1), 3, 5))


def test_lemmas_hold_for_small_n():
    rows = verify_lemmas(range(4, 8))
    assert rows and all(r.passed for r in rows)
    identities = {r.identity for r in rows}
    assert len(identities) == 4


# Pieri and Dynkin -------------------------------------------------------------

def test_pieri_examples():
    assert pieri_product((1,), 2, 4) == [(2,), (1, 1)]
    assert pieri_product((2, 2), 2, 4) == []
    assert pieri_product((1, 1), 2, 5) == [(2, 1)]
    with pytest.raises(DomainError):
        pieri_product((3,), 2, 4)


@pytest.mark.parametrize("k,n", [(k, n) for n in range(2, 7) for k in range(1, n)])
def test_pieri_matches_cup_product(k, n):
    g = FlagSpace.grassmannian(k, n)
    h = divisor(g, k)
    for w in g.coset_reps():
        lam = partition_of(w, k)
        prod = cup_product(h, CohomClass.sigma(g, w))
        expected = {mu: 1 for mu in pieri_product(lam, k, n)}
        assert class_partitions(prod, k) == expected


def test_dynkin_examples():
    assert dynkin_involution(FlagSpace.minimal(1, 5)) == FlagSpace.minimal(4, 5)
    assert dynkin_involution(FlagSpace.full_flag(5)) == FlagSpace.full_flag(5)
    assert dynkin_involution(FlagSpace.grassmannian(2, 5)) == FlagSpace.grassmannian(3, 5)


@pytest.mark.parametrize("n", range(3, 6))
def test_dynkin_is_ring_involution(n):
    rng = random.Random(n)
    for J in all_subsets(n):
        s = FlagSpace(n, J)
        assert dynkin_involution(dynkin_involution(s)) == s
        reps = s.coset_reps()
        for _ in range(10):
            a, b = CohomClass.sigma(s, rng.choice(reps)), CohomClass.sigma(s, rng.choice(reps))
            assert dynkin_involution(dynkin_involution(a)) == a
            assert dynkin_involution(a * b) == dynkin_involution(a) * dynkin_involution(b)


def test_parse_class():
    g = FlagSpace.full_flag(4)
    assert parse_class("2*(1,3,2,4) - (2,1,3,4)", g) == 2 * sig(g, 1, 3, 2, 4) - sig(g, 2, 1, 3, 4)
    assert parse_class("D(2)", FlagSpace.grassmannian(2, 4)) == sig(FlagSpace.grassmannian(2, 4), 1, 3, 2, 4)
    with pytest.raises(DomainError):
        parse_class("(1,2,3,4,6,5)", g)
