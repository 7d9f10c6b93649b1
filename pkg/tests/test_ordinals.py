import pytest
from hypothesis import assume, given

from gapwpo.errors import MalformedTerm, ZeroArgument, ZeroHasNoHead
from gapwpo.literals import parse_ord
from gapwpo.ordinals import (
    OMEGA,
    ONE,
    ZERO,
    Ordering3,
    PrincipalTerm,
    add,
    base_decompose,
    cmp_ord,
    cnf_head,
    hessenberg,
    is_epsilon,
    ldiv,
    lsub,
    mk_phi,
    mul,
    nat,
    nat_product,
    omega_pow,
    pow,
    psi,
)
from gapwpo.sampling import enum_ordinals
from tests.strategies import chains, ordinals, positive_ordinals


def o(text):
    return parse_ord(text)


class TestComparison:
    def test_constants(self):
        assert ZERO == nat(0) and ONE == nat(1)
        assert OMEGA == omega_pow(ONE) and str(OMEGA) == "w"

    def test_zero_below_one(self):
        assert cmp_ord(ZERO, ONE) is Ordering3.LT
        assert cmp_ord(ONE, ZERO).symbol == ">"
        assert cmp_ord(OMEGA, o("w")).symbol == "="

    def test_veblen_order(self):
        assert o("w^w^w") < o("phi(1,0)") < o("phi(1,1)") < o("phi(2,0)")
        assert o("phi(1,0)*2") < o("phi(1,1)")

    @given(ordinals(), ordinals())
    def test_trichotomy(self, a, b):
        assert [a < b, a == b, b < a].count(True) == 1

    @given(chains(enum_ordinals(4), lambda x, y: x <= y))
    def test_transitivity(self, chain):
        a, b, c = chain
        assert a <= c
        if a < b or b < c:
            assert a < c


class TestNormalForm:
    def test_queries(self):
        assert o("w+2").is_successor and not o("w").is_successor and not ZERO.is_successor
        assert o("3").is_finite and o("3").finite_value() == 3
        assert o("w*2+3").finite_part() == 3

    def test_fixed_point_collapses(self):
        assert o("phi(0,phi(1,0))") == o("phi(1,0)")
        assert mk_phi(ZERO, o("phi(1,0)")) == o("phi(1,0)")

    def test_rejects_non_normal_principal(self):
        with pytest.raises(MalformedTerm):
            PrincipalTerm(ZERO, o("phi(1,0)"))

    def test_rejects_negative_natural(self):
        with pytest.raises(MalformedTerm):
            nat(-1)

    def test_absorbed_summand(self):
        assert str(o("1+w")) == "w"
        assert str(o("w+w^2")) == "w^2"

    def test_epsilon(self):
        assert is_epsilon(o("phi(1,0)"))
        assert not is_epsilon(OMEGA)


class TestArithmetic:
    def test_sum_is_not_commutative(self):
        assert add(ONE, OMEGA) == OMEGA
        assert str(add(OMEGA, ONE)) == "w+1"

    def test_products(self):
        assert mul(nat(2), OMEGA) == OMEGA
        assert str(mul(OMEGA, nat(2))) == "w*2"
        assert str(mul(OMEGA, OMEGA)) == "w^2"

    def test_powers(self):
        assert pow(nat(2), OMEGA) == OMEGA
        assert str(pow(OMEGA, nat(2))) == "w^2"
        assert str(pow(nat(2), o("w^w"))) == "w^w^w"
        assert pow(ZERO, ZERO) == ONE

    def test_natural_operations(self):
        assert str(hessenberg(ONE, OMEGA)) == "w+1"
        assert str(nat_product(o("w+1"), o("w+1"))) == "w^2+w*2+1"

    def test_left_subtraction(self):
        assert lsub(OMEGA, o("w+3")) == nat(3)
        assert lsub(nat(2), OMEGA) == OMEGA
        assert lsub(OMEGA, nat(2)) == ZERO

    def test_ldiv(self):
        assert ldiv(o("w*2+3"), OMEGA) == (nat(2), nat(3))
        with pytest.raises(ZeroArgument):
            ldiv(ONE, ZERO)

    def test_base_decompose(self):
        assert base_decompose(o("w*2+3"), OMEGA) == (ONE, nat(2), nat(3))

    def test_cnf_head(self):
        assert cnf_head(o("w^2+3")) == (nat(2), nat(3))
        with pytest.raises(ZeroHasNoHead):
            cnf_head(ZERO)

    def test_psi(self):
        assert psi(ONE, ONE) == o("phi(1,0)")
        assert psi(ONE, nat(2)) == o("phi(1,2)")
        with pytest.raises(ZeroArgument):
            psi(ZERO, ONE)

    @given(ordinals(), ordinals(), ordinals())
    def test_sum_associative(self, a, b, c):
        assert add(add(a, b), c) == add(a, add(b, c))

    @given(ordinals(), ordinals(), ordinals())
    def test_left_distributive(self, a, b, c):
        assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))

    @given(ordinals(3), ordinals(3), ordinals(3))
    def test_exponent_of_sum(self, a, b, c):
        assert pow(a, add(b, c)) == mul(pow(a, b), pow(a, c))

    @given(ordinals(), ordinals())
    def test_natural_sum_symmetric(self, a, b):
        assert hessenberg(a, b) == hessenberg(b, a)
        assert add(a, b) <= hessenberg(a, b)

    @given(ordinals(), ordinals())
    def test_left_subtraction_inverse(self, a, b):
        assume(a <= b)
        assert add(a, lsub(a, b)) == b

    @given(ordinals(), positive_ordinals())
    def test_division(self, a, b):
        q, r = ldiv(a, b)
        assert add(mul(b, q), r) == a
        assert r < b

    @given(positive_ordinals())
    def test_cnf_head_recomposes(self, a):
        gamma, delta = cnf_head(a)
        assert add(omega_pow(gamma), delta) == a
