import pytest
from hypothesis import given, strategies as st

from sternbrocot import (
    DomainError,
    ExtendedRational,
    INFINITE_POINT,
    INFINITY,
    ParseError,
    is_farey_pair,
    make_rational,
    mediant,
    vertex_point,
)

R = ExtendedRational


class TestMakeRational:
    def test_caption_value(self):
        assert make_rational(-4, 7) == R(-4, 7)
        assert str(make_rational(-4, 7)) == "-4/7"

    def test_sign_and_gcd_normalization(self):
        x = make_rational(2, -4)
        assert (x.num, x.den) == (-1, 2)

    def test_any_nonzero_over_zero_is_the_infinite_value(self):
        assert make_rational(-3, 0) == INFINITY
        assert make_rational(7, 0) == INFINITY

    def test_rejects_zero_over_zero(self):
        with pytest.raises(DomainError):
            make_rational(0, 0)

    def test_zero_normalizes_to_0_over_1(self):
        assert (make_rational(0, -5).num, make_rational(0, -5).den) == (0, 1)

    @given(st.integers(-10**6, 10**6), st.integers(1, 10**4), st.integers(-50, 50))
    def test_normalization_idempotent_under_scaling(self, p, q, k):
        if k == 0:
            k = 1
        assert make_rational(p * k, q * k) == make_rational(p, q)


class TestFareyPairs:
    @pytest.mark.parametrize(
        "a, b, expected",
        [
            (R(0, 1), R(1, 1), True),
            (R(2, 7), R(1, 3), True),
            (R(1, 3), R(2, 3), False),
            (R(1, 0), R(0, 1), True),
            (R(1, 0), R(5, 1), True),
            (R(1, 0), R(1, 2), False),
        ],
    )
    def test_examples(self, a, b, expected):
        assert is_farey_pair(a, b) is expected

    @given(st.integers(-99, 99), st.integers(0, 40), st.integers(-99, 99), st.integers(0, 40))
    def test_symmetric(self, p, q, r, s):
        if (p, q) == (0, 0) or (r, s) == (0, 0):
            return
        a, b = R(p, q), R(r, s)
        assert is_farey_pair(a, b) == is_farey_pair(b, a)


def _walk_to_farey_pair(moves):
    """Descend the Stern-Brocot tree from (0/1, 1/0); every node is a Farey pair."""
    a, b = R(0, 1), R(1, 0)
    for left in moves:
        m = mediant(a, b)
        if left:
            b = m
        else:
            a = m
    return a, b


class TestMediant:
    def test_examples(self):
        assert mediant(R(0, 1), R(1, 1)) == R(1, 2)
        assert mediant(R(1, 4), R(1, 3)) == R(2, 7)
        assert mediant(R(1, 0), R(0, 1)) == R(1, 1)

    def test_mediant_example_forms_triple(self):
        a, b, m = R(1, 4), R(1, 3), mediant(R(1, 4), R(1, 3))
        assert is_farey_pair(a, m) and is_farey_pair(m, b) and is_farey_pair(a, b)

    def test_rejects_non_farey_input(self):
        with pytest.raises(DomainError):
            mediant(R(1, 3), R(2, 3))

    @given(st.lists(st.booleans(), max_size=14))
    def test_mediant_completes_every_pair_to_a_triple(self, moves):
        a, b = _walk_to_farey_pair(moves)
        m = mediant(a, b)
        assert is_farey_pair(a, m) and is_farey_pair(m, b)


class TestVertexPoint:
    def test_examples(self):
        p = vertex_point(R(2, 7))
        assert (p.x, p.y) == (R(2, 7), R(1, 7))
        p5 = vertex_point(R(5))
        assert (p5.x, p5.y) == (R(5), R(1))
        assert vertex_point(INFINITY) is INFINITE_POINT

    @given(st.integers(-200, 200), st.integers(1, 200))
    def test_y_is_exactly_one_over_den(self, p, q):
        v = R(p, q)
        pt = vertex_point(v)
        assert pt.y == R(1, v.den)

    def test_injective_on_distinct_values(self):
        seen = {}
        for p in range(-12, 13):
            for q in range(1, 13):
                v = R(p, q)
                pt = vertex_point(v)
                key = (pt.x.num, pt.x.den, pt.y.num, pt.y.den)
                assert seen.setdefault(key, v) == v


class TestArithmeticAndOrder:
    def test_parse_roundtrip(self):
        for text in ["-4/7", "1/0", "5", "0", "22/7"]:
            assert str(R.parse(text)) == text

    def test_parse_rejects_garbage(self):
        for bad in ["", "x", "1/2/3", "1.5", "/3"]:
            with pytest.raises(ParseError):
                R.parse(bad)

    def test_infinity_conventions(self):
        assert INFINITY + R(3) == INFINITY
        assert R(1) / R(0) == INFINITY
        assert R(1) / INFINITY == R(0)
        assert -INFINITY == INFINITY
        with pytest.raises(DomainError):
            INFINITY + INFINITY
        with pytest.raises(DomainError):
            INFINITY * R(0)

    def test_order_rejects_infinity(self):
        with pytest.raises(DomainError):
            INFINITY < R(1)

    @given(
        st.fractions(min_value=-100, max_value=100),
        st.fractions(min_value=-100, max_value=100),
    )
    def test_field_ops_match_stdlib_fractions(self, x, y):
        a = R(x.numerator, x.denominator)
        b = R(y.numerator, y.denominator)
        s = x + y
        assert a + b == R(s.numerator, s.denominator)
        d = x - y
        assert a - b == R(d.numerator, d.denominator)
        m = x * y
        assert a * b == R(m.numerator, m.denominator)
        assert (a < b) == (x < y)
