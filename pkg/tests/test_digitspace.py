import random
from fractions import Fraction

import pytest

from sdreal import Interval, SIGNED, word_from_text, word_to_text

from support import random_rational

BOUNDARY_POINTS = [Fraction(x) for x in ("-1", "-1/2", "-1/4", "0", "1/4", "1/2", "1")]


def test_digit_images():
    assert SIGNED.digit_image(-1) == Interval(Fraction(-1), Fraction(0))
    assert SIGNED.digit_image(0) == Interval(Fraction(-1, 2), Fraction(1, 2))
    assert SIGNED.digit_image(1) == Interval(Fraction(0), Fraction(1))


def test_space_constants():
    assert SIGNED.contraction == Fraction(1, 2)
    assert SIGNED.bound == 2
    assert SIGNED.well_covering_radius == Fraction(1, 4)
    assert SIGNED.base_point == 0
    for d in SIGNED.digits:
        assert SIGNED.digit(d).maps_unit_into_unit()


def test_apply_digit_examples():
    assert SIGNED.apply_digit(0, Fraction(0)) == 0
    assert SIGNED.apply_digit(1, Fraction(-1)) == 0
    assert SIGNED.apply_digit(-1, Fraction(1, 3)) == Fraction(-1, 3)


def test_apply_digit_rejects_out_of_range():
    with pytest.raises(ValueError):
        SIGNED.apply_digit(0, Fraction(3, 2))


def test_ball_in_digit_range_examples():
    q = Fraction(1, 4)
    assert SIGNED.ball_in_digit_range(Fraction(0), q, 0)
    assert SIGNED.ball_in_digit_range(Fraction(1), q, 1)
    assert not SIGNED.ball_in_digit_range(Fraction(0), q, 1)


def test_ball_in_digit_range_rejects_bad_radius():
    with pytest.raises(ValueError):
        SIGNED.ball_in_digit_range(Fraction(0), Fraction(0), 0)


def test_right_inverse_examples():
    assert SIGNED.right_inverse(1, Fraction(1, 2)) == 0
    assert SIGNED.right_inverse(0, Fraction(0)) == 0
    assert SIGNED.right_inverse(-1, Fraction(-1)) == -1


def test_right_inverse_rejects_outside_image():
    with pytest.raises(ValueError):
        SIGNED.right_inverse(1, Fraction(-1, 2))


def test_right_inverse_law():
    rng = random.Random(201)
    for _ in range(300):
        d = rng.choice(SIGNED.digits)
        image = SIGNED.digit_image(d)
        u = image.lo + abs(random_rational(rng)) * image.width
        assert image.contains(u)
        v = SIGNED.right_inverse(d, u)
        assert SIGNED.apply_digit(d, v) == u


def test_right_inverse_modulus_values():
    assert SIGNED.right_inverse_modulus(0) == 2
    assert SIGNED.right_inverse_modulus(3) == 5
    assert SIGNED.right_inverse_modulus(10) == 12


def test_right_inverse_modulus_contract():
    rng = random.Random(202)
    for _ in range(100):
        n = rng.randint(0, 12)
        k = SIGNED.right_inverse_modulus(n)
        d = rng.choice(SIGNED.digits)
        image = SIGNED.digit_image(d)
        x = image.lo + abs(random_rational(rng)) * image.width
        gap = Fraction(rng.randint(1, 2 ** k - 1), 4 ** k)
        y = x + gap if image.contains(x + gap) else x - gap
        assert image.contains(y)
        assert abs(x - y) < Fraction(1, 2 ** k)
        rx, ry = SIGNED.right_inverse(d, x), SIGNED.right_inverse(d, y)
        assert abs(rx - ry) < Fraction(1, 2 ** (n + 1))


def test_covering_digit_examples():
    q = Fraction(1, 4)
    assert SIGNED.covering_digit(Fraction(-1), q) == -1
    assert SIGNED.covering_digit(Fraction(0), q) == 0
    assert SIGNED.covering_digit(Fraction(7, 8), q) == 1


def test_covering_digit_reports_failure():
    with pytest.raises(ValueError):
        SIGNED.covering_digit(Fraction(1, 2), Fraction(3, 4))


def test_digit_images_cover_carrier():
    rng = random.Random(203)
    points = BOUNDARY_POINTS + [random_rational(rng) for _ in range(200)]
    for x in points:
        assert any(SIGNED.digit_image(d).contains(x) for d in SIGNED.digits)


def test_well_covering_at_quarter_radius():
    rng = random.Random(204)
    points = BOUNDARY_POINTS + [random_rational(rng) for _ in range(200)]
    for x in points:
        d = SIGNED.covering_digit(x, Fraction(1, 4))
        assert SIGNED.ball_in_digit_range(x, Fraction(1, 4), d)


def test_contraction_is_exactly_half():
    rng = random.Random(205)
    for _ in range(200):
        d = rng.choice(SIGNED.digits)
        x, y = random_rational(rng), random_rational(rng)
        fx, fy = SIGNED.apply_digit(d, x), SIGNED.apply_digit(d, y)
        assert abs(fx - fy) * 2 == abs(x - y)


def test_depth_for_width():
    for n in range(0, 12):
        depth = SIGNED.depth_for_width(n)
        assert depth == n + 2
        # minimality: one digit fewer leaves the images too wide
        assert SIGNED.contraction ** depth * SIGNED.bound < Fraction(1, 2 ** n)
        assert SIGNED.contraction ** (depth - 1) * SIGNED.bound >= Fraction(1, 2 ** n)


def test_anchor_precision():
    n = SIGNED.anchor_precision()
    assert n == 4
    assert Fraction(1, 2 ** n) < SIGNED.well_covering_radius / 2
    assert Fraction(1, 2 ** (n - 1)) >= SIGNED.well_covering_radius / 2


def test_word_text_round_trip():
    assert word_to_text([1, -1, 0]) == "+-0"
    assert word_from_text("+-0") == (1, -1, 0)
    assert word_from_text("") == ()
    with pytest.raises(ValueError):
        word_from_text("+x")
