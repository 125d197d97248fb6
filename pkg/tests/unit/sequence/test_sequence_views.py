import pytest
from fractions import Fraction
from horadam_quat.sequence.views import HoradamParams


class TestHoradamParams:
    """Tests for HoradamParams validation and helpers."""

    def test_defaults_are_fibonacci_seeds(self):
        params = HoradamParams(1, 1)
        assert (params.a, params.b) == (0, 1)
        assert params == HoradamParams.fibonacci(1, 1)

    def test_lucas_seeds(self):
        assert HoradamParams.lucas(3, -2).key() == (3, -2, 2, 3)

    def test_zero_q_rejected(self):
        with pytest.raises(ValueError):
            HoradamParams(1, 0)

    def test_degenerate_discriminant_rejected(self):
        with pytest.raises(ValueError):
            HoradamParams(2, -1)

    def test_text_and_fraction_inputs(self):
        params = HoradamParams("1/2", Fraction(3, 1), "-1", 2)
        assert params.key() == (Fraction(1, 2), 3, -1, 2)
        assert type(params.q) is int

    def test_float_rejected(self):
        with pytest.raises(ValueError):
            HoradamParams(1.0, 1)

    def test_discriminant(self):
        assert HoradamParams(1, 1).discriminant == 5
        assert HoradamParams(1, -1).discriminant == -3

    def test_hashable_and_equal_by_value(self):
        assert hash(HoradamParams(1, 2, 0, 1)) == hash(HoradamParams("1", "2", "0", "1"))

    def test_to_dict_uses_exact_strings(self):
        assert HoradamParams("1/2", 1, 0, 1).to_dict() == {'p': '1/2', 'q': '1', 'a': '0', 'b': '1'}
        assert HoradamParams(1, 2).to_string() == 'p=1, q=2, a=0, b=1'
