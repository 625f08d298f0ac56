"""Unit tests for rings of integers presented by an integral basis."""

import pytest

from ctower.exceptions import CTowerError, PresentationError
from ctower.numring import (
    list_bundled,
    load_bundled,
    load_presentation,
    load_presentation_file,
    mult_matrix,
    norm,
    nr_add,
    nr_divides,
    nr_is_prime,
    nr_is_unit,
    nr_mul,
    quotient_reps,
    quotient_table,
    radius_bound,
    reduce,
)


@pytest.fixture(scope="module")
def zsqrt7():
    return load_bundled("zsqrt7")


@pytest.fixture(scope="module")
def zsqrt_m14():
    return load_bundled("zsqrt-14")


@pytest.fixture(scope="module")
def gaussian():
    return load_bundled("gaussian")


class TestPresentations:
    def test_bundled_names(self):
        assert {"z", "gaussian", "zsqrt7", "zsqrt2", "zsqrt-5", "zsqrt-14"} <= set(list_bundled())

    def test_lookup_by_file_name(self, zsqrt7):
        assert load_presentation_file("zsqrt7.json") == zsqrt7
        with pytest.raises(PresentationError, match="available"):
            load_presentation_file("zsqrt99")

    def test_load_from_disk(self, temp_dir, gaussian):
        path = temp_dir / "gauss.json"
        path.write_text('{"n": 2, "table": [[[1, 0], [0, 1]], [[0, 1], [-1, 0]]]}')
        loaded = load_presentation_file(path)
        assert loaded.table == gaussian.table
        assert loaded.name == "gauss"

    def test_identity_must_come_first(self):
        with pytest.raises(PresentationError, match="identity"):
            load_presentation({"n": 2, "table": [[[0, 1], [1, 0]], [[1, 0], [0, 1]]]})

    def test_commutativity_checked(self):
        with pytest.raises(PresentationError, match="commutative"):
            load_presentation(
                {
                    "n": 3,
                    "table": [
                        [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
                        [[0, 1, 0], [0, 0, 0], [1, 0, 0]],
                        [[0, 0, 1], [0, 0, 0], [0, 0, 0]],
                    ],
                }
            )

    def test_shape_checked(self):
        with pytest.raises(PresentationError):
            load_presentation({"n": 2, "table": [[[1, 0], [0, 1]]]})

    def test_zero_divisor_basis_rejected(self):
        with pytest.raises(PresentationError, match="integral domain"):
            load_presentation({"n": 2, "table": [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]})

    def test_schema_checked(self):
        with pytest.raises(CTowerError):
            load_presentation({"n": 0, "table": []})
        with pytest.raises(CTowerError):
            load_presentation({"table": []})

    def test_element_parsing(self, zsqrt7):
        assert zsqrt7.parse_element(3) == (3, 0)
        assert zsqrt7.parse_element([1, -1]) == (1, -1)
        with pytest.raises(PresentationError):
            zsqrt7.parse_element([1, 2, 3])
        with pytest.raises(PresentationError):
            zsqrt7.parse_element("3")


class TestArithmetic:
    def test_multiplication(self, zsqrt7):
        assert nr_mul(zsqrt7, (1, -1), (1, 1)) == (-6, 0)
        assert nr_add(zsqrt7, (1, -1), (1, 1)) == (2, 0)

    def test_rank_mismatch(self, zsqrt7):
        with pytest.raises(PresentationError, match="rank"):
            nr_mul(zsqrt7, (1, 2, 3), (1, 0))

    def test_matrix_and_norm(self, zsqrt7, zsqrt_m14):
        assert mult_matrix(zsqrt7, (2, 1)) == ((2, 7), (1, 2))
        assert norm(zsqrt7, (2, 1)) == -3
        assert norm(zsqrt_m14, (5, 2)) == 81

    def test_units(self, gaussian, zsqrt2):
        assert nr_is_unit(gaussian, (0, 1))
        assert not nr_is_unit(gaussian, (1, 1))
        assert nr_is_unit(zsqrt2, (1, 1))


@pytest.fixture(scope="module")
def zsqrt2():
    return load_bundled("zsqrt2")


class TestSqrt7:
    """3 divides (1 - sqrt 7)(1 + sqrt 7) but neither factor."""

    def test_divisibility(self, zsqrt7):
        product = nr_mul(zsqrt7, (1, -1), (1, 1))
        assert nr_divides(zsqrt7, (3, 0), product) == (True, (-2, 0))
        assert nr_divides(zsqrt7, (3, 0), (1, 1)) == (False, None)
        assert nr_divides(zsqrt7, (3, 0), (1, -1)) == (False, None)

    def test_three_is_not_prime(self, zsqrt7):
        assert not nr_is_prime(zsqrt7, (3, 0))

    def test_division_by_zero(self, zsqrt7):
        with pytest.raises(PresentationError):
            nr_divides(zsqrt7, (0, 0), (1, 0))


class TestSqrtMinus14:
    def test_alpha_divides_three_to_the_fourth(self, zsqrt_m14):
        assert nr_divides(zsqrt_m14, (5, 2), (81, 0)) == (True, (5, -2))
        assert not nr_divides(zsqrt_m14, (3, 0), (5, 2))[0]

    def test_three_is_not_prime(self, zsqrt_m14):
        assert not nr_is_prime(zsqrt_m14, (3, 0))


class TestGaussian:
    @pytest.mark.parametrize(
        "alpha,expected",
        [((1, 1), True), ((3, 0), True), ((2, 0), False), ((5, 0), False), ((0, 0), False), ((0, 1), False)],
    )
    def test_primality(self, gaussian, alpha, expected):
        assert nr_is_prime(gaussian, alpha) is expected

    def test_quotient_representatives(self, gaussian):
        reps = quotient_reps(gaussian, (2, 0))
        assert len(reps) == 4
        assert reps[0] == (0, 0)
        assert reps == [(0, 0), (1, 0), (0, 1), (1, 1)]
        assert reduce(gaussian, (2, 0), (3, 5)) == (1, 1)

    def test_quotient_table_of_a_prime(self, gaussian):
        reps, table = quotient_table(gaussian, (1, 1))
        assert reps == [(0, 0), (1, 0)]
        assert table == [[0, 0], [0, 1]]

    def test_quotient_by_unit_or_zero(self, gaussian):
        with pytest.raises(PresentationError):
            quotient_reps(gaussian, (0, 1))
        with pytest.raises(PresentationError):
            quotient_reps(gaussian, (0, 0))

    def test_explicit_radius_cap(self, gaussian):
        with pytest.raises(PresentationError, match="radius"):
            quotient_reps(gaussian, (7, 0), max_radius=1)

    def test_default_radius_covers_every_class(self, gaussian):
        bound = radius_bound(gaussian, (7, 0))
        assert bound == 14
        reps = quotient_reps(gaussian, (7, 0))
        assert len(reps) == 49
        assert max(max(abs(c) for c in r) for r in reps) <= bound


@pytest.fixture(scope="module")
def z():
    return load_bundled("z")


class TestIntegers:
    def test_radius_bound_is_the_modulus(self, z):
        assert radius_bound(z, (211,)) == 211
        assert radius_bound(z, (-7,)) == 7

    def test_large_prime(self, z):
        assert nr_is_prime(z, (211,))
        assert not nr_is_prime(z, (209,))

    def test_balanced_representatives(self, z):
        assert quotient_reps(z, (-7,)) == [(0,), (1,), (-1,), (2,), (-2,), (3,), (-3,)]


class TestNonDomain:
    """Z[x]/(x^2 - 1) passes the basis checks but (1 + x)(1 - x) = 0."""

    @pytest.fixture
    def split(self):
        return load_presentation({"n": 2, "table": [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]})

    def test_singular_divisor_is_reported(self, split):
        assert nr_mul(split, (1, 1), (1, -1)) == (0, 0)
        with pytest.raises(PresentationError, match="integral domain"):
            nr_divides(split, (1, 1), (1, 0))
        with pytest.raises(PresentationError, match="integral domain"):
            nr_is_prime(split, (1, -1))

    def test_zero_still_has_norm_zero(self, split):
        assert norm(split, (0, 0)) == 0
