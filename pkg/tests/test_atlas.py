import pytest

from nchodge.atlas import (
    Stratum,
    StrataAtlas,
    generic_arrangement,
    key_from_string,
    key_to_string,
    validate_atlas,
)
from nchodge.errors import (
    BadParams,
    LatticeError,
    MissingStratum,
    UnknownStratum,
)
from nchodge.fixtures import BUILTIN_NAMES, builtin_atlas
from nchodge.linalg import RationalMatrix, vector
from nchodge.rings import truncated_polynomial_ring


class TestKeys:
    def test_round_trip(self):
        for key in [((), ""), ((0,), ""), ((0, 2), "a"), ((1,), "x|y")]:
            assert key_from_string(key_to_string(key)) == key

    def test_ambient_is_empty_string(self):
        assert key_to_string(((), "")) == ""
        assert key_from_string("") == ((), "")

    def test_bad_strings(self):
        with pytest.raises(BadParams):
            key_from_string("2,1")
        with pytest.raises(BadParams):
            key_from_string("1,1")
        with pytest.raises(BadParams):
            key_from_string("a,b")


class TestGenericArrangement:
    def test_stratum_count(self):
        import math

        a = generic_arrangement(2, 3)
        # one ambient + 3 lines + 3 points
        assert len(a.strata) == 1 + 3 + 3
        b = generic_arrangement(3, 5)
        assert len(b.strata) == sum(math.comb(5, k) for k in range(4))

    def test_depth_truncated_at_dimension(self):
        a = generic_arrangement(1, 3)
        assert all(len(k[0]) <= 1 for k in a.strata)

    def test_validates(self):
        for n, m in [(1, 2), (2, 3), (2, 0), (3, 4)]:
            report = validate_atlas(generic_arrangement(n, m))
            assert report.ok, report.violations

    def test_bad_params(self):
        with pytest.raises(BadParams):
            generic_arrangement(0, 2)
        with pytest.raises(BadParams):
            generic_arrangement(2, -1)

    def test_leq_and_components(self):
        a = generic_arrangement(2, 3)
        pt = ((0, 1), "")
        line = ((0,), "")
        assert a.leq(pt, line)
        assert not a.leq(line, pt)
        assert a.components_of((0, 1)) == (pt,)
        assert a.intersection_components((0, 1), [line]) == (pt,)
        assert a.intersection_components((2,), [pt]) == ()

    def test_rho_composes_to_point(self):
        a = generic_arrangement(2, 3)
        bm = a.rho(((), ""), ((0, 1), ""))
        # restriction of the hyperplane class to a point: only degree 0 survives
        assert set(bm) == {(0, (0, 0))}

    def test_unknown_stratum(self):
        a = generic_arrangement(1, 1)
        with pytest.raises(UnknownStratum):
            a.ring(((5,), ""))
        with pytest.raises(MissingStratum):
            a.rho(((0,), ""), ((), ""))


class TestBuiltins:
    def test_all_validate(self):
        for name in BUILTIN_NAMES:
            report = validate_atlas(builtin_atlas(name))
            assert report.ok, (name, report.violations)

    def test_unknown_name(self):
        with pytest.raises(BadParams):
            builtin_atlas("nope")

    def test_elliptic_ring(self):
        a = builtin_atlas("elliptic_1pt")
        x = a.ring(((), ""))
        # H^1 of an elliptic curve splits as (1,0) + (0,1)
        assert x.slice_dim(1, (1, 0)) == 1
        assert x.slice_dim(1, (0, 1)) == 1


class TestConnectedComponents:
    def test_fixture_counts(self):
        expected = {"p1_1pt": 1, "p1_2pts": 2, "triangle": 1, "elliptic_1pt": 1}
        for name, count in expected.items():
            assert builtin_atlas(name).divisor_connected_components() == count

    def test_generic_counts(self):
        assert generic_arrangement(2, 0).divisor_connected_components() == 0
        # points on a line never meet
        assert generic_arrangement(1, 3).divisor_connected_components() == 3
        # any two lines in the plane meet
        assert generic_arrangement(2, 4).divisor_connected_components() == 1
        assert generic_arrangement(3, 5).divisor_connected_components() == 1


def _two_lines(cross_class):
    """Two lines meeting in a point, with a tunable divisor class on line 1."""
    ring1 = truncated_polynomial_ring(1)
    ring0 = truncated_polynomial_ring(0)
    strata = [
        Stratum(indices=(), label="", ring=truncated_polynomial_ring(2)),
        Stratum(indices=(0,), label="", ring=ring1),
        Stratum(indices=(1,), label="", ring=ring1),
        Stratum(indices=(0, 1), label="", ring=ring0),
    ]
    one = RationalMatrix([[1]])
    blocks2 = {(0, (0, 0)): one, (2, (1, 1)): one}
    blocks1 = {(0, (0, 0)): one}
    restrictions = {}
    gysin = {}
    for a in (0, 1):
        restrictions[(((), ""), ((a,), ""))] = dict(blocks2)
        gysin[(((a,), ""), ((), ""))] = dict(blocks2)
        restrictions[((((a,), "")), ((0, 1), ""))] = dict(blocks1)
        gysin[(((0, 1), ""), ((a,), ""))] = dict(blocks1)
    classes = {
        (0, ((), "")): vector([1]),
        (1, ((), "")): vector([1]),
        (0, ((0,), "")): vector([cross_class]),
        (1, ((0,), "")): vector([1]),
        (0, ((1,), "")): vector([1]),
        (1, ((1,), "")): vector([1]),
    }
    return StrataAtlas(("A", "B"), strata, restrictions, gysin, classes)


class TestValidator:
    def test_good_two_lines(self):
        assert validate_atlas(_two_lines(1)).ok

    def test_wrong_divisor_class_reported(self):
        # gysin-after-restriction must equal multiplication by the class;
        # scaling one class breaks it and the report should say so
        report = validate_atlas(_two_lines(3))
        assert not report.ok
        assert any("class" in v or "gysin" in v for v in report.violations)
        assert str(report).startswith("atlas invalid")

    def test_duplicate_key_rejected(self):
        ring = truncated_polynomial_ring(1)
        strata = [
            Stratum(indices=(), label="", ring=ring),
            Stratum(indices=(), label="", ring=ring),
        ]
        with pytest.raises(LatticeError):
            StrataAtlas((), strata, {}, {}, {})

    def test_missing_ambient_rejected(self):
        with pytest.raises(LatticeError):
            StrataAtlas(
                ("A",),
                [Stratum(indices=(0,), label="", ring=truncated_polynomial_ring(1))],
                {},
                {},
                {},
            )

    def test_gysin_without_restriction_rejected(self):
        ring2 = truncated_polynomial_ring(2)
        ring1 = truncated_polynomial_ring(1)
        strata = [
            Stratum(indices=(), label="", ring=ring2),
            Stratum(indices=(0,), label="", ring=ring1),
        ]
        one = RationalMatrix([[1]])
        gysin = {(((0,), ""), ((), "")): {(0, (0, 0)): one, (2, (1, 1)): one}}
        with pytest.raises(LatticeError):
            StrataAtlas(("A",), strata, {}, gysin, {})
