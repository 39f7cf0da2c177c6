import math

import pytest

from nchodge.atlas import generic_arrangement, key_to_string
from nchodge.complexes import (
    SELECTORS,
    build,
    cone_rows,
    morphism_i_star,
    morphism_u,
    rows_constant,
    rows_log,
    rows_sum_strata,
)
from nchodge.errors import BadParams, EmptyDivisor, UnknownStratum
from nchodge.tables import compute_table, euler_check


def table_of(atlas, selector):
    return compute_table(build(atlas, selector))


def entries(atlas, selector):
    t = table_of(atlas, selector)
    return {m: t.entries(m) for m in t.degrees()}


class TestDifferentials:
    @pytest.mark.parametrize("selector", SELECTORS)
    def test_d_squared_zero_triangle(self, triangle, selector):
        assert build(triangle, selector).differentials_square_to_zero()

    @pytest.mark.parametrize("selector", SELECTORS + ("sslog",))
    def test_d_squared_zero_p1_2pts(self, p1_2pts, selector):
        assert build(p1_2pts, selector).differentials_square_to_zero()

    def test_d_squared_zero_elliptic(self, elliptic):
        for selector in SELECTORS:
            assert build(elliptic, selector).differentials_square_to_zero()

    def test_euler_counts(self, triangle):
        for selector in SELECTORS:
            fam = build(triangle, selector)
            assert euler_check(fam, compute_table(fam))


class TestConeConventions:
    def test_degree_placement(self, p1_1pt):
        # cone(f)[-1]: degree m holds source terms at m and target terms at m-1
        fam = build(p1_1pt, "XD")
        for row in fam.rows.values():
            for m, terms in row.terms_at.items():
                for t in terms:
                    assert t.side in ("s", "t")
                    if t.side == "s":
                        assert t.shift == 0 and t.m == m
                    else:
                        assert t.shift == 1

    def test_unshifted_cone_differs_by_one(self, p1_1pt):
        f = morphism_i_star(p1_1pt, rows_constant(p1_1pt), rows_sum_strata(p1_1pt))
        shifted = compute_table(cone_rows(f, shift=True))
        plain = compute_table(cone_rows(f, shift=False))
        assert shifted.degrees() == tuple(m + 1 for m in plain.degrees())
        for m in plain.degrees():
            assert plain.entries(m) == shifted.entries(m + 1)

    def test_morphisms_are_chain_maps(self, triangle):
        fx = rows_constant(triangle)
        assert morphism_i_star(triangle, fx, rows_sum_strata(triangle)).is_chain_map()
        assert morphism_u(triangle, fx, rows_log(triangle)).is_chain_map()


class TestSelectorErrors:
    def test_unknown_selector(self, p1_1pt):
        with pytest.raises(BadParams):
            build(p1_1pt, "bogus")

    def test_empty_divisor_has_no_d(self):
        with pytest.raises(EmptyDivisor):
            build(generic_arrangement(2, 0), "D")

    def test_nbhd_unknown_stratum(self, p1_1pt):
        with pytest.raises(UnknownStratum):
            build(p1_1pt, "nbhd:7")


class TestP1Fixtures:
    def test_p1_1pt_tables(self, p1_1pt):
        assert entries(p1_1pt, "log") == {0: ((0, (0, 0), 1),)}
        assert entries(p1_1pt, "XD") == {2: ((2, (1, 1), 1),)}
        assert entries(p1_1pt, "locD") == {2: ((2, (1, 1), 1),)}
        assert entries(p1_1pt, "D") == {0: ((0, (0, 0), 1),)}

    def test_p1_2pts_complement(self, p1_2pts):
        # C*: one class in degree 0 weight 0, one in degree 1 weight 2
        assert entries(p1_2pts, "log") == {
            0: ((0, (0, 0), 1),),
            1: ((2, (1, 1), 1),),
        }

    def test_p1_2pts_relative(self, p1_2pts):
        assert entries(p1_2pts, "XD") == {
            1: ((0, (0, 0), 1),),
            2: ((2, (1, 1), 1),),
        }

    def test_p1_2pts_local(self, p1_2pts):
        assert entries(p1_2pts, "locD") == {2: ((2, (1, 1), 2),)}

    def test_p1_2pts_divisor(self, p1_2pts):
        assert entries(p1_2pts, "D") == {0: ((0, (0, 0), 2),)}


class TestTriangleFixture:
    def test_complement(self, triangle):
        assert entries(triangle, "log") == {
            0: ((0, (0, 0), 1),),
            1: ((2, (1, 1), 2),),
            2: ((4, (2, 2), 1),),
        }

    def test_divisor(self, triangle):
        assert entries(triangle, "D") == {
            0: ((0, (0, 0), 1),),
            1: ((0, (0, 0), 1),),
            2: ((2, (1, 1), 3),),
        }

    def test_relative(self, triangle):
        assert entries(triangle, "XD") == {
            2: ((0, (0, 0), 1),),
            3: ((2, (1, 1), 2),),
            4: ((4, (2, 2), 1),),
        }

    def test_local(self, triangle):
        assert entries(triangle, "locD") == {
            2: ((2, (1, 1), 3),),
            3: ((4, (2, 2), 1),),
            4: ((4, (2, 2), 1),),
        }


class TestEllipticFixture:
    def test_complement(self, elliptic):
        assert entries(elliptic, "log") == {
            0: ((0, (0, 0), 1),),
            1: ((1, (0, 1), 1), (1, (1, 0), 1)),
        }

    def test_relative(self, elliptic):
        assert entries(elliptic, "XD") == {
            1: ((1, (0, 1), 1), (1, (1, 0), 1)),
            2: ((2, (1, 1), 1),),
        }

    def test_local(self, elliptic):
        assert entries(elliptic, "locD") == {2: ((2, (1, 1), 1),)}


class TestTildeAgreement:
    @pytest.mark.parametrize(
        "name", ["p1_1pt", "p1_2pts", "triangle", "elliptic_1pt"]
    )
    def test_pairs_agree(self, name, request):
        from nchodge.fixtures import builtin_atlas

        atlas = builtin_atlas(name)
        for plain, tilde in [("XD", "XD-tilde"), ("locD", "locD-tilde")]:
            a = table_of(atlas, plain)
            b = table_of(atlas, tilde)
            assert a.degrees() == b.degrees(), (name, plain)
            for m in a.degrees():
                assert a.entries(m) == b.entries(m), (name, plain, m)


class TestOrlikSolomon:
    @pytest.mark.parametrize("n,m", [(1, 3), (2, 3), (2, 4), (2, 5), (3, 3), (3, 4)])
    def test_generic_betti(self, n, m):
        t = table_of(generic_arrangement(n, m), "log")
        for k in range(n + 1):
            want = math.comb(m - 1, k)
            assert t.betti(k) == want, (n, m, k)
            if want:
                assert t.entries(k) == ((2 * k, (k, k), want),)
        assert all(d <= n for d in t.degrees())


class TestEmptyDivisor:
    def test_collapse_to_x(self):
        a = generic_arrangement(2, 0)
        x = entries(a, "X")
        assert x == {
            0: ((0, (0, 0), 1),),
            2: ((2, (1, 1), 1),),
            4: ((4, (2, 2), 1),),
        }
        for sel in ("log", "XD", "XD-tilde"):
            assert entries(a, sel) == x

    def test_local_acyclic(self):
        a = generic_arrangement(2, 0)
        assert table_of(a, "locD").degrees() == ()
        assert table_of(a, "locD-tilde").degrees() == ()


class TestSmoothDivisorNeighborhood:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_circle_bundle_pattern(self, n, circle_bundle_oracle):
        a = generic_arrangement(n, 1)
        key = ((0,), "")
        got = entries(a, "nbhd:" + key_to_string(key))
        stratum = a.strata[key]
        want = circle_bundle_oracle(stratum.ring, a.divisor_class(0, key))
        assert got == want

    def test_sphere_values(self):
        # explicit S^3 pattern for the hyperplane in the projective plane
        got = entries(generic_arrangement(2, 1), "nbhd:0")
        assert got == {0: ((0, (0, 0), 1),), 3: ((4, (2, 2), 1),)}

    def test_point_in_curve(self, p1_1pt):
        got = entries(p1_1pt, "nbhd:0")
        assert got == {0: ((0, (0, 0), 1),), 1: ((2, (1, 1), 1),)}


class TestDeletedNeighborhoods:
    def test_triangle_vertex_is_torus(self, triangle):
        key = ((0, 1), "")
        got = entries(triangle, "nbhd:" + key_to_string(key))
        assert got == {
            0: ((0, (0, 0), 1),),
            1: ((2, (1, 1), 2),),
            2: ((4, (2, 2), 1),),
        }

    def test_triangle_edge(self, triangle):
        # a line minus two vertices, crossed with a punctured disk
        got = entries(triangle, "nbhd:0")
        t_cstar = {0: ((0, (0, 0), 1),), 1: ((2, (1, 1), 1),)}
        # Kuenneth square of C*: betti (1, 2, 1)
        assert got[0] == t_cstar[0]
        assert got[1] == ((2, (1, 1), 2),)
        assert got[2] == ((4, (2, 2), 1),)
