import random
from fractions import Fraction

import pytest

from nchodge.errors import CompositionNonzero, DimensionMismatch
from nchodge.linalg import (
    CohomologySpace,
    EchelonSpan,
    RationalMatrix,
    cohomology_at,
    pairing_perfect,
    rank,
    reduce,
    solve,
    vector,
)


def M(rows, ncols=None):
    return RationalMatrix(rows, ncols=ncols)


def random_matrix(rng, nrows, ncols, span=5):
    return M(
        [[Fraction(rng.randint(-span, span)) for _ in range(ncols)] for _ in range(nrows)],
        ncols=ncols,
    )


class TestRationalMatrix:
    def test_entries_are_fractions(self):
        m = M([[1, "1/2"], [Fraction(2, 4), 3]])
        assert m.rows[0][1] == Fraction(1, 2)
        assert all(isinstance(x, Fraction) for row in m.rows for x in row)

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            M([[0.5]])

    def test_zero_row_matrix(self):
        m = RationalMatrix([], ncols=3)
        assert m.shape == (0, 3)
        assert RationalMatrix([]).shape == (0, 0)

    def test_ragged_rows_rejected(self):
        with pytest.raises(DimensionMismatch):
            M([[1, 2], [3]])

    def test_immutable(self):
        m = M([[1]])
        with pytest.raises(AttributeError):
            m.rows = ()

    def test_matmul_shapes(self):
        a = M([[1, 2], [3, 4], [5, 6]])
        b = M([[1, 0, 0], [0, 1, 0]])
        assert (a @ b).shape == (3, 3)
        with pytest.raises(DimensionMismatch):
            b @ M([[1, 2]])

    def test_matmul_identity(self):
        a = M([[1, 2], [3, 4]])
        assert RationalMatrix.identity(2) @ a == a
        assert a @ RationalMatrix.identity(2) == a

    def test_apply_matches_matmul(self):
        a = M([[2, -1], [1, 3]])
        v = vector([5, 7])
        assert a.apply(v) == (Fraction(3), Fraction(26))

    def test_from_columns_round_trip(self):
        cols = (vector([1, 2]), vector([3, 4]))
        m = RationalMatrix.from_columns(cols, 2)
        assert m.columns() == cols
        assert m.transpose().rows == ((Fraction(1), Fraction(2)), (Fraction(3), Fraction(4)))

    def test_hstack(self):
        a = M([[1], [2]])
        b = M([[3], [4]])
        assert a.hstack(b) == M([[1, 3], [2, 4]])

    def test_arithmetic(self):
        a = M([[1, 2], [3, 4]])
        assert a + (-a) == RationalMatrix.zeros(2, 2)
        assert a - a == RationalMatrix.zeros(2, 2)
        assert a.scale(Fraction(1, 2)).rows[1][1] == Fraction(2)


class TestReduce:
    def test_known_rref(self):
        m = M([[1, 2, 3], [2, 4, 6], [1, 1, 1]])
        red = reduce(m)
        assert red.rank == 2
        assert red.pivots == (0, 1)
        assert red.rref.rows[0] == (Fraction(1), Fraction(0), Fraction(-1))
        assert red.rref.rows[1] == (Fraction(0), Fraction(1), Fraction(2))

    def test_kernel_image_dims(self):
        rng = random.Random(11)
        for _ in range(25):
            m = random_matrix(rng, rng.randint(0, 5), rng.randint(1, 5))
            red = reduce(m)
            assert len(red.kernel) == m.shape[1] - red.rank
            assert len(red.image) == red.rank
            for v in red.kernel:
                assert m.apply(v) == tuple([Fraction(0)] * m.shape[0])

    def test_kernel_basis_is_echelon(self):
        # kernel vectors carry a 1 in their free column, 0 in the others
        m = M([[1, 1, 1, 1]])
        red = reduce(m)
        assert red.rank == 1
        free = [1, 2, 3]
        for v, col in zip(red.kernel, free):
            assert v[col] == 1
            for other in free:
                if other != col:
                    assert v[other] == 0

    def test_rank_transpose_invariant(self):
        rng = random.Random(5)
        for _ in range(20):
            m = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
            assert rank(m) == rank(m.transpose())


class TestSolve:
    def test_unique_solution(self):
        m = M([[2, 1], [1, 3]])
        rhs = m.apply(vector([4, -2]))
        assert solve(m, rhs) == (Fraction(4), Fraction(-2))

    def test_inconsistent_returns_none(self):
        m = M([[1, 0], [1, 0]])
        assert solve(m, vector([1, 2])) is None

    def test_fuzz_solutions_verify(self):
        rng = random.Random(23)
        hits = 0
        for _ in range(40):
            m = random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4))
            x = vector([rng.randint(-3, 3) for _ in range(m.shape[1])])
            sol = solve(m, m.apply(x))
            assert sol is not None
            assert m.apply(sol) == m.apply(x)
            hits += 1
        assert hits == 40


class TestEchelonSpan:
    def test_membership(self):
        span = EchelonSpan(3)
        assert span.add(vector([1, 1, 0]))
        assert span.add(vector([0, 1, 1]))
        assert not span.add(vector([1, 2, 1]))
        assert span.rank == 2
        assert span.contains(vector([2, 3, 1]))
        assert not span.contains(vector([0, 0, 1]))

    def test_zero_vector_never_added(self):
        span = EchelonSpan(2)
        assert not span.add(vector([0, 0]))
        assert span.rank == 0
        assert span.contains(vector([0, 0]))

    def test_matches_matrix_rank(self):
        rng = random.Random(7)
        for _ in range(20):
            vecs = [vector([rng.randint(-2, 2) for _ in range(4)]) for _ in range(6)]
            span = EchelonSpan(4)
            for v in vecs:
                span.add(v)
            assert span.rank == rank(RationalMatrix(list(vecs), ncols=4))


class TestCohomology:
    def test_point_complex(self):
        d_in = RationalMatrix.zeros(1, 0)
        d_out = RationalMatrix.zeros(0, 1)
        h = cohomology_at(d_in, d_out)
        assert h.dim == 1
        assert h.representatives == (vector([1]),)

    def test_acyclic_two_term(self):
        # 0 -> Q -=-> Q -> 0 at the target slot
        d_in = M([[1]])
        d_out = RationalMatrix.zeros(0, 1)
        h = cohomology_at(d_in, d_out)
        assert h.dim == 0

    def test_circle_pattern(self):
        # 0 -> Q^2 -d-> Q^2 -> 0 with d = difference map, rank 1
        d = M([[1, -1], [-1, 1]])
        z0 = cohomology_at(RationalMatrix.zeros(2, 0), d)
        z1 = cohomology_at(d, RationalMatrix.zeros(0, 2))
        assert z0.dim == 1 and z1.dim == 1

    def test_composition_nonzero_raises(self):
        d_in = M([[1], [0]])
        d_out = M([[1, 0]])
        with pytest.raises(CompositionNonzero):
            cohomology_at(d_in, d_out)

    def test_contains_boundary(self):
        d = M([[1, -1], [-1, 1]])
        h = cohomology_at(RationalMatrix.zeros(2, 0), d)
        assert isinstance(h, CohomologySpace)
        assert not h.contains_boundary(vector([1, 0]))

    def test_quotient_representatives_are_cycles(self):
        rng = random.Random(31)
        for _ in range(15):
            mid = rng.randint(1, 4)
            d_in = random_matrix(rng, mid, rng.randint(0, 3))
            # build d_out vanishing on the image of d_in: rows from the left kernel
            left = reduce(d_in.transpose()).kernel
            d_out = RationalMatrix([list(v) for v in left], ncols=mid)
            h = cohomology_at(d_in, d_out)
            assert h.dim == mid - rank(d_in) - rank(d_out)
            for r in h.representatives:
                assert all(x == 0 for x in d_out.apply(r))


class TestPairingPerfect:
    def test_identity_perfect(self):
        assert pairing_perfect(RationalMatrix.identity(3))

    def test_singular_not_perfect(self):
        assert not pairing_perfect(M([[1, 1], [1, 1]]))

    def test_rectangular_not_perfect(self):
        assert not pairing_perfect(M([[1, 0]]))

    def test_empty_perfect(self):
        assert pairing_perfect(RationalMatrix([], ncols=0))
