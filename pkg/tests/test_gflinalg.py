"""Exact F_p elimination: examples, rank-nullity, engine agreement."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hilbfam.gflinalg import (
    FpMatrix,
    FpVector,
    RowReducer,
    kernel_basis,
    matmul_mod,
    rank_mod_p,
    rref,
)


def oracle_rref(rows, p):
    """Textbook row reduction on lists of ints, independent of the library.

    Returns (matrix, pivot_cols) with the same shape as the input.
    """
    m = [list(r) for r in rows]
    n_rows = len(m)
    n_cols = len(m[0]) if n_rows else 0
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot_row = None
        for i in range(r, n_rows):
            if m[i][c] % p:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = pow(m[r][c] % p, -1, p)
        m[r] = [(v * inv) % p for v in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] % p:
                f = m[i][c] % p
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return m, tuple(pivots)


small_primes = st.sampled_from([2, 3, 5, 7])


@st.composite
def fp_matrices(draw, max_rows=8, max_cols=8):
    p = draw(small_primes)
    rows = draw(st.integers(1, max_rows))
    cols = draw(st.integers(1, max_cols))
    entries = draw(
        st.lists(
            st.lists(st.integers(0, p - 1), min_size=cols, max_size=cols),
            min_size=rows,
            max_size=rows,
        )
    )
    return FpMatrix.from_rows(entries, p)


class TestRref:
    def test_identity_mod_2(self):
        m = FpMatrix.from_rows(np.eye(3, dtype=int), 2)
        r, piv = rref(m)
        assert r == m
        assert piv == (0, 1, 2)

    def test_repeated_rows_mod_2(self):
        r, piv = rref(FpMatrix.from_rows([[1, 1], [1, 1]], 2))
        assert r.data.tolist() == [[1, 1], [0, 0]]
        assert piv == (0,)

    def test_proportional_rows_mod_5(self):
        r, piv = rref(FpMatrix.from_rows([[2, 4], [1, 2]], 5))
        assert r.data.tolist() == [[1, 2], [0, 0]]
        assert piv == (0,)

    @given(fp_matrices())
    def test_matches_oracle(self, m):
        r, piv = rref(m)
        expected, expected_piv = oracle_rref(m.data.tolist(), m.p)
        assert r.data.tolist() == expected
        assert piv == expected_piv

    @given(fp_matrices())
    def test_idempotent(self, m):
        r, piv = rref(m)
        r2, piv2 = rref(r)
        assert r2 == r
        assert piv2 == piv


class TestRank:
    def test_identity(self):
        for p in (2, 3, 5):
            assert rank_mod_p(FpMatrix.from_rows(np.eye(4, dtype=int), p)) == 4

    def test_zero_matrix(self):
        assert rank_mod_p(FpMatrix.zeros(3, 5, 3)) == 0

    def test_proportional_rows(self):
        assert rank_mod_p(FpMatrix.from_rows([[1, 2], [2, 4]], 5)) == 1

    @given(fp_matrices(), st.randoms(use_true_random=False))
    def test_invariant_under_row_scaling_and_swaps(self, m, rng):
        base = rank_mod_p(m)
        data = m.data.copy()
        i = rng.randrange(data.shape[0])
        j = rng.randrange(data.shape[0])
        data[[i, j]] = data[[j, i]]
        k = rng.randrange(data.shape[0])
        scale = rng.randrange(1, m.p)
        data[k] = (data[k] * scale) % m.p
        assert rank_mod_p(FpMatrix(m.p, data)) == base


class TestKernel:
    def test_full_rank_has_empty_kernel(self):
        assert kernel_basis(FpMatrix.from_rows(np.eye(2, dtype=int), 3)) == []

    def test_single_parity_row(self):
        basis = kernel_basis(FpMatrix.from_rows([[1, 1]], 2))
        assert basis == [FpVector(2, (1, 1))]

    def test_sum_row_mod_3(self):
        # Free-variable construction by hand: pivot col 0, free cols 1 and 2.
        basis = kernel_basis(FpMatrix.from_rows([[1, 1, 1]], 3))
        assert [v.values for v in basis] == [(2, 1, 0), (2, 0, 1)]
        for v in basis:
            assert sum(v.values) % 3 == 0

    @given(fp_matrices())
    def test_rank_nullity(self, m):
        assert rank_mod_p(m) + len(kernel_basis(m)) == m.cols

    @given(fp_matrices())
    def test_kernel_vectors_annihilated(self, m):
        for v in kernel_basis(m):
            out = (m.data @ np.array(v.values)) % m.p
            assert not out.any()

    @given(fp_matrices())
    def test_kernel_canonical_form(self, m):
        basis = kernel_basis(m)
        _, pivots = rref(m)
        free = [c for c in range(m.cols) if c not in pivots]
        assert len(basis) == len(free)
        for v, f in zip(basis, free):
            assert v.values[f] == 1
            for other in free:
                if other != f:
                    assert v.values[other] == 0


class TestEngineAgreement:
    """The packed GF(2) engine must be bit-identical to the generic one."""

    @given(fp_matrices(max_rows=10, max_cols=12))
    def test_bitpacked_matches_generic(self, m):
        if m.p != 2:
            m = FpMatrix(2, m.data % 2)
        fast = RowReducer(2, m.cols)
        slow = RowReducer(2, m.cols, force_generic=True)
        fast.add_rows(m.data)
        slow.add_rows(m.data)
        assert fast.pivot_columns() == slow.pivot_columns()
        assert fast.echelon_rows().tolist() == slow.echelon_rows().tolist()
        assert fast.kernel_matrix().tolist() == slow.kernel_matrix().tolist()

    @given(fp_matrices(max_rows=12, max_cols=10), st.integers(1, 4))
    def test_block_feeding_matches_single_shot(self, m, block):
        whole = RowReducer(m.p, m.cols)
        whole.add_rows(m.data)
        chunked = RowReducer(m.p, m.cols)
        for start in range(0, m.rows, block):
            chunked.add_rows(m.data[start : start + block])
        assert whole.pivot_columns() == chunked.pivot_columns()
        assert whole.echelon_rows().tolist() == chunked.echelon_rows().tolist()


class TestMatmulMod:
    @given(fp_matrices(max_rows=5, max_cols=5), st.integers(1, 4))
    def test_matches_integer_product(self, m, k):
        other = np.arange(m.cols * k).reshape(m.cols, k) % m.p
        expected = (m.data @ other) % m.p
        assert matmul_mod(m.data, other, m.p).tolist() == expected.tolist()


class TestValidation:
    def test_modulus_must_be_prime(self):
        with pytest.raises(ValueError):
            FpMatrix.from_rows([[1]], 4)
        with pytest.raises(ValueError):
            RowReducer(6, 3)

    def test_entries_reduced(self):
        m = FpMatrix.from_rows([[7, -1]], 5)
        assert m.data.tolist() == [[2, 4]]

    def test_vector_entries_reduced(self):
        assert FpVector(3, (4, -1)).values == (1, 2)

    def test_matrix_must_be_2d(self):
        with pytest.raises(ValueError):
            FpMatrix(2, np.array([1, 0, 1]))
