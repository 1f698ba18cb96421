"""
Cartan 数据与权格测试
"""

import numpy as np
import pytest

from extremal_crystal.cartan import (
    Weight, CartanDatum, affine_a_matrix, build_affine_a, alpha, varpi, pairing, level
)
from extremal_crystal.models import CartanDatumMismatchError


class TestAffineMatrix:
    """A_n^(1) Cartan 矩阵测试"""

    def test_rank_one(self):
        """测试 n = 1 的特殊矩阵"""
        assert affine_a_matrix(1) == [[2, -2], [-2, 2]]

    def test_rank_two_cycle(self):
        """测试 n = 2 为三节点的圈"""
        assert affine_a_matrix(2) == [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]

    def test_invalid_rank(self):
        """测试无效的秩"""
        with pytest.raises(ValueError, match="秩必须至少为 1"):
            affine_a_matrix(0)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_marks_and_comarks(self, n):
        """测试 A 型的标记和余标记全为 1"""
        datum = build_affine_a(n)
        assert datum.marks == (1,) * (n + 1)
        assert datum.comarks == (1,) * (n + 1)

    def test_finite_type_rejected(self):
        """测试非仿射矩阵没有一维核"""
        with pytest.raises(ValueError, match="核维数"):
            CartanDatum.from_matrix([[2, -1], [-1, 2]])

    def test_invalid_diagonal(self):
        """测试对角元必须为 2"""
        with pytest.raises(ValueError, match="对角元"):
            CartanDatum(1, ((1, -2), (-2, 2)), (1, 1), (1, 1))

    @pytest.mark.parametrize("rank,matrix", [
        (2, ((2, -2, 0), (-1, 2, -1), (0, -1, 2))),
        (2, ((2, -1, 1), (-1, 2, -1), (-1, -1, 2))),
        (1, ((2, -1), (-1, 2))),
        (1, ((2, 0), (0, 2))),
    ])
    def test_invalid_off_diagonal(self, rank, matrix):
        """测试非对角元：n >= 2 时只能为 0 或 -1，n = 1 时必须为 -2"""
        with pytest.raises(ValueError, match="非对角元"):
            CartanDatum(rank, matrix, (1,) * (rank + 1), (1,) * (rank + 1))


class TestRootsAndWeights:
    """单根与基本权测试"""

    def test_simple_roots_a2(self):
        """测试 A_2^(1) 的单根"""
        datum = build_affine_a(2)
        assert datum.alpha(0) == Weight((2, -1, -1), 1)
        assert datum.alpha(1) == Weight((-1, 2, -1), 0)
        assert alpha(datum, 2) == Weight((-1, -1, 2), 0)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_roots_sum_to_delta(self, n):
        """测试 δ = Σ a_i α_i"""
        datum = build_affine_a(n)
        total = datum.zero()
        for i in datum.index_set:
            total = total + datum.alpha(i).scale(datum.marks[i])
        assert total == datum.delta()

    def test_level_zero_fundamental_weights(self):
        """测试 ϖ_i 为零级权"""
        datum = build_affine_a(3)
        for i in datum.classical_index_set:
            assert level(datum, varpi(datum, i)) == 0
        assert datum.varpi(2) == Weight((-1, 0, 1, 0), 0)

    def test_level_of_lambda0(self):
        """测试 Λ_0 的级为 1"""
        datum = build_affine_a(2)
        assert datum.level(datum.fundamental(0)) == 1

    def test_varpi_index_range(self):
        """测试 ϖ_0 无定义"""
        with pytest.raises(IndexError):
            build_affine_a(2).varpi(0)

    def test_alpha_index_range(self):
        """测试单根下标越界"""
        with pytest.raises(IndexError):
            build_affine_a(2).alpha(3)


class TestWeight:
    """权的运算测试"""

    def test_arithmetic(self):
        """测试加减、取负与整数倍"""
        a = Weight((1, -1), 2)
        b = Weight((0, 3), -1)
        assert a + b == Weight((1, 2), 1)
        assert a - b == Weight((1, -4), 3)
        assert -a == Weight((-1, 1), -2)
        assert a * 3 == Weight((3, -3), 6)
        assert 2 * a == a.scale(2)

    def test_numpy_integer_scale(self):
        """测试 numpy 整数倍"""
        a = Weight((1, -1), 2)
        product = a * np.int64(3)
        assert product == Weight((3, -3), 6)
        assert all(type(c) is int for c in product.lambda_coords)
        with pytest.raises(TypeError):
            a * 1.5

    def test_rank_mismatch(self):
        """测试不同秩的权相加"""
        with pytest.raises(CartanDatumMismatchError):
            Weight((1, 0), 0) + Weight((1, 0, 0), 0)

    def test_pairing(self):
        """测试与余根的配对"""
        weight = Weight((-1, 1, 0), 5)
        assert pairing(0, weight) == -1
        assert weight.pairing(1) == 1
        with pytest.raises(IndexError):
            weight.pairing(3)

    def test_classical_forgets_delta(self):
        """测试模 δ 的类"""
        assert Weight((1, 2), 7).classical() == Weight((1, 2), -3).classical()

    def test_serialization(self):
        """测试字典与字符串形式"""
        weight = Weight((-1, 1, 0), -2)
        assert weight.to_dict() == {'lambda': [-1, 1, 0], 'delta': -2}
        assert Weight.from_dict(weight.to_dict()) == weight
        assert str(weight) == "(-1,1,0;d=-2)"

    def test_vector_form(self):
        """测试整数向量形式"""
        weight = Weight((2, -1, -1), 1)
        assert list(weight.to_vector()) == [2, -1, -1, 1]
        assert Weight.from_vector(weight.to_vector()) == weight

    def test_empty_coordinates(self):
        """测试空坐标"""
        with pytest.raises(ValueError):
            Weight((), 0)


class TestReflectionMatrix:
    """反射矩阵测试"""

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_reflection_formula(self, n):
        """测试 s_i(λ) = λ − <h_i, λ> α_i"""
        datum = build_affine_a(n)
        weight = Weight(tuple(range(1, n + 2)), 3)
        for i in datum.index_set:
            image = Weight.from_vector(datum.reflection_matrix(i) @ weight.to_vector())
            assert image == weight - datum.alpha(i).scale(weight.pairing(i))

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_involution(self, n):
        """测试 s_i² = 1"""
        datum = build_affine_a(n)
        identity = np.eye(n + 2, dtype=np.int64)
        for i in datum.index_set:
            matrix = datum.reflection_matrix(i)
            assert np.array_equal(matrix @ matrix, identity)

    def test_delta_fixed(self):
        """测试 δ 在所有反射下不动"""
        datum = build_affine_a(2)
        delta = datum.delta().to_vector()
        for i in datum.index_set:
            assert np.array_equal(datum.reflection_matrix(i) @ delta, delta)
