"""
仿射 Cartan 数据与权格

实现无扭 A_n^(1) 型的 Cartan 数据（标记和余标记由整数核求解得到），
以及权格 P 中的精确整数运算。权统一使用 (Λ_0..Λ_n, δ) 坐标。
"""

import json
import logging
import numbers
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Tuple, Dict, Any, Sequence, List

import numpy as np
import sympy

from .models import CartanDatumMismatchError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Weight:
    """权 λ = Σ c_i Λ_i + d δ"""
    lambda_coords: Tuple[int, ...]
    delta_coord: int = 0

    def __post_init__(self):
        """规范化并验证坐标"""
        object.__setattr__(self, 'lambda_coords', tuple(int(c) for c in self.lambda_coords))
        object.__setattr__(self, 'delta_coord', int(self.delta_coord))
        if not self.lambda_coords:
            raise ValueError("权的 Λ 坐标不能为空")

    @property
    def rank(self) -> int:
        return len(self.lambda_coords) - 1

    def _require_same_rank(self, other: 'Weight') -> None:
        if len(other.lambda_coords) != len(self.lambda_coords):
            raise CartanDatumMismatchError(
                f"权的秩不一致: {self.rank} 与 {other.rank}"
            )

    def __add__(self, other: 'Weight') -> 'Weight':
        if not isinstance(other, Weight):
            return NotImplemented
        self._require_same_rank(other)
        return Weight(
            tuple(a + b for a, b in zip(self.lambda_coords, other.lambda_coords)),
            self.delta_coord + other.delta_coord,
        )

    def __sub__(self, other: 'Weight') -> 'Weight':
        if not isinstance(other, Weight):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> 'Weight':
        return self.scale(-1)

    def __mul__(self, k: numbers.Integral) -> 'Weight':
        if not isinstance(k, numbers.Integral):
            return NotImplemented
        return self.scale(int(k))

    __rmul__ = __mul__

    def scale(self, k: int) -> 'Weight':
        """整数倍"""
        return Weight(tuple(k * c for c in self.lambda_coords), k * self.delta_coord)

    def pairing(self, i: int) -> int:
        """<h_i, λ>，δ 与所有 h_i 的配对为 0"""
        if not (0 <= i < len(self.lambda_coords)):
            raise IndexError(f"余根下标超出范围: {i}")
        return self.lambda_coords[i]

    def classical(self) -> Tuple[int, ...]:
        """模 δ 的类"""
        return self.lambda_coords

    def to_vector(self) -> np.ndarray:
        """(c_0, ..., c_n, d) 整数向量"""
        return np.array(self.lambda_coords + (self.delta_coord,), dtype=np.int64)

    @classmethod
    def from_vector(cls, vector: Sequence[int]) -> 'Weight':
        values = [int(v) for v in vector]
        return cls(tuple(values[:-1]), values[-1])

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典 {"lambda": [...], "delta": d}"""
        return {'lambda': list(self.lambda_coords), 'delta': self.delta_coord}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Weight':
        """从字典创建实例"""
        return cls(tuple(data['lambda']), data.get('delta', 0))

    def to_json(self) -> str:
        """转换为JSON字符串"""
        return json.dumps(self.to_dict())

    def __str__(self) -> str:
        coords = ",".join(str(c) for c in self.lambda_coords)
        return f"({coords};d={self.delta_coord})"


def _primitive_kernel(matrix: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """整数矩阵的唯一本原正核向量"""
    kernel = sympy.Matrix(matrix).nullspace()
    if len(kernel) != 1:
        raise ValueError(f"Cartan 矩阵的核维数应为 1，得到: {len(kernel)}")
    vector = kernel[0]
    denominator = sympy.ilcm(*[sympy.fraction(x)[1] for x in vector])
    values = [int(x * denominator) for x in vector]
    divisor = 0
    for v in values:
        divisor = gcd(divisor, abs(v))
    values = [v // divisor for v in values]
    if all(v <= 0 for v in values):
        values = [-v for v in values]
    if not all(v > 0 for v in values):
        raise ValueError(f"核向量不是正向量: {values}")
    return tuple(values)


@dataclass(frozen=True)
class CartanDatum:
    """仿射 Cartan 数据：矩阵 a_ij，标记 a_i（δ = Σ a_i α_i），余标记 a_i^∨（c = Σ a_i^∨ h_i）"""
    rank: int
    cartan_matrix: Tuple[Tuple[int, ...], ...]
    marks: Tuple[int, ...]
    comarks: Tuple[int, ...]

    def __post_init__(self):
        """验证 Cartan 矩阵：n = 1 时非对角元为 -2，n >= 2 时为 0 或 -1"""
        size = self.rank + 1
        off_diagonal = (-2,) if self.rank == 1 else (0, -1)
        if len(self.cartan_matrix) != size or any(len(row) != size for row in self.cartan_matrix):
            raise ValueError(f"Cartan 矩阵必须是 {size}x{size} 的")
        for i in range(size):
            if self.cartan_matrix[i][i] != 2:
                raise ValueError(f"对角元 a_{i}{i} 必须为 2")
            for j in range(size):
                if i != j and self.cartan_matrix[i][j] not in off_diagonal:
                    raise ValueError(
                        f"非对角元 a_{i}{j} = {self.cartan_matrix[i][j]}，必须取 {list(off_diagonal)} 中的值"
                    )

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> 'CartanDatum':
        """从对称仿射 Cartan 矩阵构造，标记和余标记由核求解得到"""
        rows = tuple(tuple(int(a) for a in row) for row in matrix)
        marks = _primitive_kernel(rows)
        transposed = tuple(zip(*rows))
        comarks = _primitive_kernel(transposed)
        return cls(len(rows) - 1, rows, marks, comarks)

    @property
    def index_set(self) -> range:
        """仿射指标集 {0, ..., n}"""
        return range(self.rank + 1)

    @property
    def classical_index_set(self) -> range:
        """经典指标集 {1, ..., n}"""
        return range(1, self.rank + 1)

    def zero(self) -> Weight:
        return Weight((0,) * (self.rank + 1), 0)

    def fundamental(self, i: int) -> Weight:
        """Λ_i"""
        self._check_index(i)
        return Weight(tuple(int(k == i) for k in self.index_set), 0)

    def delta(self) -> Weight:
        """零根 δ"""
        return Weight((0,) * (self.rank + 1), 1)

    def alpha(self, j: int) -> Weight:
        """单根 α_j = Σ_i a_ij Λ_i + [j = 0] δ"""
        self._check_index(j)
        coords = tuple(self.cartan_matrix[i][j] for i in self.index_set)
        return Weight(coords, 1 if j == 0 else 0)

    def varpi(self, i: int) -> Weight:
        """零级基本权 ϖ_i = Λ_i − a_i^∨ Λ_0"""
        if not (1 <= i <= self.rank):
            raise IndexError(f"ϖ_i 的下标必须在 1..{self.rank} 之间，得到: {i}")
        return self.fundamental(i) - self.fundamental(0).scale(self.comarks[i])

    def level(self, weight: Weight) -> int:
        """级 = Σ a_i^∨ <h_i, λ>"""
        self._check_weight(weight)
        return sum(a * c for a, c in zip(self.comarks, weight.lambda_coords))

    def reflection_matrix(self, i: int) -> np.ndarray:
        """s_i 在 (Λ, δ) 坐标上的整数矩阵：s_i(λ) = λ − <h_i, λ> α_i"""
        self._check_index(i)
        size = self.rank + 2
        matrix = np.eye(size, dtype=np.int64)
        matrix[:, i] -= self.alpha(i).to_vector()
        return matrix

    def _check_index(self, j: int) -> None:
        if not (0 <= j <= self.rank):
            raise IndexError(f"指标必须在 0..{self.rank} 之间，得到: {j}")

    def _check_weight(self, weight: Weight) -> None:
        if weight.rank != self.rank:
            raise CartanDatumMismatchError(f"权的秩 {weight.rank} 与 Cartan 数据的秩 {self.rank} 不一致")


def affine_a_matrix(n: int) -> List[List[int]]:
    """A_n^(1) 的 Cartan 矩阵：n >= 2 时为 n+1 个节点的圈图，n = 1 时为 [[2,-2],[-2,2]]"""
    if n < 1:
        raise ValueError(f"秩必须至少为 1，得到: {n}")
    if n == 1:
        return [[2, -2], [-2, 2]]
    size = n + 1
    matrix = [[0] * size for _ in range(size)]
    for i in range(size):
        matrix[i][i] = 2
        matrix[i][(i + 1) % size] = -1
        matrix[i][(i - 1) % size] = -1
    return matrix


@lru_cache(maxsize=None)
def build_affine_a(n: int) -> CartanDatum:
    """构造 A_n^(1) 型 Cartan 数据"""
    datum = CartanDatum.from_matrix(affine_a_matrix(n))
    logger.debug(f"构造 A_{n}^(1) Cartan 数据，标记: {datum.marks}")
    return datum


def alpha(datum: CartanDatum, j: int) -> Weight:
    """单根 α_j"""
    return datum.alpha(j)


def varpi(datum: CartanDatum, i: int) -> Weight:
    """零级基本权 ϖ_i"""
    return datum.varpi(i)


def pairing(h_index: int, weight: Weight) -> int:
    """<h_i, λ>"""
    return weight.pairing(h_index)


def level(datum: CartanDatum, weight: Weight) -> int:
    """<c, λ>"""
    return datum.level(weight)
