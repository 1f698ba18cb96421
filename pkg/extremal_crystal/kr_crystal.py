"""
KR 列晶体及其仿射化

A_n^(1) 型的列晶体 B^{i,1}（{1..n+1} 中高度为 i 的严格递增列），
经典算子、提升（promotion）、0 号箭头，以及带 z 阶数的仿射化元素。
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Tuple, Optional, List, Sequence

from .cartan import Weight
from .config import get_conventions
from .interfaces import ICrystalElement

logger = logging.getLogger(__name__)

Column = Tuple[int, ...]


def validate_column(n: int, column: Sequence[int]) -> Column:
    """验证并规范化列：{1..n+1} 中的严格递增子集，高度 1..n"""
    column = tuple(int(x) for x in column)
    if n < 1:
        raise ValueError(f"秩必须至少为 1，得到: {n}")
    if not (1 <= len(column) <= n):
        raise ValueError(f"列的高度必须在 1..{n} 之间: {list(column)}")
    if any(x < 1 or x > n + 1 for x in column):
        raise ValueError(f"列的元素必须在 1..{n + 1} 之间: {list(column)}")
    if any(column[k] >= column[k + 1] for k in range(len(column) - 1)):
        raise ValueError(f"列的元素必须严格递增: {list(column)}")
    return column


def _substitute(column: Column, old: int, new: int) -> Column:
    return tuple(sorted(new if x == old else x for x in column))


def _check_classical_color(n: int, j: int) -> None:
    if not (1 <= j <= n):
        raise IndexError(f"经典颜色必须在 1..{n} 之间，得到: {j}")


def classical_f(j: int, column: Column, n: int) -> Optional[Column]:
    """f̃_j：j ∈ col 且 j+1 ∉ col 时把 j 换成 j+1"""
    _check_classical_color(n, j)
    if j in column and j + 1 not in column:
        return _substitute(column, j, j + 1)
    return None


def classical_e(j: int, column: Column, n: int) -> Optional[Column]:
    """ẽ_j：j+1 ∈ col 且 j ∉ col 时把 j+1 换成 j"""
    _check_classical_color(n, j)
    if j + 1 in column and j not in column:
        return _substitute(column, j + 1, j)
    return None


def promotion(column: Column, n: int) -> Column:
    """pr(col) = {x+1 : x <= n} ∪ ({1} 若 n+1 ∈ col)"""
    return tuple(sorted(1 if x == n + 1 else x + 1 for x in column))


def promotion_inverse(column: Column, n: int) -> Column:
    """pr 的逆"""
    return tuple(sorted(n + 1 if x == 1 else x - 1 for x in column))


def column_f0(column: Column, n: int) -> Optional[Column]:
    """0 号下降算子的列部分：n+1 ∈ col 且 1 ∉ col 时把 n+1 换成 1"""
    if n + 1 in column and 1 not in column:
        return _substitute(column, n + 1, 1)
    return None


def column_e0(column: Column, n: int) -> Optional[Column]:
    """0 号提升算子的列部分：1 ∈ col 且 n+1 ∉ col 时把 1 换成 n+1"""
    if 1 in column and n + 1 not in column:
        return _substitute(column, 1, n + 1)
    return None


def column_f0_by_promotion(column: Column, n: int) -> Optional[Column]:
    """pr⁻¹ ∘ f̃_1 ∘ pr"""
    image = classical_f(1, promotion(column, n), n)
    return None if image is None else promotion_inverse(image, n)


def column_e0_by_promotion(column: Column, n: int) -> Optional[Column]:
    """pr⁻¹ ∘ ẽ_1 ∘ pr"""
    image = classical_e(1, promotion(column, n), n)
    return None if image is None else promotion_inverse(image, n)


def column_weight(column: Column, n: int) -> Weight:
    """
    列的权（δ 坐标为 0 的截面）

    c_j = [j ∈ col] − [j+1 ∈ col]（1 <= j <= n），c_0 = [n+1 ∈ col] − [1 ∈ col]
    """
    members = set(column)
    coords = [int(n + 1 in members) - int(1 in members)]
    coords.extend(int(j in members) - int(j + 1 in members) for j in range(1, n + 1))
    return Weight(tuple(coords), 0)


def kr_columns(n: int, i: int) -> List[Column]:
    """B^{i,1} 的全部元素，按字典序"""
    if not (1 <= i <= n):
        raise ValueError(f"高度必须在 1..{n} 之间，得到: {i}")
    return [tuple(c) for c in itertools.combinations(range(1, n + 2), i)]


@dataclass(frozen=True, order=True)
class AffineElement(ICrystalElement):
    """仿射化 KR 列晶体中的元素 (col, m)，权为 cl_lift(col) + m δ"""
    rank: int
    column: Column
    grade: int = 0

    def __post_init__(self):
        """验证列"""
        object.__setattr__(self, 'column', validate_column(self.rank, self.column))
        object.__setattr__(self, 'grade', int(self.grade))

    @property
    def height(self) -> int:
        """列高 i，即所属的 B(ϖ_i)"""
        return len(self.column)

    def weight(self) -> Weight:
        base = column_weight(self.column, self.rank)
        return Weight(base.lambda_coords, self.grade)

    def _check_color(self, i: int) -> None:
        if not (0 <= i <= self.rank):
            raise IndexError(f"颜色必须在 0..{self.rank} 之间，得到: {i}")

    def f(self, i: int) -> Optional['AffineElement']:
        self._check_color(i)
        if i == 0:
            return affine_f0(self)
        image = classical_f(i, self.column, self.rank)
        return None if image is None else AffineElement(self.rank, image, self.grade)

    def e(self, i: int) -> Optional['AffineElement']:
        self._check_color(i)
        if i == 0:
            return affine_e0(self)
        image = classical_e(i, self.column, self.rank)
        return None if image is None else AffineElement(self.rank, image, self.grade)

    def epsilon(self, i: int) -> int:
        # 列晶体的每条弦长度至多为 1
        return 0 if self.e(i) is None else 1

    def phi(self, i: int) -> int:
        return 0 if self.f(i) is None else 1

    def classical_projection(self) -> 'AffineElement':
        return AffineElement(self.rank, self.column, 0)

    def z_shift(self, k: int) -> 'AffineElement':
        return AffineElement(self.rank, self.column, self.grade + k)

    def encode(self) -> str:
        entries = ",".join(str(x) for x in self.column)
        return f"[{entries}|m={self.grade}]"


def affine_f0(element: AffineElement) -> Optional[AffineElement]:
    """f̃_0(col, m) = (n+1 换成 1 的列, m − 1)"""
    image = column_f0(element.column, element.rank)
    if image is None:
        return None
    shift = get_conventions().f0_grade_shift
    return AffineElement(element.rank, image, element.grade + shift)


def affine_e0(element: AffineElement) -> Optional[AffineElement]:
    """ẽ_0(col, m) = (1 换成 n+1 的列, m + 1)"""
    image = column_e0(element.column, element.rank)
    if image is None:
        return None
    shift = get_conventions().f0_grade_shift
    return AffineElement(element.rank, image, element.grade - shift)


def u_varpi(n: int, i: int) -> AffineElement:
    """极值元素 u_{ϖ_i} = ({1..i}, 0)"""
    if not (1 <= i <= n):
        raise ValueError(f"ϖ_i 的下标必须在 1..{n} 之间，得到: {i}")
    return AffineElement(n, tuple(range(1, i + 1)), 0)


def z_shift(element: ICrystalElement, k: int) -> ICrystalElement:
    """z^k：所有阶数整体移动 k，权移动 k δ"""
    return element.z_shift(k)
