"""
Schur 多项式

有限个变量 x_1..x_m 上的形式多项式，以及 Schur 多项式的两种独立展开：
半标准杨表求和与 Jacobi–Trudi 行列式（以初等对称多项式为元素）。
"""

import itertools
import json
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Tuple, List, Optional, Sequence, Union

import sympy

from .models import SchurMethod
from .partitions import Partition, PartitionTuple

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]


@dataclass
class FormalPolynomial:
    """整系数多项式：单项式指数向量到系数的有限映射，不存储零系数"""
    nvars: int
    terms: Dict[Monomial, int] = field(default_factory=dict)

    def __post_init__(self):
        """规范化并验证单项式"""
        if self.nvars < 0:
            raise ValueError(f"变量个数不能为负数: {self.nvars}")
        cleaned: Dict[Monomial, int] = {}
        for monomial, coeff in self.terms.items():
            monomial = tuple(int(e) for e in monomial)
            if len(monomial) != self.nvars:
                raise ValueError(f"单项式 {monomial} 的长度与变量个数 {self.nvars} 不一致")
            if any(e < 0 for e in monomial):
                raise ValueError(f"指数不能为负: {monomial}")
            if coeff:
                cleaned[monomial] = int(coeff)
        self.terms = cleaned

    @classmethod
    def zero(cls, nvars: int) -> 'FormalPolynomial':
        return cls(nvars, {})

    @classmethod
    def one(cls, nvars: int) -> 'FormalPolynomial':
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def from_sympy(cls, expr: sympy.Expr, gens: Sequence[sympy.Symbol]) -> 'FormalPolynomial':
        """从 sympy 表达式展开"""
        poly = sympy.Poly(sympy.expand(expr), *gens)
        return cls(len(gens), {tuple(exps): int(coeff) for exps, coeff in poly.terms() if coeff != 0})

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set:
        """所有单项式的总次数"""
        return {sum(m) for m in self.terms}

    def coefficients_nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def _require_same_vars(self, other: 'FormalPolynomial') -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"变量个数不一致: {self.nvars} 与 {other.nvars}")

    def __add__(self, other: 'FormalPolynomial') -> 'FormalPolynomial':
        if not isinstance(other, FormalPolynomial):
            return NotImplemented
        self._require_same_vars(other)
        terms = dict(self.terms)
        for monomial, coeff in other.terms.items():
            terms[monomial] = terms.get(monomial, 0) + coeff
        return FormalPolynomial(self.nvars, terms)

    def __mul__(self, other: 'FormalPolynomial') -> 'FormalPolynomial':
        if not isinstance(other, FormalPolynomial):
            return NotImplemented
        self._require_same_vars(other)
        terms: Dict[Monomial, int] = {}
        for (m1, c1), (m2, c2) in itertools.product(self.terms.items(), other.terms.items()):
            monomial = tuple(a + b for a, b in zip(m1, m2))
            terms[monomial] = terms.get(monomial, 0) + c1 * c2
        return FormalPolynomial(self.nvars, terms)

    def disjoint_product(self, other: 'FormalPolynomial') -> 'FormalPolynomial':
        """不相交变量集上的乘积：指数向量拼接"""
        terms = {
            m1 + m2: c1 * c2
            for (m1, c1), (m2, c2) in itertools.product(self.terms.items(), other.terms.items())
        }
        return FormalPolynomial(self.nvars + other.nvars, terms)

    def permute(self, permutation: Sequence[int]) -> 'FormalPolynomial':
        """变量置换：x_k ↦ x_{permutation[k]}"""
        if sorted(permutation) != list(range(self.nvars)):
            raise ValueError(f"无效的置换: {permutation}")
        terms: Dict[Monomial, int] = {}
        for monomial, coeff in self.terms.items():
            permuted = [0] * self.nvars
            for k, e in enumerate(monomial):
                permuted[permutation[k]] = e
            terms[tuple(permuted)] = coeff
        return FormalPolynomial(self.nvars, terms)

    def is_symmetric(self) -> bool:
        """在所有相邻对换下不变"""
        for k in range(self.nvars - 1):
            swap = list(range(self.nvars))
            swap[k], swap[k + 1] = swap[k + 1], swap[k]
            if self.permute(swap) != self:
                return False
        return True

    def sorted_terms(self) -> List[Tuple[Monomial, int]]:
        """按单项式字典序降序排列"""
        return sorted(self.terms.items(), reverse=True)

    def to_dict(self) -> List[Dict[str, object]]:
        return [{'monomial': list(m), 'coeff': c} for m, c in self.sorted_terms()]

    def to_json(self) -> str:
        """转换为JSON字符串"""
        return json.dumps(self.to_dict())

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        pieces = []
        for monomial, coeff in self.sorted_terms():
            factors = []
            for k, e in enumerate(monomial):
                if e == 1:
                    factors.append(f"x{k + 1}")
                elif e > 1:
                    factors.append(f"x{k + 1}^{e}")
            body = "*".join(factors)
            if not body:
                pieces.append(str(coeff))
            elif coeff == 1:
                pieces.append(body)
            else:
                pieces.append(f"{coeff}*{body}")
        return " + ".join(pieces)


def elementary(k: int, m: int) -> FormalPolynomial:
    """初等对称多项式 e_k(x_1..x_m)；k < 0 或 k > m 时为 0"""
    if k < 0 or k > m:
        return FormalPolynomial.zero(m)
    terms = {}
    for subset in itertools.combinations(range(m), k):
        terms[tuple(1 if v in subset else 0 for v in range(m))] = 1
    return FormalPolynomial(m, terms)


def schur_ssyt(rho: Partition, m: int) -> FormalPolynomial:
    """按半标准杨表求和：行弱增、列严格增，元素取自 1..m"""
    if m < 0:
        raise ValueError(f"变量个数不能为负数: {m}")
    if rho.length > m:
        return FormalPolynomial.zero(m)

    cells = [(row, col) for row, part in enumerate(rho.parts) for col in range(part)]
    tableau = [[0] * part for part in rho.parts]
    content = [0] * m
    terms: Dict[Monomial, int] = {}

    def backtrack(pos: int) -> None:
        if pos == len(cells):
            monomial = tuple(content)
            terms[monomial] = terms.get(monomial, 0) + 1
            return
        row, col = cells[pos]
        low = 1
        if col > 0:
            low = max(low, tableau[row][col - 1])  # 行弱增
        if row > 0:
            low = max(low, tableau[row - 1][col] + 1)  # 列严格增
        for value in range(low, m + 1):
            tableau[row][col] = value
            content[value - 1] += 1
            backtrack(pos + 1)
            content[value - 1] -= 1
        tableau[row][col] = 0

    backtrack(0)
    return FormalPolynomial(m, terms)


@lru_cache(maxsize=None)
def _jacobi_trudi_cached(parts: Tuple[int, ...], m: int, size: int) -> FormalPolynomial:
    conjugate = Partition(parts).transpose().parts
    conjugate = conjugate + (0,) * (size - len(conjugate))

    # 先在符号 E_k 上求行列式，再代入 e_k(x)
    e_symbols = sympy.symbols(f'E1:{m + 1}') if m > 0 else ()

    def entry(index: int) -> sympy.Expr:
        if index == 0:
            return sympy.Integer(1)
        if index < 0 or index > m:
            return sympy.Integer(0)
        return e_symbols[index - 1]

    matrix = sympy.Matrix(size, size, lambda k, j: entry(conjugate[k] - k + j))
    determinant = matrix.det(method='berkowitz')

    x = sympy.symbols(f'x1:{m + 1}')
    substitution = {
        e_symbols[k - 1]: sum(sympy.Mul(*subset) for subset in itertools.combinations(x, k))
        for k in range(1, m + 1)
    }
    return FormalPolynomial.from_sympy(determinant.subs(substitution), x)


def schur_jacobi_trudi(rho: Partition, m: int, size: Optional[int] = None) -> FormalPolynomial:
    """
    Jacobi–Trudi 展开：det(e_{ρ′_k − k + j})，1 <= k, j <= t

    Args:
        rho: 分拆
        m: 变量个数
        size: 行列式阶数 t，默认取 ℓ(ρ′) = ρ_1；任何 t >= ℓ(ρ′) 结果相同
    """
    if m < 0:
        raise ValueError(f"变量个数不能为负数: {m}")
    minimal = rho.transpose().length
    t = minimal if size is None else size
    if t < minimal:
        raise ValueError(f"行列式阶数 {t} 小于 ℓ(ρ′) = {minimal}")
    if rho.size == 0:
        return FormalPolynomial.one(m)
    if m == 0:
        return FormalPolynomial.zero(0)
    return _jacobi_trudi_cached(rho.parts, m, t)


def schur(rho: Partition, m: int,
          method: Union[SchurMethod, str] = SchurMethod.SSYT) -> FormalPolynomial:
    """按指定方法展开 s_ρ(x_1..x_m)"""
    method = SchurMethod(method)
    if method == SchurMethod.JACOBI_TRUDI:
        return schur_jacobi_trudi(rho, m)
    return schur_ssyt(rho, m)


def schur_tuple(c0: PartitionTuple, var_counts: Sequence[int],
                method: Union[SchurMethod, str] = SchurMethod.SSYT) -> List[FormalPolynomial]:
    """逐颜色展开 s_{ρ^(i)}(x_{i,1}..x_{i,m_i})，乘积在下游对不相交变量集计算"""
    if c0.rank != len(var_counts):
        raise ValueError(f"分拆组的分量数 {c0.rank} 与变量组数 {len(var_counts)} 不一致")
    return [schur(rho, m, method) for rho, m in zip(c0.components, var_counts)]
