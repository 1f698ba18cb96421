"""
零级实验室

构造 B(W′) = ⊗ B(ϖ_i)^{⊗m_i}，枚举 u′ 所在的连通分支 B_0(W′)，检测极值元素，
并实现指标集 {(c_0, b′)} 及其形式和实现 s_{c_0}(z^{-1}) b′。
"""

import json
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Tuple, List, Dict, Optional, Iterable, Union, Any

from .cartan import Weight, build_affine_a
from .crystal import TensorElement, CrystalGraph, explore
from .interfaces import ICrystalElement
from .kr_crystal import u_varpi
from .models import GradeWindow, SchurMethod, ConnectivityReport
from .partitions import PartitionTuple, enumerate_c0
from .schur import FormalPolynomial, schur_tuple
from .weyl import is_extremal, classical_orbit


@dataclass(frozen=True)
class LambdaSpec:
    """支配零级权 λ = Σ m_i ϖ_i"""
    rank: int
    multiplicities: Tuple[int, ...]

    def __post_init__(self):
        """验证重数"""
        object.__setattr__(self, 'multiplicities', tuple(int(m) for m in self.multiplicities))
        if self.rank < 1:
            raise ValueError(f"秩必须至少为 1，得到: {self.rank}")
        if len(self.multiplicities) != self.rank:
            raise ValueError(f"重数个数 {len(self.multiplicities)} 与秩 {self.rank} 不一致")
        if any(m < 0 for m in self.multiplicities):
            raise ValueError(f"重数不能为负: {list(self.multiplicities)}")
        if sum(self.multiplicities) < 1:
            raise ValueError("重数之和必须至少为 1")

    @classmethod
    def from_string(cls, rank: int, text: str) -> 'LambdaSpec':
        """从 "m1,..,mn" 解析"""
        try:
            values = tuple(int(m) for m in text.split(','))
        except ValueError:
            raise ValueError(f"无法解析 λ 的重数: {text!r}")
        return cls(rank, values)

    @property
    def caps(self) -> Tuple[int, ...]:
        """λ_i = <h_i, λ> = m_i"""
        return self.multiplicities

    @property
    def factor_layout(self) -> List[Tuple[int, int]]:
        """W′ 中因子的顺序 (i, ν)：颜色升序，副本升序"""
        return [(i, nu) for i, m in enumerate(self.multiplicities, start=1) for nu in range(1, m + 1)]

    def weight(self) -> Weight:
        datum = build_affine_a(self.rank)
        total = datum.zero()
        for i, m in enumerate(self.multiplicities, start=1):
            total = total + datum.varpi(i).scale(m)
        return total

    def __str__(self) -> str:
        return "+".join(f"{m}ϖ{i}" for i, m in enumerate(self.multiplicities, start=1) if m)


def build_u_prime(spec: LambdaSpec) -> TensorElement:
    """u′ = ⊗_i u_{ϖ_i}^{⊗m_i}，所有因子阶数为 0"""
    return TensorElement(tuple(u_varpi(spec.rank, i) for i, _ in spec.factor_layout))


def enumerate_B0(spec: LambdaSpec, window: GradeWindow) -> CrystalGraph:
    """u′ 所在连通分支在窗口内的部分"""
    return explore(build_u_prime(spec), window)


def extremal_in_graph(graph: CrystalGraph) -> List[Tuple[ICrystalElement, Weight]]:
    """图中通过极值判定的元素及其权，按探索顺序"""
    return [(x, x.weight()) for x in graph.elements() if is_extremal(x).extremal]


def extremal_in_component(spec: LambdaSpec, window: GradeWindow,
                          graph: Optional[CrystalGraph] = None) -> List[Tuple[ICrystalElement, Weight]]:
    """B_0(W′) 窗口内的极值元素"""
    return extremal_in_graph(graph if graph is not None else enumerate_B0(spec, window))


@dataclass(frozen=True)
class FormalSum:
    """张量元素到正整数系数的有限映射，按元素编码排序存储"""
    items: Tuple[Tuple[TensorElement, int], ...] = ()

    @classmethod
    def from_counts(cls, counts: Dict[TensorElement, int]) -> 'FormalSum':
        entries = [(element, int(c)) for element, c in counts.items() if c]
        entries.sort(key=lambda item: item[0].encode())
        return cls(tuple(entries))

    def is_empty(self) -> bool:
        return not self.items

    def support(self) -> List[TensorElement]:
        return [element for element, _ in self.items]

    def coefficient(self, element: TensorElement) -> int:
        return dict(self.items).get(element, 0)

    def to_dict(self) -> List[Dict[str, Any]]:
        return [{'element': element.encode(), 'coeff': c} for element, c in self.items]

    def __str__(self) -> str:
        if not self.items:
            return "0"
        return " + ".join(f"{c}·{element.encode()}" for element, c in self.items)


@dataclass(frozen=True)
class IndexedImage:
    """指标对 (c_0, b′) 及其实现 s_{c_0}(z^{-1}) b′"""
    c0: PartitionTuple
    element: TensorElement
    realization: FormalSum

    def to_dict(self) -> Dict[str, Any]:
        return {
            'c0': str(self.c0),
            'element': self.element.encode(),
            'realization': self.realization.to_dict(),
        }


def phi_image(c0: PartitionTuple, b_prime: TensorElement, spec: LambdaSpec,
              method: Union[SchurMethod, str] = SchurMethod.SSYT) -> IndexedImage:
    """
    s_{c_0}(z^{-1}) b′ 在 q = 0 时的形式和

    变量 x_{i,ν} 对应 W′ 中的因子 (i, ν)；单项式 ∏ x_{i,ν}^{e_{i,ν}} 把因子 (i, ν) 的阶数降低 e_{i,ν}。
    """
    polynomials = schur_tuple(c0, spec.multiplicities, method)
    product = FormalPolynomial.one(0)
    for polynomial in polynomials:
        product = product.disjoint_product(polynomial)

    counts: Counter = Counter()
    for monomial, coeff in product.terms.items():
        counts[b_prime.shift_factors([-e for e in monomial])] += coeff
    return IndexedImage(c0, b_prime, FormalSum.from_counts(counts))


def is_reduced(c0: PartitionTuple, spec: LambdaSpec) -> bool:
    """约化指标：每个 ρ^(i) 都没有高度为 m_i 的整列"""
    return all(rho.length < m for rho, m in zip(c0.components, spec.multiplicities) if rho.length)


def index_set(spec: LambdaSpec, graph: CrystalGraph, max_size: int, reduced: bool = False,
              method: Union[SchurMethod, str] = SchurMethod.SSYT) -> List[IndexedImage]:
    """所有 (c_0, b′)（c_0 ∈ c_0(λ)，|c_0| <= max_size，b′ 在窗口内的 B_0 中）及其非零实现"""
    images = []
    elements = graph.elements()
    for c0 in enumerate_c0(spec.caps, max_size):
        if reduced and not is_reduced(c0, spec):
            continue
        for b_prime in elements:
            image = phi_image(c0, b_prime, spec, method)
            if not image.realization.is_empty():
                images.append(image)
    return images


def canonical_pair(c0: PartitionTuple, b_prime: TensorElement,
                   spec: LambdaSpec) -> Tuple[PartitionTuple, TensorElement]:
    """
    去掉每个 ρ^(i) 中高度为 m_i 的整列，并把 b′ 中颜色 i 的每个副本降低相应的阶数

    s_ρ(x_1..x_m) = (x_1 ⋯ x_m)^k s_{ρ − (k^m)}，所以两个指标对的实现相同当且仅当规范对相同。
    """
    if not c0.fits(spec.caps):
        raise ValueError(f"{c0} 不在 c_0(λ) 中")
    components = []
    exponents = []
    for rho, m in zip(c0.components, spec.multiplicities):
        full = rho.parts[-1] if m and rho.length == m else 0
        components.append(rho.strip_columns(full) if full else rho)
        exponents.extend([-full] * m)
    return PartitionTuple(tuple(components)), b_prime.shift_factors(exponents)


def connectivity_census(spec: LambdaSpec, graph: CrystalGraph) -> ConnectivityReport:
    """
    窗口内的连通性：每个完全展开的元素是否与某个权为 λ − kδ 的极值元素连通

    路径离开窗口的元素记为未确定，而不是失败。
    """
    target_classical = spec.weight().classical()
    u_classical = build_u_prime(spec).classical_projection()
    targets = [
        x for x, wt in extremal_in_graph(graph) if wt.classical() == target_classical
    ]
    target_ids = {t.encode() for t in targets}

    connected = 0
    undetermined: List[str] = []
    for x in graph.expanded_elements():
        node_id = x.encode()
        if target_ids & graph.component_of(node_id):
            connected += 1
        else:
            undetermined.append(node_id)

    return ConnectivityReport(
        connected=connected,
        undetermined=len(undetermined),
        targets=targets,
        undetermined_nodes=undetermined,
        targets_are_z_shifts=all(t.classical_projection() == u_classical for t in targets),
    )


CharacterKey = Tuple[Tuple[int, ...], int]


def graded_character(source: Union[CrystalGraph, Iterable[Any]]) -> Dict[CharacterKey, int]:
    """
    按 (模 δ 的权, δ 次数) 计数

    source 可以是晶体图、元素序列，或 IndexedImage 序列（按系数累加其支撑）。
    """
    counts: Counter = Counter()
    items = source.elements() if isinstance(source, CrystalGraph) else source
    for item in items:
        if isinstance(item, IndexedImage):
            for element, coeff in item.realization.items:
                wt = element.weight()
                counts[(wt.classical(), wt.delta_coord)] += coeff
        else:
            wt = item.weight()
            counts[(wt.classical(), wt.delta_coord)] += 1
    return dict(sorted(counts.items()))


class LevelZeroLab:
    """一个 λ 和窗口上的实验：分支普查、极值普查、指标集与分次特征"""

    def __init__(self, spec: LambdaSpec, window: GradeWindow, max_schur: int = 3,
                 schur_method: Union[SchurMethod, str] = SchurMethod.SSYT,
                 graph: Optional[CrystalGraph] = None):
        """
        初始化实验室

        Args:
            spec: λ 的重数
            window: 总阶数窗口
            max_schur: |c_0| 的上限
            schur_method: Schur 展开方法
            graph: 已经探索好的 B_0(W′) 窗口分支，省略时按需探索
        """
        self.spec = spec
        self.window = window
        self.max_schur = max_schur
        self.schur_method = SchurMethod(schur_method)
        self.logger = logging.getLogger(__name__)
        self._graph = graph

        self.logger.info(f"零级实验室已初始化: A_{spec.rank}^(1)，λ = {spec}，窗口 [{window.min_grade}, {window.max_grade}]")

    @property
    def graph(self) -> CrystalGraph:
        if self._graph is None:
            self._graph = enumerate_B0(self.spec, self.window)
        return self._graph

    def component_census(self) -> Dict[str, Any]:
        """B_0(W′) 窗口内的规模"""
        graph = self.graph
        return {
            'nodes': len(graph),
            'edges': graph.graph.number_of_edges(),
            'truncated': len(graph.truncated),
            'cap_reached': graph.cap_reached,
        }

    def extremal_census(self) -> List[Tuple[ICrystalElement, Weight]]:
        return extremal_in_graph(self.graph)

    def extremal_weights_in_orbit(self) -> bool:
        """所有极值权都落在 Wλ + Zδ 中"""
        orbit = classical_orbit(self.spec.weight())
        return all(wt.classical() in orbit for _, wt in self.extremal_census())

    def index_set(self, reduced: bool = False) -> List[IndexedImage]:
        images = index_set(self.spec, self.graph, self.max_schur, reduced, self.schur_method)
        self.logger.debug(f"指标集: {len(images)} 个（reduced={reduced}）")
        return images

    def connectivity(self) -> ConnectivityReport:
        return connectivity_census(self.spec, self.graph)

    def character(self) -> Dict[CharacterKey, int]:
        return graded_character(self.graph)

    def report(self) -> Dict[str, Any]:
        """lab 子命令的完整报告"""
        extremal = self.extremal_census()
        images = self.index_set()
        return {
            'lambda': list(self.spec.multiplicities),
            'rank': self.spec.rank,
            'window': self.window.to_dict(),
            'component': self.component_census(),
            'extremal': [{'element': x.encode(), 'weight': wt.to_dict()} for x, wt in extremal],
            'extremal_weights_in_orbit': self.extremal_weights_in_orbit(),
            'connectivity': self.connectivity().to_dict(),
            'index_set': {
                'size': len(images),
                'reduced_size': sum(1 for image in images if is_reduced(image.c0, self.spec)),
                'entries': [image.to_dict() for image in images],
            },
            'character': [
                {'weight': list(key[0]), 'delta': key[1], 'count': count}
                for key, count in self.character().items()
            ],
        }

    def to_json(self) -> str:
        """转换为JSON字符串"""
        return json.dumps(self.report(), ensure_ascii=False, indent=2)
