"""
晶体核心

张量积元素（Kashiwara 约定，二元规则与符号规则两种实现）、
带阶数窗口的广度优先探索，以及晶体公理检查。
"""

import json
import logging
from collections import deque
from dataclasses import dataclass
from typing import Tuple, Optional, List, Dict, Set, Iterable, Sequence, Callable, Any

import networkx as nx

from .cartan import Weight, build_affine_a
from .config import get_conventions
from .interfaces import ICrystalElement
from .models import (
    CartanDatumMismatchError, GradeWindow, TensorRule, AxiomReport, AxiomViolation
)

logger = logging.getLogger(__name__)

TENSOR_SYMBOL = "⊗"


def _string_data(factors: Sequence[ICrystalElement], i: int) -> Tuple[int, int]:
    """左结合张量的 (ε_i, φ_i)"""
    eps, phi = factors[0].epsilon(i), factors[0].phi(i)
    for b in factors[1:]:
        eps2, phi2 = b.epsilon(i), b.phi(i)
        eps, phi = eps + max(0, eps2 - phi), phi2 + max(0, phi - eps2)
    return eps, phi


def _replace(factors: Sequence[ICrystalElement], position: int,
             image: Optional[ICrystalElement]) -> Optional[Tuple[ICrystalElement, ...]]:
    if image is None:
        return None
    return tuple(factors[:position]) + (image,) + tuple(factors[position + 1:])


def binary_f(i: int, factors: Sequence[ICrystalElement], flipped: bool = False
             ) -> Optional[Tuple[ICrystalElement, ...]]:
    """
    二元规则下的 f̃_i：(前缀) ⊗ b，前缀 φ_i > ε_i(b) 时作用在前缀上

    flipped 为真时比较条件改为 >=（仅用于故障注入）。
    """
    if len(factors) == 1:
        image = factors[0].f(i)
        return None if image is None else (image,)
    prefix, last = factors[:-1], factors[-1]
    _, phi1 = _string_data(prefix, i)
    eps2 = last.epsilon(i)
    acts_left = phi1 >= eps2 if flipped else phi1 > eps2
    if acts_left:
        image = binary_f(i, prefix, flipped)
        return None if image is None else image + (last,)
    return _replace(factors, len(factors) - 1, last.f(i))


def binary_e(i: int, factors: Sequence[ICrystalElement]) -> Optional[Tuple[ICrystalElement, ...]]:
    """二元规则下的 ẽ_i：前缀 φ_i >= ε_i(b) 时作用在前缀上"""
    if len(factors) == 1:
        image = factors[0].e(i)
        return None if image is None else (image,)
    prefix, last = factors[:-1], factors[-1]
    _, phi1 = _string_data(prefix, i)
    if phi1 >= last.epsilon(i):
        image = binary_e(i, prefix)
        return None if image is None else image + (last,)
    return _replace(factors, len(factors) - 1, last.e(i))


def signature(factors: Sequence[ICrystalElement], i: int) -> Tuple[List[int], List[int]]:
    """
    符号规则：每个因子贡献 −^ε +^φ，"−" 抵消其左侧最近的未匹配 "+"

    Returns:
        (未匹配 "−" 所在因子, 未匹配 "+" 所在因子)，均按从左到右排列
    """
    unmatched_minus: List[int] = []
    open_plus: List[int] = []
    for position, b in enumerate(factors):
        for _ in range(b.epsilon(i)):
            if open_plus:
                open_plus.pop()
            else:
                unmatched_minus.append(position)
        open_plus.extend([position] * b.phi(i))
    return unmatched_minus, open_plus


def signature_f(i: int, factors: Sequence[ICrystalElement]) -> Optional[Tuple[ICrystalElement, ...]]:
    """f̃_i 作用在最左的未匹配 "+" 所在因子上"""
    _, plus = signature(factors, i)
    if not plus:
        return None
    return _replace(factors, plus[0], factors[plus[0]].f(i))


def signature_e(i: int, factors: Sequence[ICrystalElement]) -> Optional[Tuple[ICrystalElement, ...]]:
    """ẽ_i 作用在最右的未匹配 "−" 所在因子上"""
    minus, _ = signature(factors, i)
    if not minus:
        return None
    return _replace(factors, minus[-1], factors[minus[-1]].e(i))


@dataclass(frozen=True, order=True)
class TensorElement(ICrystalElement):
    """张量积元素 b_1 ⊗ ... ⊗ b_N（左结合）"""
    factors: Tuple[ICrystalElement, ...]

    def __post_init__(self):
        """验证因子"""
        object.__setattr__(self, 'factors', tuple(self.factors))
        if not self.factors:
            raise ValueError("张量积至少需要一个因子")
        ranks = {b.rank for b in self.factors}
        if len(ranks) != 1:
            raise CartanDatumMismatchError(f"张量因子的 Cartan 数据不一致，秩为: {sorted(ranks)}")

    @property
    def rank(self) -> int:
        return self.factors[0].rank

    @property
    def grade(self) -> int:
        return sum(b.grade for b in self.factors)

    @property
    def grades(self) -> Tuple[int, ...]:
        """展平后各因子的阶数（z_{i,ν} 指数）"""
        return tuple(b.grade for b in self.flatten().factors)

    def flatten(self) -> 'TensorElement':
        """展开嵌套张量"""
        flat: List[ICrystalElement] = []
        for b in self.factors:
            if isinstance(b, TensorElement):
                flat.extend(b.flatten().factors)
            else:
                flat.append(b)
        return TensorElement(tuple(flat))

    def weight(self) -> Weight:
        total = self.factors[0].weight()
        for b in self.factors[1:]:
            total = total + b.weight()
        return total

    def epsilon(self, i: int) -> int:
        return _string_data(self.factors, i)[0]

    def phi(self, i: int) -> int:
        return _string_data(self.factors, i)[1]

    def f(self, i: int) -> Optional['TensorElement']:
        rule = get_conventions().tensor_rule
        if rule == TensorRule.SIGNATURE:
            image = signature_f(i, self.factors)
        else:
            image = binary_f(i, self.factors, flipped=(rule == TensorRule.FLIPPED))
        return None if image is None else TensorElement(image)

    def e(self, i: int) -> Optional['TensorElement']:
        if get_conventions().tensor_rule == TensorRule.SIGNATURE:
            image = signature_e(i, self.factors)
        else:
            image = binary_e(i, self.factors)
        return None if image is None else TensorElement(image)

    def classical_projection(self) -> 'TensorElement':
        return TensorElement(tuple(b.classical_projection() for b in self.factors))

    def z_shift(self, k: int) -> 'TensorElement':
        """每个因子的阶数各移动 k"""
        return TensorElement(tuple(b.z_shift(k) for b in self.factors))

    def shift_factors(self, exponents: Sequence[int]) -> 'TensorElement':
        """z-单项式作用：展平后第 p 个因子的阶数移动 exponents[p]"""
        flat = self.flatten().factors
        if len(exponents) != len(flat):
            raise ValueError(f"指数个数 {len(exponents)} 与因子个数 {len(flat)} 不一致")
        return TensorElement(tuple(b.z_shift(k) for b, k in zip(flat, exponents)))

    def encode(self) -> str:
        parts = []
        for b in self.factors:
            text = b.encode()
            parts.append(f"({text})" if isinstance(b, TensorElement) else text)
        return TENSOR_SYMBOL.join(parts)


def tensor_f(i: int, element: TensorElement) -> Optional[TensorElement]:
    return element.f(i)


def tensor_e(i: int, element: TensorElement) -> Optional[TensorElement]:
    return element.e(i)


class CrystalGraph:
    """带颜色的有向晶体图：x →_i y 表示 f̃_i(x) = y，边的 key 为颜色"""

    def __init__(self, seed: ICrystalElement, window: GradeWindow, colors: Sequence[int]):
        self.seed = seed
        self.window = window
        self.colors = list(colors)
        self.graph = nx.MultiDiGraph()
        self.truncated: Set[str] = set()
        self.cap_reached = False

    @property
    def rank(self) -> int:
        return self.seed.rank

    def __len__(self) -> int:
        return self.graph.number_of_nodes()

    def __contains__(self, node_id: str) -> bool:
        return self.graph.has_node(node_id)

    def add_element(self, element: ICrystalElement) -> str:
        node_id = element.encode()
        if not self.graph.has_node(node_id):
            self.graph.add_node(node_id, element=element)
        return node_id

    def add_edge(self, src: str, dst: str, color: int) -> None:
        self.graph.add_edge(src, dst, key=color)

    def mark_truncated(self, node_id: str) -> None:
        self.truncated.add(node_id)

    def element(self, node_id: str) -> ICrystalElement:
        return self.graph.nodes[node_id]['element']

    def elements(self) -> List[ICrystalElement]:
        """按探索顺序排列的全部元素"""
        return [data['element'] for _, data in self.graph.nodes(data=True)]

    def expanded_elements(self) -> List[ICrystalElement]:
        """所有邻居都在图中的元素"""
        return [self.element(n) for n in self.graph.nodes if n not in self.truncated]

    def is_truncated(self, node_id: str) -> bool:
        return node_id in self.truncated

    def edges(self) -> List[Tuple[str, str, int]]:
        """(src, dst, color)，按源节点的探索顺序和颜色排序"""
        order = {n: k for k, n in enumerate(self.graph.nodes)}
        return sorted(self.graph.edges(keys=True), key=lambda e: (order[e[0]], e[2], order[e[1]]))

    def edge_set(self, relabel: Optional[Callable[[ICrystalElement], str]] = None) -> Set[Tuple[str, str, int]]:
        """边集合；relabel 把元素映射为新的标签，用于比较两个图"""
        if relabel is None:
            return set(self.graph.edges(keys=True))
        return {
            (relabel(self.element(src)), relabel(self.element(dst)), color)
            for src, dst, color in self.graph.edges(keys=True)
        }

    def component_of(self, node_id: str) -> Set[str]:
        """窗口内与 node_id 连通的节点（忽略方向）"""
        return set(nx.node_connected_component(self.graph.to_undirected(as_view=True), node_id))

    def to_dict(self) -> Dict[str, Any]:
        nodes = []
        for node_id in self.graph.nodes:
            element = self.element(node_id)
            nodes.append({
                'id': node_id,
                'label': node_id,
                'weight': element.weight().to_dict(),
                'grades': list(element.grades),
            })
        return {
            'nodes': nodes,
            'edges': [{'src': s, 'dst': d, 'color': c} for s, d, c in self.edges()],
            'truncated': [n for n in self.graph.nodes if n in self.truncated],
        }

    def to_json(self) -> str:
        """转换为JSON字符串"""
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)

    def to_dot(self) -> str:
        """DOT 格式：节点标注元素与权，边标注颜色"""
        lines = ["digraph crystal {"]
        for node_id in self.graph.nodes:
            weight = self.element(node_id).weight()
            style = ', style=dashed' if node_id in self.truncated else ''
            lines.append(f'  "{node_id}" [label="{node_id}\\n{weight}"{style}];')
        for src, dst, color in self.edges():
            lines.append(f'  "{src}" -> "{dst}" [label="{color}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def explore(seed: ICrystalElement, window: GradeWindow,
            colors: Optional[Iterable[int]] = None) -> CrystalGraph:
    """
    从 seed 出发，在阶数窗口内做 ẽ/f̃ 的广度优先闭包

    总阶数或各因子阶数之差超出窗口、或超出节点上限的邻居不加入图，
    其来源节点标记为截断。
    """
    colors = list(colors) if colors is not None else list(range(seed.rank + 1))
    graph = CrystalGraph(seed, window, colors)
    seed_id = graph.add_element(seed)

    if not window.admits(seed.grades):
        graph.mark_truncated(seed_id)
        logger.warning(f"种子 {seed_id} 的阶数 {list(seed.grades)} 不在窗口内，未展开")
        return graph

    queue = deque([seed])
    while queue:
        x = queue.popleft()
        x_id = x.encode()
        complete = True
        for i in colors:
            for lowering in (True, False):
                y = x.f(i) if lowering else x.e(i)
                if y is None:
                    continue
                y_id = y.encode()
                if y_id not in graph:
                    if not window.admits(y.grades):
                        complete = False
                        continue
                    if len(graph) >= window.node_cap:
                        graph.cap_reached = True
                        complete = False
                        continue
                    graph.add_element(y)
                    queue.append(y)
                if lowering:
                    graph.add_edge(x_id, y_id, i)
                else:
                    graph.add_edge(y_id, x_id, i)
        if not complete:
            graph.mark_truncated(x_id)

    if graph.cap_reached:
        logger.warning(f"探索达到节点上限 {window.node_cap}，结果被截断")
    logger.debug(
        f"探索完成: 种子 {seed_id}，节点 {len(graph)}，边 {graph.graph.number_of_edges()}，"
        f"截断 {len(graph.truncated)}"
    )
    return graph


def _string_length(element: ICrystalElement, i: int, raising: bool, limit: int = 10000) -> int:
    length = 0
    current = element.e(i) if raising else element.f(i)
    while current is not None and length < limit:
        length += 1
        current = current.e(i) if raising else current.f(i)
    return length


def check_axioms(graph: CrystalGraph) -> AxiomReport:
    """在所有未截断节点上检查晶体公理，返回第一个反例"""
    datum = build_affine_a(graph.rank)
    checked = 0

    def fail(node_id: str, color: int, clause: str, detail: str) -> AxiomReport:
        violation = AxiomViolation(node_id, color, clause, detail)
        logger.debug(f"晶体公理不成立: {violation}")
        return AxiomReport(False, checked, len(graph.truncated), violation)

    for node_id in graph.graph.nodes:
        if node_id in graph.truncated:
            continue
        x = graph.element(node_id)
        wt = x.weight()
        for i in graph.colors:
            alpha = datum.alpha(i)

            outgoing = [d for _, d, c in graph.graph.out_edges(node_id, keys=True) if c == i]
            incoming = [s for s, _, c in graph.graph.in_edges(node_id, keys=True) if c == i]
            if len(outgoing) > 1 or len(incoming) > 1:
                return fail(node_id, i, "edge", f"颜色 {i} 的出边 {len(outgoing)} 条、入边 {len(incoming)} 条")

            y = x.f(i)
            expected_out = [] if y is None else [y.encode()]
            if outgoing != expected_out:
                return fail(node_id, i, "edge", f"图中的出边 {outgoing} 与 f̃_{i} 的结果 {expected_out} 不一致")
            if y is not None:
                if y.e(i) != x:
                    return fail(node_id, i, "inverse", f"ẽ_{i}(f̃_{i}(b)) = {y.e(i)} ≠ b")
                if y.weight() != wt - alpha:
                    return fail(node_id, i, "weight", f"wt(f̃_{i} b) = {y.weight()}，应为 {wt - alpha}")

            z = x.e(i)
            expected_in = [] if z is None else [z.encode()]
            if incoming != expected_in:
                return fail(node_id, i, "edge", f"图中的入边 {incoming} 与 ẽ_{i} 的结果 {expected_in} 不一致")
            if z is not None:
                if z.f(i) != x:
                    return fail(node_id, i, "inverse", f"f̃_{i}(ẽ_{i}(b)) = {z.f(i)} ≠ b")
                if z.weight() != wt + alpha:
                    return fail(node_id, i, "weight", f"wt(ẽ_{i} b) = {z.weight()}，应为 {wt + alpha}")

            eps, phi = x.epsilon(i), x.phi(i)
            if phi - eps != wt.pairing(i):
                return fail(node_id, i, "regularity", f"φ − ε = {phi - eps}，<h_{i}, wt> = {wt.pairing(i)}")
            if eps != _string_length(x, i, raising=True) or phi != _string_length(x, i, raising=False):
                return fail(node_id, i, "string_length", f"ε = {eps}，φ = {phi} 与弦长不一致")
        checked += 1

    return AxiomReport(True, checked, len(graph.truncated))
