"""
Weyl 群作用与极值元素

正则晶体上的 Weyl 群作用 S_{s_i}、约化字作用、平移元 t(α_i) 的搜索，
以及基于经典投影闭包的精确极值判定。
"""

import itertools
import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Tuple, List, Dict, Set

import numpy as np

from .cartan import CartanDatum, Weight, build_affine_a
from .interfaces import ICrystalElement
from .models import (
    RegularityError, WeylSearchError, ExtremalityReport, ExtremalityWitness, ExtremalClause
)

logger = logging.getLogger(__name__)

DEFAULT_LENGTH_CAP = 12


@dataclass(frozen=True)
class WeylWord:
    """Weyl 群元素的一个字 s_{w_1} ... s_{w_k}，作用时从右向左"""
    rank: int
    word: Tuple[int, ...] = ()

    def __post_init__(self):
        """验证字母"""
        object.__setattr__(self, 'word', tuple(int(j) for j in self.word))
        if any(j < 0 or j > self.rank for j in self.word):
            raise ValueError(f"字母必须在 0..{self.rank} 之间: {list(self.word)}")

    @property
    def datum(self) -> CartanDatum:
        return build_affine_a(self.rank)

    @cached_property
    def matrix(self) -> np.ndarray:
        """(Λ, δ) 坐标上的整数作用矩阵 S_{w_1} ⋯ S_{w_k}"""
        result = np.eye(self.rank + 2, dtype=np.int64)
        for j in self.word:
            result = result @ self.datum.reflection_matrix(j)
        return result

    def key(self) -> bytes:
        """按作用矩阵规范化的键"""
        return self.matrix.tobytes()

    def apply(self, weight: Weight) -> Weight:
        return Weight.from_vector(self.matrix @ weight.to_vector())

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        if not self.word:
            return "e"
        return " ".join(f"s{j}" for j in self.word)


def s_action(i: int, b: ICrystalElement) -> ICrystalElement:
    """
    S_{s_i} b：k = <h_i, wt(b)> >= 0 时为 f̃_i^k b，否则为 ẽ_i^{-k} b

    Raises:
        RegularityError: 弦在中途变为 0
    """
    k = b.weight().pairing(i)
    current = b
    for step in range(abs(k)):
        current = current.f(i) if k > 0 else current.e(i)
        if current is None:
            raise RegularityError(
                f"S_{i} 作用于 {b.encode()} 时第 {step + 1}/{abs(k)} 步得到 0"
            )
    return current


def w_action(word: WeylWord, b: ICrystalElement) -> ICrystalElement:
    """S_w b，字从右向左作用"""
    for i in reversed(word.word):
        b = s_action(i, b)
    return b


def _translation_targets(datum: CartanDatum, i: int) -> List[Tuple[np.ndarray, np.ndarray]]:
    """t(α_i) 的特征：ϖ_j ↦ ϖ_j − [i = j] δ，δ 不动，Λ_0 ↦ Λ_0 + α_i − δ"""
    delta = datum.delta()
    pairs = []
    for j in datum.classical_index_set:
        image = datum.varpi(j) - delta if j == i else datum.varpi(j)
        pairs.append((datum.varpi(j).to_vector(), image.to_vector()))
    pairs.append((delta.to_vector(), delta.to_vector()))
    lambda0 = datum.fundamental(0)
    pairs.append((lambda0.to_vector(), (lambda0 + datum.alpha(i) - delta).to_vector()))
    return pairs


@lru_cache(maxsize=None)
def find_translation_word(rank: int, i: int, length_cap: int = DEFAULT_LENGTH_CAP) -> WeylWord:
    """
    按长度做广度优先搜索，找到作用矩阵等于 t(α_i) 的最短字

    Raises:
        WeylSearchError: 长度上限内不存在
    """
    datum = build_affine_a(rank)
    if not (1 <= i <= rank):
        raise ValueError(f"平移下标必须在 1..{rank} 之间，得到: {i}")
    targets = _translation_targets(datum, i)
    reflections = [datum.reflection_matrix(j) for j in datum.index_set]

    def matches(matrix: np.ndarray) -> bool:
        return all(np.array_equal(matrix @ source, image) for source, image in targets)

    identity = np.eye(rank + 2, dtype=np.int64)
    frontier: List[Tuple[np.ndarray, Tuple[int, ...]]] = [(identity, ())]
    seen: Set[bytes] = {identity.tobytes()}
    for length in range(1, length_cap + 1):
        next_frontier = []
        for matrix, word in frontier:
            for j, reflection in enumerate(reflections):
                product = matrix @ reflection
                key = product.tobytes()
                if key in seen:
                    continue
                seen.add(key)
                if matches(product):
                    found = WeylWord(rank, word + (j,))
                    logger.debug(f"t(α_{i}) 在 A_{rank}^(1) 中的字: {found}（长度 {length}，访问 {len(seen)} 个元素）")
                    return found
                next_frontier.append((product, word + (j,)))
        frontier = next_frontier

    raise WeylSearchError(f"在长度 {length_cap} 以内找不到 t(α_{i})，请提高长度上限")


def reduced_words(word: WeylWord) -> List[WeylWord]:
    """与 word 等长且作用矩阵相同的所有字（word 约化时即全部约化字）"""
    target = word.key()
    results = []
    letters = range(word.rank + 1)
    for candidate in itertools.product(letters, repeat=len(word)):
        if any(candidate[k] == candidate[k + 1] for k in range(len(candidate) - 1)):
            continue
        w = WeylWord(word.rank, candidate)
        if w.key() == target:
            results.append(w)
    return results


def weyl_orbit(b: ICrystalElement, max_len: int) -> List[Tuple[WeylWord, ICrystalElement]]:
    """{S_w b : ℓ(w) <= max_len}，每个元素附带一个最短的字"""
    if max_len < 0:
        raise ValueError(f"长度上限不能为负数: {max_len}")
    orbit: Dict[str, Tuple[WeylWord, ICrystalElement]] = {b.encode(): (WeylWord(b.rank), b)}
    frontier = [(WeylWord(b.rank), b)]
    for _ in range(max_len):
        next_frontier = []
        for word, element in frontier:
            for j in range(b.rank + 1):
                image = s_action(j, element)
                key = image.encode()
                if key not in orbit:
                    entry = (WeylWord(b.rank, (j,) + word.word), image)
                    orbit[key] = entry
                    next_frontier.append(entry)
        frontier = next_frontier
    return list(orbit.values())


def classical_orbit(weight: Weight) -> Set[Tuple[int, ...]]:
    """W λ 模 δ（零级权时为有限集）"""
    datum = build_affine_a(weight.rank)
    if datum.level(weight) != 0:
        raise ValueError(f"只支持零级权，得到级 {datum.level(weight)}")
    start = weight.classical()
    orbit = {start}
    queue = deque([start])
    while queue:
        coords = queue.popleft()
        for i in datum.index_set:
            alpha = datum.alpha(i).lambda_coords
            image = tuple(c - coords[i] * a for c, a in zip(coords, alpha))
            if image not in orbit:
                orbit.add(image)
                queue.append(image)
    return orbit


def is_extremal(b: ICrystalElement) -> ExtremalityReport:
    """
    精确极值判定

    阶数移动与所有算子交换且 δ 与每个 h_i 配对为 0，因此只需在经典投影上求闭包：
    对每个 x 和颜色 i，k = <h_i, wt(x)>；k >= 0 时要求 ε_i(x) = 0 并加入 f̃_i^k x，
    k <= 0 时要求 φ_i(x) = 0 并加入 ẽ_i^{-k} x。
    """
    start = b.classical_projection()
    visited: Dict[str, ICrystalElement] = {start.encode(): start}
    queue = deque([start])

    def reject(x: ICrystalElement, i: int, clause: ExtremalClause, k: int) -> ExtremalityReport:
        witness = ExtremalityWitness(x.encode(), i, clause, k)
        logger.debug(f"{b.encode()} 不是极值元素: {witness}")
        return ExtremalityReport(False, (), witness)

    while queue:
        x = queue.popleft()
        wt = x.weight()
        for i in range(x.rank + 1):
            k = wt.pairing(i)
            if k >= 0 and x.epsilon(i) > 0:
                return reject(x, i, ExtremalClause.RAISING_NONZERO, k)
            if k <= 0 and x.phi(i) > 0:
                return reject(x, i, ExtremalClause.LOWERING_NONZERO, k)
            y = x.f_string(i, k) if k >= 0 else x.e_string(i, -k)
            if y is None:
                return reject(x, i, ExtremalClause.STRING_BROKEN, k)
            y = y.classical_projection()
            key = y.encode()
            if key not in visited:
                visited[key] = y
                queue.append(y)

    closure = tuple(visited[key] for key in sorted(visited))
    return ExtremalityReport(True, closure)
