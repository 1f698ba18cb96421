"""
分拆与分拆组

分拆 ρ、n 元分拆组 c_0 = (ρ^(1), ..., ρ^(n))，以及满足 ℓ(ρ^(i)) <= λ_i 的集合 c_0(λ) 的枚举。
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Tuple, List, Iterator, Optional, Sequence

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Partition:
    """分拆：弱递减的正整数序列"""
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        """验证分拆"""
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, 'parts', parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"分拆的各部分必须为正整数: {parts}")
        if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
            raise ValueError(f"分拆必须弱递减: {parts}")

    @classmethod
    def from_string(cls, text: str) -> 'Partition':
        """从 "2,1" 形式的字符串解析；空串或 "0" 表示空分拆"""
        text = text.strip().strip('()')
        if text in ("", "0"):
            return cls(())
        try:
            return cls(tuple(int(p) for p in text.split(',') if p.strip()))
        except ValueError as e:
            raise ValueError(f"无法解析分拆: {text!r} ({e})")

    @property
    def size(self) -> int:
        """|ρ|"""
        return sum(self.parts)

    @property
    def length(self) -> int:
        """ℓ(ρ)"""
        return len(self.parts)

    def transpose(self) -> 'Partition':
        """共轭分拆 ρ′"""
        if not self.parts:
            return Partition(())
        return Partition(tuple(
            sum(1 for p in self.parts if p > k) for k in range(self.parts[0])
        ))

    def add_box(self) -> List['Partition']:
        """在所有可加角上添加一个格子得到的分拆"""
        results = []
        padded = self.parts + (0,)
        for row, part in enumerate(padded):
            if row == 0 or padded[row - 1] > part:
                new_parts = list(padded)
                new_parts[row] += 1
                results.append(Partition(tuple(p for p in new_parts if p > 0)))
        return results

    def strip_columns(self, count: int) -> 'Partition':
        """去掉 count 个高度为 ℓ(ρ) 的整列"""
        return Partition(tuple(p - count for p in self.parts if p > count))

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def transpose(rho: Partition) -> Partition:
    """共轭分拆"""
    return rho.transpose()


@dataclass(frozen=True, order=True)
class PartitionTuple:
    """n 元分拆组 c_0 = (ρ^(1), ..., ρ^(n))"""
    components: Tuple[Partition, ...]

    def __post_init__(self):
        """规范化分量"""
        object.__setattr__(self, 'components', tuple(
            c if isinstance(c, Partition) else Partition(tuple(c)) for c in self.components
        ))

    @classmethod
    def empty(cls, rank: int) -> 'PartitionTuple':
        return cls(tuple(Partition(()) for _ in range(rank)))

    @property
    def rank(self) -> int:
        return len(self.components)

    @property
    def size(self) -> int:
        """|c_0| = Σ |ρ^(i)|"""
        return sum(c.size for c in self.components)

    def lengths(self) -> Tuple[int, ...]:
        return tuple(c.length for c in self.components)

    def fits(self, caps: Sequence[int]) -> bool:
        """判断 ℓ(ρ^(i)) <= caps[i] 是否对所有 i 成立"""
        return all(c.length <= cap for c, cap in zip(self.components, caps))

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.components) + ")"


def partitions_of(size: int, max_length: Optional[int] = None,
                  max_part: Optional[int] = None) -> Iterator[Partition]:
    """按反字典序生成 size 的分拆，可限制长度和最大部分"""
    if size < 0:
        raise ValueError(f"分拆的大小不能为负数: {size}")
    largest = size if max_part is None else min(max_part, size)
    if size == 0:
        yield Partition(())
        return
    if max_length is not None and max_length <= 0:
        return
    rest_length = None if max_length is None else max_length - 1
    for first in range(largest, 0, -1):
        for rest in partitions_of(size - first, rest_length, first):
            yield Partition((first,) + rest.parts)


def _compositions(total: int, slots: int) -> Iterator[Tuple[int, ...]]:
    """total 拆成 slots 个非负整数，按字典序降序"""
    if slots == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, slots - 1):
            yield (first,) + rest


def enumerate_c0(caps: Sequence[int], max_size: int) -> List[PartitionTuple]:
    """
    枚举 c_0(λ) 中总大小不超过 max_size 的分拆组

    顺序：先按总大小，再按各分量大小的分布（字典序降序），最后按各分量分拆的反字典序乘积。
    """
    caps = [int(c) for c in caps]
    if any(c < 0 for c in caps):
        raise ValueError(f"长度上限不能为负: {caps}")
    if max_size < 0:
        raise ValueError(f"最大大小不能为负: {max_size}")

    results: List[PartitionTuple] = []
    for total in range(max_size + 1):
        for sizes in _compositions(total, len(caps)):
            choices = [list(partitions_of(s, max_length=cap)) for s, cap in zip(sizes, caps)]
            for combo in itertools.product(*choices):
                results.append(PartitionTuple(tuple(combo)))

    logger.debug(f"枚举 c_0: 上限 {caps}，最大大小 {max_size}，共 {len(results)} 个")
    return results
