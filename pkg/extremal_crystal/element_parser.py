"""
元素编码解析器

解析 "[1,3|m=-2]" 形式的仿射化列元素，以及用 ⊗（或 "x"、"*"）连接的张量积元素。
"""

import re
from typing import List, Union

from .crystal import TensorElement
from .kr_crystal import AffineElement
from .models import ElementParseError

ELEMENT_PATTERN = re.compile(r'\[\s*([\d,\s]*)\|\s*m\s*=\s*(-?\d+)\s*\]')
SEPARATOR_PATTERN = re.compile(r'^[\s⊗x*]*$')


class ElementParser:
    """晶体元素编码解析器"""

    def __init__(self, rank: int):
        """
        初始化解析器

        Args:
            rank: Cartan 数据的秩 n
        """
        if rank < 1:
            raise ElementParseError(f"秩必须至少为 1，得到: {rank}")
        self.rank = rank

    def parse_factors(self, text: str) -> List[AffineElement]:
        """解析为因子列表"""
        if not text or not text.strip():
            raise ElementParseError("元素编码不能为空")

        factors = []
        position = 0
        for match in ELEMENT_PATTERN.finditer(text):
            gap = text[position:match.start()]
            # 第一个因子之前只允许空白，之后必须有分隔符
            invalid_gap = (not gap.strip() or not SEPARATOR_PATTERN.match(gap)) if factors else bool(gap.strip())
            if invalid_gap:
                raise ElementParseError(f"无法解析元素编码: {text!r}（位置 {position}）")
            entries = [e.strip() for e in match.group(1).split(',') if e.strip()]
            try:
                factors.append(AffineElement(self.rank, tuple(int(e) for e in entries), int(match.group(2))))
            except ValueError as e:
                raise ElementParseError(f"无效的列 {match.group(0)}: {e}")
            position = match.end()

        if not factors or text[position:].strip():
            raise ElementParseError(f"无法解析元素编码: {text!r}")
        return factors

    def parse(self, text: str) -> Union[AffineElement, TensorElement]:
        """单个因子返回 AffineElement，多个因子返回 TensorElement"""
        factors = self.parse_factors(text)
        if len(factors) == 1 and '⊗' not in text:
            return factors[0]
        return TensorElement(tuple(factors))

    def parse_tensor(self, text: str) -> TensorElement:
        """总是返回张量积元素（单因子时为一元张量）"""
        return TensorElement(tuple(self.parse_factors(text)))
