"""
元素编码解析器测试
"""

import pytest

from extremal_crystal.crystal import TensorElement
from extremal_crystal.element_parser import ElementParser
from extremal_crystal.kr_crystal import AffineElement
from extremal_crystal.models import ElementParseError


class TestElementParser:
    """元素编码解析器测试"""

    def test_single_factor(self):
        """测试单个列元素"""
        assert ElementParser(2).parse("[1,3|m=-2]") == AffineElement(2, (1, 3), -2)

    def test_whitespace(self):
        """测试空白"""
        assert ElementParser(2).parse("  [ 1 , 3 | m = 0 ] ") == AffineElement(2, (1, 3), 0)

    def test_tensor(self, tensor):
        """测试张量积"""
        parsed = ElementParser(1).parse("[1|m=0]⊗[2|m=-1]")
        assert parsed == tensor(1, ((1,), 0), ((2,), -1))

    @pytest.mark.parametrize("text", ["[1|m=0] x [2|m=-1]", "[1|m=0]*[2|m=-1]", "[1|m=0] ⊗ [2|m=-1]"])
    def test_alternative_separators(self, text, tensor):
        """测试其他分隔符"""
        assert ElementParser(1).parse(text) == tensor(1, ((1,), 0), ((2,), -1))

    def test_encode_round_trip(self, tensor):
        """测试规范编码可以解析回原元素"""
        element = tensor(3, ((1, 4), -2), ((2,), 0), ((1, 2, 3), -1))
        assert ElementParser(3).parse(element.encode()) == element

    def test_parse_tensor_single_factor(self):
        """测试单因子的张量形式"""
        parsed = ElementParser(1).parse_tensor("[1|m=0]")
        assert isinstance(parsed, TensorElement)
        assert len(parsed.factors) == 1

    @pytest.mark.parametrize("text", [
        "",
        "   ",
        "[1|m=0]][2|m=0]",
        "[1|m=0][2|m=0]",
        "junk [1|m=0]",
        "[1|m=0] trailing",
        "[1,2|m=]",
        "[1|z=0]",
    ])
    def test_malformed(self, text):
        """测试格式错误的编码"""
        with pytest.raises(ElementParseError):
            ElementParser(1).parse(text)

    @pytest.mark.parametrize("text", ["[3|m=0]", "[2,1|m=0]", "[1,2|m=0]", "[|m=0]"])
    def test_invalid_columns(self, text):
        """测试不合法的列"""
        with pytest.raises(ElementParseError, match="无效的列"):
            ElementParser(1).parse(text)

    def test_invalid_rank(self):
        """测试无效的秩"""
        with pytest.raises(ElementParseError):
            ElementParser(0)
