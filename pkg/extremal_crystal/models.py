"""
核心数据模型定义

定义晶体实验室共用的数据结构，包括输出格式、Schur 展开方法、张量规则等枚举，
阶数窗口、检查报告，以及异常层次。
"""

from dataclasses import dataclass, field, asdict
from typing import List, Optional, Dict, Any, Sequence, Tuple
from enum import Enum
import json


class OutputFormat(Enum):
    """输出格式枚举"""
    JSON = "json"
    DOT = "dot"
    TABLE = "table"


class SchurMethod(Enum):
    """Schur 多项式展开方法"""
    SSYT = "ssyt"
    JACOBI_TRUDI = "jt"


class TensorRule(Enum):
    """张量积晶体算子的实现规则"""
    BINARY = "binary"        # 左结合的二元规则
    SIGNATURE = "signature"  # 符号（括号匹配）规则
    FLIPPED = "flipped"      # 故障注入：f 的比较条件写反


class ExtremalClause(Enum):
    """极值条件中被违反的子句"""
    RAISING_NONZERO = "e_nonzero"    # <h_i, wt> >= 0 但 e_i b != 0
    LOWERING_NONZERO = "f_nonzero"   # <h_i, wt> <= 0 但 f_i b != 0
    STRING_BROKEN = "string_broken"  # 弦在中途变为 0（非正则）


@dataclass(frozen=True)
class GradeWindow:
    """
    探索窗口：总阶数（z 指数之和）的范围、节点上限，以及可选的阶数分散上限

    max_spread 限制张量各因子阶数的最大值与最小值之差。颜色不同的因子之间阶数可以
    相互转移而总阶数不变，只限总阶数时窗口内的分支可能无限。
    """
    min_grade: int
    max_grade: int
    node_cap: int = 20000
    max_spread: Optional[int] = None

    def __post_init__(self):
        """验证窗口参数"""
        if self.node_cap < 0:
            raise ValueError(f"节点上限不能为负数，得到: {self.node_cap}")
        if self.max_spread is not None and self.max_spread < 0:
            raise ValueError(f"阶数分散上限不能为负数，得到: {self.max_spread}")

    @classmethod
    def depth(cls, depth: int, node_cap: int = 20000, max_spread: Optional[int] = None) -> 'GradeWindow':
        """深度为 K 的窗口 [-K, 0]"""
        if depth < 0:
            raise ValueError(f"窗口深度不能为负数，得到: {depth}")
        return cls(-depth, 0, node_cap, max_spread)

    @property
    def is_empty(self) -> bool:
        return self.min_grade > self.max_grade

    def contains(self, grade: int) -> bool:
        """判断总阶数是否落在窗口内"""
        return self.min_grade <= grade <= self.max_grade

    def admits(self, grades: Sequence[int]) -> bool:
        """各因子阶数为 grades 的元素是否在窗口内"""
        if not self.contains(sum(grades)):
            return False
        return self.max_spread is None or max(grades) - min(grades) <= self.max_spread

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class AxiomViolation:
    """晶体公理的一个反例"""
    node: str
    color: int
    clause: str
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class AxiomReport:
    """check_axioms 的结果"""
    passed: bool
    checked_nodes: int
    skipped_nodes: int = 0
    violation: Optional[AxiomViolation] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'passed': self.passed,
            'checked_nodes': self.checked_nodes,
            'skipped_nodes': self.skipped_nodes,
            'violation': self.violation.to_dict() if self.violation else None,
        }


@dataclass(frozen=True)
class ExtremalityWitness:
    """非极值判定的证据：经典投影元素、颜色和违反的子句"""
    element: str
    color: int
    clause: ExtremalClause
    pairing: int


@dataclass
class ExtremalityReport:
    """is_extremal 的结果"""
    extremal: bool
    closure: Tuple[Any, ...] = ()
    witness: Optional[ExtremalityWitness] = None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            'extremal': self.extremal,
            'closure': [str(x) for x in self.closure],
        }
        if self.witness is not None:
            data['witness'] = {
                'element': self.witness.element,
                'color': self.witness.color,
                'clause': self.witness.clause.value,
                'pairing': self.witness.pairing,
            }
        return data

    def to_json(self) -> str:
        """转换为JSON字符串"""
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)


@dataclass
class CheckResult:
    """验收检查的结果"""
    name: str
    group: str
    passed: bool
    detail: str = ""
    counterexample: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class ConnectivityReport:
    """连通性检查结果：每个完全展开的元素是否在窗口内连到目标极值元素"""
    connected: int
    undetermined: int
    targets: List[Any] = field(default_factory=list)
    undetermined_nodes: List[str] = field(default_factory=list)
    targets_are_z_shifts: bool = True

    def to_dict(self) -> Dict[str, Any]:
        return {
            'connected': self.connected,
            'undetermined': self.undetermined,
            'targets': [str(t) for t in self.targets],
            'undetermined_nodes': list(self.undetermined_nodes),
            'targets_are_z_shifts': self.targets_are_z_shifts,
        }


class CrystalLabError(Exception):
    """晶体实验室异常基类"""
    pass


class ConfigurationError(CrystalLabError):
    """配置异常"""
    pass


class CartanDatumMismatchError(CrystalLabError):
    """张量因子或运算对象的 Cartan 数据不一致"""
    pass


class RegularityError(CrystalLabError):
    """晶体弦提前终止（违反正则性）"""
    pass


class WeylSearchError(CrystalLabError):
    """在长度上限内找不到所需的 Weyl 群元素"""
    pass


class ElementParseError(CrystalLabError):
    """元素编码解析异常"""
    pass


class ExplorationCapError(CrystalLabError):
    """探索达到节点上限，得到的只是分支的一部分"""
    pass
