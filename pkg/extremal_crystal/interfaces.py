"""
核心接口定义

定义晶体元素的抽象接口。所有具体晶体（仿射化列晶体、张量积）都实现该接口，
图探索、Weyl 作用和极值检查只依赖这里的契约。
"""

from abc import ABC, abstractmethod
from typing import Optional, Tuple, TYPE_CHECKING

if TYPE_CHECKING:
    from .cartan import Weight


class ICrystalElement(ABC):
    """
    正则晶体元素接口

    约定：e(i)、f(i) 在有定义处互逆；wt(f(i)(b)) = wt(b) − α_i；
    phi(i) − epsilon(i) = <h_i, wt(b)>。元素不可变，并具有确定的全序。

    实现类需提供 rank（Cartan 数据的秩 n）和 grade（总阶数，即 z 指数之和），
    可以是数据类字段或属性。
    """

    rank: int
    grade: int

    @abstractmethod
    def weight(self) -> 'Weight':
        """权 wt(b)"""
        pass

    @abstractmethod
    def e(self, i: int) -> Optional['ICrystalElement']:
        """提升算子 ẽ_i，无定义时返回 None"""
        pass

    @abstractmethod
    def f(self, i: int) -> Optional['ICrystalElement']:
        """下降算子 f̃_i，无定义时返回 None"""
        pass

    @abstractmethod
    def epsilon(self, i: int) -> int:
        """ε_i = max{k : ẽ_i^k b ≠ 0}"""
        pass

    @abstractmethod
    def phi(self, i: int) -> int:
        """φ_i = max{k : f̃_i^k b ≠ 0}"""
        pass

    @abstractmethod
    def classical_projection(self) -> 'ICrystalElement':
        """忘记全部阶数后的元素（所有阶数置 0）"""
        pass

    @abstractmethod
    def z_shift(self, k: int) -> 'ICrystalElement':
        """所有阶数整体移动 k"""
        pass

    @abstractmethod
    def encode(self) -> str:
        """规范编码，作为图节点的键"""
        pass

    @property
    def grades(self) -> Tuple[int, ...]:
        """各因子的阶数；单因子元素为 (grade,)"""
        return (self.grade,)

    def f_string(self, i: int, k: int) -> Optional['ICrystalElement']:
        """f̃_i^k b，中途为 0 时返回 None"""
        current: Optional[ICrystalElement] = self
        for _ in range(k):
            if current is None:
                return None
            current = current.f(i)
        return current

    def e_string(self, i: int, k: int) -> Optional['ICrystalElement']:
        """ẽ_i^k b，中途为 0 时返回 None"""
        current: Optional[ICrystalElement] = self
        for _ in range(k):
            if current is None:
                return None
            current = current.e(i)
        return current

    def __str__(self) -> str:
        return self.encode()
