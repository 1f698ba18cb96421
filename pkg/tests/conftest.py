"""
pytest 配置和共享 fixtures
"""

import os
import tempfile

import pytest

from extremal_crystal.crystal import TensorElement
from extremal_crystal.kr_crystal import AffineElement, u_varpi
from extremal_crystal.lab import LambdaSpec
from extremal_crystal.localization import localization_manager
from extremal_crystal.models import GradeWindow


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """清除会影响配置的环境变量，并在测试后恢复默认语言"""
    for key in ('EXTREMAL_LOG_LEVEL', 'EXTREMAL_LANGUAGE', 'EXTREMAL_NODE_CAP'):
        monkeypatch.delenv(key, raising=False)
    yield
    localization_manager.set_language('en')


@pytest.fixture
def temp_config_file():
    """创建临时配置文件"""
    with tempfile.NamedTemporaryFile(mode='w', suffix='.yaml', delete=False, encoding='utf-8') as f:
        f.write("""
rank: 1
lambda_multiplicities: [2]
window_min: -3
window_max: 0
node_cap: 500
output_format: "json"
language: "zh"
        """)
        temp_path = f.name

    yield temp_path

    # 清理
    if os.path.exists(temp_path):
        os.unlink(temp_path)


@pytest.fixture
def a1_single() -> LambdaSpec:
    """A_1^(1)，λ = ϖ_1"""
    return LambdaSpec(1, (1,))


@pytest.fixture
def a1_double() -> LambdaSpec:
    """A_1^(1)，λ = 2ϖ_1"""
    return LambdaSpec(1, (2,))


@pytest.fixture
def a2_mixed() -> LambdaSpec:
    """A_2^(1)，λ = ϖ_1 + ϖ_2"""
    return LambdaSpec(2, (1, 1))


@pytest.fixture
def depth_two() -> GradeWindow:
    """窗口 [-2, 0]，各因子阶数之差不超过 2"""
    return GradeWindow.depth(2, max_spread=2)


@pytest.fixture
def column():
    """构造仿射化列元素的工厂"""
    def _create(rank: int, entries, grade: int = 0) -> AffineElement:
        return AffineElement(rank, tuple(entries), grade)
    return _create


@pytest.fixture
def tensor(column):
    """构造张量积元素的工厂：tensor(rank, ([1], 0), ([2], -1))"""
    def _create(rank: int, *factors) -> TensorElement:
        return TensorElement(tuple(column(rank, entries, grade) for entries, grade in factors))
    return _create


@pytest.fixture
def u_a1() -> AffineElement:
    """A_1^(1) 的 u_{ϖ_1} = [1|m=0]"""
    return u_varpi(1, 1)
