"""
配置管理模块

处理运行参数的加载、验证和管理，以及晶体约定（张量规则、f̃_0 的阶数方向）。
"""

import os
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, field, asdict, fields, replace
from typing import Dict, Any, Optional, List, Iterator

import yaml

from .models import ConfigurationError, OutputFormat, SchurMethod, TensorRule, GradeWindow


PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

SUPPORTED_LANGUAGES = ("en", "zh")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
TENSOR_METHODS = (TensorRule.BINARY.value, TensorRule.SIGNATURE.value)


@dataclass
class RunConfig:
    """一次运行的全部参数"""
    # 代数与权
    rank: int = 2
    lambda_multiplicities: List[int] = field(default_factory=list)

    # 探索窗口
    window_min: int = -2
    window_max: int = 0
    node_cap: int = 20000
    max_spread: int = 2
    max_schur: int = 3

    # 输出与方法
    output_format: str = "table"
    seed: str = ""
    schur_method: str = "ssyt"
    tensor_method: str = "binary"

    # 运行环境
    language: str = "en"
    log_level: str = "WARNING"

    # 验收规模
    verify_max_rank: int = 3
    verify_depth: int = 2
    verify_max_schur: int = 3

    project_name: str = "extremal_crystal"
    project_version: str = "1.0.0"

    def validate(self) -> None:
        """验证配置有效性"""
        if self.rank < 1:
            raise ConfigurationError(f"秩必须至少为 1，得到: {self.rank}")

        for name in ('node_cap', 'max_spread', 'max_schur', 'verify_depth', 'verify_max_schur'):
            if getattr(self, name) < 0:
                raise ConfigurationError(f"{name} 不能为负数，得到: {getattr(self, name)}")

        if self.verify_max_rank < 1:
            raise ConfigurationError(f"verify_max_rank 必须至少为 1，得到: {self.verify_max_rank}")

        if self.window_min > self.window_max:
            raise ConfigurationError(f"窗口下界 {self.window_min} 大于上界 {self.window_max}")

        if self.lambda_multiplicities:
            if len(self.lambda_multiplicities) != self.rank:
                raise ConfigurationError(
                    f"λ 的重数个数 {len(self.lambda_multiplicities)} 与秩 {self.rank} 不一致"
                )
            if any(m < 0 for m in self.lambda_multiplicities):
                raise ConfigurationError(f"λ 的重数不能为负: {self.lambda_multiplicities}")
            if sum(self.lambda_multiplicities) < 1:
                raise ConfigurationError("λ 的重数之和必须至少为 1")

        if self.output_format not in [f.value for f in OutputFormat]:
            raise ConfigurationError(f"无效的输出格式: {self.output_format}")

        if self.schur_method not in [m.value for m in SchurMethod]:
            raise ConfigurationError(f"无效的 Schur 展开方法: {self.schur_method}")

        if self.tensor_method not in TENSOR_METHODS:
            supported = ", ".join(TENSOR_METHODS)
            raise ConfigurationError(f"无效的张量规则: {self.tensor_method}。支持的规则: {supported}")

        if self.language not in SUPPORTED_LANGUAGES:
            raise ConfigurationError(f"不支持的语言: {self.language}")

        if self.log_level.upper() not in LOG_LEVELS:
            raise ConfigurationError(f"无效的日志级别: {self.log_level}")

    @property
    def multiplicities(self) -> List[int]:
        """λ = Σ m_i ϖ_i 的重数；未给出时取 λ = ϖ_1"""
        if self.lambda_multiplicities:
            return list(self.lambda_multiplicities)
        return [1] + [0] * (self.rank - 1)

    @property
    def window(self) -> GradeWindow:
        return GradeWindow(self.window_min, self.window_max, self.node_cap, self.max_spread)


class ConfigManager:
    """配置管理器"""

    ENV_MAPPINGS = {
        'EXTREMAL_LOG_LEVEL': 'log_level',
        'EXTREMAL_LANGUAGE': 'language',
        'EXTREMAL_NODE_CAP': 'node_cap',
    }
    INT_KEYS = ('node_cap',)

    def __init__(self, config_path: Optional[str] = None, metadata_path: Optional[str] = None):
        self.config_path = config_path or os.path.join(PROJECT_ROOT, "config.yaml")
        self.metadata_path = metadata_path or os.path.join(PROJECT_ROOT, "metadata.yaml")
        self._config: Optional[RunConfig] = None
        self._metadata: Optional[Dict[str, Any]] = None

    def load_config(self, overrides: Optional[Dict[str, Any]] = None) -> RunConfig:
        """加载配置：配置文件 < 元数据 < 环境变量 < 显式覆盖"""
        try:
            metadata = self._load_metadata()

            if os.path.exists(self.config_path):
                with open(self.config_path, 'r', encoding='utf-8') as f:
                    config_data = yaml.safe_load(f) or {}
            else:
                config_data = {}

            self._merge_metadata_config(config_data, metadata)
            self._load_from_env(config_data)

            for key, value in (overrides or {}).items():
                if value is not None:
                    config_data[key] = value

            known = {f.name for f in fields(RunConfig)}
            unknown = sorted(set(config_data) - known)
            if unknown:
                raise ConfigurationError(f"未知的配置项: {', '.join(unknown)}")

            self._config = RunConfig(**config_data)
            self._config.validate()

            return self._config

        except ConfigurationError:
            raise
        except Exception as e:
            raise ConfigurationError(f"加载配置失败: {e}")

    def _load_metadata(self) -> Dict[str, Any]:
        """加载元数据文件"""
        if self._metadata is not None:
            return self._metadata

        try:
            if os.path.exists(self.metadata_path):
                with open(self.metadata_path, 'r', encoding='utf-8') as f:
                    self._metadata = yaml.safe_load(f) or {}
            else:
                self._metadata = {}
            return self._metadata
        except Exception as e:
            raise ConfigurationError(f"加载元数据失败: {e}")

    def _merge_metadata_config(self, config_data: Dict[str, Any], metadata: Dict[str, Any]) -> None:
        """从元数据合并项目信息"""
        if 'name' in metadata:
            config_data.setdefault('project_name', metadata['name'])
        if 'version' in metadata:
            config_data.setdefault('project_version', str(metadata['version']))

    def _load_from_env(self, config_data: Dict[str, Any]) -> None:
        """从环境变量加载配置"""
        for env_key, config_key in self.ENV_MAPPINGS.items():
            env_value = os.getenv(env_key)
            if env_value is None:
                continue
            if config_key in self.INT_KEYS:
                try:
                    config_data[config_key] = int(env_value)
                except ValueError:
                    raise ConfigurationError(f"环境变量 {env_key} 必须是整数")
            else:
                config_data[config_key] = env_value

    def get_config(self) -> RunConfig:
        """获取当前配置"""
        if self._config is None:
            return self.load_config()
        return self._config

    def reload_config(self) -> RunConfig:
        """重新加载配置"""
        self._config = None
        self._metadata = None
        return self.load_config()

    def save_config(self, config: RunConfig) -> None:
        """保存配置到文件"""
        try:
            config_dict = asdict(config)
            config_dict.pop('project_name')
            config_dict.pop('project_version')

            with open(self.config_path, 'w', encoding='utf-8') as f:
                yaml.dump(config_dict, f, default_flow_style=False, allow_unicode=True)

            self._config = config

        except Exception as e:
            raise ConfigurationError(f"保存配置失败: {e}")

    def get_metadata(self) -> Dict[str, Any]:
        """获取元数据"""
        return self._load_metadata()


@dataclass(frozen=True)
class CrystalConventions:
    """晶体约定：张量规则与 f̃_0 的阶数移动"""
    tensor_rule: TensorRule = TensorRule.BINARY
    f0_grade_shift: int = -1

    def __post_init__(self):
        """验证约定"""
        object.__setattr__(self, 'tensor_rule', TensorRule(self.tensor_rule))
        if self.f0_grade_shift not in (-1, 1):
            raise ValueError(f"f̃_0 的阶数移动只能是 -1 或 1，得到: {self.f0_grade_shift}")


_conventions: ContextVar[CrystalConventions] = ContextVar(
    'crystal_conventions', default=CrystalConventions()
)


def get_conventions() -> CrystalConventions:
    """当前上下文中生效的晶体约定"""
    return _conventions.get()


@contextmanager
def use_conventions(**changes: Any) -> Iterator[CrystalConventions]:
    """在 with 块内临时替换晶体约定"""
    token = _conventions.set(replace(get_conventions(), **changes))
    try:
        yield _conventions.get()
    finally:
        _conventions.reset(token)


# 全局配置管理器实例
config_manager = ConfigManager()
