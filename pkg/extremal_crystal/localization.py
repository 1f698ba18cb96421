"""
本地化管理模块

命令行报告的文本目录。每个 locales/<语言>.yaml 在加载时展平为点分隔键，
查找时先查当前语言，再按字母顺序查其他语言，都没有时返回键本身。
"""

import os
from typing import Dict, List, Optional

import yaml

from .models import ConfigurationError

DEFAULT_LANGUAGE = 'en'
LOCALES_DIR = os.path.join(os.path.dirname(__file__), 'locales')

_BOOL_TAG = 'tag:yaml.org,2002:bool'


class _CatalogLoader(yaml.SafeLoader):
    """文本目录的加载器：yes/no/on/off 一律按字符串读取"""


_CatalogLoader.yaml_implicit_resolvers = {
    first: [(tag, regexp) for tag, regexp in resolvers if tag != _BOOL_TAG]
    for first, resolvers in yaml.SafeLoader.yaml_implicit_resolvers.items()
}


def _flatten(tree: Dict, prefix: str = '') -> Dict[str, str]:
    catalog: Dict[str, str] = {}
    for key, value in tree.items():
        path = f"{prefix}{key}"
        if isinstance(value, dict):
            catalog.update(_flatten(value, path + '.'))
        elif value is not None:
            catalog[path] = str(value)
    return catalog


def load_catalog(path: str) -> Dict[str, str]:
    """读取一个文本目录文件，返回 点分隔键 -> 模板"""
    name = os.path.basename(path)
    try:
        with open(path, 'r', encoding='utf-8') as f:
            tree = yaml.load(f, Loader=_CatalogLoader) or {}
    except (OSError, yaml.YAMLError) as e:
        raise ConfigurationError(f"加载本地化文件 {name} 失败: {e}")
    if not isinstance(tree, dict):
        raise ConfigurationError(f"加载本地化文件 {name} 失败: 顶层必须是映射")
    return _flatten(tree)


class LocalizationManager:
    """本地化管理器"""

    def __init__(self, locales_dir: Optional[str] = None):
        self.locales_dir = locales_dir or LOCALES_DIR
        self._catalogs: Dict[str, Dict[str, str]] = {}
        self._language = DEFAULT_LANGUAGE
        if os.path.isdir(self.locales_dir):
            for filename in sorted(os.listdir(self.locales_dir)):
                stem, ext = os.path.splitext(filename)
                if ext in ('.yaml', '.yml'):
                    self._catalogs[stem] = load_catalog(os.path.join(self.locales_dir, filename))

    @property
    def language(self) -> str:
        return self._language

    @property
    def languages(self) -> List[str]:
        """已加载的语言，按字母顺序"""
        return list(self._catalogs)

    def keys(self, language: str) -> List[str]:
        return sorted(self._catalogs.get(language, {}))

    def set_language(self, language: str) -> None:
        if language not in self._catalogs:
            raise ConfigurationError(f"不支持的语言: {language}。可用语言: {', '.join(self._catalogs)}")
        self._language = language

    def get_text(self, key: str, language: Optional[str] = None, **kwargs) -> str:
        """
        按点分隔键取文本并用 kwargs 填充

        缺少参数或模板损坏时返回未填充的模板。
        """
        preferred = language or self._language
        for candidate in [preferred] + [lang for lang in self._catalogs if lang != preferred]:
            template = self._catalogs.get(candidate, {}).get(key)
            if template is None:
                continue
            if not kwargs:
                return template
            try:
                return template.format(**kwargs)
            except (KeyError, IndexError, ValueError):
                return template
        return key

    def format_message(self, message_key: str, language: Optional[str] = None, **kwargs) -> str:
        return self.get_text(f'messages.{message_key}', language, **kwargs)

    def format_error(self, error_key: str, language: Optional[str] = None, **kwargs) -> str:
        return self.get_text(f'messages.errors.{error_key}', language, **kwargs)

    def command_description(self, command: str, language: Optional[str] = None) -> str:
        """子命令的说明"""
        return self.get_text(f'commands.{command}', language)


# 全局本地化管理器实例
localization_manager = LocalizationManager()
