"""
本地化系统测试

测试多语言支持和文本本地化功能。
"""

import os
import tempfile

import pytest

from extremal_crystal.localization import LocalizationManager
from extremal_crystal.models import ConfigurationError


class TestLocalizationManager:
    """本地化管理器测试"""

    def test_init_with_default_locales_dir(self):
        """测试使用默认本地化目录初始化"""
        manager = LocalizationManager()
        assert manager.language == 'en'
        assert manager.languages == ['en', 'zh']

    def test_init_with_empty_locales_dir(self):
        """测试空目录"""
        with tempfile.TemporaryDirectory() as temp_dir:
            manager = LocalizationManager(temp_dir)
            assert manager.languages == []
            assert manager.get_text('metadata.name') == 'metadata.name'

    def test_set_language(self):
        """测试设置语言"""
        manager = LocalizationManager()
        manager.set_language('zh')
        assert manager.language == 'zh'
        assert manager.format_message('verify.pass') == "通过"

    def test_set_language_invalid(self):
        """测试设置无效语言"""
        manager = LocalizationManager()
        with pytest.raises(ConfigurationError, match="不支持的语言"):
            manager.set_language('fr')

    def test_get_text_nonexistent_key(self):
        """测试获取不存在的文本键"""
        assert LocalizationManager().get_text('nonexistent.key') == 'nonexistent.key'

    def test_formatting(self):
        """测试带格式化参数的文本"""
        manager = LocalizationManager()
        text = manager.format_message('lab.index_title', size=18, reduced=6)
        assert text == "Index set: 18 pairs (6 reduced)"
        assert "18" in manager.format_message('lab.index_title', language='zh', size=18, reduced=6)

    def test_missing_argument_keeps_template(self):
        """测试缺少格式化参数时返回原文"""
        text = LocalizationManager().format_message('truncated', unrelated=1)
        assert "{count}" in text

    def test_format_error(self):
        """测试错误消息"""
        text = LocalizationManager().format_error('parse', language='zh', error="x")
        assert text == "无法解析元素: x"

    def test_command_description(self):
        """测试子命令说明"""
        manager = LocalizationManager()
        assert manager.command_description('verify') == "Run the acceptance suite"
        assert manager.command_description('verify', language='zh') == "运行验收检查"

    def test_fallback_to_other_language(self):
        """测试当前语言缺少键时回退到其他语言"""
        with tempfile.TemporaryDirectory() as temp_dir:
            with open(os.path.join(temp_dir, 'en.yaml'), 'w', encoding='utf-8') as f:
                f.write("greeting: \"hello\"\n")
            with open(os.path.join(temp_dir, 'zh.yaml'), 'w', encoding='utf-8') as f:
                f.write("farewell: \"再见\"\n")
            manager = LocalizationManager(temp_dir)
            manager.set_language('zh')
            assert manager.get_text('greeting') == "hello"
            assert manager.get_text('farewell') == "再见"

    def test_broken_locale_file(self):
        """测试无法解析的本地化文件"""
        with tempfile.TemporaryDirectory() as temp_dir:
            with open(os.path.join(temp_dir, 'en.yaml'), 'w', encoding='utf-8') as f:
                f.write("key: [unclosed\n")
            with pytest.raises(ConfigurationError, match="加载本地化文件"):
                LocalizationManager(temp_dir)

    def test_locales_have_same_keys(self):
        """测试两种语言的键集合相同"""
        manager = LocalizationManager()
        assert manager.keys('en') == manager.keys('zh')
        assert 'messages.extremal.extremal' in manager.keys('en')

    def test_yes_no_keys_stay_strings(self):
        """测试 yes/no/on 这样的键和值按字符串读取"""
        with tempfile.TemporaryDirectory() as temp_dir:
            with open(os.path.join(temp_dir, 'en.yaml'), 'w', encoding='utf-8') as f:
                f.write("answer:\n  yes: \"{element} yes\"\n  no: \"{element} no\"\n  on: off\n")
            manager = LocalizationManager(temp_dir)
            assert manager.get_text('answer.yes', element="b") == "b yes"
            assert manager.get_text('answer.no', element="b") == "b no"
            assert manager.get_text('answer.on') == "off"

    def test_extremal_messages(self):
        """测试极值判定的两条消息都能找到"""
        manager = LocalizationManager()
        text = manager.format_message('extremal.extremal', element="[1|m=0]", size=2)
        assert text == "[1|m=0] is extremal (closure size 2)"
        text = manager.format_message('extremal.not_extremal', language='zh', element="b",
                                      witness="w", color=1, clause="e_nonzero")
        assert text.startswith("b 不是极值元素")

    def test_non_mapping_catalog(self):
        """测试顶层不是映射的本地化文件"""
        with tempfile.TemporaryDirectory() as temp_dir:
            with open(os.path.join(temp_dir, 'en.yaml'), 'w', encoding='utf-8') as f:
                f.write("- just\n- a list\n")
            with pytest.raises(ConfigurationError, match="顶层必须是映射"):
                LocalizationManager(temp_dir)
