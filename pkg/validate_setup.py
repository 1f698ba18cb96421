#!/usr/bin/env python3
"""
安装自检

在运行测试之前确认依赖可用、配置与本地化目录能够加载，并做几项秒级的晶体计算。
用法: python validate_setup.py
"""

import importlib
import sys
from typing import Callable, List, Tuple

REQUIRED_MODULES = ("yaml", "numpy", "sympy", "networkx", "pytest", "hypothesis")


def _dependencies() -> str:
    missing = []
    for name in REQUIRED_MODULES:
        try:
            importlib.import_module(name)
        except ImportError:
            missing.append(name)
    if missing:
        raise RuntimeError(f"缺少依赖: {', '.join(missing)}（pip install -r requirements.txt）")
    return ", ".join(REQUIRED_MODULES)


def _configuration() -> str:
    from extremal_crystal.config import ConfigManager

    config = ConfigManager().load_config()
    window = config.window
    return f"rank={config.rank}，窗口 [{window.min_grade}, {window.max_grade}]，分散上限 {window.max_spread}"


def _catalogs() -> str:
    from extremal_crystal.localization import LocalizationManager

    manager = LocalizationManager()
    english, chinese = manager.keys('en'), manager.keys('zh')
    if english != chinese:
        raise RuntimeError(f"en 与 zh 的键不一致: {sorted(set(english) ^ set(chinese))[:5]}")
    return f"{len(english)} 个键，语言 {manager.languages}"


def _column_crystal() -> str:
    from extremal_crystal.crystal import check_axioms, explore
    from extremal_crystal.kr_crystal import u_varpi
    from extremal_crystal.models import GradeWindow

    graph = explore(u_varpi(2, 1), GradeWindow(0, 0), colors=[1, 2])
    if len(graph) != 3 or not check_axioms(graph).passed:
        raise RuntimeError(f"B^{{1,1}} (A_2) 有 {len(graph)} 个元素")
    return "B^{1,1} (A_2) 有 3 个元素且满足晶体公理"


def _translation() -> str:
    from extremal_crystal.kr_crystal import u_varpi
    from extremal_crystal.weyl import find_translation_word, w_action

    word = find_translation_word(1, 1)
    image = w_action(word, u_varpi(1, 1))
    if image != u_varpi(1, 1).z_shift(-1):
        raise RuntimeError(f"S_{{t(α_1)}} u = {image}")
    return f"t(α_1) = {word}，S_t u_ϖ1 = z^-1 u_ϖ1"


CHECKS: List[Tuple[str, Callable[[], str]]] = [
    ("依赖", _dependencies),
    ("配置", _configuration),
    ("本地化", _catalogs),
    ("列晶体", _column_crystal),
    ("平移引理", _translation),
]


def main() -> int:
    failures = 0
    for label, run in CHECKS:
        try:
            print(f"✅ {label}: {run()}")
        except Exception as e:
            failures += 1
            print(f"❌ {label}: {e}")

    if failures:
        print(f"\n⚠️ {failures}/{len(CHECKS)} 项自检失败")
        return 1
    print("\n🎉 自检通过。下一步: pytest，或 python -m extremal_crystal verify")
    return 0


if __name__ == "__main__":
    sys.exit(main())
