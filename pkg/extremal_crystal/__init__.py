"""
零级极值权晶体实验室

A_n^(1) 型的 Kirillov-Reshetikhin 晶体、张量积晶体、Weyl 群作用与极值判定，
以及 B(λ) 的组合指标集 {(c_0, b′)} 的实验验证。
"""

__version__ = "1.0.0"
__author__ = "Extremal Crystal Lab Team"

from .cartan import Weight, CartanDatum, build_affine_a
from .crystal import TensorElement, CrystalGraph, explore, check_axioms
from .kr_crystal import AffineElement, u_varpi
from .weyl import WeylWord, is_extremal, find_translation_word
from .lab import LambdaSpec, LevelZeroLab

__all__ = [
    "Weight", "CartanDatum", "build_affine_a",
    "TensorElement", "CrystalGraph", "explore", "check_axioms",
    "AffineElement", "u_varpi",
    "WeylWord", "is_extremal", "find_translation_word",
    "LambdaSpec", "LevelZeroLab",
]
