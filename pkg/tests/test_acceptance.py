"""
验收检查测试
"""

import pytest

from extremal_crystal.acceptance import (
    GROUPS, MUTATIONS, SuiteContext, registered_checks, run_acceptance, _run_check
)
from extremal_crystal.config import RunConfig, use_conventions
from extremal_crystal.lab import LambdaSpec
from extremal_crystal.models import ExplorationCapError


def small_config(**changes) -> RunConfig:
    values = dict(verify_max_rank=1, verify_depth=1, verify_max_schur=2, node_cap=2000)
    values.update(changes)
    return RunConfig(**values)


class TestRegistry:
    """检查注册表测试"""

    def test_every_group_has_checks(self):
        """测试每个分组至少有一个检查"""
        for group in GROUPS:
            assert registered_checks(group), f"分组 {group} 没有检查"

    def test_names_are_unique(self):
        """测试检查名称唯一"""
        names = [name for _, name, _ in registered_checks()]
        assert len(names) == len(set(names))

    def test_unknown_group(self):
        """测试未知分组"""
        with pytest.raises(ValueError, match="未知的检查分组"):
            registered_checks("nonexistent")

    def test_mutations(self):
        """测试可注入的变异"""
        assert sorted(MUTATIONS) == ["f0-grade", "tensor"]


class TestRunCheck:
    """单个检查的执行测试"""

    def test_exception_becomes_failure(self):
        """测试检查抛出的异常记为失败"""
        def broken(ctx):
            raise RuntimeError("boom")

        result = _run_check("kr", "broken", broken, SuiteContext())
        assert not result.passed
        assert result.counterexample == "boom"
        assert "RuntimeError" in result.detail

    def test_context_from_config(self):
        """测试从配置构造规模参数"""
        ctx = SuiteContext.from_config(small_config(schur_method="jt"))
        assert ctx.max_rank == 1
        assert ctx.depth == 1
        assert ctx.window().min_grade == -1
        assert ctx.window().max_spread == 2
        assert ctx.schur_method.value == "jt"

    def test_truncated_exploration_raises(self):
        """测试达到节点上限的探索不会被当作完整分支"""
        ctx = SuiteContext(max_rank=2, node_cap=5)
        with pytest.raises(ExplorationCapError, match="5 个节点"):
            ctx.component(LambdaSpec(2, (1, 1)))

    def test_truncated_exploration_fails_check(self):
        """测试节点上限导致的截断使依赖该分支的检查失败"""
        results = run_acceptance(small_config(node_cap=3), "connectivity")
        assert results
        for result in results:
            assert not result.passed
            assert "ExplorationCapError" in result.detail


class TestGroups:
    """按分组运行验收检查"""

    @pytest.mark.parametrize("group", ["axioms", "kr", "tensor", "weyl", "lemma", "extremal", "schur", "index"])
    def test_group_passes(self, group):
        """测试小规模下各分组通过"""
        results = run_acceptance(small_config(), group)
        failed = [(r.name, r.detail, r.counterexample) for r in results if not r.passed]
        assert not failed, f"失败的检查: {failed}"

    def test_connectivity_passes(self):
        """测试连通性分组"""
        results = run_acceptance(small_config(verify_depth=2), "connectivity")
        assert all(r.passed for r in results)

    def test_lemma_rank_two(self):
        """测试 A_2 上的平移引理"""
        results = run_acceptance(small_config(verify_max_rank=2), "lemma")
        assert all(r.passed for r in results)

    def test_index_rank_two(self):
        """测试 A_2 上含 m_i >= 2 的 λ 的指标集检查"""
        results = run_acceptance(small_config(verify_max_rank=2), "index")
        failed = [(r.name, r.detail, r.counterexample) for r in results if not r.passed]
        assert not failed, f"失败的检查: {failed}"

    def test_flipped_tensor_rule_detected(self):
        """测试写反的张量规则被 Weyl 检查发现"""
        with use_conventions(**MUTATIONS["tensor"]):
            results = run_acceptance(small_config(), "weyl")
        assert not all(r.passed for r in results)

    def test_f0_grade_mutation_detected(self):
        """测试反向的 f̃_0 阶数被平移引理发现"""
        with use_conventions(**MUTATIONS["f0-grade"]):
            results = run_acceptance(small_config(), "lemma")
        failed = [r for r in results if not r.passed]
        assert [r.name for r in failed] == ["translation_lemma"]
        assert failed[0].counterexample is not None

    def test_harness(self):
        """测试变异检查本身通过"""
        results = run_acceptance(small_config(), "harness")
        assert [r.passed for r in results] == [True]

    @pytest.mark.slow
    def test_full_suite(self):
        """测试默认规模下的完整验收"""
        results = run_acceptance(RunConfig())
        failed = [(r.group, r.name, r.counterexample) for r in results if not r.passed]
        assert not failed, f"失败的检查: {failed}"
