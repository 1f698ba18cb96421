"""
数据模型测试
"""

import json

import pytest

from extremal_crystal.models import (
    GradeWindow, AxiomReport, AxiomViolation, ExtremalityReport, ExtremalityWitness,
    ExtremalClause, CheckResult, ConnectivityReport, OutputFormat, SchurMethod, TensorRule,
    CrystalLabError, ConfigurationError, RegularityError, WeylSearchError, ElementParseError,
    CartanDatumMismatchError
)


class TestGradeWindow:
    """阶数窗口测试"""

    def test_depth_window(self):
        """测试深度窗口 [-K, 0]"""
        window = GradeWindow.depth(3)
        assert window.min_grade == -3
        assert window.max_grade == 0
        assert window.node_cap == 20000

    def test_negative_depth(self):
        """测试负深度"""
        with pytest.raises(ValueError, match="窗口深度不能为负数"):
            GradeWindow.depth(-1)

    def test_negative_node_cap(self):
        """测试负节点上限"""
        with pytest.raises(ValueError, match="节点上限不能为负数"):
            GradeWindow(-1, 0, node_cap=-5)

    def test_contains(self):
        """测试窗口包含判断"""
        window = GradeWindow(-2, 0)
        assert window.contains(-2)
        assert window.contains(0)
        assert not window.contains(1)
        assert not window.contains(-3)

    def test_empty_window(self):
        """测试空窗口"""
        assert GradeWindow(1, 0).is_empty
        assert not GradeWindow(0, 0).is_empty

    def test_to_dict(self):
        """测试转换为字典"""
        assert GradeWindow(-1, 0, 10).to_dict() == {
            'min_grade': -1, 'max_grade': 0, 'node_cap': 10, 'max_spread': None
        }

    def test_admits_spread(self):
        """测试总阶数与各因子阶数之差同时受限"""
        window = GradeWindow.depth(2, max_spread=2)
        assert window.admits((0, 0))
        assert window.admits((1, -1))
        assert window.admits((-2,))
        assert not window.admits((2, -2))
        assert not window.admits((0, -3))
        assert GradeWindow.depth(2).admits((5, -5))

    def test_negative_spread(self):
        """测试负的分散上限"""
        with pytest.raises(ValueError, match="阶数分散上限不能为负数"):
            GradeWindow(-1, 0, max_spread=-1)


class TestReports:
    """检查报告测试"""

    def test_axiom_report_to_dict(self):
        """测试公理报告序列化"""
        violation = AxiomViolation("[1|m=0]", 1, "edge", "多余的边")
        report = AxiomReport(False, 3, 1, violation)
        data = report.to_dict()

        assert data['passed'] is False
        assert data['checked_nodes'] == 3
        assert data['violation']['clause'] == "edge"

    def test_passing_axiom_report(self):
        """测试通过的公理报告"""
        assert AxiomReport(True, 5).to_dict()['violation'] is None

    def test_extremality_report_with_witness(self):
        """测试带证据的极值报告"""
        witness = ExtremalityWitness("[1|m=0]⊗[2|m=0]", 0, ExtremalClause.RAISING_NONZERO, 0)
        report = ExtremalityReport(False, (), witness)
        data = json.loads(report.to_json())

        assert data['extremal'] is False
        assert data['witness']['color'] == 0
        assert data['witness']['clause'] == "e_nonzero"

    def test_extremality_report_without_witness(self):
        """测试极值元素的报告"""
        data = ExtremalityReport(True, ("[1|m=0]", "[2|m=0]")).to_dict()
        assert data['closure'] == ["[1|m=0]", "[2|m=0]"]
        assert 'witness' not in data

    def test_check_result_to_dict(self):
        """测试检查结果序列化"""
        result = CheckResult("vanishing", "schur", True, "ok")
        assert result.to_dict() == {
            'name': "vanishing", 'group': "schur", 'passed': True,
            'detail': "ok", 'counterexample': None,
        }

    def test_connectivity_report_to_dict(self):
        """测试连通性报告序列化"""
        report = ConnectivityReport(4, 1, ["[1|m=0]"], ["[2|m=-2]"], True)
        data = report.to_dict()
        assert data['connected'] == 4
        assert data['undetermined_nodes'] == ["[2|m=-2]"]


class TestEnums:
    """枚举测试"""

    def test_values(self):
        """测试枚举取值"""
        assert OutputFormat("dot") == OutputFormat.DOT
        assert SchurMethod("jt") == SchurMethod.JACOBI_TRUDI
        assert TensorRule("signature") == TensorRule.SIGNATURE

    def test_invalid_value(self):
        """测试无效枚举值"""
        with pytest.raises(ValueError):
            SchurMethod("determinant")


class TestExceptions:
    """异常层次测试"""

    @pytest.mark.parametrize("error_type", [
        ConfigurationError, RegularityError, WeylSearchError, ElementParseError, CartanDatumMismatchError
    ])
    def test_hierarchy(self, error_type):
        """测试所有异常都继承自基类"""
        assert issubclass(error_type, CrystalLabError)
