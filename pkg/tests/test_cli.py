"""
命令行测试
"""

import json

import pytest

from extremal_crystal.cli import (
    CrystalLabCLI, main, _attach_negative_values, EXIT_OK, EXIT_FAILURE, EXIT_USAGE
)
from extremal_crystal.config import ConfigManager


@pytest.fixture
def small_verify_config(tmp_path):
    """小规模验收的配置文件"""
    path = tmp_path / "config.yaml"
    path.write_text(
        "rank: 1\nverify_max_rank: 1\nverify_depth: 1\nverify_max_schur: 2\nnode_cap: 2000\n",
        encoding='utf-8',
    )
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEnumerate:
    """enumerate 子命令测试"""

    def test_kr_crystal_dot(self, capsys):
        """测试 B^{1,1}（A_2）的 DOT 输出与截断警告"""
        code, out, err = run_cli(capsys, "enumerate", "--rank", "2", "--crystal", "kr:1", "--window", "0,0")
        assert code == EXIT_OK
        node_lines = [line for line in out.splitlines() if '[label=' in line and '->' not in line]
        assert len(node_lines) == 3
        assert "truncated" in err

    def test_deterministic(self, capsys):
        """测试两次运行的输出相同"""
        argv = ("enumerate", "--rank", "1", "--lambda", "2", "--window", "-2,0")
        first = run_cli(capsys, *argv)
        second = run_cli(capsys, *argv)
        assert first[0] == EXIT_OK
        assert first == second

    def test_negative_window_forms(self, capsys):
        """测试 `--window -2,0` 与 `--window=-2,0` 的输出相同"""
        separate = run_cli(capsys, "enumerate", "--rank", "1", "--lambda", "2", "--window", "-2,0")
        attached = run_cli(capsys, "enumerate", "--rank", "1", "--lambda", "2", "--window=-2,0")
        assert separate[0] == EXIT_OK
        assert separate == attached
        assert separate[1].startswith("digraph crystal {")

    def test_json_format(self, capsys):
        """测试 JSON 输出"""
        code, out, _ = run_cli(capsys, "enumerate", "--rank", "2", "--crystal", "kr:2",
                               "--window", "0,0", "--format", "json")
        assert code == EXIT_OK
        data = json.loads(out)
        assert len(data['nodes']) == 3
        assert data['nodes'][0]['id'] == "[1,2|m=0]"

    def test_output_file(self, capsys, tmp_path):
        """测试写入文件"""
        target = tmp_path / "graph.dot"
        code, out, _ = run_cli(capsys, "enumerate", "--rank", "1", "--crystal", "kr:1",
                               "--window", "0,0", "--output", str(target))
        assert code == EXIT_OK
        assert out == ""
        assert target.read_text(encoding='utf-8').startswith("digraph crystal {")

    @pytest.mark.parametrize("crystal", ["kr:3", "kr:x", "b"])
    def test_invalid_crystal(self, capsys, crystal):
        """测试无效的晶体"""
        code, _, err = run_cli(capsys, "enumerate", "--rank", "2", "--crystal", crystal)
        assert code == EXIT_USAGE
        assert "Configuration error" in err

    def test_invalid_window(self, capsys):
        """测试无效的窗口"""
        code, _, _ = run_cli(capsys, "enumerate", "--rank", "1", "--window", "1")
        assert code == EXIT_USAGE


class TestOtherCommands:
    """其他子命令测试"""

    def test_component_table(self, capsys):
        """测试分支普查的表格输出"""
        code, out, _ = run_cli(capsys, "component", "--rank", "1", "--lambda", "1", "--window", "-2,0")
        assert code == EXIT_OK
        assert "nodes: 6" in out
        assert "edges: 5" in out

    def test_extremal_check_json(self, capsys):
        """测试非极值元素的 JSON 报告"""
        code, out, _ = run_cli(capsys, "extremal-check", "--rank", "1",
                               "--element", "[1|m=0]⊗[2|m=0]", "--format", "json")
        assert code == EXIT_OK
        data = json.loads(out)
        assert data['extremal'] is False
        assert data['witness']['color'] == 0
        assert data['weight'] == {'lambda': [0, 0], 'delta': 0}

    def test_extremal_check_table(self, capsys):
        """测试极值元素的文字报告"""
        code, out, _ = run_cli(capsys, "extremal-check", "--rank", "1", "--element", "[1|m=-1]")
        assert code == EXIT_OK
        assert "is extremal" in out

    def test_extremal_check_parse_error(self, capsys):
        """测试无法解析的元素"""
        code, _, err = run_cli(capsys, "extremal-check", "--rank", "1", "--element", "[5|m=0]")
        assert code == EXIT_USAGE
        assert "Cannot parse element" in err

    def test_weyl_orbit(self, capsys):
        """测试 Weyl 轨道默认输出 JSON"""
        code, out, _ = run_cli(capsys, "weyl-orbit", "--rank", "1", "--element", "[1|m=0]", "--max-len", "2")
        assert code == EXIT_OK
        data = json.loads(out)
        assert len(data) == 5
        assert data[0] == {'word': [], 'element': "[1|m=0]", 'weight': {'lambda': [-1, 1], 'delta': 0}}

    def test_schur(self, capsys):
        """测试 Schur 多项式输出"""
        code, out, _ = run_cli(capsys, "schur", "--shape", "2,1", "--vars", "2")
        assert code == EXIT_OK
        assert out == "x1^2*x2 + x1*x2^2\n"
        _, out, _ = run_cli(capsys, "schur", "--shape", "1,1,1", "--vars", "2", "--method", "jt")
        assert out == "0\n"

    def test_schur_invalid_shape(self, capsys):
        """测试无效的分拆"""
        code, _, _ = run_cli(capsys, "schur", "--shape", "1,2", "--vars", "2")
        assert code == EXIT_USAGE

    def test_lab_json(self, capsys):
        """测试零级报告的 JSON 输出"""
        code, out, err = run_cli(capsys, "lab", "--type", "a", "--rank", "1", "--lambda", "1",
                                 "--grade-window", "2", "--max-schur", "2", "--format", "json")
        assert code == EXIT_OK
        data = json.loads(out)
        assert data['component']['nodes'] == 6
        assert data['index_set']['size'] == 18
        assert data['index_set']['reduced_size'] == 6
        assert "truncated" in err

    def test_lab_table(self, capsys):
        """测试零级报告的表格输出"""
        code, out, _ = run_cli(capsys, "lab", "--rank", "1", "--lambda", "1",
                               "--grade-window", "1", "--max-schur", "1", "--language", "zh")
        assert code == EXIT_OK
        assert "指标集" in out
        assert "分次特征" in out

    def test_lab_negative_window(self, capsys):
        """测试负的窗口深度"""
        code, _, _ = run_cli(capsys, "lab", "--rank", "1", "--grade-window", "-1")
        assert code == EXIT_USAGE


class TestVerify:
    """verify 子命令测试"""

    def test_verify_group(self, capsys, small_verify_config):
        """测试单个分组通过"""
        code, out, _ = run_cli(capsys, "verify", "--only", "schur", "--config", small_verify_config)
        assert code == EXIT_OK
        assert "PASS [schur]" in out

    def test_verify_injection(self, capsys, small_verify_config):
        """测试故障注入使退出码为 1"""
        code, out, err = run_cli(capsys, "verify", "--only", "lemma", "--inject", "f0-grade",
                                 "--config", small_verify_config)
        assert code == EXIT_FAILURE
        assert "FAIL [lemma] translation_lemma" in out
        assert "f0-grade" in err

    def test_verify_json(self, capsys, small_verify_config):
        """测试 JSON 输出"""
        code, out, _ = run_cli(capsys, "verify", "--only", "kr", "--format", "json",
                               "--config", small_verify_config)
        assert code == EXIT_OK
        assert all(entry['passed'] for entry in json.loads(out))

    def test_verify_unknown_group(self, capsys):
        """测试未知分组"""
        code, _, _ = run_cli(capsys, "verify", "--only", "nonexistent")
        assert code == EXIT_USAGE


class TestUsage:
    """用法与配置错误测试"""

    def test_help(self, capsys):
        """测试 --help"""
        code, out, _ = run_cli(capsys, "--help")
        assert code == EXIT_OK
        assert "verify" in out

    def test_missing_command(self, capsys):
        """测试缺少子命令"""
        code, _, _ = run_cli(capsys)
        assert code == EXIT_USAGE

    def test_invalid_rank(self, capsys):
        """测试无效的秩"""
        code, _, err = run_cli(capsys, "enumerate", "--rank", "0")
        assert code == EXIT_USAGE
        assert "Configuration error" in err

    def test_config_manager_injection(self, capsys, temp_config_file):
        """测试注入的配置管理器"""
        cli = CrystalLabCLI(ConfigManager(temp_config_file))
        code = cli.run(["component", "--window", "-1,0", "--format", "table"])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert "节点" in out

    @pytest.mark.parametrize("argv, expected", [
        (["component", "--window", "-2,0"], ["component", "--window=-2,0"]),
        (["lab", "--grade-window", "-1"], ["lab", "--grade-window=-1"]),
        (["component", "--lambda", "1,1", "--window", "0,0"], ["component", "--lambda", "1,1", "--window", "0,0"]),
        (["component", "--window", "-x"], ["component", "--window", "-x"]),
        (["component", "--output", "-2,0"], ["component", "--output", "-2,0"]),
        (["component", "--window"], ["component", "--window"]),
    ])
    def test_attach_negative_values(self, argv, expected):
        """测试以负数开头的取值被并入选项"""
        assert _attach_negative_values(argv) == expected

    def test_negative_max_spread(self, capsys):
        """测试负的分散上限"""
        code, _, err = run_cli(capsys, "component", "--rank", "2", "--lambda", "1,1", "--max-spread", "-1")
        assert code == EXIT_USAGE
        assert "max_spread" in err

    def test_mixed_colors_component(self, capsys):
        """测试颜色混合的 λ 在默认分散上限下完整展开"""
        code, out, err = run_cli(capsys, "component", "--rank", "2", "--lambda", "1,1",
                                 "--window", "-2,0", "--format", "json")
        assert code == EXIT_OK
        data = json.loads(out)
        assert len(data['nodes']) <= 72
        assert "node cap" not in err
