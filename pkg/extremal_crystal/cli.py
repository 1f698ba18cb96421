"""
命令行入口

子命令: enumerate, component, extremal-check, weyl-orbit, schur, lab, verify。
人类可读的报告写到标准输出，诊断信息写到错误流。

退出码: 0 成功（截断只给出警告），1 验收检查失败或晶体错误，2 用法或配置错误。
"""

import argparse
import json
import logging
import re
import sys
from typing import Any, Dict, List, Optional, Sequence

from .acceptance import GROUPS, MUTATIONS, run_acceptance
from .config import ConfigManager, RunConfig, use_conventions
from .crystal import CrystalGraph, explore
from .element_parser import ElementParser
from .kr_crystal import u_varpi
from .lab import LambdaSpec, LevelZeroLab, build_u_prime
from .localization import localization_manager
from .models import (
    ConfigurationError, CrystalLabError, ElementParseError, OutputFormat, TensorRule
)
from .partitions import Partition
from .schur import schur
from .weyl import is_extremal, weyl_orbit

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

# 子命令名到本地化键
COMMANDS = {
    'enumerate': 'enumerate',
    'component': 'component',
    'extremal-check': 'extremal_check',
    'weyl-orbit': 'weyl_orbit',
    'schur': 'schur',
    'lab': 'lab',
    'verify': 'verify',
}

# 未指定 --format 时各子命令的默认输出
DEFAULT_FORMATS = {
    'enumerate': OutputFormat.DOT.value,
    'weyl-orbit': OutputFormat.JSON.value,
}


def _parse_int_list(text: str, what: str) -> List[int]:
    try:
        return [int(part) for part in text.split(',')]
    except ValueError:
        raise ConfigurationError(f"{what} 必须是逗号分隔的整数，得到: {text!r}")


def _parse_window(text: str) -> List[int]:
    values = _parse_int_list(text, "窗口")
    if len(values) != 2:
        raise ConfigurationError(f"窗口必须形如 a,b，得到: {text!r}")
    return values


# 以负数开头的取值，例如 -2,0
_NEGATIVE_VALUE = re.compile(r"^-\d+(,-?\d+)*$")
# 取整数或逗号分隔整数的选项
NUMERIC_OPTIONS = ("--window", "--lambda", "--shape", "--grade-window", "--max-spread")


def _attach_negative_values(argv: Sequence[str]) -> List[str]:
    """把 `--window -2,0` 改写为 `--window=-2,0`"""
    result: List[str] = []
    tokens = list(argv)
    k = 0
    while k < len(tokens):
        token = tokens[k]
        if token in NUMERIC_OPTIONS and k + 1 < len(tokens) and _NEGATIVE_VALUE.match(tokens[k + 1]):
            result.append(f"{token}={tokens[k + 1]}")
            k += 2
        else:
            result.append(token)
            k += 1
    return result


def _header(key: str) -> str:
    return localization_manager.get_text(f'messages.headers.{key}')


class CrystalLabCLI:
    """极值晶体实验室命令行"""

    def __init__(self, config_manager: Optional[ConfigManager] = None):
        self.logger = logging.getLogger(__name__)
        self.config_manager = config_manager
        self.parser = self.create_parser()

    def create_parser(self) -> argparse.ArgumentParser:
        """构建参数解析器；公共参数挂在每个子命令上"""
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument('--rank', type=int, help='A_n^(1) 的秩 n')
        common.add_argument('--format', dest='output_format', choices=[f.value for f in OutputFormat])
        common.add_argument('--language', choices=localization_manager.languages or None)
        common.add_argument('--log-level')
        common.add_argument('--config', help='配置文件路径，缺省为仓库根目录的 config.yaml')
        common.add_argument('--node-cap', type=int)
        common.add_argument('--max-spread', type=int, help='张量各因子阶数之差的上限')
        common.add_argument('--tensor-method', choices=[TensorRule.BINARY.value, TensorRule.SIGNATURE.value])
        common.add_argument('--output', help='写入文件而不是标准输出')

        parser = argparse.ArgumentParser(
            prog='extremal_crystal',
            description=localization_manager.get_text('metadata.description'),
        )
        subparsers = parser.add_subparsers(dest='command', required=True)

        def add(name: str) -> argparse.ArgumentParser:
            help_text = localization_manager.command_description(COMMANDS[name])
            return subparsers.add_parser(name, parents=[common], help=help_text, description=help_text)

        enumerate_parser = add('enumerate')
        enumerate_parser.add_argument('--crystal', default='w', help="kr:i 表示 Aff(B^{i,1})，w 表示 B(W')")
        enumerate_parser.add_argument('--lambda', dest='lambda_text', help='重数 m1,..,mn')
        enumerate_parser.add_argument('--window', help='总阶数窗口 a,b')

        component_parser = add('component')
        component_parser.add_argument('--lambda', dest='lambda_text')
        component_parser.add_argument('--window')

        extremal_parser = add('extremal-check')
        extremal_parser.add_argument('--element', required=True, help='例如 "[1|m=0]⊗[2|m=-1]"')

        orbit_parser = add('weyl-orbit')
        orbit_parser.add_argument('--element', required=True)
        orbit_parser.add_argument('--max-len', type=int, default=3)

        schur_parser = add('schur')
        schur_parser.add_argument('--shape', required=True, help='分拆，例如 2,1')
        schur_parser.add_argument('--vars', type=int, required=True, help='变量个数 m')
        schur_parser.add_argument('--method', dest='schur_method', choices=['ssyt', 'jt'])

        lab_parser = add('lab')
        lab_parser.add_argument('--type', dest='cartan_type', default='a', choices=['a', 'A'])
        lab_parser.add_argument('--lambda', dest='lambda_text')
        lab_parser.add_argument('--grade-window', type=int, help='窗口深度 K，对应 [-K, 0]')
        lab_parser.add_argument('--window')
        lab_parser.add_argument('--max-schur', type=int)
        lab_parser.add_argument('--method', dest='schur_method', choices=['ssyt', 'jt'])

        verify_parser = add('verify')
        verify_parser.add_argument('--only', choices=GROUPS)
        verify_parser.add_argument('--inject', choices=sorted(MUTATIONS))

        return parser

    def _overrides(self, args: argparse.Namespace) -> Dict[str, Any]:
        """把命令行参数转换为配置覆盖项"""
        overrides: Dict[str, Any] = {
            'rank': args.rank,
            'node_cap': args.node_cap,
            'max_spread': args.max_spread,
            'tensor_method': args.tensor_method,
            'language': args.language,
            'log_level': args.log_level.upper() if args.log_level else None,
            'output_format': args.output_format or DEFAULT_FORMATS.get(args.command),
            'schur_method': getattr(args, 'schur_method', None),
            'max_schur': getattr(args, 'max_schur', None),
            'seed': getattr(args, 'element', None),
        }
        lambda_text = getattr(args, 'lambda_text', None)
        if lambda_text:
            overrides['lambda_multiplicities'] = _parse_int_list(lambda_text, "λ 的重数")

        window = getattr(args, 'window', None)
        if window:
            overrides['window_min'], overrides['window_max'] = _parse_window(window)
        depth = getattr(args, 'grade_window', None)
        if depth is not None:
            if depth < 0:
                raise ConfigurationError(f"窗口深度不能为负数，得到: {depth}")
            overrides['window_min'], overrides['window_max'] = -depth, 0
        return overrides

    def load_config(self, args: argparse.Namespace) -> RunConfig:
        manager = self.config_manager or ConfigManager(config_path=args.config)
        return manager.load_config(self._overrides(args))

    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        """解析参数并执行子命令，返回退出码"""
        try:
            args = self.parser.parse_args(_attach_negative_values(sys.argv[1:] if argv is None else argv))
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else EXIT_USAGE

        try:
            config = self.load_config(args)
        except ConfigurationError as e:
            self._error('config', e)
            return EXIT_USAGE

        self._configure_logging(config)
        localization_manager.set_language(config.language)
        self.logger.info(f"执行子命令 {args.command}，秩 {config.rank}")

        handler = getattr(self, f"cmd_{args.command.replace('-', '_')}")
        try:
            with use_conventions(tensor_rule=TensorRule(config.tensor_method)):
                return handler(args, config)
        except ElementParseError as e:
            self._error('parse', e)
            return EXIT_USAGE
        except (ConfigurationError, ValueError) as e:
            self._error('config', e)
            return EXIT_USAGE
        except CrystalLabError as e:
            self._error('crystal', e)
            return EXIT_FAILURE

    def _configure_logging(self, config: RunConfig) -> None:
        logging.basicConfig(
            level=config.log_level.upper(),
            stream=sys.stderr,
            format='%(levelname)s %(name)s: %(message)s',
        )
        logging.getLogger('extremal_crystal').setLevel(config.log_level.upper())

    def _error(self, key: str, error: Exception) -> None:
        self.logger.error(f"{key}: {error}")
        print(localization_manager.format_error(key, error=error), file=sys.stderr)

    def _emit(self, text: str, args: argparse.Namespace) -> None:
        """写到 --output 指定的文件或标准输出"""
        if not text.endswith("\n"):
            text += "\n"
        if args.output:
            with open(args.output, 'w', encoding='utf-8', newline='\n') as f:
                f.write(text)
        else:
            sys.stdout.write(text)

    def _warn_truncation(self, graph: CrystalGraph) -> None:
        if graph.truncated:
            print(localization_manager.format_message('truncated', count=len(graph.truncated)), file=sys.stderr)
        if graph.cap_reached:
            print(localization_manager.format_message('cap_reached', cap=graph.window.node_cap), file=sys.stderr)

    def _spec(self, config: RunConfig) -> LambdaSpec:
        return LambdaSpec(config.rank, tuple(config.multiplicities))

    def _graph_text(self, graph: CrystalGraph, output_format: str) -> str:
        if output_format == OutputFormat.DOT.value:
            return graph.to_dot()
        if output_format == OutputFormat.JSON.value:
            return graph.to_json()
        lines = [f"{_header('element')}\t{_header('weight')}\t{_header('grade')}"]
        for element in graph.elements():
            lines.append(f"{element.encode()}\t{element.weight()}\t{element.grade}")
        return "\n".join(lines)

    def cmd_enumerate(self, args: argparse.Namespace, config: RunConfig) -> int:
        """Aff(B^{i,1}) 或 B(W′) 在窗口内的晶体图"""
        crystal = args.crystal.strip().lower()
        if crystal.startswith('kr:'):
            try:
                i = int(crystal[3:])
            except ValueError:
                raise ConfigurationError(f"无效的晶体: {args.crystal}")
            if not 1 <= i <= config.rank:
                raise ConfigurationError(f"B^{{i,1}} 需要 1 <= i <= {config.rank}，得到: {i}")
            seed = u_varpi(config.rank, i)
        elif crystal == 'w':
            seed = build_u_prime(self._spec(config))
        else:
            raise ConfigurationError(f"无效的晶体: {args.crystal}（可用: kr:i, w）")

        graph = explore(seed, config.window)
        self._emit(self._graph_text(graph, config.output_format), args)
        self._warn_truncation(graph)
        return EXIT_OK

    def cmd_component(self, args: argparse.Namespace, config: RunConfig) -> int:
        """u′ 所在分支的普查"""
        spec = self._spec(config)
        lab = LevelZeroLab(spec, config.window, config.max_schur, config.schur_method)
        graph = lab.graph
        census = lab.component_census()

        if config.output_format == OutputFormat.TABLE.value:
            window = config.window
            lines = [
                localization_manager.format_message(
                    'component.title', spec=spec, low=window.min_grade, high=window.max_grade
                ),
                localization_manager.format_message('component.nodes', count=census['nodes']),
                localization_manager.format_message('component.edges', count=census['edges']),
                localization_manager.format_message('component.truncated', count=census['truncated']),
            ]
            self._emit("\n".join(lines), args)
        else:
            self._emit(self._graph_text(graph, config.output_format), args)
        self._warn_truncation(graph)
        return EXIT_OK

    def cmd_extremal_check(self, args: argparse.Namespace, config: RunConfig) -> int:
        element = ElementParser(config.rank).parse(config.seed)
        report = is_extremal(element)

        if config.output_format == OutputFormat.JSON.value:
            data = {'element': element.encode(), 'weight': element.weight().to_dict(), **report.to_dict()}
            self._emit(json.dumps(data, ensure_ascii=False, indent=2), args)
        elif report.extremal:
            self._emit(localization_manager.format_message(
                'extremal.extremal', element=element.encode(), size=len(report.closure)), args)
        else:
            witness = report.witness
            self._emit(localization_manager.format_message(
                'extremal.not_extremal', element=element.encode(), witness=witness.element,
                color=witness.color, clause=witness.clause.value), args)
        return EXIT_OK

    def cmd_weyl_orbit(self, args: argparse.Namespace, config: RunConfig) -> int:
        element = ElementParser(config.rank).parse(config.seed)
        orbit = weyl_orbit(element, args.max_len)

        if config.output_format == OutputFormat.TABLE.value:
            lines = [f"{_header('word')}\t{_header('element')}\t{_header('weight')}"]
            lines.extend(f"{word}\t{image.encode()}\t{image.weight()}" for word, image in orbit)
            self._emit("\n".join(lines), args)
        else:
            data = [
                {'word': list(word.word), 'element': image.encode(), 'weight': image.weight().to_dict()}
                for word, image in orbit
            ]
            self._emit(json.dumps(data, ensure_ascii=False, indent=2), args)
        return EXIT_OK

    def cmd_schur(self, args: argparse.Namespace, config: RunConfig) -> int:
        if args.vars < 0:
            raise ConfigurationError(f"变量个数不能为负数，得到: {args.vars}")
        polynomial = schur(Partition.from_string(args.shape), args.vars, config.schur_method)
        if config.output_format == OutputFormat.JSON.value:
            self._emit(polynomial.to_json(), args)
        else:
            self._emit(str(polynomial), args)
        return EXIT_OK

    def cmd_lab(self, args: argparse.Namespace, config: RunConfig) -> int:
        """完整的零级报告"""
        if args.cartan_type.lower() != 'a':
            raise ConfigurationError(f"只支持 A 型，得到: {args.cartan_type}")
        spec = self._spec(config)
        lab = LevelZeroLab(spec, config.window, config.max_schur, config.schur_method)

        if config.output_format == OutputFormat.JSON.value:
            self._emit(lab.to_json(), args)
        elif config.output_format == OutputFormat.DOT.value:
            self._emit(lab.graph.to_dot(), args)
        else:
            self._emit(self._lab_table(lab), args)
        self._warn_truncation(lab.graph)
        return EXIT_OK

    def _lab_table(self, lab: LevelZeroLab) -> str:
        report = lab.report()
        msg = localization_manager.format_message
        window = report['window']
        census = report['component']
        connectivity = report['connectivity']
        index = report['index_set']

        lines = [
            msg('component.title', spec=lab.spec, low=window['min_grade'], high=window['max_grade']),
            msg('component.nodes', count=census['nodes']),
            msg('component.edges', count=census['edges']),
            msg('component.truncated', count=census['truncated']),
            "",
            msg('lab.extremal_title'),
        ]
        lines.extend(f"  {entry['element']}" for entry in report['extremal'])
        lines.append(msg('lab.in_orbit', value=report['extremal_weights_in_orbit']))
        lines.append(msg(
            'lab.connectivity', connected=connectivity['connected'],
            undetermined=connectivity['undetermined'], shifts=connectivity['targets_are_z_shifts'],
        ))
        lines.append("")
        lines.append(msg('lab.index_title', size=index['size'], reduced=index['reduced_size']))
        lines.append(f"  {_header('c0')}\t{_header('element')}\t{_header('realization')}")
        for entry in index['entries']:
            terms = " + ".join(f"{t['coeff']}·{t['element']}" for t in entry['realization'])
            lines.append(f"  {entry['c0']}\t{entry['element']}\t{terms}")
        lines.append("")
        lines.append(msg('lab.character_title'))
        lines.append(f"  {_header('weight')}\t{_header('delta')}\t{_header('count')}")
        for row in report['character']:
            lines.append(f"  {tuple(row['weight'])}\t{row['delta']}\t{row['count']}")
        return "\n".join(lines)

    def cmd_verify(self, args: argparse.Namespace, config: RunConfig) -> int:
        """运行验收检查；任一失败时退出码为 1"""
        if args.inject:
            print(localization_manager.format_message('verify.injected', mutation=args.inject), file=sys.stderr)
            with use_conventions(**MUTATIONS[args.inject]):
                results = run_acceptance(config, args.only)
        else:
            results = run_acceptance(config, args.only)

        if config.output_format == OutputFormat.JSON.value:
            self._emit(json.dumps([r.to_dict() for r in results], ensure_ascii=False, indent=2), args)
        else:
            lines = []
            for result in results:
                status = localization_manager.format_message('verify.pass' if result.passed else 'verify.fail')
                lines.append(f"{status} [{result.group}] {result.name}: {result.detail}")
                if result.counterexample is not None:
                    lines.append(localization_manager.format_message('verify.counterexample',
                                                                     value=result.counterexample))
            passed = sum(1 for r in results if r.passed)
            lines.append(localization_manager.format_message('verify.summary', passed=passed, total=len(results)))
            self._emit("\n".join(lines), args)

        return EXIT_OK if all(r.passed for r in results) else EXIT_FAILURE


def main(argv: Optional[Sequence[str]] = None) -> int:
    """命令行入口"""
    return CrystalLabCLI().run(argv)
