"""
验收检查

把每条验收标准实现为一个带分组的命名检查，返回 CheckResult。
检查内部抛出的异常记为失败，异常文本作为反例。
"""

import logging
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Any

from .config import RunConfig, get_conventions, use_conventions
from .crystal import (
    TensorElement, CrystalGraph, explore, check_axioms, binary_e, binary_f, signature_e, signature_f
)
from .kr_crystal import (
    AffineElement, u_varpi, kr_columns, promotion, column_f0, column_e0,
    column_f0_by_promotion, column_e0_by_promotion
)
from .lab import (
    LambdaSpec, build_u_prime, connectivity_census, index_set, phi_image,
    canonical_pair, LevelZeroLab
)
from .models import CheckResult, ExplorationCapError, GradeWindow, SchurMethod, TensorRule
from .partitions import Partition, PartitionTuple, partitions_of, enumerate_c0
from .schur import FormalPolynomial, elementary, schur_ssyt, schur_jacobi_trudi
from .weyl import (
    s_action, w_action, find_translation_word, reduced_words, weyl_orbit, is_extremal
)
from .cartan import build_affine_a

logger = logging.getLogger(__name__)

GROUPS = ("axioms", "kr", "tensor", "weyl", "lemma", "extremal", "connectivity", "schur", "index", "harness")
MUTATED_GROUPS = ("weyl", "lemma", "extremal", "connectivity")
MUTATIONS = {
    "tensor": {"tensor_rule": TensorRule.FLIPPED},
    "f0-grade": {"f0_grade_shift": 1},
}

# 张量检查用的 (秩, 重数)，因子数至多为 3
TENSOR_SPECS = ((1, (2,)), (1, (3,)), (2, (1, 1)), (2, (2, 1)), (3, (1, 0, 1)))
# 连通性与指标集检查用的 λ
LAB_SPECS = ((1, (1,)), (1, (2,)), (2, (1, 0)), (2, (1, 1)))
# 指标集检查另加一个颜色混合且 m_i >= 2 的 λ，使约化指标集不止 {∅}
INDEX_SPECS = LAB_SPECS + ((2, (2, 1)),)
# 极值检查用的 λ
EXTREMAL_SPECS = ((1, (1,)), (1, (2,)), (1, (3,)), (2, (1, 0)), (2, (0, 1)), (2, (1, 1)),
                  (2, (2, 0)), (3, (1, 0, 0)), (3, (0, 1, 0)), (3, (1, 0, 1)))

Outcome = Tuple[bool, str, Optional[str]]


@dataclass
class SuiteContext:
    """验收运行的规模参数与探索缓存"""
    max_rank: int = 3
    depth: int = 2
    max_schur: int = 3
    node_cap: int = 20000
    max_spread: int = 2
    schur_method: SchurMethod = SchurMethod.SSYT
    _graphs: Dict[Any, CrystalGraph] = field(default_factory=dict)

    @classmethod
    def from_config(cls, config: RunConfig) -> 'SuiteContext':
        return cls(
            max_rank=config.verify_max_rank,
            depth=config.verify_depth,
            max_schur=config.verify_max_schur,
            node_cap=config.node_cap,
            max_spread=config.max_spread,
            schur_method=SchurMethod(config.schur_method),
        )

    def window(self, depth: Optional[int] = None) -> GradeWindow:
        return GradeWindow.depth(self.depth if depth is None else depth, self.node_cap, self.max_spread)

    def explore(self, seed: Any, window: GradeWindow, colors: Optional[Sequence[int]] = None) -> CrystalGraph:
        """
        探索并要求结果完整

        Raises:
            ExplorationCapError: 达到节点上限，结果只是分支的一部分
        """
        graph = explore(seed, window, colors)
        if graph.cap_reached:
            raise ExplorationCapError(
                f"{seed} 的探索在 {window.node_cap} 个节点处截断（窗口 [{window.min_grade}, {window.max_grade}]，"
                f"分散上限 {window.max_spread}）"
            )
        return graph

    def specs(self, candidates: Sequence[Tuple[int, Tuple[int, ...]]]) -> List[LambdaSpec]:
        return [LambdaSpec(rank, mults) for rank, mults in candidates if rank <= self.max_rank]

    def component(self, spec: LambdaSpec, depth: Optional[int] = None) -> CrystalGraph:
        """B_0(W′) 的窗口分支，按当前晶体约定缓存"""
        window = self.window(depth)
        key = (spec, window, get_conventions())
        if key not in self._graphs:
            self._graphs[key] = self.explore(build_u_prime(spec), window)
        return self._graphs[key]

    def kr_layer(self, n: int, i: int, depth: Optional[int] = None) -> CrystalGraph:
        window = self.window(depth)
        key = ("kr", n, i, window, get_conventions())
        if key not in self._graphs:
            self._graphs[key] = self.explore(u_varpi(n, i), window)
        return self._graphs[key]


CheckFunc = Callable[[SuiteContext], Outcome]
_REGISTRY: List[Tuple[str, str, CheckFunc]] = []


def check(group: str, name: str) -> Callable[[CheckFunc], CheckFunc]:
    """注册一个验收检查"""
    if group not in GROUPS:
        raise ValueError(f"未知的检查分组: {group}")

    def decorator(func: CheckFunc) -> CheckFunc:
        _REGISTRY.append((group, name, func))
        return func

    return decorator


def registered_checks(only: Optional[str] = None) -> List[Tuple[str, str, CheckFunc]]:
    if only is not None and only not in GROUPS:
        raise ValueError(f"未知的检查分组: {only}")
    return [entry for entry in _REGISTRY if only is None or entry[0] == only]


def _ok(detail: str) -> Outcome:
    return True, detail, None


def _fail(detail: str, counterexample: Any) -> Outcome:
    return False, detail, str(counterexample)


def _kr_cases(ctx: SuiteContext, max_rank: Optional[int] = None) -> List[Tuple[int, int]]:
    top = ctx.max_rank if max_rank is None else max_rank
    return [(n, i) for n in range(1, top + 1) for i in range(1, n + 1)]


def _axioms_over(graphs: Sequence[Tuple[str, CrystalGraph]]) -> Outcome:
    checked = 0
    for label, graph in graphs:
        report = check_axioms(graph)
        if not report.passed:
            v = report.violation
            return _fail(f"{label} 不满足晶体公理", f"{v.node} 颜色 {v.color} [{v.clause}] {v.detail}")
        checked += report.checked_nodes
    return _ok(f"检查了 {checked} 个完全展开的节点")


# ---- axioms ----

@check("axioms", "kr_classical_axioms")
def _check_kr_classical_axioms(ctx: SuiteContext) -> Outcome:
    graphs = []
    for n, i in _kr_cases(ctx, max(ctx.max_rank, 4)):
        graphs.append((f"B^{{{i},1}} (n={n})", ctx.explore(u_varpi(n, i), GradeWindow(0, 0, ctx.node_cap), range(1, n + 1))))
    return _axioms_over(graphs)


@check("axioms", "affine_layer_axioms")
def _check_affine_layer_axioms(ctx: SuiteContext) -> Outcome:
    graphs = [(f"Aff(B^{{{i},1}}) (n={n})", ctx.kr_layer(n, i)) for n, i in _kr_cases(ctx)]
    return _axioms_over(graphs)


@check("axioms", "tensor_axioms")
def _check_tensor_axioms(ctx: SuiteContext) -> Outcome:
    graphs = [(f"B_0(W′) λ={spec}", ctx.component(spec)) for spec in ctx.specs(TENSOR_SPECS)]
    return _axioms_over(graphs)


# ---- kr ----

@check("kr", "kr_census")
def _check_kr_census(ctx: SuiteContext) -> Outcome:
    for n, i in _kr_cases(ctx, max(ctx.max_rank, 4)):
        columns = kr_columns(n, i)
        if len(columns) != comb(n + 1, i):
            return _fail("B^{i,1} 的元素个数错误", f"n={n}, i={i}: {len(columns)}")
        graph = ctx.explore(u_varpi(n, i), GradeWindow(0, 0, ctx.node_cap), range(1, n + 1))
        if len(graph) != len(columns):
            return _fail("B^{i,1} 在经典颜色下不连通", f"n={n}, i={i}: 分支 {len(graph)} / {len(columns)}")
    return _ok("元素个数为 C(n+1, i)，且在经典颜色下连通")


@check("kr", "promotion_order")
def _check_promotion_order(ctx: SuiteContext) -> Outcome:
    for n, i in _kr_cases(ctx, max(ctx.max_rank, 4)):
        for column in kr_columns(n, i):
            image = column
            for _ in range(n + 1):
                image = promotion(image, n)
            if image != column:
                return _fail("pr^{n+1} ≠ id", f"n={n}, col={list(column)}")
    return _ok("pr^{n+1} = id")


@check("kr", "f0_closed_form_matches_promotion")
def _check_f0_promotion(ctx: SuiteContext) -> Outcome:
    for n, i in _kr_cases(ctx, max(ctx.max_rank, 4)):
        for column in kr_columns(n, i):
            if column_f0(column, n) != column_f0_by_promotion(column, n):
                return _fail("f̃_0 的两种实现不一致", f"n={n}, col={list(column)}")
            if column_e0(column, n) != column_e0_by_promotion(column, n):
                return _fail("ẽ_0 的两种实现不一致", f"n={n}, col={list(column)}")
    return _ok("闭式与 pr⁻¹∘f̃_1∘pr 一致")


@check("kr", "z_shift_automorphism")
def _check_z_shift_automorphism(ctx: SuiteContext) -> Outcome:
    for n, i in _kr_cases(ctx):
        delta = build_affine_a(n).delta()
        for x in ctx.kr_layer(n, i).elements():
            for k in (-2, 1):
                shifted = x.z_shift(k)
                if shifted.weight() != x.weight() + delta.scale(k):
                    return _fail("z 移动后的权错误", shifted)
                for j in range(n + 1):
                    for op in ("f", "e"):
                        a = getattr(shifted, op)(j)
                        b = getattr(x, op)(j)
                        if (a is None) != (b is None) or (a is not None and a != b.z_shift(k)):
                            return _fail("z 移动与算子不交换", f"{x} 颜色 {j} 算子 {op}")
    return _ok("z 移动是保持颜色的自同构")


# ---- tensor ----

@check("tensor", "binary_equals_signature")
def _check_binary_signature(ctx: SuiteContext) -> Outcome:
    compared = 0
    for spec in ctx.specs(TENSOR_SPECS):
        for x in ctx.component(spec).elements():
            for i in range(spec.rank + 1):
                if binary_f(i, x.factors) != signature_f(i, x.factors):
                    return _fail("二元规则与符号规则的 f̃ 不一致", f"{x} 颜色 {i}")
                if binary_e(i, x.factors) != signature_e(i, x.factors):
                    return _fail("二元规则与符号规则的 ẽ 不一致", f"{x} 颜色 {i}")
                compared += 1
    return _ok(f"比较了 {compared} 个 (元素, 颜色)")


def _flat_label(x: TensorElement) -> str:
    return x.flatten().encode()


@check("tensor", "associativity")
def _check_associativity(ctx: SuiteContext) -> Outcome:
    cases = [(1, (1, 1, 1)), (2, (1, 2, 1)), (2, (1, 1, 2))]
    for n, heights in cases:
        if n > ctx.max_rank:
            continue
        a, b, c = (u_varpi(n, h) for h in heights)
        left = ctx.explore(TensorElement((TensorElement((a, b)), c)), ctx.window())
        right = ctx.explore(TensorElement((a, TensorElement((b, c)))), ctx.window())
        if {_flat_label(x) for x in left.elements()} != {_flat_label(x) for x in right.elements()}:
            return _fail("重新加括号后节点集不同", f"n={n}, heights={heights}")
        if left.edge_set(_flat_label) != right.edge_set(_flat_label):
            return _fail("重新加括号后边集不同", f"n={n}, heights={heights}")
    return _ok("(B1⊗B2)⊗B3 ≅ B1⊗(B2⊗B3)")


@check("tensor", "string_length_identity")
def _check_string_length_identity(ctx: SuiteContext) -> Outcome:
    for spec in ctx.specs(TENSOR_SPECS):
        for x in ctx.component(spec).elements():
            if len(x.factors) < 2:
                continue
            b1, b2 = TensorElement(x.factors[:-1]), x.factors[-1]
            for i in range(spec.rank + 1):
                expected = b1.epsilon(i) + max(0, b2.epsilon(i) - b1.phi(i))
                length, current = 0, x.e(i)
                while current is not None:
                    length += 1
                    current = current.e(i)
                if x.epsilon(i) != expected or length != expected:
                    return _fail("ε(b1⊗b2) 与弦长不一致", f"{x} 颜色 {i}")
    return _ok("ε(b1⊗b2) = ε(b1) + max(0, ε(b2) − φ(b1))")


# ---- weyl ----

def _weyl_elements(ctx: SuiteContext) -> List[Any]:
    elements: List[Any] = []
    for n, i in _kr_cases(ctx):
        elements.extend(ctx.kr_layer(n, i).elements())
    for spec in ctx.specs(TENSOR_SPECS):
        elements.extend(ctx.component(spec).elements())
    return elements


@check("weyl", "involution")
def _check_involution(ctx: SuiteContext) -> Outcome:
    elements = _weyl_elements(ctx)
    for x in elements:
        for i in range(x.rank + 1):
            if s_action(i, s_action(i, x)) != x:
                return _fail("S_i² ≠ id", f"{x} 颜色 {i}")
    return _ok(f"在 {len(elements)} 个元素上 S_i² = id")


@check("weyl", "braid_relations_a2")
def _check_braid(ctx: SuiteContext) -> Outcome:
    if ctx.max_rank < 2:
        return _ok("秩上限小于 2，跳过")
    elements: List[Any] = []
    depth = max(ctx.depth, 3)
    for mults in ((1, 0), (0, 1), (1, 1), (2, 0), (0, 2), (2, 1), (1, 2)):
        elements.extend(ctx.component(LambdaSpec(2, mults), depth).elements())
    if len(elements) < 100:
        return _fail("用于辫关系的元素不足 100 个", len(elements))
    for x in elements:
        for i, j in ((0, 1), (1, 2), (0, 2)):
            left = s_action(i, s_action(j, s_action(i, x)))
            right = s_action(j, s_action(i, s_action(j, x)))
            if left != right:
                return _fail("辫关系不成立", f"{x} (i, j) = ({i}, {j})")
    return _ok(f"在 {len(elements)} 个 A_2^(1) 元素上满足 3 阶辫关系")


@check("weyl", "weight_equivariance")
def _check_weight_equivariance(ctx: SuiteContext) -> Outcome:
    for spec in ctx.specs(EXTREMAL_SPECS):
        for word, element in weyl_orbit(build_u_prime(spec), 3):
            if element.weight() != word.apply(build_u_prime(spec).weight()):
                return _fail("wt(S_w b) ≠ w·wt(b)", f"{word} 作用于 λ={spec}")
    return _ok("wt(S_w b) = w·wt(b)")


# ---- lemma ----

@check("lemma", "translation_lemma")
def _check_translation_lemma(ctx: SuiteContext) -> Outcome:
    for n, i in _kr_cases(ctx):
        word = find_translation_word(n, i)
        u = u_varpi(n, i)
        image = w_action(word, u)
        if image != u.z_shift(-1):
            return _fail("S_{t(α_i)} u_{ϖ_i} ≠ z^{-1} u_{ϖ_i}", f"n={n}, i={i}, w={word}: {image}")
    return _ok("S_{t(α_i)} u_{ϖ_i} = z^{-1} u_{ϖ_i}")


@check("lemma", "unique_varpi_minus_delta")
def _check_unique_element(ctx: SuiteContext) -> Outcome:
    for n, i in _kr_cases(ctx):
        datum = build_affine_a(n)
        target = datum.varpi(i) - datum.delta()
        matches = [
            AffineElement(n, column, -1) for column in kr_columns(n, i)
            if AffineElement(n, column, -1).weight() == target
        ]
        if matches != [u_varpi(n, i).z_shift(-1)]:
            return _fail("权为 ϖ_i − δ 的元素不唯一", f"n={n}, i={i}: {[str(m) for m in matches]}")
    return _ok("权为 ϖ_i − δ 的元素唯一，即 ({1..i}, −1)")


@check("lemma", "word_independence")
def _check_word_independence(ctx: SuiteContext) -> Outcome:
    for n, i in _kr_cases(ctx):
        u = u_varpi(n, i)
        expected = w_action(find_translation_word(n, i), u)
        for word in reduced_words(find_translation_word(n, i)):
            if w_action(word, u) != expected:
                return _fail("不同约化字的作用不一致", f"n={n}, i={i}, w={word}")
    return _ok("同一 Weyl 元素的约化字作用相同")


# ---- extremal ----

@check("extremal", "u_prime_extremal")
def _check_u_prime_extremal(ctx: SuiteContext) -> Outcome:
    for n, i in _kr_cases(ctx):
        if not is_extremal(u_varpi(n, i)).extremal:
            return _fail("u_{ϖ_i} 不是极值元素", f"n={n}, i={i}")
    for spec in ctx.specs(EXTREMAL_SPECS):
        report = is_extremal(build_u_prime(spec))
        if not report.extremal:
            return _fail("u′ 不是极值元素", f"λ={spec}: {report.witness}")
    return _ok("u_{ϖ_i} 与 u′ 都是极值元素")


@check("extremal", "z_shift_invariance")
def _check_extremal_shift_invariance(ctx: SuiteContext) -> Outcome:
    for spec in ctx.specs(TENSOR_SPECS):
        for x in ctx.component(spec).elements():
            verdict = is_extremal(x).extremal
            count = len(x.flatten().factors)
            for pattern in ([1] * count, [(-1) ** p * (p + 1) for p in range(count)]):
                if is_extremal(x.shift_factors(pattern)).extremal != verdict:
                    return _fail("极值判定随 z 移动而改变", f"{x} 移动 {pattern}")
    return _ok("极值判定在 z 移动下不变")


@check("extremal", "extremal_weights_in_orbit")
def _check_extremal_orbit(ctx: SuiteContext) -> Outcome:
    for spec in ctx.specs(LAB_SPECS):
        lab = LevelZeroLab(spec, ctx.window(), ctx.max_schur, ctx.schur_method, graph=ctx.component(spec))
        if not lab.extremal_weights_in_orbit():
            return _fail("极值权不在 Wλ + Zδ 中", f"λ={spec}")
    return _ok("所有极值权都在 Wλ + Zδ 中")


@check("extremal", "orbit_stays_extremal")
def _check_orbit_extremal(ctx: SuiteContext) -> Outcome:
    for spec in ctx.specs(LAB_SPECS):
        for word, element in weyl_orbit(build_u_prime(spec), 4):
            if not is_extremal(element).extremal:
                return _fail("S_w u′ 不是极值元素", f"λ={spec}, w={word}")
    return _ok("S_w u′ 保持极值")


@check("extremal", "non_extremal_witness")
def _check_non_extremal_witness(ctx: SuiteContext) -> Outcome:
    element = TensorElement((AffineElement(1, (2,), 0), AffineElement(1, (1,), 0)))
    report = is_extremal(element)
    if report.extremal or report.witness is None:
        return _fail("内部元素被判为极值", element)
    return _ok(f"{element} 非极值，证据颜色 {report.witness.color}")


# ---- connectivity ----

@check("connectivity", "connected_to_extremal")
def _check_connectivity(ctx: SuiteContext) -> Outcome:
    depth = max(ctx.depth, 2)
    for spec in ctx.specs(LAB_SPECS):
        graph = ctx.component(spec, depth)
        report = connectivity_census(spec, graph)
        if report.undetermined:
            return _fail("存在未确定的元素", f"λ={spec}: {report.undetermined_nodes[:3]}")
        if not report.targets_are_z_shifts:
            return _fail("目标极值元素不是 u′ 的 z 移动", f"λ={spec}: {[str(t) for t in report.targets]}")
        if report.connected != len(graph.expanded_elements()):
            return _fail("连通计数错误", f"λ={spec}")
    return _ok("每个完全展开的元素都连到 u′ 的某个 z 移动")


# ---- schur ----

def _shapes(max_size: int) -> List[Partition]:
    return [rho for size in range(max_size + 1) for rho in partitions_of(size)]


@check("schur", "ssyt_equals_jacobi_trudi")
def _check_ssyt_jt(ctx: SuiteContext) -> Outcome:
    for rho in _shapes(6):
        for m in range(4):
            if schur_ssyt(rho, m) != schur_jacobi_trudi(rho, m):
                return _fail("两种 Schur 展开不一致", f"ρ={rho}, m={m}")
    return _ok("|ρ| <= 6, m <= 3 时 SSYT 与 Jacobi–Trudi 一致")


@check("schur", "vanishing")
def _check_vanishing(ctx: SuiteContext) -> Outcome:
    for rho in _shapes(6):
        for m in range(4):
            if schur_ssyt(rho, m).is_zero() != (rho.length > m):
                return _fail("s_ρ = 0 ⟺ ℓ(ρ) > m 不成立", f"ρ={rho}, m={m}")
    return _ok("s_ρ = 0 ⟺ ℓ(ρ) > m")


@check("schur", "determinant_size_independence")
def _check_size_independence(ctx: SuiteContext) -> Outcome:
    for rho in _shapes(6):
        minimal = rho.transpose().length
        for m in range(4):
            base = schur_jacobi_trudi(rho, m)
            for t in (minimal + 1, minimal + 2):
                if schur_jacobi_trudi(rho, m, t) != base:
                    return _fail("行列式结果依赖阶数", f"ρ={rho}, m={m}, t={t}")
    return _ok("t ∈ {ℓ(ρ′), ℓ(ρ′)+1, ℓ(ρ′)+2} 结果相同")


@check("schur", "degree_symmetry_positivity")
def _check_degree_symmetry(ctx: SuiteContext) -> Outcome:
    for rho in _shapes(6):
        for m in range(1, 4):
            s = schur_ssyt(rho, m)
            if s.is_zero():
                continue
            if s.degrees() != {rho.size} or not s.is_symmetric() or not s.coefficients_nonnegative():
                return _fail("次数、对称性或正性不成立", f"ρ={rho}, m={m}")
    return _ok("齐次、对称、系数非负")


@check("schur", "pieri_rule")
def _check_pieri(ctx: SuiteContext) -> Outcome:
    for rho in _shapes(4):
        for m in range(1, 4):
            left = elementary(1, m) * schur_ssyt(rho, m)
            right = FormalPolynomial.zero(m)
            for bigger in rho.add_box():
                right = right + schur_ssyt(bigger, m)
            if left != right:
                return _fail("e_1 · s_ρ ≠ Σ s_{ρ+□}", f"ρ={rho}, m={m}")
    return _ok("e_1 · s_ρ = Σ s_{ρ+□}")


@check("schur", "c0_enumeration")
def _check_c0_enumeration(ctx: SuiteContext) -> Outcome:
    expected = {
        ((1,), 2): 3,
        ((2,), 2): 4,
        ((0, 0), 3): 1,
    }
    for (caps, max_size), count in expected.items():
        found = enumerate_c0(caps, max_size)
        if len(found) != count:
            return _fail("c_0(λ) 的元素个数错误", f"caps={caps}, max_size={max_size}: {len(found)}")
    return _ok("c_0(λ) 的枚举与手算一致")


# ---- index ----

@check("index", "nonzero_iff_in_c0")
def _check_nonzero_iff(ctx: SuiteContext) -> Outcome:
    for spec in ctx.specs(INDEX_SPECS):
        unrestricted = enumerate_c0([ctx.max_schur] * spec.rank, ctx.max_schur)
        for b_prime in ctx.component(spec).elements():
            for c0 in unrestricted:
                image = phi_image(c0, b_prime, spec, ctx.schur_method)
                if image.realization.is_empty() == c0.fits(spec.caps):
                    return _fail("实现非零 ⟺ c_0 ∈ c_0(λ) 不成立", f"λ={spec}, c0={c0}, b′={b_prime}")
    return _ok("实现非零当且仅当 c_0 ∈ c_0(λ)")


@check("index", "support_weights")
def _check_support_weights(ctx: SuiteContext) -> Outcome:
    for spec in ctx.specs(INDEX_SPECS):
        datum = build_affine_a(spec.rank)
        for image in index_set(spec, ctx.component(spec), ctx.max_schur, method=ctx.schur_method):
            expected = image.element.weight() - datum.delta().scale(image.c0.size)
            projection = image.element.classical_projection()
            for element, coeff in image.realization.items:
                if element.weight() != expected or coeff <= 0:
                    return _fail("支撑元素的权错误", f"({image.c0}, {image.element}) → {element}")
                if element.classical_projection() != projection:
                    return _fail("支撑元素不是 b′ 的阶数移动", element)
    return _ok("支撑元素的权都等于 wt(b′) − |c_0| δ")


@check("index", "canonical_pairs_well_defined")
def _check_canonical_pairs(ctx: SuiteContext) -> Outcome:
    other = (SchurMethod.JACOBI_TRUDI if ctx.schur_method == SchurMethod.SSYT else SchurMethod.SSYT)
    pairs = 0
    for spec in ctx.specs(INDEX_SPECS):
        by_realization: Dict[Any, set] = {}
        by_canonical: Dict[Any, set] = {}
        for image in index_set(spec, ctx.component(spec), ctx.max_schur, method=ctx.schur_method):
            key = canonical_pair(image.c0, image.element, spec)
            # 规范对用另一种 Schur 展开重新计算，必须得到同一个形式和
            recomputed = phi_image(key[0], key[1], spec, other).realization
            if recomputed != image.realization:
                return _fail("规范对的实现与原指标对不同",
                             f"λ={spec}: ({image.c0}, {image.element}) → ({key[0]}, {key[1]})")
            by_realization.setdefault(image.realization, set()).add(key)
            by_canonical.setdefault(key, set()).add(image.realization)
            pairs += 1
        for realization, keys in by_realization.items():
            if len(keys) != 1:
                return _fail("相同实现对应不同的规范对", f"λ={spec}: {realization}")
        for key, realizations in by_canonical.items():
            if len(realizations) != 1:
                return _fail("相同规范对对应不同实现", f"λ={spec}: {key[0]}, {key[1]}")
    return _ok(f"{pairs} 个指标对：实现相同当且仅当规范对相同，且规范对重算的实现一致")


@check("index", "reduced_injective")
def _check_reduced_injective(ctx: SuiteContext) -> Outcome:
    for spec in ctx.specs(INDEX_SPECS):
        seen: Dict[Any, Tuple[PartitionTuple, TensorElement]] = {}
        for image in index_set(spec, ctx.component(spec), ctx.max_schur, reduced=True, method=ctx.schur_method):
            if image.realization in seen:
                first = seen[image.realization]
                return _fail("约化指标集上的实现不单",
                             f"λ={spec}: ({first[0]}, {first[1]}) 与 ({image.c0}, {image.element})")
            seen[image.realization] = (image.c0, image.element)
    return _ok("约化指标集上的实现两两不同")


# ---- harness ----

@check("harness", "mutations_detected")
def _check_mutations(ctx: SuiteContext) -> Outcome:
    undetected = []
    for label, changes in MUTATIONS.items():
        mutated_ctx = SuiteContext(ctx.max_rank, ctx.depth, ctx.max_schur, ctx.node_cap, ctx.max_spread, ctx.schur_method)
        with use_conventions(**changes):
            failures = [
                r for group in MUTATED_GROUPS for r in _run_group(group, mutated_ctx)
                if not r.passed
            ]
        if not failures:
            undetected.append(label)
        else:
            logger.info(f"变异 {label} 被 {len(failures)} 个检查发现，例如 {failures[0].name}")
    if undetected:
        return _fail("变异未被发现", ", ".join(undetected))
    return _ok(f"全部 {len(MUTATIONS)} 个变异都被发现")


def _run_check(group: str, name: str, func: CheckFunc, ctx: SuiteContext) -> CheckResult:
    try:
        passed, detail, counterexample = func(ctx)
    except Exception as e:
        passed, detail, counterexample = False, f"检查抛出异常: {type(e).__name__}", str(e)
    if not passed:
        logger.debug(f"检查失败 [{group}] {name}: {detail} ({counterexample})")
    return CheckResult(name, group, passed, detail, counterexample)


def _run_group(group: str, ctx: SuiteContext) -> List[CheckResult]:
    return [_run_check(g, name, func, ctx) for g, name, func in registered_checks(group)]


def run_acceptance(config: RunConfig, only: Optional[str] = None) -> List[CheckResult]:
    """运行验收检查；only 指定时只运行该分组"""
    ctx = SuiteContext.from_config(config)
    results = [_run_check(g, name, func, ctx) for g, name, func in registered_checks(only)]
    failed = sum(1 for r in results if not r.passed)
    if failed:
        logger.error(f"验收检查: {failed}/{len(results)} 项失败")
    else:
        logger.info(f"验收检查: {len(results)} 项全部通过")
    return results
