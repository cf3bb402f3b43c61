import itertools
import random
from fractions import Fraction

import pytest

from pfaffian.errors import (
    ChainingError,
    DegenerateDilation,
    DelegationRequired,
    DimensionMismatchError,
    HintRequired,
    InvalidGeneratingFunction,
    InvalidHint,
    NotAdmissibleError,
)
from pfaffian.exterior import CScalar, I, Poly, PolyMap, VarSpace, as_scalar, pullback
from pfaffian.grammar import parse_form, parse_poly
from pfaffian.planner import (
    PARAM,
    SPACE3,
    Curve,
    Plan,
    Strategy,
    dilate_plan,
    dilation,
    dilation_check,
    equivalence_inverse,
    equivalence_map,
    heisenberg_translate,
    legendrian_from_S,
    plan_between,
    plan_generating_std,
    plan_single_curve_sym,
    plan_three_link,
    principal_cube_root_hint,
    residual,
    standard_form,
    standard_space,
    symmetric_form,
)
from pfaffian.samplers import random_poly, random_scalar

SYM = symmetric_form()
STD = standard_form()


def T(text):
    return parse_poly(text, PARAM)


def curve(*comps):
    return PolyMap(PARAM, SPACE3, [T(c) for c in comps])


def pt(*xs):
    return tuple(CScalar(x) if not isinstance(x, CScalar) else x for x in xs)


def random_target(rng, nonzero_x=False):
    x = random_scalar(rng, nonzero=nonzero_x)
    return (x, random_scalar(rng), random_scalar(rng))


class TestResidual:
    def test_cubic_curve(self):
        assert residual(SYM, curve("t", "t^2", "1/3*t^3")).is_zero()

    def test_admissible_line(self):
        rng = random.Random(0)
        for _ in range(10):
            x1, y1, z1 = (str(random_scalar(rng)) for _ in range(3))
            c = curve(f"({x1})*t", f"({y1})*t", f"({z1})")
            assert residual(SYM, c).is_zero()

    def test_non_admissible_witness(self):
        assert residual(STD, curve("t", "t", "t")) == T("t + 1")

    def test_dimension_mismatch(self):
        surf = PolyMap(VarSpace("s,t"), SPACE3, [parse_poly("s", "s,t")] * 3)
        with pytest.raises(DimensionMismatchError):
            residual(SYM, surf)
        with pytest.raises(DimensionMismatchError):
            residual(parse_form("dx", "x,y"), curve("t", "t", "t"))

    def test_curve_rejects_non_admissible(self):
        with pytest.raises(NotAdmissibleError):
            Curve(curve("t", "t", "t"), 0, 1, STD)


class TestSingleCurve:
    def test_unit_target(self):
        c = plan_single_curve_sym((1, 1, 1))
        assert c.info["c"] == -2
        assert c.map.components == (T("t"), T("3*t^2 - 2*t"), T("t^3"))
        assert c.end == pt(1, 1, 1) and c.start == pt(0, 0, 0)

    def test_axis_target(self):
        c = plan_single_curve_sym((1, 0, 0))
        assert c.info["c"] == 0
        assert c.map.components == (T("t"), T("0"), T("0"))

    def test_linear_equation(self):
        c = plan_single_curve_sym((2, 3, 1))
        assert c.info["c"] == Fraction(3, 2)
        assert c.end == pt(2, 3, 1) and c.residual().is_zero()

    def test_swap_fallback(self):
        c = plan_single_curve_sym((0, 2, 5))
        assert c.info["swapped"]
        assert c.end == pt(0, 2, 5) and c.residual().is_zero()

    def test_delegation(self):
        with pytest.raises(DelegationRequired) as err:
            plan_single_curve_sym((0, 0, 1))
        assert err.value.delegate == "plan_three_link"

    def test_random_targets_reached_exactly(self):
        rng = random.Random(3)
        for _ in range(50):
            target = random_target(rng, nonzero_x=True)
            c = plan_single_curve_sym(target)
            assert c.end == target and c.residual().is_zero()


class TestGenerating:
    def test_unit_target(self):
        c = plan_generating_std((1, 1, 1))
        assert (c.info["a"], c.info["b"]) == (5, -3)
        assert c.map.components == (T("t"), T("10*t - 9*t^2"), T("-5*t^2 + 6*t^3"))
        assert c.end == pt(1, 1, 1)

    def test_axis_target(self):
        c = plan_generating_std((1, 0, 0))
        assert (c.info["a"], c.info["b"]) == (0, 0)
        assert c.map.components == (T("t"), T("0"), T("0"))

    def test_determinant_is_minus_x1_to_the_fourth(self):
        s = VarSpace("x1")
        x1 = Poly.var(s, "x1")
        # rows of the system 2a x1 + 3b x1^2 = y1, -a x1^2 - 2b x1^3 = z1
        m = [[2 * x1, 3 * x1 ** 2], [-(x1 ** 2), -2 * x1 ** 3]]
        assert m[0][0] * m[1][1] - m[0][1] * m[1][0] == -(x1 ** 4)

    def test_random_targets(self):
        rng = random.Random(5)
        for _ in range(50):
            target = random_target(rng, nonzero_x=True)
            c = plan_generating_std(target)
            assert c.end == target and c.residual().is_zero()
            # the curve solves the stated linear system
            x1, y1, z1 = target
            a, b = c.info["a"], c.info["b"]
            assert 2 * a * x1 + 3 * b * x1 ** 2 == y1
            assert -a * x1 ** 2 - 2 * b * x1 ** 3 == z1

    def test_y_variant(self):
        c = plan_generating_std((0, 2, 3))
        assert c.info["variable"] == "y"
        assert c.end == pt(0, 2, 3) and c.residual().is_zero()

    def test_delegation(self):
        with pytest.raises(DelegationRequired):
            plan_generating_std((0, 0, 4))


class TestThreeLink:
    def test_vertical_target(self):
        plan = plan_three_link((0, 0, 9), cube_root_hint=3)
        assert len(plan) == 2
        assert plan.links[0].end == pt(3, 9, 9)
        assert plan.links[1].end == pt(0, 0, 9)
        assert plan.verified()

    def test_origin(self):
        assert len(plan_three_link((0, 0, 0))) == 0

    def test_full_three_links(self):
        plan = plan_three_link((1, 2, 9), cube_root_hint=3)
        assert len(plan) == 3 and plan.end == pt(1, 2, 9) and plan.verified()

    def test_hint_required(self):
        with pytest.raises(HintRequired):
            plan_three_link((0, 0, 9))

    def test_invalid_hint(self):
        with pytest.raises(InvalidHint):
            plan_three_link((0, 0, 9), cube_root_hint=2)
        with pytest.raises(InvalidHint):
            plan_three_link((1, 1, 0), cube_root_hint=1)

    def test_negative_and_complex_heights(self):
        plan = plan_three_link((0, 0, -9), cube_root_hint=-3)
        assert plan.verified() and plan.end == pt(0, 0, -9)
        t1 = CScalar(1, 1)
        target = (2, I, t1 ** 3 / 3)
        plan = plan_three_link(target, cube_root_hint=t1)
        assert plan.verified() and plan.end == pt(*target)

    def test_numeric_mode(self):
        plan = plan_three_link((1, 1, 2), numeric=True)
        assert plan.verified()
        assert abs(complex(plan.end[2]) - 2) < 1e-9
        assert principal_cube_root_hint(9) == 3

    def test_plan_rejects_broken_chain(self):
        a = Curve(curve("t", "t^2", "1/3*t^3"), 0, 1, SYM)
        with pytest.raises(ChainingError):
            Plan([a, a], (0, 0, 0), (1, 1, Fraction(1, 3)))


class TestHeisenberg:
    def test_identity(self):
        assert heisenberg_translate((0, 0, 0)) == PolyMap.identity(SPACE3)

    def test_symmetry(self):
        assert pullback(heisenberg_translate((1, 2, 3)), SYM) == SYM

    def test_inverse_on_random_points(self):
        rng = random.Random(17)
        for _ in range(20):
            p = random_target(rng)
            q = random_target(rng)
            Tp = heisenberg_translate(p)
            Tinv = heisenberg_translate(tuple(-c for c in p))
            assert Tinv(Tp(q)) == q and Tp(Tinv(q)) == q
            assert Tp(pt(0, 0, 0)) == p


class TestPlanBetween:
    def test_equal_points(self):
        assert len(plan_between((1, 2, 3), (1, 2, 3))) == 0

    def test_conjugated_single(self):
        plan = plan_between((1, 1, 1), (2, 2, 2), Strategy.SINGLE)
        q = heisenberg_translate((-1, -1, -1))(pt(2, 2, 2))
        assert q == pt(1, 1, 1)
        assert plan.start == pt(1, 1, 1) and plan.end == pt(2, 2, 2) and plan.verified()
        local = plan_single_curve_sym(q)
        assert plan.links[0].map == heisenberg_translate((1, 1, 1)).after(local.map)

    def test_origin_matches_direct(self):
        plan = plan_between((0, 0, 0), (1, 1, 1))
        assert plan.links[0].map == plan_single_curve_sym((1, 1, 1)).map

    def test_generating_strategy(self):
        plan = plan_between((1, 0, 2), (3, 1, 1), "generating")
        assert plan.end == pt(3, 1, 1) and plan.verified() and plan.form == SYM

    def test_errors_propagate(self):
        with pytest.raises(DelegationRequired):
            plan_between((1, 1, 1), (1, 1, 5), "single")
        with pytest.raises(HintRequired):
            plan_between((0, 0, 0), (0, 0, 1), "three_link")

    @pytest.mark.parametrize("strategy", list(Strategy))
    def test_random_pairs(self, strategy):
        rng = random.Random(hash(strategy.value) % 1000)
        for _ in range(15):
            p0 = random_target(rng)
            if strategy is Strategy.THREE_LINK:
                t1 = random_scalar(rng)
                u, v = random_scalar(rng), random_scalar(rng)
                p1 = heisenberg_translate(p0)((u, v, t1 ** 3 / 3))
                plan = plan_between(p0, p1, strategy, cube_root_hint=t1)
            else:
                q = random_target(rng, nonzero_x=True)
                p1 = heisenberg_translate(p0)(q)
                plan = plan_between(p0, p1, strategy)
            assert plan.start == p0 and plan.end == p1
            assert plan.verified() and len(plan) <= 3


class TestEquivalenceTransport:
    def test_phi_relates_the_forms(self):
        assert pullback(equivalence_map(), STD) == SYM
        assert pullback(equivalence_inverse(), SYM) == STD
        assert equivalence_map().after(equivalence_inverse()) == PolyMap.identity(SPACE3)

    def test_std_curves_transport_to_sym(self):
        rng = random.Random(23)
        for _ in range(20):
            c = plan_generating_std(random_target(rng, nonzero_x=True))
            image = c.transformed(equivalence_inverse(), SYM)
            assert image.residual().is_zero()

    def test_sym_curves_transport_to_std(self):
        rng = random.Random(29)
        for _ in range(20):
            c = plan_single_curve_sym(random_target(rng, nonzero_x=True))
            assert c.transformed(equivalence_map(), STD).residual().is_zero()

    def test_phi_itself_does_not_carry_std_to_sym(self):
        c = plan_generating_std((1, 1, 1))
        assert residual(SYM, equivalence_map().after(c.map))


class TestDilation:
    def test_factors(self):
        assert pullback(dilation(1), SYM) == SYM
        assert pullback(dilation(2), SYM) == SYM * 4
        assert pullback(dilation(I), SYM) == -SYM

    def test_zero(self):
        with pytest.raises(DegenerateDilation):
            dilation(0)
        with pytest.raises(DegenerateDilation):
            dilation_check(0)

    @pytest.mark.parametrize("alpha", [2, Fraction(1, 3), I])
    def test_equivariance(self, alpha):
        report = dilation_check(alpha)
        assert report.ok and report.factor == as_scalar(alpha) ** 2
        rng = random.Random(31)
        for _ in range(10):
            target = random_target(rng, nonzero_x=True)
            plan = plan_between((0, 0, 0), target, "single")
            image = dilate_plan(plan, alpha)
            D = dilation(alpha)
            assert image.start == D(plan.start) and image.end == D(plan.end)
            assert image.verified()


class TestLegendrian:
    def test_generating_example(self):
        S = parse_poly("5*x^2 - 3*x^3", "x")
        chart = legendrian_from_S(S, {1}, 1)
        s = VarSpace("x")
        assert chart.map.components == tuple(parse_poly(e, s) for e in
                                             ("x", "10*x - 9*x^2", "-5*x^2 + 6*x^3"))

    def test_zero_function(self):
        chart = legendrian_from_S(parse_poly("0", "x"), {1}, 1)
        assert chart.map.components == tuple(parse_poly(e, "x") for e in ("x", "0", "0"))

    def test_mixed_partition(self):
        chart = legendrian_from_S(parse_poly("x1*y2", "x1,y2"), ({1}, {2}), 2)
        s = VarSpace("x1,y2")
        assert chart.map.components == tuple(parse_poly(e, s) for e in
                                             ("x1", "-x1", "y2", "y2", "0"))

    def test_excluded_variable(self):
        with pytest.raises(InvalidGeneratingFunction):
            legendrian_from_S(parse_poly("x*y", "x,y,z"), {1}, 1)

    def test_fuzz_all_partitions(self):
        rng = random.Random(37)
        for n in (1, 2, 3):
            space = standard_space(n)
            for r in range(n + 1):
                for Iset in itertools.combinations(range(1, n + 1), r):
                    names = [space.names[k - 1] if k in Iset else space.names[n + k - 1]
                             for k in range(1, n + 1)]
                    params = VarSpace(names)
                    for _ in range(4):
                        S = random_poly(rng, params, max_degree=4, max_terms=4)
                        chart = legendrian_from_S(S, set(Iset), n)
                        assert pullback(chart.map, standard_form(n)).is_zero()
