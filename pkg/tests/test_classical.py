from fractions import Fraction as F

import pytest

from tripmaps.classical import (
    ClassicalMapId,
    builtin_combo,
    classical_step,
    guting_digits,
    guting_matrix,
    guting_matrix_identity,
    region_index_from_combo,
    verify_equivalence,
)
from tripmaps.combo import (
    ComboNode,
    ComboSchedule,
    combo_apply,
    combo_step,
    forced_node,
    region_vertices,
    schedule_matrix,
    trip_node,
)
from tripmaps.engine import a1_matrix, b_matrix, build_trip_map, trip_sequence
from tripmaps.errors import NoRuleMatched, PointOutsideDomain
from tripmaps.exact import IntMatrix, Permutation

from conftest import field_root

M = IntMatrix.of

BRUN_1 = M([[1, 1, 0], [1, 1, 1], [2, 1, 1]])
BRUN_2 = M([[1, 0, 0], [1, 1, 0], [2, 1, 1]])
BRUN_3 = M([[1, 0, 0], [2, 1, 0], [2, 1, 1]])
BRUN_4 = M([[1, 1, 0], [2, 1, 0], [2, 1, 1]])
FS_5 = M([[1, 0, 0], [1, 1, 0], [2, 2, 1]])
FS_6 = M([[1, 1, 1], [1, 0, 0], [2, 2, 1]])
FS_7 = M([[1, 0, 0], [2, 1, 1], [2, 2, 1]])
FS_8 = M([[1, 1, 1], [2, 1, 1], [2, 2, 1]])


def transposed_regions(map_id):
    return {path: v.T for path, v in region_vertices(builtin_combo(map_id).rules[0]).items()}


class TestFixtures:
    def test_brun_regions(self):
        assert transposed_regions("brun") == {(0,): BRUN_1, (1, 1): BRUN_3, (1, 0): BRUN_4}

    def test_brun_first_split(self):
        b = b_matrix(3)
        assert (b @ a1_matrix(3)).T == BRUN_2

    def test_fully_subtractive_regions(self):
        assert transposed_regions("fully-subtractive") == {(0,): FS_5, (1, 1): FS_8, (1, 0): FS_7}

    def test_fully_subtractive_first_split(self):
        m = build_trip_map("((1 2 3),e,e)")
        assert (m.b @ m.f1).T == FS_6

    def test_monkemeyer_is_single_map(self):
        sched = builtin_combo("monkemeyer")
        assert len(sched.rules) == 1
        assert str(sched.rules[0].map.triple) == "(e,(1 3 2),(2 3))"

    def test_monkemeyer_region_matrices(self):
        m = build_trip_map("(e,(1 3 2),(2 3))")
        assert (m.b @ m.f0_inv @ m.b_inv).T == M([[0, 1, 0], [1, 0, 1], [0, -1, -1]])
        assert (m.b @ m.f1_inv @ m.b_inv).T == M([[1, 0, 0], [0, 1, 1], [-1, 0, -1]])

    def test_monkemeyer_trip_map_is_acceleration(self):
        x, y = F(1, 2), F(1, 4)
        node = builtin_combo("monkemeyer").rules[0]
        one_step = combo_step((x, y), node)[0]
        assert one_step == classical_step("monkemeyer", (x, y)).image == (F(2, 3), F(1, 3))


class TestClassicalStep:
    def test_brun_branch_two(self):
        # x = 1/2 sits on the shared boundary; both x-branches give (1, 1/2)
        assert classical_step(ClassicalMapId.BRUN, (F(1, 2), F(1, 4))).image == (F(1), F(1, 2))
        s = classical_step(ClassicalMapId.BRUN, (F(3, 5), F(1, 5)))
        assert s.image == (F(2, 3), F(1, 3)) and s.case == 1

    def test_monkemeyer(self):
        assert classical_step("monkemeyer", (F(1, 2), F(1, 4))).image == (F(2, 3), F(1, 3))

    def test_guting(self):
        s = classical_step("guting", (F(5, 12), F(1, 4)))
        assert (s.digits.a, s.digits.b) == (2, 0)
        assert s.image == (F(3, 5), F(2, 5))

    def test_guting_digit_inequalities(self):
        x, y = F(2, 9), F(1, 7)
        d = guting_digits(x, y)
        assert 1 - d.a * x >= 0 > 1 - (d.a + 1) * x
        assert 1 - d.a * x - d.b * y >= 0 > 1 - d.a * x - (d.b + 1) * y

    def test_outside(self):
        with pytest.raises(PointOutsideDomain):
            classical_step("brun", (F(3, 2), F(1, 4)))

    def test_parse_names(self):
        assert ClassicalMapId.parse("Mönkemeyer") is ClassicalMapId.MONKEMEYER
        assert ClassicalMapId.parse("Güting") is ClassicalMapId.GUTING
        with pytest.raises(ValueError):
            ClassicalMapId.parse("jacobi-perron")


class TestEquivalence:
    @pytest.mark.parametrize("name", ["brun", "monkemeyer", "fully-subtractive", "guting"])
    def test_zero_mismatches(self, name):
        report = verify_equivalence(name, 500, seed=7)
        assert report.passed and report.samples == 500

    def test_region_index_matches_case(self):
        leaf_of_case = {0: (1, 1), 1: (1, 0), 2: (0,)}
        for (x, y), case in [((F(1, 3), F(1, 4)), 0), ((F(3, 5), F(1, 5)), 1), ((F(3, 5), F(1, 2)), 2)]:
            assert classical_step("brun", (x, y)).case == case
            assert region_index_from_combo("brun", (x, y)) == leaf_of_case[case]


class TestGuting:
    @pytest.mark.parametrize("a,b", [(1, 0), (2, 3), (3, 1)])
    def test_examples(self, a, b):
        assert guting_matrix_identity(a, b)

    def test_direct_product(self):
        # independent evaluation of the right-hand side for (a, b) = (2, 3)
        b_, a0, a1 = b_matrix(3), build_trip_map("(e,e,e)").f0, a1_matrix(3)
        swap = Permutation.parse("(2 3)", 3).matrix()
        w = a0.inverse() @ a1.inverse() @ a1.inverse() @ a1.inverse()
        s = (a1 @ swap).inverse()
        rhs = (b_ @ w @ s @ s @ b_.inverse()).T
        assert rhs == guting_matrix(2, 3) == M([[0, 0, 1], [1, 0, -2], [0, 1, -3]])

    def test_bad_digits(self):
        with pytest.raises(ValueError):
            guting_matrix_identity(0, 1)


class TestCombo:
    def test_brun_schedule_first_step(self):
        run = combo_apply((F(1, 2), F(1, 4)), builtin_combo("brun"), 1)
        assert run.orbit[0] == (F(1), F(1, 2))
        # on x = 1/2 the tie goes to the F_1 child of the second split
        assert run.records[0].path == (1, 1)

    def test_single_rule_is_trip_sequence(self):
        p = (F(13, 17), F(5, 17))
        run = combo_apply(p, ComboSchedule((trip_node("(e,e,e)"),)), 20)
        seq = trip_sequence(p, "(e,e,e)", 20)
        assert tuple(r.k for r in run.records) == seq.digits
        assert run.orbit == seq.orbit and run.termination == seq.termination

    def test_step_matrix_powers(self):
        m1 = schedule_matrix([forced_node("(e,(1 3 2),(1 3 2))", 1)])
        assert m1 == M([[1, 0, 0], [-1, 1, 0], [0, 0, 1]])
        assert m1**3 == M([[1, 0, 0], [-3, 1, 0], [0, 0, 1]])
        # B full k=1 steps before (e,e,e) give -(B+1) in the middle row
        assert schedule_matrix([forced_node("(e,(1 3 2),(1 3 2))", 1), forced_node("(e,e,e)", 2)]) == M(
            [[0, 0, 1], [1, 0, -2], [0, 1, -2]]
        )

    @pytest.mark.parametrize("a,b", [(1, 1), (0, 1), (2, 3), (3, 2)])
    def test_combined_schedule_fixes_cubic(self, a, b):
        alpha = field_root(f"x^3+{a}x^2+{b}x-1").gen()
        rules = [forced_node("(e,(1 3 2),(1 3 2))", 1)] * (b - 1) + [forced_node("(e,e,e)", a)]
        sched = ComboSchedule(tuple(rules))
        run = combo_apply((alpha, alpha * alpha), sched, len(rules))
        assert run.orbit[-1] == (alpha, alpha * alpha)
        assert schedule_matrix(rules) == M([[0, 0, 1], [1, 0, -b], [0, 1, -a]])

    def test_no_rule_matched(self):
        node = ComboNode(build_trip_map("(e,e,e)"), on0="terminal", on1="terminal")
        with pytest.raises(NoRuleMatched):
            from tripmaps.combo import step_from_local

            step_from_local((F(-1), F(0), F(0)), node)

    def test_guting_has_no_combo(self):
        with pytest.raises(ValueError):
            builtin_combo("guting")
