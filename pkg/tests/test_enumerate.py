import pytest

from latpath.enumerate import (
    BudgetExceeded,
    base_series,
    count_class,
    generate_paths,
    is_member,
    member_paths,
    precompute_base,
)
from latpath.paths import DYCK, MOTZKIN, SKEW_DYCK, SKEW_MOTZKIN, Path, Pattern, pattern_height
from latpath.series import rational

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430]
MOTZKIN_NUMBERS = [1, 1, 2, 4, 9, 21, 51, 127, 323]
SKEW_DYCK_COUNTS = [1, 1, 3, 10, 36, 137, 543, 2219, 9285]


class TestGeneratePaths:
    def test_size_zero(self):
        assert generate_paths(DYCK, 0) == [Path("", DYCK)]

    def test_catalan(self):
        assert len(generate_paths(DYCK, 3)) == 5

    def test_deterministic_lexicographic_order(self):
        assert [p.steps for p in generate_paths(DYCK, 2)] == ["UDUD", "UUDD"]
        assert [p.steps for p in generate_paths(MOTZKIN, 2)] == ["FF", "UD"]

    @pytest.mark.parametrize(
        "fam,expected",
        [
            (DYCK, CATALAN),
            (MOTZKIN, MOTZKIN_NUMBERS),
            (SKEW_DYCK, SKEW_DYCK_COUNTS),
        ],
    )
    def test_classical_counts(self, fam, expected):
        got = [len(generate_paths(fam, n)) for n in range(len(expected))]
        assert got == expected

    def test_skew_paths_all_valid_once(self):
        paths = generate_paths(SKEW_DYCK, 4)
        assert len(set(paths)) == len(paths) == 36

    def test_budget(self):
        from latpath import enumerate as brute

        brute.clear_caches()
        with pytest.raises(BudgetExceeded):
            generate_paths(DYCK, 8, budget=100)

    def test_budget_env_override(self, monkeypatch):
        from latpath.enumerate import effective_budget

        monkeypatch.setenv("LATPATH_BUDGET", "123")
        assert effective_budget() == 123
        assert effective_budget(77) == 77
        monkeypatch.delenv("LATPATH_BUDGET")
        assert effective_budget() == 5_000_000


class TestIsMember:
    def test_empty_path(self):
        for fam in (DYCK, MOTZKIN, SKEW_DYCK, SKEW_MOTZKIN):
            assert is_member(Path("", fam), Pattern("U"))

    def test_low_arch_before_high_arch_rejected(self):
        assert not is_member(Path("UDUUDD", DYCK), Pattern("U"))

    def test_high_arch_before_low_arch_accepted(self):
        assert is_member(Path("UUDDUD", DYCK), Pattern("U"))

    def test_flat_head_requires_pattern_free_tail(self):
        assert is_member(Path("FUD", MOTZKIN), Pattern("F"))
        assert not is_member(Path("FUFD", MOTZKIN), Pattern("F"))

    def test_left_variants(self):
        assert is_member(Path("UUDL", SKEW_DYCK), Pattern("U"))
        assert is_member(Path("UFL", SKEW_MOTZKIN), Pattern("L"))
        # flat tail after a left return must avoid the pattern above the axis
        assert not is_member(Path("UUDLFUUDD", SKEW_MOTZKIN), Pattern("UU"))


class TestCountClass:
    def test_dyck_up_pattern(self):
        table = count_class(DYCK, Pattern("U"), 8)
        assert table.totals() == [1, 2, 4, 9, 21, 51, 127, 323]

    def test_motzkin_flat_pattern(self):
        table = count_class(MOTZKIN, Pattern("F"), 9)
        assert table.totals() == [1, 2, 4, 8, 17, 36, 78, 170, 374]

    def test_skew_dyck_du(self):
        table = count_class(SKEW_DYCK, Pattern("DU"), 9)
        assert table.totals() == [1, 3, 9, 27, 82, 255, 813, 2655, 8847]

    def test_empty_path_counts_at_level_zero(self):
        table = count_class(DYCK, Pattern("U"), 3)
        assert table.counts[(0, 0)] == 1

    def test_level_gap(self):
        table = count_class(DYCK, Pattern("UUU"), 7)
        assert all(v == 0 for v in table.level(1))
        assert all(v == 0 for v in table.level(2))

    def test_members_at_positive_level_contain_pattern_there(self):
        table = count_class(DYCK, Pattern("UU"), 6)
        for n in range(7):
            for p in member_paths(DYCK, Pattern("UU"), n):
                k = pattern_height(p, Pattern("UU"))
                if k >= 1:
                    assert "UU" in p.steps
        assert table.total(6) == sum(
            c for (m, _k), c in table.counts.items() if m == 6
        )


class TestBaseSeries:
    def test_dyck_uud_level0(self):
        got = base_series(DYCK, Pattern("UUD"), 0, 6)
        assert got.int_coeffs() == [1] * 7

    def test_dyck_uud_level1_empty(self):
        assert base_series(DYCK, Pattern("UUD"), 1, 6).is_zero()

    def test_dyck_uud_level2_matches_rational_form(self):
        # x^2 / ((x-1)(x^2+x-1)) = x^2 / (x^3 - 2x + 1)
        for order in (6, 10):
            got = base_series(DYCK, Pattern("UUD"), 2, order)
            assert got == rational([0, 0, 1], [1, -2, 0, 1], order)

    def test_dyck_duu_level2(self):
        got = base_series(DYCK, Pattern("DUU"), 2, 7)
        assert got.int_coeffs() == [0, 0, 0, 1, 4, 12, 32, 80]
        assert got == rational([0, 0, 0, 1], [1, -4, 4], 7)

    def test_flat_pattern_level1(self):
        got = base_series(MOTZKIN, Pattern("F"), 1, 5)
        assert got.int_coeffs() == [0, 0, 0, 1, 2, 6]

    def test_level_bound(self):
        with pytest.raises(ValueError):
            base_series(DYCK, Pattern("UUD"), 3, 5)

    def test_precompute_is_equivalent(self):
        precompute_base(MOTZKIN, ["UD", "DU"], 7)
        got = base_series(MOTZKIN, Pattern("UD"), 0, 7)
        fresh = count_class(MOTZKIN, Pattern("UD"), 7)
        assert got.int_coeffs() == fresh.level(0)
