import pytest

from hookmotzkin.motzkin import (
    all_paths,
    axis_touch_stat,
    count_intervals,
    decompose,
    dyck_paths,
    first_down_stat,
    heights,
    intervals,
    is_motzkin_word,
    leq,
    longevity,
    motzkin_number,
    odd_downrun_dyck_count,
    path_class,
    reassemble,
)

WORKED = "UEDUUEDUDED"


class TestPaths:
    def test_counts(self):
        assert len(all_paths(0)) == 1
        assert len(all_paths(3)) == 4
        assert len(all_paths(4)) == 9

    def test_lexicographic_with_u_d_e(self):
        assert all_paths(3) == ("UDE", "UED", "EUD", "EEE")

    def test_matches_motzkin_numbers(self):
        for n in range(11):
            assert len(all_paths(n)) == motzkin_number(n)

    def test_word_validity(self):
        assert is_motzkin_word("")
        assert is_motzkin_word(WORKED)
        assert not is_motzkin_word("D")
        assert not is_motzkin_word("UU")
        assert not is_motzkin_word("UDX")


class TestDecomposition:
    def test_worked_example(self):
        dec = decompose(WORKED)
        assert dec.letters == "UEUUEUE"
        assert dec.gaps == (0, 1, 0, 0, 1, 1, 1)

    def test_edge_cases(self):
        assert decompose("EEE") == ("EEE", (0, 0, 0))
        assert decompose("UD") == ("U", (1,))

    def test_roundtrip_exhaustive(self):
        for n in range(10):
            for p in all_paths(n):
                assert reassemble(*decompose(p)) == p

    def test_gap_total_is_up_count(self):
        for p in all_paths(8):
            assert sum(decompose(p).gaps) == p.count("U")


class TestLongevity:
    def test_worked_example(self):
        assert longevity(WORKED) == (1, -1, 6, 1, -1, 0, -1)

    def test_simple_cases(self):
        assert longevity("UD") == (0,)
        assert longevity("UED") == (1, -1)

    def test_class(self):
        assert path_class(WORKED) == frozenset({2, 5, 7})
        assert path_class("UD") == frozenset()
        assert path_class("EEE") == frozenset({1, 2, 3})


class TestOrders:
    def test_s_example(self):
        assert leq("S", "UDE", "UED")
        assert not leq("S", "UED", "UDE")

    def test_c_class_mismatch(self):
        assert not leq("C", "EE", "UD")

    def test_t_example(self):
        assert leq("T", "UDE", "UED")

    def test_a_is_equality(self):
        assert leq("A", "UDE", "UDE")
        assert not leq("A", "UDE", "UED")

    def test_length_mismatch_raises(self):
        with pytest.raises(ValueError):
            leq("S", "UD", "UDE")

    def test_unknown_kind_raises(self):
        with pytest.raises(ValueError):
            leq("X", "UD", "UD")

    def test_subposet_chain(self):
        for n in range(7):
            for a in all_paths(n):
                for b in all_paths(n):
                    if leq("T", a, b):
                        assert leq("C", a, b)
                    if leq("C", a, b):
                        assert leq("S", a, b)

    def test_poset_axioms_small(self):
        for n in range(6):
            paths = all_paths(n)
            for kind in ("S", "C", "T", "A"):
                rel = {
                    (a, b) for a in paths for b in paths if leq(kind, a, b)
                }
                for a in paths:
                    assert (a, a) in rel
                for a, b in rel:
                    if a != b:
                        assert (b, a) not in rel
                for a, b in rel:
                    for c in paths:
                        if (b, c) in rel:
                            assert (a, c) in rel


class TestIntervals:
    def test_values(self):
        assert count_intervals(3, "C") == 5
        assert count_intervals(3, "T") == 5

    def test_antichain_is_motzkin(self):
        for n in range(10):
            assert count_intervals(n, "A") == motzkin_number(n)

    def test_bucketing_matches_unpruned(self):
        for n in range(7):
            paths = all_paths(n)
            for kind in ("C", "T"):
                direct = sum(
                    1 for a in paths for b in paths if leq(kind, a, b)
                )
                assert count_intervals(n, kind) == direct

    def test_interval_pairs_are_related(self):
        for a, b in intervals(5, "T"):
            assert leq("T", a, b)


class TestFirstDown:
    def test_conventions(self):
        for n in range(8):
            assert first_down_stat(n, n + 1) == 1
        assert first_down_stat(2, 2) == 1
        for n in range(1, 8):
            assert first_down_stat(n, 1) == 0

    def test_sums_to_motzkin(self):
        for n in range(10):
            assert sum(first_down_stat(n, ell) for ell in range(1, n + 2)) == motzkin_number(n)

    def test_matches_enumeration(self):
        for n in range(9):
            for ell in range(1, n + 2):
                direct = 0
                for p in all_paths(n):
                    first = p.find("D") + 1
                    if first == 0:
                        first = n + 1
                    direct += first == ell
                assert first_down_stat(n, ell) == direct

    def test_range_checked(self):
        with pytest.raises(ValueError):
            first_down_stat(3, 0)
        with pytest.raises(ValueError):
            first_down_stat(3, 5)


class TestAxisTouch:
    def test_small_values(self):
        assert axis_touch_stat(1, 2) == 1
        assert axis_touch_stat(2, 2) == 1
        assert axis_touch_stat(2, 3) == 1

    def test_equidistributed_with_first_down(self):
        for n in range(9):
            for ell in range(1, n + 2):
                assert axis_touch_stat(n, ell) == first_down_stat(n, ell)


class TestOddDownruns:
    def test_values(self):
        assert odd_downrun_dyck_count(0) == 1
        assert odd_downrun_dyck_count(1) == 1
        assert odd_downrun_dyck_count(3) == 2
        assert odd_downrun_dyck_count(4) == 5

    def test_dyck_enumeration_is_catalan(self):
        catalan = [1, 1, 2, 5, 14, 42, 132]
        for k, c in enumerate(catalan):
            assert sum(1 for _ in dyck_paths(k)) == c

    def test_heights_profile(self):
        assert heights("UEDUD") == (1, 1, 0, 1, 0)
