import itertools

import pytest

from hookmotzkin.perm import avoiders, descents, lr_maxima, normalize
from hookmotzkin.vhc import (
    Hook,
    HookConfig,
    abundancy,
    count_vhcs,
    count_vhcs_of_class,
    enumerate_vhcs,
    is_tail_bound,
    open_sites,
    split_at_hook,
    sw_hooks,
    tail_refined_count,
    validate,
)

P132, P231, P312, P321 = (1, 3, 2), (2, 3, 1), (3, 1, 2), (3, 2, 1)
PI_FIG = (3, 1, 4, 2, 5, 6, 7)


class TestValidate:
    def test_known_valid_configuration(self):
        # Two chained hooks on 3142567: (1,3) into (3,5).
        assert validate(HookConfig(PI_FIG, (3, 5)))

    def test_crossing_hooks_rejected(self):
        # (1,5) and (3,6): the second hook's vertical segment crosses the
        # first hook's horizontal segment at (3, 5).
        assert not validate(HookConfig(PI_FIG, (5, 6)))

    def test_shared_ne_endpoint_rejected(self):
        assert not validate(HookConfig((3, 2, 1, 4), (4, 4)))

    def test_point_above_hook_rejected(self):
        # On 132546 the hook (2,5) has height 4 and the point (4,5) sits
        # directly above its horizontal segment; rerouting the first hook
        # to (2,4) chains legally into (4,6).
        pi = (1, 3, 2, 5, 4, 6)
        assert not validate(HookConfig(pi, (5, 6)))
        assert validate(HookConfig(pi, (4, 6)))


    def test_no_hook_for_descent_is_invalid(self):
        # 21: the descent top (1,2) has no higher point to its right.
        assert not validate(HookConfig((2, 1), (2,)))
        assert enumerate_vhcs((2, 1)) == ()

    def test_wrong_hook_count_invalid(self):
        assert not validate(HookConfig(PI_FIG, (3,)))


class TestEnumerate:
    def test_fig_example_has_six(self):
        cfgs = enumerate_vhcs(PI_FIG)
        assert len(cfgs) == 6
        assert [c.ne_of_descent for c in cfgs] == [
            (3, 5), (3, 6), (3, 7), (6, 5), (7, 5), (7, 6),
        ]

    def test_increasing_has_one(self):
        for n in range(6):
            cfgs = enumerate_vhcs(tuple(range(1, n + 1)))
            assert cfgs == (HookConfig(tuple(range(1, n + 1)), ()),)

    def test_decreasing_has_none(self):
        assert enumerate_vhcs((3, 2, 1)) == ()

    def test_lexicographic_order(self):
        for pi in itertools.permutations(range(1, 6)):
            tuples = [c.ne_of_descent for c in enumerate_vhcs(pi)]
            assert tuples == sorted(tuples)

    def test_hook_count_equals_descent_count(self):
        for pi in itertools.permutations(range(1, 7)):
            k = len(descents(pi))
            for cfg in enumerate_vhcs(pi):
                assert len(cfg.ne_of_descent) == k
                for sw, ne in cfg.hooks:
                    assert pi[ne - 1] > pi[sw - 1]

    def test_ne_endpoints_are_lr_maxima_for_av312(self):
        for n in range(9):
            for pi in avoiders(n, [P312]):
                maxima = {p for p, _ in lr_maxima(pi)}
                for cfg in enumerate_vhcs(pi):
                    assert set(cfg.ne_of_descent) <= maxima

    def test_no_config_without_trailing_maximum(self):
        # Value n left of position n caps a descent top that no hook can
        # serve, so only permutations fixing n can carry configurations.
        for n in range(1, 7):
            for pi in itertools.permutations(range(1, n + 1)):
                if pi[-1] != n:
                    assert count_vhcs(pi) == 0


class TestDecomposition:
    def test_tail_bound_product_formula(self):
        # |VHC(pi)| factors through any tail-bound descent.
        for n in range(1, 8):
            for pi in itertools.permutations(range(1, n + 1)):
                for d in descents(pi):
                    if not is_tail_bound(pi, d):
                        continue
                    total = 0
                    for hook in sw_hooks(pi, d):
                        u, s = split_at_hook(pi, hook)
                        total += count_vhcs(normalize(u)) * count_vhcs(normalize(s))
                    assert total == count_vhcs(pi), (pi, d)


class TestCountOfClass:
    def test_av312_values(self):
        assert count_vhcs_of_class(4, [P312]) == 5
        assert count_vhcs_of_class(6, [P312]) == 44

    def test_triple_fibonacci(self):
        assert count_vhcs_of_class(5, [P132, P231, P312]) == 5

    def test_empty_length(self):
        assert count_vhcs_of_class(0, [P312]) == 1


class TestAbundancy:
    def test_open_sites_example(self):
        # 214536 with the hooks (1,3) and (4,6): the northeast endpoints are
        # (3,4) and (6,6), leaving open sites (1,2) and (4,5).
        cfg = HookConfig((2, 1, 4, 5, 3, 6), (3, 6))
        assert validate(cfg)
        assert open_sites(cfg) == ((1, 2), (4, 5))
        assert abundancy(cfg) == 2

    def test_identity(self):
        for n in range(6):
            cfg = HookConfig(tuple(range(1, n + 1)), ())
            assert abundancy(cfg) == n

    def test_invalid_config_rejected(self):
        with pytest.raises(ValueError):
            abundancy(HookConfig((2, 1), (2,)))

    def test_bounds_and_leftmost_open(self):
        for n in range(1, 7):
            for pi in itertools.permutations(range(1, n + 1)):
                for cfg in enumerate_vhcs(pi):
                    ab = abundancy(cfg)
                    assert 1 <= ab <= len(lr_maxima(pi))
                    assert open_sites(cfg)[0] == (1, pi[0])


class TestSplit:
    def test_examples(self):
        assert split_at_hook(PI_FIG, (3, 6)) == ((3, 1, 4, 7), (2, 5))
        assert split_at_hook((2, 1, 3), (1, 3)) == ((2,), (1,))
        assert split_at_hook((2, 1, 4, 3, 5), (1, 5)) == ((2,), (1, 4, 3))

    def test_entry_at_ne_in_neither_part(self):
        u, s = split_at_hook(PI_FIG, (3, 6))
        assert 6 not in u and 6 not in s

    def test_not_a_hook(self):
        with pytest.raises(ValueError):
            split_at_hook((2, 1, 3), (2, 1))
        with pytest.raises(ValueError):
            split_at_hook((2, 1, 3), (1, 2))


class TestTailRefined:
    def test_degenerate_lengths(self):
        for ell in range(5):
            assert tail_refined_count(0, ell, [P132, P231]) == 1
            assert tail_refined_count(1, ell, [P132, P231]) == 0

    def test_small_value(self):
        # Length 3. tail exactly 1: only 213 qualifies.
        assert tail_refined_count(2, 1, [P132, P231]) == 1
