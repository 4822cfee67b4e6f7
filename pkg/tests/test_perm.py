import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hookmotzkin.perm import (
    avoiders,
    component_count,
    components,
    contains,
    descents,
    direct_sum,
    is_layered,
    lr_maxima,
    normalize,
    tail_length,
)

P132, P231, P312, P321 = (1, 3, 2), (2, 3, 1), (3, 1, 2), (3, 2, 1)


def contains_by_combinations(sigma, tau):
    """Independent oracle: scan every index subset."""
    tau = normalize(tau)
    return any(
        normalize(sub) == tau
        for sub in itertools.combinations(sigma, len(tau))
    )


distinct_perms = st.lists(
    st.integers(min_value=1, max_value=40), min_size=0, max_size=8, unique=True
).map(tuple)


class TestNormalize:
    def test_examples(self):
        assert normalize((2, 7, 5)) == (1, 3, 2)
        assert normalize((1, 2, 3)) == (1, 2, 3)
        assert normalize((3, 1, 4, 7)) == (2, 1, 3, 4)

    def test_duplicates_rejected(self):
        with pytest.raises(ValueError):
            normalize((1, 2, 2))

    @given(distinct_perms)
    def test_idempotent(self, w):
        assert normalize(normalize(w)) == normalize(w)

    @given(distinct_perms)
    def test_preserves_length(self, w):
        assert len(normalize(w)) == len(w)


class TestContains:
    def test_examples(self):
        assert contains((3, 1, 4, 2, 5, 6, 7), P312)
        assert not contains(tuple(range(1, 9)), (2, 1))
        assert contains((2, 3, 1, 6, 5, 4, 7, 8, 9), (1, 2, 4, 3))

    def test_empty_pattern(self):
        assert contains((), ())
        assert contains((1,), ())

    @given(distinct_perms, st.sampled_from([P132, P231, P312, P321, (1, 2, 4, 3), (2, 1, 4, 3)]))
    @settings(deadline=None)
    def test_matches_combination_scan(self, sigma, tau):
        assert contains(sigma, tau) == contains_by_combinations(sigma, tau)

    def test_monotone_under_subsequences(self):
        sigma = (4, 1, 6, 3, 2, 5)
        for tau in (P132, P231, P312, P321):
            if not contains(sigma, tau):
                for k in range(len(sigma)):
                    for sub in itertools.combinations(sigma, k):
                        assert not contains(sub, tau)


class TestAvoiders:
    def test_counts(self):
        assert len(avoiders(3, [P231])) == 5
        assert len(avoiders(4, [P312])) == 14
        assert avoiders(0, [P231]) == ((),)

    def test_catalan_for_all_single_patterns(self):
        for n in range(8):
            sizes = {len(avoiders(n, [t])) for t in (P132, P231, P312)}
            assert len(sizes) == 1

    def test_lexicographic_order(self):
        out = avoiders(4, [P312])
        assert list(out) == sorted(out)

    def test_multi_pattern_filter_equals_direct_scan(self):
        for n in range(7):
            for pats in ([P231, P321], [P132, P231, P312], [P231, (1, 2, 4, 3)]):
                direct = tuple(
                    p
                    for p in itertools.permutations(range(1, n + 1))
                    if all(not contains(p, t) for t in pats)
                )
                assert avoiders(n, pats) == direct


class TestStatistics:
    def test_descents(self):
        assert descents((3, 1, 4, 2, 5, 6, 7)) == (1, 3)
        assert descents(tuple(range(1, 9))) == ()
        assert descents((3, 2, 1)) == (1, 2)

    def test_tail_length(self):
        assert tail_length((2, 3, 1, 6, 5, 4, 7, 8, 9)) == 3
        for n in range(6):
            assert tail_length(tuple(range(1, n + 1))) == n
        assert tail_length((2, 1)) == 0
        assert tail_length(()) == 0

    def test_tail_length_requires_normalized(self):
        with pytest.raises(ValueError):
            tail_length((2, 5))

    def test_tail_suffix_characterization(self):
        for pi in itertools.permutations(range(1, 6)):
            ell = tail_length(pi)
            n = len(pi)
            assert pi[n - ell :] == tuple(range(n - ell + 1, n + 1))
            if ell < n:
                assert pi[n - ell - 1] != n - ell

    def test_components(self):
        assert components((2, 1, 4, 3, 7, 6, 5)) == ((2, 1), (2, 1), (3, 2, 1))
        assert components((1, 2, 3)) == ((1,), (1,), (1,))
        assert components((3, 2, 1)) == ((3, 2, 1),)
        assert components(()) == ()

    def test_components_reassemble(self):
        for pi in itertools.permutations(range(1, 7)):
            assert direct_sum(*components(pi)) == pi

    def test_component_count_additive(self):
        lam, mu = (2, 1, 3), (1, 3, 2)
        assert component_count(direct_sum(lam, mu)) == component_count(
            lam
        ) + component_count(mu)

    def test_is_layered(self):
        assert is_layered((2, 1, 4, 3, 7, 6, 5))
        assert is_layered((3, 2, 1))
        assert is_layered(())
        assert not is_layered((2, 4, 1, 3))
        assert not is_layered((2, 3, 1, 4))

    def test_layered_iff_avoids_231_312(self):
        for n in range(8):
            layered = {p for p in itertools.permutations(range(1, n + 1)) if is_layered(p)}
            assert layered == set(avoiders(n, [P231, P312]))

    def test_lr_maxima(self):
        assert lr_maxima((2, 3, 1, 6, 5, 4, 7, 8, 9)) == (
            (1, 2), (2, 3), (4, 6), (7, 7), (8, 8), (9, 9),
        )
        assert lr_maxima((4, 3, 2, 1)) == ((1, 4),)
        assert lr_maxima((1, 2, 3)) == ((1, 1), (2, 2), (3, 3))
