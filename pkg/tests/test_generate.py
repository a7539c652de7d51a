import random
from itertools import combinations

import pytest

from vincat.counting import catalan, fibonacci, motzkin
from vincat.generate import (
    FamilySpec,
    count_avoiders,
    count_avoiders_many,
    gen_catalan,
    gen_family,
    gen_marked_increasing,
    refined_counts,
    stats,
)
from vincat.words import avoids, contains, is_occurrence, parse_pattern, runs


def test_gen_catalan_counts_and_order():
    for n in range(1, 10):
        words = list(gen_catalan(n))
        assert len(words) == catalan(n)
        assert len(set(words)) == len(words)
        assert words == sorted(words)
        assert all(len(w) == n for w in words)
    assert list(gen_catalan(0)) == []


def test_gen_family_no_levels_is_motzkin():
    for n in range(1, 10):
        words = [
            w
            for w in gen_family(n, FamilySpec(alphabet_bound=n, forbid_levels=True))
            if w[0] == 1
        ]
        assert len(words) == motzkin(n - 1)


def test_gen_family_respects_constraints():
    spec = FamilySpec(alphabet_bound=3, required_first=2, required_last=1, avoid="11-2")
    for w in gen_family(5, spec):
        assert w[0] == 2 and w[-1] == 1
        assert max(w) <= 3
        assert all(b <= a + 1 for a, b in zip(w, w[1:]))
        assert avoids(w, "11-2")
    assert list(gen_family(0, FamilySpec(alphabet_bound=2, allow_empty=True))) == [()]
    assert list(gen_family(0, FamilySpec(alphabet_bound=2))) == []
    with pytest.raises(ValueError):
        FamilySpec(alphabet_bound=2, required_first=3)


def test_gen_marked_increasing_counts():
    for n in range(1, 10):
        marked = list(gen_marked_increasing(n))
        assert len(marked) == fibonacci(2 * n - 1)
        assert len(set(marked)) == len(marked)
        for mw in marked:
            assert mw.marks[0]
            assert not any(a and b for a, b in zip(mw.marks, mw.marks[1:]))
            assert len(mw.marks) == len(runs(mw.letters))


def test_stats_spot_values():
    st = stats((1, 2, 3, 4, 2, 3, 3, 2))
    assert st.max_letter == 4
    assert st.last_letter == 2
    assert st.ones_count == 1
    assert st.one_runs == 1
    assert st.has_level
    assert st.first_level_index == 6
    assert st.descent_count == 2
    assert st.descent_tops == (4, 3)
    assert st.smallest_descent_bottom == 2
    flat = stats((1, 1, 1))
    assert flat.one_runs == 1
    assert flat.smallest_descent_bottom is None
    with pytest.raises(ValueError):
        stats(())


def naive_contains(word, pattern):
    pat = parse_pattern(pattern) if isinstance(pattern, str) else pattern
    k = len(pat)
    for picks in combinations(range(1, len(word) + 1), k):
        if is_occurrence(word, pat, picks):
            return True
    return False


def test_contains_matches_naive_matcher():
    patterns = ["2-21", "1-11", "11-2", "21-1", "12-3", "1-2-3", "121", "2-11"]
    for n in range(1, 7):
        for w in gen_catalan(n):
            for p in patterns:
                assert contains(w, p) == naive_contains(w, p), (w, p)
    rng = random.Random(20240811)
    pool = list(gen_catalan(8))
    for w in rng.sample(pool, 60):
        for p in patterns:
            assert contains(w, p) == naive_contains(w, p), (w, p)


def test_count_avoiders_and_many_agree():
    patterns = ["2-21", "12-2", "1-11"]
    for n in range(1, 8):
        many = count_avoiders_many(n, patterns)
        for p, c in zip(patterns, many):
            assert c == count_avoiders(n, p)


def test_refined_counts_sum_to_total():
    grouped = refined_counts(7, "2-21", ("max_letter", "last_letter"))
    assert sum(grouped.values()) == count_avoiders(7, "2-21")
    assert all(a <= m for m, a in grouped)
    with pytest.raises(KeyError):
        refined_counts(4, "2-21", ("no_such_stat",))
