from collections import Counter
from itertools import permutations, product

import pytest

from farowords.classes import (
    SubexcedentStats,
    admissible_tuples,
    alternating_count,
    alternating_faro_permutations,
    closed_form_count,
    derangement_equivalence_check,
    dumont_count_check,
    enumerate_dumont_2143_avoiding,
    enumerate_subexcedent,
    enumerate_twodyck,
    equidistribution_check,
    fibonacci,
    fibonacci_class,
    fibonacci_class_count,
    foata_check,
    involution_equivalence_check,
    is_alternating,
    is_dumont2,
    is_subexcedent,
    nepath_to_2dyck,
    path_pair_check,
    peak_height_check,
    shift_to_one_based,
    stats_histogram,
    subexcedent_count,
    subexcedent_stats,
    subexcedent_to_path_pair,
    ternary_count,
    twodyck_heights,
    twodyck_stats,
)
from farowords.errors import CapExceeded, DomainError
from farowords.paths import catalan
from farowords.words import avoids_classical, is_faro_word


def fmt(ws):
    return {"".join(map(str, w)) for w in ws}


def test_alternating_examples():
    assert fmt(alternating_faro_permutations(4)) == {"2143", "3142"}
    assert alternating_count(0) == 1
    assert [alternating_count(2 * m) for m in range(8)] == [catalan(m) for m in range(8)]
    assert is_alternating((2, 1, 3)) and not is_alternating((1, 2))


@pytest.mark.parametrize("m", range(8))
def test_derangements_coincide_with_alternating(m):
    report = derangement_equivalence_check(m)
    assert report.ok, report.failures[:3]


def test_fibonacci_classes():
    assert fibonacci_class_count(4, "231") == 5
    assert fmt(fibonacci_class(4, "231")) == {"1234", "1243", "1324", "2134", "2143"}
    assert fibonacci_class_count(1, "312") == 1 and fibonacci_class_count(2, "312") == 2
    assert [fibonacci(n) for n in range(1, 7)] == [1, 2, 3, 5, 8, 13]
    with pytest.raises(DomainError):
        fibonacci_class(4, "123")


@pytest.mark.parametrize("n", range(13))
def test_involutions_and_fibonacci_counts(n):
    report = involution_equivalence_check(n)
    assert report.ok, report.failures[:3]


@pytest.mark.parametrize("n", range(10))
def test_foata_class_check(n):
    assert foata_check(n).ok


def brute_subexcedent(n):
    return [w for w in product(range(n), repeat=n)
            if all(w[i] <= i for i in range(n)) and all(w[i] <= w[i + 2] for i in range(n - 2))]


def test_subexcedent_examples():
    assert len(list(enumerate_subexcedent(3))) == 6 == ternary_count(3) * ternary_count(4)
    assert list(enumerate_subexcedent(1)) == [(0,)]
    assert len(list(enumerate_subexcedent(4))) == 21
    assert [ternary_count(n) for n in range(12)] == [1, 1, 1, 2, 3, 7, 12, 30, 55, 143, 273, 728]
    with pytest.raises(DomainError):
        is_subexcedent((1, -1))


@pytest.mark.parametrize("n", range(9))
def test_subexcedent_against_brute_force(n):
    words = list(enumerate_subexcedent(n))
    assert words == brute_subexcedent(n)
    assert len(words) == subexcedent_count(n)
    assert all(is_faro_word(shift_to_one_based(w), max(n, 1)) for w in words)


def test_path_pair_examples():
    po, pe = subexcedent_to_path_pair((0, 0, 1))
    assert po == "ENENNN" and nepath_to_2dyck(po) == "uuudud"
    assert twodyck_heights("uuudud") == [0, 1, 2, 3, 1, 2, 0]
    assert pe == "ENNN"
    assert subexcedent_to_path_pair((0, 0)) == ("ENN", "ENNN")
    with pytest.raises(DomainError):
        subexcedent_to_path_pair((0, 2))


def test_twodyck_stats_examples():
    assert twodyck_stats("uuudud") == (1, 1, 0)
    assert twodyck_stats("uud") == (1, 0, 0)
    assert twodyck_stats("") == (0, 0, 0)
    assert twodyck_stats("uuuudd") == (1, 0, 1)


def test_subexcedent_stats_examples():
    assert subexcedent_stats((0, 0, 1)) == SubexcedentStats(0, 1, 0, 1, 0, 0)
    assert subexcedent_stats((0, 0, 0)) == SubexcedentStats(0, 0, 1, 1, 0, 0)
    for n in range(1, 8):
        s = subexcedent_stats((0,) * n)
        assert s.eOdis == s.oOdis == 0


@pytest.mark.parametrize("n", range(1, 11))
def test_stats_lie_on_the_simplex(n):
    n_o, n_e = (n + 1) // 2, n // 2
    for s in stats_histogram(n):
        assert s.eOdis + s.oOdis + s.aOrpt == n_o - 1
        assert s.eEdis + s.oEdis + s.aErpt == n_e


@pytest.mark.parametrize("n", range(1, 11))
def test_path_pairs(n):
    report = path_pair_check(n)
    assert report.ok, report.failures[:3]


@pytest.mark.parametrize("n", range(1, 11))
def test_equidistribution_and_closed_form(n):
    report = equidistribution_check(n)
    assert report.ok, report.failures[:3]
    assert sum(closed_form_count(n, r) for r in admissible_tuples(n)) == subexcedent_count(n)


def test_swap_symmetry_at_six():
    tri = Counter()
    for s, c in stats_histogram(6).items():
        tri[s[:3]] += c
    assert tri == Counter({(a[2], a[1], a[0]): c for a, c in tri.items()})


def test_closed_form_examples():
    assert sum(closed_form_count(3, r) for r in admissible_tuples(3)) == 6
    with pytest.raises(DomainError):
        closed_form_count(3, (1, 1, 1, 1, 0, 0))


@pytest.mark.parametrize("length", range(13))
def test_peak_height_symmetries(length):
    assert peak_height_check(length).ok


def test_twodyck_enumeration_against_brute_force():
    for length in range(10):
        for end in (0, 1):
            brute = ["".join(s) for s in product("ud", repeat=length)
                     if min(twodyck_heights("".join(s))) >= 0 and twodyck_heights("".join(s))[-1] == end]
            assert sorted(enumerate_twodyck(length, end)) == sorted(brute)


def brute_dumont(n):
    return sorted(p for p in permutations(range(1, 2 * n + 1))
                  if is_dumont2(p) and avoids_classical(p, (2, 1, 4, 3)))


def test_dumont_examples():
    assert [len(list(enumerate_dumont_2143_avoiding(n))) for n in (1, 2, 3)] == [1, 2, 6]
    for n in range(5):
        assert sorted(enumerate_dumont_2143_avoiding(n)) == brute_dumont(n)
    with pytest.raises(CapExceeded):
        list(enumerate_dumont_2143_avoiding(7))


@pytest.mark.parametrize("n", range(1, 6))
def test_dumont_counts(n):
    report = dumont_count_check(n)
    assert report.ok, report.failures[:3]
