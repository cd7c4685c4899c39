from itertools import combinations
from math import comb

import pytest

from farowords.errors import CapExceeded, DomainError
from farowords.genfuncs import (
    NAMES,
    coefficient_table,
    diagonal,
    expand_avoidance,
    expand_distribution,
    expand_named,
    expand_perm_distribution,
    expand_perm_popularity,
    expand_popularity_words,
)
from farowords.oracle import enumeration_oracle
from farowords.verify import perm_popularity_consistency, series_vs_oracle, substitution_checks
from farowords.words import enumerate_faro_words

POPULARITY_ROWS = {
    "21": [0, 1, 2, 7, 14, 38, 76, 187, 374, 874, 1748],
    "12": [0, 1, 4, 11, 26, 62, 134, 303, 634, 1394, 2872],
    "132": [0, 0, 1, 4, 10, 28, 61, 152, 318, 748, 1538],
    "213": [0, 0, 1, 4, 10, 28, 61, 152, 318, 748, 1538],
    "123": [0, 0, 1, 4, 10, 24, 53, 116, 246, 520, 1082],
}


@pytest.mark.parametrize("name", NAMES)
def test_every_closed_form_matches_the_oracle(name):
    report = series_vs_oracle(name, 10 if name[0] in "KL" else 8, 4 if name[0] in "FGH" else None)
    assert report.ok, report.failures[:3]


@pytest.mark.parametrize("name", NAMES)
def test_default_branch_is_a_counting_series(name):
    e = expand_named(name, (10, 5, 10))
    assert e.flipped == []
    assert not e.series.nonnegative_integer_violations()


@pytest.mark.parametrize("p", ["11", "21", "12"])
def test_substitution_identities(p):
    report = substitution_checks(p, 8, 4)
    assert report.ok, report.failures[:3]


@pytest.mark.parametrize("p", ["21", "12", "132", "213", "123"])
def test_popularity_is_derivative_of_distribution(p):
    report = perm_popularity_consistency(p, 12)
    assert report.ok, report.failures[:3]


def test_small_coefficients():
    f21 = expand_distribution("21", (4, 2, 4))
    assert sum(f21.coefficient(4, 2, t) for t in range(5)) == 9
    h21 = expand_avoidance("21", (2, 2))
    assert h21.coefficient(2, 2) == 3
    g = expand_popularity_words("11", (6, 4))
    assert all(g.coefficient(0, k) == 0 for k in range(5))
    k21 = expand_perm_distribution("21", (4, 4))
    assert [k21.coefficient(4, j) for j in range(3)] == [1, 3, 2]


def test_k132_equals_k213():
    assert expand_perm_distribution("132", (10, 10)) == expand_perm_distribution("213", (10, 10))


@pytest.mark.parametrize("p", list(POPULARITY_ROWS))
def test_popularity_rows(p):
    assert expand_perm_popularity(p, 11)[1:] == POPULARITY_ROWS[p]


def test_zero_popularity_patterns():
    for p in ("231", "312", "321"):
        assert all(enumeration_oracle("perm-popularity", p, n) == 0 for n in range(12))


def test_oracle_examples():
    assert enumeration_oracle("popularity", "21", 4, 2) == sum(
        t * enumeration_oracle("distribution", "21", 4, 2, t) for t in range(4))
    assert enumeration_oracle("perm-popularity", "21", 4) == 7
    assert enumeration_oracle("avoidance", "21", 2, 2) == 3
    with pytest.raises(CapExceeded):
        enumeration_oracle("avoidance", "21", 13, 2)
    with pytest.raises(DomainError):
        enumeration_oracle("bogus", "21", 3, 2)


def brute_nary_avoiders(n, p):
    return sum(1 for w in enumerate_faro_words(n, n) if all(
        not all((w[i + a] < w[i + b]) == (p[a] < p[b]) and (w[i + a] == w[i + b]) == (p[a] == p[b])
                for a in range(len(p)) for b in range(len(p)))
        for i in range(n - len(p) + 1)))


def test_diagonal_of_h21():
    d = diagonal(expand_avoidance("21", (10, 10)))
    assert d[1:9] == [comb(2 * n - 1, n) for n in range(1, 9)]
    assert d[1:7] == [brute_nary_avoiders(n, (2, 1)) for n in range(1, 7)]


def test_diagonal_of_h12():
    d = diagonal(expand_avoidance("12", (10, 10)))
    assert d[1:11] == [1, 3] + list(range(3, 11))
    assert d[1:7] == [brute_nary_avoiders(n, (1, 2)) for n in range(1, 7)]


def test_g21_at_two_letters():
    g = expand_popularity_words("21", (13, 2))

    def law(m):
        return comb(m + 3, 3) // 4 if m % 2 else m * (m + 2) * (m + 4) // 24

    assert [g.coefficient(n, 2) for n in range(1, 14)] == [law(m) for m in range(13)]


def test_g11_at_two_letters_counts_sidon_triples():
    g = expand_popularity_words("11", (12, 2))

    def sidon_triples(m):
        # 3-subsets of [1, m] whose pairwise sums a + b (a <= b) are all distinct
        count = 0
        for t in combinations(range(1, m + 1), 3):
            sums = [a + b for i, a in enumerate(t) for b in t[i:]]
            count += len(set(sums)) == len(sums)
        return count

    assert [g.coefficient(n, 2) for n in range(13)] == [sidon_triples(n + 2) for n in range(13)]


def test_coefficient_table_rows():
    rows = coefficient_table(expand_named("F21", (2, 2, 2)).series, "F21")
    assert (2, 2, 1, 1) in rows and all(len(r) == 4 for r in rows)
    rows = coefficient_table(expand_named("L21", (4,)).series, "L21")
    assert rows == [(2, 1), (3, 2), (4, 7)]


def test_unknown_names_and_patterns():
    with pytest.raises(DomainError):
        expand_named("F99")
    with pytest.raises(DomainError):
        expand_distribution("132")
