import pytest
from hypothesis import given, strategies as st

from farowords.errors import PatternSyntaxError
from farowords.patterns import (
    Group,
    count_pattern,
    evaluate_statistic,
    occurrences,
    parse_pattern,
    parse_statistic,
    popularity,
)

EXAMPLE_A = "FUDUDFFUDF"
EXAMPLE_B = "FFUDFUUDUUUDDDD"
WORKED_PATH = "FFUUDUUUDDDDFUUDDUD"

paths = st.text(alphabet="FUD", max_size=14)
literals = st.text(alphabet="FUD", min_size=1, max_size=3)


def test_parse_shapes():
    e = parse_pattern("DD(UD)^*UU")
    assert (e.prefix, e.groups, e.suffix) == ("DD", (Group("UD", "*"),), "UU")
    assert parse_pattern("FFF").is_literal
    assert str(parse_pattern("F(UD)^+F")) == "F(UD)^+F"


@pytest.mark.parametrize("text,pos", [("(UD)^*", 0), ("F(UD", 1), ("F(UX)^+", 3), ("F(UD)^?", 5), ("FxU", 1), ("", 0)])
def test_parse_errors_carry_positions(text, pos):
    with pytest.raises(PatternSyntaxError) as exc:
        parse_pattern(text)
    assert exc.value.position == pos


def test_golden_counts():
    assert count_pattern(EXAMPLE_A, "F(UD)^+F") == 2
    assert count_pattern(EXAMPLE_A, "F(UD)^*F") == 3
    assert [count_pattern(EXAMPLE_B, p) for p in ("FF", "DDD", "UD", "UUUU")] == [1, 2, 3, 0]


def test_bare_plus_counts_maximal_runs():
    assert count_pattern("UUFUDUUU", "(U)^+") == 3
    assert count_pattern("UDUDFUD", "(UD)^+") == 2


@given(paths, literals, literals, literals, st.sampled_from("+*"))
def test_group_count_matches_reference_scan(path, y, x, z, q):
    """Reference: after Y, the run of X must not extend left and is taken greedily."""
    expr = f"{y}({x})^{q}{z}"
    want = 0
    for s in range(len(path)):
        if not path.startswith(y, s):
            continue
        pos = s + len(y)
        m = 0
        while path.startswith(x, pos + m * len(x)):
            m += 1
        if (m >= 1 or q == "*") and path.startswith(z, pos + m * len(x)):
            if not (pos >= len(x) and path[pos - len(x):pos] == x):
                want += 1
    assert count_pattern(path, expr) == want


@given(paths, literals)
def test_literal_counts_overlapping_factors(path, lit):
    want = sum(1 for i in range(len(path)) if path.startswith(lit, i))
    assert count_pattern(path, lit) == want


def test_occurrences_report_spans():
    assert occurrences(EXAMPLE_A, "F(UD)^+F") == [(0, 6), (6, 10)]


def test_statistics():
    s = parse_statistic("n - 1 - UU - FF")
    assert evaluate_statistic(WORKED_PATH, s, 11) == 5
    assert evaluate_statistic("FUUDD", "0", 5) == 0
    assert evaluate_statistic("FFUDFUD", "FU + UU + DU", 7) == 2
    assert evaluate_statistic("UDDU", "2 DU", 4) == 2
    with pytest.raises(PatternSyntaxError):
        parse_statistic("UU + - FF")


def test_popularity_sums_counts():
    assert popularity(["FF", "FFF", "UD"], "FF") == 3
