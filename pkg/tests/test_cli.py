import csv
import io
import json
import subprocess
import sys

import pytest

from farowords.cli import main
from farowords.genfuncs import expand_named
from farowords.series import MultiSeries


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_enumerate_words():
    code, text = run("enumerate", "--words", "-n", "4", "-k", "2")
    assert code == 0
    assert text.split() == ["1111", "1112", "1121", "1122", "1212", "1222", "2121", "2122", "2222"]


def test_enumerate_json_and_paths():
    code, text = run("enumerate", "--dispersed", "-n", "4", "--format", "json")
    assert code == 0 and len(json.loads(text)) == 6
    code, text = run("enumerate", "--dyck", "-n", "3")
    assert len(text.split()) == 5


def test_map_directions():
    assert run("map", "f", "--arity", "5", "11313232343") == (0, "FFUUDUUUDDDDFUUDDUD\n")
    assert run("map", "f-inv", "--arity", "5", "FFUUDUUUDDDDFUUDDUD") == (0, "11313232343\n")
    assert run("map", "g", "1243576") == (0, "FFUDFUD\n")
    assert run("map", "g-inv", "FFUDFUD") == (0, "1243576\n")
    assert run("map", "foata", "31254") == (0, "32154\n")
    assert run("map", "foata-inv", "32154") == (0, "31254\n")
    assert run("map", "chi", "-k", "3", "112") == (0, "233\n")
    assert run("map", "f", "-k", "2", "-") == (0, "UD\n")


def test_series_popularity_row():
    assert run("series", "L21", "--cap", "11") == (0, "0, 1, 2, 7, 14, 38, 76, 187, 374, 874, 1748\n")


def test_series_csv_header_and_rows():
    code, text = run("series", "F21", "--caps", "4,2,4", "--format", "csv")
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["n", "k", "t", "value"]
    assert sum(int(r[3]) for r in rows[1:] if r[:2] == ["4", "2"]) == 9


def test_series_json_round_trips():
    code, text = run("series", "K123", "--cap", "8", "--format", "json")
    data = json.loads(text)
    caps = tuple(data["caps"]) + (0,) * (3 - len(data["caps"]))
    terms = {tuple(r[:-1]) + (0,) * (4 - len(r)): r[-1] for r in data["coefficients"]}
    assert MultiSeries.from_dict(terms, caps) == expand_named("K123", (8, 8)).series


def test_count_modes():
    assert run("count", "F(UD)^+F", "--path", "FUDUDFFUDF") == (0, "2\n")
    assert run("count", "F(UD)^*F", "--path", "FUDUDFFUDF") == (0, "3\n")
    assert run("count", "n - 1 - UU - FF", "--statistic", "--path", "FFUUDUUUDDDDFUUDDUD", "-n", "11") == (0, "5\n")
    assert run("count", "12", "--word", "11313232343", "--arity", "5") == (0, "5\n")
    assert run("count", "21", "-n", "4", "--perms", "--kind", "popularity") == (0, "7\n")
    code, text = run("count", "21", "-n", "4", "-k", "2", "--format", "csv")
    assert text.splitlines()[0] == "t,count"


def test_classes_subcommand():
    assert run("classes", "dumont", "-n", "3", "--count") == (0, "6\n")
    assert run("classes", "alternating", "-n", "4")[1].split() == ["2143", "3142"]
    code, text = run("classes", "subexcedent-stats", "-n", "3", "--format", "csv")
    assert text.splitlines()[0] == "eOdis,oOdis,aOrpt,eEdis,oEdis,aErpt,count"


def test_oeis_subcommand():
    assert run("oeis", "A000108", "--terms", "1,1,2,5,14")[0] == 0
    assert run("oeis", "A000108", "--terms", "1,1,2,5,15")[0] == 1
    assert run("oeis", "A000001")[0] == 2


def test_verify_suite_passes_and_json():
    code, text = run("verify", "oeis", "--format", "json")
    assert code == 0 and all(r["ok"] for r in json.loads(text)["oeis"])


def test_verify_is_deterministic_across_workers():
    a = run("verify", "bijections", "--format", "json")
    b = run("verify", "bijections", "--format", "json", "--workers", "2")
    assert a == b and a[0] == 0


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["map", "f", "123"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["series", "X1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2
    assert run("count", "12", "-n", "20", "-k", "3")[0] == 2
    assert run("map", "f", "-k", "2", "211")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "farowords", "map", "g", "1243576"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "FFUDFUD\n"
