import json

import pytest

from pathlat.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_f(capsys):
    code, out, _ = run(capsys, "f", "u3d2u3dudud4")
    assert code == 0 and out.strip() == "514"
    code, out, _ = run(capsys, "f", "du3du2d3u2d", "--method", "recursive")
    assert out.strip() == "921"


def test_interval_json(capsys):
    code, out, _ = run(capsys, "interval", "u2du2d3u2d", "u11", "--json")
    assert code == 0
    res = json.loads(out)
    assert set(res) == {"command", "inputs", "value", "method", "elapsed_ms"}
    assert res["command"] == "interval"
    assert res["value"] == "218"
    assert res["inputs"]["lo"] == "u2du2d3u2d"


def test_interval_list(capsys):
    code, out, _ = run(capsys, "interval", "dd", "uu", "--list")
    assert out.split() == ["4", "dd", "du", "ud", "uu"]


def test_stats(capsys):
    code, out, _ = run(capsys, "stats", "dduudududdd", "--json")
    v = json.loads(out)["value"]
    assert v["lv"] == -3 and v["hv"] == -1
    assert v["degree"] == 13
    assert v["low_fill"] == "dduudududdu"


def test_other_commands(capsys):
    assert run(capsys, "vcount", "u2d2u3dudud3", "u2d2u5d5")[1].strip() == "5"
    assert run(capsys, "mobius-power", "dd", "uu", "3")[1].strip() == "-1"
    assert run(capsys, "zeta-power", "dd", "uu", "2")[1].strip() == "4"
    assert run(capsys, "small-multichains", "dd", "uu", "3")[1].strip() == "1"
    assert run(capsys, "enumerate", "7", "--filter", "filling", "--count")[1].strip() == "57"
    assert run(capsys, "enumerate", "4", "--filter", "dyck")[1].split() == ["udud", "uudd"]
    code, out, _ = run(capsys, "f", "u2d2", "--trace", "--json")
    assert json.loads(out)["value"]["count"] == "1"


@pytest.mark.parametrize("seq", ["A000108", "A001405", "A000213"])
def test_oeis(capsys, seq):
    code, out, _ = run(capsys, "oeis", seq, "--upto", "20")
    assert code == 0 and out.startswith("PASS")


def test_selftest_one(capsys):
    code, out, _ = run(capsys, "selftest", "--only", "1")
    assert code == 0 and "[PASS] 1." in out


@pytest.mark.parametrize("argv, code", [
    (["f", "uxd"], 2),
    (["enumerate", "3", "--filter", "nope"], 2),
    (["interval", "ud", "du"], 3),
    (["interval", "u", "uu"], 3),
    (["oeis", "A999999"], 3),
    (["interval", "d8", "u8", "--list", "--cap", "10"], 4),
    (["enumerate", "30"], 4),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_argparse_error_is_parse_exit(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["mobius-power", "dd", "uu", "x"])
    assert exc.value.code == 2
