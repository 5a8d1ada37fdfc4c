import json

from vknots.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_roundtrip(capsys):
    code, out, _ = run(capsys, "parse", "U1+O2+U2+O1+")
    assert code == 0
    assert out.strip() == "O1+U1+O2+U2+"


def test_parse_json(capsys):
    code, out, _ = run(capsys, "parse", "--json", "HOPF")
    assert code == 0
    assert json.loads(out) == {"code": "O1-;U1-", "components": 2, "crossings": 1}


def test_parse_error_exit_2(capsys):
    code, _, err = run(capsys, "parse", "O1+U1-")
    assert code == 2
    assert "mismatched signs" in err


def test_invariant_aip_golden(capsys):
    code, out, _ = run(capsys, "invariant", "--inv", "aip", "O1+O2+U1+U2+")
    assert code == 0
    assert out.strip() == "t - 2 + t^-1"


def test_invariant_fnmk_kprime(capsys):
    code, out, _ = run(capsys, "invariant", "--inv", "fnmk",
                       "--n", "1", "--m", "1", "--k", "1", "KPRIME")
    assert code == 0
    assert out.strip() == "-l2^4 + 2 - l2^-4"


def test_invariant_span_hopf(capsys):
    code, out, _ = run(capsys, "invariant", "--inv", "span", "HOPF")
    assert code == 0
    assert out.strip() == "-1"


def test_invariant_json_poly(capsys):
    code, out, _ = run(capsys, "invariant", "--inv", "aip", "--json", "VTREF")
    assert code == 0
    assert json.loads(out) == {
        "vars": ["t"],
        "terms": [
            {"coef": 1, "exp": [1]},
            {"coef": -2, "exp": [0]},
            {"coef": 1, "exp": [-1]},
        ],
    }


def test_invariant_precondition_exit_3(capsys):
    code, _, err = run(capsys, "invariant", "--inv", "aip", "HOPF")
    assert code == 3
    assert "knot diagram" in err


def test_smooth_subcommand(capsys):
    code, out, _ = run(capsys, "smooth", "--type", "3", "--at", "1", "HOPF")
    assert code == 0
    assert out.strip() == "0"
    code, out, _ = run(capsys, "smooth", "--type", "2", "--at", "1", "O1+U1+")
    assert out.strip() == "0;0"
    code, _, err = run(capsys, "smooth", "--type", "1", "--at", "1", "HOPF")
    assert code == 3


def test_move_list_and_apply(capsys):
    code, out, _ = run(capsys, "move", "--list", "O1+U1+")
    assert code == 0
    assert "R1-delete" in out
    code, out, _ = run(capsys, "move", "--apply", "0", "O1+U1+")
    assert code == 0
    assert out.strip() == "0"


def test_verify_pass_and_determinism(capsys):
    args = ("verify", "--inv", "aip,djn(1),djnm(1,1)", "--steps", "20",
            "--seed", "5", "K431")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    assert "RESULT PASS" in out1
    assert out1.count("PASS") == 4  # three invariants + RESULT line


def test_verify_unknot_all(capsys):
    code, out, _ = run(capsys, "verify", "--inv", "all", "--steps", "10",
                       "--seed", "3", "--max-crossings", "6", "UNKNOT")
    assert code == 0
    assert "RESULT PASS" in out


def test_distinguish_kishino_unknot(capsys):
    code, out, _ = run(capsys, "distinguish", "KISHINO", "UNKNOT")
    assert code == 0
    assert out.startswith("DISTINCT")


def test_distinguish_vk_pair(capsys):
    for spec in ("ftilde(2,2,0)", "ftilde(2,2,2)"):
        code, out, _ = run(capsys, "distinguish", "--inv", spec, "VK3", "VK4")
        assert code == 0
        assert out.startswith("DISTINCT via ftilde")


def test_distinguish_equivalent_inconclusive(capsys):
    from vknots import serialize
    from vknots.moves import random_walk
    from conftest import named

    moved = serialize(random_walk(named("VTREF"), 25, 9, 9))
    code, out, _ = run(capsys, "distinguish", "VTREF", moved)
    assert code == 1
    assert out.strip() == "INCONCLUSIVE"


def test_batch(capsys, tmp_path):
    cat = tmp_path / "cat.tsv"
    cat.write_text(
        "# demo catalog\nvt\tO1+O2+U1+U2+\thello\nhopf\tO1-;U1-\n",
        encoding="utf-8",
    )
    code, out, _ = run(capsys, "batch", "--inv", "aip,span", str(cat))
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "vt\taip=t - 2 + t^-1\tspan=-"
    assert lines[1] == "hopf\taip=-\tspan=-1"


def test_input_from_file(capsys, tmp_path):
    f = tmp_path / "knot.gauss"
    f.write_text("# the virtual trefoil\nO1+O2+U1+U2+\n", encoding="utf-8")
    code, out, _ = run(capsys, "invariant", "--inv", "aip", str(f))
    assert code == 0
    assert out.strip() == "t - 2 + t^-1"
