import pytest
from sadic.cli import main
from sadic.dirseq_format import serialize_dirseq
from sadic.presets import negative_family

FIBONACCI_TEXT = "alphabet 0: a b\nmorphism 0:\n  a -> a b\n  b -> a\ntail repeat 1\n"


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_complexity_csv(capsys):
    assert run(capsys, "complexity", "--max", "5") == (0, "n,p,delta\n1,2,1\n2,3,1\n3,4,1\n4,5,1\n5,6,\n")


def test_language_words(capsys):
    assert run(capsys, "language", "--length", "3") == (0, "001\n010\n100\n101\n# exact\n")


def test_right_special(capsys):
    assert run(capsys, "special", "--preset", "thue_morse", "--length", "4") == (0, "0110\n1001\n")


def test_dirseq_file(capsys, tmp_path):
    path = tmp_path / "fibonacci.txt"
    path.write_text(FIBONACCI_TEXT, encoding="utf-8")
    code, out = run(capsys, "complexity", "--dirseq", str(path), "--max", "3")
    assert code == 0
    assert out.splitlines()[1:] == ["1,2,1", "2,3,1", "3,4,"]


def test_out_file(capsys, tmp_path):
    path = tmp_path / "words.txt"
    assert run(capsys, "language", "--length", "2", "--out", str(path)) == (0, "")
    assert path.read_text(encoding="utf-8") == "00\n01\n10\n# exact\n"


def test_pk_sample(capsys):
    assert run(capsys, "pk-sample", "--n", "8", "--n0", "1", "--d", "1", "--ell", "1") == (0, "64\n")
    assert run(capsys, "pk-sample", "--n", "8", "--n0", "1", "--d", "2", "--ell", "1") == (0, "none\n")


def test_negative_family_text(capsys):
    assert run(capsys, "negative-family") == (0, serialize_dirseq(negative_family()))


def test_single_block_family_fails(capsys):
    code, out = run(capsys, "negative-family", "--blocks", "1", "--scales", "1", "--levels", "1", "--kmax", "64", "--verify")
    assert code == 1
    assert "FAIL recognizability" in out
    assert "PASS linear-complexity" in out


def test_verify_suite(capsys):
    assert run(capsys, "verify", "morphisms") == (0, "PASS composition\n")


def test_exhausted_budget_exits_2(capsys):
    assert run(capsys, "--max-depth", "4", "complexity", "--preset", "swap", "--max", "3") == (2, "")


def test_missing_file_exits_2(capsys, tmp_path):
    assert run(capsys, "language", "--dirseq", str(tmp_path / "absent.txt"), "--length", "2") == (2, "")


def test_syntax_error_exits_2(capsys, tmp_path):
    path = tmp_path / "broken.txt"
    path.write_text("morphism 0:\n  0 -> 0 9\n  1 -> 0\n", encoding="utf-8")
    assert run(capsys, "complexity", "--dirseq", str(path), "--max", "3")[0] == 2


def test_unknown_preset_is_a_usage_error():
    with pytest.raises(SystemExit) as excinfo:
        main(["complexity", "--preset", "tribonacci", "--max", "3"])
    assert excinfo.value.code == 2
