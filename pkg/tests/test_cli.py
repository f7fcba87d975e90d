import json

import pytest

from engel_lab import cli


def run(argv, capsys):
    try:
        code = cli.main(argv)
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_normal_form_text(capsys):
    code, out, _ = run(["normal-form", "[z,c1,c2]"], capsys)
    assert code == 0
    assert out.strip() == "1 [z|1,2]"


def test_normal_form_json(capsys):
    code, out, _ = run(["--output", "json", "normal-form", "[z,c1,c2]"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload == {"command": "normal-form", "terms": ["1 [z|1,2]"]}


def test_normal_form_zero(capsys):
    code, out, _ = run(["normal-form", "[z,c1,c1]"], capsys)
    assert code == 0
    assert out.strip() == "0"


def test_classify_single_word(capsys):
    code, out, _ = run(["classify", "[z,c1]"], capsys)
    assert code == 0
    assert out.strip() == "z-small"


def test_classify_rejects_sums(capsys):
    code, _, err = run(["classify", "[[z,c1],[z,c2],c3]"], capsys)
    assert code == 64
    assert "single word" in err


def test_j_member(capsys):
    code, out, _ = run(["j-member", "[z,c1]"], capsys)
    assert code == 0
    assert out.strip() == "false"
    code, out, _ = run(["--output", "json", "j-member", "[z,c1,c1]"], capsys)
    assert code == 0
    assert json.loads(out)["member"] is True


def test_lone_c_rejected(capsys):
    code, _, err = run(["normal-form", "c2"], capsys)
    assert code == 64
    assert "lone c-generator" in err


def test_syntax_error_position(capsys):
    code, _, err = run(["normal-form", "[z,,"], capsys)
    assert code == 64
    assert "line 1, column 4" in err


def test_bad_prime(capsys):
    for p in ("4", "9", "1"):
        code, _, err = run(["--p", p, "j-member", "z"], capsys)
        assert code == 64
        assert "odd prime" in err


def test_dims_jsonl(capsys):
    code, out, _ = run(["dims", "--n", "2"], capsys)
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert all(r["check"] == "dims" and r["pass"] for r in rows)
    assert sum(r["dims"]["quotient"] for r in rows) == 4


def test_dims_requires_positive_n(capsys):
    code, _, _ = run(["dims", "--n", "0"], capsys)
    assert code == 64


def test_verify_small_check(capsys):
    code, out, _ = run(
        ["verify", "--check", "lemma5.1", "--n", "3", "--samples", "5"], capsys
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["check"] == "lemma5.1"
    assert payload["pass"] is True
    assert payload["n"] == 3


def test_verify_prop22_single(capsys):
    code, out, _ = run(["verify", "--check", "prop2.2", "--r", "1"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["r"] == 1
    assert payload["n"] == 4


def test_verify_thm54_single(capsys):
    code, out, _ = run(["verify", "--check", "thm5.4", "--m", "1"], capsys)
    assert code == 0
    assert json.loads(out)["pass"] is True


def test_verify_rejects_oversize_witness(capsys):
    code, _, err = run(["verify", "--check", "thm5.4", "--m", "9"], capsys)
    assert code == 64
    assert "m <= 3" in err


def test_verify_unknown_token(capsys):
    code, _, _ = run(["verify", "--check", "nonsense"], capsys)
    assert code == 64


def test_verify_requires_check(capsys):
    code, _, _ = run(["verify"], capsys)
    assert code == 64


def test_witness_defaults(capsys):
    code, out, _ = run(["witness", "--m", "1"], capsys)
    assert code == 0
    assert json.loads(out)["mode"] == "rowreduce"
    code, out, _ = run(["witness", "--m", "4"], capsys)
    assert code == 0
    assert json.loads(out)["mode"] == "sign"


def test_witness_mode_cap(capsys):
    code, _, err = run(["witness", "--m", "4", "--mode", "rowreduce"], capsys)
    assert code == 64
    assert "rowreduce" in err


def test_missing_subcommand(capsys):
    code, _, _ = run([], capsys)
    assert code == 64


def test_prime_three_accepted(capsys):
    code, out, _ = run(["--p", "3", "j-member", "[z,c1]"], capsys)
    assert code == 0
    assert out.strip() == "false"
