import json

import pytest

from yarts.cli import argument_parser, get_version, main


def run(capsys, *args):
    with pytest.raises(SystemExit) as e:
        main([*args, "-q", "--no-cache"])
    out, err = capsys.readouterr()
    return e.value.code, out, err


def test_version():
    assert isinstance(get_version(), str)


def test_command_is_required():
    with pytest.raises(SystemExit) as e:
        argument_parser().parse_args([])
    assert e.value.code == 2


def test_parameter_errors_exit_2(capsys):
    code, _, err = run(capsys, "check", "--family", "dB", "--p", "3", "--b", "g")
    assert code == 2
    assert "for all b when q=3" in err


def test_missing_family(capsys):
    code, _, err = run(capsys, "build", "--p", "3")
    assert code == 2
    assert "family is required" in err


def test_build_json(capsys):
    code, out, _ = run(capsys, "build", "--family", "dA", "--p", "3", "--a", "g", "--json-only")
    assert code == 0
    report = json.loads(out)
    assert report["command"] == "build"
    assert report["schema_version"] == 1
    assert report["spec"]["family"] == "dA"
    assert report["field"]["p"] == 3
    assert report["results"]["graph_shape"] is True


def test_check(capsys):
    code, out, _ = run(capsys, "check", "--family", "dA", "--p", "3", "--a", "g", "--json-only")
    assert code == 0
    results = json.loads(out)["results"]
    assert results["condition"]["holds"] is True
    assert results["zero_divisor_free"] is True


def test_nuclei_summary(capsys):
    code, out, _ = run(capsys, "nuclei", "--family", "dA", "--p", "3", "--a", "g")
    assert code == 0
    assert out.startswith("yarts nuclei")
    assert "left: 27" in out
    assert "right: 9" in out


def test_spec_file(capsys, tmp_path):
    path = tmp_path / "spec.json"
    path.write_text(json.dumps({"family": "dA", "p": 3, "a": "g"}))
    output = tmp_path / "report.json"
    code, _, _ = run(capsys, "linset", "--spec", str(path), "-o", str(output))
    assert code == 0
    report = json.loads(output.read_text())
    assert report["results"]["linear_set"]["size"] == 352
    assert report["results"]["weight_spectrum"] == [348, 4, 0]
    assert "spec" not in report["config"]


def test_derive_transpose(capsys):
    code, out, _ = run(capsys, "derive", "--family", "dA", "--p", "3", "--a", "g", "--transpose", "--json-only")
    assert code == 0
    results = json.loads(out)["results"]
    assert results["relation"] == {"coordinate_swap": True}
    assert results["label"] == "dA^T"


def test_lst_needs_exponents(capsys):
    code, _, err = run(capsys, "lst", "--p", "2", "--n", "5", "--s", "1")
    assert code == 2
    assert "--t" in err
