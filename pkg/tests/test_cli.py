import json

import pytest

from gapsym.cli import main


def run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_analyze_json(capsys):
    code, rep = run_json(capsys, ["analyze", "--alpha", "7", "--beta", "8"])
    assert code == 0
    assert rep["conductor"] == 42 and rep["genus"] == 21
    assert rep["sg"]["side"] == "T_r"
    assert rep["sg"]["values"] == [5, 6, 13]
    assert rep["ssg"]["values"] == [4, 12, 20]
    assert rep["partition"] == {
        "t_u": 6, "s_alpha_t_u": 6, "ssg": 3, "t_r": 3, "s_beta_t_r": 3,
    }
    assert rep["counts"] == {"sg_ssg": 6, "fg": 10}
    assert len(rep["lattice"]) == 21
    assert rep["lattice"][0] == {"a": 1, "b": 6, "value": 1, "wilf": 5}


def test_analyze_non_coprime_exits_2(capsys):
    assert main(["analyze", "--alpha", "4", "--beta", "6"]) == 2
    assert "coprime" in capsys.readouterr().err


def test_analyze_svg_deterministic(tmp_path):
    p1, p2 = tmp_path / "a.svg", tmp_path / "b.svg"
    assert main(["analyze", "--alpha", "8", "--beta", "13", "--format", "svg", "--out", str(p1)]) == 0
    assert main(["analyze", "--alpha", "8", "--beta", "13", "--format", "svg", "--out", str(p2)]) == 0
    data = p1.read_bytes()
    assert data == p2.read_bytes()
    text = data.decode()
    assert text.startswith("<svg")
    assert ">25<" in text and ">-9<" in text  # cell label and its Wilf number


def test_analyze_svg_layers(tmp_path):
    p = tmp_path / "bare.svg"
    assert main([
        "analyze", "--alpha", "7", "--beta", "8",
        "--format", "svg", "--layers", "grid,values", "--out", str(p),
    ]) == 0
    text = p.read_text()
    assert ">41<" in text and "fill-opacity" not in text


def test_analyze_json_deterministic(capsys):
    main(["analyze", "--alpha", "7", "--beta", "8"])
    first = capsys.readouterr().out
    main(["analyze", "--alpha", "7", "--beta", "8"])
    assert capsys.readouterr().out == first


def test_semimodule_json(capsys):
    code, rep = run_json(
        capsys, ["semimodule", "--gens", "5,7", "--module", "0,9,11,8"]
    )
    assert code == 0
    assert rep["lean"] is True
    assert rep["min_generators"] == [0, 9, 11, 8]
    assert rep["syzygy_generators"] == [14, 16, 18, 15]
    assert rep["conductor"] == 7 and rep["delta"] == 2 and rep["ed"] == 4
    assert rep["wilf"] == 4 * 2 - 7 == 1


def test_semimodule_table_row(capsys):
    code, rep = run_json(
        capsys, ["semimodule", "--gens", "4,6,13", "--module", "0,15"]
    )
    assert code == 0
    assert rep["wilf"] == -2
    assert rep["syzygy_generators"] == [19, 21, 28]


def test_semimodule_counterexample_flags(capsys):
    code, rep = run_json(
        capsys, ["semimodule", "--gens", "10,14,27", "--module", "0,9"]
    )
    assert code == 0
    assert rep["wilf"] == 0
    assert rep["fixed_point"] is False
    assert rep["symmetric"] is False


def test_semimodule_principal(capsys):
    code, rep = run_json(capsys, ["semimodule", "--gens", "7,8", "--module", "7,14"])
    assert code == 0
    assert rep["min_generators"] == [0]
    assert rep["syzygy_generators"] is None
    assert rep["fixed_point"] is None
    assert rep["orbit_cycle_length"] is None


def _write(tmp_path, name, payload):
    p = tmp_path / name
    p.write_text(json.dumps(payload))
    return str(p)


def test_reconstruct_with_pair(tmp_path, capsys):
    path = _write(tmp_path, "in.json", {
        "alpha": 7, "beta": 8,
        "sg_values": [13, 6, 5], "sg_side": "T_r", "ssg_values": [4, 12, 20],
    })
    code, rep = run_json(capsys, ["reconstruct", "--input", path])
    assert code == 0
    assert rep["alpha"] == 7 and rep["beta"] == 8 and rep["inferred"] is False
    assert len(rep["gaps"]) == 21


def test_reconstruct_cells_without_side(tmp_path, capsys):
    path = _write(tmp_path, "in.json", {
        "alpha": 7, "beta": 8,
        "sg_cells": [[5, 1], [6, 1], [5, 2]], "ssg_values": [4, 12, 20],
    })
    code, rep = run_json(capsys, ["reconstruct", "--input", path])
    assert code == 0
    assert rep["gaps"][-1] == 41


def test_reconstruct_infer(tmp_path, capsys):
    path = _write(tmp_path, "in.json", {
        "sg_values": [13, 6, 5], "ssg_values": [4, 12, 20],
    })
    code, rep = run_json(
        capsys, ["reconstruct", "--input", path, "--infer", "--max-beta", "20"]
    )
    assert code == 0
    assert (rep["alpha"], rep["beta"], rep["inferred"]) == (7, 8, True)


def test_reconstruct_malformed_exits_3(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("not json at all")
    assert main(["reconstruct", "--input", str(bad)]) == 3

    path = _write(tmp_path, "keys.json", {"alpha": 7, "beta": 8, "sg_values": [], "ssg_values": [], "bogus": 1})
    assert main(["reconstruct", "--input", path]) == 3

    path = _write(tmp_path, "both.json", {
        "alpha": 7, "beta": 8,
        "sg_values": [5], "sg_cells": [[5, 2]], "ssg_values": [],
    })
    assert main(["reconstruct", "--input", path]) == 3
    capsys.readouterr()


def test_reconstruct_missing_pair_without_infer_exits_3(tmp_path, capsys):
    path = _write(tmp_path, "in.json", {"sg_values": [13, 6, 5], "ssg_values": [4, 12, 20]})
    assert main(["reconstruct", "--input", path]) == 3
    capsys.readouterr()


def test_reconstruct_ambiguous_exits_4(tmp_path, capsys):
    path = _write(tmp_path, "in.json", {"sg_values": [2], "ssg_values": []})
    assert main(["reconstruct", "--input", path, "--infer", "--max-beta", "10"]) == 4
    capsys.readouterr()


def test_survey_small(capsys):
    assert main(["survey", "--max-beta", "12", "--checks", "partition,reconstruct"]) == 0
    out = capsys.readouterr().out
    assert "partition: pairs=" in out and "violations=0" in out


def test_survey_uff_flags_alpha_2(capsys):
    assert main(["survey", "--max-beta", "8", "--checks", "uff"]) == 0
    out = capsys.readouterr().out
    assert "excluded (alpha=2)" in out


def test_survey_unknown_check(capsys):
    assert main(["survey", "--max-beta", "8", "--checks", "nonsense"]) == 3
    capsys.readouterr()


def test_classes(capsys):
    code, rep = run_json(capsys, ["classes", "--gens", "7,8"])
    assert code == 0
    c35 = [c for c in rep["classes"] if c["conductor"] == 35][0]
    assert c35["members"] == [1, 9, 17, 25, 33, 41]
    assert sorted(map(tuple, c35["pairs"])) == [(1, 41), (9, 33), (17, 25)]

    code, rep = run_json(capsys, ["classes", "--gens", "2,3"])
    assert code == 0
    assert rep["classes"] == [
        {"conductor": 0, "members": [1], "pairs": [], "self_symmetric": 1}
    ]


def test_fundamental(capsys):
    code, rep = run_json(capsys, ["fundamental", "--gens", "3,5"])
    assert code == 0
    assert rep["fundamental_gaps"] == [4, 7]
    assert rep["divisor_closure"] == [1, 2, 4, 7]
    assert rep["counts"]["fg"] == 2


def test_gens_gcd_error_exit_2(capsys):
    assert main(["classes", "--gens", "4,6"]) == 2
    capsys.readouterr()


def test_semimodule_invalid_module_exit_3(capsys):
    assert main(["semimodule", "--gens", "7,8", "--module=-5,0"]) == 3
    capsys.readouterr()


def test_usage_error_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["analyze", "--alpha", "7"])
    assert exc.value.code == 2
