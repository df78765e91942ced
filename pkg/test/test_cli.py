#!/usr/bin/env python3
"""
Tests del CLI, los reportes y la configuración.
"""
import json
import os

import pytest

from folcalc.cli.main import main, run_command
from folcalc.config import Config, load_config
from folcalc.errors import ConfigError, DepthExhaustedError, ParseError
from folcalc.reports import Report, Status

SADDLE = '[foliation]\nomega = "x*dy + (1/2)*y*dx"\n'
NODE = '[foliation]\nomega = "x*dy - 2*y*dx"\n'
RICCATI_TRIPLE = """\
[triple]
omega = "x*dy + dx"
eta = "(1/x + 2/(x*y))*dx + 2/y*dy"
xi = "-2/(x^2*y^2)*dx"
"""
BROKEN_TRIPLE = '[triple]\nomega = "x*dy"\neta = "dy"\nxi = "dx"\n'


# ---- reportes ----

def test_report_exit_codes():
    assert Report(command="classify").exit_code == 0
    assert Report(command="classify", status=Status.CHECK_FAILED).exit_code == 1
    report = Report.from_error("resolve", DepthExhaustedError("sin profundidad"))
    assert report.status == Status.RESOURCE_EXCEEDED
    assert report.exit_code == 3
    assert report.error["code"] == "depth_exhausted"


def test_report_json_and_text():
    report = Report.from_error("classify", ParseError("Símbolo inesperado", 2, 7), warnings=["aviso"])
    data = json.loads(report.to_json())
    assert data["schema_version"] == "1.0"
    assert data["exit_code"] == 2
    assert data["error"]["line"] == 2
    assert Report.from_json(report.to_json()) == report
    text = report.to_text()
    assert text.startswith("classify: invalid_input")
    assert "aviso: aviso" in text


# ---- comandos ----

def test_classify_command(write_doc):
    reports, code = run_command(["classify", write_doc(SADDLE)])
    assert code == 0
    [singularity] = reports[0].result["singularities"]
    assert singularity["class"]["tag"] == "NonDegenerate"
    assert singularity["class"]["subtag"] == "ResonantQMinus"
    assert singularity["class"]["ratio"] == "-1/2"
    assert singularity["linear_part"] == [["-1", "0"], ["0", "1/2"]]
    assert reports[0].inputs_echo["sections"]["foliation"]["omega"] == "x*dy + (1/2)*y*dx"


def test_classify_linear_node(write_doc):
    reports, code = run_command(["classify", write_doc('[foliation]\nomega = "x*dy - (5/7)*y*dx"\n')])
    assert code == 0
    [singularity] = reports[0].result["singularities"]
    assert singularity["class"]["subtag"] == "RationalPositiveReducible"
    assert singularity["class"]["ratio"] == "5/7"


def test_verify_triple_command(write_doc):
    reports, code = run_command(["verify-triple", write_doc(RICCATI_TRIPLE)])
    assert code == 0
    assert reports[0].result["check"]["proj1"]

    reports, code = run_command(["verify-triple", write_doc(BROKEN_TRIPLE, "roto.ini")])
    assert code == 1
    assert reports[0].status == Status.CHECK_FAILED
    assert not reports[0].result["check"]["proj1"]


def test_parse_error_exit_code(write_doc):
    reports, code = run_command(["classify", write_doc('[foliation]\nomega = "dx*dy"\n')])
    assert code == 2
    assert reports[0].error["code"] == "parse_error"
    assert reports[0].error["line"] == 2


def test_resolve_depth_exhausted(write_doc):
    path = write_doc(NODE)
    reports, code = run_command(["resolve", path, "--max-depth", "1"])
    assert code == 3
    assert reports[0].status == Status.RESOURCE_EXCEEDED
    assert reports[0].result["trees"][0]["complete"] is False

    reports, code = run_command(["resolve", path])
    assert code == 0
    assert reports[0].result["trees"][0]["generalized_curve"] is False


def test_gauge_ode_reports_warning():
    reports, code = run_command(["gauge-ode", "--s", "1/(2*y)"])
    assert code == 0
    assert reports[0].result["case"] == "SimplePole"
    assert any("Convenio de signo" in w for w in reports[0].warnings)


def test_riccati_command():
    reports, code = run_command(["riccati", "--p", "x^2 - 1", "--a", "1", "--b", "x"])
    assert code == 0
    result = reports[0].result
    assert result["check"]["proj1"] and result["check"]["proj2"] and result["check"]["proj3"]
    assert sorted(result["invariant_fibers"]) == ["x = -1", "x = 1"]


def test_cs_index_command(write_doc):
    path = write_doc('[foliation]\nomega = "x*dy - (5/3)*y*dx"\n')
    reports, code = run_command(["cs-index", path, "--projective-line"])
    assert code == 0
    assert reports[0].result["indices"][0]["index"] == "5/3"


def test_log_rep_without_representation(write_doc):
    path = write_doc('[foliation]\nomega = "x*dy - (y^2 + 1)*dx"\n[curves]\nf1 = "x"\nf2 = "y"\n')
    reports, code = run_command(["log-rep", path])
    assert code == 1
    assert reports[0].result["representation"] is None


def test_several_files_keep_input_order(write_doc):
    good = write_doc(SADDLE, "a.ini")
    bad = write_doc('[foliation]\nomega = "2*z*dx"\n', "b.ini")
    reports, code = run_command(["classify", good, bad, good])
    assert [r.inputs_echo["file"] for r in reports] == [good, bad, good]
    assert [r.exit_code for r in reports] == [0, 2, 0]
    assert code == 2


def test_missing_file_is_invalid_input(tmp_path):
    reports, code = run_command(["classify", str(tmp_path / "nada.ini")])
    assert code == 2
    assert reports[0].error["code"] == "document_error"


def test_missing_subcommand():
    with pytest.raises(SystemExit):
        run_command([])


# ---- salida ----

@pytest.mark.parametrize("before", [True, False])
def test_main_prints_json(before, write_doc, capsys):
    path = write_doc(SADDLE)
    argv = ["--json", "classify", path] if before else ["classify", path, "--json"]
    code = main(argv)
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["command"] == "classify"
    assert data["exit_code"] == 0


def test_main_prints_list_for_several_files(write_doc, capsys):
    path = write_doc(SADDLE)
    assert main(["classify", path, path, "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert isinstance(data, list) and len(data) == 2


def test_main_prints_text(write_doc, capsys):
    assert main(["classify", write_doc(SADDLE)]) == 0
    assert capsys.readouterr().out.startswith("classify: ok")


# ---- configuración ----

def test_default_configuration():
    config = load_config()
    assert config["MAX_DEPTH"] == 32
    assert config["DEG_BOUND"] == 8
    assert config["HOLONOMY_METHOD"] == "DOP853"


def test_environment_overrides(monkeypatch, write_doc):
    monkeypatch.setenv("FOLCALC_DEG_BOUND", "3")
    Config.reload()
    assert Config.get("DEG_BOUND") == 3

    monkeypatch.setenv("FOLCALC_MAX_DEPTH", "1")
    reports, code = run_command(["resolve", write_doc(NODE)])
    assert code == 3
    assert reports[0].inputs_echo["config"] is None


def test_config_file_sets_max_depth(tmp_path, write_doc):
    config = tmp_path / "folcalc.yaml"
    config.write_text("MAX_DEPTH: 1\n", encoding="utf-8")
    reports, code = run_command(["resolve", write_doc(NODE), "--config", str(config)])
    assert code == 3
    assert reports[0].inputs_echo["config"] == str(config)
    assert Config.get_config_path() == str(config)


def test_invalid_config_files(tmp_path):
    bad = tmp_path / "malo.yaml"
    bad.write_text("MAX_DEPTH: 0\n", encoding="utf-8")
    with pytest.raises(ConfigError):
        Config.initialize(str(bad))

    unknown = tmp_path / "otro.json"
    unknown.write_text('{"COLOR": "rojo"}', encoding="utf-8")
    with pytest.raises(ConfigError):
        Config.initialize(str(unknown))


def test_bad_config_option_gives_exit_two(tmp_path):
    reports, code = run_command(["gauge-ode", "--s", "y", "--config", str(tmp_path / "no.yaml")])
    assert code == 2
    assert reports[0].error["code"] == "config_error"


# ---- ejemplos de knowledge/ ----

EXAMPLES = os.path.join(os.path.dirname(__file__), os.pardir, "knowledge", "ejemplos")


@pytest.mark.parametrize("argv, expected", [
    (["classify", "silla_resonante.ini"], 0),
    (["resolve", "nodo_resonante.ini"], 0),
    (["resolve", "nodo_resonante.ini", "--max-depth", "1"], 3),
    (["cs-index", "indices.ini", "--projective-line"], 0),
    (["log-rep", "indices.ini"], 0),
    (["verify-triple", "terna_riccati.ini"], 0),
    (["modify-triple", "terna_riccati.ini", "--h=-2/(x*y)"], 0),
    (["riccati-reduce", "reduccion_riccati.ini"], 0),
    (["bernoulli", "bernoulli.ini"], 0),
])
def test_example_documents(argv, expected):
    command, name, *rest = argv
    _, code = run_command([command, os.path.join(EXAMPLES, name), *rest])
    assert code == expected
