import json

import pytest
from click.testing import CliRunner

from skewring import cli, config, suites


GAUSS_Q2 = {
    "ring": {"kind": "gaussian"},
    "twist": {"kind": "q_twist", "q": "2"},
    "shape": "laurent",
    "variable": "X",
}

WEYL = {
    "ring": {
        "kind": "polynomial",
        "base": {"kind": "rationals"},
        "variable": "Y",
        "shape": "ore",
    },
    "twist": {"kind": "identity"},
    "delta": {"kind": "derivative"},
    "shape": "ore",
    "variable": "X",
}

SERIES_Q2 = {
    "ring": {"kind": "gaussian"},
    "twist": {"kind": "q_twist", "q": "2"},
    "shape": "power_series",
    "precision": 4,
    "variable": "X",
}


@pytest.fixture
def runner():
    return CliRunner()


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def test_load_config_builds_rings():
    cfg = config.load_config(GAUSS_Q2)
    assert cfg.ring_config.shape == "laurent"
    assert cfg.digest() == config.load_config(GAUSS_Q2).digest()
    weyl = config.load_config(WEYL)
    x = weyl.ring_config.gen
    y = weyl.ring_config.constant(weyl.ring_config.coefficients.gen)
    assert x * y - y * x == weyl.ring_config.one


def test_load_config_validates():
    bad = dict(GAUSS_Q2, twist={"kind": "q_twist", "q": "0"})
    with pytest.raises(Exception):
        config.load_config(bad)
    with pytest.raises(Exception):
        config.load_config(dict(GAUSS_Q2, shape="power_series"))  # no precision
    with pytest.raises(Exception):
        config.load_config(dict(GAUSS_Q2, shape="spiral"))


def test_load_config_matrix_and_jordan():
    doc = {
        "ring": {"kind": "matrix", "base": {"kind": "rationals"}, "n": 2},
        "twist": {"kind": "diag_swap"},
        "shape": "laurent",
    }
    cfg = config.load_config(doc)
    assert cfg.ring_config.coefficients.n == 2
    jordan_doc = {
        "ring": {"kind": "jordan", "base": {"kind": "quaternions"}},
        "twist": {"kind": "identity"},
        "shape": "laurent",
    }
    cfg2 = config.load_config(jordan_doc)
    assert cfg2.ring_config.coefficients.name == "HH+"


def test_algebra_descriptor_round_trip():
    from skewring import rings
    doc = {
        "ring": {"kind": "algebra", "spec": rings.gaussian().to_json(), "division": True},
        "twist": {"kind": "conjugation"},
        "shape": "laurent",
    }
    cfg = config.load_config(doc)
    assert cfg.ring_config.coefficients == rings.gaussian()


def test_mul_command(runner, tmp_path):
    path = write(tmp_path, "cfg.json", GAUSS_Q2)
    result = runner.invoke(cli.main, ["mul", "--config", path, "iX", "iX^-1"])
    assert result.exit_code == 0
    assert result.output.strip() == "-2"


def test_mul_weyl(runner, tmp_path):
    path = write(tmp_path, "weyl.json", WEYL)
    result = runner.invoke(cli.main, ["mul", "--config", path, "X", "(Y)"])
    assert result.exit_code == 0
    assert result.output.strip() == "1 + (Y)X"


def test_mul_series(runner, tmp_path):
    path = write(tmp_path, "series.json", SERIES_Q2)
    result = runner.invoke(
        cli.main,
        ["mul", "--config", path, "1 + iX + O(X^4)", "1 - iX + O(X^4)"],
    )
    assert result.exit_code == 0
    assert result.output.strip().endswith("+ O(X^4)")


def test_mul_parse_error_exit_2(runner, tmp_path):
    ore = dict(GAUSS_Q2, shape="ore")
    path = write(tmp_path, "ore.json", ore)
    result = runner.invoke(cli.main, ["mul", "--config", path, "X^-1", "X"])
    assert result.exit_code == 2
    assert "negative exponent" in result.output


def test_reduce_command(runner, tmp_path):
    ore = dict(GAUSS_Q2, shape="ore")
    cfg_path = write(tmp_path, "cfg.json", ore)
    gens_path = write(tmp_path, "gens.json", ["X - i"])
    result = runner.invoke(
        cli.main,
        ["reduce", "--config", cfg_path, "--gens", gens_path, "X^2"],
    )
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc["remainder"] == "-1/2"
    assert doc["irreducible"] is False
    assert all(step["side"] == "right" for step in doc["steps"])
    assert doc["steps"][0]["generator"] == 0


def test_reduce_left(runner, tmp_path):
    ore = dict(GAUSS_Q2, shape="ore")
    cfg_path = write(tmp_path, "cfg.json", ore)
    gens_path = write(tmp_path, "gens.json", ["X^2 + iX"])
    result = runner.invoke(
        cli.main,
        ["reduce", "--config", cfg_path, "--gens", gens_path, "--side", "left", "iX^3"],
    )
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert all(step["side"] == "left" for step in doc["steps"])


def test_pi_command(runner):
    result = runner.invoke(cli.main, ["pi", "--i", "1", "--m", "3", "--emit-words"])
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert lines[0] == "pi(i=1, m=3) = sum of 3 composition words"
    assert lines[1:] == [
        "sigma∘delta∘delta",
        "delta∘sigma∘delta",
        "delta∘delta∘sigma",
    ]
    zero = runner.invoke(cli.main, ["pi", "--i", "4", "--m", "2"])
    assert "= 0" in zero.output


def test_classify_command(runner, tmp_path):
    path = write(tmp_path, "cfg.json", GAUSS_Q2)
    result = runner.invoke(cli.main, ["classify", "--config", path])
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc["sigma"]["multiplicativity"] == []
    assert doc["sigma"]["finite_order"] is None
    assert doc["sigma"]["infinite_order_reason"]


def test_verify_suite_exit_codes(runner, tmp_path):
    result = runner.invoke(cli.main, ["verify", "--suite", "jordan"])
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc["summary"]["failed"] == 0
    bad = runner.invoke(cli.main, ["verify", "--suite", "does-not-exist"])
    assert bad.exit_code == 2


def test_verify_markdown_and_out(runner, tmp_path):
    out = tmp_path / "report.md"
    result = runner.invoke(
        cli.main,
        ["verify", "--suite", "simplicity", "--format", "markdown", "--out", str(out)],
    )
    assert result.exit_code == 0
    text = out.read_text()
    assert text.startswith("# Suite `simplicity`")
    assert "Config digest:" in text


def test_verify_with_config(runner, tmp_path):
    path = write(tmp_path, "cfg.json", GAUSS_Q2)
    result = runner.invoke(
        cli.main, ["verify", "--suite", "associativity", "--config", path]
    )
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc["summary"]["witnesses"] >= 1  # q = 2 is not associative


def test_report_determinism():
    def stripped(report):
        doc = json.loads(suites.emit_report(report))
        for check in doc["checks"]:
            check.pop("elapsed", None)
        return json.dumps(doc)

    first = stripped(suites.run_suite("finite-order-ideals"))
    second = stripped(suites.run_suite("finite-order-ideals"))
    assert first == second


def test_reports_have_unique_check_ids():
    report = suites.run_suite("all")
    ids = [c.id for c in report.checks]
    assert len(ids) == len(set(ids))
    assert all(c.anchor for c in report.checks)
