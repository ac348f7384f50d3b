import io
import json

import jsonschema
import pytest

from defarg import fixtures
from defarg.cli import run

TERM = {"type": "array", "items": {"type": "string", "pattern": r"^!?@[A-Za-z0-9_.]+$"}}

EXTENSIONS_SCHEMA = {
    "type": "object",
    "required": ["classification", "extensions"],
    "additionalProperties": False,
    "properties": {
        "classification": {
            "type": "string",
            "pattern": r"^(inconsistent-facts|no-extension|unique-trivial|extensions\(\d+\))$",
        },
        "extensions": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["defaultTerm", "generatingDefaults"],
                "additionalProperties": False,
                "properties": {
                    "defaultTerm": TERM,
                    "generatingDefaults": {"type": "array", "items": {"type": "string"}},
                    "marginal": {"type": "array", "items": {"type": "string"}},
                },
            },
        },
    },
}

TRANSLATE_SCHEMA = {
    "type": "object",
    "required": ["xi", "assumptions"],
    "additionalProperties": False,
    "properties": {
        "xi": {"type": "array", "items": {"type": "string"}},
        "assumptions": {
            "type": "object",
            "additionalProperties": {
                "type": "object",
                "required": ["p", "j", "c"],
                "additionalProperties": False,
                "properties": {
                    "p": {"type": "string"},
                    "j": {"type": "array", "items": {"type": "string"}, "minItems": 1},
                    "c": {"type": "string"},
                },
            },
        },
    },
}


@pytest.fixture
def theory_file(tmp_path):
    def write(name):
        path = tmp_path / f"{name}.dt"
        path.write_text(fixtures.THEORIES[name])
        return str(path)

    return write


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_extensions_chain(theory_file):
    code, text = call("extensions", theory_file("chain"), "--marginal")
    assert code == 0
    assert text.splitlines() == [
        "classification: extensions(1)",
        "extension 1: term {@d1.c, @d3.c} defaults d1, d3",
        "  marginal: !d; !f",
    ]


def test_query_exit_codes(theory_file):
    path = theory_file("bd")
    assert call("query", path, "--mode", "skeptical", "b | c") == (0, "yes\n")
    assert call("query", path, "--mode", "skeptical", "b") == (10, "no\n")
    assert call("query", path, "--mode", "credulous", "b")[0] == 0


def test_query_warns_without_extensions(theory_file):
    code, text = call("query", theory_file("nox"), "--mode", "skeptical", "p")
    assert code == 0
    assert text.splitlines() == ["warning: no extensions (no-extension)", "yes"]


def test_check(theory_file):
    assert call("check", theory_file("nox")) == (0, "no-extension\n")
    assert call("check", theory_file("pnotp")) == (0, "inconsistent-facts\n")


def test_mics_and_terms(theory_file):
    code, text = call("mics", theory_file("chain"))
    assert code == 0
    assert text.splitlines()[0] == "{@d1.c, @d2.j1}"
    code, text = call("terms", theory_file("chain"), "--json")
    assert json.loads(text)["defaultTerms"][0]["defaultTerm"] == ["@d1.c", "@d3.c"]


@pytest.mark.parametrize(
    "argv",
    [
        ("check", "/nonexistent/theory.dt"),
        ("query", "THEORY", "b"),
        ("query", "THEORY", "--mode", "skeptical", "@d1.c"),
        ("query", "THEORY", "--mode", "skeptical", "b &"),
        ("bogus",),
        (),
    ],
)
def test_usage_and_parse_errors_exit_1(theory_file, argv):
    path = theory_file("bd")
    argv = [path if a == "THEORY" else a for a in argv]
    assert call(*argv)[0] == 1


def test_parse_error_in_file(tmp_path, capsys):
    bad = tmp_path / "bad.dt"
    bad.write_text("fact p.\ndefault d = p : q /.")
    assert call("check", str(bad))[0] == 1
    assert "2:" in capsys.readouterr().err


def test_json_outputs_validate(theory_file):
    for name in fixtures.THEORIES:
        path = theory_file(name)
        for cmd in ("extensions", "oracle"):
            code, text = call(cmd, path, "--json", "--marginal")
            assert code == 0
            jsonschema.validate(json.loads(text), EXTENSIONS_SCHEMA)
        code, text = call("translate", path, "--json")
        jsonschema.validate(json.loads(text), TRANSLATE_SCHEMA)


def test_oracle_matches_reasoner_report(theory_file):
    for name in ("abc", "chain", "bd", "blocked", "nox"):
        path = theory_file(name)
        ours = json.loads(call("extensions", path, "--json")[1])
        theirs = json.loads(call("oracle", path, "--json")[1])
        assert ours["classification"] == theirs["classification"]
        assert sorted(e["generatingDefaults"] for e in ours["extensions"]) == sorted(
            e["generatingDefaults"] for e in theirs["extensions"]
        )


def test_output_is_deterministic(theory_file):
    for name in ("abc", "chain", "bd"):
        path = theory_file(name)
        for argv in (("extensions", path, "--marginal"), ("translate", path, "--json"), ("mics", path)):
            assert call(*argv) == call(*argv)
    assert call("selftest", "--count", "5", "--seed", "3") == call("selftest", "--count", "5", "--seed", "3")


def test_selftest_passes():
    code, text = call("selftest", "--count", "10")
    assert code == 0
    assert text.splitlines()[-1] == "17/17 checks passed"


def test_stdin_input(monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(fixtures.THEORIES["nox"]))
    assert call("check", "-") == (0, "no-extension\n")
