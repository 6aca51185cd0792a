import argparse
import json
import networkx as nx
import pytest
from outerthick.cli import EXIT_BUDGET, EXIT_FAILED, EXIT_OK, EXIT_USAGE, cmd_extend, cmd_verify, main
from outerthick.config import CliConfig
from outerthick.constructions.gn import gn_family
from outerthick.core.errors import FamilyFormatError
from outerthick.formats.family_file import emit_family, read_family


@pytest.fixture
def run(capsys):
    def _run(*argv):
        status = main(list(argv))
        out = capsys.readouterr().out
        return status, out
    return _run


def test_construct_doubling_then_verify(run, tmp_path):
    path = tmp_path / "doubling.txt"
    status, out = run("--output", str(path), "construct", "doubling", "--s", "1")
    assert status == EXIT_OK
    assert out == ""
    assert read_family(str(path)).t == 2

    status, out = run("verify", "--input", str(path))
    assert status == EXIT_OK
    assert "valid: yes" in out


def test_construct_gn_with_extension(run, tmp_path):
    path = tmp_path / "gn.txt"
    assert run("--output", str(path), "construct", "gn", "--t", "3", "--n", "15", "--strict")[0] == EXIT_OK
    f = read_family(str(path))
    assert (f.t, f.n) == (3, 15)

    extended = tmp_path / "gn20.txt"
    assert run("--output", str(extended), "extend", "--input", str(path), "--to", "20")[0] == EXIT_OK
    assert read_family(str(extended)).n == 20


def test_verify_k7e_depends_on_mode(run, tmp_path):
    path = tmp_path / "k7e.txt"
    assert run("--output", str(path), "gallery", "k7e")[0] == EXIT_OK
    assert run("verify", "--input", str(path))[0] == EXIT_FAILED
    status, out = run("verify", "--input", str(path), "--allow-nonmaximal", "--format", "json")
    assert status == EXIT_OK
    assert json.loads(out)["mode"] == "outerplanar"


def test_bounds_exit_codes(run):
    status, out = run("bounds", "--t", "2", "--n", "7")
    assert status == EXIT_FAILED
    assert "infeasible" in out
    assert run("bounds", "--t", "2", "--n", "8")[0] == EXIT_OK


def test_search_exit_codes(run, tmp_path):
    path = tmp_path / "k7e.txt"
    run("--output", str(path), "gallery", "k7e")
    status, out = run("search", "ot", "--input", str(path), "--k", "2")
    assert status == EXIT_OK
    assert out.startswith("search k=2: found")
    assert run("search", "ot", "--input", str(path), "--k", "1")[0] == EXIT_FAILED
    assert run("search", "ot", "--input", str(path), "--k", "2", "--budget", "1")[0] == EXIT_BUDGET
    assert run("--budgets", "search_max_n=5", "search", "ot", "--input", str(path), "--k", "2")[0] == EXIT_BUDGET


def test_color_and_export(run, tmp_path):
    path = tmp_path / "k8m.txt"
    run("--output", str(path), "gallery", "k8m")
    assert run("color", "--input", str(path)) == (EXIT_OK, "6\n")

    status, out = run("export", "--input", str(path), "--format", "graph6")
    assert status == EXIT_OK
    decoded = nx.from_graph6_bytes(out.strip().encode("ascii"))
    assert decoded.number_of_edges() == 26

    status, out = run("export", "--input", str(path), "--format", "edgelist", "--member", "1")
    assert status == EXIT_OK
    assert len(out.splitlines()) == 13

    status, out = run("export", "--input", str(path), "--format", "dot")
    assert out.count("graph member_") == 2


def test_usage_errors(run, tmp_path):
    assert run("frobnicate")[0] == EXIT_USAGE
    assert run("verify", "--input", str(tmp_path / "missing.txt"))[0] == EXIT_USAGE
    bad = tmp_path / "bad.txt"
    bad.write_text("family 1 4\ngraph 0\n0 9\n")
    assert run("verify", "--input", str(bad))[0] == EXIT_USAGE
    assert run("--budgets", "bogus=1", "bounds", "--t", "1", "--n", "3")[0] == EXIT_USAGE
    assert run("construct", "gn", "--t", "0")[0] == EXIT_USAGE
    assert run("--budgets", "doubling_max_s=1", "construct", "doubling", "--s", "2")[0] == EXIT_BUDGET


def test_output_is_byte_identical_across_runs(run, tmp_path):
    first, second = tmp_path / "a.txt", tmp_path / "b.txt"
    run("--output", str(first), "construct", "doubling", "--s", "2", "--n", "20")
    run("--output", str(second), "construct", "doubling", "--s", "2", "--n", "20")
    assert first.read_bytes() == second.read_bytes()
    assert run("export", "--input", str(first), "--format", "dot") == run("export", "--input", str(second), "--format", "dot")


def test_gallery_figure2(run):
    status, out = run("gallery", "figure2")
    assert status == EXIT_OK
    assert out.startswith("family 2 8\ngraph 0 d=1\n")
    assert "graph 1 d=5\n" in out


def test_commands_read_settings_from_config(tmp_path):
    path = tmp_path / "gn.txt"
    path.write_text(emit_family(gn_family(2)))
    args = argparse.Namespace(input=str(path), allow_nonmaximal=False, format="text")
    result = cmd_verify(args, CliConfig(output_format="json"))
    assert json.loads(result.text)["valid"] is True

    unsorted = tmp_path / "unsorted.txt"
    unsorted.write_text("family 1 4\ngraph 0\n1 0\n2 1\n3 2\n3 0\n2 0\n")
    args = argparse.Namespace(input=str(unsorted), to=6)
    assert read_family(str(unsorted)).n == 4
    with pytest.raises(FamilyFormatError):
        cmd_extend(args, CliConfig(strict_format=True))
    extended = cmd_extend(args, CliConfig(strict=True))
    assert extended.text.startswith("family 1 6\n")


def test_strict_format_flag_reaches_the_parser(run, tmp_path):
    unsorted = tmp_path / "unsorted.txt"
    unsorted.write_text("family 1 4\ngraph 0\n1 0\n2 1\n3 2\n3 0\n2 0\n")
    assert run("verify", "--input", str(unsorted))[0] == EXIT_OK
    assert run("--strict-format", "verify", "--input", str(unsorted))[0] == EXIT_USAGE
