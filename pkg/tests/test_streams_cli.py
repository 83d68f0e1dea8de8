import io
import json

import pytest

from dyncolor import cli
from dyncolor.oracles import is_forest
from dyncolor.streams import KINDS, Command, StreamError, generate, parse, render


def test_parse_roundtrip():
    text = ["# demo", "n 4", "+ 0 1", "+1 2", "? 2", "!", "- 0 1"]
    n, cmds = parse(text)
    assert n == 4
    assert [c.op for c in cmds] == ["+", "+", "?", "!", "-"]
    assert cmds[1] == Command("+", 1, 2, line=4)
    assert parse(render(n, cmds))[1] == [c._replace(line=c.line - 1) for c in cmds]


@pytest.mark.parametrize("lines, where", [
    (["+ 0 1"], 1),
    (["n 3", "+ 0 3"], 2),
    (["n 3", "+ 1 1"], 2),
    (["n 3", "* 1"], 2),
    (["n 3", "? 1 2"], 2),
    (["n 3", "+ a 1"], 2),
    (["n 0"], 1),
])
def test_parse_errors(lines, where):
    with pytest.raises(StreamError) as exc:
        parse(lines)
    assert exc.value.line == where


def test_parse_override_n():
    assert parse(["n 2", "+ 0 5"], n=8)[0] == 8


@pytest.mark.parametrize("kind", KINDS)
def test_generators_are_valid_and_seeded(kind):
    cmds = generate(kind, 20, 400, seed=3)
    assert cmds == generate(kind, 20, 400, seed=3)
    edges = set()
    for c in cmds:
        e = (min(c.u, c.v), max(c.u, c.v))
        if c.op == "+":
            assert e not in edges
            edges.add(e)
        else:
            assert c.op == "-" and e in edges
            edges.discard(e)
        if kind == "forest-only":
            assert is_forest(edges)
    if kind == "densify-then-thin":
        assert is_forest(edges)


def test_run_parity_two_colors():
    out = io.StringIO()
    n, cmds = parse(["n 2", "+0 1", "?0", "?1"])
    stats = cli.run(n, cmds, algorithm="implicit-parity", verify=True, out=out)
    lines = out.getvalue().splitlines()
    assert lines == ["0 (2, 1)", "1 (2, 0)"]
    assert stats.verification == "pass" and stats.distinct_colors["implicit-parity"] == 2


def test_run_delete_absent():
    n, cmds = parse(["n 3", "- 0 1"])
    with pytest.raises(cli.RunError) as exc:
        cli.run(n, cmds)
    assert exc.value.line == 2 and "absent" in str(exc.value)


def test_main_end_to_end(tmp_path, capsys):
    stream = tmp_path / "s.txt"
    assert cli.main(["--generate", "random", "--n", "16", "--m", "300", "--seed", "2",
                     "--output", str(stream)]) == 0
    with open(stream, "a") as fh:
        fh.write("? 0\n? 5\n!\n")
    stats_path = tmp_path / "stats.json"
    for alg in ("explicit", "implicit-parity", "implicit-subgroup", "auto"):
        code = cli.main(["--input", str(stream), "--algorithm", alg, "--verify",
                         "--stats-out", str(stats_path)])
        assert code == 0
        stats = json.loads(stats_path.read_text())
        assert stats["updates"] == 300 and stats["verification"] == "pass"
    printed = capsys.readouterr().out.splitlines()
    assert len(printed) == 8


def test_main_errors(tmp_path, capsys):
    assert cli.main(["--generate", "random"]) == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("n 3\n- 0 1\n")
    assert cli.main(["--input", str(bad)]) == 1
    assert "line 2" in capsys.readouterr().err


def test_replay_is_byte_identical(tmp_path):
    stream = tmp_path / "s.txt"
    cli.main(["--generate", "densify-then-thin", "--n", "20", "--m", "200", "--seed", "9",
              "--output", str(stream)])
    docs = []
    for i in range(2):
        out = tmp_path / f"stats{i}.json"
        cli.main(["--input", str(stream), "--seed", "4", "--stats-out", str(out)])
        docs.append(out.read_bytes())
    assert docs[0] == docs[1]
