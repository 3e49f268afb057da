from fractions import Fraction

import pytest

from segguard import bench, cli, formats, reduction, solver
from segguard.arrangement import GssInstance, InstanceError, build_arrangement
from segguard.generate import generate
from segguard.geometry import pt, seg

PLUS_TEXT = "gss 2\ns 0 0 4 0\ns 2 -2 2 2\n"
H_TEXT = "gss 4\ns 0 0 0 4\ns 6 0 6 6\ns 0 2 6 2\ns 6 4 8 4\n"


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_instance_round_trip_keeps_rationals():
    inst = GssInstance([seg(Fraction(1, 3), 0, 2, Fraction(-5, 7), 0), seg(0, 1, 1, 1, 1)])
    text = formats.emit_instance(inst, ["two segments"])
    assert "s 1/3 0 2 -5/7" in text and text.startswith("# two segments\n")
    back = formats.parse_instance(text)
    assert [(s.a, s.b) for s in back.segments] == [(s.a, s.b) for s in inst.segments]


def test_solution_round_trip():
    arr = build_arrangement(formats.parse_instance(PLUS_TEXT))
    center = arr.vertex_id((2, 0))
    text = formats.emit_solution(arr, [center])
    assert text == f"guards 1\nG {center} 2 0\n"
    assert formats.resolve_solution(arr, formats.parse_solution(text)) == [center]
    with pytest.raises(formats.SolutionMismatch):
        formats.resolve_solution(arr, [(center, pt(9, 9))])
    with pytest.raises(formats.SolutionMismatch):
        formats.resolve_solution(arr, [(77, pt(2, 0))])


@pytest.mark.parametrize(
    "text,line",
    [
        ("gss 1\ns 0 0 1\n", 2),
        ("gss 1\ns 0 0 x 1\n", 2),
        ("s 0 0 1 1\n", 1),
        ("# header\ngss 1\nq 1\n", 3),
        ("gss 1\ns 0 0 1/0 1\n", 2),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(formats.FormatError) as exc:
        formats.parse_instance(text)
    assert exc.value.line == line
    assert str(exc.value).startswith(f"line {line}:")


def test_count_mismatch_and_validation():
    with pytest.raises(formats.FormatError):
        formats.parse_instance("gss 2\ns 0 0 1 1\n")
    with pytest.raises(InstanceError):
        formats.parse_instance("gss 2\ns 0 0 2 0\ns 1 0 3 0\n")
    assert len(formats.parse_instance("gss 2\ns 0 0 2 0\ns 1 0 3 0\n", validate=False).segments) == 2


def test_graph_parse_errors():
    with pytest.raises(formats.FormatError):
        formats.parse_graph("e 0 1\n")
    with pytest.raises(formats.FormatError) as exc:
        formats.parse_graph("n 2\ne 0 one\n")
    assert exc.value.line == 2


def test_cli_solve_and_verify(tmp_path, capsys):
    inst = write(tmp_path, "plus.gss", PLUS_TEXT)
    out = str(tmp_path / "plus.sol")
    assert cli.main(["solve", inst, "--algo", "exact", "--out", out]) == 0
    text = open(out).read()
    assert "guards 1" in text and "# verified yes" in text
    assert cli.main(["verify", inst, out]) == 0
    assert "valid" in capsys.readouterr().out


def test_cli_verify_rejects_partial_solution(tmp_path, capsys):
    inst = write(tmp_path, "h.gss", H_TEXT)
    sol = write(tmp_path, "h.sol", "guards 1\nG 0 0 0\n")
    assert cli.main(["verify", inst, sol]) == 2
    assert "INVALID" in capsys.readouterr().out
    bad = write(tmp_path, "bad.sol", "guards 1\nG 0 5 5\n")
    assert cli.main(["verify", inst, bad]) == 2
    assert "mismatch" in capsys.readouterr().err


def test_cli_cap(tmp_path):
    inst = write(tmp_path, "comb.gss", formats.emit_instance(generate("comb", 4, 0)))
    assert cli.main(["solve", inst, "--algo", "exact", "--cap", "3"]) == 3
    assert cli.main(["solve", inst, "--algo", "exact", "--cap", "4", "--out", str(tmp_path / "x")]) == 0


def test_cli_auto_picks_tree(tmp_path):
    inst = write(tmp_path, "h.gss", H_TEXT)
    out = str(tmp_path / "h.sol")
    assert cli.main(["solve", inst, "--out", out]) == 0
    text = open(out).read()
    assert "# auto chose tree" in text and "guards 2" in text


def test_cli_tree_on_cycle(tmp_path, capsys):
    inst = write(tmp_path, "hc.gss", H_TEXT.replace("gss 4", "gss 5") + "s 0 4 6 4\n")
    assert cli.main(["solve", inst, "--algo", "tree"]) == 1
    assert "not-a-tree" in capsys.readouterr().err


def test_cli_render(tmp_path):
    inst = write(tmp_path, "plus.gss", PLUS_TEXT)
    sol = write(tmp_path, "plus.sol", "guards 1\nG 2 2 0\n")
    out = tmp_path / "plus.svg"
    assert cli.main(["render", inst, sol, "--out", str(out)]) == 0
    svg = out.read_text()
    assert svg.count('class="segment"') == 2
    assert svg.count("<circle") == 5
    assert svg.count('class="vertex guard"') == 1
    txt = tmp_path / "plus.txt"
    assert cli.main(["render", inst, "--format", "text", "--out", str(txt)]) == 0
    assert txt.read_text() == build_arrangement(formats.parse_instance(PLUS_TEXT)).serialize()


def test_cli_generate_and_reduce(tmp_path, capsys):
    out = tmp_path / "star.gss"
    assert cli.main(["generate", "star", "5", "--out", str(out)]) == 0
    assert len(formats.parse_instance(out.read_text()).segments) == 5
    g = write(tmp_path, "k4.graph", "n 4\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n")
    red = tmp_path / "k4.gss"
    assert cli.main(["reduce", g, "3", "--out", str(red)]) == 0
    text = red.read_text()
    assert "# K 3" in text and "certificate ok" in capsys.readouterr().out
    assert len(formats.parse_instance(text).segments) == 6
    k5 = write(tmp_path, "k5.graph", "n 5\n" + "".join(f"e {u} {v}\n" for u in range(5) for v in range(u + 1, 5)))
    assert cli.main(["reduce", k5, "4"]) == 1


def test_cli_usage_errors(tmp_path, capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 1
    assert cli.main(["solve", str(tmp_path / "missing.gss")]) == 1
    bad = write(tmp_path, "bad.gss", "gss 1\ns 0 0 1\n")
    assert cli.main(["solve", bad]) == 1
    assert "line 2" in capsys.readouterr().err


# The bench must notice broken implementations, not just bless working ones.


def test_bench_catches_a_dropped_guard(monkeypatch):
    real = solver.solve_tree
    monkeypatch.setattr(solver, "solve_tree", lambda arr: solver.GuardSet(list(real(arr))[1:]))
    assert not bench.criterion_tree_optimality(count=5).passed


def test_bench_catches_an_oversized_move(monkeypatch):
    real = reduction.displace_vertices
    monkeypatch.setattr(reduction, "displace_vertices", lambda d, chains, budget=None: real(d, chains, Fraction(1, 3 * d.n)))
    assert not bench.criterion_general_position().passed
