"""Command line behavior and exit codes (0 ok, 1 input, 2 infeasible, 3 bad)."""

import json

import pytest

from equicolor.cli import main
from equicolor.io import write_edge_list
from builders import complete_bipartite_raw, cycle_raw, star_raw


@pytest.fixture
def star_file(tmp_path):
    p = tmp_path / "star.txt"
    write_edge_list(p, star_raw(5))
    return str(p)


@pytest.fixture
def k33_file(tmp_path):
    p = tmp_path / "k33.txt"
    write_edge_list(p, complete_bipartite_raw(3, 3))
    return str(p)


def test_color_text_output(star_file, capsys):
    assert main(["color", star_file]) == 0
    out = capsys.readouterr().out
    colors = {}
    for line in out.strip().splitlines():
        v, c = map(int, line.split())
        colors[v] = c
    assert set(colors) == set(range(6))
    assert len(set(colors.values())) == 4


def test_color_json_output(star_file, capsys):
    assert main(["color", star_file, "--format", "json", "--mode", "theorem"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["mode"] == "theorem"
    assert doc["parameters"]["k"] == 4 and doc["parameters"]["t"] == 1
    assert doc["verification"]["all_ok"] is True
    assert sorted(map(sorted, doc["classes"])) == [[0], [1], [2, 3], [4, 5]]


def test_color_output_file(star_file, tmp_path):
    out = tmp_path / "colors.txt"
    assert main(["color", star_file, "-o", str(out)]) == 0
    assert len(out.read_text().strip().splitlines()) == 6


def test_color_infeasible_exit_2(k33_file, capsys):
    assert main(["color", k33_file]) == 2
    out = capsys.readouterr().out
    assert "infeasible" in out
    assert main(["color", k33_file, "--format", "json"]) == 2
    doc = json.loads(capsys.readouterr().out)
    assert doc["infeasible"] is True
    assert len(doc["reports"]) == 3
    assert doc["reports"][0]["conditions"]["t*H>=M"] is False


def test_color_odd_cycle_exit_1(tmp_path, capsys):
    p = tmp_path / "tri.txt"
    write_edge_list(p, cycle_raw(3))
    assert main(["color", str(p)]) == 1
    assert "odd cycle" in capsys.readouterr().err


def test_color_missing_file_exit_1(tmp_path, capsys):
    assert main(["color", str(tmp_path / "nope.txt")]) == 1
    assert "error" in capsys.readouterr().err


def test_color_duplicate_edge_needs_dedup_flag(tmp_path, capsys):
    p = tmp_path / "dup.txt"
    p.write_text("4 4\n0 1\n1 0\n1 2\n1 3\n")
    assert main(["color", str(p)]) == 1
    capsys.readouterr()
    with pytest.warns(UserWarning):
        assert main(["color", str(p), "--dedup"]) == 0


def test_dimacs_input(tmp_path, capsys):
    p = tmp_path / "star.col"
    p.write_text("c tiny star\np edge 6 5\n" + "".join(f"e 1 {i}\n" for i in range(2, 7)))
    assert main(["color", str(p)]) == 0
    assert len(capsys.readouterr().out.strip().splitlines()) == 6


def test_verify_round_trip(star_file, tmp_path, capsys):
    colors = tmp_path / "colors.txt"
    assert main(["color", star_file, "-o", str(colors)]) == 0
    assert main(["verify", star_file, str(colors)]) == 0
    out = capsys.readouterr().out
    assert "all_ok: True" in out


def test_verify_json_coloring(star_file, tmp_path):
    doc = tmp_path / "cover.json"
    assert main(["color", star_file, "--format", "json", "-o", str(doc)]) == 0
    assert main(["verify", star_file, str(doc)]) == 0


def test_verify_detects_conflict(star_file, tmp_path, capsys):
    colors = tmp_path / "colors.txt"
    assert main(["color", star_file, "-o", str(colors)]) == 0
    lines = colors.read_text().splitlines()
    center_color = dict(map(int, ln.split()) for ln in lines)[0]
    lines[1] = f"1 {center_color}"  # leaf joins the center's class
    colors.write_text("\n".join(lines) + "\n")
    assert main(["verify", star_file, str(colors)]) == 3
    assert "proper: False" in capsys.readouterr().out


def test_verify_incomplete_coloring_exit_1(star_file, tmp_path, capsys):
    colors = tmp_path / "colors.txt"
    colors.write_text("0 0\n1 1\n")
    assert main(["verify", star_file, str(colors)]) == 1
    assert "uncolored" in capsys.readouterr().err


def test_chie(star_file, capsys):
    assert main(["chie", star_file]) == 0
    assert capsys.readouterr().out.strip() == "4"
    assert main(["chie", star_file, "--kmax", "2"]) == 0
    assert capsys.readouterr().out.strip() == "none"


def test_chie_too_large(tmp_path, capsys):
    p = tmp_path / "big.txt"
    write_edge_list(p, star_raw(16))
    assert main(["chie", str(p)]) == 1
    assert main(["chie", str(p), "--max-n", "20"]) == 0
    assert capsys.readouterr().out.strip().endswith("9")


def test_constants_command(capsys):
    assert main(["constants", "21"]) == 0
    out = capsys.readouterr().out
    assert "K0 = 1538" in out and "K = 1538" in out and "c = 3076" in out


def test_constants_rejects_threshold(capsys):
    assert main(["constants", "41/2"]) == 1
    assert main(["constants", "bogus"]) == 1


def test_gen_deterministic(tmp_path):
    a1 = tmp_path / "a1.txt"
    a2 = tmp_path / "a2.txt"
    b = tmp_path / "b.txt"
    base = ["--na", "6", "--nb", "30", "--delta-cap", "5", "--p", "1/4"]
    assert main(["gen", str(a1), *base, "--seed", "11"]) == 0
    assert main(["gen", str(a2), *base, "--seed", "11"]) == 0
    assert main(["gen", str(b), *base, "--seed", "12"]) == 0
    assert a1.read_bytes() == a2.read_bytes()
    assert a1.read_bytes() != b.read_bytes()


def test_gen_edge_probability_extremes(tmp_path):
    empty = tmp_path / "empty.txt"
    assert main(["gen", str(empty), "--na", "4", "--nb", "4", "--delta-cap", "3",
                 "--p", "0", "--seed", "1"]) == 0
    assert empty.read_text().split()[:2] == ["8", "0"]
    full = tmp_path / "full.txt"
    assert main(["gen", str(full), "--na", "3", "--nb", "9", "--delta-cap", "4",
                 "--p", "1", "--seed", "1"]) == 0
    tokens = full.read_text().split()
    assert tokens[0] == "12"
    # cap must bind: 3 * 4 edges at most
    assert int(tokens[1]) <= 12


def test_gen_bad_probability(tmp_path, capsys):
    assert main(["gen", str(tmp_path / "x.txt"), "--na", "3", "--nb", "3",
                 "--delta-cap", "2", "--p", "3/2", "--seed", "1"]) == 1


def test_bench_csv(tmp_path):
    out = tmp_path / "bench.csv"
    assert main(["bench", "--sizes", "1000,2000", "--seed", "3", "-o", str(out)]) == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "n,m,delta,wall_time_ns,edge_scans,outcome"
    assert len(lines) == 3
    for line in lines[1:]:
        fields = line.split(",")
        assert fields[-1] == "ok"
        assert int(fields[3]) > 0


def test_bench_empty_sizes(capsys):
    assert main(["bench", "--sizes", ""]) == 0
    out = capsys.readouterr().out
    assert out.strip() == "n,m,delta,wall_time_ns,edge_scans,outcome"


def test_usage_errors_exit_1(capsys):
    assert main([]) == 1
    assert main(["color"]) == 1
    assert main(["--help"]) == 0


def test_many_seeded_round_trips(tmp_path, capsys):
    graph = tmp_path / "g.txt"
    colors = tmp_path / "c.txt"
    outcomes = {0: 0, 1: 0, 2: 0}
    rounds = 1000
    for i in range(rounds):
        na = 1 + i % 7
        nb = 2 + (i * 3) % 11
        cap = 2 + i % 5
        assert main(["gen", str(graph), "--na", str(na), "--nb", str(nb),
                     "--delta-cap", str(cap), "--p", "3/5", "--seed", str(i)]) == 0
        code = main(["color", str(graph), "-o", str(colors)])
        assert code in (0, 1, 2)
        if code == 1:  # only legitimate input rejection: max degree below 2
            assert "degree" in capsys.readouterr().err
        outcomes[code] += 1
        if code == 0:
            assert main(["verify", str(graph), str(colors)]) == 0
        capsys.readouterr()
    assert outcomes[0] > rounds // 2  # most instances are colorable end to end
