"""Command-line behavior: pipelines, output shape, exit codes."""

from fractions import Fraction as F

import pytest

from bbhull.cli import main
from bbhull.polyfile import parse_poly, parse_triangulation


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_generate_writes_poly_to_stdout(capsys):
    code, out, err = run(capsys, "generate", "cube", "--d", "2")
    assert code == 0
    data = parse_poly(out)
    assert data.dim == 2
    assert len(data.points) == 4
    assert len(data.halfspaces) == 4


def test_generate_rand_sphere_has_no_h_section(capsys):
    code, out, _ = run(capsys, "generate", "rand-sphere", "--d", "2", "--n", "6", "--seed", "3")
    assert code == 0
    data = parse_poly(out)
    assert len(data.points) == 6
    assert data.halfspaces is None


def test_full_pipeline(tmp_path, capsys):
    poly_f = tmp_path / "dc.poly"
    hull_f = tmp_path / "hull.poly"
    tria_f = tmp_path / "dc.tria"

    assert main(["generate", "dwarfed-cube", "--d", "3", "-o", str(poly_f)]) == 0
    assert main([
        "hull", str(poly_f), "-o", str(hull_f),
        "--triangulation-out", str(tria_f),
    ]) == 0
    capsys.readouterr()

    hull = parse_poly(hull_f.read_text())
    assert len(hull.points) == 10
    assert len(hull.halfspaces) == 7
    dim, cells = parse_triangulation(tria_f.read_text())
    assert dim == 3
    assert all(len(c) == 4 for c in cells)

    code, out, err = run(capsys, "validate", str(poly_f), "--triangulation", str(tria_f))
    assert code == 0
    assert "volume 1/2" in out

    code, out, _ = run(capsys, "fvector", str(poly_f))
    assert code == 0
    assert out.strip() == "10 15 7"


def test_hull_stats_go_to_stderr(tmp_path, capsys):
    f = tmp_path / "c.poly"
    main(["generate", "cube", "--d", "2", "-o", str(f)])
    capsys.readouterr()
    code, out, err = run(capsys, "hull", str(f), "--stats")
    assert code == 0
    parse_poly(out)  # stdout is pure POLY
    assert "facets      4" in err
    assert "step" in err


def test_hull_random_order_needs_no_flag_but_accepts_seed(tmp_path, capsys):
    f = tmp_path / "c.poly"
    main(["generate", "cube", "--d", "3", "-o", str(f)])
    capsys.readouterr()
    code1, out1, _ = run(capsys, "hull", str(f), "--order", "random", "--seed", "5")
    code2, out2, _ = run(capsys, "hull", str(f), "--order", "random", "--seed", "5")
    assert code1 == code2 == 0
    assert out1 == out2
    code3, out3, _ = run(capsys, "hull", str(f), "--order", "lex")
    assert code3 == 0
    # canonical facet order makes the H section order independent
    assert parse_poly(out3).halfspaces == parse_poly(out1).halfspaces


def test_hull_flat_input_emits_equation_pairs(tmp_path, capsys):
    f = tmp_path / "seg.poly"
    f.write_text("POLY 2\nV 3\n0 0\n2 2\n1 1\n")
    code, out, _ = run(capsys, "hull", str(f))
    assert code == 0
    data = parse_poly(out)
    assert len(data.points) == 2  # interior point dropped
    # 2 facet cuts + one equation rendered as opposite halfspaces
    assert len(data.halfspaces) == 4
    mid = (F(1), F(1))
    assert sum(1 for h in data.halfspaces if h.value(mid) == 0) == 2


def test_polar_from_h_description(tmp_path, capsys):
    f = tmp_path / "dc.poly"
    main(["generate", "dwarfed-cube", "--d", "3", "-o", str(f)])
    capsys.readouterr()
    code, out, _ = run(capsys, "polar", str(f), "--interior", "1/6,1/6,1/6")
    assert code == 0
    data = parse_poly(out)
    assert len(data.points) == 7  # one per facet


def test_polar_from_points_only(tmp_path, capsys):
    f = tmp_path / "sq.poly"
    f.write_text("POLY 2\nV 4\n0 0\n1 0\n1 1\n0 1\n")
    code, out, _ = run(capsys, "polar", str(f), "--interior", "1/2,1/2")
    assert code == 0
    pts = parse_poly(out).points
    assert sorted(pts) == sorted(
        [(F(2), F(0)), (F(-2), F(0)), (F(0), F(2)), (F(0), F(-2))]
    )


def test_bench_family_and_csv(tmp_path, capsys):
    csv_f = tmp_path / "runs.csv"
    code, out, _ = run(
        capsys, "bench", "dwarfed-cube", "--d", "4",
        "--runs", "3", "--seed", "2", "--csv", str(csv_f),
    )
    assert code == 0
    assert "facets" in out and "millis" in out
    lines = csv_f.read_text().strip().split("\n")
    assert len(lines) == 4
    assert lines[0].startswith("instance,d,param,")
    assert lines[1].split(",")[6] == "9"  # facet count column


def test_bench_on_poly_file(tmp_path, capsys):
    f = tmp_path / "c.poly"
    main(["generate", "cube", "--d", "3", "-o", str(f)])
    capsys.readouterr()
    code, out, _ = run(capsys, "bench", str(f), "--runs", "2", "--seed", "4")
    assert code == 0
    assert "2 runs" in out


def test_exit_codes(tmp_path, capsys):
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 1
    capsys.readouterr()

    assert main(["hull", str(tmp_path / "missing.poly")]) == 2
    bad = tmp_path / "bad.poly"
    bad.write_text("POLY 2\nV 1\n1 junk\n")
    assert main(["hull", str(bad)]) == 2
    capsys.readouterr()

    good = tmp_path / "sq.poly"
    good.write_text("POLY 2\nV 3\n0 0\n4 0\n0 4\n")
    wrong = tmp_path / "wrong.tria"
    wrong.write_text("TRIA 2 1\n0 1 2\n0 0\n")
    assert main(["validate", str(good), "--triangulation", str(wrong)]) == 2
    wrong.write_text("TRIA 2 1\n1 2 3\n")
    assert main(["validate", str(good), "--triangulation", str(wrong)]) == 3
    capsys.readouterr()


def test_validate_catches_tampered_triangulation(tmp_path, capsys):
    poly_f = tmp_path / "c.poly"
    tria_f = tmp_path / "c.tria"
    main(["generate", "cube", "--d", "3", "-o", str(poly_f)])
    main(["hull", str(poly_f), "-o", str(tmp_path / "h.poly"),
          "--triangulation-out", str(tria_f)])
    capsys.readouterr()

    lines = tria_f.read_text().strip().split("\n")
    head, cells = lines[0].split(), lines[1:]
    dropped = cells[:-1]
    tria_f.write_text(
        f"TRIA {head[1]} {len(dropped)}\n" + "\n".join(dropped) + "\n"
    )
    code, out, err = run(capsys, "validate", str(poly_f), "--triangulation", str(tria_f))
    assert code == 3
    assert err  # reasons land on stderr


def test_missing_required_family_param(capsys):
    with pytest.raises(SystemExit) as info:
        main(["generate"])
    assert info.value.code == 1
    capsys.readouterr()
    code = main(["generate", "cube"])  # missing --d is a semantic error
    _ = capsys.readouterr()
    assert code == 2
