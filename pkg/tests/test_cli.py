import json

from pdgenus.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestPoly:
    def test_interlaced_pair(self, capsys):
        code, out, _ = run(capsys, "poly", "1 2 1 2")
        assert code == 0
        assert out.strip() == "2 + 2z"

    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, "poly", "--json", "1 2 1 2")
        payload = json.loads(out)
        assert payload["polynomial"] == {"coeffs": [2, 2]}
        assert payload["subset_count"] == 4

    def test_oracle_flag_agrees(self, capsys):
        _, fast, _ = run(capsys, "poly", "1 2 1 3 2 3")
        _, slow, _ = run(capsys, "poly", "--oracle", "1 2 1 3 2 3")
        assert fast == slow

    def test_parse_error_exits_one(self, capsys):
        code, _, err = run(capsys, "poly", "1 2 1")
        assert code == 1
        assert "error" in err


class TestChecks:
    def test_check4t_clean_run(self, capsys):
        code, out, _ = run(capsys, "check4t", "3", "--json")
        assert code == 0
        summary = json.loads(out.strip().splitlines()[-1])
        assert summary == {"n": 3, "quadruples": 6, "violations": 0}

    def test_dims(self, capsys):
        code, out, _ = run(capsys, "dims", "4")
        assert code == 0
        assert out.strip() == "6"

    def test_dims_json(self, capsys):
        _, out, _ = run(capsys, "dims", "--json", "3")
        assert json.loads(out) == {"n": 3, "dim": 3, "diagrams": 5}


class TestEnum:
    def test_count_line(self, capsys):
        code, out, _ = run(capsys, "enum", "3")
        assert code == 0
        assert out.strip().endswith("count: 5")
        assert len(out.strip().splitlines()) == 6

    def test_limit(self, capsys):
        _, out, _ = run(capsys, "enum", "3", "--limit", "2")
        lines = out.strip().splitlines()
        assert len(lines) == 3
        assert lines[-1] == "count: 5"

    def test_json_round_trips_through_parse(self, capsys):
        _, out, _ = run(capsys, "enum", "2", "--json")
        payload = json.loads(out)
        assert payload["count"] == 2
        assert payload["diagrams"] == [[1, 1, 2, 2], [1, 2, 1, 2]]


class TestGenus:
    def test_diagram_word(self, capsys):
        code, out, _ = run(capsys, "genus", "1 2 1 2")
        assert (code, out.strip()) == (0, "1")

    def test_map_file(self, capsys, tmp_path):
        path = tmp_path / "map.txt"
        path.write_text("sigma: (0 1 2 3)\nalpha: (0 2)(1 3)\n")
        code, out, _ = run(capsys, "genus", "--json", str(path))
        assert code == 0
        assert json.loads(out) == {"genus": 1, "v": 1, "e": 2, "f": 1, "c": 1}


class TestDual:
    def test_middle_loop_of_chain(self, capsys):
        code, out, _ = run(capsys, "dual", "1 2 1 3 2 3", "--chords", "2")
        assert code == 0
        assert "genus: 0" in out

    def test_json_schema(self, capsys):
        _, out, _ = run(capsys, "dual", "--json", "1 2 1 2", "--chords", "1")
        payload = json.loads(out)
        assert set(payload) == {"circles", "pairing", "side", "genus", "counts"}
        assert payload["counts"]["v"] == 2


class TestProductSlideInterlace:
    def test_product(self, capsys):
        code, out, _ = run(capsys, "product", "1 2 1 2", "1 2 1 2")
        assert code == 0
        assert out.strip() == "3 4 3 4 1 2 1 2"

    def test_product_bad_cuts(self, capsys):
        code, _, err = run(capsys, "product", "1 1", "2 2", "--cuts", "x,y")
        assert code == 1

    def test_slide_chain_to_triangle(self, capsys):
        code, out, _ = run(
            capsys, "slide", "1 2 1 3 2 3", "--move", "0", "--along", "2"
        )
        assert (code, out.strip()) == (0, "1 2 3 1 2 3")

    def test_slide_unknown_chord(self, capsys):
        code, _, err = run(capsys, "slide", "1 1", "--move", "0", "--along", "7")
        assert code == 1

    def test_interlace(self, capsys):
        code, out, _ = run(capsys, "interlace", "1 2 1 3 2 3")
        assert code == 0
        assert out.strip().splitlines()[-1] == "sequence: (1,1,2)"


class TestTable:
    def test_exits_clean_and_is_byte_stable(self, capsys):
        code1, out1, _ = run(capsys, "table")
        code2, out2, _ = run(capsys, "table")
        assert code1 == code2 == 0
        assert out1 == out2
        assert "d4_18" in out1
        assert "errata:" in out1

    def test_json_has_all_rows(self, capsys):
        code, out, _ = run(capsys, "table", "--json")
        payload = json.loads(out)
        assert len(payload["rows"]) == 18
        assert payload["rows"][0]["gamma"] == [0, 8, 8]


class TestUsageErrors:
    def test_unknown_command(self, capsys):
        assert run(capsys, "frobnicate")[0] == 1

    def test_missing_argument(self, capsys):
        assert run(capsys, "poly")[0] == 1
