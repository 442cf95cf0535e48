import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from capclass.cli import main, parse_capfile, render_capfile
from capclass.errors import CapFileError
from capclass.gf2 import PointSet
from capclass.templates import instantiate


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCapFileFormat:
    def test_render_matches_documented_layout(self):
        text = render_capfile(PointSet(7, (15, 124)))
        assert text == "capfile v1 n=7\n1111000\n0011111\n"

    def test_round_trip(self):
        s = instantiate("T12_7555").points
        assert parse_capfile(render_capfile(s)) == s

    def test_render_parse_render_is_a_fixed_point(self):
        text = render_capfile(instantiate("T11_555_332").points)
        assert render_capfile(parse_capfile(text)) == text

    def test_unsorted_input_is_accepted(self):
        assert parse_capfile("capfile v1 n=3\n110\n100\n").sorted_masks() == (1, 3)

    def test_duplicates_rejected(self):
        with pytest.raises(CapFileError):
            parse_capfile("capfile v1 n=3\n110\n110\n")

    def test_bad_header(self):
        with pytest.raises(CapFileError):
            parse_capfile("points v1 n=3\n110\n")

    def test_bad_line_length(self):
        with pytest.raises(CapFileError):
            parse_capfile("capfile v1 n=3\n1100\n")

    def test_needs_at_least_one_point(self):
        with pytest.raises(CapFileError):
            parse_capfile("capfile v1 n=3\n")

    @given(st.integers(1, 10), st.data())
    @settings(max_examples=50)
    def test_random_round_trips(self, n, data):
        masks = data.draw(
            st.lists(st.integers(0, (1 << n) - 1), min_size=1, max_size=12, unique=True)
        )
        s = PointSet(n, masks)
        assert parse_capfile(render_capfile(s)) == s


class TestTemplateCommand:
    def test_emits_the_ten_cap(self, capsys):
        code, out, _ = run(capsys, "template", "T10_55_2")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "capfile v1 n=7"
        assert len(lines) == 11
        assert "1111000" in lines and "0011111" in lines

    def test_independent_frame_has_eight_lines(self, capsys):
        code, out, _ = run(capsys, "template", "INDEPENDENT8")
        assert code == 0
        assert len(out.splitlines()) == 9

    def test_unknown_label_exits_2(self, capsys):
        code, _, err = run(capsys, "template", "BOGUS")
        assert code == 2
        assert "unknown template label" in err

    def test_output_is_deterministic(self, capsys):
        _, first, _ = run(capsys, "template", "T12_7555")
        _, second, _ = run(capsys, "template", "T12_7555")
        assert first == second


class TestCheckCommand:
    def test_twelve_cap_report(self, tmp_path, capsys):
        path = tmp_path / "twelve.cap"
        path.write_text(render_capfile(instantiate("T12_7555").points))
        code, out, _ = run(capsys, "check", str(path))
        assert code == 0
        payload = json.loads(out)
        assert payload["is_cap"] is True
        assert payload["size"] == 12
        assert payload["dim"] == 7
        assert payload["complete"] is True
        assert any(t.startswith("5-5-5-5-") for t in payload["census"])

    def test_ten_cap_is_incomplete(self, tmp_path, capsys):
        path = tmp_path / "ten.cap"
        path.write_text(render_capfile(instantiate("T10_55_2").points))
        _, out, _ = run(capsys, "check", str(path))
        assert json.loads(out)["complete"] is False

    def test_quad_is_reported(self, tmp_path, capsys):
        path = tmp_path / "quad.cap"
        path.write_text("capfile v1 n=3\n000\n100\n010\n110\n")
        code, out, _ = run(capsys, "check", str(path))
        assert code == 0
        payload = json.loads(out)
        assert payload["is_cap"] is False
        assert len(payload["quad"]) == 4

    def test_parse_error_exits_3(self, tmp_path, capsys):
        path = tmp_path / "broken.cap"
        path.write_text("capfile v1 n=3\n2\n")
        code, _, err = run(capsys, "check", str(path))
        assert code == 3
        assert "error" in err

    def test_missing_file_exits_3(self, capsys):
        code, _, _ = run(capsys, "check", "/nonexistent/never.cap")
        assert code == 3


class TestClosureCommand:
    def test_plane_closure(self, tmp_path, capsys):
        path = tmp_path / "p.cap"
        path.write_text("capfile v1 n=3\n000\n100\n010\n")
        code, out, _ = run(capsys, "closure", str(path))
        assert code == 0
        assert parse_capfile(out).sorted_masks() == (0, 1, 2, 3)


class TestEquivCommand:
    def write(self, tmp_path, name, label):
        path = tmp_path / name
        path.write_text(render_capfile(instantiate(label).points))
        return str(path)

    def test_equivalent_pair_comes_with_a_map(self, tmp_path, capsys):
        a = self.write(tmp_path, "a.cap", "T11_755_443")
        b = self.write(tmp_path, "b.cap", "T11_555_332")
        code, out, _ = run(capsys, "equiv", a, b)
        assert code == 0
        payload = json.loads(out)
        assert payload["equivalent"] is True
        assert len(payload["map"]["matrix"]) == 7
        assert len(payload["map"]["translation"]) == 7

    def test_file_against_itself(self, tmp_path, capsys):
        a = self.write(tmp_path, "a.cap", "T10_55_3")
        _, out, _ = run(capsys, "equiv", a, a)
        assert json.loads(out)["equivalent"] is True

    def test_distinct_classes(self, tmp_path, capsys):
        a = self.write(tmp_path, "a.cap", "T10_55_2")
        b = self.write(tmp_path, "b.cap", "T10_55_3")
        _, out, _ = run(capsys, "equiv", a, b)
        assert json.loads(out) == {"equivalent": False}

    def test_equivalence_across_ambient_dimensions(self, tmp_path, capsys):
        # same abstract cap embedded in two ambient spaces: equivalent,
        # but no square map exists between the spaces
        small = tmp_path / "small.cap"
        small.write_text("capfile v1 n=3\n000\n100\n010\n001\n")
        wide = tmp_path / "wide.cap"
        wide.write_text("capfile v1 n=4\n0000\n1000\n0100\n0010\n")
        _, out, _ = run(capsys, "equiv", str(small), str(wide))
        payload = json.loads(out)
        assert payload["equivalent"] is True
        assert "map" not in payload

    def test_non_cap_input_exits_3(self, tmp_path, capsys):
        bad = tmp_path / "bad.cap"
        bad.write_text("capfile v1 n=3\n000\n100\n010\n110\n")
        good = self.write(tmp_path, "good.cap", "R5")
        code, _, _ = run(capsys, "equiv", str(bad), good)
        assert code == 3


class TestClassifyCommand:
    def test_toy_run_with_output_directory(self, tmp_path, capsys):
        out_dir = tmp_path / "reps"
        code, out, _ = run(capsys, "classify", "3", "6", "--out", str(out_dir))
        assert code == 0
        payload = json.loads(out)
        assert payload["schema"] == "classtable v1"
        assert payload["counts"] == {"4": 1, "5": 0}
        written = sorted(p.name for p in out_dir.iterdir())
        assert written == ["dim3_size4_class0.cap"]
        rep = parse_capfile((out_dir / written[0]).read_text())
        assert len(rep) == 4

    def test_deterministic_output(self, capsys):
        _, first, _ = run(capsys, "classify", "3", "6")
        _, second, _ = run(capsys, "classify", "3", "6")
        assert first == second


class TestVerifyPaperCommand:
    def test_reduced_run_passes_and_is_schema_valid(self, capsys):
        code, out, _ = run(
            capsys, "verify-paper", "--json", "--fuzz-trials", "2", "--exchange-trials", "20"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["schema"] == "report v1"
        assert payload["all_passed"] is True
        ids = [c["id"] for c in payload["claims"]]
        assert len(ids) == 12 and len(set(ids)) == 12

    def test_human_readable_lines(self, capsys):
        code, out, _ = run(
            capsys, "verify-paper", "--fuzz-trials", "1", "--exchange-trials", "5"
        )
        assert code == 0
        assert out.count("pass") >= 12
        assert "all claims passed" in out

    def test_stdout_is_byte_identical_across_runs(self, capsys):
        argv = ["verify-paper", "--json", "--fuzz-trials", "2", "--exchange-trials", "10"]
        _, first, _ = run(capsys, *argv)
        _, second, _ = run(capsys, *argv)
        assert first == second

    def test_corrupted_template_data_fails_the_run(self, capsys, monkeypatch):
        from capclass import templates

        broken = dict(templates._EXPECTED_TYPES)
        broken["R5"] = ((7,), ())
        monkeypatch.setattr(templates, "_EXPECTED_TYPES", broken)
        code, out, _ = run(
            capsys, "verify-paper", "--fuzz-trials", "1", "--exchange-trials", "5"
        )
        assert code == 1
        assert "FAIL" in out
