import re
from fractions import Fraction as Fr

import pytest

from critport import data
from critport.cli import main
from critport.document import (
    DocumentError,
    RenderOptions,
    document_from_portrait,
    parse_document,
    serialize_document,
)
from critport.portrait import build_jstar, gen_special_arguments, parse_family
from critport.render import RenderSpec, render_svg
from helpers import triangle_system, two_cycle_system

TWO_CYCLE = str(data.path("cubic_fatou_2cycle.json"))
TRIANGLE = str(data.path("cubic_fixed_triangle.json"))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


class TestDocument:
    @pytest.mark.parametrize("name", data.names())
    def test_shipped_round_trip(self, name):
        text = data.path(name).read_text()
        assert serialize_document(parse_document(text)) == text

    def test_round_trip_all_fields(self):
        doc = document_from_portrait(
            [[Fr(1, 4), Fr(7, 12)]], [], gamma=[Fr(13, 36)], degree=2, render=RenderOptions(300, False)
        )
        text = serialize_document(doc)
        assert parse_document(text) == doc
        assert serialize_document(parse_document(text)) == text

    @pytest.mark.parametrize(
        "text,needle",
        [
            ('{\n  "fatou": [["1/4", ', "line 2"),
            ('{\n  "fatou": [["1/4", "2/8"]],\n  "julia": []\n}\n', "line 2: field fatou[0]"),
            ('{\n  "fatou": [],\n  "julia": [[1, 2]]\n}\n', "line 3"),
            ('{\n  "fatou": []\n}\n', "missing field julia"),
            ('{\n  "fatou": [],\n  "julia": [],\n  "colour": 1\n}\n', "line 4: unknown field colour"),
            ('{"fatou": [], "julia": [], "render": {"size": 0}}', "render.size"),
            ('{"fatou": [], "julia": [], "degree": "3"}', "field degree"),
            ("[]", "JSON object"),
        ],
    )
    def test_parse_errors(self, text, needle):
        with pytest.raises(DocumentError, match=re.escape(needle)):
            parse_document(text)

    def test_declared_degree_checked(self):
        doc = parse_document('{"degree": 4, "fatou": [["0", "1/3", "2/3"]], "julia": []}')
        with pytest.raises(ValueError, match="declared degree 4"):
            doc.portrait()


class TestCommands:
    def test_validate(self, capsys):
        assert run(capsys, "validate", "--input", TWO_CYCLE)[:2] == (
            0,
            "degree=3; unlinked PASS; right-unlinked PASS; partitions PASS\n",
        )

    def test_validate_linked(self, capsys, tmp_path):
        path = write(tmp_path, "l.json", '{"fatou": [["0", "1/2"]], "julia": [["1/4", "3/4"]]}')
        code, out, _ = run(capsys, "validate", "--input", path)
        assert code == 1 and out.strip() == "linked sets: {0,1/2} vs {1/4,3/4}"

    def test_validate_empty(self, capsys, tmp_path):
        path = write(tmp_path, "e.json", '{"fatou": [], "julia": []}')
        code, out, _ = run(capsys, "validate", "--input", path)
        assert code == 1 and out.strip() == "degree < 2"

    def test_parse_error_exit(self, capsys, tmp_path):
        path = write(tmp_path, "bad.json", '{"fatou": [["1/3"')
        code, _, err = run(capsys, "validate", "--input", path)
        assert code == 2 and "line 1" in err
        code, _, err = run(capsys, "validate", "--input", str(tmp_path / "missing.json"))
        assert code == 2
        assert run(capsys, "validate")[0] == 2

    def test_classes(self, capsys):
        code, out, _ = run(capsys, "classes", "--input", TWO_CYCLE)
        assert code == 0
        assert out == (
            "Gamma = {13/36,31/36}\n"
            "F* = {{1/4,13/36,7/12},{3/4,31/36,1/12}}\n"
            "J* = {{0},{1/12},{1/4,3/4},{13/36},{7/12},{31/36}}\n"
        )

    def test_classes_round_trip(self, capsys):
        _, out, _ = run(capsys, "classes", "--input", TWO_CYCLE)
        sys_ = two_cycle_system()
        gamma = gen_special_arguments(sys_)
        lines = dict(line.split(" = ") for line in out.splitlines())
        assert set(parse_family(lines["J*"])) == set(build_jstar(sys_, gamma).parts)

    def test_classes_triangle(self, capsys):
        _, out, _ = run(capsys, "classes", "--input", TRIANGLE, "--gamma", "none")
        assert "J* = {{0},{1/3},{2/3}}" in out and "F* = {{0,1/3,2/3}}" in out

    def test_gamma_file(self, capsys, tmp_path):
        good = write(tmp_path, "g.txt", "13/36, 31/36")
        code, out, _ = run(capsys, "classes", "--input", TWO_CYCLE, "--gamma", good)
        assert code == 0 and out.startswith("Gamma = {13/36,31/36}")
        bad = write(tmp_path, "b.txt", '["1/5"]')
        assert run(capsys, "classes", "--input", TWO_CYCLE, "--gamma", bad)[0] == 1
        junk = write(tmp_path, "j.txt", "1/5/7")
        assert run(capsys, "classes", "--input", TWO_CYCLE, "--gamma", junk)[0] == 2

    def test_web(self, capsys):
        code, out, _ = run(capsys, "web", "--input", TWO_CYCLE)
        assert code == 0 and out.count("\n  R ") == 7 and out.count("\n  E ") == 6

    def test_levy(self, capsys, tmp_path):
        assert run(capsys, "levy", "--input", TWO_CYCLE)[:2] == (0, "no Levy witnesses\n")
        split = write(tmp_path, "split.txt", "{{0},{1/12},{1/4},{3/4},{13/36},{7/12},{31/36}}")
        code, out, _ = run(capsys, "levy", "--input", TWO_CYCLE, "--partition", split)
        assert code == 1 and out.splitlines()[0] == "LEVY WITNESS: (1/4, 3/4)"
        short = write(tmp_path, "short.txt", "{{0}}")
        assert run(capsys, "levy", "--input", TWO_CYCLE, "--partition", short)[0] == 1

    def test_twist(self, capsys):
        assert run(capsys, "twist", "3", "1")[:2] == (0, "x_0 = 3/2\n")
        assert run(capsys, "twist", "2,2", "1/2,1/2")[1] == "x_0 = 1\nx_1 = 1\n"
        assert run(capsys, "twist", "--external", "3", "1/3")[1] == "t = 1/2\n"
        assert run(capsys, "twist", "3,x", "1")[0] == 2
        assert run(capsys, "twist", "1", "1")[0] == 1

    def test_pullback(self, capsys):
        code, out, _ = run(capsys, "pullback", "--input", TWO_CYCLE, "1/4", "4")
        assert code == 0
        assert "total length = 1/81" in out and "largest arc = 1/162" in out
        assert run(capsys, "pullback", "--input", TWO_CYCLE, "2/8", "4")[0] == 2


class TestSvg:
    def svg(self, capsys, *extra, path=TWO_CYCLE):
        code, out, _ = run(capsys, "svg", "--input", path, *extra)
        assert code == 0
        return out

    def test_counts(self, capsys):
        out = self.svg(capsys)
        assert len(re.findall(r'class="ray[ "]', out)) == 7
        assert out.count("<polygon") == 2
        assert out.count('class="hub"') == 1
        assert out.startswith("<?xml") and out.rstrip().endswith("</svg>")

    def test_triangle(self, capsys):
        out = self.svg(capsys, path=TRIANGLE)
        (poly,) = re.findall(r'<polygon class="critical-set fatou" points="([^"]+)"', out)
        assert len(poly.split()) == 3

    def test_labels(self, capsys):
        assert "<text" in self.svg(capsys, "--labels", "on")
        assert "<text" not in self.svg(capsys, "--labels", "off")

    def test_deterministic_file(self, capsys, tmp_path):
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        run(capsys, "svg", "--input", TWO_CYCLE, "--out", str(a))
        run(capsys, "svg", "--input", TWO_CYCLE, "--out", str(b))
        assert a.read_bytes() == b.read_bytes()

    def test_unwritable(self, capsys, tmp_path):
        code, _, _ = run(capsys, "svg", "--input", TWO_CYCLE, "--out", str(tmp_path / "no" / "x.svg"))
        assert code == 1

    def test_render_spec(self):
        sys_ = triangle_system()
        out = render_svg(sys_, build_jstar(sys_), spec=RenderSpec(size=200, labels=False))
        assert 'width="200"' in out
        with pytest.raises(ValueError):
            RenderSpec(size=0)
