import json
from fractions import Fraction

from outerdom import __version__
from outerdom.run.utils.save import SCHEMA_VERSION, format_value, rows_to_csv, save_document, save_rows


def test_format_value():
    assert format_value(Fraction(24, 5)) == "4.800000"
    assert format_value(Fraction(2, 3)) == "0.666667"
    assert format_value(7) == 7


def test_csv_has_header_and_lf_endings():
    text = rows_to_csv([{"n": 10, "ratio": Fraction(3)}, {"n": 20, "ratio": Fraction(4)}])
    assert text == "n,ratio\n10,3.000000\n20,4.000000\n"
    assert rows_to_csv([]) == ""


def test_rows_to_stdout(capsys):
    save_rows([{"a": 1}], None)
    assert capsys.readouterr().out == "a\n1\n"


def test_json_rows(tmp_path):
    path = tmp_path / "out" / "rows.json"
    messages = []
    save_rows([{"n": 10, "ratio": Fraction(24, 5)}], path, "json", print_fct=messages.append)
    assert json.loads(path.read_text()) == [{"n": 10, "ratio": 4.8}]
    assert messages == [f"Saved results to '{path}'"]


def test_document_is_tagged(tmp_path):
    path = tmp_path / "doc.json"
    save_document({"size": 2}, path, print_fct=lambda _: None, extra=True)
    assert json.loads(path.read_text()) == {
        "schema": SCHEMA_VERSION,
        "outerdom_version": __version__,
        "size": 2,
        "extra": True,
    }
