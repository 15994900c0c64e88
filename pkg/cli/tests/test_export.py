import json

from cli.export import ROW_FIELDS, certificate_to_human, rows_to_csv, rows_to_human, rows_to_json, write_output
from cli.schemas import ParamsRow, certificate_to_document, row_from_params
from qmds.constructions import ConstructionSpec, build
from qmds.quantum import hermitian_to_quantum, propagate_steps


def sample_rows():
    return [
        ParamsRow(family="T43ii", q=4, s=2, r=3, t=1, k=3, n=10, k_q=4, d=4,
                  provenance="T43ii:q=4:s=2:r=3:t=1:k=3", verified=True),
        ParamsRow(q=11, n=96, k_q=82, d=8, provenance="given>propagate"),
    ]


def test_rows_to_csv_cells():
    lines = rows_to_csv(sample_rows()).splitlines()
    assert lines[0] == ",".join(ROW_FIELDS)
    assert lines[1] == "T43ii,4,2,3,1,3,10,4,4,T43ii:q=4:s=2:r=3:t=1:k=3,true"
    assert lines[2] == ",11,,,,,96,82,8,given>propagate,"


def test_rows_to_json_is_sorted_and_stable():
    text = rows_to_json(sample_rows())
    payload = json.loads(text)
    assert payload[0]["verified"] is True
    assert payload[1]["family"] is None
    assert text == rows_to_json(sample_rows())
    assert text.endswith("\n")


def test_rows_to_human_labels():
    lines = rows_to_human(sample_rows()).splitlines()
    assert lines[0].startswith("[[10, 4, 4]]_4")
    assert "(verified, d > q/2+1)" in lines[0]
    assert lines[1].startswith("[[96, 82, 8]]_11")
    assert rows_to_human([]) == ""


def test_certificate_to_human():
    certificate = build(ConstructionSpec.create("T63", 7, 4, k=3, t=1), level="gram")
    text = certificate_to_human(certificate_to_document(certificate))
    assert text.splitlines() == [
        "T63 q=7 s=4 r=3 t=1 k=3",
        "classical [18, 3, 16] over GF(7^2), solved by shifted",
        "quantum [[18, 12, 4]]_7",
        "checks: gram_zero=true, power_sum=true",
    ]


def test_write_output_creates_parents(tmp_path, capsys):
    target = tmp_path / "out" / "rows.csv"
    write_output("a,b\n", str(target))
    assert target.read_text() == "a,b\n"

    write_output("to stdout\n")
    assert capsys.readouterr().out == "to stdout\n"


def test_rows_to_human_marks_follow_params():
    given = hermitian_to_quantum(97, 8, 11, "given")
    chain = [given] + propagate_steps(given, 4)
    lines = rows_to_human([row_from_params(p) for p in chain]).splitlines()
    for p, line in zip(chain, lines):
        assert ("d > q/2+1" in line) == p.exceeds_half_q
    # d runs 9, 8, 7, 6, 5 for q = 11: the mark stops at d = 6
    assert [p.exceeds_half_q for p in chain] == [True, True, True, False, False]
