"""Parsing, rendering, window syntax, and the structure-constant exports."""

import csv
import io
import json
from fractions import Fraction
from random import Random

import pytest

from blocklie import (
    Algebra,
    CentralNotAllowedError,
    Element,
    NegativeSecondIndexError,
    ParseError,
    Window,
    ZeroDenominatorError,
    parse_element,
    parse_window,
    render_element,
)
from blocklie.randgen import random_element
from blocklie.textio import (
    CSV_COLUMNS,
    bracket_records,
    read_structure_csv,
    write_structure_csv,
    write_structure_json,
)

L = Element.basis


def test_parse_fixed_values():
    assert parse_element("L[3,2]") == L(3, 2)
    assert parse_element("-3/2*L[0,3] + L[0,3]") == Fraction(-1, 2) * L(0, 3)
    assert parse_element("2*L[1,0] - L[-2,4]") == 2 * L(1, 0) - L(-2, 4)
    assert parse_element("0").is_zero()
    assert parse_element("0*L[1,2]").is_zero()
    assert parse_element(" - L[ 1 , 0 ] ") == -L(1, 0)


def test_parse_combines_repeated_terms():
    assert parse_element("L[1,0]+L[1,0]+L[1,0]") == 3 * L(1, 0)


def test_parse_central_terms():
    x = parse_element("2*c + L[0,0]", Algebra.EXTENDED)
    assert x.central == 2
    assert parse_element("c - c", Algebra.EXTENDED).is_zero()


def test_parse_rejects_central_outside_extended():
    with pytest.raises(CentralNotAllowedError):
        parse_element("c")


@pytest.mark.parametrize(
    "text",
    ["", "L[1", "L[1,0] +", "L(1,0)", "2**L[1,0]", "L[1,0] L[2,0]", "+", "1/",
     "L[a,0]", "--L[1,0]"],
)
def test_parse_rejects_malformed_input(text):
    with pytest.raises(ParseError):
        parse_element(text)


def test_parse_error_carries_an_offset():
    with pytest.raises(ParseError) as err:
        parse_element("L[1,0] @ L[2,0]")
    assert err.value.offset == 7
    assert "offset 7" in str(err.value)


def test_parse_rejects_negative_second_index():
    with pytest.raises(NegativeSecondIndexError):
        parse_element("L[1,-2]")


def test_parse_rejects_zero_denominator():
    with pytest.raises(ZeroDenominatorError):
        parse_element("1/0*L[1,0]")


def test_render_fixed_values():
    assert render_element(Element.zero()) == "0"
    assert render_element(-5 * L(3, 2)) == "-5*L[3,2]"
    assert render_element(L(1, 0) - L(2, 0)) == "L[1,0] - L[2,0]"
    assert render_element(Fraction(1, 2) * L(0, 1)) == "1/2*L[0,1]"
    x = 4 * L(0, 0) + Element.central_term(1)
    assert render_element(x) == "4*L[0,0] + c"
    assert render_element(Element.central_term(-2)) == "-2*c"


def test_render_orders_terms_by_index():
    x = L(2, 0) + L(-1, 3) + L(-1, 1)
    assert render_element(x) == "L[-1,1] + L[-1,3] + L[2,0]"


def test_round_trip_random_elements():
    rng = Random(21)
    for _ in range(100):
        x = random_element(rng, allow_central=True)
        assert parse_element(render_element(x), Algebra.EXTENDED) == x


def test_parse_window():
    assert parse_window("-6:6:4") == Window(-6, 6, 4)
    assert parse_window("0:0:0") == Window(0, 0, 0)
    for bad in ("1:2", "a:b:c", "5:1:2", "0:0:-1", "1:2:3:4"):
        with pytest.raises(ValueError):
            parse_window(bad)


def test_bracket_records_smallest_window():
    records = bracket_records(Algebra.BLOCK, Window(0, 1, 0))
    assert len(records) == 2
    first, second = records
    assert first["left"] == [0, 0] and first["right"] == [1, 0]
    assert first["terms"] == [{"alpha": 1, "i": 0, "coeff": "-1"}]
    assert second["terms"] == [{"alpha": 1, "i": 0, "coeff": "1"}]
    assert first["central"] == "0"


def test_bracket_records_extended_central_column():
    records = bracket_records(Algebra.EXTENDED, Window(-2, 2, 0))
    pair = [r for r in records if r["left"] == [-2, 0] and r["right"] == [2, 0]]
    assert pair[0]["central"] == "-1"
    assert pair[0]["terms"] == [{"alpha": 0, "i": 0, "coeff": "-4"}]


def test_json_payload_shape():
    buf = io.StringIO()
    count = write_structure_json(Algebra.FAMILY1, Window(-1, 1, 1), buf)
    payload = json.loads(buf.getvalue())
    assert payload["variant"] == "family1"
    assert payload["window"] == {"alpha_min": -1, "alpha_max": 1, "i_max": 1}
    assert count == len(payload["brackets"]) > 0
    assert buf.getvalue().endswith("\n")


def test_csv_round_trips_to_the_json_records():
    for algebra, window in [
        (Algebra.BLOCK, Window(-2, 2, 1)),
        (Algebra.EXTENDED, Window(-2, 2, 0)),
    ]:
        jbuf, cbuf = io.StringIO(), io.StringIO()
        write_structure_json(algebra, window, jbuf)
        write_structure_csv(algebra, window, cbuf)
        assert json.loads(jbuf.getvalue())["brackets"] == read_structure_csv(
            io.StringIO(cbuf.getvalue())
        )


def test_csv_header_and_exact_rows():
    buf = io.StringIO()
    write_structure_csv(Algebra.BLOCK, Window(0, 1, 0), buf)
    rows = list(csv.reader(io.StringIO(buf.getvalue())))
    assert rows[0] == CSV_COLUMNS
    assert rows[1] == ["0", "0", "1", "0", "1", "0", "-1", "0"]
    assert rows[2] == ["1", "0", "0", "0", "1", "0", "1", "0"]


def test_read_structure_csv_rejects_a_wrong_header():
    with pytest.raises(ValueError):
        read_structure_csv(io.StringIO("alpha,beta\n1,2\n"))
