"""Parsing, rendering, and structure-constant export.

Element grammar (whitespace ignored everywhere):

    element := '0' | signed-term { ('+'|'-') term }
    term    := [coeff '*'] basis
    coeff   := int ['/' posint]
    basis   := 'L[' int ',' nonnegint ']' | 'c'

Rendering is the exact inverse on canonical elements: terms sorted by
(alpha asc, i asc) with the central part last, unit coefficients elided,
integer coefficients without '/1', so parse(render(x)) == x.
"""

from __future__ import annotations

import csv
import json
from fractions import Fraction

from .brackets import bracket_for
from .elements import Algebra, Element, Window
from .errors import (
    CentralNotAllowedError,
    NegativeSecondIndexError,
    ParseError,
    ZeroDenominatorError,
)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        if self.pos >= len(self.text):
            return ""
        return self.text[self.pos]

    def take(self, char: str) -> bool:
        if self.peek() == char:
            self.pos += 1
            return True
        return False

    def expect(self, char: str):
        if not self.take(char):
            raise ParseError(f"expected {char!r}", self.pos)

    def integer(self, signed: bool) -> tuple[int, int]:
        """Consume an integer; returns (value, start offset)."""
        ch = self.peek()
        start = self.pos
        sign = 1
        if signed and ch in "+-":
            sign = -1 if ch == "-" else 1
            self.pos += 1
            self.skip_ws()
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise ParseError("expected an integer", self.pos)
        return sign * int(self.text[digits : self.pos]), start

    def at_end(self) -> bool:
        return self.peek() == ""


def parse_element(text: str, algebra: Algebra = Algebra.BLOCK) -> Element:
    """Parse element text; like terms are combined."""
    sc = _Scanner(text)
    if sc.peek() == "":
        raise ParseError("empty input", sc.pos)
    if sc.peek() == "0":
        mark = sc.pos
        sc.pos += 1
        if sc.at_end():
            return Element.zero()
        sc.pos = mark  # a term like 0*L[1,0]; reparse as signed-term
    terms: dict = {}
    central = Fraction(0)

    def accumulate(sign: int):
        coeff, index = _term(sc, algebra)
        coeff *= sign
        if index is None:
            nonlocal central
            central += coeff
        else:
            new = terms.get(index, Fraction(0)) + coeff
            if new:
                terms[index] = new
            else:
                terms.pop(index, None)

    sign = 1
    if sc.take("-"):
        sign = -1
    elif sc.take("+"):
        sign = 1
    accumulate(sign)
    while not sc.at_end():
        if sc.take("+"):
            accumulate(1)
        elif sc.take("-"):
            accumulate(-1)
        else:
            raise ParseError("expected '+' or '-' between terms", sc.pos)
    return Element(terms, central=central)


def _term(sc: _Scanner, algebra: Algebra):
    """One term; returns (coefficient, (alpha, i)) or (coefficient, None)
    for the central generator."""
    ch = sc.peek()
    coeff = Fraction(1)
    if ch.isdigit():
        num, _ = sc.integer(signed=False)
        den = 1
        if sc.take("/"):
            den, offset = sc.integer(signed=False)
            if den == 0:
                raise ZeroDenominatorError("zero denominator", offset)
        coeff = Fraction(num, den)
        sc.expect("*")
        ch = sc.peek()
    if ch == "L":
        sc.pos += 1
        sc.expect("[")
        alpha, _ = sc.integer(signed=True)
        sc.expect(",")
        i, offset = sc.integer(signed=True)
        if i < 0:
            raise NegativeSecondIndexError(
                "second basis index must be >= 0", offset
            )
        sc.expect("]")
        return coeff, (alpha, i)
    if ch == "c":
        if not algebra.allows_central:
            raise CentralNotAllowedError(
                f"central generator not defined in algebra {algebra.value!r}",
                sc.pos,
            )
        sc.pos += 1
        return coeff, None
    raise ParseError("expected a basis vector 'L[a,i]' or 'c'", sc.pos)


def _format_coeff(coeff: Fraction, body: str) -> str:
    mag = abs(coeff)
    if mag == 1:
        return body
    return f"{mag}*{body}"


def render_element(x: Element) -> str:
    """Canonical text form; '0' for the zero element."""
    if x.is_zero():
        return "0"
    parts = []
    for (alpha, i) in sorted(x.terms):
        parts.append((x.terms[(alpha, i)], f"L[{alpha},{i}]"))
    if x.central:
        parts.append((x.central, "c"))
    out = []
    for n, (coeff, body) in enumerate(parts):
        chunk = _format_coeff(coeff, body)
        if n == 0:
            out.append(chunk if coeff > 0 else f"-{chunk}")
        else:
            out.append(f" + {chunk}" if coeff > 0 else f" - {chunk}")
    return "".join(out)


def parse_window(text: str) -> Window:
    """Parse 'amin:amax:imax' (e.g. '-6:6:4')."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"window must be 'amin:amax:imax', got {text!r}")
    try:
        amin, amax, imax = (int(p) for p in parts)
    except ValueError:
        raise ValueError(f"window must be three integers, got {text!r}") from None
    return Window(amin, amax, imax)


def bracket_records(algebra: Algebra, window: Window) -> list[dict]:
    """One record per ordered basis pair in the window with a nonzero
    bracket, in lexicographic pair order.  Result terms are exact (no
    truncation to the window) and carry 'p/q' coefficient strings."""
    br = bracket_for(algebra)
    basis = window.indices()
    records = []
    for left in basis:
        x = Element.basis(*left)
        for right in basis:
            value = br(x, Element.basis(*right))
            if value.is_zero():
                continue
            records.append(
                {
                    "left": list(left),
                    "right": list(right),
                    "terms": [
                        {"alpha": g, "i": k, "coeff": str(value.terms[(g, k)])}
                        for (g, k) in sorted(value.terms)
                    ],
                    "central": str(value.central),
                }
            )
    return records


def write_structure_json(algebra: Algebra, window: Window, fp) -> int:
    records = bracket_records(algebra, window)
    payload = {
        "variant": algebra.value,
        "window": {
            "alpha_min": window.alpha_min,
            "alpha_max": window.alpha_max,
            "i_max": window.i_max,
        },
        "brackets": records,
    }
    json.dump(payload, fp, indent=2)
    fp.write("\n")
    return len(records)


CSV_COLUMNS = [
    "left_alpha",
    "left_i",
    "right_alpha",
    "right_i",
    "res_alpha",
    "res_i",
    "coeff",
    "central",
]


def write_structure_csv(algebra: Algebra, window: Window, fp) -> int:
    """Same records as the JSON export, one row per result term; a
    record with only a central part gets one row with empty result
    columns.  The central value repeats on every row of its record."""
    records = bracket_records(algebra, window)
    writer = csv.writer(fp, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        base = rec["left"] + rec["right"]
        if rec["terms"]:
            for term in rec["terms"]:
                writer.writerow(
                    base + [term["alpha"], term["i"], term["coeff"], rec["central"]]
                )
        else:
            writer.writerow(base + ["", "", "", rec["central"]])
    return len(records)


def read_structure_csv(fp) -> list[dict]:
    """Reassemble CSV rows into JSON-shaped records (for comparisons)."""
    reader = csv.reader(fp)
    header = next(reader)
    if header != CSV_COLUMNS:
        raise ValueError(f"unexpected CSV header {header!r}")
    records: list[dict] = []
    for row in reader:
        la, li, ra, ri, ga, gi, coeff, central = row
        pair = {"left": [int(la), int(li)], "right": [int(ra), int(ri)]}
        if not records or (
            records[-1]["left"] != pair["left"] or records[-1]["right"] != pair["right"]
        ):
            records.append({**pair, "terms": [], "central": central})
        if ga != "":
            records[-1]["terms"].append({"alpha": int(ga), "i": int(gi), "coeff": coeff})
        if records[-1]["central"] != central:
            raise ValueError(f"inconsistent central column in record {pair}")
    return records


def export_structure(algebra: Algebra, window: Window, fmt: str, fp) -> int:
    if fmt == "json":
        return write_structure_json(algebra, window, fp)
    if fmt == "csv":
        return write_structure_csv(algebra, window, fp)
    raise ValueError(f"unknown export format {fmt!r}")
