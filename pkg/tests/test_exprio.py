"""Parser, printers, and the JSON record codec."""

import random

import pytest
from hypothesis import given, settings

from astheno.algebra import ETA1, Form, Monomial
from astheno.audit import random_form
from astheno.exprio import (
    ParseError,
    RecordError,
    from_record,
    parse,
    print_latex,
    print_text,
    to_record,
)
from astheno.scalars import Scalar

from conftest import forms


@given(forms())
@settings(max_examples=80)
def test_parse_print_round_trip(x):
    assert parse(print_text(x)) == x


@given(forms())
@settings(max_examples=80)
def test_record_round_trip(x):
    assert from_record(to_record(x)) == x


def test_round_trip_on_seeded_corpus():
    rng = random.Random(99)
    for _ in range(50):
        x = random_form(rng)
        assert parse(print_text(x)) == x
        assert from_record(to_record(x)) == x


def test_wedge_spellings_agree():
    assert parse(r"2*eta1/\eta2") == parse("2*eta1 /\\ eta2") == parse("2 * eta1 * eta2")


def test_parse_examples():
    assert parse("0").is_zero
    assert parse(r"eta1/\eta1").is_zero
    omega = parse(r"Phi1 + Phi2 - 2*eta1/\eta2")
    assert omega.homogeneous_degree() == 2
    assert parse("(a1 - b2)*Phi1^2") == parse(r"a1*Phi1/\Phi1 - b2*Phi1^2")
    assert parse("-1/2*eta2") == parse("(-1/2)*eta2")


def test_print_text_golden():
    from astheno.calculus import kahler_form

    assert print_text(Form.zero()) == "0"
    assert print_text(kahler_form()) == r"Phi2 + Phi1 - 2*eta1/\eta2"
    assert print_text(-1 * ETA1) == "-1*eta1"
    from fractions import Fraction

    half = Form.monomial(Monomial(0, 0, 2, 0), Scalar({(1, 0, 0, 0): Fraction(1, 2)}))
    assert print_text(half) == "1/2*a1*Phi1^2"


def test_print_latex_golden():
    from astheno.calculus import kahler_form

    assert print_latex(Form.zero()) == "0"
    assert (
        print_latex(kahler_form())
        == r"\Phi_2 + \Phi_1 - 2\,\eta_1\wedge\eta_2"
    )
    mixed = Form.monomial(Monomial(1, 1, 1, 0), Scalar({(0, 2, 0, 1): 3}))
    assert print_latex(mixed) == r"3\beta_1^2\beta_2\,\eta_1\wedge\eta_2\wedge\Phi_1"


@pytest.mark.parametrize(
    "text",
    [
        "",
        "eta1 +",
        "eta3",
        "Phi1^",
        "Phi1^-2",
        "2**eta1",
        "(eta1",
        "eta1)",
        "1/0",
        "a1 a2",
        r"/\eta1",
        "eta1 @ eta2",
        "-(1/2)*eta2",  # signs belong to rationals, not groups
    ],
)
def test_parse_rejects_bad_text(text):
    with pytest.raises(ParseError):
        parse(text)


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as info:
        parse("eta1 + @")
    assert info.value.line == 1
    assert info.value.col == 8


@pytest.mark.parametrize(
    "record",
    [
        {},
        {"terms": {}},
        {"terms": [], "extra": 1},
        {"terms": [{"eta1": 0, "eta2": 0, "phi1": 0, "phi2": 0}]},
        {"terms": [{"eta1": 2, "eta2": 0, "phi1": 0, "phi2": 0, "coeff": []}]},
        {"terms": [{"eta1": 0, "eta2": 0, "phi1": 0, "phi2": 0, "coeff": []}]},
        {
            "terms": [
                {
                    "eta1": 0, "eta2": 0, "phi1": 0, "phi2": 0,
                    "coeff": [{"a1": 0, "b1": 0, "a2": 0, "b2": 0, "num": 1, "den": 0}],
                }
            ]
        },
        {
            "terms": [
                {
                    "eta1": 0, "eta2": 0, "phi1": 1, "phi2": 0,
                    "coeff": [{"a1": 0, "b1": 0, "a2": 0, "b2": 0, "num": 1}],
                }
            ]
        },
        {
            "terms": [
                {
                    "eta1": True, "eta2": 0, "phi1": 0, "phi2": 0,
                    "coeff": [{"a1": 0, "b1": 0, "a2": 0, "b2": 0, "num": 1, "den": 1}],
                }
            ]
        },
    ],
)
def test_from_record_rejects_bad_records(record):
    with pytest.raises(RecordError):
        from_record(record)


def test_record_error_reports_path():
    bad = {"terms": [{"eta1": 3, "eta2": 0, "phi1": 0, "phi2": 0, "coeff": []}]}
    with pytest.raises(RecordError) as info:
        from_record(bad)
    assert "$.terms[0]" in str(info.value)
