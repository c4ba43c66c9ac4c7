import json
from fractions import Fraction

import jsonschema
import pytest

from conftest import BINARY_CORPUS, GENERAL_CORPUS, ONE, X
from powcert.certify import (
    CERTIFICATE_SCHEMA,
    COMPLETE_ABOVE_THRESHOLD,
    COMPLETE_ALL_N,
    certify,
    demo,
    demo_sequence,
    emit_report,
    load_polynomial,
    load_sequence,
    parse_sequence,
    spot_check_beyond,
)
from powcert.errors import HypothesisViolation, InvariantFailure, SequenceFormatError
from powcert.recurrence import PowerSumSequence, term
from powcert.search import search_powers

COUNTER = GENERAL_CORPUS["counterexample"]


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return path


def test_load_counterexample(tmp_path):
    path = write(tmp_path, "c.json", {"coefficients": ["1", "2", "1"], "roots": [["0", "0", "1"], ["0", "1"], ["1"]]})
    assert load_sequence(path) == COUNTER


def test_load_rational_function_coefficients(tmp_path):
    data = {"coefficients": [{"numerator": ["1"], "denominator": ["1", "1"]}, "-5/2"], "roots": [["0", "0", "1"], ["1", "1"]]}
    seq = load_sequence(write(tmp_path, "r.json", data))
    assert seq.coefficients[0].denominator == X + 1


def test_load_rejects_degenerate_when_strict(tmp_path):
    path = write(tmp_path, "d.json", {"coefficients": ["1", "1"], "roots": [["0", "1"], ["0", "2"]]})
    load_sequence(path)
    with pytest.raises(HypothesisViolation, match="non-degenerate"):
        load_sequence(path, strict=True)


@pytest.mark.parametrize(
    "data,field",
    [
        ({"coefficients": [], "roots": []}, ("roots",)),
        ({"roots": [["1"]]}, ("coefficients",)),
        ({"coefficients": ["1", "x"], "roots": [["1"], ["0", "1"]]}, ("coefficients", 1)),
        ({"coefficients": ["1", "1"], "roots": [["1"], "oops"]}, ("roots", 1)),
        ({"coefficients": ["1", "1"], "roots": [["1"], ["1/0"]]}, ("roots", 1)),
        ([1, 2], ()),
    ],
)
def test_parse_errors_name_the_field(data, field):
    with pytest.raises(SequenceFormatError) as info:
        parse_sequence(data)
    assert info.value.field == field


def test_invalid_json_reports_position(tmp_path):
    with pytest.raises(SequenceFormatError) as info:
        load_sequence(write(tmp_path, "bad.json", '{"roots": [\n  ["1",]\n]}'))
    assert info.value.line == 2


def test_load_polynomial_forms(tmp_path):
    assert load_polynomial(write(tmp_path, "a.json", ["1", "0", "1"])) == X**2 + 1
    assert load_polynomial(write(tmp_path, "b.json", {"polynomial": ["0", "1/2"]})) == Fraction(1, 2) * X
    with pytest.raises(SequenceFormatError):
        load_polynomial(write(tmp_path, "c.json", {"poly": []}))


def test_search_counterexample():
    found = search_powers(COUNTER, 0, 10)
    assert [n for n, _ in found] == list(range(2, 11))
    for n, w in found:
        assert (w.exponent, w.monic_root, w.leading_coefficient) == (2, X**n + 1, 1)


def test_search_rejects_bad_range():
    with pytest.raises(ValueError):
        search_powers(COUNTER, 5, 3)


def test_search_parallel_matches_serial():
    assert search_powers(COUNTER, 0, 30, workers=3) == search_powers(COUNTER, 0, 30)


def test_certify_binary_basic():
    cert = certify(BINARY_CORPUS["binary-basic"])
    assert cert.theorem == 1
    assert cert.bound.index_bound == 80
    assert cert.searched_range == (0, 80)
    assert cert.completeness == COMPLETE_ALL_N
    for n, w in cert.catalogue:
        assert w.verifies(term(cert.sequence, n))


def test_certify_counterexample():
    cert = certify(COUNTER)
    assert cert.theorem == 2
    assert (cert.bound.index_bound, cert.bound.exponent_threshold) == (36, 2)
    assert cert.completeness == COMPLETE_ABOVE_THRESHOLD
    assert len(cert.catalogue) == 35


def test_certify_rejects_degenerate():
    with pytest.raises(HypothesisViolation) as info:
        certify(PowerSumSequence((1, 1), (X, 2 * X)))
    assert any("non-degenerate" in v for v in info.value.violations)


@pytest.mark.parametrize("name", ["half-half", "constant-second"])
def test_over_the_bound_spot_check(name):
    cert = certify(BINARY_CORPUS[name])
    assert spot_check_beyond(cert) == []


def test_theorem1_witnesses_are_found_when_present():
    # G_1 = (x^4 + 2x^2) + 1 = (x^2 + 1)^2
    seq = PowerSumSequence((1, 1), (X**4 + 2 * X**2, ONE))
    cert = certify(seq)
    assert (1, 2) in {(n, w.exponent) for n, w in cert.catalogue}


def test_emit_report_json_is_schema_valid_and_stable():
    cert = demo("counterexample")
    doc = emit_report(cert)
    jsonschema.validate(json.loads(doc), CERTIFICATE_SCHEMA)
    assert doc == emit_report(demo("counterexample"))
    assert "timing" not in json.loads(doc)
    assert "timing" in json.loads(emit_report(cert, include_timing=True))


def test_emit_report_text():
    text = emit_report(demo("binary-basic"), "text")
    assert "theorem applied: 1" in text
    assert "index bound C: 80" in text
    assert "catalogue" in text
    text = emit_report(demo("counterexample"), "text")
    assert "exponent threshold M*: 2" in text
    assert "x^7 + 1" in text
    with pytest.raises(ValueError):
        emit_report(demo("binary-basic"), "yaml")


def test_emit_refuses_tampered_certificate():
    cert = demo("counterexample")
    n, w = cert.catalogue[0]
    bad = type(w)(w.exponent, w.monic_root + 1, w.leading_coefficient)
    forged = type(cert)(cert.sequence, cert.theorem, cert.bound, cert.searched_range, ((n, bad),), cert.completeness)
    with pytest.raises(InvariantFailure):
        emit_report(forged)


def test_demo_names():
    assert demo_sequence("counterexample") == COUNTER
    with pytest.raises(KeyError):
        demo("nope")
