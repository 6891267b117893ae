import pytest

from gzlie.scalars import rat, ZERO
from gzlie.matrices import Mat
from gzlie.liealg import make_algebra
from gzlie.invariants import partial_kw
from gzlie.docio import (DocumentError, parse_matrix_doc, emit_matrix_doc,
                         emit_invariant_doc, parse_invariant_doc,
                         analysis_report, analysis_text)
from gzlie.rand import Sampler


def test_matrix_doc_round_trip():
    ctx = make_algebra("so", 5)
    x = Sampler(8).algebra_element(ctx)
    doc = emit_matrix_doc(ctx, x)
    ctx2, y = parse_matrix_doc(doc)
    assert y == x and ctx2.describe() == "so(5)"


@pytest.mark.parametrize("doc,fragment", [
    ([1, 2], "JSON object"),
    ({"algebra": "sp", "n": 4, "entries": []}, "'algebra'"),
    ({"algebra": "so", "n": 0, "entries": []}, "'n'"),
    ({"algebra": "so", "n": 3, "entries": [["0"] * 3] * 2}, "3x3"),
    ({"algebra": "gl", "n": 2, "entries": [["0", "zzz"], ["0", "0"]]},
     "(1,2)"),
])
def test_matrix_doc_errors_carry_location(doc, fragment):
    with pytest.raises(DocumentError) as err:
        parse_matrix_doc(doc)
    assert fragment in str(err.value)


def test_matrix_doc_membership_enforced():
    doc = {"algebra": "so", "n": 3,
           "entries": [["1", "0", "0"], ["0", "0", "0"], ["0", "0", "1"]]}
    with pytest.raises(DocumentError) as err:
        parse_matrix_doc(doc)
    assert "not an element" in str(err.value)


def test_invariant_doc_round_trip():
    ctx = make_algebra("so", 6)
    vec = partial_kw(ctx, Sampler(3).algebra_element(ctx))
    doc = emit_invariant_doc(vec)
    back = parse_invariant_doc(doc)
    assert back.values == vec.values and back.kind == "partial"
    with pytest.raises(DocumentError):
        parse_invariant_doc({"kind": "other", "values": []})
    with pytest.raises(DocumentError):
        parse_invariant_doc({"kind": "partial", "values": ["??"]})


def test_analysis_report_fields_and_text():
    ctx = make_algebra("so", 5)
    x = Sampler(21).algebra_element(ctx)
    rep = analysis_report(ctx, x)
    for key in ("coincidence", "regular", "nsreg", "sreg", "jacobian_rank",
                "jacobian_full_rank", "centralizer_dims", "partial_values"):
        assert key in rep
    assert len(rep["centralizer_dims"]) == 4     # levels 2..5
    text = analysis_text(rep)
    assert "so(5)" in text and "coincidence" in text
    # deterministic given the same element
    assert analysis_report(ctx, x) == rep
