import json
from fractions import Fraction as F

import numpy as np
import pytest

from circulants import circ, mu_circ, rational_circ, skew_circ
from circulants.documents import (
    DocumentError,
    MatrixDocument,
    document_from_obj,
    document_to_obj,
    parse_documents,
    spectrum_from_obj,
    spectrum_to_obj,
)


def roundtrip(doc: MatrixDocument) -> MatrixDocument:
    return document_from_obj(json.loads(json.dumps(document_to_obj(doc))))


def test_circulant_roundtrip_is_exact():
    doc = MatrixDocument.from_circulant(circ(1.25, -2 + 0.1j, 3e-17))
    assert roundtrip(doc) == doc


def test_mu_circulant_roundtrip_is_exact():
    doc = MatrixDocument.from_mu_circulant(mu_circ((1, 2.5, -3j), (0.5 + 1j, 4)))
    assert roundtrip(doc) == doc


def test_skew_circulant_roundtrip():
    doc = MatrixDocument(kind="skew_circulant", n=3, first_row=(1 + 0j, 2 + 0j, 3 + 0j))
    assert roundtrip(doc) == doc
    assert doc.to_mu_circulant().coeffs == skew_circ((1, 2, 3)).coeffs


def test_rational_circulant_roundtrip_is_exact():
    doc = MatrixDocument.from_rational_circulant(rational_circ(F(-7, 3), 2, F(10**40, 9)))
    back = roundtrip(doc)
    assert back == doc
    assert back.to_rational_circulant().coeffs == (F(-7, 3), F(2), F(10**40, 9))


def test_dense_roundtrips_both_flavors():
    complex_doc = MatrixDocument.from_dense(np.array([[1 + 2j, 0.25], [-1.0, 3e-9j]]))
    assert roundtrip(complex_doc) == complex_doc
    exact_doc = MatrixDocument.from_exact_grid([[F(1, 3), 2], [0, F(-5, 7)]])
    assert roundtrip(exact_doc) == exact_doc
    assert exact_doc.to_exact_grid() == ((F(1, 3), F(2)), (F(0), F(-5, 7)))


def test_spectrum_roundtrip():
    values = (F(4), F(1), F(1))
    assert spectrum_from_obj(json.loads(json.dumps(spectrum_to_obj(values)))) == values
    cvalues = (1 + 2j, -0.5 + 0j)
    assert spectrum_from_obj(json.loads(json.dumps(spectrum_to_obj(cvalues)))) == cvalues


def test_unknown_kind_rejected():
    with pytest.raises(DocumentError, match="kind"):
        document_from_obj({"kind": "toeplitz", "n": 2, "first_row": [["1", "0"], ["2", "0"]]})


def test_bad_order_rejected():
    with pytest.raises(DocumentError, match="n"):
        document_from_obj({"kind": "circulant", "n": 0, "first_row": []})
    with pytest.raises(DocumentError, match="n"):
        document_from_obj({"kind": "circulant", "first_row": [["1", "0"]]})


def test_row_length_must_match_order():
    with pytest.raises(DocumentError, match="first_row"):
        document_from_obj({"kind": "circulant", "n": 3, "first_row": [["1", "0"]]})


def test_kind_dependent_fields_enforced():
    with pytest.raises(DocumentError, match="mu"):
        document_from_obj(
            {"kind": "circulant", "n": 2, "first_row": [["1", "0"], ["2", "0"]], "mu": [["1", "0"]]}
        )
    with pytest.raises(DocumentError, match="mu"):
        document_from_obj({"kind": "mu_circulant", "n": 2, "first_row": [["1", "0"], ["2", "0"]]})
    with pytest.raises(DocumentError, match="entries"):
        document_from_obj({"kind": "dense", "n": 2, "entries": [[["1", "0"]]]})


def test_bad_scalars_rejected():
    with pytest.raises(DocumentError, match="first_row"):
        document_from_obj({"kind": "circulant", "n": 1, "first_row": ["1"]})
    with pytest.raises(DocumentError, match="first_row"):
        document_from_obj({"kind": "rational_circulant", "n": 1, "first_row": ["0.5.5"]})
    with pytest.raises(DocumentError, match="first_row"):
        document_from_obj({"kind": "rational_circulant", "n": 1, "first_row": [["1", "0"]]})


def test_decimal_strings_parse_exactly():
    doc = document_from_obj(
        {"kind": "circulant", "n": 1, "first_row": [["0.1", "-2.5e-17"]]}
    )
    assert doc.first_row == (complex(0.1, -2.5e-17),)
    exact = document_from_obj(
        {"kind": "rational_circulant", "n": 1, "first_row": ["0.5"]}
    )
    assert exact.first_row == (F(1, 2),)


def test_parse_documents_array_form():
    payload = json.dumps(
        [
            document_to_obj(MatrixDocument.from_circulant(circ(1, 2))),
            document_to_obj(MatrixDocument.from_rational_circulant(rational_circ(1, 0))),
        ]
    )
    docs = parse_documents(payload)
    assert [d.kind for d in docs] == ["circulant", "rational_circulant"]


def test_parse_documents_bad_json():
    with pytest.raises(DocumentError, match="document"):
        parse_documents("{not json")


def test_exact_grid_refuses_floating_entries():
    doc = MatrixDocument.from_dense(np.eye(2))
    with pytest.raises(DocumentError, match="entries"):
        doc.to_exact_grid()
