"""JSON matrix documents: the wire format of the command line.

One structured-text object per matrix.  Scalar encodings are chosen to
round-trip bit-exactly:

* complex numbers: two-element arrays ``[re, im]`` of decimal strings
  (shortest round-trip repr),
* rationals: ``"p/q"`` strings with optional sign,
* integers: bare decimal strings.

Kinds: circulant, mu_circulant, skew_circulant, dense, rational_circulant;
spectrum documents carry eigenvalue lists (complex on output, exact
rationals when used as reconstruction input).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import Circulant
from .errors import CirculantError
from .lattice import RationalCirculant
from .twisted import MuCirculant, MuWeights, skew_circ

KINDS = ("circulant", "mu_circulant", "skew_circulant", "dense", "rational_circulant")


class DocumentError(CirculantError, ValueError):
    """Malformed document; the message names the offending field."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


def _format_float(x: float) -> str:
    return repr(float(x))


def format_complex(z: complex) -> list[str]:
    z = complex(z)
    return [_format_float(z.real), _format_float(z.imag)]


def parse_complex(value, field: str) -> complex:
    if isinstance(value, (list, tuple)) and len(value) == 2:
        parts = []
        for part in value:
            if isinstance(part, str):
                try:
                    parts.append(float(part))
                except ValueError:
                    raise DocumentError(field, f"bad decimal string {part!r}") from None
            elif isinstance(part, (int, float)):
                parts.append(float(part))
            else:
                raise DocumentError(field, f"bad component {part!r} in complex pair")
        return complex(parts[0], parts[1])
    raise DocumentError(field, f"expected a [re, im] pair, got {value!r}")


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def parse_rational(value, field: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise DocumentError(field, f"expected an exact 'p/q' or integer string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise DocumentError(field, f"bad rational {value!r}") from None
    raise DocumentError(field, f"expected an exact 'p/q' or integer string, got {value!r}")


def _parse_entry(value, field: str):
    # Dense grids may be complex (pairs) or exact (strings); spectra too.
    if isinstance(value, (list, tuple)):
        return parse_complex(value, field)
    return parse_rational(value, field)


def _format_entry(value) -> object:
    if isinstance(value, Fraction):
        return format_rational(value)
    return format_complex(value)


@dataclass(frozen=True)
class MatrixDocument:
    kind: str
    n: int
    first_row: tuple | None = None
    mu: tuple | None = None
    entries: tuple | None = None

    # -- constructors from library objects ---------------------------------
    @classmethod
    def from_circulant(cls, c: Circulant) -> "MatrixDocument":
        return cls(kind="circulant", n=c.n, first_row=c.coeffs)

    @classmethod
    def from_mu_circulant(cls, m: MuCirculant) -> "MatrixDocument":
        return cls(kind="mu_circulant", n=m.n, first_row=m.coeffs, mu=m.weights.mu[1:])

    @classmethod
    def from_rational_circulant(cls, c: RationalCirculant) -> "MatrixDocument":
        return cls(kind="rational_circulant", n=c.n, first_row=c.coeffs)

    @classmethod
    def from_dense(cls, a) -> "MatrixDocument":
        a = np.asarray(a, dtype=complex)
        return cls(
            kind="dense",
            n=a.shape[0],
            entries=tuple(tuple(complex(x) for x in row) for row in a),
        )

    @classmethod
    def from_exact_grid(cls, grid) -> "MatrixDocument":
        return cls(
            kind="dense",
            n=len(grid),
            entries=tuple(tuple(Fraction(x) for x in row) for row in grid),
        )

    # -- converters to library objects --------------------------------------
    def to_circulant(self) -> Circulant:
        if self.kind == "circulant":
            return Circulant(self.first_row)
        if self.kind == "rational_circulant":
            return self.to_rational_circulant().to_float()
        raise DocumentError("kind", f"cannot view a {self.kind} document as a circulant")

    def to_mu_circulant(self) -> MuCirculant:
        if self.kind == "mu_circulant":
            return MuCirculant(self.first_row, MuWeights.from_tail(self.mu or ()))
        if self.kind == "skew_circulant":
            return skew_circ(self.first_row)
        raise DocumentError("kind", f"cannot view a {self.kind} document as a mu-circulant")

    def to_rational_circulant(self) -> RationalCirculant:
        if self.kind != "rational_circulant":
            raise DocumentError("kind", f"expected rational_circulant, got {self.kind}")
        return RationalCirculant(self.first_row)

    def to_complex_grid(self) -> np.ndarray:
        if self.kind != "dense":
            raise DocumentError("kind", f"expected dense, got {self.kind}")
        return np.array([[complex(x) for x in row] for row in self.entries], dtype=complex)

    def to_exact_grid(self) -> tuple[tuple[Fraction, ...], ...]:
        if self.kind != "dense":
            raise DocumentError("kind", f"expected dense, got {self.kind}")
        for row in self.entries:
            for x in row:
                if not isinstance(x, Fraction):
                    raise DocumentError("entries", "grid holds floating entries, exact ones required")
        return self.entries


def document_from_obj(obj) -> MatrixDocument:
    if not isinstance(obj, dict):
        raise DocumentError("document", "expected a JSON object")
    kind = obj.get("kind")
    if kind not in KINDS:
        raise DocumentError("kind", f"unknown kind {kind!r}, expected one of {', '.join(KINDS)}")
    n = obj.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DocumentError("n", f"order must be a positive integer, got {n!r}")

    allowed = {"kind", "n", "first_row"}
    if kind == "mu_circulant":
        allowed.add("mu")
    if kind == "dense":
        allowed = {"kind", "n", "entries"}
    extra = set(obj) - allowed
    if extra:
        raise DocumentError(sorted(extra)[0], f"field not allowed on kind {kind}")

    first_row = mu = entries = None
    if kind == "dense":
        raw = obj.get("entries")
        if not isinstance(raw, list) or len(raw) != n:
            raise DocumentError("entries", f"expected {n} rows")
        rows = []
        for i, row in enumerate(raw):
            if not isinstance(row, list) or len(row) != n:
                raise DocumentError("entries", f"row {i + 1} must have {n} entries")
            rows.append(tuple(_parse_entry(x, f"entries[{i + 1}]") for x in row))
        entries = tuple(rows)
    else:
        raw = obj.get("first_row")
        if not isinstance(raw, list) or len(raw) != n:
            raise DocumentError("first_row", f"expected a list of {n} scalars")
        if kind == "rational_circulant":
            first_row = tuple(parse_rational(x, "first_row") for x in raw)
        else:
            first_row = tuple(parse_complex(x, "first_row") for x in raw)
        if kind == "mu_circulant":
            raw_mu = obj.get("mu")
            if not isinstance(raw_mu, list) or len(raw_mu) != n - 1:
                raise DocumentError("mu", f"expected a list of {n - 1} weights")
            mu = tuple(parse_complex(x, "mu") for x in raw_mu)
    return MatrixDocument(kind=kind, n=n, first_row=first_row, mu=mu, entries=entries)


def document_to_obj(doc: MatrixDocument) -> dict:
    out: dict = {"kind": doc.kind, "n": doc.n}
    if doc.kind == "dense":
        out["entries"] = [[_format_entry(x) for x in row] for row in doc.entries]
        return out
    if doc.kind == "rational_circulant":
        out["first_row"] = [format_rational(x) for x in doc.first_row]
    else:
        out["first_row"] = [format_complex(x) for x in doc.first_row]
    if doc.kind == "mu_circulant":
        out["mu"] = [format_complex(x) for x in doc.mu]
    return out


def parse_documents(text: str) -> list[MatrixDocument]:
    """Parse one document or a JSON array of documents."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("document", f"invalid JSON ({exc.msg} at line {exc.lineno})") from None
    items = payload if isinstance(payload, list) else [payload]
    return [document_from_obj(item) for item in items]


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# -- spectrum documents ------------------------------------------------------

def spectrum_to_obj(values) -> dict:
    values = list(values)
    return {
        "kind": "spectrum",
        "n": len(values),
        "values": [_format_entry(v) for v in values],
    }


def spectrum_from_obj(obj) -> tuple:
    if not isinstance(obj, dict) or obj.get("kind") != "spectrum":
        raise DocumentError("kind", "expected a spectrum document")
    n = obj.get("n")
    raw = obj.get("values")
    if not isinstance(raw, list) or not isinstance(n, int) or len(raw) != n:
        raise DocumentError("values", "expected a list of n scalars")
    return tuple(_parse_entry(v, "values") for v in raw)
