"""Command-line front end.

Matrix documents (JSON) come from --input or stdin, results go to
--output or stdout.  Exit codes: 0 success, 1 domain failure (singular
matrix, non-member target, failed verification, benchmark disagreement),
2 malformed input or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import hopf, lattice, spectral, twisted
from .forms import conjugate as conjugate_of
from .forms import forms_of_spectrum
from .forms import inverse as inverse_of
from .bench import DEFAULT_SEED, BenchDisagreementError, run_bench
from .documents import (
    DocumentError,
    MatrixDocument,
    document_from_obj,
    document_to_obj,
    dump_json,
    format_complex,
    format_rational,
    parse_complex,
    parse_documents,
    spectrum_from_obj,
    spectrum_to_obj,
)
from .errors import (
    DependentBasisError,
    DimensionMismatchError,
    IncompatibleAlgebrasError,
    InvalidCocycleError,
    InvalidOrderError,
    InvalidScalarError,
    InvalidVectorError,
    InvalidWeightsError,
    NotIntegralBasisError,
    RootAssignmentError,
    SingularMatrixError,
)
from .verify import run_all

_USAGE_ERRORS = (
    DocumentError,
    DimensionMismatchError,
    InvalidOrderError,
    InvalidScalarError,
    InvalidVectorError,
    InvalidWeightsError,
    InvalidCocycleError,
    IncompatibleAlgebrasError,
)
_DOMAIN_ERRORS = (
    SingularMatrixError,
    DependentBasisError,
    NotIntegralBasisError,
    RootAssignmentError,
    BenchDisagreementError,
)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _write_text(path: str, text: str):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("document", f"invalid JSON ({exc.msg} at line {exc.lineno})") from None


def _input_documents(args) -> list[MatrixDocument]:
    return parse_documents(_read_text(args.input))


def _single_document(args) -> MatrixDocument:
    docs = _input_documents(args)
    if len(docs) != 1:
        raise DocumentError("document", f"expected exactly one document, got {len(docs)}")
    return docs[0]


def _spectrum_of(doc: MatrixDocument) -> spectral.Spectrum:
    if doc.kind in ("circulant", "rational_circulant"):
        return spectral.eigenvalues(doc.to_circulant())
    if doc.kind in ("mu_circulant", "skew_circulant"):
        return twisted.mu_eigen(doc.to_mu_circulant()).spectrum
    raise DocumentError("kind", f"no spectrum for kind {doc.kind}")


def _cmd_eig(args) -> int:
    values = _spectrum_of(_single_document(args)).values
    _write_text(args.output, dump_json(spectrum_to_obj(values)))
    return 0


def _cmd_forms(args) -> int:
    doc = _single_document(args)
    if doc.kind == "rational_circulant":
        q: tuple = lattice.forms_exact(doc.to_rational_circulant())
        encoded = [format_rational(x) for x in q]
    else:
        q = forms_of_spectrum(_spectrum_of(doc)).q
        encoded = [format_complex(x) for x in q]
    _write_text(args.output, dump_json({"kind": "forms", "n": doc.n, "q": encoded}))
    return 0


def _cmd_charpoly(args) -> int:
    doc = _single_document(args)
    if doc.kind == "rational_circulant":
        monic: tuple = lattice.exact_char_poly(doc.to_rational_circulant())
        encoded = [format_rational(x) for x in monic]
    else:
        q = forms_of_spectrum(_spectrum_of(doc)).q
        coeffs = [1.0 + 0.0j]
        sign = -1.0
        for qi in q:
            coeffs.append(sign * qi)
            sign = -sign
        encoded = [format_complex(x) for x in coeffs]
    payload = {"kind": "charpoly", "n": doc.n, "monic_coefficients": encoded}
    _write_text(args.output, dump_json(payload))
    return 0


def _cmd_inverse(args) -> int:
    c = _single_document(args).to_circulant()
    inv = inverse_of(c, threshold=args.tol)
    _write_text(args.output, dump_json(document_to_obj(MatrixDocument.from_circulant(inv))))
    return 0


def _cmd_conjugate(args) -> int:
    c = _single_document(args).to_circulant()
    conj = conjugate_of(c)
    _write_text(args.output, dump_json(document_to_obj(MatrixDocument.from_circulant(conj))))
    return 0


def _cmd_hopf_counit(args) -> int:
    c = _single_document(args).to_circulant()
    payload = {"kind": "scalar", "value": format_complex(hopf.counit(c))}
    _write_text(args.output, dump_json(payload))
    return 0


def _cmd_hopf_delta(args) -> int:
    c = _single_document(args).to_circulant()
    delta = hopf.comultiplication(c)
    payload = {
        "kind": "block_circulant",
        "n": delta.n,
        "blocks": [[format_complex(x) for x in block.coeffs] for block in delta.blocks],
    }
    _write_text(args.output, dump_json(payload))
    return 0


def _cmd_hopf_antipode(args) -> int:
    c = _single_document(args).to_circulant()
    out = hopf.antipode(c)
    _write_text(args.output, dump_json(document_to_obj(MatrixDocument.from_circulant(out))))
    return 0


def _report_payload(reports) -> dict:
    return {
        "kind": "report",
        "checks": [
            {"name": r.axiom, "holds": r.holds, "residual": r.residual} for r in reports
        ],
    }


def _cmd_hopf_verify(args) -> int:
    c = _single_document(args).to_circulant()
    tol = args.tol if args.tol is not None else 1e-10
    reports = [
        hopf.verify_counit_axiom(c, tol),
        hopf.verify_antipode_axiom(c, tol),
        hopf.integral_check(c, tol),
    ]
    _write_text(args.output, dump_json(_report_payload(reports)))
    return 0 if all(r.holds for r in reports) else 1


def _cmd_mu_eig(args) -> int:
    doc = _single_document(args)
    if doc.kind not in ("mu_circulant", "skew_circulant"):
        raise DocumentError("kind", f"mu-eig expects mu_circulant or skew_circulant, got {doc.kind}")
    eig = twisted.mu_eigen(doc.to_mu_circulant())
    payload = {
        "kind": "eigen",
        "n": doc.n,
        "values": [format_complex(v) for v in eig.spectrum.values],
        "vectors": [
            [format_complex(x) for x in eig.vectors[:, j]] for j in range(doc.n)
        ],
    }
    _write_text(args.output, dump_json(payload))
    return 0


def _cmd_cocycle_verify(args) -> int:
    raw = _load_json(_read_text(args.input))
    tol = args.tol if args.tol is not None else 1e-10
    if isinstance(raw, dict) and raw.get("kind") == "cocycle":
        n = raw.get("n")
        table = raw.get("table")
        if not isinstance(table, list) or not isinstance(n, int) or len(table) != n:
            raise DocumentError("table", "expected an n x n grid of complex pairs")
        cocycle = twisted.TwoCocycle(
            tuple(tuple(parse_complex(x, "table") for x in row) for row in table)
        )
    else:
        doc = document_from_obj(raw)
        if doc.kind not in ("mu_circulant", "skew_circulant"):
            raise DocumentError("kind", "cocycle-verify expects a cocycle table or a mu/skew document")
        cocycle = twisted.cocycle_from_mu(doc.to_mu_circulant().weights)
    report = twisted.verify_cocycle(cocycle, tol)
    _write_text(args.output, dump_json(_report_payload([report])))
    return 0 if report.holds else 1


def _cmd_skew(args) -> int:
    doc = _single_document(args)
    if doc.kind != "skew_circulant":
        raise DocumentError("kind", f"skew expects a skew_circulant document, got {doc.kind}")
    m = doc.to_mu_circulant()
    _write_text(args.output, dump_json(document_to_obj(MatrixDocument.from_mu_circulant(m))))
    return 0


def _cmd_brandt_check(args) -> int:
    docs = _input_documents(args)
    elements = [d.to_rational_circulant() for d in docs]
    verdict = lattice.brandt_check(elements, mode=args.mode)
    payload: dict = {"kind": "brandt", "mode": args.mode, "holds": verdict.holds}
    if verdict.counterexample is not None:
        ce = verdict.counterexample
        payload["counterexample"] = {
            "pair": list(ce.pair),
            "combination": ce.combination,
            "form_index": ce.form_index,
            "value": format_rational(ce.value),
        }
    _write_text(args.output, dump_json(payload))
    return 0 if verdict.holds else 1


def _cmd_spectrum_reconstruct(args) -> int:
    obj = _load_json(_read_text(args.input))
    values = spectrum_from_obj(obj)
    if not all(isinstance(v, Fraction) for v in values):
        raise DocumentError("values", "reconstruction needs exact integer or 'p/q' values")
    result = lattice.reconstruct_from_spectrum(values)
    payload = {
        "kind": "reconstruction",
        "real": result.real,
        "circulant": document_to_obj(MatrixDocument.from_circulant(result.circulant)),
    }
    _write_text(args.output, dump_json(payload))
    return 0


def _cmd_lattice_solve(args) -> int:
    docs = _input_documents(args)
    if len(docs) != 2:
        raise DocumentError(
            "document", "lattice-solve expects [basis dense document, rational_circulant target]"
        )
    basis_doc, target_doc = docs
    basis = lattice.lattice_new(basis_doc.to_exact_grid())
    target = target_doc.to_rational_circulant()
    solution = lattice.lattice_decompose(basis, target)
    payload = {
        "kind": "lattice_solution",
        "coefficients": [format_rational(a) for a in solution.coefficients],
        "member": solution.member,
    }
    _write_text(args.output, dump_json(payload))
    return 0 if solution.member else 1


def _cmd_factorize(args) -> int:
    doc = _single_document(args)
    grid = hopf.factorize_dense(doc.to_complex_grid())
    payload = {
        "kind": "factorization",
        "n": doc.n,
        "grid": [[format_complex(x) for x in row] for row in grid],
    }
    _write_text(args.output, dump_json(payload))
    return 0


def _cmd_verify_all(args) -> int:
    reports = run_all(seed=args.seed)
    lines = []
    for r in reports:
        status = "ok" if r.passed else "FAIL"
        lines.append(f"{status} {r.name} max_dev={r.max_deviation:.3e}")
    passed = sum(1 for r in reports if r.passed)
    lines.append(f"{passed}/{len(reports)} invariant checks passed (seed {args.seed:#x})")
    _write_text(args.output, "\n".join(lines) + "\n")
    return 0 if passed == len(reports) else 1


def _cmd_bench(args) -> int:
    try:
        results = run_bench(args.sizes, args.reps, seed=args.seed)
    except ValueError as exc:
        raise DocumentError("bench", str(exc)) from None
    lines = [
        json.dumps(
            {
                "n": r.n,
                "method": r.method,
                "reps": r.reps,
                "median_ns": r.median_ns,
                "checksum": r.checksum,
            }
        )
        for r in results
    ]
    _write_text(args.output, "\n".join(lines) + "\n")
    return 0


def _seed(text: str) -> int:
    return int(text, 0)


def _sizes(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}") from None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circulants", description="Circulant-matrix algebra toolkit"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_text: str, tol: bool = False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--input", default="-", help="input document path (default stdin)")
        p.add_argument("--output", default="-", help="output path (default stdout)")
        if tol:
            p.add_argument("--tol", type=float, default=None, help="residual/singularity tolerance")
        p.set_defaults(handler=handler)
        return p

    add("eig", _cmd_eig, "eigenvalues of a circulant, mu-, or skew circulant")
    add("forms", _cmd_forms, "characteristic forms q_1..q_n (exact for rational input)")
    add("charpoly", _cmd_charpoly, "monic characteristic polynomial")
    add("inverse", _cmd_inverse, "inverse via the conjugate and norm form", tol=True)
    add("conjugate", _cmd_conjugate, "adjugate-analogue conjugate element")
    add("hopf-counit", _cmd_hopf_counit, "counit (coefficient sum)")
    add("hopf-delta", _cmd_hopf_delta, "coproduct as block circulant with circulant blocks")
    add("hopf-antipode", _cmd_hopf_antipode, "antipode (transpose)")
    add("hopf-verify", _cmd_hopf_verify, "check counit/antipode/integral identities", tol=True)
    add("mu-eig", _cmd_mu_eig, "closed-form eigen decomposition of a twisted circulant")
    add("cocycle-verify", _cmd_cocycle_verify, "check the two-cocycle identity", tol=True)
    add("skew", _cmd_skew, "identify a skew circulant as a weighted circulant")
    brandt = add("brandt-check", _cmd_brandt_check, "integral/rational Brandt predicate")
    brandt.add_argument("--mode", choices=("integral", "rational"), default="integral")
    add("spectrum-reconstruct", _cmd_spectrum_reconstruct, "coefficients from an exact spectrum")
    add("lattice-solve", _cmd_lattice_solve, "decompose a target over a lattice basis")
    add("factorize", _cmd_factorize, "diagonal-times-circulant coefficients of a dense matrix")
    verify_all = add("verify-all", _cmd_verify_all, "run every module's invariant suite")
    verify_all.add_argument("--seed", type=_seed, default=DEFAULT_SEED, help="RNG seed (hex ok)")
    bench = add("bench", _cmd_bench, "time naive vs spectral vs dense multiplication")
    bench.add_argument("--sizes", type=_sizes, default=[16, 64, 256], help="comma-separated orders")
    bench.add_argument("--reps", type=int, default=5, help="repetitions per method (>= 3)")
    bench.add_argument("--seed", type=_seed, default=DEFAULT_SEED, help="RNG seed (hex ok)")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.handler(args)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
