"""Command-line front end.

Parses a problem description (weights, optional monomial ideal), runs the
pipeline normalize -> tables -> interpolate -> transforms -> report, and
emits the quasi-polynomial as text, JSON or LaTeX.

Exit codes: 0 success, 2 parse error, 3 resource guard tripped,
4 verification failure.
"""

import argparse
import json
import re
import sys
from fractions import Fraction

from .grading import WeightVector, compute_delta, compute_delta_r, normalize_weights
from .series import (
    Monomial,
    MonomialIdeal,
    ResourceLimitError,
    hilbert_enum_oracle,
    hilbert_quotient,
    hilbert_ring_dp,
    hvector,
)
from .quasipoly import (
    VerificationError,
    interpolate_ring,
    quotient_from_ring,
    scale_transform,
    structure_report,
)

EXIT_PARSE = 2
EXIT_RESOURCE = 3
EXIT_VERIFY = 4

_MONOMIAL_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


class ParseError(ValueError):
    pass


def parse_monomial(text, k):
    """Parse 'x1^3*x2' style monomials into an exponent vector."""
    exps = [0] * k
    body = text.replace(" ", "")
    if not body:
        raise ParseError("empty monomial")
    for factor in body.split("*"):
        m = _MONOMIAL_FACTOR.match(factor)
        if not m:
            raise ParseError(f"malformed monomial factor {factor!r}")
        idx = int(m.group(1))
        if not 1 <= idx <= k:
            raise ParseError(f"variable x{idx} out of range for k={k}")
        exps[idx - 1] += int(m.group(2)) if m.group(2) else 1
    return Monomial(tuple(exps))


def parse_weights(text):
    try:
        weights = tuple(int(t) for t in re.split(r"[,\s]+", text.strip()) if t)
    except ValueError as exc:
        raise ParseError(f"bad weights {text!r}: {exc}") from None
    if not weights:
        raise ParseError("no weights given")
    if any(x < 1 for x in weights):
        raise ParseError("weights must be positive integers")
    return weights


def build_parser():
    ap = argparse.ArgumentParser(
        prog="hilbertqp",
        description="Hilbert quasi-polynomials of weighted polynomial "
                    "rings and their quotients by monomial ideals, "
                    "in exact rational arithmetic.")
    ap.add_argument("--weights", help="positive integer weights, e.g. '1 2 3 4 6'")
    ap.add_argument("--ideal", action="append", default=None,
                    help="monomial generators, repeatable or comma-separated, "
                         "e.g. --ideal 'x1^3, x2*x3'")
    ap.add_argument("--format", choices=["text", "json", "latex"], default="text")
    ap.add_argument("--verify", action="store_true",
                    help="re-check the result against the enumeration oracle")
    ap.add_argument("--eval", action="append", type=int, default=[],
                    metavar="N", help="evaluate the quasi-polynomial at N (repeatable)")
    ap.add_argument("--table", type=int, default=None, metavar="N",
                    help="include the Hilbert function values H(0..N)")
    ap.add_argument("--max-n", type=int, default=10**6,
                    help="resource guard on table sizes (default 1e6)")
    ap.add_argument("--output", default=None, help="output file (default stdout)")
    ap.add_argument("--spec", default=None,
                    help="JSON problem file with fields weights, ideal, ...")
    return ap


def load_problem(args):
    """Merge --spec file contents with command-line flags (flags win)."""
    fields = {}
    if args.spec:
        with open(args.spec) as fh:
            fields = json.load(fh)
    weights = parse_weights(args.weights) if args.weights else \
        tuple(int(x) for x in fields.get("weights", ()))
    if not weights or any(x < 1 for x in weights):
        raise ParseError("weights are required and must be positive")
    ideal_texts = fields.get("ideal", [])
    if args.ideal is not None:
        ideal_texts = [t for chunk in args.ideal
                       for t in chunk.split(",") if t.strip()]
    return weights, [t.strip() for t in ideal_texts]


def rational_json(q):
    q = Fraction(q)
    return {"num": str(q.numerator), "den": str(q.denominator)}


def poly_text(p, var="x"):
    if p.is_zero():
        return "0"
    terms = []
    for r in range(p.degree, -1, -1):
        c = p.coefficient(r)
        if c == 0:
            continue
        if r == 0:
            terms.append(str(c))
        elif r == 1:
            terms.append(f"{c}*{var}" if c != 1 else var)
        else:
            terms.append(f"{c}*{var}^{r}" if c != 1 else f"{var}^{r}")
    return " + ".join(terms)


def poly_latex(p):
    if p.is_zero():
        return "0"
    terms = []
    for r in range(p.degree, -1, -1):
        c = p.coefficient(r)
        if c == 0:
            continue
        if c.denominator == 1:
            cs = str(c.numerator)
        else:
            cs = f"{c.numerator}/{c.denominator}"
        if r == 0:
            terms.append(cs)
        else:
            xs = "x" if r == 1 else f"x^{{{r}}}"
            terms.append(xs if cs == "1" else f"{cs}\\,{xs}")
    return " + ".join(terms)


def run(weights, ideal_texts, fmt="text", verify=False, evals=(),
        table_n=None, max_n=10**6, out=sys.stdout):
    """Full pipeline; returns 0 on success, raising typed errors otherwise."""
    w = WeightVector(weights)
    w_norm, scale = normalize_weights(w)
    if w_norm.d * scale > max_n:
        raise ResourceLimitError(
            f"period {w_norm.d * scale} exceeds --max-n guard {max_n}")

    ideal = None
    if ideal_texts:
        gens = [parse_monomial(t, w.k) for t in ideal_texts]
        ideal = MonomialIdeal.from_generators(gens, w)

    ring_qp = scale_transform(interpolate_ring(w_norm), scale)
    if ideal is not None:
        h = hvector(ideal)
        qp = quotient_from_ring(ring_qp, h, None)
    else:
        h = None
        qp = ring_qp

    report = structure_report(ring_qp, w) if ideal is None else None

    table_vals = None
    if table_n is not None:
        if table_n > max_n:
            raise ResourceLimitError(f"--table {table_n} exceeds guard {max_n}")
        table_vals = (hilbert_quotient(w, ideal, table_n) if ideal is not None
                      else hilbert_ring_dp(w, table_n)).values

    evaluations = [(n, qp.evaluate(n)) for n in evals]

    verified_window = None
    if verify:
        lo = qp.stabilization_index
        hi = lo + 2 * qp.period
        if hi > max_n:
            raise ResourceLimitError(f"verification window {hi} exceeds guard")
        for n in range(lo, hi + 1):
            expect = hilbert_enum_oracle(w, ideal, n)
            if qp.evaluate(n) != expect:
                raise VerificationError(
                    f"oracle mismatch at n={n}: quasi-polynomial gives "
                    f"{qp.evaluate(n)}, enumeration gives {expect}")
        verified_window = (lo, hi)

    doc = {
        "weights": list(w.weights),
        "gcd": scale,
        "normalized_weights": list(w_norm.weights),
        "period": qp.period,
        "delta": compute_delta(w),
        "delta_r": [compute_delta_r(w, r) for r in range(w.k)],
        "hvector": list(h.coefficients) if h is not None else [1],
        "polynomials": [[rational_json(c) for c in p.coefficients]
                        for p in qp.polys],
        "stabilization_index": qp.stabilization_index,
        "structure": None if report is None else {
            "fixed_part": [rational_json(c)
                           for c in report.fixed_part.coefficients],
            "observed_periods": list(report.observed_periods),
            "predicted_periods": list(report.predicted_periods),
        },
    }
    if table_vals is not None:
        doc["table"] = [str(v) for v in table_vals]
    if evaluations:
        doc["evaluations"] = [{"n": n, "value": rational_json(v)}
                              for n, v in evaluations]
    if verified_window is not None:
        doc["verified_window"] = list(verified_window)

    if fmt == "json":
        out.write(json_document(doc))
        out.write("\n")
    elif fmt == "latex":
        write_latex(doc, qp, out)
    else:
        write_text(doc, qp, report, out)
    return 0


def json_document(doc):
    """Canonical serialization: insertion order, 2-space indent."""
    return json.dumps(doc, indent=2)


def write_text(doc, qp, report, out):
    out.write(f"weights: {doc['weights']}  (gcd {doc['gcd']}, "
              f"normalized {doc['normalized_weights']})\n")
    out.write(f"period: {doc['period']}   delta: {doc['delta']}   "
              f"delta_r: {doc['delta_r']}\n")
    out.write(f"h-vector: {doc['hvector']}\n")
    out.write(f"stabilization index: {doc['stabilization_index']}\n")
    for i, p in enumerate(qp.polys):
        out.write(f"P_{i}(x) = {poly_text(p)}\n")
    if report is not None:
        out.write(f"fixed part Q(x) = {poly_text(report.fixed_part)}\n")
        out.write(f"periodic part degree: {report.periodic_part_degree}\n")
        out.write(f"observed coefficient periods: "
                  f"{list(report.observed_periods)}\n")
    if "table" in doc:
        out.write(f"H(0..{len(doc['table']) - 1}) = "
                  f"{[int(v) for v in doc['table']]}\n")
    for ev in doc.get("evaluations", ()):
        out.write(f"P({ev['n']}) = {ev['value']['num']}"
                  + ("" if ev["value"]["den"] == "1"
                     else "/" + ev["value"]["den"]) + "\n")
    if "verified_window" in doc:
        lo, hi = doc["verified_window"]
        out.write(f"verified against enumeration oracle on n in [{lo}, {hi}]\n")


def write_latex(doc, qp, out):
    out.write("\\begin{tabular}{lll}\n")
    for i, p in enumerate(qp.polys):
        out.write(f"$P_{{{i}}}(x)$ & $=$ & ${poly_latex(p)}$ \\\\\n")
    out.write("\\end{tabular}\n")


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        weights, ideal_texts = load_problem(args)
    except (ParseError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        if args.output:
            with open(args.output, "w") as fh:
                return run(weights, ideal_texts, args.format, args.verify,
                           args.eval, args.table, args.max_n, fh)
        return run(weights, ideal_texts, args.format, args.verify,
                   args.eval, args.table, args.max_n, sys.stdout)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
