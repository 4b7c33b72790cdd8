"""Command-line frontend: ``subconv analyze | smoothness | refine``.

Exit status of ``analyze``: 0 convergent, 2 divergent, 3 inconclusive,
1 for unreadable input.  All rationals in reports are ``"p/q"`` strings.
"""
from __future__ import annotations

import argparse
import json
import random
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .analyzer import (
    DEFAULT_MAX_ITER,
    AnalysisReport,
    Kind,
    analyze_baseline,
    analyze_improved,
    lower_bound_audit,
)
from .corpus import random_unit_sum_symbol
from .errors import MaskParseError, PreconditionViolated
from .laurent import LaurentPolynomial
from .refine import GridSequence, contraction_trace, polyline, refine_to_level
from .scheme import Mask, Scheme
from .smoothness import certify_smoothness

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_DIVERGENT = 2
EXIT_INCONCLUSIVE = 3

STATUS_BY_KIND = {
    Kind.CONVERGENT: EXIT_OK,
    Kind.DIVERGENT: EXIT_DIVERGENT,
    Kind.INCONCLUSIVE: EXIT_INCONCLUSIVE,
}

_LITERAL = re.compile(r"^[+-]?\d+(/\d+)?$")


# parsing

def parse_rational(literal) -> Fraction:
    """Parse an integer or ``"p/q"`` literal; U+2212 is accepted as a minus."""
    if isinstance(literal, int) and not isinstance(literal, bool):
        return Fraction(literal)
    if not isinstance(literal, str):
        raise MaskParseError(f"invalid rational literal {literal!r}: use an integer or a \"p/q\" string")
    text = literal.strip().replace("−", "-")
    if not _LITERAL.match(text):
        raise MaskParseError(f"invalid rational literal {literal!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise MaskParseError(f"invalid rational literal {literal!r}: zero denominator") from None


def _parse_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise MaskParseError(f"{what} must be an integer, got {value!r}")
    try:
        return int(str(value).strip().replace("−", "-"))
    except ValueError:
        raise MaskParseError(f"{what} must be an integer, got {value!r}") from None


def parse_mask_document(text: str) -> tuple[Mask, Optional[str]]:
    """Parse a JSON mask document ``{name?, offset, coefficients}``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MaskParseError(f"mask document is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise MaskParseError("mask document must be a JSON object")
    unknown = set(doc) - {"name", "offset", "coefficients"}
    if unknown:
        raise MaskParseError(f"unknown keys in mask document: {sorted(unknown)}")
    if "offset" not in doc or "coefficients" not in doc:
        raise MaskParseError("mask document needs 'offset' and 'coefficients'")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise MaskParseError("'name' must be a string")
    coeffs = doc["coefficients"]
    if not isinstance(coeffs, list) or not coeffs:
        raise MaskParseError("'coefficients' must be a nonempty list")
    values = [parse_rational(c) for c in coeffs]
    try:
        mask = Mask.of(values, _parse_int(doc["offset"], "offset"))
    except ValueError as exc:
        raise MaskParseError(str(exc)) from None
    return mask, name


def parse_inline_mask(coefficients: str, offset) -> Mask:
    values = [parse_rational(c) for c in coefficients.split(",")]
    try:
        return Mask.of(values, _parse_int(offset, "offset"))
    except ValueError as exc:
        raise MaskParseError(str(exc)) from None


def parse_data_document(text: str) -> GridSequence:
    """Parse ``{"level"?, "offset", "values"}`` into a grid sequence."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MaskParseError(f"data document is not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or "values" not in doc:
        raise MaskParseError("data document must be an object with 'values'")
    vals = doc["values"]
    if not isinstance(vals, list):
        raise MaskParseError("'values' must be a list")
    level = _parse_int(doc.get("level", 0), "level")
    if level < 0:
        raise MaskParseError("level must be non-negative")
    return GridSequence(level, _parse_int(doc.get("offset", 0), "offset"),
                        tuple(parse_rational(v) for v in vals))


# serialization

def _q(x: Optional[Fraction]) -> Optional[str]:
    return None if x is None else str(x)


def mask_document(mask: Mask, name: Optional[str] = None) -> dict:
    doc = {}
    if name is not None:
        doc["name"] = name
    doc["offset"] = mask.offset
    doc["coefficients"] = [str(c) for c in mask.coefficients]
    return doc


def serialize_mask(mask: Mask, name: Optional[str] = None) -> str:
    return json.dumps(mask_document(mask, name), indent=2, ensure_ascii=False) + "\n"


def _poly_doc(p: Optional[LaurentPolynomial]):
    if p is None:
        return None
    return {"offset": p.lowest_degree, "coefficients": [str(c) for c in p.coefficients]}


def analysis_section(r: AnalysisReport) -> dict:
    v = r.verdict
    return {
        "algorithm": r.algorithm,
        "verdict": v.kind.value,
        "method": v.reason.value,
        "mu": _q(v.mu),
        "L": v.L,
        "a_at_1": _q(r.a_at_1),
        "a_at_minus1": _q(r.a_at_minus1),
        "q": _poly_doc(r.q),
        "q_at_minus1": _q(r.q_at_minus1),
        "s_e": _q(r.s_e),
        "s_o": _q(r.s_o),
        "q_nonnegative": r.q_nonnegative,
        "nondecaying_mode": r.nondecaying_mode,
        "levels_examined": r.levels_examined,
        "norms_per_level": [{"L": L, "norm": str(n)} for L, n in r.norms_per_level],
        "binary_coset_norms": [{"L": L, "value": str(n)} for L, n in r.binary_coset_norms],
    }


def audit_section(report: AnalysisReport, L_max: int, seed: int, samples: int) -> dict:
    doc: dict = {"L_max": L_max}
    if report.q is None:
        doc["lower_bound"] = None
    else:
        doc["lower_bound"] = [
            {"L": row.L, "binary_coset_norm": str(row.binary_coset_norm), "pass": row.passed}
            for row in lower_bound_audit(report.q, L_max)
        ]
    rng = random.Random(seed)
    failures = 0
    for _ in range(samples):
        q = random_unit_sum_symbol(rng)
        failures += sum(not row.passed for row in lower_bound_audit(q, L_max))
    doc["corpus"] = {"seed": seed, "samples": samples, "failures": failures}
    return doc


def smoothness_section(s: Scheme, M: int, max_order: Optional[int]) -> dict:
    rep = certify_smoothness(s, M, max_order)
    return {
        "criterion": "sufficient condition: convergence of the scheme with symbol 2^n q_n",
        "multiplicity": rep.multiplicity,
        "certified_order": rep.certified_order,
        "orders": [
            {
                "n": c.n,
                "symbol": _poly_doc(c.symbol),
                "verdict": c.report.kind.value,
                "method": c.report.verdict.reason.value,
                "mu": _q(c.report.mu),
                "L": c.report.L,
                "status": "certified" if c.certified else "not certified",
            }
            for c in rep.per_order
        ],
    }


def render(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


# commands

def _load_mask(args) -> tuple[Mask, Optional[str]]:
    if args.mask is not None:
        if args.input is not None:
            raise MaskParseError("give either a mask file or --mask, not both")
        return parse_inline_mask(args.mask, args.offset), args.name
    if args.input is None:
        raise MaskParseError("no mask given (pass a mask file or --mask/--offset)")
    path = Path(args.input)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise MaskParseError(f"cannot read {path}: {exc}") from None
    mask, name = parse_mask_document(text)
    return mask, name if name is not None else args.name


def analyze_document(mask: Mask, name: Optional[str], max_iter: int = DEFAULT_MAX_ITER,
                     baseline_only: bool = False, audit: bool = False, seed: int = 0,
                     audit_samples: int = 200) -> tuple[dict, int]:
    s = Scheme(mask, name)
    analyze = analyze_baseline if baseline_only else analyze_improved
    report = analyze(s, max_iter)
    doc = {"mask": mask_document(mask, name), "analysis": analysis_section(report)}
    if audit:
        doc["audit"] = audit_section(report, max(1, min(max_iter, 4)), seed, audit_samples)
    doc["tool_version"] = __version__
    doc["max_iter"] = max_iter
    return doc, STATUS_BY_KIND[report.kind]


def _analyze_file(path: str, out_dir: str, opts: dict) -> tuple[str, int]:
    try:
        mask, name = parse_mask_document(Path(path).read_text(encoding="utf-8"))
    except (MaskParseError, OSError) as exc:
        return f"{path}: {exc}", EXIT_INPUT_ERROR
    doc, status = analyze_document(mask, name or Path(path).stem, **opts)
    target = Path(out_dir) / (Path(path).stem + ".report.json")
    target.write_text(render(doc), encoding="utf-8")
    return str(target), status


def cmd_analyze(args) -> int:
    opts = dict(max_iter=args.max_iter, baseline_only=args.baseline_only, audit=args.audit,
                seed=args.seed, audit_samples=args.audit_samples)
    if args.input is not None and Path(args.input).is_dir():
        return _analyze_directory(args, opts)
    mask, name = _load_mask(args)
    doc, status = analyze_document(mask, name, **opts)
    _emit(render(doc), args.out)
    return status


def _analyze_directory(args, opts: dict) -> int:
    if not args.out:
        raise MaskParseError("analyzing a directory requires --out DIR for the reports")
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    files = sorted(p for p in Path(args.input).iterdir()
                   if p.suffix in (".mask", ".json") and not p.name.endswith(".report.json"))
    with ProcessPoolExecutor(max_workers=args.jobs) as pool:
        results = list(pool.map(_analyze_file, map(str, files),
                                [str(out_dir)] * len(files), [opts] * len(files)))
    failed = False
    for msg, status in results:
        if status == EXIT_INPUT_ERROR:
            failed = True
            print(f"error: {msg}", file=sys.stderr)
        else:
            print(f"{msg}\t{status}")
    return EXIT_INPUT_ERROR if failed else EXIT_OK


def cmd_smoothness(args) -> int:
    mask, name = _load_mask(args)
    s = Scheme(mask, name)
    doc = {"mask": mask_document(mask, name)}
    status = EXIT_OK
    try:
        doc["smoothness"] = smoothness_section(s, args.max_iter, args.max_order)
    except PreconditionViolated:
        doc["analysis"] = analysis_section(analyze_improved(s, args.max_iter))
        doc["smoothness"] = None
        status = EXIT_DIVERGENT
    doc["tool_version"] = __version__
    doc["max_iter"] = args.max_iter
    _emit(render(doc), args.out)
    return status


def polyline_csv(f: GridSequence, decimal: bool = False) -> list[str]:
    header = "t,value,value_decimal" if decimal else "t,value"
    rows = [header]
    for t, v in polyline(f):
        row = f"{t},{v}"
        if decimal:
            row += f",{float(v):.12g}"
        rows.append(row)
    return rows


def trace_csv(s: Scheme, f0: GridSequence, k_max: int, max_iter: int) -> list[str]:
    verdict = analyze_improved(s, max_iter).verdict
    trace = contraction_trace(s, f0, k_max, verdict if verdict.convergent else None)
    lines = ["# trace", "# k,delta_norm,ratio"]
    for lv in trace.levels:
        lines.append(f"# {lv.k},{lv.delta_norm},{'' if lv.ratio is None else lv.ratio}")
    if trace.bound_checks is not None:
        lines.append(f"# bound mu={trace.mu} L={trace.L}")
        lines.append("# k,delta_norm,bound,ok")
        for b in trace.bound_checks:
            lines.append(f"# {b.k},{b.delta_norm},{b.bound},{str(b.ok).lower()}")
    return lines


def cmd_refine(args) -> int:
    mask, name = _load_mask(args)
    s = Scheme(mask, name)
    if args.data:
        try:
            text = Path(args.data).read_text(encoding="utf-8")
        except OSError as exc:
            raise MaskParseError(f"cannot read {args.data}: {exc}") from None
        f0 = parse_data_document(text)
    elif args.values:
        f0 = GridSequence.of([parse_rational(v) for v in args.values.split(",")],
                             _parse_int(args.data_offset, "data offset"))
    else:
        f0 = GridSequence.delta_sequence()
    if args.levels < 0:
        raise MaskParseError("--levels must be non-negative")
    f = refine_to_level(s, f0, args.levels)
    lines = polyline_csv(f, args.decimal)
    if args.trace:
        lines += trace_csv(s, f0, max(1, args.levels), args.max_iter)
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors, which would collide with "divergent".
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="subconv", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def mask_args(p):
        p.add_argument("input", nargs="?", help="mask document (JSON)")
        p.add_argument("--mask", help="inline coefficients, e.g. --mask=-1/16,0,9/16,1,9/16,0,-1/16")
        p.add_argument("--offset", default="0", help="offset of the inline mask")
        p.add_argument("--name", help="name to record for the mask")
        p.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
        p.add_argument("--out", help="output path (stdout if omitted)")

    p = sub.add_parser("analyze", help="decide convergence")
    mask_args(p)
    p.add_argument("--baseline-only", action="store_true", help="skip the q(-1) and non-negativity shortcuts")
    p.add_argument("--audit", action="store_true", help="append the lower-bound audit tables")
    p.add_argument("--seed", type=int, default=0, help="seed for the random audit corpus")
    p.add_argument("--audit-samples", type=int, default=200)
    p.add_argument("--jobs", type=int, default=None, help="worker processes when analyzing a directory")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("smoothness", help="certify C^n smoothness (sufficient condition)")
    mask_args(p)
    p.add_argument("--max-order", type=int, default=None, help="default: multiplicity of (1+z) minus 1")
    p.set_defaults(func=cmd_smoothness)

    p = sub.add_parser("refine", help="run the refinement and export the polyline")
    mask_args(p)
    p.add_argument("--data", help="data document (JSON); defaults to the delta sequence")
    p.add_argument("--values", help="inline data values, comma separated")
    p.add_argument("--data-offset", default="0")
    p.add_argument("--levels", type=int, default=0)
    p.add_argument("--trace", action="store_true", help="append per-level difference norms")
    p.add_argument("--decimal", action="store_true", help="add a 12-digit decimal column")
    p.set_defaults(func=cmd_refine)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.max_iter < 1:
        print("subconv: error: --max-iter must be >= 1", file=sys.stderr)
        return EXIT_INPUT_ERROR
    try:
        return args.func(args)
    except MaskParseError as exc:
        print(f"subconv: error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
