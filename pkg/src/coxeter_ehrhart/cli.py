"""Command line interface.

Verbs: ``ehrhart`` (quasipolynomial of a permutahedron), ``tables``
(recompute the reference tables), ``zonotope`` (quasipolynomial of a
zonotope file), ``sequences`` (structure counts), ``count`` (lattice points
of one dilate), ``roots`` (positive roots and shift).

Output is deterministic plain text in one of three encodings of the same
result document (``--format human|json|csv``); no ANSI color is ever
emitted, so NO_COLOR is honored trivially.  Exit codes: 0 success (and
agreement in verification modes), 1 verification mismatch, 2 usage error,
3 enumeration or box size guard.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .egf import SEQUENCE_KINDS, egf_ehrhart_standard_odd, egf_ehrhart_values, structure_counts
from .ehrhart import (
    EnumerationLimitError,
    ZonotopeFormatError,
    coxeter_zonotope,
    ehrhart_almost_integral,
    ehrhart_integral_coxeter,
    ehrhart_standard_coxeter,
    load_zonotope_file,
)
from .oracle import (
    BoxLimitError,
    DEFAULT_MAX_BOX,
    SIGNED_STRUCTURE_MAX,
    UNSIGNED_STRUCTURE_MAX,
    brute_force_structures,
    count_points,
)
from .roots import is_integral, positive_roots, rank_label, table_label

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3


class UsageError(ValueError):
    """Command line combination that cannot be served."""


# Reference rows, labeled by coordinate count (for type A the rank is one
# less than the label index; see the footnote emitted with the tables).
TABLE1 = (
    ("A_1", "A", 1, (1,)),
    ("A_2", "A", 2, (1, 1)),
    ("A_3", "A", 3, (1, 3, 3)),
    ("A_4", "A", 4, (1, 6, 15, 16)),
    ("B_1", "B", 1, (1, 1)),
    ("B_2", "B", 2, (1, 4, 7)),
    ("B_3", "B", 3, (1, 9, 39, 87)),
    ("B_4", "B", 4, (1, 16, 126, 608, 1553)),
    ("C_1", "C", 1, (1, 2)),
    ("C_2", "C", 2, (1, 6, 14)),
    ("C_3", "C", 3, (1, 12, 66, 172)),
    ("C_4", "C", 4, (1, 20, 192, 1080, 3036)),
    ("D_2", "D", 2, (1, 2, 2)),
    ("D_3", "D", 3, (1, 6, 18, 32)),
    ("D_4", "D", 4, (1, 12, 72, 280, 636)),
)

TABLE2 = (
    ("A_2", "A", 2, (1, 1), (0, 1)),
    ("A_4", "A", 4, (1, 6, 15, 16), (0, 0, 3, 16)),
    ("B_1", "B", 1, (1, 1), (0, 1)),
    ("B_2", "B", 2, (1, 4, 7), (0, 2, 7)),
    ("B_3", "B", 3, (1, 9, 39, 87), (0, 0, 6, 87)),
    ("B_4", "B", 4, (1, 16, 126, 608, 1553), (0, 0, 12, 212, 1553)),
)

TABLE_FOOTNOTE = (
    "row labels index every family by coordinate count; for type A the rank "
    "is one less (row A_k is the rank k-1 system on k coordinates)"
)

_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def rational_str(value) -> str:
    f = Fraction(value)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def format_polynomial(coeffs: Sequence) -> str:
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        if k == 0:
            terms.append(rational_str(c))
            continue
        power = "t" if k == 1 else "t" + str(k).translate(_SUPERSCRIPTS)
        terms.append(power if c == 1 else f"{rational_str(c)}{power}")
    return " + ".join(terms) if terms else "0"


def residue_name(residue: int, period: int) -> str:
    if period == 1:
        return "all t"
    if period == 2:
        return "t even" if residue == 0 else "t odd"
    return f"t ≡ {residue} (mod {period})"


@dataclass
class ResultDocument:
    """One CLI result; all three output formats encode this structure."""

    request: Dict
    provenance: str = ""
    period: Optional[int] = None
    constituents: Optional[List[Dict]] = None
    evaluations: Optional[List[Dict]] = None
    rows: Optional[List[Dict]] = None
    notes: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict:
        out: Dict = {"request": self.request, "provenance": self.provenance}
        if self.period is not None:
            out["period"] = self.period
        if self.constituents is not None:
            out["constituents"] = self.constituents
        if self.evaluations is not None:
            out["evaluations"] = self.evaluations
        if self.rows is not None:
            out["rows"] = self.rows
        if self.notes:
            out["notes"] = self.notes
        return out

    @classmethod
    def from_dict(cls, data: Dict) -> "ResultDocument":
        return cls(
            request=data["request"],
            provenance=data.get("provenance", ""),
            period=data.get("period"),
            constituents=data.get("constituents"),
            evaluations=data.get("evaluations"),
            rows=data.get("rows"),
            notes=data.get("notes", []),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)

    def to_csv(self) -> str:
        pairs: List[Tuple[str, str]] = []
        _flatten(self.to_dict(), "", pairs)
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(("key", "value"))
        writer.writerows(pairs)
        return buffer.getvalue().rstrip("\n")


def _flatten(value, prefix: str, out: List[Tuple[str, str]]) -> None:
    if isinstance(value, dict):
        for key, item in value.items():
            _flatten(item, f"{prefix}.{key}" if prefix else str(key), out)
    elif isinstance(value, (list, tuple)):
        for i, item in enumerate(value):
            _flatten(item, f"{prefix}.{i}", out)
    elif isinstance(value, bool):
        out.append((prefix, "true" if value else "false"))
    else:
        out.append((prefix, "" if value is None else str(value)))


def _constituent_payload(period: int, coeff_lists, interpolated: bool = False) -> List[Dict]:
    out = []
    for r, coeffs in enumerate(coeff_lists):
        entry = {
            "residue": r,
            "label": residue_name(r, period),
            "coefficients": [rational_str(c) for c in coeffs],
        }
        if interpolated:
            entry["interpolated"] = True
        out.append(entry)
    return out


def render_human(doc: ResultDocument) -> str:
    lines: List[str] = []
    req = doc.request
    command = req.get("command", "")
    header = command
    if "family" in req:
        header += f": family {req['family']} on {req['coordinates']} coordinates"
        if req.get("rank_label"):
            header += f" (rank label {req['rank_label']}, table label {req['table_label']})"
    elif "file" in req:
        header += f": {req['file']}"
    elif "table" in req:
        header += f": {req['table']}"
    elif "kind" in req:
        header += f": {req['kind']} up to n = {req['nmax']}"
    lines.append(header)
    extras = [f"{k}: {req[k]}" for k in ("variant", "route") if k in req]
    if extras:
        lines.append("  ".join(extras))
    if doc.period is not None:
        lines.append(f"period: {doc.period}")
    if doc.constituents:
        width = max(len(c["label"]) for c in doc.constituents)
        for c in doc.constituents:
            poly = format_polynomial([Fraction(x) for x in c["coefficients"]])
            marker = "  [interpolated]" if c.get("interpolated") else ""
            lines.append(f"  {c['label']:<{width}}  {poly}{marker}")
    if doc.evaluations:
        for e in doc.evaluations:
            line = f"ehr({e['t']}) = {e['value']}"
            if "oracle" in e:
                line += f"   oracle {e['oracle']}   {'match' if e['match'] else 'MISMATCH'}"
            lines.append(line)
    if doc.rows is not None:
        lines.extend(_render_rows(command, doc.rows))
    lines.append(f"route: {doc.provenance}" if doc.provenance else "")
    for note in doc.notes:
        lines.append(f"note: {note}")
    return "\n".join(line for line in lines if line)


def _render_rows(command: str, rows: List[Dict]) -> List[str]:
    lines = []
    if command == "tables":
        for row in rows:
            status = "match" if row["match"] else "MISMATCH"
            if "computed_even" in row:
                lines.append(
                    f"  {row['label']:<4} even: {format_polynomial([int(c) for c in row['computed_even']]):<42}"
                    f" odd: {format_polynomial([int(c) for c in row['computed_odd']]):<38} {status}"
                )
            else:
                lines.append(
                    f"  {row['label']:<4} {format_polynomial([int(c) for c in row['computed']]):<46} {status}"
                )
    elif command == "sequences":
        for row in rows:
            line = f"  n={row['n']}: {row['egf']}"
            if "oracle" in row:
                line += f"   oracle {row['oracle']}   {'match' if row['match'] else 'MISMATCH'}"
            lines.append(line)
    elif command == "roots":
        for row in rows:
            lines.append("  (" + ", ".join(str(e) for e in row["vector"]) + ")")
    else:
        for row in rows:
            lines.append("  " + ", ".join(f"{k}={v}" for k, v in row.items()))
    return lines


def emit(doc: ResultDocument, fmt: str) -> None:
    if fmt == "json":
        print(doc.to_json())
    elif fmt == "csv":
        print(doc.to_csv())
    else:
        print(render_human(doc))


def _lagrange(points: Sequence[Tuple[int, int]]) -> List[Fraction]:
    """Exact interpolating polynomial through the given (x, y) points."""
    coeffs = [Fraction(0)] * len(points)
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denominator = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            extended = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                extended[k] -= c * xj
                extended[k + 1] += c
            basis = extended
            denominator *= xi - xj
        scale = yi / denominator
        for k, c in enumerate(basis):
            coeffs[k] += scale * c
    return coeffs


def _egf_single_value(family: str, n: int, variant: str, t: int) -> int:
    if variant == "integral" or is_integral(family, n) or t % 2 == 0:
        return egf_ehrhart_values(family, t, n)[n]
    return egf_ehrhart_standard_odd(family, t, n)[n]


def cmd_ehrhart(args) -> int:
    family, n = args.family, args.n
    rs = positive_roots(family, n)
    request = {
        "command": "ehrhart",
        "family": family,
        "coordinates": n,
        "rank_label": rank_label(family, n),
        "table_label": table_label(family, n),
        "variant": args.variant,
        "route": args.route,
    }
    ts = sorted(set(args.t)) if args.t else []
    if ts:
        request["t"] = ts
    doc = ResultDocument(request=request)
    if args.route == "egf":
        if not ts:
            raise UsageError("the egf route produces values per dilation; pass --t")
        if args.order is not None and args.order < n:
            raise UsageError(f"--order must be at least {n}")
        doc.provenance = "generating function route (evaluations)"
        doc.evaluations = [
            {"t": t, "value": _egf_single_value(family, n, args.variant, t)} for t in ts
        ]
        expected_period = 1 if (args.variant == "integral" or is_integral(family, n)) else 2
        degree = rs.rank
        classes = []
        for r in range(expected_period):
            points = [(e["t"], e["value"]) for e in doc.evaluations if e["t"] % expected_period == r]
            if len(points) <= degree:
                classes = None
                break
            classes.append(_lagrange(points[: degree + 1]))
        if classes is not None:
            doc.period = expected_period
            doc.constituents = _constituent_payload(expected_period, classes, interpolated=True)
            doc.provenance = "generating function route (evaluations, interpolated constituents)"
        else:
            doc.notes.append(
                f"pass at least {degree + 1} dilations per residue class to interpolate constituents"
            )
        ok = True
        if args.verify:
            ok = _verify_evaluations_against_forest(doc, family, n, args.variant)
        emit(doc, args.format)
        return EXIT_OK if ok else EXIT_MISMATCH
    if args.route == "generic":
        qp = ehrhart_almost_integral(coxeter_zonotope(family, n, args.variant))
        doc.provenance = "independent-subset route"
    else:
        qp = (
            ehrhart_standard_coxeter(family, n)
            if args.variant == "standard"
            else ehrhart_integral_coxeter(family, n)
        )
        doc.provenance = "forest census route"
    doc.period = qp.period
    doc.constituents = _constituent_payload(qp.period, qp.constituents)
    if ts:
        doc.evaluations = [{"t": t, "value": qp.evaluate(t)} for t in ts]
    if args.verify:
        other = (
            ehrhart_standard_coxeter(family, n)
            if args.variant == "standard"
            else ehrhart_integral_coxeter(family, n)
        ) if args.route == "generic" else ehrhart_almost_integral(
            coxeter_zonotope(family, n, args.variant)
        )
        agree = other == qp
        doc.notes.append(
            "cross-route check (forest vs independent-subset): "
            + ("agree" if agree else "MISMATCH")
        )
        emit(doc, args.format)
        return EXIT_OK if agree else EXIT_MISMATCH
    emit(doc, args.format)
    return EXIT_OK


def _verify_evaluations_against_forest(doc: ResultDocument, family: str, n: int, variant: str) -> bool:
    qp = (
        ehrhart_standard_coxeter(family, n)
        if variant == "standard"
        else ehrhart_integral_coxeter(family, n)
    )
    ok = True
    for e in doc.evaluations:
        e["oracle"] = qp.evaluate(e["t"])
        e["match"] = e["oracle"] == e["value"]
        ok = ok and e["match"]
    doc.notes.append("verification compares against the forest census route")
    return ok


def cmd_tables(args) -> int:
    rows = []
    all_match = True
    if args.table == "table1":
        for label, family, n, expected in TABLE1:
            qp = ehrhart_integral_coxeter(family, n)
            match = qp.period == 1 and _same_poly(qp.constituents[0], expected)
            all_match = all_match and match
            rows.append(
                {
                    "label": label,
                    "family": family,
                    "coordinates": n,
                    "computed": [str(c) for c in qp.constituents[0]],
                    "expected": [str(c) for c in expected],
                    "match": match,
                }
            )
    else:
        for label, family, n, even, odd in TABLE2:
            qp = ehrhart_standard_coxeter(family, n)
            match = (
                qp.period == 2
                and _same_poly(qp.constituents[0], even)
                and _same_poly(qp.constituents[1], odd)
            )
            all_match = all_match and match
            rows.append(
                {
                    "label": label,
                    "family": family,
                    "coordinates": n,
                    "computed_even": [str(c) for c in qp.constituents[0]],
                    "computed_odd": [str(c) for c in qp.constituents[1]],
                    "expected_even": [str(c) for c in even],
                    "expected_odd": [str(c) for c in odd],
                    "match": match,
                }
            )
    doc = ResultDocument(
        request={"command": "tables", "table": args.table},
        provenance="forest census route",
        rows=rows,
        notes=[TABLE_FOOTNOTE, "all rows match" if all_match else "SOME ROWS MISMATCH"],
    )
    emit(doc, args.format)
    return EXIT_OK if all_match else EXIT_MISMATCH


def _same_poly(a: Sequence[int], b: Sequence[int]) -> bool:
    def trim(c):
        c = list(c)
        while c and c[-1] == 0:
            c.pop()
        return c

    return trim(a) == trim(b)


def cmd_zonotope(args) -> int:
    spec = load_zonotope_file(args.file)
    request = {
        "command": "zonotope",
        "file": args.file,
        "generators": [list(g) for g in spec.generators],
        "shift": [rational_str(s) for s in spec.shift],
    }
    ts = sorted(set(args.t)) if args.t else []
    if ts:
        request["t"] = ts
    if args.verify and not ts:
        raise UsageError("--verify needs at least one dilation; pass --t")
    qp = ehrhart_almost_integral(spec)
    doc = ResultDocument(
        request=request,
        provenance="independent-subset route",
        period=qp.period,
        constituents=_constituent_payload(qp.period, qp.constituents),
    )
    ok = True
    if ts:
        doc.evaluations = []
        for t in ts:
            entry = {"t": t, "value": qp.evaluate(t)}
            if args.verify:
                entry["oracle"] = count_points(spec, t, max_box=args.max_box)
                entry["match"] = entry["oracle"] == entry["value"]
                ok = ok and entry["match"]
            doc.evaluations.append(entry)
    if args.verify:
        doc.notes.append("verification compares against the box-scan oracle")
    emit(doc, args.format)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_sequences(args) -> int:
    if args.order is not None and args.order < args.nmax:
        raise UsageError(f"--order must be at least {args.nmax}")
    values = structure_counts(args.kind, args.nmax)
    bound = SIGNED_STRUCTURE_MAX if args.kind.startswith("signed_") else UNSIGNED_STRUCTURE_MAX
    rows = []
    ok = True
    for n in range(1, args.nmax + 1):
        row = {"n": n, "egf": values[n - 1]}
        if n <= bound:
            row["oracle"] = brute_force_structures(args.kind, n)
            row["match"] = row["oracle"] == row["egf"]
            ok = ok and row["match"]
        rows.append(row)
    doc = ResultDocument(
        request={"command": "sequences", "kind": args.kind, "nmax": args.nmax},
        provenance="generating function coefficients, with direct enumeration up to the oracle bound",
        rows=rows,
    )
    emit(doc, args.format)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_count(args) -> int:
    family, n, t = args.family, args.n, args.t
    qp = (
        ehrhart_standard_coxeter(family, n)
        if args.variant == "standard"
        else ehrhart_integral_coxeter(family, n)
    )
    entry = {"t": t, "value": qp.evaluate(t)}
    ok = True
    if args.oracle or args.verify:
        spec = coxeter_zonotope(family, n, args.variant)
        entry["oracle"] = count_points(spec, t, max_box=args.max_box)
        entry["match"] = entry["oracle"] == entry["value"]
        ok = entry["match"]
    doc = ResultDocument(
        request={
            "command": "count",
            "family": family,
            "coordinates": n,
            "rank_label": rank_label(family, n),
            "table_label": table_label(family, n),
            "variant": args.variant,
        },
        provenance="forest census route" + (" with box-scan oracle" if "oracle" in entry else ""),
        evaluations=[entry],
    )
    emit(doc, args.format)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_roots(args) -> int:
    rs = positive_roots(args.family, args.n)
    doc = ResultDocument(
        request={
            "command": "roots",
            "family": args.family,
            "coordinates": args.n,
            "rank_label": rank_label(args.family, args.n),
            "table_label": table_label(args.family, args.n),
        },
        provenance="root listing",
        rows=[{"vector": list(r)} for r in rs.roots],
        notes=[
            f"{len(rs.roots)} positive root" + ("" if len(rs.roots) == 1 else "s"),
            "shift (" + ", ".join(rational_str(s) for s in rs.shift) + ")",
            "integral" if is_integral(args.family, args.n) else "half-integral (period 2)",
        ],
    )
    emit(doc, args.format)
    return EXIT_OK


def _family_arg(value: str) -> str:
    return value.upper()


def _positive_int(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("human", "json", "csv"), default="human", help="output encoding"
    )
    common.add_argument(
        "--verify", action="store_true", help="cross-check against an independent route"
    )
    common.add_argument(
        "--max-box",
        dest="max_box",
        type=int,
        default=DEFAULT_MAX_BOX,
        help=f"bounding-box point ceiling for oracle scans (default {DEFAULT_MAX_BOX})",
    )
    common.add_argument(
        "--order", type=int, default=None, help="series truncation order override (egf routes)"
    )

    parser = argparse.ArgumentParser(
        prog="coxeter-ehrhart",
        description=(
            "Exact Ehrhart quasipolynomials of the classical Coxeter permutahedra "
            "and of integer zonotopes with rational shifts."
        ),
        epilog="Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 size guard.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    pe = sub.add_parser("ehrhart", parents=[common], help="quasipolynomial of a permutahedron")
    pe.add_argument("family", type=_family_arg, choices=("A", "B", "C", "D"))
    pe.add_argument("n", type=_positive_int, help="number of ambient coordinates")
    pe.add_argument("--variant", choices=("standard", "integral"), default="standard")
    pe.add_argument("--route", choices=("forest", "generic", "egf"), default="forest")
    pe.add_argument("--t", type=_positive_int, nargs="+", help="dilations to evaluate")

    pt = sub.add_parser("tables", parents=[common], help="recompute the reference tables")
    pt.add_argument("table", choices=("table1", "table2"))

    pz = sub.add_parser("zonotope", parents=[common], help="quasipolynomial of a zonotope file")
    pz.add_argument("file", help="JSON document with 'generators' and optional 'shift'")
    pz.add_argument("--t", type=_positive_int, nargs="+", help="dilations to evaluate")

    ps = sub.add_parser("sequences", parents=[common], help="labeled structure counts")
    ps.add_argument("kind", choices=SEQUENCE_KINDS)
    ps.add_argument("nmax", type=_positive_int)

    pc = sub.add_parser("count", parents=[common], help="lattice points of one dilate")
    pc.add_argument("family", type=_family_arg, choices=("A", "B", "C", "D"))
    pc.add_argument("n", type=_positive_int)
    pc.add_argument("--t", type=_positive_int, default=1)
    pc.add_argument("--variant", choices=("standard", "integral"), default="standard")
    pc.add_argument("--oracle", action="store_true", help="also run the box-scan oracle")

    pr = sub.add_parser("roots", parents=[common], help="positive roots and shift")
    pr.add_argument("family", type=_family_arg, choices=("A", "B", "C", "D"))
    pr.add_argument("n", type=_positive_int)

    return parser


_HANDLERS = {
    "ehrhart": cmd_ehrhart,
    "tables": cmd_tables,
    "zonotope": cmd_zonotope,
    "sequences": cmd_sequences,
    "count": cmd_count,
    "roots": cmd_roots,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (UsageError, ZonotopeFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (EnumerationLimitError, BoxLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT


def entry() -> None:
    sys.exit(main())
