"""Exact serialization of tables and reports.

Rationals travel as "num/den" strings (plain integer string when the
denominator is 1), never as floats; parsing an emitted JSON table and
re-serializing it is byte-identical.
"""

import csv
import io
import json
from fractions import Fraction

from .errors import InvalidInputError
from .exactmath import Rational
from .surgery import EulTable

CSV_COLUMNS = ["label", "T", "S", "eul_unknot", "eul_knot"]


def format_rational(v: Rational | int) -> str:
    return str(Fraction(v))


def parse_rational(s: str) -> Rational:
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise InvalidInputError(f"not an exact rational: {s!r}") from e


def table_to_dict(table: EulTable, decimal: int | None = None) -> dict:
    rows = []
    for l in range(table.slope.p):
        row = {
            "label": l,
            "T": table.T[l],
            "S": format_rational(table.S[l]),
            "eul_unknot": format_rational(table.eul_unknot[l]),
            "eul_knot": format_rational(table.eul_knot[l]),
        }
        if decimal is not None:
            row["eul_knot_approx"] = _approx(table.eul_knot[l], decimal)
        rows.append(row)
    return {
        "p": table.slope.p,
        "q": table.slope.q,
        "x": table.slope.x,
        "spin_label": table.spin_label,
        "lambda_prime_knot": format_rational(table.lambda_prime_knot),
        "rows": rows,
    }


def table_to_json(table: EulTable, decimal: int | None = None) -> str:
    return json.dumps(table_to_dict(table, decimal), indent=2)


def table_to_csv(table: EulTable, decimal: int | None = None) -> str:
    buf = io.StringIO()
    cols = CSV_COLUMNS + (["eul_knot_approx"] if decimal is not None else [])
    writer = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
    writer.writeheader()
    for row in table_to_dict(table, decimal)["rows"]:
        writer.writerow(row)
    return buf.getvalue()


def table_to_pretty(table: EulTable, decimal: int | None = None) -> str:
    d = table_to_dict(table, decimal)
    lines = [
        f"p/q = {d['p']}/{d['q']}   x = {d['x']}   "
        f"spin_label = {d['spin_label']}   lambda' = {d['lambda_prime_knot']}"
    ]
    cols = CSV_COLUMNS + (["eul_knot_approx"] if decimal is not None else [])
    widths = {
        c: max(len(c), max(len(str(r[c])) for r in d["rows"])) for c in cols
    }
    lines.append("  ".join(c.rjust(widths[c]) for c in cols))
    for r in d["rows"]:
        lines.append("  ".join(str(r[c]).rjust(widths[c]) for c in cols))
    return "\n".join(lines) + "\n"


def _approx(v: Rational, digits: int) -> str:
    # display-only rounded column; the exact column always remains
    sign = "-" if v < 0 else ""
    v = abs(v)
    scaled = (v * 10**digits + Fraction(1, 2)).__floor__()
    text = str(scaled).rjust(digits + 1, "0")
    return f"{sign}{text[:-digits]}.{text[-digits:]}" if digits else f"{sign}{text}"


def load_d_file(text: str, p: int) -> list[Rational]:
    """Parse an obstruction input file: {"d": ["num/den", ...]} with p entries."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"d-file is not valid JSON: {e}") from e
    if not isinstance(data, dict) or "d" not in data or not isinstance(data["d"], list):
        raise InvalidInputError('d-file must be a JSON object {"d": [...]}')
    if len(data["d"]) != p:
        raise InvalidInputError(
            f'd-file must list exactly p = {p} values, got {len(data["d"])}'
        )
    return [parse_rational(str(v)) for v in data["d"]]
