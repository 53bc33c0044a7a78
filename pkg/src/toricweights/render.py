"""Text, JSON and CSV renderings of tables and polynomials.

The JSON payloads carry a versioned ``schema`` field and stay stable
across releases; the text layouts mirror the grid presentation of
spectral-sequence pages (rows printed top-down from the highest).
"""

import json

from .fan import classify, fan_to_dict
from .graded import wedge_subsets
from .koszul import weight_table
from .piecewise import pp_basis

SCHEMA_PREFIX = "toricweights"


def _json_payload(kind, body):
    payload = {"schema": f"{SCHEMA_PREFIX}.{kind}.v1"}
    payload.update(body)
    return json.dumps(payload, sort_keys=True)


def _csv_lines(header, rows):
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(str(x) for x in row))
    return "\n".join(lines)


def _grid(cells, col_labels, row_labels):
    """Aligned grid: rows printed top-down, a rule, then column labels."""
    widths = [max([len(str(col_labels[j]))] + [len(cells[i][j]) for i in range(len(row_labels))])
              for j in range(len(col_labels))]
    label_w = max(len(str(r)) for r in row_labels)
    lines = []
    for i, rl in enumerate(row_labels):
        body = "  ".join(cells[i][j].ljust(widths[j]) for j in range(len(col_labels)))
        lines.append(f"{str(rl).rjust(label_w)} | {body.rstrip()}")
    rule_len = max(len(line) for line in lines) - label_w - 3
    lines.append(f"{' ' * label_w} +-{'-' * rule_len}")
    body = "  ".join(str(col_labels[j]).ljust(widths[j]) for j in range(len(col_labels)))
    lines.append(f"{' ' * label_w}   {body.rstrip()}")
    return "\n".join(lines)


def _cell(dim, twist):
    if dim == 0:
        return "0"
    return str(dim) if twist == 0 else f"{dim}({twist})"


def render_info(fan, fmt):
    cls = classify(fan)
    if fmt == "json":
        body = fan_to_dict(fan)
        body.update({
            "is_simplicial": cls.is_simplicial,
            "is_smooth": cls.is_smooth,
            "is_complete": cls.is_complete,
            "f_vector": list(cls.f_vector),
        })
        return _json_payload("info", body)
    if fmt == "csv":
        rows = [("is_smooth", cls.is_smooth), ("is_complete", cls.is_complete),
                ("is_simplicial", cls.is_simplicial),
                ("f_vector", " ".join(str(x) for x in cls.f_vector))]
        return _csv_lines(("property", "value"), rows)
    words = [
        "smooth" if cls.is_smooth else "singular",
        "complete" if cls.is_complete else "not complete",
        "simplicial" if cls.is_simplicial else "nonsimplicial",
    ]
    fvec = ",".join(str(x) for x in cls.f_vector)
    return f"{' '.join(words)}, f=({fvec})"


def render_weight_table(table, fmt, prime=None):
    rows = table.rows()
    if prime is not None:
        rows = [(k, l, d, w, prime ** l) for (k, l, d, w) in rows]
    if fmt == "json":
        body = {"rank": table.rank, "fan": table.fan_key, "entries": [
            {"k": r[0], "l": r[1], "dim": r[2], "weight": r[3],
             **({"eigenvalue": r[4]} if prime is not None else {})}
            for r in rows]}
        return _json_payload("weights", body)
    header = ("k", "l", "dim", "weight") + (("eigenvalue",) if prime is not None else ())
    if fmt == "csv":
        return _csv_lines(header, rows)
    widths = [max(len(h), max((len(str(r[j])) for r in rows), default=0))
              for j, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    for r in rows:
        lines.append("  ".join(str(x).ljust(w) for x, w in zip(r, widths)).rstrip())
    return "\n".join(lines)


def render_betti(table, fmt):
    betti = table.betti_list()
    if fmt == "json":
        return _json_payload("betti", {"rank": table.rank, "betti": betti})
    if fmt == "csv":
        return _csv_lines(("k", "dim"), list(enumerate(betti)))
    return ", ".join(str(b) for b in betti)


def render_polynomial(poly, fmt):
    if fmt == "json":
        upto = max(poly.degree(), 0)
        return _json_payload("polynomial", {
            "coefficients": poly.coefficient_list(upto), "text": poly.render()})
    if fmt == "csv":
        upto = max(poly.degree(), 0)
        return _csv_lines(("degree", "coefficient"),
                          list(enumerate(poly.coefficient_list(upto))))
    return poly.render()


def render_series(series, fmt):
    if fmt == "json":
        return _json_payload("series", {
            "cutoff": series.cutoff, "coefficients": list(series.coeffs)})
    if fmt == "csv":
        return _csv_lines(("degree", "coefficient"), list(enumerate(series.coeffs)))
    return series.render()


def render_koszul_tables(fan, fmt, max_column=8):
    """Second and third page of the weight spectral sequence, paper layout:
    column 2a, row b, cell dimension with the weight index as twist."""
    n = fan.rank
    table = weight_table(fan)
    cols = list(range(0, max_column + 1, 2))
    rows_desc = list(range(n, -1, -1))
    e2 = {}
    e3 = {}
    for b in rows_desc:
        lam = len(wedge_subsets(n, b))
        for c in cols:
            a = c // 2
            dim2 = pp_basis(fan, a).dim * lam
            e2[(c, b)] = (dim2, a + b)
            dim3 = table.entry(c + b, a + b)
            e3[(c, b)] = (dim3, a + b)
    if fmt == "json":
        def entries(page):
            return [{"column": c, "row": b, "dim": page[(c, b)][0],
                     "twist": page[(c, b)][1]}
                    for (c, b) in sorted(page) if page[(c, b)][0]]
        return _json_payload("koszul_tables",
                             {"rank": n, "E2": entries(e2), "E3": entries(e3)})
    if fmt == "csv":
        rows = []
        for name, page in (("E2", e2), ("E3", e3)):
            for (c, b) in sorted(page):
                d, t = page[(c, b)]
                if d:
                    rows.append((name, c, b, d, t))
        return _csv_lines(("table", "column", "row", "dim", "twist"), rows)
    blocks = []
    for name, page in (("E2", e2), ("E3", e3)):
        cells = [[_cell(*page[(c, b)]) for c in cols] for b in rows_desc]
        blocks.append(name + "\n" + _grid(cells, cols, rows_desc))
    return "\n".join(blocks)


def render_e1_table(table, fmt):
    cols = list(table.cols())
    rows_desc = list(range(2 * table.rank, -1, -1))
    if fmt == "json":
        entries = [{"column": c, "row": r, "dim": e.dim,
                    "tate_twist": e.tate_twist, "weight": e.weight}
                   for (c, r), e in sorted(table.entries.items())]
        return _json_payload("deligne", {"rank": table.rank, "entries": entries})
    if fmt == "csv":
        rows = [(c, r, e.dim, e.tate_twist, e.weight)
                for (c, r), e in sorted(table.entries.items())]
        return _csv_lines(("column", "row", "dim", "tate_twist", "weight"), rows)
    cells = []
    for r in rows_desc:
        line = []
        for c in cols:
            d = table.dim(c, r)
            line.append(_cell(d, r // 2 if d else 0))
        cells.append(line)
    return _grid(cells, cols, rows_desc)


def render_consistency(reports, fmt):
    if fmt == "json":
        return _json_payload("euler_consistency", {"weights": [
            {"weight": r.weight, "e1": r.e1_side, "koszul": r.koszul_side,
             "ok": r.ok} for r in reports]})
    if fmt == "csv":
        return _csv_lines(("weight", "e1", "koszul", "ok"),
                          [(r.weight, r.e1_side, r.koszul_side, r.ok) for r in reports])
    lines = []
    for r in reports:
        mark = "ok" if r.ok else "MISMATCH"
        lines.append(f"weight {r.weight}: E1 {r.e1_side} == weights {r.koszul_side}  {mark}")
    return "\n".join(lines)
