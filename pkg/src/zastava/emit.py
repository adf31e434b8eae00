"""Text emitters (JSON, CSV, LaTeX) for polynomials, catalogs and tables.

LaTeX output is a bare ``tabular`` block meant to be ``\\input`` into a
document.  Cells only ever hold integers, coweight tuples and polynomials in
``q``, so the only escaping needed is for the empty partition, written
``\\varnothing``.
"""

from __future__ import annotations

import csv
import io
import json


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _vec(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def _gamma(gamma) -> str:
    return "[" + " ".join(_vec(p) for p in gamma) + "]"


def poly_latex(poly) -> str:
    if poly.is_zero():
        return "0"
    terms = []
    for n, c in poly.items():
        mono = "" if n == 0 else ("q" if n == 1 else f"q^{{{n}}}")
        coeff = str(c) if (c != 1 or n == 0) else ""
        terms.append(coeff + mono)
    return " + ".join(terms)


def _gamma_latex(gamma) -> str:
    if not gamma:
        return r"\varnothing"
    return "[" + ", ".join(_vec(p) for p in gamma) + "]"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def polynomial(poly, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(list(poly.coeffs)) + "\n"
    if fmt == "csv":
        return _csv(["exponent", "coefficient"], list(poly.items()))
    return "$" + poly_latex(poly) + "$\n"


def partitions(parts, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([[list(p) for p in g] for g in parts]) + "\n"
    if fmt == "csv":
        return _csv(["index", "parts", "size"], [(i, _gamma(g), len(g)) for i, g in enumerate(parts)])
    lines = [r"\begin{tabular}{rl}", r"$|\Gamma|$ & $\Gamma$ \\ \hline"]
    lines += [f"{len(g)} & ${_gamma_latex(g)}$ \\\\" for g in parts]
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


def strata(records, fmt: str) -> str:
    if fmt == "json":
        return dumps([
            {"nu": list(getattr(s, "nu", s.mu)), "gamma": [list(p) for p in s.gamma], "dim": s.dim}
            for s in records
        ])
    rows = [(_vec(getattr(s, "nu", s.mu)), _gamma(s.gamma), s.dim) for s in records]
    if fmt == "csv":
        return _csv(["nu", "gamma", "dim"], rows)
    lines = [r"\begin{tabular}{llr}", r"$\nu$ & $\Gamma$ & $\dim$ \\ \hline"]
    lines += [
        f"${_vec(getattr(s, 'nu', s.mu))}$ & ${_gamma_latex(s.gamma)}$ & {s.dim} \\\\"
        for s in records
    ]
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


def _ranks_text(ranks) -> str:
    return " ".join(f"{m}:{r}" for m, r in sorted(ranks.items()))


def table(tab, fmt: str) -> str:
    if fmt == "json":
        return dumps(tab.to_json())
    if fmt == "csv":
        return _csv(
            ["nu", "gamma", "dim", "poly", "degree_ranks"],
            [
                (_vec(e.stratum.nu), _gamma(e.stratum.gamma), e.stratum.dim,
                 " ".join(e.poly.to_json()), _ranks_text(e.degree_ranks))
                for e in tab.entries
            ],
        )
    lines = [
        r"\begin{tabular}{llrll}",
        r"$\nu$ & $\Gamma$ & $\dim$ & polynomial & degree $\mapsto$ rank \\ \hline",
    ]
    for e in tab.entries:
        ranks = ", ".join(f"{m}\\mapsto {r}" for m, r in sorted(e.degree_ranks.items()))
        lines.append(
            f"${_vec(e.stratum.nu)}$ & ${_gamma_latex(e.stratum.gamma)}$ & {e.stratum.dim} & "
            f"${poly_latex(e.poly)}$ & ${ranks}$ \\\\"
        )
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"
