"""Report assembly: run the full analysis for one target and serialize it.

Reports are canonical JSON-native dictionaries wrapped in a small class, so
serialization round-trips losslessly and byte-identical runs are guaranteed
for identical inputs.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass

from .algebra import dim_Abar, os_report
from .catalog import CatalogEntry, lookup
from .complexes import nbb, nbb_equals_nbc_all_orders, nbc
from .errors import CatalogError, InternalCheckError
from .fields import QQ
from .formality import formalization, is_formal, is_locally_formal, relation_space
from .io import parse_matroid_file
from .lines import integer_roots, is_r_closed, lc_dimension, whitney_numbers
from .matroid import LinearOrder


@dataclass(frozen=True)
class Report:
    """A finished analysis as a canonical JSON-native dictionary."""

    data: dict

    @property
    def name(self):
        return self.data["name"]

    def __getitem__(self, key):
        return self.data[key]

    def to_json(self) -> str:
        return json.dumps(self.data, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text) -> "Report":
        return cls(json.loads(text))

    def to_text(self) -> str:
        d = self.data
        out = [f"name: {d['name']}"]
        out.append(f"n: {d['n']}  rank: {d['rank']}  field: {d['field']}")
        out.append(
            f"line-closed: {_yn(d['line_closed'])}  quadratic: {_yn(d['quadratic'])}"
            f"  lc-dimension: {d['lc_dimension']}"
        )
        out.append("whitney: " + " ".join(map(str, d["whitney"])))
        roots = d["charpoly_roots"]
        out.append(
            "charpoly integer roots: "
            + ("none" if roots is None else " ".join(map(str, roots)))
        )
        out.append("dim A^p:    " + " ".join(map(str, d["dims_A"])))
        for r_key in sorted(d["dims_Abar"], key=int):
            out.append(
                f"dim Abar_{r_key}^p: " + " ".join(map(str, d["dims_Abar"][r_key]))
            )
        out.append(
            f"dim I^2: {d['dim_I2']}  phi3: {d['phi3']}  gamma3: {d['gamma3']}"
        )
        for r_key in sorted(d.get("r_closed", {}), key=int):
            out.append(f"{r_key}-closed: {_yn(d['r_closed'][r_key])}")
        for block in d["orders"]:
            out.append("order " + ",".join(map(str, block["order"])) + ":")
            out.append("  nbc counts: " + " ".join(map(str, block["nbc_counts"])))
            out.append("  nbb counts: " + " ".join(map(str, block["nbb_counts"])))
            out.append("  nbc facets: " + _facets_text(block["nbc_facets"]))
            out.append("  nbb facets: " + _facets_text(block["nbb_facets"]))
        if d.get("all_orders") is not None:
            blk = d["all_orders"]
            line = f"nbb = nbc for every order: {_yn(blk['holds'])}"
            if blk["witness_order"]:
                line += "  (witness order " + ",".join(map(str, blk["witness_order"])) + ")"
            out.append(line)
        fm = d.get("formality")
        if fm:
            out.append(
                f"formality: dim K = {fm['dim_K']}  dim F = {fm['dim_F']}"
                f"  formal: {_yn(fm['formal'])}  locally formal: {_yn(fm['locally_formal'])}"
                f"  formalization rank: {fm['formalization_rank']}"
            )
        return "\n".join(out) + "\n"


def _yn(flag):
    return "yes" if flag else "no"


def _facets_text(facets):
    return " / ".join(" ".join(map(str, f)) for f in facets) if facets else "-"


def resolve_target(target):
    """A catalog name, a file path, or an already-built CatalogEntry."""
    if isinstance(target, CatalogEntry):
        return target
    if isinstance(target, str):
        try:
            return lookup(target)
        except CatalogError:
            if os.path.exists(target):
                parsed = parse_matroid_file(target)
                return CatalogEntry(parsed.name, parsed.matroid, parsed.realization)
            raise
    raise CatalogError(f"cannot analyze {target!r}")


def _order_block(M, order):
    nbc_cx = nbc(M, order)
    nbb_cx = nbb(M, order)

    def facet_lists(cx):
        rendered = [list(order.sort(f)) for f in cx.facets]
        return sorted(rendered, key=lambda f: [order.position(i) for i in f])

    return {
        "order": list(order.seq),
        "nbc_counts": list(nbc_cx.face_counts()),
        "nbb_counts": list(nbb_cx.face_counts()),
        "nbc_facets": facet_lists(nbc_cx),
        "nbb_facets": facet_lists(nbb_cx),
    }


def analyze(target, orders=None, all_orders=False, field=QQ, r=None,
            with_formality=True) -> Report:
    """Full report for a catalog entry, matroid file, or entry object.

    Verifies the built-in identities (they live inside os_report) and the
    order-independence of the nbc face counts before emitting.
    """
    entry = resolve_target(target)
    M = entry.matroid
    if orders is None:
        order_list = entry.orders()
    else:
        order_list = tuple(
            o if isinstance(o, LinearOrder) else LinearOrder(tuple(o))
            for o in orders
        )
    core = os_report(M, field)
    cp = whitney_numbers(M)
    roots = integer_roots(cp)
    data = {
        "name": entry.name,
        "n": M.n,
        "rank": M.full_rank,
        "field": field.name,
        "line_closed": core.line_closed,
        "quadratic": core.quadratic,
        "lc_dimension": lc_dimension(M),
        "whitney": list(cp.whitney),
        "charpoly_roots": None if roots is None else list(roots),
        "dims_A": list(core.dims_A),
        "dims_Abar": {"2": list(core.dims_Abar)},
        "dim_I2": core.dim_I2,
        "phi3": core.phi3,
        "gamma3": core.gamma3,
        "orders": [_order_block(M, o) for o in order_list],
        "formality": None,
    }
    for block in data["orders"]:
        counts = block["nbc_counts"]
        for p, w in enumerate(cp.whitney):
            if counts[p] != w:
                raise InternalCheckError(
                    f"nbc count {counts[p]} at degree {p} differs from "
                    f"Whitney number {w} for order {block['order']}"
                )
    if r is not None:
        data["dims_Abar"][str(r)] = [
            dim_Abar(M, field, p, r) for p in range(M.n + 1)
        ]
        data["r_closed"] = {str(r): is_r_closed(M, r)}
    if all_orders:
        verdict = nbb_equals_nbc_all_orders(M)
        data["all_orders"] = {
            "holds": verdict.ok,
            "witness_order": list(verdict.witness.seq) if verdict.witness else None,
        }
    if with_formality and entry.realization is not None:
        real = entry.realization
        rs = relation_space(real, M)
        data["formality"] = {
            "dim_K": rs.dim_K,
            "dim_F": rs.dim_F,
            "formal": rs.dim_F == rs.dim_K,
            "locally_formal": is_locally_formal(real),
            "formalization_rank": formalization(real).nrows,
        }
        if data["formality"]["formal"] != is_formal(real):
            raise InternalCheckError("formality flags disagree")
    return Report(data)


def emit(report, fmt="text") -> str:
    if fmt == "json":
        return report.to_json()
    if fmt == "text":
        return report.to_text()
    raise ValueError(f"unknown format {fmt!r}")
