"""JSON report documents.

Arithmetic values (Delta parameters, bounds, coordinates, ratios) are decimal
strings, reduced fractions written ``p/q``; counts, dimensions and row
indices are JSON integers.  Key order is fixed, so equal inputs serialize to
identical bytes.
"""

import json
from fractions import Fraction
from importlib import resources

SCHEMA_VERSION = "1"


def num(x):
    """Exact number as a string: ``"7"`` or ``"3/2"``."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def vec(v):
    return [num(x) for x in v]


def face_entry(fc):
    return {
        "dim": fc.face_dim,
        "vertices": list(fc.vertex_indices),
        "improper": fc.improper,
        "lattice_members": fc.n_members,
        "near_tight_rows": list(fc.near_tight_rows),
        "rank": fc.rank_t,
        "rank_ok": fc.rank_ok,
        "max_supp": fc.max_supp,
        "supp_ok": fc.supp_ok,
    }


def instance_document(rep, digest, timing=None):
    """Report for one verified instance."""
    vchecks = rep.vertex_checks
    lit_fail = rep.prop2_literal_failures
    der_fail = rep.prop2_derived_failures
    doc = {
        "schema_version": SCHEMA_VERSION,
        "instance": {"id": rep.instance_id, "m": rep.m, "n": rep.n, "sha256": digest},
        "delta": {
            "delta_1": num(rep.delta_1),
            "delta": num(rep.delta),
            "delta_ext": num(rep.delta_ext),
        },
        "counts": {
            "lattice_points": rep.lattice_count,
            "hull_vertices": len(rep.vertices),
            "faces_per_dim": {str(k): v for k, v in rep.faces_per_dim.items()},
            "beta": rep.beta,
        },
        "checks": {
            "theorem1": {
                "ok": rep.theorem1_ok,
                "faces_checked": len(rep.face_checks),
                "violations": sum(not fc.ok for fc in rep.face_checks),
            },
            "corollary1": {
                "prop1": {
                    "ok": rep.prop1_ok,
                    "bases": [{"vertex": vec(vc.vertex),
                               "rows": list(vc.base) if vc.base is not None else None}
                              for vc in vchecks],
                },
                "prop2": {
                    "derived": {
                        "threshold": "delta",
                        "ok": not der_fail,
                        "pass": len(vchecks) - len(der_fail),
                        "fail": len(der_fail),
                        "failures": [vec(v) for v in der_fail],
                    },
                    "literal": {
                        "threshold": "delta-1",
                        "ok": not lit_fail,
                        "pass": len(vchecks) - len(lit_fail),
                        "fail": len(lit_fail),
                        "failures": [vec(v) for v in lit_fail],
                    },
                },
                "prop3": {
                    "ok": rep.main_ok,
                    "main_bound": num(rep.bounds.main_bound),
                    "ratio": num(rep.main_ratio),
                },
            },
            "lemma1": {
                "ok": rep.lemma1_ok,
                "beta": rep.beta,
                "gamma": num(rep.gamma),
                "gamma_source": rep.gamma_source,
                "bound": num(rep.lemma1_bound),
            },
        },
        "bounds": {
            "main_bound": num(rep.bounds.main_bound),
            "xi": num(rep.bounds.xi),
            "brass": num(rep.bounds.brass),
            "erdos_furedi": num(rep.bounds.erdos_furedi),
        },
        "vertices": [vec(v) for v in rep.vertices],
        "faces": [face_entry(fc) for fc in rep.face_checks],
        "ok": rep.all_ok,
    }
    if timing is not None:
        doc["timing_seconds"] = f"{timing:.3f}"
    return doc


def suite_document(suite_specs, docs):
    def tally(pred):
        return sum(1 for d in docs if pred(d))

    checks = [d["checks"] for d in docs]
    ratios = [Fraction(c["corollary1"]["prop3"]["ratio"]) for c in checks]
    summary = {
        "instances": len(docs),
        "nonempty": tally(lambda d: d["counts"]["lattice_points"] > 0),
        "faces_checked": sum(c["theorem1"]["faces_checked"] for c in checks),
        "theorem1_violations": sum(c["theorem1"]["violations"] for c in checks),
        "prop1_failures": tally(lambda d: not d["checks"]["corollary1"]["prop1"]["ok"]),
        "prop2_derived_failures": sum(c["corollary1"]["prop2"]["derived"]["fail"] for c in checks),
        "prop2_literal_failures": sum(c["corollary1"]["prop2"]["literal"]["fail"] for c in checks),
        "prop2_vertices": sum(c["corollary1"]["prop2"]["literal"]["pass"]
                              + c["corollary1"]["prop2"]["literal"]["fail"] for c in checks),
        "main_bound_violations": tally(lambda d: not d["checks"]["corollary1"]["prop3"]["ok"]),
        "lemma1_violations": tally(lambda d: not d["checks"]["lemma1"]["ok"]),
        "max_main_ratio": num(max(ratios, default=0)),
        "ok": all(d["ok"] for d in docs),
    }
    return {
        "schema_version": SCHEMA_VERSION,
        "suite": list(suite_specs),
        "instances": docs,
        "summary": summary,
    }


def dumps(doc):
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def load_schema():
    text = resources.files("intvert").joinpath("report.schema.json").read_text(encoding="utf-8")
    return json.loads(text)
