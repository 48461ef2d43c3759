"""Plain-data reports for the command line (JSON, TSV and text renderings).

Reports are nested dicts of JSON-native values, so ``dumps(loads(s)) == s``
for any ``s`` produced by :func:`dumps`.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from .bounds import BoundsVerdict, CurveSummary
from .contact import DualInvariants, FlexTable, KajiReport
from .curves import PlaneCurve, ZeroSet, level
from .galois import GaloisSurvey, PointRecord

SCHEMA = 1

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INCOMPLETE = 3
EXIT_GENUS = 4
EXIT_ALARM = 5


@dataclass(frozen=True)
class RunConfig:
    command: str
    source: dict  # {"family": name, params...} or {"file": path}
    k_max: int = 4
    search_k: int = 2
    trials: int = 7
    seed: int = 0
    format: str = "json"
    verbosity: int = 0
    jobs: int = 1

    def as_dict(self) -> dict:
        return asdict(self)


def _field_name(F) -> str:
    return "GF(%d)" % F.p if F.k == 1 else "GF(%d^%d)" % (F.p, F.k)


def _point(P, K) -> dict:
    return {"coords": P.format(), "field": _field_name(P.field), "level": level(P, K)}


def curve_block(C: PlaneCurve, g: int | None, M: int | None) -> dict:
    K = C.field
    return {"label": C.label, "equation": C.form.format(), "model": C.model,
            "d": C.degree, "p": K.p, "k": K.k, "g": g, "M": M}


def singular_block(C: PlaneCurve, sing: ZeroSet) -> dict:
    K = C.field
    pts = [dict(_point(P, K), multiplicity=m) for P, m in sing.points]
    return {"points": pts, "complete": sing.complete}


def _record_block(r: PointRecord, K) -> dict:
    out = dict(_point(r.point, K), smooth=r.smooth, verdict=r.verdict,
               group_order=r.group_order, structure=r.structure, reason=r.reason)
    f = r.filter
    if f is not None and f.witness is not None:
        w = f.witness
        out["witness"] = {"line": w.line.format() if w.line is not None else w.description,
                          "indices": list(w.indices)}
    return out


def survey_block(S: GaloisSurvey) -> dict:
    K = S.curve.field
    return {"delta": S.delta, "delta_s": S.delta_s, "complete": S.complete,
            "points": [_record_block(r, K) for r in S.records]}


def flex_block(T: FlexTable) -> dict:
    K = T.entries[0].branch.curve.field if T.entries else None
    rows = [dict(_point(e.branch.center, K), nu=e.nu, weight=e.weight) for e in T.entries]
    return {"M": T.M, "sv_sum": T.sv_sum, "bound": T.bound, "complete": T.complete, "flexes": rows}


def dual_block(D: DualInvariants | None, kaji: KajiReport | None) -> dict | None:
    if D is None:
        return None
    out = {"q": D.q_gamma, "s": D.s_gamma, "d_star": D.d_star, "immersed": D.immersed,
           "plucker": {"lhs": D.plucker_lhs, "rhs": D.plucker_rhs, "equality": D.equality},
           "notes": list(D.notes)}
    if kaji is not None:
        out["dual_genus"] = {"genus": kaji.genus, "dual_genus": kaji.dual_genus,
                             "status": kaji.status, "reason": kaji.reason}
    return out


def bounds_block(V: BoundsVerdict) -> list[dict]:
    return [r.as_dict() for r in V.records]


def classification_block(V: BoundsVerdict) -> dict | None:
    c = V.classification
    if c is None:
        return None
    W = c.field
    matrix = None if c.matrix is None else [[W.format(x) for x in row] for row in c.matrix]
    return {"kind": c.kind, "matrix": matrix, "field": None if W is None else _field_name(W),
            "attempts": c.attempts, "reason": c.reason}


def summary_completeness(s: CurveSummary) -> dict:
    return {"genus": s.genus_method != "undetermined", "contact_sample": s.contact.sample_size,
            "flexes": s.flex_complete, "survey": s.survey_complete}


def assemble(config: RunConfig, curve: dict, *, survey=None, bounds=(), completeness=None,
             **extra) -> dict:
    out = {"schema": SCHEMA, "config": config.as_dict(), "curve": curve, "survey": survey,
           "bounds": list(bounds), "completeness": completeness or {}}
    out.update(extra)
    return out


# ---------------------------------------------------------------------------
# renderings


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> dict:
    return json.loads(text)


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k in sorted(obj):
            yield from _flatten(obj[k], "%s.%s" % (prefix, k) if prefix else k)
    elif isinstance(obj, list) and obj and any(isinstance(x, (dict, list)) for x in obj):
        for i, x in enumerate(obj):
            yield from _flatten(x, "%s[%d]" % (prefix, i))
    else:
        yield prefix, json.dumps(obj, ensure_ascii=False)


def to_tsv(report: dict) -> str:
    return "".join("%s\t%s\n" % kv for kv in _flatten(report))


def to_text(report: dict) -> str:
    c = report["curve"]
    lines = ["%s: d=%s p=%s k=%s g=%s M=%s" % (c["label"] or c["equation"], c["d"], c["p"],
                                               c["k"], c["g"], c["M"])]
    sing = report.get("singular")
    if sing is not None:
        lines.append("singular points: %d%s" % (len(sing["points"]),
                                                "" if sing["complete"] else " (incomplete)"))
        lines += ["  %s m=%d" % (p["coords"], p["multiplicity"]) for p in sing["points"]]
    dual = report.get("dual")
    if dual is not None:
        pl = dual["plucker"]
        lines.append("dual: q=%s s=%s d*=%s; s*q*d* = %s vs 2g-2+2d = %s"
                     % (dual["q"], dual["s"], dual["d_star"], pl["lhs"], pl["rhs"]))
        if "dual_genus" in dual:
            lines.append("dual genus check: %s" % dual["dual_genus"]["status"])
    flex = report.get("flexes")
    if flex is not None:
        lines.append("flexes: %d, weighted sum %d <= %d%s"
                     % (len(flex["flexes"]), flex["sv_sum"], flex["bound"],
                        "" if flex["complete"] else " (incomplete)"))
    s = report.get("survey")
    if s is not None:
        lines.append("Galois points: delta=%d delta_s=%d%s"
                     % (s["delta"], s["delta_s"], "" if s["complete"] else " (incomplete)"))
        lines += ["  %s [%s] order %s" % (p["coords"], "smooth" if p["smooth"] else "singular",
                                          p["group_order"])
                  for p in s["points"] if p["verdict"] == "galois"]
    for r in report.get("bounds", []):
        rel = "=" if r["equality"] else r["relation"]
        mark = "ok" if r["holds"] else ("VIOLATED" if r["holds"] is False else "n/a")
        lines.append("%-22s %s %s %s  [%s]" % (r["name"], r["lhs"], rel, r["rhs"], mark))
    cls = report.get("classification")
    if cls is not None:
        lines.append("equality case: %s" % cls["kind"])
    return "\n".join(lines) + "\n"


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return dumps(report)
    if fmt == "tsv":
        return to_tsv(report)
    return to_text(report)
